#include "alcove/evacuation.hpp"

#include <algorithm>
#include <deque>

#include "alcove/errors.hpp"

namespace alcove {

std::vector<int> unique_increasing_head_chain(const RootSystem& rs,
                                              const LambdaChain& chain,
                                              const WeylElement& target) {
  if (!chain.special_form())
    throw NotSpecialForm("head chains require a special-form chain");
  const int head = *chain.head_len;
  const int goal = length(rs, target);

  std::vector<std::vector<int>> found;
  std::vector<int> current;
  auto search = [&](auto&& self, const WeylElement& w, int len, int start) -> void {
    if (w == target) {
      found.push_back(current);
      if (found.size() > 1)
        throw MultipleChains("head chain to target is not unique");
      return;  // extending only increases length
    }
    if (len >= goal) return;
    for (int j = start; j < head; ++j) {
      WeylElement next = w * reflection(rs, Root(chain.roots[j], 1));
      if (length(rs, next) != len + 1) continue;
      current.push_back(j);
      self(self, next, len + 1, j + 1);
      current.pop_back();
    }
  };
  search(search, WeylElement::identity(rs.rank), 0, 0);
  if (found.empty()) throw NoChain("no increasing head chain reaches the target");
  return found.front();
}

AdmissibleSubset reverse_subset(const RootSystem& rs, const LambdaChain& chain,
                                const AdmissibleSubset& J) {
  LambdaChain reversed = reverse_chain(rs, chain);
  if (!J.kappa0)
    throw NotSpecialForm("reverse_subset requires keys, hence a special-form chain");
  const int head = *chain.head_len;
  const int tail = chain.size() - head;

  WeylElement wo = longest_element(rs);
  WeylElement target = coset_min(rs, wo * J.w, chain.lambda);
  std::vector<int> positions = unique_increasing_head_chain(rs, reversed, target);
  for (int j : J.positions)
    if (j >= head) positions.push_back(head + (tail - 1) - (j - head));
  std::sort(positions.begin(), positions.end());
  return make_admissible(rs, reversed, positions);
}

Evacuator::Evacuator(const RootSystem& rs, const LambdaChain& chain)
    : rs_(rs), chain_(chain), reversed_(reverse_chain(rs, chain)) {
  ConnectOptions opts;
  opts.head_disjoint = true;
  moves_ = connect_chains(rs_, reversed_, chain_, opts);
}

AdmissibleSubset Evacuator::reverse(const AdmissibleSubset& J) const {
  return reverse_subset(rs_, chain_, J);
}

AdmissibleSubset Evacuator::evacuate(const AdmissibleSubset& J) const {
  AdmissibleSubset cur = reverse(J);
  LambdaChain chain = reversed_;
  for (const YbWindow& mv : moves_) {
    cur = yb_move(rs_, chain, mv, cur);
    chain = apply_segment_reversal(rs_, chain, mv);
  }
  return cur;
}

AdmissibleSubset evacuate(const RootSystem& rs, const LambdaChain& chain,
                          const AdmissibleSubset& J) {
  return Evacuator(rs, chain).evacuate(J);
}

Bijection evacuation_map_via_crystal(const RootSystem& rs, const LambdaChain& chain) {
  if (!chain.special_form())
    throw NotSpecialForm("the crystal-side evacuation needs a special-form chain");
  CrystalGraph g = build_graph(rs, chain);

  std::vector<int> head_positions;
  for (int j = 0; j < *chain.head_len; ++j) head_positions.push_back(j);
  int jmin = g.id_of(head_positions);
  if (jmin < 0) throw InternalInvariant("head positions do not form a graph node");

  std::vector<int> image(g.nodes.size(), -1);
  image[g.source] = jmin;
  std::deque<int> queue{g.source};
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    for (int p = 0; p < rs.rank; ++p) {
      int next = g.out_edge[at][p];
      if (next < 0) continue;
      int ps = star_involution(rs, p);
      int mapped = g.in_edge[image[at]][ps];
      if (mapped < 0)
        throw ConflictingAssignment("E_{p*} undefined where F_p is defined");
      if (image[next] == -1) {
        image[next] = mapped;
        queue.push_back(next);
      } else if (image[next] != mapped) {
        throw ConflictingAssignment("crystal-side evacuation is not well defined");
      }
    }
  }
  Bijection bij;
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    if (image[id] < 0)
      throw ConflictingAssignment("crystal-side evacuation left a node unassigned");
    bij.map[g.nodes[id].positions] = g.nodes[image[id]].positions;
  }
  return bij;
}

AdmissibleSubset evacuate_via_crystal(const RootSystem& rs, const LambdaChain& chain,
                                      const AdmissibleSubset& J) {
  Bijection bij = evacuation_map_via_crystal(rs, chain);
  auto it = bij.map.find(J.positions);
  if (it == bij.map.end()) throw NotAdmissible("subset not in the crystal node set");
  return make_admissible(rs, chain, it->second);
}

}  // namespace alcove

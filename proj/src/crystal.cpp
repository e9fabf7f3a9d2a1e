#include "alcove/crystal.hpp"

#include <algorithm>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

std::vector<int> with_replaced(const std::vector<int>& positions, int remove, int insert) {
  std::vector<int> out;
  out.reserve(positions.size() + 1);
  for (int j : positions)
    if (j != remove) out.push_back(j);
  if (insert >= 0) {
    out.insert(std::upper_bound(out.begin(), out.end(), insert), insert);
  }
  return out;
}

}  // namespace

std::optional<AdmissibleSubset> lower(const RootSystem& rs, const LambdaChain& chain,
                                      const AdmissibleSubset& J, int p) {
  SigmaSequence s = sigma_and_levels(rs, chain, J, p);
  if (s.max_level <= 0) return std::nullopt;
  // m = first position attaining the maximum, infinity if only l_inf does;
  // k = its predecessor in I(J,p) u {infinity}.
  int m_at = -1;
  for (std::size_t j = 0; j < s.levels.size(); ++j)
    if (s.levels[j] == s.max_level) { m_at = static_cast<int>(j); break; }
  int remove, insert;
  if (m_at < 0) {
    if (s.indices.empty())
      throw InternalInvariant("F_p defined but I(J,p) is empty");
    remove = -1;
    insert = s.indices.back();
  } else {
    if (m_at == 0)
      throw InternalInvariant("m_F has no predecessor in I(J,p)");
    remove = s.indices[m_at];
    insert = s.indices[m_at - 1];
  }
  if (remove >= 0 && !std::binary_search(J.positions.begin(), J.positions.end(), remove))
    throw InternalInvariant("m_F is not a folding position of J");
  if (std::binary_search(J.positions.begin(), J.positions.end(), insert))
    throw InternalInvariant("k_F is already a folding position of J");
  return make_admissible(rs, chain, with_replaced(J.positions, remove, insert));
}

std::optional<AdmissibleSubset> raise(const RootSystem& rs, const LambdaChain& chain,
                                      const AdmissibleSubset& J, int p) {
  SigmaSequence s = sigma_and_levels(rs, chain, J, p);
  if (s.max_level <= s.level_inf) return std::nullopt;
  // k = last position attaining the maximum; m = its successor, possibly
  // infinity (in which case nothing is inserted).
  int k_at = -1;
  for (std::size_t j = 0; j < s.levels.size(); ++j)
    if (s.levels[j] == s.max_level) k_at = static_cast<int>(j);
  if (k_at < 0) throw InternalInvariant("E_p defined but the maximum sits at l_inf only");
  int remove = s.indices[k_at];
  int insert = k_at + 1 < static_cast<int>(s.indices.size()) ? s.indices[k_at + 1] : -1;
  if (!std::binary_search(J.positions.begin(), J.positions.end(), remove))
    throw InternalInvariant("k_E is not a folding position of J");
  if (insert >= 0 && std::binary_search(J.positions.begin(), J.positions.end(), insert))
    throw InternalInvariant("m_E is already a folding position of J");
  return make_admissible(rs, chain, with_replaced(J.positions, remove, insert));
}

AdmissibleSubset weyl_action(const RootSystem& rs, const LambdaChain& chain,
                             const AdmissibleSubset& J, int p) {
  Int exponent = pairing(rs, J.mu, Root(rs.simple_index[p], 1));
  AdmissibleSubset cur = J;
  for (Int step = 0; step < exponent; ++step) {
    auto next = lower(rs, chain, cur, p);
    if (!next) throw InternalInvariant("weyl_action ran out of lowering operators");
    cur = std::move(*next);
  }
  for (Int step = 0; step > exponent; --step) {
    auto next = raise(rs, chain, cur, p);
    if (!next) throw InternalInvariant("weyl_action ran out of raising operators");
    cur = std::move(*next);
  }
  return cur;
}

CrystalGraph build_graph(const RootSystem& rs, const LambdaChain& chain) {
  CrystalGraph g;
  g.nodes = enumerate_admissible(rs, chain);
  for (int id = 0; id < static_cast<int>(g.nodes.size()); ++id)
    g.index[g.nodes[id].positions] = id;
  g.out_edge.assign(g.nodes.size(), std::vector<int>(rs.rank, -1));
  g.in_edge.assign(g.nodes.size(), std::vector<int>(rs.rank, -1));
  for (int id = 0; id < static_cast<int>(g.nodes.size()); ++id) {
    FoldedChain fc = fold(rs, chain, g.nodes[id].positions);
    for (int p = 0; p < rs.rank; ++p) {
      SigmaSequence s = sigma_and_levels(rs, chain, fc, g.nodes[id], p);
      if (s.max_level <= 0) continue;
      auto target = lower(rs, chain, g.nodes[id], p);
      int tid = g.id_of(target->positions);
      if (tid < 0) throw InternalInvariant("F_p left the enumerated node set");
      g.edges.push_back({id, p, tid});
      g.out_edge[id][p] = tid;
      g.in_edge[tid][p] = id;
    }
  }
  g.source = g.id_of({});
  int no_out = 0;
  for (int id = 0; id < static_cast<int>(g.nodes.size()); ++id) {
    bool any = false;
    for (int p = 0; p < rs.rank; ++p) any = any || g.out_edge[id][p] >= 0;
    if (!any) { ++no_out; g.sink = id; }
  }
  if (no_out != 1) g.sink = -1;
  return g;
}

Bijection canonical_iso(const RootSystem& rs, const CrystalGraph& a, const CrystalGraph& b) {
  if (a.nodes.size() != b.nodes.size())
    throw IsoFailure("graphs have different node counts");
  Bijection iso;
  for (const AdmissibleSubset& J : a.nodes) {
    // Raise to the source along the smallest defined color, recording colors.
    std::vector<int> colors;
    int at = a.id_of(J.positions);
    while (at != a.source) {
      int p = 0;
      while (p < rs.rank && a.in_edge[at][p] < 0) ++p;
      if (p == rs.rank) throw IsoFailure("non-source node admits no raising operator");
      colors.push_back(p);
      at = a.in_edge[at][p];
    }
    // Replay downward in the target graph.
    int image = b.source;
    for (auto it = colors.rbegin(); it != colors.rend(); ++it) {
      image = b.out_edge[image][*it];
      if (image < 0) throw IsoFailure("color string not replayable in target graph");
    }
    if (a.nodes[a.id_of(J.positions)].mu != b.nodes[image].mu)
      throw IsoFailure("canonical map does not preserve weights");
    auto [it, inserted] = iso.map.emplace(J.positions, b.nodes[image].positions);
    if (!inserted) throw IsoFailure("duplicate source node");
  }
  std::map<std::vector<int>, int> hits;
  for (const auto& [from, to] : iso.map)
    if (++hits[to] > 1) throw IsoFailure("canonical map is not injective");
  return iso;
}

std::string to_dot(const RootSystem& rs, const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  auto label = [&](int id) {
    std::ostringstream l;
    l << "{";
    const auto& pos = g.nodes[id].positions;
    for (std::size_t i = 0; i < pos.size(); ++i) l << (i ? "," : "") << pos[i];
    l << "} ";
    const Vec& mu = g.nodes[id].mu;
    l << "(";
    for (Eigen::Index i = 0; i < mu.size(); ++i) l << (i ? "," : "") << mu(i);
    l << ")";
    return l.str();
  };
  for (int id = 0; id < static_cast<int>(g.nodes.size()); ++id)
    os << "  n" << id << " [label=\"" << label(id) << "\"];\n";
  for (const auto& [from, p, to] : g.edges)
    os << "  n" << from << " -> n" << to << " [label=\"" << (p + 1) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace alcove

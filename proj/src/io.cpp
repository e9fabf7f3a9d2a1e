#include "alcove/io.hpp"

#include <algorithm>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

json chain_to_json(const RootSystem& rs, const LambdaChain& chain) {
  json roots = json::array();
  for (int idx : chain.roots) roots.push_back(to_std(rs.positive[idx].root));
  return json{{"lambda", to_std(chain.lambda)}, {"roots", roots}};
}

LambdaChain chain_from_json(const RootSystem& rs, const json& j) {
  if (!j.contains("lambda") || !j.contains("roots"))
    throw ParseError("chain JSON needs 'lambda' and 'roots'");
  Vec lambda = vec_of(j.at("lambda").get<std::vector<Int>>());
  std::map<Vec, int, VecLess> by_root;
  for (int idx = 0; idx < rs.num_positive(); ++idx) by_root[rs.positive[idx].root] = idx;
  std::vector<int> roots;
  for (const json& entry : j.at("roots")) {
    Vec coords = vec_of(entry.get<std::vector<Int>>());
    auto it = by_root.find(coords);
    if (it == by_root.end()) throw ParseError("chain entry is not a positive root of " + rs.label());
    roots.push_back(it->second);
  }
  return chain_from_roots(rs, lambda, std::move(roots));
}

json subset_to_json(const LambdaChain& chain, const std::vector<int>& positions) {
  json j{{"positions", positions}};
  if (chain.special_form()) {
    j["head_len"] = *chain.head_len;
    j["display"] = format_subset_spec(chain, positions);
  }
  return j;
}

std::vector<int> subset_from_json(const json& j) {
  return j.at("positions").get<std::vector<int>>();
}

json character_to_json(const CharacterPoly& ch) {
  json terms = json::array();
  for (const auto& [weight, mult] : ch.terms)
    terms.push_back(json{{"weight", to_std(weight)}, {"mult", mult}});
  return json{{"terms", terms}};
}

CharacterPoly character_from_json(const json& j) {
  CharacterPoly ch;
  for (const json& term : j.at("terms"))
    ch.add(vec_of(term.at("weight").get<std::vector<Int>>()), term.at("mult").get<Int>());
  return ch;
}

json graph_to_json(const RootSystem& rs, const CrystalGraph& g) {
  json nodes = json::array();
  for (const AdmissibleSubset& node : g.nodes)
    nodes.push_back(json{{"positions", node.positions}, {"weight", to_std(node.mu)}});
  json edges = json::array();
  for (const auto& [from, p, to] : g.edges)
    edges.push_back(json{{"from", g.nodes[from].positions},
                         {"color", p + 1},
                         {"to", g.nodes[to].positions}});
  return json{{"nodes", nodes}, {"edges", edges}};
}

std::vector<int> parse_subset_spec(const LambdaChain& chain, const std::string& spec) {
  if (!chain.special_form())
    throw NotSpecialForm("head:/tail: subset addressing requires a special-form chain");
  const int head = *chain.head_len;
  const int tail = chain.size() - head;
  std::vector<int> positions;
  std::stringstream parts(spec);
  std::string part;
  while (std::getline(parts, part, '+')) {
    if (part.empty()) continue;
    bool is_head = part.rfind("head:", 0) == 0;
    bool is_tail = part.rfind("tail:", 0) == 0;
    if (!is_head && !is_tail)
      throw ParseError("subset segment must start with head: or tail:");
    std::string list = part.substr(5);
    if (list.empty()) continue;
    std::stringstream items(list);
    std::string item;
    while (std::getline(items, item, ',')) {
      int v = std::stoi(item);
      int limit = is_head ? head : tail;
      if (v < 1 || v > limit)
        throw ParseError("subset index " + item + " outside the " +
                         (is_head ? std::string("head") : std::string("tail")));
      positions.push_back(is_head ? v - 1 : head + v - 1);
    }
  }
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
    throw ParseError("subset addresses a position twice");
  return positions;
}

std::string format_subset_spec(const LambdaChain& chain, const std::vector<int>& positions) {
  const int head = chain.special_form() ? *chain.head_len : 0;
  std::vector<int> hs, ts;
  for (int j : positions) (j < head ? hs : ts).push_back(j < head ? j + 1 : j - head + 1);
  std::ostringstream os;
  if (!hs.empty()) {
    os << "head:";
    for (std::size_t i = 0; i < hs.size(); ++i) os << (i ? "," : "") << hs[i];
  }
  if (!ts.empty()) {
    if (!hs.empty()) os << "+";
    os << "tail:";
    for (std::size_t i = 0; i < ts.size(); ++i) os << (i ? "," : "") << ts[i];
  }
  if (hs.empty() && ts.empty()) os << "empty";
  return os.str();
}

}  // namespace alcove

#ifndef ALCOVE_CRYSTAL_HPP
#define ALCOVE_CRYSTAL_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alcove/admissible.hpp"

namespace alcove {

// Lowering operator F_p; defined iff M(J,p) > 0.
std::optional<AdmissibleSubset> lower(const RootSystem& rs, const LambdaChain& chain,
                                      const AdmissibleSubset& J, int p);

// Raising operator E_p; defined iff M(J,p) > <mu(J), alpha_p^vee>.
std::optional<AdmissibleSubset> raise(const RootSystem& rs, const LambdaChain& chain,
                                      const AdmissibleSubset& J, int p);

// s_p(J) = F_p^{<mu(J), alpha_p^vee>}(J); negative exponents raise.
AdmissibleSubset weyl_action(const RootSystem& rs, const LambdaChain& chain,
                             const AdmissibleSubset& J, int p);

struct CrystalGraph {
  std::vector<AdmissibleSubset> nodes;              // enumeration order
  std::map<std::vector<int>, int> index;            // position set -> node id
  std::vector<std::array<int, 3>> edges;            // (source, color, target)
  std::vector<std::vector<int>> out_edge;           // node -> color -> edge target (-1)
  std::vector<std::vector<int>> in_edge;            // node -> color -> edge source (-1)
  int source = -1;                                  // the empty subset
  int sink = -1;                                    // unique node without F_p, if unique

  int id_of(const std::vector<int>& positions) const {
    auto it = index.find(positions);
    return it == index.end() ? -1 : it->second;
  }
};

CrystalGraph build_graph(const RootSystem& rs, const LambdaChain& chain);

// Color- and weight-preserving bijection between two node sets, stored by
// position sets.
struct Bijection {
  std::map<std::vector<int>, std::vector<int>> map;
  bool operator==(const Bijection& o) const { return map == o.map; }
};

// The unique isomorphism of directed colored graphs, computed by raising each
// node to the source along smallest colors and replaying the reversed color
// string in the target graph.
Bijection canonical_iso(const RootSystem& rs, const CrystalGraph& a, const CrystalGraph& b);

std::string to_dot(const RootSystem& rs, const CrystalGraph& g);

}  // namespace alcove

#endif

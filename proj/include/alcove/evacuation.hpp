#ifndef ALCOVE_EVACUATION_HPP
#define ALCOVE_EVACUATION_HPP

#include <vector>

#include "alcove/admissible.hpp"
#include "alcove/chains.hpp"
#include "alcove/crystal.hpp"
#include "alcove/ybmoves.hpp"

namespace alcove {

// The unique subset of head positions whose reflections climb from the
// identity to `target`; both existence failures abort loudly.
std::vector<int> unique_increasing_head_chain(const RootSystem& rs,
                                              const LambdaChain& chain,
                                              const WeylElement& target);

// J -> J^rev in A(reverse_chain(chain)): head part from the unique chain to
// floor(w_o kappa_1(J)), tail part reflected through the middle.
AdmissibleSubset reverse_subset(const RootSystem& rs, const LambdaChain& chain,
                                const AdmissibleSubset& J);

// Shared state for evacuating many subsets of one chain: the reversed chain
// and the head-disjoint move sequence back to the original chain.
class Evacuator {
 public:
  Evacuator(const RootSystem& rs, const LambdaChain& chain);

  const LambdaChain& chain() const { return chain_; }
  const LambdaChain& reversed_chain() const { return reversed_; }
  const std::vector<YbWindow>& moves() const { return moves_; }

  AdmissibleSubset reverse(const AdmissibleSubset& J) const;
  AdmissibleSubset evacuate(const AdmissibleSubset& J) const;

 private:
  const RootSystem& rs_;
  LambdaChain chain_;
  LambdaChain reversed_;
  std::vector<YbWindow> moves_;
};

AdmissibleSubset evacuate(const RootSystem& rs, const LambdaChain& chain,
                          const AdmissibleSubset& J);

// Oracle: propagate eta(F_p(J)) = E_{p*}(eta(J)) from eta(empty) = J_min over
// the crystal graph; total and single-valued by uniqueness of the involution.
Bijection evacuation_map_via_crystal(const RootSystem& rs, const LambdaChain& chain);
AdmissibleSubset evacuate_via_crystal(const RootSystem& rs, const LambdaChain& chain,
                                      const AdmissibleSubset& J);

}  // namespace alcove

#endif

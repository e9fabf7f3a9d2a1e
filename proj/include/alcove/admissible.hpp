#ifndef ALCOVE_ADMISSIBLE_HPP
#define ALCOVE_ADMISSIBLE_HPP

#include <optional>
#include <vector>

#include "alcove/chains.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/types.hpp"

namespace alcove {

// Position set J whose reflections climb a saturated Bruhat chain, with the
// derived data cached. Positions are 0-based and strictly increasing.
struct AdmissibleSubset {
  std::vector<int> positions;
  Vec mu;                                  // weight mu(J)
  WeylElement w;                           // w(J) = kappa_1(J)
  std::optional<WeylElement> kappa0;       // set when the chain is special form

  bool operator==(const AdmissibleSubset& o) const { return positions == o.positions; }
};

bool is_admissible(const RootSystem& rs, const LambdaChain& chain,
                   const std::vector<int>& positions);

// Builds the cached view; throws NotAdmissible if the chain condition fails.
AdmissibleSubset make_admissible(const RootSystem& rs, const LambdaChain& chain,
                                 const std::vector<int>& positions);

// All admissible subsets, in lexicographic order of their position sets.
std::vector<AdmissibleSubset> enumerate_admissible(const RootSystem& rs,
                                                   const LambdaChain& chain);

Vec weight_of(const RootSystem& rs, const LambdaChain& chain,
              const std::vector<int>& positions);

// (kappa_0, kappa_1); requires a special-form chain.
std::pair<WeylElement, WeylElement> keys_of(const RootSystem& rs,
                                            const LambdaChain& chain,
                                            const std::vector<int>& positions);

// Chain of root pairs (gamma_i, gamma_i') with gamma_i' = +-gamma_i, plus the
// final weight gamma_inf. Folding at J gives gamma_i' = -gamma_i exactly at
// the positions of J.
struct FoldedChain {
  std::vector<Root> gamma;
  std::vector<Root> gamma_prime;
  Vec gamma_inf;
};

FoldedChain fold(const RootSystem& rs, const LambdaChain& chain,
                 const std::vector<int>& positions);

// Single folding operator phi_i; an involution on folded chains.
FoldedChain fold_operator(const RootSystem& rs, const FoldedChain& fc, int i);

// Sign bookkeeping along the folded chain for one simple root, and the level
// sequence it encodes.
struct SigmaSequence {
  std::vector<int> indices;                     // I(J,p), 0-based positions
  std::vector<std::pair<int, int>> sigma;       // sign pairs, one per index
  int final_sign = 1;                           // sgn <gamma_inf, alpha_p^vee>
  std::vector<Int> levels;                      // l_i for i in I(J,p)
  Int level_inf = 0;                            // l_inf^p = <mu(J), alpha_p^vee>
  Int max_level = 0;                            // M(J,p)
};

// The level scan: start at -1/2 and step by half the sign for every entry of
// the flattened sign sequence; levels are the values after each odd step.
std::pair<std::vector<Int>, Int> scan_levels(const std::vector<std::pair<int, int>>& sigma,
                                             int final_sign);

SigmaSequence sigma_and_levels(const RootSystem& rs, const LambdaChain& chain,
                               const AdmissibleSubset& J, int p);
SigmaSequence sigma_and_levels(const RootSystem& rs, const LambdaChain& chain,
                               const FoldedChain& fc, const AdmissibleSubset& J, int p);

}  // namespace alcove

#endif

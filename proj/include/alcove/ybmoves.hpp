#ifndef ALCOVE_YBMOVES_HPP
#define ALCOVE_YBMOVES_HPP

#include <vector>

#include "alcove/admissible.hpp"
#include "alcove/chains.hpp"
#include "alcove/crystal.hpp"
#include "alcove/rootsys.hpp"

namespace alcove {

// A dihedral reflection subgroup spanned by two roots, together with the
// reflection ordering beta_1 = alpha, beta_2 = s_alpha(beta), ..., beta_q = beta
// and the full element table of the subgroup.
struct DihedralContext {
  Root alpha;
  Root beta;
  int q = 0;
  std::vector<Root> order;  // the reflection ordering, as ambient roots

  struct Element {
    WeylElement w;
    int len = 0;            // dihedral length
    bool desc_alpha = false;  // some reduced word ends with s_alpha
    bool desc_beta = false;
  };
  std::vector<Element> elements;  // all 2q elements

  const Element& lookup(const WeylElement& w) const;
};

DihedralContext make_dihedral_context(const RootSystem& rs, Root alpha, Root beta);

// w = floor(w) wbar with floor(w) minimal in w Wbar; returns the dihedral part
// as a table entry reference plus the minimal representative.
struct CosetSplit {
  WeylElement floor;
  int len = 0;          // dihedral length of wbar
  bool desc_alpha = false;
  bool desc_beta = false;
  std::vector<int> word;  // alternating word for wbar: 0 = s_alpha, 1 = s_beta
};

CosetSplit dihedral_coset_split(const RootSystem& rs, const DihedralContext& ctx,
                                const WeylElement& w);

// J(ubar, wbar): the label set of the unique increasing saturated chain from
// ubar to wbar inside the reflection ordering. 1-based within [q].
std::vector<int> dihedral_chain_subset(const DihedralContext& ctx, const CosetSplit& ubar,
                                       const CosetSplit& wbar);

// The local involution: maps J(ubar,wbar) for the ordering to the subset for
// the reversed ordering. 1-based within [q].
std::vector<int> yb_local_involution(int q, int a, int b, const std::vector<int>& subset);

// The Yang-Baxter move A(chain) -> A(reversed chain) for one window.
AdmissibleSubset yb_move(const RootSystem& rs, const LambdaChain& chain,
                         const YbWindow& window, const AdmissibleSubset& J);

// Oracle: exhaustive search over the <= 2^q window subsets for the unique
// admissible completion with the same Weyl elements.
AdmissibleSubset yb_move_search(const RootSystem& rs, const LambdaChain& chain,
                                const YbWindow& window, const AdmissibleSubset& J);

// Composition of yb_move along a connect_chains move sequence.
Bijection composed_bijection(const RootSystem& rs, const LambdaChain& from,
                             const LambdaChain& to, const ConnectOptions& opts = {});
Bijection composed_bijection_along(const RootSystem& rs, const LambdaChain& from,
                                   const std::vector<YbWindow>& moves);

}  // namespace alcove

#endif

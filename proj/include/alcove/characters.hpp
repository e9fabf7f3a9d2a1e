#ifndef ALCOVE_CHARACTERS_HPP
#define ALCOVE_CHARACTERS_HPP

#include <map>
#include <utility>

#include "alcove/admissible.hpp"
#include "alcove/chains.hpp"
#include "alcove/rootsys.hpp"

namespace alcove {

// Formal Z-linear combination of exponents e^mu, keyed by weight coordinates.
struct CharacterPoly {
  std::map<Vec, Int, VecLess> terms;

  void add(const Vec& weight, Int mult = 1) {
    auto it = terms.emplace(weight, 0).first;
    it->second += mult;
    if (it->second == 0) terms.erase(it);
  }
  Int mass() const {
    Int total = 0;
    for (const auto& [w, m] : terms) total += m;
    return total;
  }
  Int multiplicity(const Vec& weight) const {
    auto it = terms.find(weight);
    return it == terms.end() ? 0 : it->second;
  }
  bool operator==(const CharacterPoly& o) const { return terms == o.terms; }
};

// ch(V_lambda) = sum over admissible subsets of e^{mu(J)}.
CharacterPoly character(const RootSystem& rs, const LambdaChain& chain);

// Demazure character via decreasing saturated chains from u.
CharacterPoly demazure_decreasing(const RootSystem& rs, const LambdaChain& chain,
                                  const WeylElement& u);

// Demazure character as the Bruhat filter { J : w(J) <= u }.
CharacterPoly demazure_filtered(const RootSystem& rs, const LambdaChain& chain,
                                const WeylElement& u);

// Independent oracle: Demazure operators applied along the lexicographically
// smallest reduced word of u.
CharacterPoly demazure_oracle(const RootSystem& rs, const Vec& lambda,
                              const WeylElement& u);
CharacterPoly demazure_operator(const RootSystem& rs, int p, const CharacterPoly& f);
std::vector<int> lex_reduced_word(const RootSystem& rs, const WeylElement& u);

// Independent oracle: product formula for dim V_lambda.
Int weyl_dim_oracle(const RootSystem& rs, const Vec& lambda);

// Element of Z[Lambda/h] (x) Z[W]: finite map from (h-scaled weight, Weyl
// matrix) to an integer coefficient.
struct KAlgebraElement {
  struct KeyLess {
    bool operator()(const std::pair<Vec, Mat>& a, const std::pair<Vec, Mat>& b) const {
      if (VecLess{}(a.first, b.first)) return true;
      if (VecLess{}(b.first, a.first)) return false;
      return MatLess{}(a.second, b.second);
    }
  };
  std::map<std::pair<Vec, Mat>, Int, KeyLess> terms;

  static KAlgebraElement one(const RootSystem& rs);
  void add(const Vec& numerator, const Mat& w, Int coeff);
  bool operator==(const KAlgebraElement& o) const;
};

// X^lambda: w -> e^{w(lambda/h)} w; lambda in integer weight coordinates.
KAlgebraElement apply_X(const RootSystem& rs, const Vec& lambda, const KAlgebraElement& v);
// B_alpha: w -> w s_alpha when that covers w, else 0; B_{-alpha} = -B_alpha.
KAlgebraElement apply_B(const RootSystem& rs, Root alpha, const KAlgebraElement& v);
// R_alpha = X^rho (X^alpha + B_alpha) X^{-rho}.
KAlgebraElement apply_R(const RootSystem& rs, Root alpha, const KAlgebraElement& v);

// Checks R_{beta_n} ... R_{beta_1}(1) = sum_J e^{mu(J)} w(J) exactly.
bool r_operator_check(const RootSystem& rs, const LambdaChain& chain);

}  // namespace alcove

#endif

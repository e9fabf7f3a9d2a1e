#include "alcove/characters.hpp"

#include <algorithm>
#include <numeric>

#include "alcove/errors.hpp"

namespace alcove {

CharacterPoly character(const RootSystem& rs, const LambdaChain& chain) {
  CharacterPoly out;
  for (const AdmissibleSubset& J : enumerate_admissible(rs, chain)) out.add(J.mu);
  return out;
}

CharacterPoly demazure_decreasing(const RootSystem& rs, const LambdaChain& chain,
                                  const WeylElement& u) {
  CharacterPoly out;
  std::map<Mat, std::vector<char>, MatLess> cocovers;
  auto cocovers_of = [&](const WeylElement& w) -> const std::vector<char>& {
    auto it = cocovers.find(w.m);
    if (it == cocovers.end()) it = cocovers.emplace(w.m, cocover_mask(rs, w)).first;
    return it->second;
  };

  // Depth-first over subsets J with u > u r_{j_1} > ... decreasing; the term
  // weight is -u(T(-lambda)) for the running affine composition T.
  struct Frame {
    int start;
    WeylElement w;      // u r_{j_1} ... r_{j_s}
    Mat lin;            // linear part of T
    Vec trans;          // translation part of T
  };
  std::vector<Frame> stack;
  stack.push_back({0, u, Mat::Identity(rs.rank, rs.rank), Vec::Zero(rs.rank)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    out.add(-(u.m * (f.lin * Vec(-chain.lambda) + f.trans)));
    for (int j = f.start; j < chain.size(); ++j) {
      Root beta(chain.roots[j], 1);
      if (!cocovers_of(f.w)[beta.index]) continue;
      Frame child;
      child.start = j + 1;
      child.w = f.w * reflection(rs, beta);
      child.lin = f.lin * reflection(rs, beta).m;
      child.trans = f.trans - chain.levels0[j] * (f.lin * rs.weight_of(beta));
      stack.push_back(std::move(child));
    }
  }
  return out;
}

CharacterPoly demazure_filtered(const RootSystem& rs, const LambdaChain& chain,
                                const WeylElement& u) {
  CharacterPoly out;
  std::map<Mat, bool, MatLess> below;
  for (const AdmissibleSubset& J : enumerate_admissible(rs, chain)) {
    auto it = below.find(J.w.m);
    if (it == below.end()) it = below.emplace(J.w.m, bruhat_leq(rs, J.w, u)).first;
    if (it->second) out.add(J.mu);
  }
  return out;
}

std::vector<int> lex_reduced_word(const RootSystem& rs, const WeylElement& u) {
  std::vector<int> word;
  WeylElement v = u;
  int len = length(rs, v);
  while (len > 0) {
    int chosen = -1;
    for (int p = 0; p < rs.rank && chosen < 0; ++p) {
      // s_p v shorter iff v^{-1}(alpha_p) < 0.
      if (apply_to_root(rs, v.inverse(), Root(rs.simple_index[p], 1)).sign < 0) chosen = p;
    }
    if (chosen < 0) throw InternalInvariant("no left descent on a non-identity element");
    word.push_back(chosen);
    v = simple_reflection(rs, chosen) * v;
    --len;
  }
  return word;
}

CharacterPoly demazure_operator(const RootSystem& rs, int p, const CharacterPoly& f) {
  CharacterPoly out;
  const Vec alpha = rs.weight_of(Root(rs.simple_index[p], 1));
  for (const auto& [mu, mult] : f.terms) {
    Int m = pairing(rs, mu, Root(rs.simple_index[p], 1));
    if (m >= 0) {
      for (Int j = 0; j <= m; ++j) out.add(mu - j * alpha, mult);
    } else if (m <= -2) {
      for (Int j = 1; j <= -m - 1; ++j) out.add(mu + j * alpha, -mult);
    }  // m == -1 contributes nothing
  }
  return out;
}

CharacterPoly demazure_oracle(const RootSystem& rs, const Vec& lambda,
                              const WeylElement& u) {
  if (!is_dominant(lambda)) throw NonDominant("Demazure oracle requires dominant lambda");
  CharacterPoly f;
  f.add(lambda);
  std::vector<int> word = lex_reduced_word(rs, u);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = demazure_operator(rs, *it, f);
  return f;
}

Int weyl_dim_oracle(const RootSystem& rs, const Vec& lambda) {
  if (!is_dominant(lambda)) throw NonDominant("dimension oracle requires dominant lambda");
  Vec shifted = lambda + rs.rho();
  Int num = 1, den = 1;
  for (const auto& entry : rs.positive) {
    num *= entry.coroot.dot(shifted);
    den *= entry.coroot.sum();
    Int g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw InternalInvariant("Weyl dimension product is not integral");
  return num;
}

namespace {

int mat_length(const RootSystem& rs, const Mat& m) {
  int inv = 0;
  for (const auto& entry : rs.positive)
    if (rs.root_from_weight(Vec(m * entry.weight)).sign < 0) ++inv;
  return inv;
}

}  // namespace

KAlgebraElement KAlgebraElement::one(const RootSystem& rs) {
  KAlgebraElement e;
  e.add(Vec::Zero(rs.rank), Mat::Identity(rs.rank, rs.rank), 1);
  return e;
}

void KAlgebraElement::add(const Vec& numerator, const Mat& w, Int coeff) {
  if (coeff == 0) return;
  auto it = terms.emplace(std::make_pair(numerator, w), 0).first;
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

bool KAlgebraElement::operator==(const KAlgebraElement& o) const {
  if (terms.size() != o.terms.size()) return false;
  auto it = terms.begin();
  auto jt = o.terms.begin();
  for (; it != terms.end(); ++it, ++jt) {
    if (it->second != jt->second || it->first.first != jt->first.first ||
        it->first.second != jt->first.second)
      return false;
  }
  return true;
}

KAlgebraElement apply_X(const RootSystem& rs, const Vec& lambda, const KAlgebraElement& v) {
  KAlgebraElement out;
  for (const auto& [key, coeff] : v.terms)
    out.add(key.first + key.second * lambda, key.second, coeff);
  return out;
}

KAlgebraElement apply_B(const RootSystem& rs, Root alpha, const KAlgebraElement& v) {
  KAlgebraElement out;
  const Mat s = reflection(rs, Root(alpha.index, 1)).m;
  const Int sign = alpha.sign;
  for (const auto& [key, coeff] : v.terms) {
    Mat ws = key.second * s;
    if (mat_length(rs, ws) == mat_length(rs, key.second) + 1)
      out.add(key.first, ws, sign * coeff);
  }
  return out;
}

KAlgebraElement apply_R(const RootSystem& rs, Root alpha, const KAlgebraElement& v) {
  const Vec rho = rs.rho();
  KAlgebraElement inner = apply_X(rs, Vec(-rho), v);
  KAlgebraElement x_part = apply_X(rs, rs.signed_weight(alpha), inner);
  KAlgebraElement b_part = apply_B(rs, alpha, inner);
  for (const auto& [key, coeff] : b_part.terms) x_part.add(key.first, key.second, coeff);
  return apply_X(rs, rho, x_part);
}

bool r_operator_check(const RootSystem& rs, const LambdaChain& chain) {
  KAlgebraElement lhs = KAlgebraElement::one(rs);
  for (int i = 0; i < chain.size(); ++i)
    lhs = apply_R(rs, Root(chain.roots[i], 1), lhs);

  KAlgebraElement rhs;
  const Int h = rs.coxeter;
  for (const AdmissibleSubset& J : enumerate_admissible(rs, chain))
    rhs.add(Vec(h * J.mu), J.w.m, 1);
  return lhs == rhs;
}

}  // namespace alcove

#include "alcove/admissible.hpp"

#include <algorithm>
#include <map>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

void check_positions(const LambdaChain& chain, const std::vector<int>& positions) {
  int prev = -1;
  for (int j : positions) {
    if (j <= prev || j >= chain.size())
      throw ParseError("positions must be strictly increasing and within the chain");
    prev = j;
  }
}

WeylElement head_key(const RootSystem& rs, const LambdaChain& chain,
                     const std::vector<int>& positions) {
  WeylElement k0 = WeylElement::identity(rs.rank);
  for (int j : positions) {
    if (j >= *chain.head_len) break;
    k0 = k0 * reflection(rs, Root(chain.roots[j], 1));
  }
  return k0;
}

}  // namespace

bool is_admissible(const RootSystem& rs, const LambdaChain& chain,
                   const std::vector<int>& positions) {
  check_positions(chain, positions);
  WeylElement w = WeylElement::identity(rs.rank);
  int len = 0;
  for (int j : positions) {
    w = w * reflection(rs, Root(chain.roots[j], 1));
    if (length(rs, w) != ++len) return false;
  }
  return true;
}

AdmissibleSubset make_admissible(const RootSystem& rs, const LambdaChain& chain,
                                 const std::vector<int>& positions) {
  if (!is_admissible(rs, chain, positions))
    throw NotAdmissible("position set is not admissible");
  AdmissibleSubset J;
  J.positions = positions;
  J.mu = weight_of(rs, chain, positions);
  J.w = WeylElement::identity(rs.rank);
  for (int j : positions) J.w = J.w * reflection(rs, Root(chain.roots[j], 1));
  if (chain.special_form()) J.kappa0 = head_key(rs, chain, positions);
  return J;
}

std::vector<AdmissibleSubset> enumerate_admissible(const RootSystem& rs,
                                                   const LambdaChain& chain) {
  std::vector<AdmissibleSubset> out;
  std::map<Mat, std::vector<char>, MatLess> covers;
  auto covers_of = [&](const WeylElement& w) -> const std::vector<char>& {
    auto it = covers.find(w.m);
    if (it == covers.end()) it = covers.emplace(w.m, cover_mask(rs, w)).first;
    return it->second;
  };

  // Depth-first extension by Bruhat covers; affine composition carried along:
  // mu(J) = M lambda - t for the running product of hat reflections.
  struct Frame {
    std::vector<int> positions;
    WeylElement w;
    Vec trans;
  };
  const bool special = chain.special_form();
  auto emit = [&](const Frame& f) {
    AdmissibleSubset J;
    J.positions = f.positions;
    J.w = f.w;
    J.mu = f.w.m * chain.lambda - f.trans;
    if (special) J.kappa0 = head_key(rs, chain, f.positions);
    out.push_back(std::move(J));
  };

  std::vector<Frame> stack;
  stack.push_back({{}, WeylElement::identity(rs.rank), Vec::Zero(rs.rank)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    emit(f);
    int start = f.positions.empty() ? 0 : f.positions.back() + 1;
    // Children pushed in reverse so the stack pops them in increasing order,
    // giving lexicographic output order.
    for (int j = chain.size() - 1; j >= start; --j) {
      if (!covers_of(f.w)[chain.roots[j]]) continue;
      Frame child;
      child.positions = f.positions;
      child.positions.push_back(j);
      Root beta(chain.roots[j], 1);
      child.w = f.w * reflection(rs, beta);
      child.trans = f.trans - chain.levels0[j] * (f.w.m * rs.weight_of(beta));
      stack.push_back(std::move(child));
    }
  }
  return out;
}

Vec weight_of(const RootSystem& rs, const LambdaChain& chain,
              const std::vector<int>& positions) {
  check_positions(chain, positions);
  // mu(J) = -hat r_{j_1} ... hat r_{j_s}(-lambda), innermost reflection last.
  Vec v = -chain.lambda;
  for (auto it = positions.rbegin(); it != positions.rend(); ++it)
    v = affine_reflect(rs, v, chain.hat(*it));
  return -v;
}

std::pair<WeylElement, WeylElement> keys_of(const RootSystem& rs,
                                            const LambdaChain& chain,
                                            const std::vector<int>& positions) {
  if (!chain.special_form())
    throw NotSpecialForm("keys are only defined for special-form chains");
  check_positions(chain, positions);
  WeylElement k0 = head_key(rs, chain, positions);
  WeylElement k1 = WeylElement::identity(rs.rank);
  for (int j : positions) k1 = k1 * reflection(rs, Root(chain.roots[j], 1));
  return {k0, k1};
}

FoldedChain fold(const RootSystem& rs, const LambdaChain& chain,
                 const std::vector<int>& positions) {
  check_positions(chain, positions);
  FoldedChain fc;
  fc.gamma.reserve(chain.size());
  fc.gamma_prime.reserve(chain.size());
  WeylElement w = WeylElement::identity(rs.rank);
  std::size_t next = 0;
  for (int i = 0; i < chain.size(); ++i) {
    Root beta(chain.roots[i], 1);
    Root g = apply_to_root(rs, w, beta);
    fc.gamma.push_back(g);
    if (next < positions.size() && positions[next] == i) {
      ++next;
      w = w * reflection(rs, beta);
      fc.gamma_prime.push_back(g.negated());
    } else {
      fc.gamma_prime.push_back(g);
    }
  }
  fc.gamma_inf = w.m * rs.rho();
  return fc;
}

FoldedChain fold_operator(const RootSystem& rs, const FoldedChain& fc, int i) {
  FoldedChain out = fc;
  WeylElement t = reflection(rs, fc.gamma[i]);
  out.gamma_prime[i] = apply_to_root(rs, t, fc.gamma_prime[i]);
  for (std::size_t j = i + 1; j < fc.gamma.size(); ++j) {
    out.gamma[j] = apply_to_root(rs, t, fc.gamma[j]);
    out.gamma_prime[j] = apply_to_root(rs, t, fc.gamma_prime[j]);
  }
  out.gamma_inf = t.m * fc.gamma_inf;
  return out;
}

std::pair<std::vector<Int>, Int> scan_levels(const std::vector<std::pair<int, int>>& sigma,
                                             int final_sign) {
  // Work in doubled units so that g(0) = -1/2 becomes -1.
  std::vector<Int> levels;
  levels.reserve(sigma.size());
  Int g = -1;
  for (const auto& [first, second] : sigma) {
    g += first;
    if (g % 2 != 0) throw InternalInvariant("level scan left the integer grid");
    levels.push_back(g / 2);
    g += second;
  }
  g += final_sign;
  if (g % 2 != 0) throw InternalInvariant("level scan left the integer grid");
  return {std::move(levels), g / 2};
}

SigmaSequence sigma_and_levels(const RootSystem& rs, const LambdaChain& chain,
                               const AdmissibleSubset& J, int p) {
  return sigma_and_levels(rs, chain, fold(rs, chain, J.positions), J, p);
}

SigmaSequence sigma_and_levels(const RootSystem& rs, const LambdaChain& chain,
                               const FoldedChain& fc, const AdmissibleSubset& J, int p) {
  SigmaSequence s;
  int simple = rs.simple_index[p];
  for (int i = 0; i < chain.size(); ++i) {
    if (fc.gamma[i].index != simple) continue;
    s.indices.push_back(i);
    s.sigma.emplace_back(fc.gamma[i].sign, fc.gamma_prime[i].sign);
  }
  Int inf_pair = pairing(rs, fc.gamma_inf, Root(simple, 1));
  if (inf_pair == 0) throw InternalInvariant("gamma_inf pairs to zero against a simple coroot");
  s.final_sign = inf_pair > 0 ? 1 : -1;

  for (std::size_t j = 0; j < s.sigma.size(); ++j) {
    // (S1): no (-1, 1); (S2): after (1,1), or at the start, the next sign is +1.
    const auto& [a, b] = s.sigma[j];
    if (a == -1 && b == 1)
      throw AdmissibilityViolated("sign pair (-1,1) in Sigma(J,p)");
    bool boundary = j == 0 || s.sigma[j - 1] == std::pair<int, int>{1, 1};
    if (boundary && a != 1)
      throw AdmissibilityViolated("Sigma(J,p) violates (S2)");
  }
  if ((s.sigma.empty() || s.sigma.back() == std::pair<int, int>{1, 1}) && s.final_sign != 1)
    throw AdmissibilityViolated("Sigma(J,p) violates (S2) at the final sign");

  auto [levels, level_inf] = scan_levels(s.sigma, s.final_sign);
  s.levels = std::move(levels);
  s.level_inf = level_inf;
  if (s.level_inf != pairing(rs, J.mu, Root(simple, 1)))
    throw InternalInvariant("level scan disagrees with <mu(J), alpha_p^vee>");
  s.max_level = s.level_inf;
  for (Int l : s.levels) s.max_level = std::max(s.max_level, l);
  if (s.max_level < 0) throw AdmissibilityViolated("M(J,p) < 0");
  return s;
}

}  // namespace alcove

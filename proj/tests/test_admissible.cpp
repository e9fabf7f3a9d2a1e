#include <doctest.h>

#include <algorithm>
#include <set>

#include "alcove/admissible.hpp"
#include "alcove/characters.hpp"
#include "alcove/errors.hpp"

using namespace alcove;

namespace {

struct A2 {
  RootSystem rs = build_root_system('A', 2);
  int r12, r23, r13;
  A2() {
    r12 = rs.root_from_weight(Vec(rs.cartan * vec_of({1, 0}))).index;
    r23 = rs.root_from_weight(Vec(rs.cartan * vec_of({0, 1}))).index;
    r13 = rs.root_from_weight(Vec(rs.cartan * vec_of({1, 1}))).index;
  }
  LambdaChain omega1_chain() const {
    return chain_from_roots(rs, vec_of({1, 0}), {r12, r13});
  }
  LambdaChain worked_chain() const {
    return chain_from_roots(rs, vec_of({2, 2}), {r12, r13, r23, r13, r12, r13, r23, r13});
  }
};

}  // namespace

TEST_CASE("admissibility on the omega_1 chain") {
  A2 ctx;
  LambdaChain chain = ctx.omega1_chain();
  CHECK(is_admissible(ctx.rs, chain, {}));
  CHECK(is_admissible(ctx.rs, chain, {0}));
  CHECK(is_admissible(ctx.rs, chain, {0, 1}));
  CHECK(!is_admissible(ctx.rs, chain, {1}));  // s_13 does not cover the identity
  CHECK_THROWS_AS(make_admissible(ctx.rs, chain, {1}), NotAdmissible);
}

TEST_CASE("the worked A2 chain holds the tail subset {2,4} with w(J) = s_12 s_23") {
  A2 ctx;
  LambdaChain chain = ctx.worked_chain();
  // Tail positions 2 and 4 sit at global 0-based positions 4 and 6.
  AdmissibleSubset J = make_admissible(ctx.rs, chain, {4, 6});
  CHECK(J.w == weyl_from_word(ctx.rs, {0, 1}));
  REQUIRE(J.kappa0);
  CHECK(J.kappa0->is_identity());
}

TEST_CASE("enumeration") {
  A2 ctx;
  auto subsets = enumerate_admissible(ctx.rs, ctx.omega1_chain());
  REQUIRE(subsets.size() == 3);
  CHECK(subsets[0].positions == std::vector<int>{});
  CHECK(subsets[1].positions == std::vector<int>{0});
  CHECK(subsets[2].positions == std::vector<int>{0, 1});

  LambdaChain empty = lex_lambda_chain(ctx.rs, vec_of({0, 0}));
  CHECK(enumerate_admissible(ctx.rs, empty).size() == 1);

  RootSystem g2 = build_root_system('G', 2);
  LambdaChain gchain = lex_lambda_chain(g2, vec_of({1, 0}));
  CHECK(enumerate_admissible(g2, gchain).size() == 7);

  // Count equals the dimension oracle across desk-scale systems.
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs = build_root_system(label);
    for (Int a = 0; a <= 2; ++a)
      for (Int b = 0; b <= 2; ++b) {
        LambdaChain chain = lex_lambda_chain(rs, vec_of({a, b}));
        CHECK(static_cast<Int>(enumerate_admissible(rs, chain).size()) ==
              weyl_dim_oracle(rs, vec_of({a, b})));
      }
  }
}

TEST_CASE("weights and keys") {
  A2 ctx;
  const RootSystem& rs = ctx.rs;
  LambdaChain chain = ctx.omega1_chain();
  Vec omega1 = vec_of({1, 0});
  CHECK(weight_of(rs, chain, {}) == omega1);
  CHECK(weight_of(rs, chain, {0}) == reflect_weight(rs, omega1, Root(ctx.r12, 1)));
  Vec expect = reflect_weight(rs, reflect_weight(rs, omega1, Root(ctx.r13, 1)),
                              Root(ctx.r12, 1));
  CHECK(weight_of(rs, chain, {0, 1}) == expect);

  // mu(empty) = lambda on any chain.
  LambdaChain big = ctx.worked_chain();
  CHECK(weight_of(rs, big, {}) == vec_of({2, 2}));

  auto [k0, k1] = keys_of(rs, big, {4, 6});
  CHECK(k0.is_identity());
  CHECK(k1 == weyl_from_word(rs, {0, 1}));

  // Keys need special form.
  LambdaChain bad = chain_from_roots(rs, vec_of({2, 2}),
                                     {ctx.r12, ctx.r13, ctx.r13, ctx.r23, ctx.r12,
                                      ctx.r13, ctx.r23, ctx.r13});
  CHECK_THROWS_AS(keys_of(rs, bad, {}), NotSpecialForm);
}

TEST_CASE("folding") {
  A2 ctx;
  const RootSystem& rs = ctx.rs;
  LambdaChain chain = ctx.omega1_chain();

  FoldedChain base = fold(rs, chain, {});
  CHECK(base.gamma[0] == Root(ctx.r12, 1));
  CHECK(base.gamma[1] == Root(ctx.r13, 1));
  CHECK(base.gamma_prime == base.gamma);
  CHECK(base.gamma_inf == rs.rho());

  // J = {1}: pairs ((a12, -a12), (a23, a23)), gamma_inf = s_12(rho).
  FoldedChain folded = fold(rs, chain, {0});
  CHECK(folded.gamma[0] == Root(ctx.r12, 1));
  CHECK(folded.gamma_prime[0] == Root(ctx.r12, -1));
  CHECK(folded.gamma[1] == Root(ctx.r23, 1));
  CHECK(folded.gamma_prime[1] == Root(ctx.r23, 1));
  CHECK(folded.gamma_inf == reflect_weight(rs, rs.rho(), Root(ctx.r12, 1)));

  // phi_i is an involution, and fold(J) composes the phi at J's positions.
  LambdaChain big = ctx.worked_chain();
  FoldedChain start = fold(rs, big, {});
  for (int i = 0; i < big.size(); ++i) {
    FoldedChain once = fold_operator(rs, start, i);
    FoldedChain twice = fold_operator(rs, once, i);
    CHECK(twice.gamma == start.gamma);
    CHECK(twice.gamma_prime == start.gamma_prime);
    CHECK(twice.gamma_inf == start.gamma_inf);
  }
  std::vector<int> J{0, 4, 6};
  FoldedChain via_ops = start;
  for (auto it = J.rbegin(); it != J.rend(); ++it) via_ops = fold_operator(rs, via_ops, *it);
  FoldedChain direct = fold(rs, big, J);
  CHECK(via_ops.gamma == direct.gamma);
  CHECK(via_ops.gamma_prime == direct.gamma_prime);
  CHECK(via_ops.gamma_inf == direct.gamma_inf);

  // Folding operators commute.
  FoldedChain other_order = start;
  for (int i : J) other_order = fold_operator(rs, other_order, i);
  CHECK(other_order.gamma == direct.gamma);
  CHECK(other_order.gamma_prime == direct.gamma_prime);

  // gamma_i = beta_i before the first fold; |gamma_i| is always positive.
  for (const AdmissibleSubset& sub : enumerate_admissible(rs, big)) {
    FoldedChain fc = fold(rs, big, sub.positions);
    int first = sub.positions.empty() ? big.size() : sub.positions.front();
    for (int i = 0; i < big.size(); ++i) {
      if (i <= first) CHECK(fc.gamma[i] == Root(big.roots[i], 1));
      CHECK(fc.gamma[i].index >= 0);
      bool negated_at = std::binary_search(sub.positions.begin(), sub.positions.end(), i);
      CHECK(fc.gamma_prime[i] == (negated_at ? fc.gamma[i].negated() : fc.gamma[i]));
    }
  }
}

TEST_CASE("level scan on the worked sign pattern") {
  // Pairs (1,-1),(-1,-1),(1,1),(1,1),(1,-1),(-1,-1),(1,-1),(1,1); final sign 1.
  std::vector<std::pair<int, int>> sigma = {{1, -1}, {-1, -1}, {1, 1}, {1, 1},
                                            {1, -1}, {-1, -1}, {1, -1}, {1, 1}};
  auto [levels, level_inf] = scan_levels(sigma, 1);
  CHECK(levels == std::vector<Int>{0, -1, -1, 0, 1, 0, 0, 0});
  CHECK(level_inf == 1);
}

TEST_CASE("sigma sequences on small chains") {
  A2 ctx;
  const RootSystem& rs = ctx.rs;
  LambdaChain chain = ctx.omega1_chain();
  AdmissibleSubset empty = make_admissible(rs, chain, {});

  SigmaSequence s1 = sigma_and_levels(rs, chain, empty, 0);
  CHECK(s1.indices == std::vector<int>{0});
  CHECK(s1.sigma == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(s1.final_sign == 1);
  CHECK(s1.levels == std::vector<Int>{0});
  CHECK(s1.level_inf == 1);
  CHECK(s1.max_level == 1);

  // A2, lambda = omega_2, chain (alpha_23, alpha_13): no +-alpha_1 entries.
  LambdaChain w2 = chain_from_roots(rs, vec_of({0, 1}), {ctx.r23, ctx.r13});
  AdmissibleSubset e2 = make_admissible(rs, w2, {});
  SigmaSequence s2 = sigma_and_levels(rs, w2, e2, 0);
  CHECK(s2.indices.empty());
  CHECK(s2.level_inf == 0);
  CHECK(s2.max_level == 0);

  // The scan's endpoint always equals <mu(J), alpha_p^vee>, and (S1)/(S2)
  // hold for every admissible subset.
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem sys = build_root_system(label);
    LambdaChain c = lex_lambda_chain(sys, vec_of({2, 1}));
    for (const AdmissibleSubset& J : enumerate_admissible(sys, c))
      for (int p = 0; p < sys.rank; ++p) {
        SigmaSequence s = sigma_and_levels(sys, c, J, p);
        CHECK(s.level_inf == pairing(sys, J.mu, Root(sys.simple_index[p], 1)));
        CHECK(s.max_level >= 0);
      }
  }
}

TEST_CASE("the weight multiset is chain independent") {
  A2 ctx;
  const RootSystem& rs = ctx.rs;
  LambdaChain a = ctx.worked_chain();
  LambdaChain b = reverse_chain(rs, a);
  CHECK(character(rs, a) == character(rs, b));
}

#include <doctest.h>

#include <algorithm>

#include "alcove/errors.hpp"
#include "alcove/ybmoves.hpp"

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
  LambdaChain worked_chain() const {
    return chain_from_roots(rs, vec_of({2, 2}), {r12, r13, r23, r13, r12, r13, r23, r13});
  }
  LambdaChain worked_rev() const {
    return chain_from_roots(rs, vec_of({2, 2}), {r12, r13, r23, r13, r23, r13, r12, r13});
  }
};

// The reflection s_{beta_i} permutes the reflection ordering by the closed
// rule: beta_j -> -beta_{2i-j} inside the fan, and reverses the outer block.
Root closed_form_image(const DihedralContext& ctx, int i, int j) {
  const int q = ctx.q;
  auto at = [&](int k) { return ctx.order[k - 1]; };
  if (2 * i <= q + 1) {
    if (j < i) return at(2 * i - j).negated();
    if (j == i) return at(i).negated();
    if (j < 2 * i) return at(2 * i - j).negated();
    return at(q + 2 * i - j);
  }
  if (j > i) return at(2 * i - j).negated();
  if (j == i) return at(i).negated();
  if (j > 2 * i - q - 1) return at(2 * i - j).negated();
  return at(2 * i - q - j);
}

}  // namespace

TEST_CASE("reflection orderings and the dihedral permutation rule") {
  struct Setup {
    const char* ambient;
    int simple_a;
    int simple_b;
    int q;
  };
  // q = 2 uses the two orthogonal outer simples of A3.
  const Setup setups[] = {{"A3", 0, 2, 2}, {"A2", 0, 1, 3}, {"B2", 0, 1, 4}, {"G2", 0, 1, 6}};
  for (const Setup& s : setups) {
    CAPTURE(s.ambient);
    RootSystem rs = build_root_system(s.ambient);
    DihedralContext ctx = make_dihedral_context(rs, Root(rs.simple_index[s.simple_a], 1),
                                                Root(rs.simple_index[s.simple_b], 1));
    REQUIRE(ctx.q == s.q);
    REQUIRE(static_cast<int>(ctx.elements.size()) == 2 * s.q);
    // The ordering starts at alpha, ends at beta, and lists distinct roots.
    CHECK(ctx.order.front() == ctx.alpha);
    CHECK(ctx.order.back() == ctx.beta);
    for (int i = 1; i <= s.q; ++i)
      for (int j = 1; j <= s.q; ++j) {
        Root image = reflect_root(rs, ctx.order[j - 1], ctx.order[i - 1]);
        CHECK(image == closed_form_image(ctx, i, j));
      }
  }
}

TEST_CASE("coset split") {
  A2 ctx;
  const RootSystem& rs = ctx.rs;
  DihedralContext full = make_dihedral_context(rs, Root(ctx.r23, 1), Root(ctx.r12, 1));

  // Elements of the subgroup split with trivial floor.
  WeylElement s12 = reflection(rs, Root(ctx.r12, 1));
  CosetSplit split = dihedral_coset_split(rs, full, s12);
  CHECK(split.floor.is_identity());
  CHECK(split.len == 1);

  WeylElement w = weyl_from_word(rs, {0, 1, 0});
  CosetSplit split3 = dihedral_coset_split(rs, full, w);
  CHECK(split3.floor.is_identity());
  CHECK(split3.len == 3);
  CHECK(split3.word.size() == 3);

  // Nontrivial floor: the A1 x A1 subsystem of A3 and a transversal element.
  RootSystem a3 = build_root_system('A', 3);
  DihedralContext small = make_dihedral_context(a3, Root(a3.simple_index[0], 1),
                                                Root(a3.simple_index[2], 1));
  WeylElement g = weyl_from_word(a3, {1, 0, 2});
  CosetSplit sg = dihedral_coset_split(a3, small, g);
  WeylElement wbar = WeylElement::identity(3);
  for (int letter : sg.word)
    wbar = wbar * reflection(a3, letter == 0 ? small.alpha : small.beta);
  CHECK(sg.floor * wbar == g);
  CHECK(apply_to_root(a3, sg.floor, small.alpha).sign > 0);
  CHECK(apply_to_root(a3, sg.floor, small.beta).sign > 0);
  CHECK(length(a3, sg.floor) <= length(a3, g));
}

TEST_CASE("dihedral chain subsets across all coset pairs") {
  // For every pair ubar <= wbar the returned labels climb exactly from ubar
  // to wbar inside the reflection ordering.
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs = build_root_system(label);
    DihedralContext ctx = make_dihedral_context(rs, Root(rs.simple_index[0], 1),
                                                Root(rs.simple_index[1], 1));
    for (const auto& u_elem : ctx.elements)
      for (const auto& w_elem : ctx.elements) {
        CosetSplit su = dihedral_coset_split(rs, ctx, u_elem.w);
        CosetSplit sw = dihedral_coset_split(rs, ctx, w_elem.w);
        if (su.len > sw.len || (su.len == sw.len && !(u_elem.w == w_elem.w))) {
          if (su.len == sw.len)
            CHECK_THROWS_AS(dihedral_chain_subset(ctx, su, sw), NotComparable);
          continue;
        }
        std::vector<int> J = dihedral_chain_subset(ctx, su, sw);
        WeylElement acc = u_elem.w;
        int len = su.len;
        for (int j : J) {
          acc = acc * reflection(rs, ctx.order[j - 1]);
          ++len;
          CHECK(ctx.lookup(acc).len == len);
        }
        CHECK(acc == w_elem.w);
        CHECK(std::is_sorted(J.begin(), J.end()));
      }
  }
}

TEST_CASE("local involution rows") {
  CHECK(yb_local_involution(3, 1, 3, {1, 3}) == std::vector<int>{2, 3});
  CHECK(yb_local_involution(3, 1, 1, {}) == std::vector<int>{});
  CHECK(yb_local_involution(3, 0, 1, {1}) == std::vector<int>{3});
  CHECK(yb_local_involution(3, 0, 3, {1, 2, 3}) == std::vector<int>{1, 2, 3});
  CHECK(yb_local_involution(4, 1, 2, {3}) == std::vector<int>{2});
  CHECK_THROWS_AS(yb_local_involution(3, 0, 1, {2}), PatternMismatch);

  // Involutive on every legal pattern.
  for (int q : {2, 3, 4, 6})
    for (int a = 0; a <= q; ++a)
      for (int b = a; b <= q; ++b) {
        if (b - a > q) continue;
        std::vector<std::vector<int>> patterns;
        if (a == b) patterns.push_back({});
        if (b - a == 1) {
          patterns.push_back({1});
          patterns.push_back({q});
          if (a > 0 && a < q - 1) {
            patterns.push_back({q - a});
            patterns.push_back({a + 1});
          }
        }
        if (1 < b - a && b - a < q) {
          if (b < q) {
            std::vector<int> p{1};
            for (int v = a + 2; v <= b; ++v) p.push_back(v);
            patterns.push_back(p);
            std::vector<int> r;
            for (int v = a + 1; v <= b - 1; ++v) r.push_back(v);
            r.push_back(q);
            patterns.push_back(r);
          }
          if (a > 0) {
            std::vector<int> p{1};
            for (int v = a + 2; v <= b - 1; ++v) p.push_back(v);
            p.push_back(q);
            patterns.push_back(p);
            std::vector<int> r;
            for (int v = a + 1; v <= b; ++v) r.push_back(v);
            patterns.push_back(r);
          }
        }
        if (a == 0 && b == q) {
          std::vector<int> all;
          for (int v = 1; v <= q; ++v) all.push_back(v);
          patterns.push_back(all);
        }
        std::sort(patterns.begin(), patterns.end());
        patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
        for (const auto& p : patterns) {
          auto image = yb_local_involution(q, a, b, p);
          CHECK(yb_local_involution(q, a, b, image) == p);
        }
      }
}

TEST_CASE("the worked Yang-Baxter move") {
  A2 ctx;
  const RootSystem& rs = ctx.rs;
  LambdaChain rev = ctx.worked_rev();
  YbWindow window{4, 3, Root(rev.roots[4], 1), Root(rev.roots[6], 1)};
  REQUIRE(is_yb_window(rs, rev, 4, 3));

  // J^rev = {1bar, 2, 4} lives at global positions {0, 4, 6}.
  AdmissibleSubset jrev = make_admissible(rs, rev, {0, 4, 6});
  AdmissibleSubset jstar = yb_move(rs, rev, window, jrev);
  CHECK(jstar.positions == std::vector<int>{0, 5, 6});  // {1bar, 3, 4}
  CHECK(jstar.mu == jrev.mu);
  CHECK(jstar.w == jrev.w);
  CHECK(yb_move_search(rs, rev, window, jrev).positions == jstar.positions);

  // Double move returns; disjoint subsets are untouched.
  LambdaChain fwd = apply_segment_reversal(rs, rev, window);
  CHECK(yb_move(rs, fwd, window, jstar).positions == jrev.positions);
  AdmissibleSubset disjoint = make_admissible(rs, rev, {0});
  CHECK(yb_move(rs, rev, window, disjoint).positions == std::vector<int>{0});
}

TEST_CASE("yb moves preserve weight and element, commute with lowering, table = search") {
  for (const char* label : {"A2", "B2"}) {
    RootSystem rs = build_root_system(label);
    LambdaChain chain = lex_lambda_chain(rs, vec_of({1, 1}));
    auto subsets = enumerate_admissible(rs, chain);
    for (const YbWindow& window : find_yb_windows(rs, chain)) {
      LambdaChain reversed = apply_segment_reversal(rs, chain, window);
      std::set<std::vector<int>> images;
      for (const AdmissibleSubset& J : subsets) {
        AdmissibleSubset moved = yb_move(rs, chain, window, J);
        CHECK(moved.mu == J.mu);
        CHECK(moved.w == J.w);
        CHECK(yb_move_search(rs, chain, window, J).positions == moved.positions);
        images.insert(moved.positions);
        for (int p = 0; p < rs.rank; ++p) {
          auto fj = lower(rs, chain, J, p);
          auto fy = lower(rs, reversed, moved, p);
          CHECK(fj.has_value() == fy.has_value());
          if (fj && fy)
            CHECK(yb_move(rs, chain, window, *fj).positions == fy->positions);
        }
      }
      CHECK(images.size() == subsets.size());
    }
  }
}

TEST_CASE("composed bijections agree with the canonical isomorphism") {
  A2 ctx;
  const RootSystem& rs = ctx.rs;
  LambdaChain chain = ctx.worked_chain();
  LambdaChain rev = ctx.worked_rev();

  Bijection composed = composed_bijection(rs, rev, chain);
  Bijection canonical = canonical_iso(rs, build_graph(rs, rev), build_graph(rs, chain));
  CHECK(composed == canonical);

  // Identity on identical chains.
  Bijection id = composed_bijection(rs, chain, chain);
  for (const auto& [from, to] : id.map) CHECK(from == to);

  // Two forced-distinct move sequences give the same bijection.
  auto windows = find_yb_windows(rs, rev);
  REQUIRE(!windows.empty());
  std::vector<YbWindow> path = connect_chains(rs, rev, chain);
  std::vector<YbWindow> detour{windows.front(), windows.front()};
  detour.insert(detour.end(), path.begin(), path.end());
  CHECK(composed_bijection_along(rs, rev, detour) == composed);
}

#include <doctest.h>

#include <deque>
#include <map>
#include <random>
#include <set>

#include "alcove/errors.hpp"
#include "alcove/rootsys.hpp"

using namespace alcove;

namespace {

// Independent length oracle: breadth-first word enumeration over the
// generators, recording the first (hence minimal) word length per element.
std::map<Mat, int, MatLess> word_length_table(const RootSystem& rs) {
  std::map<Mat, int, MatLess> table;
  std::deque<WeylElement> queue;
  WeylElement id = WeylElement::identity(rs.rank);
  table[id.m] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int p = 0; p < rs.rank; ++p) {
      WeylElement next = w * simple_reflection(rs, p);
      if (table.emplace(next.m, table[w.m] + 1).second) queue.push_back(next);
    }
  }
  return table;
}

Root simple(const RootSystem& rs, int p) { return Root(rs.simple_index[p], 1); }

}  // namespace

TEST_CASE("positive root counts and Coxeter numbers match the classical tables") {
  struct Row { char type; int rank; int count; int coxeter; };
  const Row rows[] = {
      {'A', 1, 1, 2},  {'A', 2, 3, 3},   {'A', 3, 6, 4},  {'B', 2, 4, 4},
      {'B', 3, 9, 6},  {'C', 3, 9, 6},   {'D', 4, 12, 6}, {'G', 2, 6, 6},
      {'F', 4, 24, 12}, {'A', 8, 36, 9}, {'B', 8, 64, 16},
  };
  for (const Row& row : rows) {
    CAPTURE(row.type);
    CAPTURE(row.rank);
    RootSystem rs = build_root_system(row.type, row.rank);
    CHECK(rs.num_positive() == row.count);
    CHECK(rs.coxeter == row.coxeter);
    // h = <rho, theta^vee> + 1 with theta^vee the unique highest coroot.
    CHECK(rs.positive[rs.highest_coroot].coroot.sum() + 1 == rs.coxeter);
    for (int p = 0; p < rs.rank; ++p) {
      Vec e = Vec::Zero(rs.rank);
      e(p) = 1;
      CHECK(rs.positive[rs.simple_index[p]].root == e);
    }
  }
}

TEST_CASE("unsupported types are rejected") {
  CHECK_THROWS_AS(build_root_system('E', 6), UnsupportedType);
  CHECK_THROWS_AS(build_root_system('A', 9), UnsupportedType);
  CHECK_THROWS_AS(build_root_system('B', 1), UnsupportedType);
  CHECK_THROWS_AS(build_root_system('D', 3), UnsupportedType);
  CHECK_THROWS_AS(build_root_system("Q5"), UnsupportedType);
  CHECK(build_root_system("g2").num_positive() == 6);
  CHECK(build_root_system(" b3 ").rank == 3);
}

TEST_CASE("A2 holds alpha_13 = alpha_12 + alpha_23, A1 and G2 sizes") {
  RootSystem a2 = build_root_system('A', 2);
  CHECK(a2.num_positive() == 3);
  Vec sum = a2.positive[a2.simple_index[0]].root + a2.positive[a2.simple_index[1]].root;
  bool found = false;
  for (const auto& e : a2.positive) found = found || e.root == sum;
  CHECK(found);

  RootSystem a1 = build_root_system('A', 1);
  CHECK(a1.num_positive() == 1);
  CHECK(a1.coxeter == 2);

  RootSystem g2 = build_root_system('G', 2);
  CHECK(g2.num_positive() == 6);
  CHECK(enumerate_weyl_group(g2).size() == 12);
}

TEST_CASE("pairings") {
  RootSystem a2 = build_root_system('A', 2);
  // <omega_i, alpha_j^vee> = delta_ij.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Vec omega = Vec::Zero(2);
      omega(i) = 1;
      CHECK(pairing(a2, omega, simple(a2, j)) == (i == j ? 1 : 0));
    }

  RootSystem g2 = build_root_system('G', 2);
  Int max_height = 0;
  for (const auto& e : g2.positive) max_height = std::max(max_height, e.coroot.sum());
  CHECK(max_height == 5);  // so h = 6
  CHECK(pairing(g2, g2.rho(), Root(g2.highest_coroot, 1)) == 5);

  // alpha_13^vee = alpha_12^vee + alpha_23^vee in A2.
  Vec lam = vec_of({2, 2});
  Root a13 = a2.root_from_weight(Vec(a2.weight_of(simple(a2, 0)) + a2.weight_of(simple(a2, 1))));
  CHECK(pairing(a2, lam, a13) == 4);
}

TEST_CASE("reflections") {
  RootSystem a2 = build_root_system('A', 2);
  Vec omega1 = vec_of({1, 0});
  CHECK(reflect_weight(a2, omega1, simple(a2, 0)) == vec_of({-1, 1}));
  // s_alpha(alpha) = -alpha; involution; fixes the orthogonal hyperplane.
  for (int idx = 0; idx < a2.num_positive(); ++idx) {
    Root alpha(idx, 1);
    CHECK(reflect_root(a2, alpha, alpha) == alpha.negated());
    Vec w = vec_of({1, 2});
    CHECK(reflect_weight(a2, reflect_weight(a2, w, alpha), alpha) == w);
  }
  // s_12(alpha_23) = alpha_13.
  Root image = reflect_root(a2, simple(a2, 1), simple(a2, 0));
  CHECK(image.sign == 1);
  CHECK(a2.positive[image.index].root == vec_of({1, 1}));
}

TEST_CASE("words, lengths, longest element") {
  RootSystem a2 = build_root_system('A', 2);
  WeylElement w121 = weyl_from_word(a2, {0, 1, 0});
  CHECK(length(a2, w121) == 3);
  CHECK(w121 == longest_element(a2));
  CHECK(weyl_from_word(a2, {}).is_identity());
  CHECK(weyl_from_word(a2, {0, 0}).is_identity());
  CHECK(length(a2, longest_element(a2)) == a2.num_positive());
  WeylElement wo = longest_element(a2);
  CHECK((wo * wo).is_identity());

  // Length equals minimal word length over the generators.
  for (char t : {'A', 'B'}) {
    RootSystem rs = build_root_system(t, 3);
    auto table = word_length_table(rs);
    CHECK(table.size() == (t == 'A' ? 24u : 48u));
    for (const auto& [m, len] : table) {
      WeylElement w;
      w.m = m;
      w.minv = m;  // unused by length
      CHECK(length(rs, w) == len);
    }
  }
}

TEST_CASE("random-word properties: root permutation, inverse and w_o lengths") {
  std::mt19937_64 rng(7);
  for (char t : {'A', 'B', 'G'}) {
    RootSystem rs = build_root_system(t, t == 'G' ? 2 : 3);
    WeylElement wo = longest_element(rs);
    int lwo = length(rs, wo);
    std::uniform_int_distribution<int> letter(0, rs.rank - 1);
    std::uniform_int_distribution<int> len(0, 12);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> word(len(rng));
      for (int& x : word) x = letter(rng);
      WeylElement w = weyl_from_word(rs, word);
      for (int idx = 0; idx < rs.num_positive(); ++idx)
        CHECK(rs.try_root_from_weight(Vec(w.m * rs.positive[idx].weight)).has_value());
      CHECK(length(rs, w.inverse()) == length(rs, w));
      CHECK(length(rs, wo * w) == lwo - length(rs, w));
      CHECK((w * w.inverse()).is_identity());
    }
  }
}

TEST_CASE("bruhat covers at the identity in A2, and for G2 length levels") {
  RootSystem a2 = build_root_system('A', 2);
  auto covers = bruhat_covers(a2, WeylElement::identity(2));
  CHECK(covers.size() == 2);  // only the simple reflections cover the identity
  for (const auto& [beta, w] : covers) CHECK(a2.positive[beta.index].root.sum() == 1);

  RootSystem g2 = build_root_system('G', 2);
  auto group = enumerate_weyl_group(g2);
  int length3 = 0;
  for (const auto& w : group) {
    if (length(g2, w) != 3) continue;
    ++length3;
    // Lower covers: elements v = w s_beta with l(v) = 2.
    int lower = 0;
    for (int idx = 0; idx < g2.num_positive(); ++idx)
      if (length(g2, WeylElement(w * reflection(g2, Root(idx, 1)))) == 2) ++lower;
    CHECK(lower == 2);
  }
  CHECK(length3 == 2);
}

TEST_CASE("bruhat_leq equals the transitive closure of covers on rank <= 3") {
  for (const char* label : {"A2", "B2", "G2", "A3", "B3"}) {
    CAPTURE(label);
    RootSystem rs = build_root_system(label);
    auto group = enumerate_weyl_group(rs);
    std::map<Mat, int, MatLess> id_of;
    for (int i = 0; i < static_cast<int>(group.size()); ++i) id_of[group[i].m] = i;
    // Transitive closure by propagating along covers, lowest lengths first.
    std::vector<std::set<int>> below(group.size());  // below[w] = {u : u <= w}
    std::vector<int> order(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return length(rs, group[a]) < length(rs, group[b]);
    });
    for (int i : order) {
      below[i].insert(i);
      for (int idx = 0; idx < rs.num_positive(); ++idx) {
        WeylElement v = group[i] * reflection(rs, Root(idx, 1));
        if (length(rs, v) == length(rs, group[i]) - 1) {
          const auto& sub = below[id_of[v.m]];
          below[i].insert(sub.begin(), sub.end());
        }
      }
    }
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = 0; b < group.size(); ++b)
        CHECK(bruhat_leq(rs, group[a], group[b]) ==
              (below[b].count(static_cast<int>(a)) > 0));
  }
}

TEST_CASE("coset representatives") {
  RootSystem a2 = build_root_system('A', 2);
  WeylElement wo = longest_element(a2);
  Vec omega1 = vec_of({1, 0});

  // Regular lambda: trivial stabilizer.
  Vec reg = vec_of({1, 1});
  for (const auto& w : enumerate_weyl_group(a2)) {
    CHECK(coset_min(a2, w, reg) == w);
    CHECK(coset_max(a2, w, reg) == w);
  }

  // lambda = omega_1: W_lambda = <s_2>, w_o^lambda = s_2.
  CHECK(stab_longest(a2, omega1) == simple_reflection(a2, 1));
  WeylElement floor_wo = coset_min(a2, wo, omega1);
  CHECK(floor_wo == WeylElement(wo * simple_reflection(a2, 1)));
  CHECK(length(a2, floor_wo) == 2);

  // ceil(floor(w)) = floor(w) w_o^lambda; minimal reps have no descent in W_lambda.
  for (const char* label : {"A2", "B2", "G2"}) {
    RootSystem rs = build_root_system(label);
    for (int p = 0; p < rs.rank; ++p) {
      Vec lam = Vec::Zero(rs.rank);
      lam(p) = 1;
      WeylElement wol = stab_longest(rs, lam);
      for (const auto& w : enumerate_weyl_group(rs)) {
        WeylElement mn = coset_min(rs, w, lam);
        WeylElement mx = coset_max(rs, w, lam);
        CHECK(coset_max(rs, mn, lam) == mx);
        CHECK(mx == WeylElement(mn * wol));
        for (int sp = 0; sp < rs.rank; ++sp) {
          if (lam(sp) != 0) continue;
          CHECK(length(rs, WeylElement(mn * simple_reflection(rs, sp))) ==
                length(rs, mn) + 1);
          CHECK(length(rs, WeylElement(mx * simple_reflection(rs, sp))) ==
                length(rs, mx) - 1);
        }
      }
    }
  }
  CHECK_THROWS_AS(coset_min(a2, wo, vec_of({-1, 0})), NonDominant);
}

TEST_CASE("star involution") {
  RootSystem a2 = build_root_system('A', 2);
  CHECK(star_involution(a2, 0) == 1);
  CHECK(star_involution(a2, 1) == 0);
  RootSystem b2 = build_root_system('B', 2);
  CHECK(star_involution(b2, 0) == 0);
  CHECK(star_involution(b2, 1) == 1);
  RootSystem a3 = build_root_system('A', 3);
  CHECK(star_involution(a3, 0) == 2);
  CHECK(star_involution(a3, 1) == 1);
  for (const char* label : {"A3", "D4", "G2", "F4"}) {
    RootSystem rs = build_root_system(label);
    for (int p = 0; p < rs.rank; ++p)
      CHECK(star_involution(rs, star_involution(rs, p)) == p);
  }
}

#ifndef ALCOVE_ROOTSYS_HPP
#define ALCOVE_ROOTSYS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcove/types.hpp"

namespace alcove {

// A root is a signed reference into the positive-root table.
struct Root {
  int index = 0;  // position in RootSystem::positive
  int sign = 1;   // +1 or -1

  Root() = default;
  Root(int idx, int sg) : index(idx), sign(sg) {}
  Root negated() const { return Root(index, -sign); }
  bool operator==(const Root& o) const { return index == o.index && sign == o.sign; }
  bool operator!=(const Root& o) const { return !(*this == o); }
};

// Element of the Weyl group, acting on fundamental-weight coordinates.
// The inverse matrix is carried along so that inversion stays exact and free.
struct WeylElement {
  Mat m;
  Mat minv;

  static WeylElement identity(int rank) {
    WeylElement w;
    w.m = Mat::Identity(rank, rank);
    w.minv = w.m;
    return w;
  }
  WeylElement operator*(const WeylElement& o) const {
    WeylElement r;
    r.m = m * o.m;
    r.minv = o.minv * minv;
    return r;
  }
  WeylElement inverse() const {
    WeylElement r;
    r.m = minv;
    r.minv = m;
    return r;
  }
  Vec operator()(const Vec& weight) const { return m * weight; }
  bool operator==(const WeylElement& o) const { return m == o.m; }
  bool operator!=(const WeylElement& o) const { return m != o.m; }
  bool is_identity() const { return m.isIdentity(); }
};

struct WeylLess {
  bool operator()(const WeylElement& a, const WeylElement& b) const {
    return MatLess{}(a.m, b.m);
  }
};

struct RootSystem {
  char type = 'A';
  int rank = 0;
  Mat cartan;               // cartan(i,j) = <alpha_j, alpha_i^vee>
  std::vector<Int> sym;     // symmetrizer d_i with d_i a_ij = d_j a_ji

  struct RootEntry {
    Vec root;     // coordinates in the simple-root basis
    Vec coroot;   // coordinates in the simple-coroot basis
    Vec weight;   // coordinates in the fundamental-weight basis
    Int norm2;    // (alpha, alpha) in the symmetrized form
  };
  std::vector<RootEntry> positive;        // sorted by (height, lex)
  std::vector<int> simple_index;          // simple i -> index in positive
  std::vector<std::array<int, 3>> coroot_triples;  // c^vee = a^vee + b^vee
  int coxeter = 0;                        // h
  int highest_coroot = 0;                 // index of theta^vee

  std::string label() const { return std::string(1, type) + std::to_string(rank); }

  int num_positive() const { return static_cast<int>(positive.size()); }

  // Table lookup of a root given in fundamental-weight coordinates.
  Root root_from_weight(const Vec& w) const;
  std::optional<Root> try_root_from_weight(const Vec& w) const;

  const Vec& weight_of(Root a) const { return positive[a.index].weight; }
  Vec signed_weight(Root a) const {
    return a.sign > 0 ? positive[a.index].weight : Vec(-positive[a.index].weight);
  }

  Vec rho() const { return Vec::Ones(rank); }

 private:
  friend RootSystem build_root_system(char type, int rank);
  std::map<Vec, int, VecLess> weight_lookup_;
};

RootSystem build_root_system(char type, int rank);
// Parses descriptors like "A2", "g2", "B3" (case-insensitive).
RootSystem build_root_system(const std::string& descriptor);

// <lambda, alpha^vee>, exact integer. `alpha` may be signed.
Int pairing(const RootSystem& rs, const Vec& weight, Root alpha);

bool is_dominant(const Vec& weight);

// s_alpha on weights and on roots.
Vec reflect_weight(const RootSystem& rs, const Vec& weight, Root alpha);
Root reflect_root(const RootSystem& rs, Root x, Root alpha);

WeylElement simple_reflection(const RootSystem& rs, int p);
WeylElement reflection(const RootSystem& rs, Root alpha);
WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word);

int length(const RootSystem& rs, const WeylElement& w);
WeylElement longest_element(const RootSystem& rs);

// Image of a root under w, as a signed table reference.
Root apply_to_root(const RootSystem& rs, const WeylElement& w, Root a);

// Upper covers in Bruhat order: pairs (beta, w s_beta) with l(w s_beta) = l(w)+1.
std::vector<std::pair<Root, WeylElement>> bruhat_covers(const RootSystem& rs,
                                                        const WeylElement& w);
// Bitmask over positive-root indices: true where w s_beta covers w.
std::vector<char> cover_mask(const RootSystem& rs, const WeylElement& w);
// Same for w s_beta covered by w (length drops by one).
std::vector<char> cocover_mask(const RootSystem& rs, const WeylElement& w);

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w);

// Minimal/maximal representatives of the coset w W_lambda, and the longest
// element of the stabilizer W_lambda. Require lambda dominant.
WeylElement coset_min(const RootSystem& rs, const WeylElement& w, const Vec& lambda);
WeylElement coset_max(const RootSystem& rs, const WeylElement& w, const Vec& lambda);
WeylElement stab_longest(const RootSystem& rs, const Vec& lambda);

// p* with alpha_{p*} = -w_o(alpha_p); 0-based simple indices.
int star_involution(const RootSystem& rs, int p);

// Whole Weyl group by breadth-first closure over the generators.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs);

}  // namespace alcove

#endif

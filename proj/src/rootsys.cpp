#include "alcove/rootsys.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

// Cartan matrices with the convention cartan(i,j) = <alpha_j, alpha_i^vee>.
Mat cartan_matrix(char type, int r) {
  auto bad = [&](const std::string& why) -> Mat {
    throw UnsupportedType("unsupported root system " + std::string(1, type) +
                          std::to_string(r) + ": " + why);
  };
  if (r < 1 || r > 8) return bad("rank out of range (1..8)");
  Mat a = Mat::Zero(r, r);
  for (int i = 0; i < r; ++i) a(i, i) = 2;
  auto edge = [&](int i, int j) { a(i, j) = -1; a(j, i) = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case 'B':
      if (r < 2) return bad("B requires rank >= 2");
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      a(r - 1, r - 2) = -2;  // alpha_{r-1} long, alpha_r short
      break;
    case 'C':
      if (r < 2) return bad("C requires rank >= 2");
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      a(r - 2, r - 1) = -2;  // alpha_r long
      break;
    case 'D':
      if (r < 4) return bad("D requires rank >= 4");
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
      edge(r - 3, r - 1);
      break;
    case 'G':
      if (r != 2) return bad("G requires rank 2");
      a(0, 1) = -3;  // alpha_1 short, alpha_2 long
      a(1, 0) = -1;
      break;
    case 'F':
      if (r != 4) return bad("F requires rank 4");
      edge(0, 1);
      edge(2, 3);
      a(1, 2) = -1;
      a(2, 1) = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    default:
      return bad("unknown type letter");
  }
  return a;
}

std::vector<Int> symmetrizer(const Mat& a) {
  const int r = static_cast<int>(a.rows());
  // Propagate d_j / d_i = a(i,j) / a(j,i) along edges; the Dynkin graph is a tree.
  std::vector<Int> num(r, 0), den(r, 0);
  num[0] = den[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      if (j == i || a(i, j) == 0 || num[j] != 0) continue;
      // d_j = d_i a(i,j) / a(j,i); both off-diagonal entries are negative.
      num[j] = std::abs(num[i] * a(i, j));
      den[j] = std::abs(den[i] * a(j, i));
      Int g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      queue.push_back(j);
    }
  }
  Int l = 1;
  for (int i = 0; i < r; ++i) l = std::lcm(l, den[i]);
  std::vector<Int> d(r);
  for (int i = 0; i < r; ++i) d[i] = num[i] * (l / den[i]);
  Int g = 0;
  for (Int x : d) g = std::gcd(g, x);
  for (Int& x : d) x /= g;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (d[i] * a(i, j) != d[j] * a(j, i))
        throw InternalInvariant("Cartan matrix is not symmetrizable");
  return d;
}

}  // namespace

RootSystem build_root_system(char type, int rank) {
  RootSystem rs;
  rs.type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  rs.rank = rank;
  rs.cartan = cartan_matrix(rs.type, rank);
  rs.sym = symmetrizer(rs.cartan);

  const int r = rank;
  // Positive roots: closure of the simple roots under the simple reflections,
  // in simple-root coordinates. s_j acts by c -> c - (row j of cartan . c) e_j.
  std::set<Vec, VecLess> seen;
  std::deque<Vec> queue;
  for (int i = 0; i < r; ++i) {
    Vec e = Vec::Zero(r);
    e(i) = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec c = queue.front();
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      Int pair_j = rs.cartan.row(j).dot(c);
      Vec image = c;
      image(j) -= pair_j;
      bool positive = true;
      for (int i = 0; i < r; ++i) positive = positive && image(i) >= 0;
      if (positive && seen.insert(image).second) queue.push_back(image);
    }
  }

  std::vector<Vec> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), [](const Vec& a, const Vec& b) {
    Int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return VecLess{}(a, b);
  });

  for (const Vec& c : roots) {
    RootSystem::RootEntry entry;
    entry.root = c;
    Int norm2 = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) norm2 += c(i) * c(j) * rs.sym[i] * rs.cartan(i, j);
    entry.norm2 = norm2;
    entry.coroot = Vec(r);
    for (int i = 0; i < r; ++i) {
      Int num = c(i) * 2 * rs.sym[i];
      if (num % norm2 != 0) throw InternalInvariant("coroot coordinates not integral");
      entry.coroot(i) = num / norm2;
    }
    entry.weight = rs.cartan * c;
    rs.positive.push_back(std::move(entry));
  }

  rs.simple_index.assign(r, -1);
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    const Vec& c = rs.positive[idx].root;
    if (c.sum() == 1)
      for (int i = 0; i < r; ++i)
        if (c(i) == 1) rs.simple_index[i] = idx;
    rs.weight_lookup_[rs.positive[idx].weight] = idx;
  }

  // Coroot triples c^vee = a^vee + b^vee, used by the chain validator.
  std::map<Vec, int, VecLess> by_coroot;
  for (int idx = 0; idx < rs.num_positive(); ++idx)
    by_coroot[rs.positive[idx].coroot] = idx;
  for (int a = 0; a < rs.num_positive(); ++a)
    for (int b = a + 1; b < rs.num_positive(); ++b) {
      auto it = by_coroot.find(Vec(rs.positive[a].coroot + rs.positive[b].coroot));
      if (it != by_coroot.end()) rs.coroot_triples.push_back({a, b, it->second});
    }

  // Coxeter number from the unique highest coroot.
  Int best = -1;
  int best_idx = -1;
  bool unique = true;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    Int h = rs.positive[idx].coroot.sum();
    if (h > best) { best = h; best_idx = idx; unique = true; }
    else if (h == best) unique = false;
  }
  if (!unique) throw InternalInvariant("highest coroot is not unique");
  rs.highest_coroot = best_idx;
  rs.coxeter = static_cast<int>(best) + 1;
  return rs;
}

RootSystem build_root_system(const std::string& descriptor) {
  std::string s;
  for (char c : descriptor)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2) throw UnsupportedType("cannot parse root-system descriptor '" + descriptor + "'");
  char type = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw UnsupportedType("cannot parse root-system descriptor '" + descriptor + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  return build_root_system(type, rank);
}

Root RootSystem::root_from_weight(const Vec& w) const {
  auto r = try_root_from_weight(w);
  if (!r) throw InternalInvariant("vector is not a root of " + label());
  return *r;
}

std::optional<Root> RootSystem::try_root_from_weight(const Vec& w) const {
  auto it = weight_lookup_.find(w);
  if (it != weight_lookup_.end()) return Root(it->second, 1);
  it = weight_lookup_.find(Vec(-w));
  if (it != weight_lookup_.end()) return Root(it->second, -1);
  return std::nullopt;
}

Int pairing(const RootSystem& rs, const Vec& weight, Root alpha) {
  return alpha.sign * rs.positive[alpha.index].coroot.dot(weight);
}

bool is_dominant(const Vec& weight) {
  for (Eigen::Index i = 0; i < weight.size(); ++i)
    if (weight(i) < 0) return false;
  return true;
}

Vec reflect_weight(const RootSystem& rs, const Vec& weight, Root alpha) {
  // s_alpha: x -> x - <x, alpha^vee> alpha; the sign of alpha drops out.
  return weight - pairing(rs, weight, alpha) * alpha.sign * rs.weight_of(alpha);
}

Root reflect_root(const RootSystem& rs, Root x, Root alpha) {
  Vec image = reflect_weight(rs, rs.signed_weight(x), alpha);
  return rs.root_from_weight(image);
}

WeylElement simple_reflection(const RootSystem& rs, int p) {
  return reflection(rs, Root(rs.simple_index[p], 1));
}

WeylElement reflection(const RootSystem& rs, Root alpha) {
  const int r = rs.rank;
  Mat m(r, r);
  for (int j = 0; j < r; ++j) {
    Vec e = Vec::Zero(r);
    e(j) = 1;
    m.col(j) = reflect_weight(rs, e, alpha);
  }
  WeylElement w;
  w.m = m;
  w.minv = m;  // reflections are involutions
  return w;
}

WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rs.rank);
  for (int p : word) w = w * simple_reflection(rs, p);
  return w;
}

int length(const RootSystem& rs, const WeylElement& w) {
  int inv = 0;
  for (const auto& entry : rs.positive) {
    Root image = rs.root_from_weight(Vec(w.m * entry.weight));
    if (image.sign < 0) ++inv;
  }
  return inv;
}

WeylElement longest_element(const RootSystem& rs) {
  // w_o sends every positive root to a negative one; descend greedily.
  WeylElement w = WeylElement::identity(rs.rank);
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int p = 0; p < rs.rank; ++p) {
      // l(w s_p) > l(w) iff w(alpha_p) > 0.
      Root image = apply_to_root(rs, w, Root(rs.simple_index[p], 1));
      if (image.sign > 0) {
        w = w * simple_reflection(rs, p);
        progressed = true;
      }
    }
  }
  return w;
}

Root apply_to_root(const RootSystem& rs, const WeylElement& w, Root a) {
  Root image = rs.root_from_weight(Vec(w.m * rs.weight_of(a)));
  image.sign *= a.sign;
  return image;
}

std::vector<std::pair<Root, WeylElement>> bruhat_covers(const RootSystem& rs,
                                                        const WeylElement& w) {
  std::vector<std::pair<Root, WeylElement>> covers;
  int lw = length(rs, w);
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    WeylElement ws = w * reflection(rs, Root(idx, 1));
    if (length(rs, ws) == lw + 1) covers.emplace_back(Root(idx, 1), std::move(ws));
  }
  return covers;
}

std::vector<char> cover_mask(const RootSystem& rs, const WeylElement& w) {
  std::vector<char> mask(rs.positive.size(), 0);
  int lw = length(rs, w);
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    WeylElement ws = w * reflection(rs, Root(idx, 1));
    mask[idx] = length(rs, ws) == lw + 1;
  }
  return mask;
}

std::vector<char> cocover_mask(const RootSystem& rs, const WeylElement& w) {
  std::vector<char> mask(rs.positive.size(), 0);
  int lw = length(rs, w);
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    WeylElement ws = w * reflection(rs, Root(idx, 1));
    mask[idx] = length(rs, ws) == lw - 1;
  }
  return mask;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
  if (u == w) return true;
  int lu = length(rs, u), lw = length(rs, w);
  if (lu >= lw) return false;
  // Standard descent recursion: pick a right descent s of w; then
  // u <= w iff min(u, us) <= ws.
  for (int p = 0; p < rs.rank; ++p) {
    Root image = apply_to_root(rs, w, Root(rs.simple_index[p], 1));
    if (image.sign < 0) {
      WeylElement s = simple_reflection(rs, p);
      WeylElement ws = w * s;
      Root uimage = apply_to_root(rs, u, Root(rs.simple_index[p], 1));
      if (uimage.sign < 0) return bruhat_leq(rs, u * s, ws);
      return bruhat_leq(rs, u, ws);
    }
  }
  return false;  // w = identity, handled above
}

namespace {

std::vector<int> stabilizer_generators(const RootSystem& rs, const Vec& lambda) {
  if (!is_dominant(lambda)) throw NonDominant("coset representatives require a dominant weight");
  std::vector<int> gens;
  for (int p = 0; p < rs.rank; ++p)
    if (lambda(p) == 0) gens.push_back(p);
  return gens;
}

}  // namespace

WeylElement coset_min(const RootSystem& rs, const WeylElement& w, const Vec& lambda) {
  auto gens = stabilizer_generators(rs, lambda);
  WeylElement v = w;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int p : gens) {
      Root image = apply_to_root(rs, v, Root(rs.simple_index[p], 1));
      if (image.sign < 0) {
        v = v * simple_reflection(rs, p);
        progressed = true;
      }
    }
  }
  return v;
}

WeylElement coset_max(const RootSystem& rs, const WeylElement& w, const Vec& lambda) {
  auto gens = stabilizer_generators(rs, lambda);
  WeylElement v = w;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int p : gens) {
      Root image = apply_to_root(rs, v, Root(rs.simple_index[p], 1));
      if (image.sign > 0) {
        v = v * simple_reflection(rs, p);
        progressed = true;
      }
    }
  }
  return v;
}

WeylElement stab_longest(const RootSystem& rs, const Vec& lambda) {
  return coset_max(rs, WeylElement::identity(rs.rank), lambda);
}

int star_involution(const RootSystem& rs, int p) {
  WeylElement wo = longest_element(rs);
  Vec image = -(wo.m * rs.weight_of(Root(rs.simple_index[p], 1)));
  Root r = rs.root_from_weight(image);
  if (r.sign < 0) throw InternalInvariant("-w_o(alpha_p) is not positive");
  for (int q = 0; q < rs.rank; ++q)
    if (rs.simple_index[q] == r.index) return q;
  throw InternalInvariant("-w_o(alpha_p) is not simple");
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs) {
  std::vector<WeylElement> out;
  std::set<Mat, MatLess> seen;
  std::deque<WeylElement> queue;
  queue.push_back(WeylElement::identity(rs.rank));
  seen.insert(queue.front().m);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (int p = 0; p < rs.rank; ++p) {
      WeylElement next = w * simple_reflection(rs, p);
      if (seen.insert(next.m).second) queue.push_back(next);
    }
  }
  return out;
}

}  // namespace alcove

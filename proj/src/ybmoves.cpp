#include "alcove/ybmoves.hpp"

#include <algorithm>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

// Alternating dihedral word of the given length: 0 stands for s_alpha,
// 1 for s_beta.
std::vector<int> alternating_word(int len, bool start_alpha) {
  std::vector<int> word(len);
  for (int i = 0; i < len; ++i) word[i] = (i % 2 == 0) == start_alpha ? 0 : 1;
  return word;
}

}  // namespace

const DihedralContext::Element& DihedralContext::lookup(const WeylElement& w) const {
  for (const Element& e : elements)
    if (e.w == w) return e;
  throw InternalInvariant("element does not belong to the dihedral subgroup");
}

DihedralContext make_dihedral_context(const RootSystem& rs, Root alpha, Root beta) {
  DihedralContext ctx;
  ctx.alpha = Root(alpha.index, 1);
  ctx.beta = Root(beta.index, 1);

  WeylElement sa = reflection(rs, ctx.alpha);
  WeylElement sb = reflection(rs, ctx.beta);

  // Order 2q of <s_alpha, s_beta>: the length of the alternating word that
  // first returns to a previously seen element.
  std::vector<WeylElement> gens{sa, sb};
  int q = 1;
  {
    WeylElement rot = sa * sb;
    WeylElement acc = rot;
    while (!acc.is_identity()) {
      acc = acc * rot;
      ++q;
      if (q > 6) throw InternalInvariant("dihedral subgroup order exceeds 12");
    }
  }
  ctx.q = q;

  // Reflection ordering: beta_k = w_{k-1}(delta(k)), w_k the alternating
  // product s_alpha s_beta ... of length k.
  WeylElement w = WeylElement::identity(rs.rank);
  for (int k = 1; k <= q; ++k) {
    Root delta = (k % 2 == 1) ? ctx.alpha : ctx.beta;
    Root image = apply_to_root(rs, w, delta);
    if (image.sign < 0) throw InternalInvariant("reflection ordering hit a negative root");
    ctx.order.push_back(image);
    w = w * (k % 2 == 1 ? sa : sb);
  }
  if (!(ctx.order.front() == ctx.alpha) || !(ctx.order.back() == ctx.beta))
    throw InternalInvariant("reflection ordering does not end at beta");

  // Element table.
  auto add = [&](int len, bool start_alpha) {
    DihedralContext::Element e;
    e.w = WeylElement::identity(rs.rank);
    for (int g : alternating_word(len, start_alpha)) e.w = e.w * (g == 0 ? sa : sb);
    e.len = len;
    if (len == 0) {
      e.desc_alpha = e.desc_beta = false;
    } else if (len == q) {
      e.desc_alpha = e.desc_beta = true;
    } else {
      bool ends_alpha = (len % 2 == 1) == start_alpha;
      e.desc_alpha = ends_alpha;
      e.desc_beta = !ends_alpha;
    }
    for (const auto& have : ctx.elements)
      if (have.w == e.w) return;
    ctx.elements.push_back(std::move(e));
  };
  add(0, true);
  for (int len = 1; len < q; ++len) {
    add(len, true);
    add(len, false);
  }
  add(q, true);
  if (static_cast<int>(ctx.elements.size()) != 2 * q)
    throw InternalInvariant("dihedral element table has wrong size");
  return ctx;
}

CosetSplit dihedral_coset_split(const RootSystem& rs, const DihedralContext& ctx,
                                const WeylElement& w) {
  WeylElement sa = reflection(rs, ctx.alpha);
  WeylElement sb = reflection(rs, ctx.beta);
  WeylElement floor = w;
  // floor(w) is the unique coset element sending both subsystem simples to
  // positive roots; greedy right descents reach it.
  bool progressed = true;
  while (progressed) {
    progressed = false;
    if (apply_to_root(rs, floor, ctx.alpha).sign < 0) {
      floor = floor * sa;
      progressed = true;
    } else if (apply_to_root(rs, floor, ctx.beta).sign < 0) {
      floor = floor * sb;
      progressed = true;
    }
  }
  const auto& e = ctx.lookup(floor.inverse() * w);
  CosetSplit split;
  split.floor = floor;
  split.len = e.len;
  split.desc_alpha = e.desc_alpha;
  split.desc_beta = e.desc_beta;
  if (e.len > 0 && e.len < ctx.q) {
    bool ends_alpha = e.desc_alpha;
    bool start_alpha = (e.len % 2 == 1) == ends_alpha;
    split.word = alternating_word(e.len, start_alpha);
  } else if (e.len == ctx.q) {
    split.word = alternating_word(e.len, true);
  }
  return split;
}

namespace {

std::vector<int> range_set(int lo, int hi) {  // {lo, lo+1, ..., hi}
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

enum class YbCase { C0, C11, C12, C13, C14, C21, C22, C23, C24, C3 };

YbCase classify(const DihedralContext& ctx, const CosetSplit& u, const CosetSplit& w) {
  const int q = ctx.q;
  const int a = u.len, b = w.len;
  // Ascent means the right multiplication increases dihedral length.
  bool u_asc_a = !u.desc_alpha, u_asc_b = !u.desc_beta;
  bool w_asc_a = !w.desc_alpha, w_asc_b = !w.desc_beta;
  if (a == b) return YbCase::C0;
  if (b - a == 1) {
    if (u_asc_a && w.desc_alpha) return YbCase::C11;
    if (u.desc_beta && w_asc_a) return YbCase::C12;
    if (u_asc_b && w.desc_beta) return YbCase::C13;
    if (u.desc_alpha && w_asc_b) return YbCase::C14;
    throw PatternMismatch("no dihedral case matches a length-1 step");
  }
  if (b - a < q) {
    if (u_asc_a && w_asc_b) return YbCase::C21;
    if (u.desc_beta && w.desc_beta) return YbCase::C22;
    if (u_asc_b && w_asc_a) return YbCase::C23;
    if (u.desc_alpha && w.desc_alpha) return YbCase::C24;
    throw PatternMismatch("no dihedral case matches a length-" + std::to_string(b - a) +
                          " step");
  }
  if (a == 0 && b == q) return YbCase::C3;
  throw NotComparable("dihedral lengths differ by more than q");
}

std::vector<int> case_subset(YbCase c, int q, int a, int b) {
  switch (c) {
    case YbCase::C0: return {};
    case YbCase::C11: return {1};
    case YbCase::C12: return {q - a};
    case YbCase::C13: return {q};
    case YbCase::C14: return {a + 1};
    case YbCase::C21: {
      std::vector<int> out{1};
      for (int v = a + 2; v <= b; ++v) out.push_back(v);
      return out;
    }
    case YbCase::C22: {
      std::vector<int> out{1};
      for (int v = a + 2; v <= b - 1; ++v) out.push_back(v);
      out.push_back(q);
      return out;
    }
    case YbCase::C23: {
      std::vector<int> out = range_set(a + 1, b - 1);
      out.push_back(q);
      return out;
    }
    case YbCase::C24: return range_set(a + 1, b);
    case YbCase::C3: return range_set(1, q);
  }
  throw InternalInvariant("unreachable");
}

std::vector<int> case_partner(YbCase c, int q, int a, int b) {
  switch (c) {
    case YbCase::C0: return {};
    case YbCase::C11: return case_subset(YbCase::C13, q, a, b);  // {1} -> {q}
    case YbCase::C13: return case_subset(YbCase::C11, q, a, b);  // {q} -> {1}
    case YbCase::C12: return case_subset(YbCase::C14, q, a, b);  // {q-a} -> {a+1}
    case YbCase::C14: return case_subset(YbCase::C12, q, a, b);  // {a+1} -> {q-a}
    case YbCase::C21: return case_subset(YbCase::C23, q, a, b);
    case YbCase::C23: return case_subset(YbCase::C21, q, a, b);
    case YbCase::C22: return case_subset(YbCase::C24, q, a, b);
    case YbCase::C24: return case_subset(YbCase::C22, q, a, b);
    case YbCase::C3: return range_set(1, q);
  }
  throw InternalInvariant("unreachable");
}

std::string subset_str(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace

std::vector<int> dihedral_chain_subset(const DihedralContext& ctx, const CosetSplit& ubar,
                                       const CosetSplit& wbar) {
  if (ubar.len > wbar.len || (ubar.len == wbar.len && ubar.word != wbar.word))
    throw NotComparable("ubar is not below wbar in the dihedral Bruhat order");
  YbCase c = classify(ctx, ubar, wbar);
  return case_subset(c, ctx.q, ubar.len, wbar.len);
}

std::vector<int> yb_local_involution(int q, int a, int b, const std::vector<int>& subset) {
  struct Row {
    YbCase lhs;
    bool ok;
  };
  // Applicability constraints straight from the case list.
  const bool c0 = a == b;
  const bool c1 = b - a == 1 && a >= 0 && b <= q;
  const bool c1mid = c1 && a > 0 && a < q - 1;
  const bool c2_open = 1 < b - a && b - a < q && b < q;   // cases 2.1 / 2.3
  const bool c2_closed = 1 < b - a && b - a < q && a > 0; // cases 2.2 / 2.4
  const bool c3 = a == 0 && b == q;

  std::vector<std::pair<YbCase, bool>> rows = {
      {YbCase::C0, c0},   {YbCase::C11, c1},       {YbCase::C13, c1},
      {YbCase::C12, c1mid}, {YbCase::C14, c1mid},  {YbCase::C21, c2_open},
      {YbCase::C23, c2_open}, {YbCase::C22, c2_closed}, {YbCase::C24, c2_closed},
      {YbCase::C3, c3}};
  for (const auto& [c, applicable] : rows) {
    if (!applicable) continue;
    if (case_subset(c, q, a, b) == subset) return case_partner(c, q, a, b);
  }
  throw PatternMismatch("subset " + subset_str(subset) + " matches no Y_{" +
                        std::to_string(q) + "," + std::to_string(a) + "," +
                        std::to_string(b) + "} pattern");
}

AdmissibleSubset yb_move(const RootSystem& rs, const LambdaChain& chain,
                         const YbWindow& window, const AdmissibleSubset& J) {
  if (!is_yb_window(rs, chain, window.offset, window.q))
    throw InvalidWindow("yb_move requires a valid window");
  DihedralContext ctx = make_dihedral_context(rs, Root(chain.roots[window.offset], 1),
                                              Root(chain.roots[window.offset + window.q - 1], 1));
  for (int k = 0; k < window.q; ++k)
    if (ctx.order[k].index != chain.roots[window.offset + k])
      throw PatternMismatch("window is not listed in its reflection ordering");

  std::vector<int> before, local, after;
  for (int j : J.positions) {
    if (j < window.offset) before.push_back(j);
    else if (j < window.offset + window.q) local.push_back(j - window.offset + 1);
    else after.push_back(j);
  }

  WeylElement u = WeylElement::identity(rs.rank);
  for (int j : before) u = u * reflection(rs, Root(chain.roots[j], 1));
  WeylElement w = u;
  for (int s : local) w = w * reflection(rs, ctx.order[s - 1]);

  CosetSplit su = dihedral_coset_split(rs, ctx, u);
  CosetSplit sw = dihedral_coset_split(rs, ctx, w);
  if (!(su.floor == sw.floor))
    throw InternalInvariant("u and w fell into different dihedral cosets");

  YbCase c = classify(ctx, su, sw);
  if (case_subset(c, ctx.q, su.len, sw.len) != local)
    throw PatternMismatch("window-local subset " + subset_str(local) +
                          " does not match the dihedral case table");
  std::vector<int> image = case_partner(c, ctx.q, su.len, sw.len);

  std::vector<int> positions = before;
  for (int s : image) positions.push_back(window.offset + s - 1);
  positions.insert(positions.end(), after.begin(), after.end());
  std::sort(positions.begin(), positions.end());

  LambdaChain reversed = apply_segment_reversal(rs, chain, window);
  return make_admissible(rs, reversed, positions);
}

AdmissibleSubset yb_move_search(const RootSystem& rs, const LambdaChain& chain,
                                const YbWindow& window, const AdmissibleSubset& J) {
  if (!is_yb_window(rs, chain, window.offset, window.q))
    throw InvalidWindow("yb_move_search requires a valid window");
  LambdaChain reversed = apply_segment_reversal(rs, chain, window);

  std::vector<int> before, after;
  for (int j : J.positions) {
    if (j < window.offset) before.push_back(j);
    else if (j >= window.offset + window.q) after.push_back(j);
  }
  WeylElement w_mark = WeylElement::identity(rs.rank);
  for (int j : J.positions) {
    if (j >= window.offset + window.q) break;
    w_mark = w_mark * reflection(rs, Root(chain.roots[j], 1));
  }

  std::vector<AdmissibleSubset> found;
  for (unsigned mask = 0; mask < (1u << window.q); ++mask) {
    std::vector<int> candidate = before;
    for (int k = 0; k < window.q; ++k)
      if (mask & (1u << k)) candidate.push_back(window.offset + k);
    candidate.insert(candidate.end(), after.begin(), after.end());
    if (!is_admissible(rs, reversed, candidate)) continue;
    WeylElement w_cand = WeylElement::identity(rs.rank);
    for (int j : candidate) {
      if (j >= window.offset + window.q) break;
      w_cand = w_cand * reflection(rs, Root(reversed.roots[j], 1));
    }
    if (!(w_cand == w_mark)) continue;
    found.push_back(make_admissible(rs, reversed, candidate));
  }
  if (found.size() != 1)
    throw UniquenessViolation("expected exactly one window completion, found " +
                              std::to_string(found.size()));
  return found.front();
}

Bijection composed_bijection_along(const RootSystem& rs, const LambdaChain& from,
                                   const std::vector<YbWindow>& moves) {
  std::vector<AdmissibleSubset> current = enumerate_admissible(rs, from);
  Bijection bij;
  std::vector<std::vector<int>> origin;
  origin.reserve(current.size());
  for (const auto& J : current) origin.push_back(J.positions);

  LambdaChain chain = from;
  for (const YbWindow& mv : moves) {
    for (auto& J : current) J = yb_move(rs, chain, mv, J);
    chain = apply_segment_reversal(rs, chain, mv);
  }
  for (std::size_t i = 0; i < current.size(); ++i)
    bij.map[origin[i]] = current[i].positions;
  return bij;
}

Bijection composed_bijection(const RootSystem& rs, const LambdaChain& from,
                             const LambdaChain& to, const ConnectOptions& opts) {
  return composed_bijection_along(rs, from, connect_chains(rs, from, to, opts));
}

}  // namespace alcove

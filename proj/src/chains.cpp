#include "alcove/chains.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "alcove/errors.hpp"

namespace alcove {

Vec affine_reflect(const RootSystem& rs, const Vec& weight, const AffineReflection& ar) {
  Int c = pairing(rs, weight, ar.root) - ar.level;
  return weight - c * rs.weight_of(ar.root);
}

namespace {

std::vector<Int> compute_levels(const std::vector<int>& roots) {
  std::vector<Int> levels(roots.size(), 0);
  std::map<int, Int> seen;
  for (std::size_t i = 0; i < roots.size(); ++i) levels[i] = seen[roots[i]]++;
  return levels;
}

std::optional<int> detect_head(const std::vector<Int>& levels) {
  int q = 0;
  while (q < static_cast<int>(levels.size()) && levels[q] == 0) ++q;
  for (int i = q; i < static_cast<int>(levels.size()); ++i)
    if (levels[i] == 0) return std::nullopt;
  return q;
}

std::string root_name(const RootSystem& rs, int idx) {
  std::ostringstream os;
  os << "root[" << idx << "]=(" << rs.positive[idx].root.transpose() << ")";
  return os.str();
}

}  // namespace

LambdaChain chain_from_roots(const RootSystem& rs, const Vec& lambda,
                             std::vector<int> root_indices) {
  if (!is_dominant(lambda)) throw NonDominant("lambda-chains require a dominant weight");
  if (lambda.size() != rs.rank) throw ParseError("lambda has wrong rank");
  for (int idx : root_indices)
    if (idx < 0 || idx >= rs.num_positive()) throw ParseError("root index out of range");
  LambdaChain chain;
  chain.lambda = lambda;
  chain.roots = std::move(root_indices);
  chain.levels0 = compute_levels(chain.roots);
  chain.head_len = detect_head(chain.levels0);
  return chain;
}

LambdaChain lex_lambda_chain(const RootSystem& rs, const Vec& lambda) {
  if (!is_dominant(lambda)) throw NonDominant("lex chain requires a dominant weight");
  if (lambda.size() != rs.rank) throw ParseError("lambda has wrong rank");

  struct Item {
    int root;
    Int k;
    Int den;  // <lambda, alpha^vee>
  };
  std::vector<Item> items;
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    Int den = rs.positive[idx].coroot.dot(lambda);
    for (Int k = 0; k < den; ++k) items.push_back({idx, k, den});
  }

  // Sort key: (k, c_r, ..., c_1) / <lambda, alpha^vee> compared componentwise
  // by cross multiplication. Reading the coroot coordinates from the last
  // simple root down makes the sorted chain start with the earliest simple
  // roots, matching the reversal-stable presentation used everywhere else.
  auto component = [&](const Item& it, int pos) -> Int {
    if (pos == 0) return it.k;
    return rs.positive[it.root].coroot(rs.rank - pos);
  };
  auto cmp = [&](const Item& a, const Item& b) {
    for (int pos = 0; pos <= rs.rank; ++pos) {
      Int lhs = component(a, pos) * b.den;
      Int rhs = component(b, pos) * a.den;
      if (lhs != rhs) return lhs < rhs;
    }
    throw InternalInvariant("sort keys of distinct chain items coincide");
  };
  std::sort(items.begin(), items.end(), cmp);

  std::vector<int> roots;
  roots.reserve(items.size());
  for (const Item& it : items) roots.push_back(it.root);
  LambdaChain chain = chain_from_roots(rs, lambda, std::move(roots));
  if (!chain.special_form())
    throw InternalInvariant("lex chain is not in special form");
  return chain;
}

std::optional<ChainViolation> validate_lambda_chain(const RootSystem& rs,
                                                    const Vec& lambda,
                                                    const std::vector<int>& roots) {
  std::vector<Int> count(rs.positive.size(), 0);
  for (int idx : roots) ++count[idx];
  for (int idx = 0; idx < rs.num_positive(); ++idx) {
    Int want = rs.positive[idx].coroot.dot(lambda);
    if (count[idx] != want) {
      std::ostringstream os;
      os << root_name(rs, idx) << " occurs " << count[idx] << " times, expected " << want;
      return ChainViolation{"R1", os.str()};
    }
  }
  for (const auto& triple : rs.coroot_triples) {
    // Subsequence over {a, b, c} must read x c x c ... with x in {a, b}.
    int a = triple[0], b = triple[1], c = triple[2];
    bool expect_pair_root = true;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      int idx = roots[i];
      if (idx != a && idx != b && idx != c) continue;
      bool is_c = idx == c;
      if (expect_pair_root == is_c) {
        std::ostringstream os;
        os << "triple (" << root_name(rs, a) << ", " << root_name(rs, b) << ", "
           << root_name(rs, c) << ") breaks pairing at position " << i;
        return ChainViolation{"R2", os.str()};
      }
      expect_pair_root = !expect_pair_root;
    }
    if (!expect_pair_root) {
      std::ostringstream os;
      os << "triple (" << root_name(rs, a) << ", " << root_name(rs, b) << ", "
         << root_name(rs, c) << ") ends with an unpaired " << root_name(rs, c);
      return ChainViolation{"R2", os.str()};
    }
  }
  return std::nullopt;
}

LambdaChain reverse_chain(const RootSystem& rs, const LambdaChain& chain) {
  if (!chain.special_form())
    throw NotSpecialForm("reverse_chain requires a special-form chain");
  int q = *chain.head_len;
  int n = chain.size() - q;
  WeylElement wol = stab_longest(rs, chain.lambda);
  std::vector<int> roots(chain.roots.begin(), chain.roots.begin() + q);
  for (int i = 1; i <= n; ++i) {
    Root image = apply_to_root(rs, wol, Root(chain.roots[q + n - i], 1));
    if (image.sign < 0)
      throw InternalInvariant("w_o^lambda maps a chain root to a negative root");
    roots.push_back(image.index);
  }
  LambdaChain rev = chain_from_roots(rs, chain.lambda, std::move(roots));
  if (!rev.special_form())
    throw InternalInvariant("reversed chain lost special form");
  return rev;
}

bool is_yb_window(const RootSystem& rs, const LambdaChain& chain, int offset, int q) {
  if (q != 2 && q != 3 && q != 4 && q != 6) return false;
  if (offset < 0 || offset + q > chain.size()) return false;
  std::set<int> window(chain.roots.begin() + offset, chain.roots.begin() + offset + q);
  if (static_cast<int>(window.size()) != q) return false;
  // Closure of the window under its own reflections; a window must be the
  // full positive system of the rank-two subsystem it generates.
  std::set<int> closure = window;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int gen : std::set<int>(closure)) {
      for (int idx : std::set<int>(closure)) {
        Root image = reflect_root(rs, Root(idx, 1), Root(gen, 1));
        if (closure.insert(image.index).second) grew = true;
      }
    }
    if (static_cast<int>(closure.size()) > q) return false;
  }
  if (closure != window) return false;
  Mat span(q, rs.rank);
  int row = 0;
  for (int idx : window) span.row(row++) = rs.positive[idx].root.transpose();
  return integer_rank(span) == 2;
}

std::vector<YbWindow> find_yb_windows(const RootSystem& rs, const LambdaChain& chain) {
  std::vector<YbWindow> out;
  for (int offset = 0; offset < chain.size(); ++offset)
    for (int q : {2, 3, 4, 6})
      if (is_yb_window(rs, chain, offset, q))
        out.push_back({offset, q, Root(chain.roots[offset], 1),
                       Root(chain.roots[offset + q - 1], 1)});
  return out;
}

LambdaChain apply_segment_reversal(const RootSystem& rs, const LambdaChain& chain,
                                   const YbWindow& window) {
  if (!is_yb_window(rs, chain, window.offset, window.q))
    throw InvalidWindow("segment is not a rank-two window");
  std::vector<int> roots = chain.roots;
  std::reverse(roots.begin() + window.offset, roots.begin() + window.offset + window.q);
  return chain_from_roots(rs, chain.lambda, std::move(roots));
}

std::vector<YbWindow> connect_chains(const RootSystem& rs, const LambdaChain& from,
                                     const LambdaChain& to, const ConnectOptions& opts) {
  if (from.lambda != to.lambda)
    throw ParseError("connect_chains requires chains for the same weight");
  if (from.roots == to.roots) return {};

  struct Node {
    std::vector<int> roots;
    int parent;
    YbWindow move;
  };
  std::vector<Node> nodes;
  std::map<std::vector<int>, int, std::less<>> seen;
  nodes.push_back({from.roots, -1, {}});
  seen[from.roots] = 0;
  std::deque<int> queue{0};

  int head = opts.head_disjoint && from.special_form() ? *from.head_len : 0;

  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    LambdaChain chain = chain_from_roots(rs, from.lambda, nodes[cur].roots);
    std::vector<YbWindow> windows = find_yb_windows(rs, chain);
    if (opts.head_disjoint) {
      std::erase_if(windows, [&](const YbWindow& w) { return w.offset < head; });
    }
    if (opts.order == WindowOrder::Reverse) std::reverse(windows.begin(), windows.end());
    for (const YbWindow& w : windows) {
      std::vector<int> next = nodes[cur].roots;
      std::reverse(next.begin() + w.offset, next.begin() + w.offset + w.q);
      auto [it, inserted] = seen.try_emplace(next, static_cast<int>(nodes.size()));
      if (!inserted) continue;
      nodes.push_back({std::move(next), cur, w});
      if (nodes.back().roots == to.roots) {
        std::vector<YbWindow> moves;
        for (int at = static_cast<int>(nodes.size()) - 1; at > 0; at = nodes[at].parent)
          moves.push_back(nodes[at].move);
        std::reverse(moves.begin(), moves.end());
        return moves;
      }
      if (nodes.size() > opts.budget)
        throw NotConnected("segment-reversal search exceeded node budget");
      queue.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  throw NotConnected("target chain unreachable by segment reversals");
}

}  // namespace alcove

#ifndef ALCOVE_CHAINS_HPP
#define ALCOVE_CHAINS_HPP

#include <optional>
#include <string>
#include <vector>

#include "alcove/rootsys.hpp"
#include "alcove/types.hpp"

namespace alcove {

// s_{alpha,k}: x -> x - (<x, alpha^vee> - k) alpha.
struct AffineReflection {
  Root root;   // positive
  Int level = 0;
};

Vec affine_reflect(const RootSystem& rs, const Vec& weight, const AffineReflection& ar);

// Ordered sequence of positive roots attached to a dominant weight.
// Positions are 0-based throughout the library.
struct LambdaChain {
  Vec lambda;
  std::vector<int> roots;          // indices into RootSystem::positive
  std::vector<Int> levels0;        // l_i = #{j < i : beta_j = beta_i}
  std::optional<int> head_len;     // set iff all first occurrences form a prefix

  int size() const { return static_cast<int>(roots.size()); }
  bool special_form() const { return head_len.has_value(); }

  // Affine reflection attached to position i: s_{beta_i, -l_i}.
  AffineReflection hat(int i) const { return {Root(roots[i], 1), -levels0[i]}; }
};

LambdaChain chain_from_roots(const RootSystem& rs, const Vec& lambda,
                             std::vector<int> root_indices);

// The chain obtained by sorting the index pairs (alpha, k) by their fractional
// sort keys; always in special form.
LambdaChain lex_lambda_chain(const RootSystem& rs, const Vec& lambda);

struct ChainViolation {
  std::string rule;     // "R1" or "R2"
  std::string detail;
};

// ok iff the sequence satisfies (R1) and (R2) for lambda.
std::optional<ChainViolation> validate_lambda_chain(const RootSystem& rs,
                                                    const Vec& lambda,
                                                    const std::vector<int>& root_indices);
inline std::optional<ChainViolation> validate_lambda_chain(const RootSystem& rs,
                                                           const LambdaChain& chain) {
  return validate_lambda_chain(rs, chain.lambda, chain.roots);
}

// Head kept, tail reversed and mapped through w_o^lambda. Involution.
LambdaChain reverse_chain(const RootSystem& rs, const LambdaChain& chain);

// A contiguous segment holding the full positive system of a rank-two
// subsystem, each root exactly once.
struct YbWindow {
  int offset = 0;  // first position, 0-based
  int q = 0;       // segment length: 2, 3, 4 or 6
  Root alpha;      // first root of the segment
  Root beta;       // last root of the segment

  bool operator==(const YbWindow& o) const { return offset == o.offset && q == o.q; }
};

bool is_yb_window(const RootSystem& rs, const LambdaChain& chain, int offset, int q);
std::vector<YbWindow> find_yb_windows(const RootSystem& rs, const LambdaChain& chain);

LambdaChain apply_segment_reversal(const RootSystem& rs, const LambdaChain& chain,
                                   const YbWindow& window);

enum class WindowOrder { Forward, Reverse };

struct ConnectOptions {
  bool head_disjoint = false;       // only windows disjoint from the head
  std::size_t budget = 200000;      // BFS node budget
  WindowOrder order = WindowOrder::Forward;
};

// Breadth-first search for a sequence of segment reversals carrying `from`
// into `to`. The returned windows apply sequentially, each to the chain
// produced by its predecessors.
std::vector<YbWindow> connect_chains(const RootSystem& rs, const LambdaChain& from,
                                     const LambdaChain& to,
                                     const ConnectOptions& opts = {});

}  // namespace alcove

#endif

#include "alcove/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "alcove/admissible.hpp"
#include "alcove/characters.hpp"
#include "alcove/crystal.hpp"
#include "alcove/errors.hpp"
#include "alcove/evacuation.hpp"
#include "alcove/ybmoves.hpp"

namespace alcove {

namespace {

// Collects pass/fail per named check; the first failing instance is kept.
struct Collector {
  SuiteReport report;

  CheckResult& at(const std::string& name) {
    for (auto& c : report.checks)
      if (c.name == name) return c;
    report.checks.push_back({name, true, 0, ""});
    return report.checks.back();
  }
  void tally(const std::string& name, bool ok, const std::string& detail = "") {
    CheckResult& c = at(name);
    ++c.count;
    if (!ok && c.pass) {
      c.pass = false;
      c.detail = detail;
    }
  }
};

std::string positions_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json entry{{"name", c.name}, {"pass", c.pass}, {"count", c.count}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks_json.push_back(entry);
  }
  return nlohmann::json{{"suite", suite}, {"pass", pass()}, {"checks", checks_json}};
}

SuiteReport verify_yb(const RootSystem& rs, const LambdaChain& chain) {
  Collector col;
  col.report.suite = "yb";
  std::vector<AdmissibleSubset> subsets = enumerate_admissible(rs, chain);
  std::vector<YbWindow> windows = find_yb_windows(rs, chain);
  col.tally("windows-found", true);
  col.at("windows-found").count = static_cast<long>(windows.size());

  for (const YbWindow& window : windows) {
    LambdaChain reversed = apply_segment_reversal(rs, chain, window);
    std::map<std::vector<int>, int> images;
    for (const AdmissibleSubset& J : subsets) {
      AdmissibleSubset moved = yb_move(rs, chain, window, J);
      col.tally("weight-preserved", moved.mu == J.mu, positions_str(J.positions));
      col.tally("weyl-preserved", moved.w == J.w, positions_str(J.positions));
      AdmissibleSubset searched = yb_move_search(rs, chain, window, J);
      col.tally("table-equals-search", moved.positions == searched.positions,
                positions_str(J.positions));
      ++images[moved.positions];

      AdmissibleSubset back = yb_move(rs, reversed, window, moved);
      col.tally("double-move-identity", back.positions == J.positions,
                positions_str(J.positions));

      for (int p = 0; p < rs.rank; ++p) {
        auto fj = lower(rs, chain, J, p);
        auto fyj = lower(rs, reversed, moved, p);
        bool both = fj.has_value() == fyj.has_value();
        col.tally("comm-f-y-defined", both, positions_str(J.positions));
        if (fj && fyj) {
          AdmissibleSubset yfj = yb_move(rs, chain, window, *fj);
          col.tally("comm-f-y", yfj.positions == fyj->positions,
                    positions_str(J.positions));
        }
      }
    }
    bool injective = true;
    for (const auto& [pos, hits] : images) injective = injective && hits == 1;
    col.tally("bijective", injective && images.size() == subsets.size());
  }
  return col.report;
}

SuiteReport verify_evac(const RootSystem& rs, const LambdaChain& chain) {
  Collector col;
  col.report.suite = "evac";
  Evacuator evac(rs, chain);
  const LambdaChain& reversed = evac.reversed_chain();
  WeylElement wo = longest_element(rs);

  std::vector<AdmissibleSubset> subsets = enumerate_admissible(rs, chain);
  Bijection crystal_side = evacuation_map_via_crystal(rs, chain);

  std::vector<int> head_positions;
  for (int j = 0; j < *chain.head_len; ++j) head_positions.push_back(j);

  std::map<std::vector<int>, std::vector<int>> star;
  for (const AdmissibleSubset& J : subsets) {
    AdmissibleSubset rev = evac.reverse(J);
    col.tally("mu-rev", rev.mu == Vec(wo.m * J.mu), positions_str(J.positions));
    col.tally("keys-rev-0", rev.kappa0 && *rev.kappa0 == coset_min(rs, wo * J.w, chain.lambda),
              positions_str(J.positions));
    col.tally("keys-rev-1", rev.w == coset_min(rs, wo * *J.kappa0, chain.lambda),
              positions_str(J.positions));
    AdmissibleSubset back = reverse_subset(rs, reversed, rev);
    col.tally("rev-involution", back.positions == J.positions, positions_str(J.positions));

    for (int p = 0; p < rs.rank; ++p) {
      int ps = star_involution(rs, p);
      auto fj = lower(rs, chain, J, p);
      auto erev = raise(rs, reversed, rev, ps);
      col.tally("comm-f-rev-defined", fj.has_value() == erev.has_value(),
                positions_str(J.positions));
      if (fj && erev) {
        AdmissibleSubset frev = evac.reverse(*fj);
        col.tally("comm-f-rev", frev.positions == erev->positions,
                  positions_str(J.positions));
      }
    }

    AdmissibleSubset image = evac.evacuate(J);
    star[J.positions] = image.positions;
    col.tally("cond2-weight", image.mu == Vec(wo.m * J.mu), positions_str(J.positions));
    col.tally("cond2-key0", image.kappa0 && *image.kappa0 == coset_min(rs, wo * J.w, chain.lambda),
              positions_str(J.positions));
    col.tally("cond2-key1", image.w == coset_min(rs, wo * *J.kappa0, chain.lambda),
              positions_str(J.positions));
    auto it = crystal_side.map.find(J.positions);
    col.tally("matches-crystal-oracle",
              it != crystal_side.map.end() && it->second == image.positions,
              positions_str(J.positions));
  }

  for (const AdmissibleSubset& J : subsets) {
    const auto& once = star.at(J.positions);
    col.tally("star-involution", star.count(once) && star.at(once) == J.positions,
              positions_str(J.positions));
    for (int p = 0; p < rs.rank; ++p) {
      int ps = star_involution(rs, p);
      auto fj = lower(rs, chain, J, p);
      if (!fj) continue;
      AdmissibleSubset jstar = make_admissible(rs, chain, star.at(J.positions));
      auto ejs = raise(rs, chain, jstar, ps);
      bool ok = ejs && star.at(fj->positions) == ejs->positions;
      col.tally("cond1", ok, positions_str(J.positions));
    }
  }
  col.tally("min-max-swap", star.at(std::vector<int>{}) == head_positions &&
                                star.at(head_positions) == std::vector<int>{});
  return col.report;
}

SuiteReport verify_demazure(const RootSystem& rs, const LambdaChain& chain) {
  Collector col;
  col.report.suite = "demazure";
  for (const WeylElement& u : enumerate_weyl_group(rs)) {
    CharacterPoly dec = demazure_decreasing(rs, chain, u);
    CharacterPoly fil = demazure_filtered(rs, chain, u);
    CharacterPoly ora = demazure_oracle(rs, chain.lambda, u);
    std::ostringstream who;
    who << "l(u)=" << length(rs, u);
    col.tally("decreasing-equals-oracle", dec == ora, who.str());
    col.tally("filtered-equals-oracle", fil == ora, who.str());
  }
  return col.report;
}

SuiteReport verify_rops(const RootSystem& rs, const LambdaChain& chain) {
  Collector col;
  col.report.suite = "rops";
  col.tally("ybform", r_operator_check(rs, chain));

  // B_alpha X^lambda = X^{s_alpha(lambda)} B_alpha on random inputs.
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> pick_root(0, rs.num_positive() - 1);
  std::uniform_int_distribution<Int> coord(-3, 3);
  std::vector<WeylElement> group = enumerate_weyl_group(rs);
  std::uniform_int_distribution<std::size_t> pick_w(0, group.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Root alpha(pick_root(rng), 1);
    Vec lambda(rs.rank);
    for (int i = 0; i < rs.rank; ++i) lambda(i) = coord(rng);
    KAlgebraElement v;
    for (int t = 0; t < 3; ++t) {
      Vec num(rs.rank);
      for (int i = 0; i < rs.rank; ++i) num(i) = coord(rng);
      v.add(num, group[pick_w(rng)].m, 1 + (trial + t) % 3);
    }
    KAlgebraElement lhs = apply_B(rs, alpha, apply_X(rs, lambda, v));
    KAlgebraElement rhs = apply_X(rs, reflect_weight(rs, lambda, alpha), apply_B(rs, alpha, v));
    col.tally("commute", lhs == rhs);
  }
  return col.report;
}

SuiteReport verify_crystal(const RootSystem& rs, const LambdaChain& chain) {
  Collector col;
  col.report.suite = "crystal";
  CrystalGraph g = build_graph(rs, chain);
  col.tally("node-count-equals-dim",
            static_cast<Int>(g.nodes.size()) == weyl_dim_oracle(rs, chain.lambda));
  CharacterPoly from_graph;
  for (const AdmissibleSubset& J : g.nodes) from_graph.add(J.mu);
  col.tally("character-equals-oracle",
            from_graph == demazure_oracle(rs, chain.lambda, longest_element(rs)));

  for (const auto& [from, p, to] : g.edges) {
    col.tally("edge-grading",
              g.nodes[to].mu == Vec(g.nodes[from].mu - rs.weight_of(Root(rs.simple_index[p], 1))));
    auto back = raise(rs, chain, g.nodes[to], p);
    col.tally("raise-inverts-lower", back && back->positions == g.nodes[from].positions);
  }

  int sources = 0, sinks = 0;
  for (std::size_t id = 0; id < g.nodes.size(); ++id) {
    bool any_in = false, any_out = false;
    for (int p = 0; p < rs.rank; ++p) {
      any_in = any_in || g.in_edge[id][p] >= 0;
      any_out = any_out || g.out_edge[id][p] >= 0;
    }
    sources += !any_in;
    sinks += !any_out;
  }
  col.tally("unique-source", sources == 1 && g.source >= 0 &&
                                 g.nodes[g.source].positions.empty());
  if (chain.special_form()) col.tally("unique-sink", sinks == 1 && g.sink >= 0);

  for (const AdmissibleSubset& J : g.nodes) {
    for (int p = 0; p < rs.rank; ++p) {
      SigmaSequence s = sigma_and_levels(rs, chain, J, p);
      if (s.max_level > 0) {
        // w(F_p(J)) = w(J) when the maximum is attained inside I(J,p), and
        // s_p w(J) when only l_inf attains it.
        bool max_inside = std::find(s.levels.begin(), s.levels.end(), s.max_level) !=
                          s.levels.end();
        AdmissibleSubset fj = *lower(rs, chain, J, p);
        WeylElement expect = max_inside ? J.w : WeylElement(simple_reflection(rs, p) * J.w);
        col.tally("lower-weyl-relation", fj.w == expect, positions_str(J.positions));
      }
      Int f_steps = 0;
      AdmissibleSubset cur = J;
      while (auto next = lower(rs, chain, cur, p)) {
        cur = std::move(*next);
        ++f_steps;
      }
      col.tally("f-string-length", f_steps == s.max_level, positions_str(J.positions));
      Int e_steps = 0;
      cur = J;
      while (auto next = raise(rs, chain, cur, p)) {
        cur = std::move(*next);
        ++e_steps;
      }
      col.tally("e-string-length", e_steps == std::max<Int>(0, s.max_level - s.level_inf),
                positions_str(J.positions));

      AdmissibleSubset sp = weyl_action(rs, chain, J, p);
      col.tally("weyl-action-weight",
                sp.mu == reflect_weight(rs, J.mu, Root(rs.simple_index[p], 1)),
                positions_str(J.positions));
      AdmissibleSubset spp = weyl_action(rs, chain, sp, p);
      col.tally("weyl-action-involution", spp.positions == J.positions,
                positions_str(J.positions));
    }
  }
  return col.report;
}

std::vector<std::string> registered_suites() {
  return {"yb", "evac", "demazure", "rops", "crystal", "all"};
}

std::vector<SuiteReport> run_suites(const std::string& name, const RootSystem& rs,
                                    const LambdaChain& chain) {
  std::vector<SuiteReport> out;
  bool all = name == "all";
  bool known = all;
  if (all || name == "yb") out.push_back(verify_yb(rs, chain)), known = true;
  if (all || name == "evac") out.push_back(verify_evac(rs, chain)), known = true;
  if (all || name == "demazure") out.push_back(verify_demazure(rs, chain)), known = true;
  if (all || name == "rops") out.push_back(verify_rops(rs, chain)), known = true;
  if (all || name == "crystal") out.push_back(verify_crystal(rs, chain)), known = true;
  if (!known) throw UnknownSuite("unknown suite '" + name + "'");
  return out;
}

}  // namespace alcove

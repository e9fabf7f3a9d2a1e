#ifndef ALCOVE_VERIFY_HPP
#define ALCOVE_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "alcove/chains.hpp"
#include "alcove/rootsys.hpp"

namespace alcove {

struct CheckResult {
  std::string name;
  bool pass = false;
  long count = 0;        // number of instances exercised
  std::string detail;    // first failure, when any
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

// Theorem-level property batteries over one chain.
SuiteReport verify_yb(const RootSystem& rs, const LambdaChain& chain);
SuiteReport verify_evac(const RootSystem& rs, const LambdaChain& chain);
SuiteReport verify_demazure(const RootSystem& rs, const LambdaChain& chain);
SuiteReport verify_rops(const RootSystem& rs, const LambdaChain& chain);
SuiteReport verify_crystal(const RootSystem& rs, const LambdaChain& chain);

std::vector<std::string> registered_suites();
// Runs one named suite, or every suite for "all".
std::vector<SuiteReport> run_suites(const std::string& name, const RootSystem& rs,
                                    const LambdaChain& chain);

}  // namespace alcove

#endif

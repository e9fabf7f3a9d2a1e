#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcove/admissible.hpp"
#include "alcove/characters.hpp"
#include "alcove/chains.hpp"
#include "alcove/crystal.hpp"
#include "alcove/errors.hpp"
#include "alcove/evacuation.hpp"
#include "alcove/io.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/verify.hpp"
#include "alcove/ybmoves.hpp"

namespace {

using alcove::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;

struct Timer {
  bool enabled = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void phase(const std::string& name) {
    if (!enabled) return;
    auto now = std::chrono::steady_clock::now();
    double sec = std::chrono::duration<double>(now - start).count();
    std::cerr << "[time] " << name << ": " << sec << "s\n";
    start = now;
  }
};

std::vector<alcove::Int> parse_csv(const std::string& text) {
  std::vector<alcove::Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> word;
  for (alcove::Int v : parse_csv(text)) {
    if (v < 1 || v > rank) throw alcove::ParseError("word letters must lie in 1..rank");
    word.push_back(static_cast<int>(v) - 1);
  }
  return word;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw alcove::ParseError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
  }
}

struct ChainArgs {
  std::string type;
  std::string lambda_csv;
  std::string chain_file;  // optional; lex chain when empty

  alcove::RootSystem system() const { return alcove::build_root_system(type); }
  alcove::Vec lambda(const alcove::RootSystem& rs) const {
    auto coords = parse_csv(lambda_csv);
    if (static_cast<int>(coords.size()) != rs.rank)
      throw alcove::ParseError("--lambda needs " + std::to_string(rs.rank) + " coordinates");
    return alcove::vec_of(coords);
  }
  alcove::LambdaChain chain(const alcove::RootSystem& rs) const {
    if (chain_file.empty()) return alcove::lex_lambda_chain(rs, lambda(rs));
    alcove::LambdaChain c = alcove::chain_from_json(rs, read_json_file(chain_file));
    if (c.lambda != lambda(rs))
      throw alcove::ParseError("chain file weight disagrees with --lambda");
    return c;
  }
};

void add_chain_args(CLI::App* cmd, ChainArgs& args, bool with_chain_file = true) {
  cmd->add_option("--type", args.type, "root system, e.g. A2, B3, G2")->required();
  cmd->add_option("--lambda", args.lambda_csv, "dominant weight coordinates, comma separated")
      ->required();
  if (with_chain_file)
    cmd->add_option("--chain", args.chain_file, "chain JSON file (default: lex chain)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alcove: exact lambda-chain combinatorics for semisimple Lie algebras"};
  app.require_subcommand(1);
  Timer timer;
  app.add_flag("--time", timer.enabled, "print wall-clock per phase to stderr");

  std::string out_path;
  app.add_option("--out", out_path, "write structured output to a file instead of stdout");

  // chain build | validate | reverse
  CLI::App* chain_cmd = app.add_subcommand("chain", "build, validate or reverse lambda-chains");
  chain_cmd->require_subcommand(1);
  ChainArgs chain_build_args;
  CLI::App* chain_build = chain_cmd->add_subcommand("build", "lex chain for a dominant weight");
  add_chain_args(chain_build, chain_build_args, false);

  ChainArgs chain_validate_args;
  std::string validate_input;
  CLI::App* chain_validate = chain_cmd->add_subcommand("validate", "check (R1)/(R2) for a chain file");
  add_chain_args(chain_validate, chain_validate_args, false);
  chain_validate->add_option("--input", validate_input, "chain JSON file")->required();

  ChainArgs chain_reverse_args;
  CLI::App* chain_reverse = chain_cmd->add_subcommand("reverse", "reverse a special-form chain");
  add_chain_args(chain_reverse, chain_reverse_args);

  // crystal
  ChainArgs crystal_args;
  bool crystal_dot = false;
  CLI::App* crystal_cmd = app.add_subcommand("crystal", "crystal graph of admissible subsets");
  add_chain_args(crystal_cmd, crystal_args);
  crystal_cmd->add_flag("--dot", crystal_dot, "emit DOT instead of JSON");

  // char
  ChainArgs char_args;
  CLI::App* char_cmd = app.add_subcommand("char", "irreducible character");
  add_chain_args(char_cmd, char_args);

  // demazure
  ChainArgs dem_args;
  std::string dem_word;
  std::string dem_formula = "filtered";
  CLI::App* dem_cmd = app.add_subcommand("demazure", "Demazure character for u given by a word");
  add_chain_args(dem_cmd, dem_args);
  dem_cmd->add_option("--word", dem_word, "simple-reflection word for u, e.g. 1,2,1 (empty = identity)");
  dem_cmd->add_option("--formula", dem_formula, "filtered | decreasing | oracle")
      ->check(CLI::IsMember({"filtered", "decreasing", "oracle"}));

  // evacuate
  ChainArgs evac_args;
  std::string evac_subset;
  CLI::App* evac_cmd = app.add_subcommand("evacuate", "reversal + Yang-Baxter moves for one subset");
  add_chain_args(evac_cmd, evac_args);
  evac_cmd->add_option("--subset", evac_subset, "admissible subset, e.g. head:1+tail:2,4")
      ->required();

  // verify
  ChainArgs verify_args;
  std::string suite;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a theorem-level check suite");
  verify_cmd->add_option("suite", suite, "one of: yb, evac, demazure, rops, crystal, all")
      ->required();
  add_chain_args(verify_cmd, verify_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (chain_build->parsed()) {
      alcove::RootSystem rs = chain_build_args.system();
      alcove::LambdaChain chain = alcove::lex_lambda_chain(rs, chain_build_args.lambda(rs));
      timer.phase("build");
      emit(alcove::chain_to_json(rs, chain), out_path);
      return kExitOk;
    }
    if (chain_validate->parsed()) {
      alcove::RootSystem rs = chain_validate_args.system();
      alcove::Vec lambda = chain_validate_args.lambda(rs);
      json j = read_json_file(validate_input);
      alcove::LambdaChain chain = alcove::chain_from_json(rs, j);
      if (chain.lambda != lambda)
        throw alcove::ParseError("chain file weight disagrees with --lambda");
      auto violation = alcove::validate_lambda_chain(rs, chain);
      timer.phase("validate");
      if (violation) {
        emit(json{{"ok", false}, {"rule", violation->rule}, {"detail", violation->detail}},
             out_path);
        return kExitFailure;
      }
      emit(json{{"ok", true}}, out_path);
      return kExitOk;
    }
    if (chain_reverse->parsed()) {
      alcove::RootSystem rs = chain_reverse_args.system();
      alcove::LambdaChain chain = chain_reverse_args.chain(rs);
      emit(alcove::chain_to_json(rs, alcove::reverse_chain(rs, chain)), out_path);
      return kExitOk;
    }
    if (crystal_cmd->parsed()) {
      alcove::RootSystem rs = crystal_args.system();
      alcove::LambdaChain chain = crystal_args.chain(rs);
      alcove::CrystalGraph g = alcove::build_graph(rs, chain);
      timer.phase("crystal");
      if (crystal_dot) {
        std::string dot = alcove::to_dot(rs, g);
        if (out_path.empty()) std::cout << dot;
        else std::ofstream(out_path) << dot;
      } else {
        emit(alcove::graph_to_json(rs, g), out_path);
      }
      return kExitOk;
    }
    if (char_cmd->parsed()) {
      alcove::RootSystem rs = char_args.system();
      alcove::LambdaChain chain = char_args.chain(rs);
      alcove::CharacterPoly ch = alcove::character(rs, chain);
      timer.phase("char");
      emit(alcove::character_to_json(ch), out_path);
      return kExitOk;
    }
    if (dem_cmd->parsed()) {
      alcove::RootSystem rs = dem_args.system();
      alcove::LambdaChain chain = dem_args.chain(rs);
      alcove::WeylElement u =
          alcove::weyl_from_word(rs, dem_word.empty() ? std::vector<int>{}
                                                      : parse_word(dem_word, rs.rank));
      alcove::CharacterPoly ch;
      if (dem_formula == "decreasing") ch = alcove::demazure_decreasing(rs, chain, u);
      else if (dem_formula == "oracle") ch = alcove::demazure_oracle(rs, chain.lambda, u);
      else ch = alcove::demazure_filtered(rs, chain, u);
      timer.phase("demazure");
      emit(alcove::character_to_json(ch), out_path);
      return kExitOk;
    }
    if (evac_cmd->parsed()) {
      alcove::RootSystem rs = evac_args.system();
      alcove::LambdaChain chain = evac_args.chain(rs);
      std::vector<int> positions = alcove::parse_subset_spec(chain, evac_subset);
      alcove::AdmissibleSubset J = alcove::make_admissible(rs, chain, positions);
      alcove::Evacuator evac(rs, chain);
      alcove::AdmissibleSubset rev = evac.reverse(J);
      alcove::AdmissibleSubset star = evac.evacuate(J);
      timer.phase("evacuate");

      alcove::WeylElement wo = alcove::longest_element(rs);
      json moves = json::array();
      for (const alcove::YbWindow& mv : evac.moves())
        moves.push_back(json{{"offset", mv.offset}, {"q", mv.q}});
      json checks{
          {"weight_conjugated", star.mu == alcove::Vec(wo.m * J.mu)},
          {"key0_exchanged",
           star.kappa0 && *star.kappa0 == alcove::coset_min(rs, wo * J.w, chain.lambda)},
          {"key1_exchanged",
           star.w == alcove::coset_min(rs, wo * *J.kappa0, chain.lambda)},
      };
      json report{{"chain", alcove::chain_to_json(rs, chain)},
                  {"reversed_chain", alcove::chain_to_json(rs, evac.reversed_chain())},
                  {"input", alcove::subset_to_json(chain, J.positions)},
                  {"j_rev", alcove::subset_to_json(evac.reversed_chain(), rev.positions)},
                  {"moves", moves},
                  {"output", alcove::subset_to_json(chain, star.positions)},
                  {"checks", checks}};
      emit(report, out_path);
      bool ok = true;
      for (const auto& [k, v] : checks.items()) ok = ok && v.get<bool>();
      return ok ? kExitOk : kExitFailure;
    }
    if (verify_cmd->parsed()) {
      alcove::RootSystem rs = verify_args.system();
      alcove::LambdaChain chain = verify_args.chain(rs);
      auto reports = alcove::run_suites(suite, rs, chain);
      timer.phase("verify");
      json out = json::array();
      bool pass = true;
      for (const auto& r : reports) {
        out.push_back(r.to_json());
        pass = pass && r.pass();
      }
      emit(json{{"suites", out}, {"pass", pass}}, out_path);
      return pass ? kExitOk : kExitFailure;
    }
  } catch (const alcove::PatternMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const alcove::NotAdmissible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const alcove::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}

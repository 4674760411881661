// Command-line front end. Exit status: 0 success, 1 a check failed (or the
// expressions compared are distinct), 2 usage, parse or validation errors.

#include <cstdlib>
#include <iostream>
#include <regex>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "smoc/errors.hpp"
#include "smoc/frontend.hpp"
#include "smoc/verify.hpp"

using namespace smoc;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  static const std::regex number(R"(\d+)");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), number); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stoi(it->str()));
  }
  if (out.empty()) throw ValidationError(std::string("could not read ") + what);
  return out;
}

TreeType parse_type(const std::string& s) {
  static const std::regex shape(R"(^\s*\(\s*\d+(\s*,\s*\d+)*\s*;\s*\d+\s*\)\s*$)");
  if (!std::regex_match(s, shape)) throw ValidationError("type must look like (v1,...,vr;v0)");
  const auto semi = s.find(';');
  TreeType t;
  t.inputs = parse_int_list(s.substr(0, semi), "input colours");
  t.output = parse_int_list(s.substr(semi), "output colour").front();
  return t;
}

Bigrade parse_bigrade(const std::string& s) {
  static const std::regex shape(R"(^\s*\(\s*\d+\s*,\s*\d+\s*\)\s*$)");
  if (!std::regex_match(s, shape)) throw ValidationError("bigrade must look like (s,m)");
  const auto v = parse_int_list(s, "bigrade");
  return {v[0], v[1]};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms and exhaustive checks for self-gluing and merger terms"};
  app.require_subcommand(1);
  std::size_t limit = default_limit();
  std::uint64_t seed = 1;
  app.add_option("--limit", limit, "Largest universe an enumeration may build (also SMOC_LIMIT)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized suites");

  bool odd = false;
  std::string expr_a;
  std::string expr_b;
  auto* normalize_cmd = app.add_subcommand("normalize", "Print the normal form of an expression");
  normalize_cmd->add_option("expr", expr_a, "Expression")->required();
  normalize_cmd->add_flag("--odd", odd, "Odd self-gluings");

  auto* eq_cmd = app.add_subcommand("eq", "Compare two expressions");
  eq_cmd->add_option("expr1", expr_a, "First expression")->required();
  eq_cmd->add_option("expr2", expr_b, "Second expression")->required();
  eq_cmd->add_flag("--odd", odd, "Odd self-gluings");

  std::string type_text;
  std::string bigrade_text;
  auto* count_cmd = app.add_subcommand("count", "Count classes of one component by rewrite closure");
  count_cmd->add_option("--type", type_text, "Type (v1,...,vr;v0)")->required();
  count_cmd->add_option("--bigrade", bigrade_text, "Bigrade (s,m)")->required();
  count_cmd->add_flag("--odd", odd, "Odd self-gluings");

  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive check and print its report");
  verify_cmd->require_subcommand(1);
  int bound = 0;
  int samples = 1000;
  auto* v_rho = verify_cmd->add_subcommand("rho", "Reindexing identity");
  v_rho->add_option("--max-n", bound, "Largest colour")->required();
  auto* v_iota = verify_cmd->add_subcommand("iota", "Involution on ordered gluing pairs");
  v_iota->add_option("--max-n", bound, "Largest colour")->required();
  auto* v_shadows = verify_cmd->add_subcommand("shadows", "Shadow invariance");
  v_shadows->add_option("--max-color", bound, "Largest total input colour")->required();
  auto* v_diamond = verify_cmd->add_subcommand("diamond", "Weight-3 class counts");
  v_diamond->add_option("--max-color", bound, "Largest total input colour")->required();
  auto* v_odd = verify_cmd->add_subcommand("odd", "Signed classes up to weight 3");
  v_odd->add_option("--max-color", bound, "Largest total input colour")->required();
  auto* v_pure = verify_cmd->add_subcommand("pure", "Pure-tree counts and purification");
  v_pure->add_option("--max-color", bound, "Largest total input colour")->required();
  auto* v_classes = verify_cmd->add_subcommand("classes", "Self-gluing-only and merger-only class counts");
  v_classes->add_option("--max-color", bound, "Largest total input colour")->required();
  auto* v_normalizer = verify_cmd->add_subcommand("normalizer", "Normal forms versus classes up to weight 4");
  v_normalizer->add_option("--max-color", bound, "Largest total input colour")->required();
  auto* v_compose = verify_cmd->add_subcommand("compose", "Composition and actions on random instances");
  v_compose->add_option("--samples", samples, "Number of instances");
  auto* v_ranks = verify_cmd->add_subcommand("ranks", "Relation span ranks");
  v_ranks->add_option("--max", bound, "Largest total input colour")->required();
  auto* v_all = verify_cmd->add_subcommand("all", "Every check at one bound");
  v_all->add_option("--max", bound, "Largest colour bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Mode mode = odd ? Mode::Odd : Mode::Even;
    if (*normalize_cmd) {
      emit(to_json(normalize(to_raw(parse(expr_a)), mode)));
      return kPass;
    }
    if (*eq_cmd) {
      const auto a = normalize(to_raw(parse(expr_a)), mode);
      const auto b = normalize(to_raw(parse(expr_b)), mode);
      auto b_flipped = b;
      b_flipped.sign = -b.sign;
      if (a == b) {
        std::cout << "equal\n";
        return kPass;
      }
      if (a == b_flipped) {
        std::cout << "equal-up-to-sign(-1)\n";
        return kPass;
      }
      std::cout << "distinct\n";
      return kFail;
    }
    if (*count_cmd) {
      const auto type = parse_type(type_text);
      const auto bigrade = parse_bigrade(bigrade_text);
      const auto cp = closure(type, bigrade, mode, limit);
      json j;
      j["type"] = type.to_string();
      j["bigrade"] = "(" + std::to_string(bigrade.s) + "," + std::to_string(bigrade.m) + ")";
      j["mode"] = odd ? "odd" : "even";
      j["trees"] = cp.trees.size();
      j["elements"] = cp.universe_size();
      j["classes"] = cp.class_count();
      j["expected"] = count_expected(type, bigrade);
      j["consistent"] = cp.consistent();
      emit(j);
      return kPass;
    }

    std::vector<Report> reports;
    if (*v_rho) reports.push_back(check_rho_identity(bound));
    if (*v_iota) reports.push_back(check_iota(bound));
    if (*v_shadows) reports.push_back(check_shadows(bound));
    if (*v_diamond) reports.push_back(check_diamond(bound, limit));
    if (*v_odd) reports.push_back(check_odd(bound, limit));
    if (*v_pure) reports.push_back(check_pure_bijection(bound, seed));
    if (*v_classes) reports.push_back(check_class_counts(bound, 3, bound, limit));
    if (*v_normalizer) reports.push_back(check_normalizer(bound, 4, limit));
    if (*v_compose) reports.push_back(check_composition(samples, seed));
    if (*v_ranks) reports.push_back(check_relation_ranks(bound, bound, bound, limit));
    if (*v_all) {
      reports.push_back(check_rho_identity(std::max(bound, 4)));
      reports.push_back(check_iota(bound));
      reports.push_back(check_pure_bijection(bound, seed));
      reports.push_back(check_class_counts(bound, 3, bound, limit));
      reports.push_back(check_shadows(std::max(bound, 4)));
      reports.push_back(check_diamond(std::max(bound, 4), limit));
      reports.push_back(check_odd(bound, limit));
      reports.push_back(check_relation_ranks(bound, bound, bound, limit));
      reports.push_back(check_normalizer(bound, 4, limit));
      reports.push_back(check_composition(samples, seed));
    }
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    if (reports.size() == 1) {
      emit(reports.front().to_json());
    } else {
      json j;
      j["pass"] = pass;
      j["reports"] = json::array();
      for (const auto& r : reports) j["reports"].push_back(r.to_json());
      emit(j);
    }
    return pass ? kPass : kFail;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << " (raise it with --limit or SMOC_LIMIT)\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

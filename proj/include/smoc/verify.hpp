#pragma once

// Exhaustive checks of the combinatorial statements, each producing a Report.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "smoc/oracle.hpp"

namespace smoc {

struct Shadow21 {
  Permutation sigma;
  UnorderedGluingClass cls;
  bool operator==(const Shadow21&) const = default;
};

struct Shadow12 {
  Permutation sigma;
  int a = 0;
  int b = 0;
  bool operator==(const Shadow12&) const = default;
};

// Deliberate faults used to confirm that a check can fail.
enum class Mutation { None, ChiShift, RhoTransposition };

// Both accept planar trees (branch order not necessarily least-leaf).
// Throw ValidationError unless the bigrade is (2,1) resp. (1,2).
Shadow21 shadow21(const Permutation& sigma, const RawTree& t, Mutation mutation = Mutation::None);
Shadow21 shadow21(const Element& e);
Shadow12 shadow12(const Permutation& sigma, const RawTree& t, Mutation mutation = Mutation::None);
Shadow12 shadow12(const Element& e);

struct Detail {
  std::string type;
  std::string bigrade;
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
};

struct Report {
  std::string check;
  std::string anchor;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = true;
  std::vector<Detail> details;
  double elapsed_ms = 0;

  nlohmann::ordered_json to_json() const;
};

// Every tuple of `inputs` non-negative colours with sum at most max_total.
std::vector<std::vector<int>> colour_tuples(int inputs, int max_total);

Report check_rho_identity(int max_n, Mutation mutation = Mutation::None);
Report check_iota(int max_n);
Report check_pure_bijection(int max_total, std::uint64_t seed = 1);
Report check_class_counts(int max_n, int max_s, int max_merger_total, std::size_t limit = default_limit());
Report check_shadows(int max_total, Mutation mutation = Mutation::None);
Report check_diamond(int max_total, std::size_t limit = default_limit());
Report check_odd(int max_total, std::size_t limit = default_limit());
// Colour bounds for the three relation families: n, n + m and n + m + l.
Report check_relation_ranks(int max_xixi, int max_ximerge, int max_mergemerge,
                            std::size_t limit = default_limit());
Report check_normalizer(int max_total, int max_weight, std::size_t limit = default_limit());
Report check_composition(int samples, std::uint64_t seed = 1);

// A random valid normal form with at most max_inputs inputs of colour at
// most max_color each.
NormalForm random_normal_form(std::mt19937_64& rng, Mode mode, int max_inputs, int max_color);

}  // namespace smoc

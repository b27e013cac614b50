#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "binf/embedding.hpp"
#include "binf/tableaux.hpp"

namespace binf {

struct EnumerationResult {
  LieType type;
  int depth = 0;
  // Breadth-first discovery order; depth of an element equals its coordinate sum.
  std::vector<ReducedCounts> elements;
  std::map<RootVector, std::uint64_t> by_weight;  // keyed by mu, weight -mu
  std::vector<MLTableau> tableaux;                // parallel to elements; tableau enumeration only
};

// Closure of the highest element under lowering operators, deduplicated by
// reduced coordinates. Frontier expansion runs under OpenMP; the serial
// namespace keeps the reference versions.
EnumerationResult enumerate_tableaux(LieType t, int depth);
EnumerationResult enumerate_embedded(LieType t, int depth);

namespace serial {
EnumerationResult enumerate_tableaux(LieType t, int depth);
EnumerationResult enumerate_embedded(LieType t, int depth);
}  // namespace serial

// Path-consistent reduced vectors with coordinate sum <= total, by direct
// backtracking over the order constraints. Sorted.
std::vector<ReducedCounts> enumerate_path_consistent(LieType t, int total);

// Uniform entries in [0, max_entry] for the maximal elements of each C-bar_r,
// then each entry uniform below the minimum of the entries above it.
ReducedCounts random_path_consistent(LieType t, int max_entry, std::mt19937_64& rng);
// Random marginally large tableau: each row picks a random source-to-sink
// path and random counts in [0, max_run] along it.
MLTableau random_tableau(LieType t, int max_run, std::mt19937_64& rng);

struct VerificationReport {
  std::string suite;
  LieType type;
  bool pass = true;
  bool skipped = false;
  std::uint64_t checked = 0;
  double runtime_ms = 0;
  std::optional<std::uint64_t> seed;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  nlohmann::ordered_json counterexample;  // null when passing

  void fail(nlohmann::ordered_json example);
  nlohmann::ordered_json to_json() const;
};

struct VerifyConfig {
  std::optional<int> depth;  // defaults to default_depth(type)
  int samples = 1000;
  int paths = 1000;
  int trials = 10;
  int max_entry = 5;
  std::uint64_t seed = 20240611;
};

// 5 for E6, 4 for E7.
int default_depth(LieType t);

VerificationReport check_paper_lists(LieType t);
VerificationReport check_roots(LieType t);
VerificationReport check_structure(LieType t);
VerificationReport check_groups(LieType t, int paths_per_row, std::uint64_t seed);
VerificationReport check_commutation(LieType t, int depth, const Selector& selector = tensor_select);
VerificationReport check_image(LieType t, int total);
VerificationReport check_kostant(LieType t, int max_height);
VerificationReport check_bijection(LieType t, int depth, int samples, int max_entry, std::uint64_t seed);
VerificationReport check_lemma_tmin(LieType t, int depth, int samples, std::uint64_t seed);
VerificationReport check_capmin(LieType t, int depth, int samples, std::uint64_t seed);
VerificationReport check_color1(int depth);
VerificationReport check_path_order(LieType t, int depth, int trials, std::uint64_t seed);

// Raise picks the latest maximal position instead of the earliest; used to
// confirm the harness catches a broken rule.
std::optional<std::size_t> flipped_raise_select(std::span<const ComponentView> components, Direction dir);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(std::string_view name, LieType t, const VerifyConfig& config);

}  // namespace binf

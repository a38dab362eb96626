#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace forms::selftest {

struct Options {
  std::uint64_t seed = 2026;
  // Caps the order bounds of the exhaustive suites; 24 runs everything at
  // full depth (and is required for the random S4 butterfly batch).
  int max_order = 24;
  int zigzag_samples = 5000;
  std::string docs_dir = "docs";
  bool fail_fast = false;
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // deterministic; timing never appears here
};

std::vector<CriterionResult> run_all(const Options& opt);

bool all_passed(const std::vector<CriterionResult>& rs);
// One line per criterion, wall time included.
std::string render_text(const std::vector<CriterionResult>& rs);
// Timing-free: byte-identical across runs with equal options.
std::string render_json(const std::vector<CriterionResult>& rs, const Options& opt);

}  // namespace forms::selftest

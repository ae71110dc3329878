#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace incdec {

struct PaperCheckOptions {
  std::uint64_t seed = 1;  // base seed for the randomized sweeps
  std::string only;        // run a single named check when non-empty
};

struct PaperCheck {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::vector<std::string> lines;
};

struct PaperReport {
  std::vector<PaperCheck> checks;
  bool all_passed = false;
};

const std::vector<std::string>& paper_check_names();

// Runs the named desk-scale verification checks: the lower-bound instances,
// the tight examples, the bound sweeps and the per-run invariants.
PaperReport verify_paper(const PaperCheckOptions& options = {});

}  // namespace incdec

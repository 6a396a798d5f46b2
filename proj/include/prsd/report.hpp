#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace prsd {

/// Replayable failure payload: the exact inputs that produced it.
struct CheckFailure {
  std::string detail;
  std::string generator;  // e.g. "X3(z^2 t)" or a matrix label
  std::string germ_json;  // offending germ, when germ-based
};

struct CheckReport {
  std::string id;
  std::string claim;  // one-line statement of what is being verified
  std::uint64_t seed = 0;
  long attempted = 0;
  long passed = 0;
  double elapsed_seconds = 0.0;
  bool success = true;
  std::vector<CheckFailure> failures;
  std::vector<std::string> notes;  // recorded observations, not assertions

  bool ok() const { return success; }

  void count(bool pass) {
    ++attempted;
    if (pass) ++passed;
  }

  void fail(std::string detail, std::string generator = {},
            std::string germ_json = {}) {
    success = false;
    failures.push_back(
        {std::move(detail), std::move(generator), std::move(germ_json)});
  }
};

/// Run-wide configuration; per-check seeds derive deterministically from
/// the master seed and the check id, so concurrent and serial runs agree.
struct RunConfig {
  std::uint64_t master_seed = 1;
  int samples = 0;     // 0 = per-check default
  int max_degree = 4;  // monomial parameter cutoff m+n
  int kmax = 5;
  int terms = 12;
  bool extended_orders = false;  // include k = 6, 7 in the dimension table

  std::uint64_t seed_for(const std::string& check_id) const;
  int samples_or(int fallback) const { return samples > 0 ? samples : fallback; }

  /// Reads defaults from the JSON file named by $PRSD_CONFIG, if set.
  static RunConfig from_environment();
};

std::string report_markdown(const std::vector<CheckReport>& reports);
std::string report_json(const std::vector<CheckReport>& reports);

}  // namespace prsd

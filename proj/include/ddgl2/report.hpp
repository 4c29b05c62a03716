#pragma once
// Report assembly behind the CLI: JSON-emitting drivers for the verification
// sweep, chain builds, and the root-of-unity module, plus the curated
// known-discrepancies file consulted by the hard checks.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ddgl2/analysis.hpp"
#include "ddgl2/chain.hpp"

namespace ddgl2 {

// exit codes: 0 ok, 1 hard-check failure, 2 usage error, 3 size cap
struct RunResult {
  int exit_code = 0;
  std::string output;  // JSON document
};

struct DiscrepancyFile {
  std::string path;
  std::set<std::pair<std::string, std::string>> entries;  // (case, kind)
  bool excuses(const std::string& case_id, const std::string& kind) const {
    return entries.count({case_id, kind}) > 0;
  }
  bool has_dimension_entries() const;
};

// Missing file loads as empty (nothing excused); malformed file throws.
DiscrepancyFile load_discrepancy_file(const std::string& path);

struct VerifyConfig {
  std::vector<std::string> cases;  // empty = all
  Complex q{2.0, 0.0};
  unsigned seed = 1;
  Variant variant = Variant::corrected;
  Tolerance tol;
  std::string discrepancy_path;
};

RunResult run_verify(const VerifyConfig& config);

struct ChainConfig {
  std::string case_id;
  int L = 2;
  std::optional<std::array<Complex, 3>> coeff;  // default: the row's table triple
  Complex q{2.0, 0.0};
  unsigned seed = 1;
  Variant variant = Variant::corrected;
  Tolerance tol;
  int max_sites = 6;
  std::string dump_matrix_csv, dump_spectrum_csv;  // optional output paths
};

RunResult run_chain(const ChainConfig& config);

struct RootOfUnityConfig {
  int p = 3;
  Complex alpha{2.0}, beta{3.0}, eta{5.0};
  std::vector<Variant> variants = {Variant::corrected, Variant::as_printed};
  Tolerance tol;
};

RunResult run_root_of_unity(const RootOfUnityConfig& config);

// Default discrepancy-file location: $DDGL2_DISCREPANCY_FILE if set, else
// data/known_discrepancies.json relative to the working directory.
std::string default_discrepancy_path();

}  // namespace ddgl2

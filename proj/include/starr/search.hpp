#ifndef STARR_SEARCH_HPP
#define STARR_SEARCH_HPP

// Desk-scale search for counterexamples to three statements about ST(A, eta):
//   factorable:  A free  <=>  Hilb(ST) = prod (1 + x + ... + x^e_i)
//   palindromic: A free  <=>  Hilb(ST) is palindromic
//   socle:       top degree r = |A| + l(d - 2) and dim ST_r = 1
// A violation is only ever reported, never treated as a proof.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starr/arrangement.hpp"

namespace starr {

struct SearchConfig {
  /// "random" (integer forms) or "subarrangements" (of the example `parent`).
  std::string generator = "random";
  std::string parent;
  int dimension = 3;
  int min_size = 3;
  int max_size = 6;
  /// Arrangements to examine; for subarrangements 0 means all.
  int count = 20;
  std::uint64_t seed = 1;
  /// Random coefficients lie in [-bound, bound].
  int coefficient_bound = 2;
  int eta_degree = 2;
  /// "all", "factorable", "palindromic" or "socle".
  std::string conjectures = "all";
  /// When nonempty, each violating arrangement is written here as a JSON file.
  std::string counterexample_dir;
};

struct SearchRecord {
  SearchRecord(int i, Arrangement a) : index(i), arrangement(std::move(a)) {}

  int index = 0;
  Arrangement arrangement;
  std::string skipped;  // nonempty when no valid eta was found
  bool free = false;
  std::vector<int> hilbert_vector;
  bool palindromic = false;
  std::optional<std::vector<int>> quantum_factors;
  int top_degree = -1;
  int expected_top_degree = 0;
  bool socle_conjecture = false;
  std::vector<int> socle_degrees;
  std::vector<std::string> violations;
  std::string counterexample_file;
};

struct SearchLog {
  std::vector<SearchRecord> records;
  int examined = 0;
  int skipped = 0;
  int violations = 0;
  /// One JSON object per line, then a summary line; identical for equal configs.
  std::string text;
};

/// Throws std::invalid_argument for an invalid configuration.
SearchLog conjecture_search(const SearchConfig& cfg);

}  // namespace starr

#endif

#ifndef STARR_COXETER_HPP
#define STARR_COXETER_HPP

// Classical root systems, ideal and Weyl arrangements, inversion arrangements
// and Bruhat intervals in the symmetric group.

#include <string>
#include <vector>

#include "starr/arrangement.hpp"

namespace starr {

struct RootSystem {
  char type = 'A';
  int rank = 0;
  /// Number of ambient coordinates (rank + 1 for type A).
  int ambient = 0;
  /// Positive roots ordered by height, then by simple-root coordinates.
  std::vector<std::vector<int>> roots;
  /// Expansion of each positive root in the simple roots.
  std::vector<std::vector<int>> simple_coordinates;
  std::vector<int> heights;
  std::vector<std::vector<int>> simple_roots;
};

/// Types A (rank >= 1), B and C (rank >= 2), D (rank >= 3); rank <= 5.
RootSystem root_system(char type, int rank);

/// Throws ArrangementError naming a violating pair if `ideal` (indices into
/// roots) is not closed downward.
void validate_lower_ideal(const RootSystem& rs, const std::vector<int>& ideal);
bool is_lower_ideal(const RootSystem& rs, const std::vector<int>& ideal);
/// Every lower ideal, as sorted index lists, ordered by size then lexicographically.
std::vector<std::vector<int>> all_lower_ideals(const RootSystem& rs);

/// Dual partition of the height distribution of the ideal, sorted ascending
/// and padded with zeros to `length` (the rank when length < 0).
std::vector<int> ideal_exponents(const RootSystem& rs, const std::vector<int>& ideal, int length = -1);

Arrangement ideal_arrangement(const RootSystem& rs, const std::vector<int>& ideal);
Arrangement weyl_arrangement(const RootSystem& rs);

/// Invariant quadratic form sum x_i^2 in the ambient coordinates.
Polynomial lowest_invariant(const RootSystem& rs);

using Permutation = std::vector<int>;  // one-line notation, values 1..n

/// Parses "4123" (single digits) or "4,1,2,3".
Permutation parse_permutation(const std::string& s);
void validate_permutation(const Permutation& w);
std::string permutation_to_string(const Permutation& w);

/// {x_i - x_j : i < j, w(i) > w(j)} in n coordinates.
Arrangement inversion_arrangement(const Permutation& w);
/// Tableau criterion: sorted prefixes of u are entrywise <= those of w.
bool bruhat_leq(const Permutation& u, const Permutation& w);
long bruhat_interval_size(const Permutation& w);
std::vector<Permutation> all_permutations(int n);
/// True if some subsequence of w is order-isomorphic to `pattern`.
bool contains_pattern(const Permutation& w, const Permutation& pattern);
/// Type A smoothness of the Schubert variety: w avoids 3412 and 4231.
bool schubert_smooth(const Permutation& w);

}  // namespace starr

#endif

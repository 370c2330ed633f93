#ifndef STARR_TESTS_WHITNEY_ORACLE_HPP
#define STARR_TESTS_WHITNEY_ORACLE_HPP

// Whitney's formula: pi(t) = sum over subsets B of (-1)^|B| (-t)^rank(B).

#include "starr/arrangement.hpp"
#include "starr/linalg.hpp"

namespace oracle {

using namespace starr;

inline IntPoly whitney_poincare(const Arrangement& a) {
  const int n = a.size();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(a.dimension()) + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<ScalarVector> rows;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) rows.push_back(a.normals()[static_cast<std::size_t>(i)]);
    const int rank = rows.empty() ? 0 : Matrix::from_rows(a.field(), rows, a.dimension()).rank();
    // (-1)^|B| (-1)^rank t^rank
    const int sign = ((__builtin_popcountll(mask) + rank) % 2) ? -1 : 1;
    coeffs[static_cast<std::size_t>(rank)] += sign;
  }
  return IntPoly(coeffs);
}

/// chi(t) = t^l pi(-1/t).
inline IntPoly whitney_characteristic(const Arrangement& a) {
  const IntPoly pi = whitney_poincare(a);
  const int l = a.dimension();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(l) + 1, 0);
  for (int k = 0; k <= pi.degree(); ++k) coeffs[static_cast<std::size_t>(l - k)] = (k % 2 ? -1 : 1) * pi[k];
  return IntPoly(coeffs);
}

}  // namespace oracle

#endif

#ifndef STARR_LOGDER_HPP
#define STARR_LOGDER_HPP

// Logarithmic p-derivations D^p(A), the bivariate polynomial Psi built from
// their Hilbert series, freeness and tameness.

#include <optional>
#include <string>
#include <vector>

#include "starr/arrangement.hpp"
#include "starr/groebner.hpp"

namespace starr {

/// p-subsets of {0..n-1} in lexicographic order; these index the components
/// of p-derivations, basis element d_{i1} ^ ... ^ d_{ip} sitting in degree 0.
std::vector<std::vector<int>> subsets_of_size(int n, int p);

struct DerModule {
  int p = 0;
  FreeModule ambient;
  std::vector<std::vector<int>> components;
  /// Reduced Groebner basis of D^p inside the free module.
  std::vector<ModuleElement> basis;
  /// Minimal homogeneous generators, by increasing degree.
  std::vector<ModuleElement> generators;
  std::vector<int> degrees;
  HilbertSeries hilbert;
};

DerModule log_derivations(const Arrangement& a, int p);
std::vector<DerModule> all_log_derivations(const Arrangement& a);

/// Checks theta(alpha_H, ...) in alpha_H S for every hyperplane directly.
bool satisfies_contraction(const Arrangement& a, int p, const ModuleElement& theta);

/// theta(f) = sum_i theta_i * df/dx_i for a 1-derivation.
Polynomial apply_derivation(const ModuleElement& theta, const Polynomial& f);

struct FreenessResult {
  bool free = false;
  /// Sorted generator degrees when free.
  std::vector<int> exponents;
  /// Degrees of a minimal generating set of D(A).
  std::vector<int> generator_degrees;
  std::string reason;
};

FreenessResult is_free(const Arrangement& a, const DerModule& d1);
FreenessResult is_free(const Arrangement& a);

/// Psi = sum_p N_p(x) (1 - x - t)^p t^(l - p) / (1 - x)^l.
/// Throws SeriesError when the division is not exact.
BivariatePoly solomon_terao_polynomial(const Arrangement& a, const std::vector<DerModule>& modules);
BivariatePoly solomon_terao_polynomial(const Arrangement& a);

/// prod_i (t (1 + ... + x^(d_i - 1)) + x^(d_i)).
BivariatePoly free_psi(const std::vector<int>& exponents);

struct AcyclicityResult {
  bool holds = false;
  /// sum_p N_p(x) (-x)^(l - p); zero when the identity holds.
  IntPoly residual;
};
AcyclicityResult check_acyclicity(const Arrangement& a, const std::vector<DerModule>& modules);

/// pi(A; t) == prod (1 + d_i t). Throws on a non-free arrangement.
bool terao_factorization_check(const Arrangement& a, const FreenessResult& freeness);

struct TamenessResult {
  bool tame = false;
  std::string via;  // "free", "rank<=3" or "resolution"
  /// pd D^p for p = 0..l, only filled when resolutions were computed.
  std::vector<int> projective_dimensions;
};
TamenessResult is_tame(const Arrangement& a, const std::vector<DerModule>& modules, const FreenessResult& freeness);

}  // namespace starr

#endif

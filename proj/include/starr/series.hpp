#ifndef STARR_SERIES_HPP
#define STARR_SERIES_HPP

// Integer polynomials in one or two variables: Hilbert numerators, Poincare
// polynomials and the bivariate polynomial Psi(x, t).

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace starr {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// constant term first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly monomial(int degree, const mpz_class& c = 1);
  /// 1 + x + ... + x^e.
  static IntPoly quantum_integer(int e);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Coefficient of x^i (zero beyond the degree).
  mpz_class operator[](int i) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& s);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  /// p(x) -> p(s*x).
  IntPoly scale_variable(long s) const;
  mpz_class evaluate(long x) const;
  /// Exact division; nullopt when a remainder is left.
  std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;
  bool is_palindromic() const;
  IntPoly reversed() const;

  /// "[1,3,5,4,1]".
  std::string to_list_string() const;
  /// "1 + 3*x + ...".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// numerator / (1 - x)^denominator_exponent.
struct HilbertSeries {
  IntPoly numerator;
  int denominator_exponent = 0;

  bool is_finite() const { return denominator_exponent == 0; }
  /// Cancels common factors (1 - x) between numerator and denominator.
  HilbertSeries reduced() const;
  /// Coefficient of x^d of the expanded series.
  mpz_class coefficient(int d) const;
  /// Total dimension; throws for a series with a pole at x = 1.
  mpz_class evaluate_at_one() const;
  std::string to_string() const;
};

/// Returns (e_1 <= ... <= e_k), all e_i >= 1, with p = prod (1 + x + ... + x^{e_i}),
/// or nullopt when no such factorization exists. Factors [1]_x = 1 are invisible.
std::optional<std::vector<int>> factor_quantum_integers(const IntPoly& p);

/// Integer polynomial in x and t: coeff(i, j) multiplies x^i t^j.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  static BivariatePoly from_x(const IntPoly& p);
  static BivariatePoly from_t(const IntPoly& p);

  mpz_class coeff(int i, int j) const;
  void add_to(int i, int j, const mpz_class& c);
  int x_degree() const;
  int t_degree() const;
  bool is_zero() const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

  BivariatePoly pow(int e) const;
  /// Exact division by (1 - x); nullopt on a remainder.
  std::optional<BivariatePoly> divide_one_minus_x() const;
  /// Psi(1, t) as a polynomial in t.
  IntPoly at_x_equals_one() const;
  /// Psi(x, 1) as a polynomial in x.
  IntPoly at_t_equals_one() const;
  /// Psi(x, -x) as a polynomial in x.
  IntPoly at_t_equals_minus_x() const;

  /// Rows indexed by t-degree, columns by x-degree.
  std::vector<std::vector<mpz_class>> grid() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::vector<mpz_class>> c_;  // c_[i][j]: x^i t^j
};

}  // namespace starr

#endif

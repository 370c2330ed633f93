#ifndef STARR_POLYNOMIAL_HPP
#define STARR_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "starr/monomial.hpp"
#include "starr/scalar.hpp"

namespace starr {

class PolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial in K[x_1..x_n]. Terms are kept sorted from the largest
/// monomial (graded reverse lexicographic) down, with no zero coefficients.
class Polynomial {
 public:
  Polynomial() : Polynomial(FieldDescriptor::rational(), 0) {}
  Polynomial(const FieldDescriptor* field, int nvars);

  static Polynomial constant(const FieldDescriptor* field, int nvars, const Scalar& c);
  static Polynomial constant(const FieldDescriptor* field, int nvars, long c) {
    return constant(field, nvars, Scalar(field, c));
  }
  static Polynomial variable(const FieldDescriptor* field, int nvars, int index);
  static Polynomial monomial(const FieldDescriptor* field, int nvars, const Monomial& m,
                             const Scalar& c);
  /// Canonicalizes an arbitrary term list (merges duplicates, drops zeros).
  static Polynomial from_terms(const FieldDescriptor* field, int nvars, std::vector<Term> terms);
  /// Linear form sum_i coeffs[i] x_i.
  static Polynomial linear_form(const FieldDescriptor* field, const std::vector<Scalar>& coeffs);

  const FieldDescriptor* field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_homogeneous() const;
  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  const Term& leading_term() const;
  Scalar coefficient(const Monomial& m) const;
  /// Homogeneous component of the given degree.
  Polynomial homogeneous_part(int degree) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial multiply_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(int exponent) const;
  /// Partial derivative with respect to x_index.
  Polynomial derivative(int index) const;
  /// Substitutes x_i -> images[i]; images may live in a different number of
  /// variables (all images must share one ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void check_compatible(const Polynomial& other) const;

  const FieldDescriptor* field_;
  int nvars_;
  std::vector<Term> terms_;
};

/// Determinant of a square matrix of polynomials (cofactor expansion; sizes <= 5).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace starr

#endif

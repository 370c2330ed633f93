#ifndef STARR_SCALAR_HPP
#define STARR_SCALAR_HPP

// Exact field arithmetic over Q and simple extensions Q[s]/(m(s)).

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace starr {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Describes the coefficient field. Descriptors are interned: two fields are
/// the same iff their descriptor pointers are equal, and descriptors live for
/// the whole process.
class FieldDescriptor {
 public:
  enum class Kind { rational, extension };

  static const FieldDescriptor* rational();

  /// Q[s]/(minpoly). `minpoly` lists coefficients from the constant term up and
  /// must be monic of degree >= 2. Irreducibility is checked for degree <= 3;
  /// higher degrees are accepted and flagged as trusted.
  static const FieldDescriptor* extension(std::vector<mpq_class> minpoly,
                                          std::string symbol = "r");

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  /// Vector-space dimension over Q.
  int degree() const { return degree_; }
  const std::vector<mpq_class>& minpoly() const { return minpoly_; }
  const std::string& symbol() const { return symbol_; }
  bool irreducibility_trusted() const { return trusted_; }

  std::string to_string() const;

 private:
  FieldDescriptor() = default;

  Kind kind_ = Kind::rational;
  int degree_ = 1;
  std::vector<mpq_class> minpoly_;
  std::string symbol_;
  bool trusted_ = false;
};

/// True iff a monic rational polynomial of degree 2 or 3 has no rational root.
bool has_no_rational_root(const std::vector<mpq_class>& poly);

/// An element of a field described by a FieldDescriptor. Rationals are stored
/// as one reduced fraction; extension elements as the coefficient vector of
/// their reduced representative c0 + c1 s + ... + c_{n-1} s^{n-1}.
class Scalar {
 public:
  using Coords = boost::container::small_vector<mpq_class, 2>;

  Scalar() : Scalar(FieldDescriptor::rational()) {}
  explicit Scalar(const FieldDescriptor* field);
  Scalar(const FieldDescriptor* field, long value);
  Scalar(const FieldDescriptor* field, const mpq_class& value);

  static Scalar rational(long num, long den = 1);
  /// The adjoined root s of an extension field.
  static Scalar generator(const FieldDescriptor* field);
  /// Builds c0 + c1 s + ...; reduces modulo the minimal polynomial if longer.
  static Scalar from_coords(const FieldDescriptor* field, std::vector<mpq_class> coords);

  const FieldDescriptor* field() const { return field_; }
  const Coords& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime field Q.
  bool is_rational() const;
  /// Value of a rational element; throws otherwise.
  const mpq_class& rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "5/6", "-1+r", "1/2*r".
  std::string to_string() const;
  /// True when to_string() would need parentheses inside a product.
  bool is_compound() const;

 private:
  void check_same_field(const Scalar& other) const;

  const FieldDescriptor* field_;
  Coords coords_;
};

}  // namespace starr

#endif

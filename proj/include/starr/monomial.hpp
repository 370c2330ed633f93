#ifndef STARR_MONOMIAL_HPP
#define STARR_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace starr {

inline constexpr int kMaxVars = 8;

/// Exponent vector x_1^{e_1}...x_n^{e_n}. Unused trailing slots stay zero, so
/// comparisons never need the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents) {
    if (exponents.size() > static_cast<std::size_t>(kMaxVars))
      throw std::invalid_argument("too many variables");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0) throw std::invalid_argument("negative exponent");
      exp_[i] = static_cast<std::uint16_t>(exponents[i]);
      degree_ += exponents[i];
    }
  }

  static Monomial variable(int i, int power = 1) {
    Monomial m;
    m.exp_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
    m.degree_ = power;
    return m;
  }

  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  std::vector<int> exponents(int nvars) const {
    std::vector<int> out(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) out[static_cast<std::size_t>(i)] = exp_[static_cast<std::size_t>(i)];
    return out;
  }

  /// Highest index with a nonzero exponent, or -1 for the constant monomial.
  int last_variable() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (exp_[static_cast<std::size_t>(i)]) return i;
    return -1;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp_[static_cast<std::size_t>(i)] > other.exp_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp_[static_cast<std::size_t>(i)] && other.exp_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  /// a / b; requires b | a.
  static Monomial quotient(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      m.degree_ += m.exp_[i];
    }
    return m;
  }

  /// Colon a : b, i.e. a / gcd(a, b).
  static Monomial colon(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.exp_[i] = a.exp_[i] > b.exp_[i] ? static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]) : 0;
      m.degree_ += m.exp_[i];
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Graded reverse lexicographic comparison: >0 if a > b.
  friend int compare_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
      auto ea = a.exp_[static_cast<std::size_t>(i)], eb = b.exp_[static_cast<std::size_t>(i)];
      if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  int degree_ = 0;
};

/// Strict-weak "greater" for maps that iterate from the largest monomial.
struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_grevlex(a, b) > 0; }
};

/// All monomials of total degree d in n variables, largest first.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Default variable names: x,y,z for up to three variables, else x1..xn.
std::vector<std::string> default_variable_names(int nvars, const std::string& stem = "x");

}  // namespace starr

#endif

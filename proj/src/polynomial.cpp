#include "starr/polynomial.hpp"

#include <map>
#include <sstream>

namespace starr {

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exp_[static_cast<std::size_t>(i)];
    if (!e) continue;
    if (!out.empty()) out += "*";
    out += i < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(i)] : "x" + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  // Enumerate compositions recursively.
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), MonomialGreater{});
  return out;
}

std::vector<std::string> default_variable_names(int nvars, const std::string& stem) {
  std::vector<std::string> names;
  if (stem == "x" && nvars <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (int i = 0; i < nvars; ++i) names.emplace_back(xyz[i]);
    return names;
  }
  for (int i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

Polynomial::Polynomial(const FieldDescriptor* field, int nvars) : field_(field), nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw PolynomialError("unsupported variable count");
}

Polynomial Polynomial::constant(const FieldDescriptor* field, int nvars, const Scalar& c) {
  Polynomial p(field, nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(const FieldDescriptor* field, int nvars, int index) {
  if (index < 0 || index >= nvars) throw PolynomialError("variable index out of range");
  Polynomial p(field, nvars);
  p.terms_.push_back({Monomial::variable(index), Scalar(field, 1)});
  return p;
}

Polynomial Polynomial::monomial(const FieldDescriptor* field, int nvars, const Monomial& m,
                                const Scalar& c) {
  Polynomial p(field, nvars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const FieldDescriptor* field, int nvars, std::vector<Term> terms) {
  std::map<Monomial, Scalar, MonomialGreater> acc;
  for (auto& t : terms) {
    if (t.mono.last_variable() >= nvars) throw PolynomialError("monomial outside the ring");
    auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  Polynomial p(field, nvars);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::linear_form(const FieldDescriptor* field, const std::vector<Scalar>& coeffs) {
  Polynomial p(field, static_cast<int>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) p.terms_.push_back({Monomial::variable(static_cast<int>(i)), coeffs[i]});
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PolynomialError("zero polynomial has no leading term");
  return terms_.front();
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Scalar(field_);
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial p(field_, nvars_);
  for (const auto& t : terms_)
    if (t.mono.degree() == degree) p.terms_.push_back(t);
  return p;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw PolynomialError("variable count mismatch");
  if (field_ != other.field_) throw FieldError("field mismatch between polynomials");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int cmp;
    if (i == terms_.size()) cmp = -1;
    else if (j == other.terms_.size()) cmp = 1;
    else cmp = compare_grevlex(terms_[i].mono, other.terms_[j].mono);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Scalar c = terms_[i].coeff + other.terms_[j].coeff;
      if (!c.is_zero()) out.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::map<Monomial, Scalar, MonomialGreater> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Monomial m = s.mono * t.mono;
      Scalar c = s.coeff * t.coeff;
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second += c;
    }
  Polynomial p(a.field_, a.nvars_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.field() != field_) throw FieldError("field mismatch in scalar multiple");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::multiply_term(const Monomial& m, const Scalar& c) const {
  Polynomial p(field_, nvars_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw PolynomialError("negative power");
  Polynomial result = constant(field_, nvars_, 1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(int index) const {
  if (index < 0 || index >= nvars_) throw PolynomialError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[index];
    if (e == 0) continue;
    Monomial m = Monomial::quotient(t.mono, Monomial::variable(index));
    out.push_back({m, t.coeff * Scalar(field_, e)});
  }
  // Differentiation preserves the relative order of surviving terms.
  Polynomial p(field_, nvars_);
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw PolynomialError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const FieldDescriptor* f = images.front().field();
  const int target_vars = images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target_vars || img.field() != f) throw PolynomialError("inconsistent substitution images");
  if (f != field_) throw FieldError("substitution changes the field");
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(f, target_vars, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result(f, target_vars);
  for (const auto& t : terms_) {
    Polynomial term = constant(f, target_vars, t.coeff);
    for (int i = 0; i < nvars_; ++i)
      if (t.mono[i]) term *= power(static_cast<std::size_t>(i), t.mono[i]);
    result += term;
  }
  return result;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw PolynomialError("evaluation point has wrong length");
  Scalar sum(field_);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < t.mono[i]; ++k) v *= point[static_cast<std::size_t>(i)];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * terms_.front().coeff.inverse();
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> vars = names.empty() ? default_variable_names(nvars_) : names;
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string coeff;
    bool negative = false;
    if (t.coeff.is_compound()) {
      coeff = "(" + t.coeff.to_string() + ")";
    } else {
      Scalar c = t.coeff;
      std::string s = c.to_string();
      if (!s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
      }
      coeff = s;
    }
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    if (t.mono.is_one()) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << "*";
      os << t.mono.to_string(vars);
    }
    first = false;
  }
  return os.str();
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw PolynomialError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw PolynomialError("determinant needs a square matrix");
  if (n == 1) return m[0][0];
  const auto& proto = m[0][0];
  Polynomial det(proto.field(), proto.nvars());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(minor);
    if (col % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace starr

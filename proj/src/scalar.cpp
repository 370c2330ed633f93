#include "starr/scalar.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace starr {

namespace {

using QPoly = std::vector<mpq_class>;  // constant term first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Division with remainder; divisor nonzero.
void poly_divmod(QPoly a, const QPoly& b, QPoly& quot, QPoly& rem) {
  trim(a);
  quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    mpq_class q = a.back() / lead;
    quot[shift] = q;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  trim(quot);
  rem = std::move(a);
}

// Reduces a coefficient vector modulo a monic polynomial in place.
void reduce_mod(QPoly& a, const QPoly& monic) {
  const std::size_t n = monic.size() - 1;
  for (std::size_t k = a.size(); k-- > n;) {
    if (a[k] == 0) continue;
    mpq_class c = a[k];
    std::size_t shift = k - n;
    for (std::size_t i = 0; i <= n; ++i) a[shift + i] -= c * monic[i];
  }
  a.resize(n);
}

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

struct Registry {
  std::mutex mutex;
  std::vector<std::unique_ptr<FieldDescriptor>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool has_no_rational_root(const std::vector<mpq_class>& poly) {
  // Clear denominators, then apply the rational root theorem.
  mpz_class den = 1;
  for (const auto& c : poly) den = lcm(den, c.get_den());
  std::vector<mpz_class> ints;
  for (const auto& c : poly) ints.push_back(mpz_class(c * den));
  if (ints.front() == 0) return false;
  for (const auto& p : divisors(ints.front())) {
    for (const auto& q : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        mpq_class root(sign * p, q);
        root.canonicalize();
        mpq_class value = 0;
        for (std::size_t i = poly.size(); i-- > 0;) value = value * root + poly[i];
        if (value == 0) return false;
      }
    }
  }
  return true;
}

const FieldDescriptor* FieldDescriptor::rational() {
  static const FieldDescriptor* q = [] {
    auto* f = new FieldDescriptor();
    f->kind_ = Kind::rational;
    f->degree_ = 1;
    f->symbol_ = "";
    return f;
  }();
  return q;
}

const FieldDescriptor* FieldDescriptor::extension(std::vector<mpq_class> minpoly,
                                                  std::string symbol) {
  trim(minpoly);
  if (minpoly.size() < 3) throw FieldError("minimal polynomial must have degree >= 2");
  if (minpoly.back() != 1) throw FieldError("minimal polynomial must be monic");
  if (symbol.empty()) throw FieldError("extension symbol must be nonempty");
  const int deg = static_cast<int>(minpoly.size()) - 1;
  bool trusted = false;
  if (deg <= 3) {
    if (!has_no_rational_root(minpoly))
      throw FieldError("minimal polynomial is reducible over Q");
  } else {
    trusted = true;
  }
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mutex);
  for (const auto& f : reg.fields)
    if (f->minpoly_ == minpoly && f->symbol_ == symbol) return f.get();
  std::unique_ptr<FieldDescriptor> f(new FieldDescriptor());
  f->kind_ = Kind::extension;
  f->degree_ = deg;
  f->minpoly_ = std::move(minpoly);
  f->symbol_ = std::move(symbol);
  f->trusted_ = trusted;
  reg.fields.push_back(std::move(f));
  return reg.fields.back().get();
}

std::string FieldDescriptor::to_string() const {
  if (is_rational()) return "QQ";
  std::ostringstream os;
  os << "QQ[" << symbol_ << "]/(";
  bool first = true;
  for (std::size_t i = minpoly_.size(); i-- > 0;) {
    const mpq_class& c = minpoly_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) os << (a != 1 ? "*" : "") << symbol_ << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  os << ")";
  return os.str();
}

Scalar::Scalar(const FieldDescriptor* field) : field_(field) {
  coords_.resize(static_cast<std::size_t>(field->degree()));
}

Scalar::Scalar(const FieldDescriptor* field, long value) : Scalar(field) {
  coords_[0] = value;
}

Scalar::Scalar(const FieldDescriptor* field, const mpq_class& value) : Scalar(field) {
  coords_[0] = value;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw FieldError("division by zero");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(FieldDescriptor::rational(), q);
}

Scalar Scalar::generator(const FieldDescriptor* field) {
  if (field->is_rational()) throw FieldError("Q has no adjoined generator");
  Scalar s(field);
  s.coords_[1] = 1;
  return s;
}

Scalar Scalar::from_coords(const FieldDescriptor* field, std::vector<mpq_class> coords) {
  Scalar s(field);
  for (auto& c : coords) c.canonicalize();
  if (field->is_rational()) {
    trim(coords);
    if (coords.size() > 1) throw FieldError("rational scalar given extension coordinates");
    if (!coords.empty()) s.coords_[0] = coords[0];
    return s;
  }
  const std::size_t n = static_cast<std::size_t>(field->degree());
  if (coords.size() > n) reduce_mod(coords, field->minpoly());
  for (std::size_t i = 0; i < coords.size(); ++i) s.coords_[i] = coords[i];
  return s;
}

bool Scalar::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Scalar::is_one() const {
  if (coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

const mpq_class& Scalar::rational_value() const {
  if (!is_rational()) throw FieldError("scalar is not rational: " + to_string());
  return coords_[0];
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw FieldError("field mismatch: " + field_->to_string() + " vs " +
                     other.field_->to_string());
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (field_->is_rational()) {
    coords_[0] *= other.coords_[0];
    return *this;
  }
  QPoly a(coords_.begin(), coords_.end());
  QPoly b(other.coords_.begin(), other.coords_.end());
  QPoly prod = poly_mul(a, b);
  const std::size_t n = coords_.size();
  if (prod.size() > n) reduce_mod(prod, field_->minpoly());
  for (std::size_t i = 0; i < n; ++i) coords_[i] = i < prod.size() ? prod[i] : mpq_class(0);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (field_->is_rational()) return Scalar(field_, mpq_class(1) / coords_[0]);
  // Extended Euclid: find u with u*a + v*m = 1.
  QPoly r0 = field_->minpoly();
  QPoly r1(coords_.begin(), coords_.end());
  trim(r1);
  QPoly u0, u1{mpq_class(1)};
  while (!(r1.size() == 1)) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    if (r1.empty()) throw FieldError("minimal polynomial is not irreducible");
  }
  mpq_class scale = mpq_class(1) / r1[0];
  for (auto& c : u1) c *= scale;
  return from_coords(field_, u1);
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  if (other.is_zero()) throw FieldError("division by zero");
  if (field_->is_rational()) {
    coords_[0] /= other.coords_[0];
    return *this;
  }
  return *this *= other.inverse();
}

bool Scalar::is_compound() const {
  int nonzero = 0;
  for (const auto& c : coords_)
    if (c != 0) ++nonzero;
  if (nonzero > 1) return true;
  return false;
}

std::string Scalar::to_string() const {
  if (field_->is_rational()) return rational_to_string(coords_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const mpq_class& c = coords_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? "-" : "+");
    else if (c < 0) os << "-";
    mpq_class a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << field_->symbol();
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace starr

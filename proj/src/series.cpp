#include "starr/series.hpp"

#include <sstream>

namespace starr {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, const mpz_class& c) {
  if (degree < 0) throw SeriesError("negative degree");
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::quantum_integer(int e) {
  if (e < 0) throw SeriesError("negative quantum integer");
  return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(e) + 1, mpz_class(1)));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly a, const mpz_class& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

IntPoly IntPoly::scale_variable(long s) const {
  std::vector<mpz_class> out(c_);
  mpz_class power = 1;
  for (auto& c : out) {
    c *= power;
    power *= s;
  }
  return IntPoly(std::move(out));
}

mpz_class IntPoly::evaluate(long x) const {
  mpz_class v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw SeriesError("division by the zero polynomial");
  if (is_zero()) return IntPoly();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<mpz_class> rem(c_);
  std::vector<mpz_class> quot(c_.size() - divisor.c_.size() + 1);
  const mpz_class& lead = divisor.c_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class& top = rem[k + divisor.c_.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    mpz_class q = top / lead;
    quot[k] = q;
    for (std::size_t i = 0; i < divisor.c_.size(); ++i) rem[k + i] -= q * divisor.c_[i];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

bool IntPoly::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < j; ++i)
    if (c_[i] != c_[--j]) return false;
  return true;
}

IntPoly IntPoly::reversed() const { return IntPoly(std::vector<mpz_class>(c_.rbegin(), c_.rend())); }

std::string IntPoly::to_list_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].get_str();
  }
  return out + "]";
}

std::string IntPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class a = abs(c_[i]);
    if (first) os << (c_[i] < 0 ? "-" : "");
    else os << (c_[i] < 0 ? " - " : " + ");
    if (i == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries out = *this;
  const IntPoly one_minus_x{1, -1};
  while (out.denominator_exponent > 0) {
    auto q = out.numerator.divide_exact(one_minus_x);
    if (!q) break;
    out.numerator = *q;
    --out.denominator_exponent;
  }
  return out;
}

mpz_class HilbertSeries::coefficient(int d) const {
  // Coefficient of x^k in (1-x)^{-e} is C(k + e - 1, e - 1).
  if (denominator_exponent == 0) return numerator[d];
  mpz_class total = 0;
  const int e = denominator_exponent;
  for (int i = 0; i <= std::min(d, numerator.degree()); ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - i + e - 1),
                 static_cast<unsigned long>(e - 1));
    total += numerator[i] * binom;
  }
  return total;
}

mpz_class HilbertSeries::evaluate_at_one() const {
  HilbertSeries r = reduced();
  if (!r.is_finite()) throw SeriesError("Hilbert series has a pole at x = 1");
  return r.numerator.evaluate(1);
}

std::string HilbertSeries::to_string() const {
  std::string num = "(" + numerator.to_string() + ")";
  if (denominator_exponent == 0) return num;
  return num + "/(1 - x)^" + std::to_string(denominator_exponent);
}

namespace {

bool factor_rec(const IntPoly& p, int min_e, std::vector<int>& out) {
  if (p == IntPoly{1}) return true;
  for (int e = min_e; e <= p.degree(); ++e) {
    auto q = p.divide_exact(IntPoly::quantum_integer(e));
    if (!q) continue;
    out.push_back(e);
    if (factor_rec(*q, e, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> factor_quantum_integers(const IntPoly& p) {
  if (p.is_zero() || p[0] != 1) return std::nullopt;
  std::vector<int> out;
  if (factor_rec(p, 1, out)) return out;
  return std::nullopt;
}

BivariatePoly BivariatePoly::from_x(const IntPoly& p) {
  BivariatePoly b;
  for (int i = 0; i <= p.degree(); ++i) b.add_to(i, 0, p[i]);
  return b;
}

BivariatePoly BivariatePoly::from_t(const IntPoly& p) {
  BivariatePoly b;
  for (int j = 0; j <= p.degree(); ++j) b.add_to(0, j, p[j]);
  return b;
}

mpz_class BivariatePoly::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  const auto& row = c_[static_cast<std::size_t>(i)];
  if (j < 0 || j >= static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(j)];
}

void BivariatePoly::add_to(int i, int j, const mpz_class& c) {
  if (c == 0) return;
  if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1);
  auto& row = c_[static_cast<std::size_t>(i)];
  if (j >= static_cast<int>(row.size())) row.resize(static_cast<std::size_t>(j) + 1);
  row[static_cast<std::size_t>(j)] += c;
  trim();
}

void BivariatePoly::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

int BivariatePoly::x_degree() const { return static_cast<int>(c_.size()) - 1; }

int BivariatePoly::t_degree() const {
  int d = -1;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

bool BivariatePoly::is_zero() const { return c_.empty(); }

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_[i].size(); ++j)
      if (o.c_[i][j] != 0) add_to(static_cast<int>(i), static_cast<int>(j), o.c_[i][j]);
  return *this;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out = a;
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_[i].size(); ++j)
      if (b.c_[i][j] != 0) out.add_to(static_cast<int>(i), static_cast<int>(j), -b.c_[i][j]);
  return out;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
      if (a.c_[i][j] == 0) continue;
      for (std::size_t k = 0; k < b.c_.size(); ++k)
        for (std::size_t l = 0; l < b.c_[k].size(); ++l)
          if (b.c_[k][l] != 0)
            out.add_to(static_cast<int>(i + k), static_cast<int>(j + l), a.c_[i][j] * b.c_[k][l]);
    }
  return out;
}

bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.c_ == b.c_; }

BivariatePoly BivariatePoly::pow(int e) const {
  BivariatePoly out;
  out.add_to(0, 0, 1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::optional<BivariatePoly> BivariatePoly::divide_one_minus_x() const {
  // Divide each t-coefficient (a polynomial in x) separately.
  BivariatePoly out;
  const IntPoly one_minus_x{1, -1};
  for (int j = 0; j <= t_degree(); ++j) {
    std::vector<mpz_class> col;
    for (int i = 0; i <= x_degree(); ++i) col.push_back(coeff(i, j));
    auto q = IntPoly(col).divide_exact(one_minus_x);
    if (!q) return std::nullopt;
    for (int i = 0; i <= q->degree(); ++i) out.add_to(i, j, (*q)[i]);
  }
  return out;
}

IntPoly BivariatePoly::at_x_equals_one() const {
  std::vector<mpz_class> out(static_cast<std::size_t>(std::max(t_degree() + 1, 0)));
  for (const auto& row : c_)
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j];
  return IntPoly(std::move(out));
}

IntPoly BivariatePoly::at_t_equals_one() const {
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (const auto& c : c_[i]) out[i] += c;
  return IntPoly(std::move(out));
}

IntPoly BivariatePoly::at_t_equals_minus_x() const {
  std::vector<mpz_class> out(static_cast<std::size_t>(std::max(x_degree() + t_degree() + 1, 0)));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j) out[i + j] += (j % 2 ? -1 : 1) * c_[i][j];
  return IntPoly(std::move(out));
}

std::vector<std::vector<mpz_class>> BivariatePoly::grid() const {
  const int tx = x_degree(), tt = t_degree();
  std::vector<std::vector<mpz_class>> g(static_cast<std::size_t>(std::max(tt + 1, 0)),
                                        std::vector<mpz_class>(static_cast<std::size_t>(std::max(tx + 1, 0))));
  for (int i = 0; i <= tx; ++i)
    for (int j = 0; j <= tt; ++j) g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = coeff(i, j);
  return g;
}

std::string BivariatePoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Order by total degree, then by t-degree descending.
  const int maxdeg = x_degree() + t_degree();
  for (int d = 0; d <= maxdeg; ++d)
    for (int j = d; j >= 0; --j) {
      const int i = d - j;
      mpz_class c = coeff(i, j);
      if (c == 0) continue;
      mpz_class a = abs(c);
      if (first) os << (c < 0 ? "-" : "");
      else os << (c < 0 ? " - " : " + ");
      std::string mono;
      if (i > 0) mono += i > 1 ? "x^" + std::to_string(i) : "x";
      if (j > 0) mono += std::string(mono.empty() ? "" : "*") + (j > 1 ? "t^" + std::to_string(j) : "t");
      if (mono.empty()) os << a.get_str();
      else {
        if (a != 1) os << a.get_str() << "*";
        os << mono;
      }
      first = false;
    }
  return os.str();
}

}  // namespace starr

#include "starr/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace starr {

using nlohmann::json;

namespace {

mpq_class parse_rational_text(const std::string& s, const std::string& where) {
  static const std::string allowed = "0123456789-+/";
  if (s.empty() || s.find_first_not_of(allowed) != std::string::npos)
    throw ParseError(where, "expected an integer or \"p/q\", got \"" + s + "\"");
  mpq_class q;
  std::string t = s[0] == '+' ? s.substr(1) : s;
  if (q.set_str(t, 10) != 0) throw ParseError(where, "malformed rational \"" + s + "\"");
  if (q.get_den() == 0) throw ParseError(where, "zero denominator");
  q.canonicalize();
  return q;
}

mpq_class parse_rational_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpq_class(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return mpq_class(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) return parse_rational_text(j.get<std::string>(), where);
  throw ParseError(where, "expected an integer or \"p/q\" string");
}

json render_rational(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(q.get_str());
}

Scalar parse_scalar_json(const json& j, const FieldDescriptor* field, const std::string& where) {
  if (j.is_array()) {
    if (field->is_rational()) throw ParseError(where, "coordinate arrays need an extension field");
    if (static_cast<int>(j.size()) > field->degree())
      throw ParseError(where, "more coordinates than the field degree " + std::to_string(field->degree()));
    std::vector<mpq_class> coords(static_cast<std::size_t>(field->degree()));
    for (std::size_t i = 0; i < j.size(); ++i) coords[i] = parse_rational_json(j[i], where + "[" + std::to_string(i) + "]");
    return Scalar::from_coords(field, coords);
  }
  return Scalar(field, parse_rational_json(j, where));
}

const FieldDescriptor* parse_field(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw ParseError("field", "expected an object with a string \"type\"");
  const std::string type = j["type"].get<std::string>();
  if (type == "rational") return FieldDescriptor::rational();
  if (type != "extension") throw ParseError("field.type", "unknown field type \"" + type + "\"");
  if (!j.contains("minpoly") || !j["minpoly"].is_array())
    throw ParseError("field.minpoly", "expected a coefficient array, constant term first");
  std::vector<mpq_class> minpoly;
  for (std::size_t i = 0; i < j["minpoly"].size(); ++i)
    minpoly.push_back(parse_rational_json(j["minpoly"][i], "field.minpoly[" + std::to_string(i) + "]"));
  std::string symbol = "r";
  if (j.contains("symbol")) {
    if (!j["symbol"].is_string()) throw ParseError("field.symbol", "expected a string");
    symbol = j["symbol"].get<std::string>();
  }
  try {
    return FieldDescriptor::extension(minpoly, symbol);
  } catch (const std::exception& e) {
    throw ParseError("field", e.what());
  }
}

}  // namespace

Arrangement ArrangementFile::arrangement() const { return Arrangement(field, static_cast<int>(variables.size()), hyperplanes, variables); }

bool operator==(const ArrangementFile& a, const ArrangementFile& b) {
  if (a.field != b.field || a.variables != b.variables || a.hyperplanes != b.hyperplanes) return false;
  if (a.eta.has_value() != b.eta.has_value()) return false;
  return !a.eta || *a.eta == *b.eta;
}

ArrangementFile arrangement_file_from(const Arrangement& a, std::optional<Polynomial> eta) {
  ArrangementFile f;
  f.field = a.field();
  f.variables = a.variable_names();
  f.hyperplanes = a.normals();
  f.eta = std::move(eta);
  return f;
}

ArrangementFile parse_arrangement_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "invalid JSON");
  }
  if (!j.is_object()) throw ParseError("$", "expected a JSON object");
  ArrangementFile f;
  f.field = j.contains("field") ? parse_field(j["field"]) : FieldDescriptor::rational();

  if (!j.contains("variables") || !j["variables"].is_array()) throw ParseError("variables", "expected an array of names");
  for (std::size_t i = 0; i < j["variables"].size(); ++i) {
    const auto& v = j["variables"][i];
    const std::string where = "variables[" + std::to_string(i) + "]";
    if (!v.is_string() || v.get<std::string>().empty()) throw ParseError(where, "expected a nonempty string");
    f.variables.push_back(v.get<std::string>());
  }
  const int n = static_cast<int>(f.variables.size());
  if (n > kMaxVars) throw ParseError("variables", "at most " + std::to_string(kMaxVars) + " variables");

  if (!j.contains("hyperplanes") || !j["hyperplanes"].is_array())
    throw ParseError("hyperplanes", "expected an array of coefficient vectors");
  for (std::size_t h = 0; h < j["hyperplanes"].size(); ++h) {
    const auto& row = j["hyperplanes"][h];
    const std::string where = "hyperplanes[" + std::to_string(h) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(where, "expected " + std::to_string(n) + " coefficients");
    ScalarVector v;
    bool nonzero = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      v.push_back(parse_scalar_json(row[i], f.field, where + "[" + std::to_string(i) + "]"));
      nonzero = nonzero || !v.back().is_zero();
    }
    if (!nonzero) throw ParseError(where, "zero vector does not define a hyperplane");
    f.hyperplanes.push_back(std::move(v));
  }

  if (j.contains("eta") && !j["eta"].is_null()) {
    const auto& e = j["eta"];
    if (!e.is_object() || !e.contains("degree") || !e["degree"].is_number_integer())
      throw ParseError("eta", "expected {\"degree\": d, \"coefficients\": [...]}");
    const int degree = e["degree"].get<int>();
    if (!e.contains("coefficients") || !e["coefficients"].is_array())
      throw ParseError("eta.coefficients", "expected an array");
    Polynomial eta(f.field, n);
    for (std::size_t k = 0; k < e["coefficients"].size(); ++k) {
      const auto& t = e["coefficients"][k];
      const std::string where = "eta.coefficients[" + std::to_string(k) + "]";
      if (!t.is_object() || !t.contains("monomial") || !t["monomial"].is_array() || !t.contains("coeff"))
        throw ParseError(where, "expected {\"monomial\": [...], \"coeff\": c}");
      if (static_cast<int>(t["monomial"].size()) != n)
        throw ParseError(where + ".monomial", "expected " + std::to_string(n) + " exponents");
      std::vector<int> exps;
      for (const auto& x : t["monomial"]) {
        if (!x.is_number_integer() || x.get<int>() < 0) throw ParseError(where + ".monomial", "exponents must be nonnegative integers");
        exps.push_back(x.get<int>());
      }
      Monomial m{std::span<const int>(exps)};
      if (m.degree() != degree) throw ParseError(where, "eta must be homogeneous of degree " + std::to_string(degree));
      eta += Polynomial::monomial(f.field, n, m, parse_scalar_json(t["coeff"], f.field, where + ".coeff"));
    }
    if (eta.is_zero()) throw ParseError("eta", "eta is zero");
    f.eta = std::move(eta);
  }
  return f;
}

ArrangementFile read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_arrangement_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

namespace {

json scalar_json(const Scalar& s) {
  if (s.is_rational()) return render_rational(s.rational_value());
  json arr = json::array();
  for (const auto& c : s.coords()) arr.push_back(render_rational(c));
  return arr;
}

}  // namespace

std::string render_scalar_json(const Scalar& s) { return scalar_json(s).dump(); }

std::string render_arrangement_json(const ArrangementFile& file) {
  json j;
  if (file.field->is_rational()) {
    j["field"] = {{"type", "rational"}};
  } else {
    json mp = json::array();
    for (const auto& c : file.field->minpoly()) mp.push_back(render_rational(c));
    j["field"] = {{"type", "extension"}, {"minpoly", mp}, {"symbol", file.field->symbol()}};
  }
  j["variables"] = file.variables;
  j["hyperplanes"] = json::array();
  for (const auto& v : file.hyperplanes) {
    json row = json::array();
    for (const auto& c : v) row.push_back(scalar_json(c));
    j["hyperplanes"].push_back(row);
  }
  if (file.eta) {
    json coeffs = json::array();
    for (const auto& t : file.eta->terms())
      coeffs.push_back({{"monomial", t.mono.exponents(file.eta->nvars())}, {"coeff", scalar_json(t.coeff)}});
    j["eta"] = {{"degree", file.eta->degree()}, {"coefficients", coeffs}};
  }
  return j.dump(2);
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const FieldDescriptor* field, const std::vector<std::string>& vars)
      : s_(text), field_(field), vars_(vars), n_(static_cast<int>(vars.size())) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("offset " + std::to_string(pos_), msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(field_, n_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      if (sign < 0) acc -= t;
      else acc += t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        ++pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
        acc *= d.leading_term().coeff.inverse();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        acc *= power();  // implicit product, e.g. 2x or 3(x+y)
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial b = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      if (pos_ - start > 4) fail("exponent too large");
      b = b.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return b;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(field_, n_, Scalar(field_, mpq_class(mpz_class(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < n_; ++i)
        if (vars_[static_cast<std::size_t>(i)] == name) return Polynomial::variable(field_, n_, i);
      if (!field_->is_rational() && name == field_->symbol())
        return Polynomial::constant(field_, n_, Scalar::generator(field_));
      pos_ = start;
      fail("unknown name '" + name + "'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const FieldDescriptor* field_;
  const std::vector<std::string>& vars_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const FieldDescriptor* field,
                            const std::vector<std::string>& variables) {
  return PolyParser(text, field, variables).parse();
}

}  // namespace starr

#include "starr/module_element.hpp"

#include <map>

namespace starr {

ModuleElement ModuleElement::from_components(const std::vector<Polynomial>& components) {
  if (components.empty()) throw PolynomialError("module element needs at least one component");
  const auto& proto = components.front();
  ModuleElement e(proto.field(), proto.nvars(), static_cast<int>(components.size()));
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].nvars() != proto.nvars() || components[c].field() != proto.field())
      throw PolynomialError("module components live in different rings");
    for (const auto& t : components[c].terms()) e.terms_.push_back({static_cast<int>(c), t.mono, t.coeff});
  }
  return e;
}

ModuleElement ModuleElement::from_terms(const FieldDescriptor* field, int nvars, int rank,
                                        std::vector<ModuleTerm> terms) {
  std::map<ModuleKey, Scalar, ModuleKeyGreater> acc;
  for (auto& t : terms) {
    if (t.comp < 0 || t.comp >= rank) throw PolynomialError("component out of range");
    auto [it, inserted] = acc.try_emplace(ModuleKey{t.comp, t.mono}, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  ModuleElement e(field, nvars, rank);
  for (auto& [k, c] : acc)
    if (!c.is_zero()) e.terms_.push_back({k.comp, k.mono, c});
  return e;
}

ModuleElement ModuleElement::basis_vector(const FieldDescriptor* field, int nvars, int rank, int c) {
  ModuleElement e(field, nvars, rank);
  e.terms_.push_back({c, Monomial(), Scalar(field, 1)});
  return e;
}

const ModuleTerm& ModuleElement::leading_term() const {
  if (terms_.empty()) throw PolynomialError("zero module element has no leading term");
  return terms_.front();
}

Polynomial ModuleElement::component(int c) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.comp == c) ts.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(field_, nvars_, std::move(ts));
}

std::vector<Polynomial> ModuleElement::components() const {
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(rank_));
  for (const auto& t : terms_) parts[static_cast<std::size_t>(t.comp)].push_back({t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(field_, nvars_, std::move(p)));
  return out;
}

int ModuleElement::degree(const std::vector<int>& shifts) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree() + shifts[static_cast<std::size_t>(t.comp)]);
  return d;
}

bool ModuleElement::is_homogeneous(const std::vector<int>& shifts) const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.degree() + shifts[static_cast<std::size_t>(terms_.front().comp)];
  for (const auto& t : terms_)
    if (t.mono.degree() + shifts[static_cast<std::size_t>(t.comp)] != d) return false;
  return true;
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement e(*this);
  for (auto& t : e.terms_) t.coeff = -t.coeff;
  return e;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other) {
  if (rank_ != other.rank_ || nvars_ != other.nvars_) throw PolynomialError("module shape mismatch");
  if (field_ != other.field_) throw FieldError("field mismatch between module elements");
  std::vector<ModuleTerm> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int cmp;
    if (i == terms_.size()) cmp = -1;
    else if (j == other.terms_.size()) cmp = 1;
    else cmp = compare_pot(terms_[i].comp, terms_[i].mono, other.terms_[j].comp, other.terms_[j].mono);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Scalar c = terms_[i].coeff + other.terms_[j].coeff;
      if (!c.is_zero()) out.push_back({terms_[i].comp, terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& other) { return *this += -other; }

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  if (a.field_ != b.field_ || a.rank_ != b.rank_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.comp != t.comp || s.mono != t.mono || s.coeff != t.coeff) return false;
  }
  return true;
}

ModuleElement ModuleElement::multiply_term(const Monomial& m, const Scalar& c) const {
  ModuleElement e(field_, nvars_, rank_);
  if (c.is_zero()) return e;
  e.terms_.reserve(terms_.size());
  for (const auto& t : terms_) e.terms_.push_back({t.comp, t.mono * m, t.coeff * c});
  return e;
}

ModuleElement ModuleElement::multiply(const Polynomial& f) const {
  ModuleElement out(field_, nvars_, rank_);
  for (const auto& t : f.terms()) out += multiply_term(t.mono, t.coeff);
  return out;
}

ModuleElement ModuleElement::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

ModuleElement ModuleElement::shifted_components(int offset, int new_rank) const {
  std::vector<ModuleTerm> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.comp + offset, t.mono, t.coeff});
  return from_terms(field_, nvars_, new_rank, std::move(ts));
}

std::string ModuleElement::to_string(const std::vector<std::string>& basis_names,
                                     const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  auto comps = components();
  for (int c = 0; c < rank_; ++c) {
    const auto& p = comps[static_cast<std::size_t>(c)];
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string name = c < static_cast<int>(basis_names.size()) ? basis_names[static_cast<std::size_t>(c)]
                                                                 : "e" + std::to_string(c + 1);
    out += "(" + p.to_string(var_names) + ")*" + name;
  }
  return out;
}

}  // namespace starr

#ifndef STARR_MODULE_ELEMENT_HPP
#define STARR_MODULE_ELEMENT_HPP

#include <vector>

#include "starr/polynomial.hpp"

namespace starr {

/// Graded free module S^r = S e_0 + ... + S e_{r-1}; basis element e_c sits in
/// degree shifts[c].
struct FreeModule {
  const FieldDescriptor* field = FieldDescriptor::rational();
  int nvars = 0;
  int rank = 1;
  std::vector<int> shifts;

  static FreeModule make(const FieldDescriptor* field, int nvars, int rank,
                         std::vector<int> shifts = {}) {
    FreeModule f{field, nvars, rank, std::move(shifts)};
    if (f.shifts.empty()) f.shifts.assign(static_cast<std::size_t>(rank), 0);
    return f;
  }
  int shift(int c) const { return shifts[static_cast<std::size_t>(c)]; }
};

struct ModuleTerm {
  int comp;
  Monomial mono;
  Scalar coeff;
};

/// Position-over-term comparison of (component, monomial) pairs: a smaller
/// component index is larger; within a component, graded reverse lex.
inline int compare_pot(int ca, const Monomial& ma, int cb, const Monomial& mb) {
  if (ca != cb) return ca < cb ? 1 : -1;
  return compare_grevlex(ma, mb);
}

struct ModuleKey {
  int comp;
  Monomial mono;
};

struct ModuleKeyGreater {
  bool operator()(const ModuleKey& a, const ModuleKey& b) const {
    return compare_pot(a.comp, a.mono, b.comp, b.mono) > 0;
  }
};

/// Element of a free module S^r, stored as terms sorted from the largest
/// position-over-term key down.
class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(const FieldDescriptor* field, int nvars, int rank)
      : field_(field), nvars_(nvars), rank_(rank) {}

  static ModuleElement from_components(const std::vector<Polynomial>& components);
  /// Rank-one element wrapping a polynomial.
  static ModuleElement from_polynomial(const Polynomial& p) { return from_components({p}); }
  static ModuleElement from_terms(const FieldDescriptor* field, int nvars, int rank,
                                  std::vector<ModuleTerm> terms);
  static ModuleElement basis_vector(const FieldDescriptor* field, int nvars, int rank, int c);

  const FieldDescriptor* field() const { return field_; }
  int nvars() const { return nvars_; }
  int rank() const { return rank_; }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModuleTerm& leading_term() const;

  Polynomial component(int c) const;
  std::vector<Polynomial> components() const;
  /// Maximal degree of a term counting the basis shifts; -1 if zero.
  int degree(const std::vector<int>& shifts) const;
  bool is_homogeneous(const std::vector<int>& shifts) const;

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

  ModuleElement multiply_term(const Monomial& m, const Scalar& c) const;
  ModuleElement multiply(const Polynomial& f) const;
  ModuleElement scaled(const Scalar& c) const { return multiply_term(Monomial(), c); }
  ModuleElement monic() const;
  /// Re-indexes components: new component = old component + offset, new rank given.
  ModuleElement shifted_components(int offset, int new_rank) const;

  std::string to_string(const std::vector<std::string>& basis_names = {},
                        const std::vector<std::string>& var_names = {}) const;

 private:
  const FieldDescriptor* field_ = FieldDescriptor::rational();
  int nvars_ = 0;
  int rank_ = 0;
  std::vector<ModuleTerm> terms_;
};

}  // namespace starr

#endif

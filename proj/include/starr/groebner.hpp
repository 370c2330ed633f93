#ifndef STARR_GROEBNER_HPP
#define STARR_GROEBNER_HPP

// Buchberger's algorithm for ideals and submodules of graded free modules,
// with the derived constructions built on it: kernels, syzygies, minimal
// generators, Hilbert series and minimal free resolutions.

#include <vector>

#include "starr/module_element.hpp"
#include "starr/series.hpp"

namespace starr {

/// Reduced Groebner basis (monic, position-over-term order) of a submodule of
/// a graded free module. Rank-one ambients are ideals.
class GroebnerBasis {
 public:
  /// Wraps elements that are already a reduced basis; no check is made.
  GroebnerBasis(FreeModule ambient, std::vector<ModuleElement> reduced);

  const FreeModule& ambient() const { return ambient_; }
  const std::vector<ModuleElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool is_zero() const { return elems_.empty(); }
  /// Rank-one bases as polynomials.
  std::vector<Polynomial> polynomials() const;

  ModuleElement normal_form(const ModuleElement& f) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const ModuleElement& f) const { return normal_form(f).is_zero(); }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  /// True when the submodule is the whole ambient module.
  bool is_everything() const;

  /// Direct check of Buchberger's criterion on every pair.
  bool all_spairs_reduce_to_zero() const;

  /// Leading monomials grouped by component.
  std::vector<std::vector<Monomial>> leading_monomials() const;
  HilbertSeries submodule_hilbert_series() const;
  HilbertSeries quotient_hilbert_series() const;

 private:
  FreeModule ambient_;
  std::vector<ModuleElement> elems_;
  std::vector<std::vector<int>> by_comp_;  // element indices by leading component
};

GroebnerBasis buchberger(const FreeModule& ambient, const std::vector<ModuleElement>& gens);
GroebnerBasis ideal_basis(const FieldDescriptor* field, int nvars, const std::vector<Polynomial>& gens);

/// Numerator N of Hilb(S/J) = N / (1 - x)^n for the monomial ideal J.
IntPoly hilbert_numerator(std::vector<Monomial> gens);

/// Kernel of S^a -> T / N, e_j |-> columns[j], where T is free and N is
/// generated by `relations`. The result is a reduced Groebner basis of the
/// kernel inside `source`.
GroebnerBasis kernel_of_map(const FreeModule& source, const FreeModule& target,
                            const std::vector<ModuleElement>& columns,
                            const std::vector<ModuleElement>& relations);

/// Syzygy module of homogeneous generators, living in the free module whose
/// shifts are the generator degrees.
GroebnerBasis syzygies(const FreeModule& ambient, const std::vector<ModuleElement>& gens);

/// Minimal homogeneous generating subset, chosen degree by degree.
std::vector<ModuleElement> minimal_generators(const FreeModule& ambient,
                                              const std::vector<ModuleElement>& gens);
std::vector<Polynomial> minimal_generators(const FieldDescriptor* field, int nvars,
                                           const std::vector<Polynomial>& gens);

struct FreeResolution {
  /// levels[i]: degrees of the generators of the i-th free module.
  std::vector<std::vector<int>> levels;

  int length() const { return static_cast<int>(levels.size()) - 1; }
  /// Alternating sum of the shifted free modules, over (1 - x)^nvars.
  HilbertSeries euler_characteristic(int nvars) const;
};

/// Minimal free resolution of the submodule generated by gens.
FreeResolution free_resolution(const FreeModule& ambient, const std::vector<ModuleElement>& gens);
/// -1 for the zero module.
int projective_dimension(const FreeModule& ambient, const std::vector<ModuleElement>& gens);

}  // namespace starr

#endif

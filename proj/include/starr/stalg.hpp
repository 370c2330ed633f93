#ifndef STARR_STALG_HPP
#define STARR_STALG_HPP

// Artinian quotients S/I, the algebra S / (theta(eta) : theta in D(A)) and the
// ring-theoretic checks run on it.

#include <optional>
#include <string>
#include <vector>

#include "starr/logder.hpp"

namespace starr {

class EtaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EtaValidation {
  bool valid = true;
  int checked = 0;
  /// Indices into IntersectionLattice::elements() where eta degenerates.
  std::vector<int> failing;
};

/// True when the Jacobian ideal of eta restricted to span(basis) only vanishes
/// at the origin (or is the unit ideal).
bool nondegenerate_on(const Polynomial& eta, const std::vector<ScalarVector>& basis);
EtaValidation verify_eta(const Arrangement& a, const Polynomial& eta);

struct EtaSpec {
  Polynomial eta;
  int degree = 0;
  /// Position in the candidate ladder (0 = sum of d-th powers).
  int attempt = 0;
  EtaValidation validation;
};

/// Candidate ladder: sum x_i^d, sum (i+1) x_i^d, then seeded random dense forms.
std::vector<Polynomial> eta_candidates(const FieldDescriptor* field, int nvars, int degree, int count = 16);
EtaSpec default_eta(const Arrangement& a, int degree);

/// Finite-dimensional graded quotient S/I.
class QuotientAlgebra {
 public:
  /// Throws EtaError when S/I is not finite-dimensional.
  explicit QuotientAlgebra(GroebnerBasis ideal);
  static QuotientAlgebra from_generators(const FieldDescriptor* field, int nvars, const std::vector<Polynomial>& gens);

  const GroebnerBasis& ideal() const { return ideal_; }
  const FieldDescriptor* field() const { return ideal_.ambient().field; }
  int nvars() const { return ideal_.ambient().nvars; }
  /// Standard monomials by increasing degree, largest first within a degree.
  const std::vector<Monomial>& standard_monomials() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  /// Top degree r with a nonzero graded piece; -1 for the zero algebra.
  int top_degree() const { return static_cast<int>(offsets_.size()) - 2; }
  /// h_0, ..., h_r.
  std::vector<int> hilbert_vector() const;
  IntPoly hilbert_polynomial() const;
  /// Index range of the standard monomials of degree d.
  std::pair<int, int> degree_range(int d) const;
  int index_of(const Monomial& m) const;

  Polynomial normal_form(const Polynomial& f) const { return ideal_.normal_form(f); }
  /// Coordinates of NF(f) on the standard monomials.
  ScalarVector coordinates(const Polynomial& f) const;
  Polynomial from_coordinates(const ScalarVector& v) const;
  /// Matrix of multiplication by g from degree `from` into degree `from + deg g`
  /// (columns: source monomials, rows: target monomials).
  Matrix multiplication_matrix(const Polynomial& g, int from) const;

  /// Basis of the socle (elements killed by every variable), degree by degree.
  std::vector<Polynomial> socle_basis() const;

 private:
  GroebnerBasis ideal_;
  std::vector<Monomial> basis_;
  std::vector<int> offsets_;  // offsets_[d] = first index of degree d; one past the end at r + 1
};

struct STAlgebra {
  Arrangement arrangement;
  Polynomial eta;
  int degree = 0;
  /// Minimal generators of D(A).
  std::vector<ModuleElement> derivations;
  /// theta_i(eta) for the minimal generators theta_i.
  std::vector<Polynomial> ideal_generators;
  QuotientAlgebra algebra;
};

STAlgebra st_algebra(const Arrangement& a, const Polynomial& eta);
STAlgebra st_algebra(const Arrangement& a, const Polynomial& eta, const DerModule& d1);

struct AnalysisReport {
  std::vector<int> hilbert_vector;
  int top_degree = -1;
  bool complete_intersection = false;
  std::vector<int> minimal_generator_degrees;
  /// e_i with Hilb = prod (1 + ... + x^(e_i)), padded with zeros to l entries.
  std::optional<std::vector<int>> quantum_factors;
  /// e_i - d + 2 when complete intersection.
  std::optional<std::vector<int>> recovered_exponents;
  /// A complete intersection must factor with factors deg(generator) - 1.
  bool factorization_consistent = true;
  int socle_dimension = 0;
  std::vector<int> socle_degrees;
  bool gorenstein = false;
  bool palindromic = false;
  /// "holds" or "not_established".
  std::string slp;
  int expected_top_degree = 0;
  bool socle_degree_conjecture = false;
};

AnalysisReport analyze(const STAlgebra& st);

/// One trial of the strong Lefschetz test: multiplication by g^(r - 2i) from
/// degree i to degree r - i has maximal rank for every i.
bool strong_lefschetz_element(const QuotientAlgebra& q, const Polynomial& g);
/// Seeded random linear forms, `trials` of them.
std::string strong_lefschetz_verdict(const QuotientAlgebra& q, int trials = 5);

struct SocleWitness {
  Polynomial witness;      // Q(A) * det(d_i d_j eta)
  Polynomial normal_form;
  bool nonzero = false;
  bool in_socle = false;
};
SocleWitness socle_witness(const STAlgebra& st);

struct MacaulayDual {
  Polynomial dual;  // in variables y_1..y_l
  bool annihilated = false;
};
/// Throws EtaError unless the algebra is Gorenstein.
MacaulayDual macaulay_dual(const QuotientAlgebra& q, const std::vector<Polynomial>& ideal_generators);

/// f(d/dy) applied to F.
Polynomial apply_differential_operator(const Polynomial& f, const Polynomial& F);

struct NilpotentSearch {
  bool exists = false;
  /// A rational witness v with v != 0 and v^2 = 0, when one was extracted.
  std::optional<Polynomial> witness;
};
NilpotentSearch exists_nilpotent_linear(const QuotientAlgebra& q);

struct RestrictionCheck {
  bool eta_valid_on_deletion = false;
  bool eta_valid_on_restriction = false;
  bool f2_well_defined = false;
  bool f2_surjective = false;
  bool f1_well_defined = false;
  bool composition_zero = false;
  std::vector<int> restricted_hilbert_vector;

  bool ok() const {
    return eta_valid_on_deletion && eta_valid_on_restriction && f2_well_defined && f2_surjective &&
           f1_well_defined && composition_zero;
  }
};
RestrictionCheck restriction_map_check(const Arrangement& a, int hyperplane, const Polynomial& eta);

}  // namespace starr

#endif

#ifndef STARR_ARRANGEMENT_HPP
#define STARR_ARRANGEMENT_HPP

// Central hyperplane arrangements, their intersection lattices, deletion and
// restriction.

#include <cstdint>
#include <string>
#include <vector>

#include "starr/linalg.hpp"
#include "starr/polynomial.hpp"
#include "starr/series.hpp"

namespace starr {

class ArrangementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scales v so that its first nonzero entry is 1. Throws on the zero vector.
ScalarVector normalize_linear_form(ScalarVector v);

/// A set of pairwise non-proportional linear forms in `dimension` variables.
/// Forms are normalized and kept in first-seen order.
class Arrangement {
 public:
  Arrangement(const FieldDescriptor* field, int dimension, const std::vector<ScalarVector>& normals,
              std::vector<std::string> variable_names = {});
  static Arrangement from_forms(const FieldDescriptor* field, int dimension, const std::vector<Polynomial>& forms,
                                std::vector<std::string> variable_names = {});
  static Arrangement empty(const FieldDescriptor* field, int dimension) { return Arrangement(field, dimension, {}); }

  const FieldDescriptor* field() const { return field_; }
  int dimension() const { return dim_; }
  int size() const { return static_cast<int>(normals_.size()); }
  bool is_empty() const { return normals_.empty(); }
  const std::vector<ScalarVector>& normals() const { return normals_; }
  const std::vector<std::string>& variable_names() const { return names_; }

  Polynomial form(int i) const;
  std::vector<Polynomial> forms() const;
  /// Q = product of all forms.
  Polynomial defining_polynomial() const;
  /// Dimension of the span of the normals.
  int rank() const;
  /// Index of the hyperplane defined by v (any scaling), or -1.
  int index_of(const ScalarVector& v) const;

  Arrangement deleted(int index) const;

 private:
  const FieldDescriptor* field_;
  int dim_;
  std::vector<ScalarVector> normals_;
  std::vector<std::string> names_;
};

/// Deterministic basis of {v : rows v = 0}: one vector per free column of the
/// reduced echelon form, carrying 1 at that column.
std::vector<ScalarVector> kernel_basis(const FieldDescriptor* field, const std::vector<ScalarVector>& rows, int dim);

/// f(sum_j basis[j][0] u_j, ..., sum_j basis[j][n-1] u_j) in the variables u_j.
Polynomial restrict_polynomial(const Polynomial& f, const std::vector<ScalarVector>& basis);

struct Restriction {
  Arrangement arrangement;
  /// Coordinates on the hyperplane: x = sum_j u_j basis[j].
  std::vector<ScalarVector> basis;

  Polynomial pull_back(const Polynomial& f) const { return restrict_polynomial(f, basis); }
};

Restriction restrict_to(const Arrangement& a, int index);

struct LatticeElement {
  /// Bit i set when hyperplane i contains this subspace.
  std::uint64_t hyperplanes = 0;
  /// Reduced echelon basis of the span of the normals.
  std::vector<ScalarVector> span;
  int codimension = 0;
  long mobius = 0;
};

class IntersectionLattice {
 public:
  explicit IntersectionLattice(const Arrangement& a);

  int dimension() const { return dim_; }
  /// Ordered by codimension, then discovery order; element 0 is the whole space.
  const std::vector<LatticeElement>& elements() const { return elems_; }
  /// Number of elements per codimension.
  std::vector<int> rank_counts() const;
  /// Strict covering relations (i, j) with element j one codimension above i.
  std::vector<std::pair<int, int>> covers() const;

  IntPoly characteristic_polynomial() const;
  IntPoly poincare_polynomial() const;

 private:
  int dim_;
  std::vector<LatticeElement> elems_;
};

}  // namespace starr

#endif

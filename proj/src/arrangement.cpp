#include "starr/arrangement.hpp"

#include <map>

namespace starr {

ScalarVector normalize_linear_form(ScalarVector v) {
  std::size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  if (k == v.size()) throw ArrangementError("zero linear form does not define a hyperplane");
  const Scalar inv = v[k].inverse();
  for (std::size_t i = k; i < v.size(); ++i) v[i] *= inv;
  return v;
}

Arrangement::Arrangement(const FieldDescriptor* field, int dimension, const std::vector<ScalarVector>& normals,
                         std::vector<std::string> variable_names)
    : field_(field), dim_(dimension), names_(std::move(variable_names)) {
  if (dimension < 0 || dimension > kMaxVars) throw ArrangementError("unsupported ambient dimension");
  if (names_.empty()) names_ = default_variable_names(dimension);
  if (static_cast<int>(names_.size()) != dimension) throw ArrangementError("one variable name per coordinate");
  for (const auto& v : normals) {
    if (static_cast<int>(v.size()) != dimension) throw ArrangementError("normal vector has the wrong length");
    for (const auto& c : v)
      if (c.field() != field) throw ArrangementError("normal vector over another field");
    ScalarVector n = normalize_linear_form(v);
    if (index_of(n) < 0) normals_.push_back(std::move(n));
  }
  if (normals_.size() > 64) throw ArrangementError("at most 64 hyperplanes are supported");
}

Arrangement Arrangement::from_forms(const FieldDescriptor* field, int dimension, const std::vector<Polynomial>& forms,
                                    std::vector<std::string> variable_names) {
  std::vector<ScalarVector> normals;
  for (const auto& f : forms) {
    if (f.nvars() != dimension || f.field() != field) throw ArrangementError("form lives in another ring");
    if (f.degree() != 1 || !f.is_homogeneous()) throw ArrangementError("hyperplanes must be linear forms");
    ScalarVector v(static_cast<std::size_t>(dimension), Scalar(field));
    for (const auto& t : f.terms()) v[static_cast<std::size_t>(t.mono.last_variable())] = t.coeff;
    normals.push_back(std::move(v));
  }
  return Arrangement(field, dimension, normals, std::move(variable_names));
}

Polynomial Arrangement::form(int i) const {
  return Polynomial::linear_form(field_, normals_.at(static_cast<std::size_t>(i)));
}

std::vector<Polynomial> Arrangement::forms() const {
  std::vector<Polynomial> out;
  for (int i = 0; i < size(); ++i) out.push_back(form(i));
  return out;
}

Polynomial Arrangement::defining_polynomial() const {
  Polynomial q = Polynomial::constant(field_, dim_, 1);
  for (int i = 0; i < size(); ++i) q *= form(i);
  return q;
}

int Arrangement::rank() const {
  if (normals_.empty()) return 0;
  return Matrix::from_rows(field_, normals_, dim_).rank();
}

int Arrangement::index_of(const ScalarVector& v) const {
  ScalarVector n;
  try {
    n = normalize_linear_form(v);
  } catch (const ArrangementError&) {
    return -1;
  }
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (normals_[i] == n) return static_cast<int>(i);
  return -1;
}

Arrangement Arrangement::deleted(int index) const {
  if (index < 0 || index >= size()) throw ArrangementError("hyperplane is not in the arrangement");
  std::vector<ScalarVector> rest;
  for (int i = 0; i < size(); ++i)
    if (i != index) rest.push_back(normals_[static_cast<std::size_t>(i)]);
  return Arrangement(field_, dim_, rest, names_);
}

std::vector<ScalarVector> kernel_basis(const FieldDescriptor* field, const std::vector<ScalarVector>& rows, int dim) {
  if (rows.empty()) {
    std::vector<ScalarVector> out;
    for (int j = 0; j < dim; ++j) {
      ScalarVector e(static_cast<std::size_t>(dim), Scalar(field));
      e[static_cast<std::size_t>(j)] = Scalar(field, 1);
      out.push_back(std::move(e));
    }
    return out;
  }
  return Matrix::from_rows(field, rows, dim).kernel();
}

Polynomial restrict_polynomial(const Polynomial& f, const std::vector<ScalarVector>& basis) {
  const int k = static_cast<int>(basis.size());
  std::vector<Polynomial> images;
  for (int i = 0; i < f.nvars(); ++i) {
    std::vector<Scalar> coeffs;
    for (int j = 0; j < k; ++j) coeffs.push_back(basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    images.push_back(k == 0 ? Polynomial(f.field(), 0) : Polynomial::linear_form(f.field(), coeffs));
  }
  return f.substitute(images);
}

Restriction restrict_to(const Arrangement& a, int index) {
  if (index < 0 || index >= a.size()) throw ArrangementError("hyperplane is not in the arrangement");
  auto basis = kernel_basis(a.field(), {a.normals()[static_cast<std::size_t>(index)]}, a.dimension());
  const int k = static_cast<int>(basis.size());
  std::vector<ScalarVector> images;
  for (int i = 0; i < a.size(); ++i) {
    if (i == index) continue;
    const auto& n = a.normals()[static_cast<std::size_t>(i)];
    ScalarVector img(static_cast<std::size_t>(k), Scalar(a.field()));
    bool zero = true;
    for (int j = 0; j < k; ++j) {
      for (int c = 0; c < a.dimension(); ++c)
        img[static_cast<std::size_t>(j)] += n[static_cast<std::size_t>(c)] * basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      if (!img[static_cast<std::size_t>(j)].is_zero()) zero = false;
    }
    if (!zero) images.push_back(std::move(img));
  }
  return {Arrangement(a.field(), k, images), std::move(basis)};
}

IntersectionLattice::IntersectionLattice(const Arrangement& a) : dim_(a.dimension()) {
  LatticeElement top;
  top.mobius = 1;
  elems_.push_back(top);
  std::map<std::uint64_t, int> seen{{0, 0}};
  const int n = a.size();
  // Elements are appended in codimension order because each step adds one.
  for (std::size_t idx = 0; idx < elems_.size(); ++idx) {
    const std::uint64_t base_mask = elems_[idx].hyperplanes;
    const std::vector<ScalarVector> base_span = elems_[idx].span;
    for (int h = 0; h < n; ++h) {
      if (base_mask & (std::uint64_t{1} << h)) continue;
      std::vector<ScalarVector> rows = base_span;
      rows.push_back(a.normals()[static_cast<std::size_t>(h)]);
      RowSpace space(a.field(), a.dimension());
      for (const auto& r : rows) space.insert(r);
      std::uint64_t mask = 0;
      for (int k = 0; k < n; ++k)
        if (space.contains(a.normals()[static_cast<std::size_t>(k)])) mask |= std::uint64_t{1} << k;
      if (seen.count(mask)) continue;
      LatticeElement y;
      y.hyperplanes = mask;
      Matrix r = Matrix::from_rows(a.field(), rows, a.dimension()).rref();
      for (int i = 0; i < r.rows(); ++i) y.span.push_back(r.row(i));
      y.codimension = r.rows();
      seen.emplace(mask, static_cast<int>(elems_.size()));
      elems_.push_back(std::move(y));
    }
  }
  std::stable_sort(elems_.begin(), elems_.end(),
                   [](const LatticeElement& p, const LatticeElement& q) { return p.codimension < q.codimension; });
  for (std::size_t i = 1; i < elems_.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const auto mj = elems_[j].hyperplanes, mi = elems_[i].hyperplanes;
      if ((mj & mi) == mj && mj != mi) s += elems_[j].mobius;
    }
    elems_[i].mobius = -s;
  }
}

std::vector<int> IntersectionLattice::rank_counts() const {
  std::vector<int> out;
  for (const auto& e : elems_) {
    if (static_cast<int>(out.size()) <= e.codimension) out.resize(static_cast<std::size_t>(e.codimension) + 1);
    ++out[static_cast<std::size_t>(e.codimension)];
  }
  return out;
}

std::vector<std::pair<int, int>> IntersectionLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      const auto mi = elems_[i].hyperplanes, mj = elems_[j].hyperplanes;
      if (elems_[j].codimension == elems_[i].codimension + 1 && (mi & mj) == mi)
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

IntPoly IntersectionLattice::characteristic_polynomial() const {
  IntPoly chi;
  for (const auto& e : elems_) chi += IntPoly::monomial(dim_ - e.codimension, mpz_class(e.mobius));
  return chi;
}

IntPoly IntersectionLattice::poincare_polynomial() const {
  IntPoly pi;
  for (const auto& e : elems_) {
    mpz_class c = e.mobius;
    if (e.codimension % 2) c = -c;
    pi += IntPoly::monomial(e.codimension, c);
  }
  return pi;
}

}  // namespace starr

#include "starr/logder.hpp"

#include <algorithm>
#include <numeric>

namespace starr {

std::vector<std::vector<int>> subsets_of_size(int n, int p) {
  std::vector<std::vector<int>> out;
  if (p < 0 || p > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(p));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

// Contraction of p-derivations with d(alpha): one row per (p-1)-subset U,
// one column per p-subset T, entry (-1)^(position of i in T) a_i when T = U + {i}.
std::vector<ScalarVector> contraction_rows(const FieldDescriptor* field, const ScalarVector& alpha,
                                           const std::vector<std::vector<int>>& comps,
                                           const std::vector<std::vector<int>>& lower) {
  std::vector<ScalarVector> rows(lower.size(), ScalarVector(comps.size(), Scalar(field)));
  for (std::size_t t = 0; t < comps.size(); ++t) {
    const auto& T = comps[t];
    for (std::size_t pos = 0; pos < T.size(); ++pos) {
      std::vector<int> U = T;
      U.erase(U.begin() + static_cast<long>(pos));
      const auto u = static_cast<std::size_t>(std::find(lower.begin(), lower.end(), U) - lower.begin());
      Scalar c = alpha[static_cast<std::size_t>(T[pos])];
      rows[u][t] = pos % 2 ? -c : c;
    }
  }
  return rows;
}

}  // namespace

DerModule log_derivations(const Arrangement& a, int p) {
  const int l = a.dimension();
  if (p < 0 || p > l) throw ArrangementError("derivation order out of range");
  const auto* field = a.field();
  DerModule d;
  d.p = p;
  d.components = subsets_of_size(l, p);
  const int rank = static_cast<int>(d.components.size());
  d.ambient = FreeModule::make(field, l, rank);

  std::vector<ScalarVector> rows;
  std::vector<int> row_owner;
  if (p > 0) {
    const auto lower = subsets_of_size(l, p - 1);
    for (int h = 0; h < a.size(); ++h) {
      auto raw = contraction_rows(field, a.normals()[static_cast<std::size_t>(h)], d.components, lower);
      Matrix reduced = Matrix::from_rows(field, raw, rank).rref();
      for (int r = 0; r < reduced.rows(); ++r) {
        rows.push_back(reduced.row(r));
        row_owner.push_back(h);
      }
    }
  }

  if (rows.empty()) {
    for (int c = 0; c < rank; ++c) d.basis.push_back(ModuleElement::basis_vector(field, l, rank, c));
  } else {
    const int m = static_cast<int>(rows.size());
    FreeModule target = FreeModule::make(field, l, m);
    std::vector<ModuleElement> columns;
    for (int t = 0; t < rank; ++t) {
      std::vector<Polynomial> comps;
      for (int r = 0; r < m; ++r)
        comps.push_back(Polynomial::constant(field, l, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)]));
      columns.push_back(ModuleElement::from_components(comps));
    }
    std::vector<ModuleElement> relations;
    for (int r = 0; r < m; ++r) {
      std::vector<Polynomial> comps(static_cast<std::size_t>(m), Polynomial(field, l));
      comps[static_cast<std::size_t>(r)] = a.form(row_owner[static_cast<std::size_t>(r)]);
      relations.push_back(ModuleElement::from_components(comps));
    }
    d.basis = kernel_of_map(d.ambient, target, columns, relations).elements();
  }
  GroebnerBasis gb(d.ambient, d.basis);
  d.hilbert = gb.submodule_hilbert_series();
  d.generators = minimal_generators(d.ambient, d.basis);
  for (const auto& g : d.generators) d.degrees.push_back(g.degree(d.ambient.shifts));
  return d;
}

std::vector<DerModule> all_log_derivations(const Arrangement& a) {
  std::vector<DerModule> out;
  for (int p = 0; p <= a.dimension(); ++p) out.push_back(log_derivations(a, p));
  return out;
}

bool satisfies_contraction(const Arrangement& a, int p, const ModuleElement& theta) {
  const int l = a.dimension();
  const auto comps = subsets_of_size(l, p);
  if (theta.rank() != static_cast<int>(comps.size())) return false;
  if (p == 0) return true;
  const auto lower = subsets_of_size(l, p - 1);
  const auto parts = theta.components();
  for (int h = 0; h < a.size(); ++h) {
    GroebnerBasis principal = ideal_basis(a.field(), l, {a.form(h)});
    auto rows = contraction_rows(a.field(), a.normals()[static_cast<std::size_t>(h)], comps, lower);
    for (const auto& row : rows) {
      Polynomial c(a.field(), l);
      for (std::size_t t = 0; t < comps.size(); ++t)
        if (!row[t].is_zero()) c += parts[t] * row[t];
      if (!principal.contains(c)) return false;
    }
  }
  return true;
}

Polynomial apply_derivation(const ModuleElement& theta, const Polynomial& f) {
  Polynomial out(f.field(), f.nvars());
  const auto parts = theta.components();
  for (int i = 0; i < f.nvars(); ++i) {
    const auto& c = parts.at(static_cast<std::size_t>(i));
    if (!c.is_zero()) out += c * f.derivative(i);
  }
  return out;
}

FreenessResult is_free(const Arrangement& a, const DerModule& d1) {
  if (d1.p != 1) throw ArrangementError("freeness needs the module of 1-derivations");
  FreenessResult r;
  r.generator_degrees = d1.degrees;
  const int l = a.dimension();
  const int count = static_cast<int>(d1.generators.size());
  if (count > l) {
    r.reason = std::to_string(count) + " minimal generators exceed rank " + std::to_string(l);
    return r;
  }
  const int sum = std::accumulate(d1.degrees.begin(), d1.degrees.end(), 0);
  if (sum != a.size()) {
    r.reason = "generator degrees sum to " + std::to_string(sum) + ", not " + std::to_string(a.size());
    return r;
  }
  std::vector<std::vector<Polynomial>> m;
  for (const auto& g : d1.generators) m.push_back(g.components());
  Polynomial det = determinant(m);
  Polynomial q = a.defining_polynomial();
  if (det.is_zero()) {
    r.reason = "coefficient determinant vanishes";
    return r;
  }
  Scalar c = det.leading_term().coeff / q.leading_term().coeff;
  if (det != q * c) {
    r.reason = "coefficient determinant is not a multiple of the defining polynomial";
    return r;
  }
  r.free = true;
  r.exponents = d1.degrees;
  std::sort(r.exponents.begin(), r.exponents.end());
  r.reason = "Saito criterion";
  return r;
}

FreenessResult is_free(const Arrangement& a) { return is_free(a, log_derivations(a, 1)); }

BivariatePoly solomon_terao_polynomial(const Arrangement& a, const std::vector<DerModule>& modules) {
  const int l = a.dimension();
  if (static_cast<int>(modules.size()) != l + 1) throw ArrangementError("need D^p for every p");
  BivariatePoly base;  // 1 - x - t
  base.add_to(0, 0, 1);
  base.add_to(1, 0, -1);
  base.add_to(0, 1, -1);
  BivariatePoly total;
  for (int p = 0; p <= l; ++p) {
    const auto& h = modules[static_cast<std::size_t>(p)].hilbert;
    if (h.denominator_exponent != l) throw SeriesError("Hilbert series with an unexpected denominator");
    total += BivariatePoly::from_x(h.numerator) * base.pow(p) * BivariatePoly::from_t(IntPoly::monomial(l - p));
  }
  for (int k = 0; k < l; ++k) {
    auto q = total.divide_one_minus_x();
    if (!q) throw SeriesError("Psi is not a polynomial: division by (1 - x) left a remainder");
    total = *q;
  }
  return total;
}

BivariatePoly solomon_terao_polynomial(const Arrangement& a) {
  return solomon_terao_polynomial(a, all_log_derivations(a));
}

BivariatePoly free_psi(const std::vector<int>& exponents) {
  BivariatePoly out;
  out.add_to(0, 0, 1);
  for (int d : exponents) {
    BivariatePoly f;
    for (int i = 0; i < d; ++i) f.add_to(i, 1, 1);
    f.add_to(d, 0, 1);
    out = out * f;
  }
  return out;
}

AcyclicityResult check_acyclicity(const Arrangement& a, const std::vector<DerModule>& modules) {
  const int l = a.dimension();
  IntPoly sum;
  for (int p = 0; p <= l; ++p) {
    mpz_class sign = (l - p) % 2 ? -1 : 1;
    sum += modules[static_cast<std::size_t>(p)].hilbert.numerator * IntPoly::monomial(l - p, sign);
  }
  return {sum.is_zero(), sum};
}

bool terao_factorization_check(const Arrangement& a, const FreenessResult& freeness) {
  if (!freeness.free) throw ArrangementError("factorization check needs a free arrangement");
  IntPoly prod{1};
  for (int d : freeness.exponents) prod = prod * IntPoly{1, d};
  return IntersectionLattice(a).poincare_polynomial() == prod;
}

TamenessResult is_tame(const Arrangement& a, const std::vector<DerModule>& modules, const FreenessResult& freeness) {
  TamenessResult r;
  const int l = a.dimension();
  if (freeness.free) {
    r.tame = true;
    r.via = "free";
    return r;
  }
  if (l <= 3) {
    r.tame = true;
    r.via = "rank<=3";
    return r;
  }
  r.via = "resolution";
  r.tame = true;
  for (int p = 0; p <= l; ++p) {
    const auto& d = modules[static_cast<std::size_t>(p)];
    const int pd = projective_dimension(d.ambient, d.generators);
    r.projective_dimensions.push_back(pd);
    if (pd > l - p) r.tame = false;
  }
  return r;
}

}  // namespace starr

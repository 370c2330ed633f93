#include "starr/stalg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace starr {

namespace {

constexpr std::uint64_t kEtaSeed = 0x5eed0001;
constexpr std::uint64_t kLefschetzSeed = 0x5eed0002;

// Portable small integer in [-radius, radius]; avoids the unspecified
// distributions of <random>.
long small_int(std::mt19937_64& rng, long radius) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) - radius;
}

bool jacobian_is_zero_dimensional(const Polynomial& f) {
  const int n = f.nvars();
  if (n == 0) return true;
  std::vector<Polynomial> partials;
  for (int i = 0; i < n; ++i) partials.push_back(f.derivative(i));
  GroebnerBasis gb = ideal_basis(f.field(), n, partials);
  if (gb.is_everything()) return true;
  std::vector<bool> pure(static_cast<std::size_t>(n), false);
  const auto leads = gb.leading_monomials().front();
  for (const auto& m : leads) {
    const int v = m.last_variable();
    if (v >= 0 && m[v] == m.degree()) pure[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

Polynomial hessian_determinant(const Polynomial& eta) {
  const int n = eta.nvars();
  if (n == 0) return Polynomial::constant(eta.field(), 0, 1);
  std::vector<std::vector<Polynomial>> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(i)].push_back(eta.derivative(i).derivative(j));
  return determinant(h);
}

}  // namespace

bool nondegenerate_on(const Polynomial& eta, const std::vector<ScalarVector>& basis) {
  if (basis.empty()) return true;
  return jacobian_is_zero_dimensional(restrict_polynomial(eta, basis));
}

EtaValidation verify_eta(const Arrangement& a, const Polynomial& eta) {
  if (eta.nvars() != a.dimension() || eta.field() != a.field()) throw EtaError("eta lives in another ring");
  if (eta.is_zero() || !eta.is_homogeneous()) throw EtaError("eta must be a nonzero homogeneous polynomial");
  EtaValidation v;
  IntersectionLattice lattice(a);
  const auto& elems = lattice.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    ++v.checked;
    auto basis = kernel_basis(a.field(), elems[i].span, a.dimension());
    if (!nondegenerate_on(eta, basis)) {
      v.valid = false;
      v.failing.push_back(static_cast<int>(i));
    }
  }
  return v;
}

std::vector<Polynomial> eta_candidates(const FieldDescriptor* field, int nvars, int degree, int count) {
  std::vector<Polynomial> out;
  auto power_sum = [&](bool weighted) {
    Polynomial p(field, nvars);
    for (int i = 0; i < nvars; ++i)
      p += Polynomial::monomial(field, nvars, Monomial::variable(i, degree), Scalar(field, weighted ? i + 1 : 1));
    return p;
  };
  if (count > 0) out.push_back(power_sum(false));
  if (count > 1) out.push_back(power_sum(true));
  std::mt19937_64 rng(kEtaSeed + static_cast<std::uint64_t>(degree));
  const auto monos = monomials_of_degree(nvars, degree);
  while (static_cast<int>(out.size()) < count) {
    std::vector<Term> terms;
    for (const auto& m : monos) terms.push_back({m, Scalar(field, small_int(rng, 3))});
    Polynomial p = Polynomial::from_terms(field, nvars, std::move(terms));
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

EtaSpec default_eta(const Arrangement& a, int degree) {
  if (degree < 1) throw EtaError("eta needs degree at least 1");
  const auto candidates = eta_candidates(a.field(), a.dimension(), degree);
  EtaValidation last;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    last = verify_eta(a, candidates[k]);
    if (last.valid) return {candidates[k], degree, static_cast<int>(k), last};
  }
  std::string msg = "no valid eta of degree " + std::to_string(degree) + " among " +
                    std::to_string(candidates.size()) + " candidates; last failures at lattice elements";
  for (int f : last.failing) msg += " " + std::to_string(f);
  throw EtaError(msg);
}

QuotientAlgebra::QuotientAlgebra(GroebnerBasis ideal) : ideal_(std::move(ideal)) {
  if (ideal_.ambient().rank != 1) throw EtaError("quotient algebra needs an ideal");
  const int n = ideal_.ambient().nvars;
  offsets_.push_back(0);
  if (ideal_.is_everything()) return;
  const auto leads = ideal_.leading_monomials().front();
  std::vector<bool> pure(static_cast<std::size_t>(n), false);
  for (const auto& m : leads) {
    const int v = m.last_variable();
    if (v >= 0 && m[v] == m.degree()) pure[static_cast<std::size_t>(v)] = true;
  }
  if (!std::all_of(pure.begin(), pure.end(), [](bool b) { return b; }))
    throw EtaError("quotient is not finite-dimensional");
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> level{Monomial()};
  while (!level.empty()) {
    basis_.insert(basis_.end(), level.begin(), level.end());
    offsets_.push_back(static_cast<int>(basis_.size()));
    std::set<Monomial, MonomialGreater> next;
    for (const auto& m : level)
      for (int i = 0; i < n; ++i) {
        Monomial c = m * Monomial::variable(i);
        if (standard(c)) next.insert(c);
      }
    level.assign(next.begin(), next.end());
  }
}

QuotientAlgebra QuotientAlgebra::from_generators(const FieldDescriptor* field, int nvars,
                                                 const std::vector<Polynomial>& gens) {
  return QuotientAlgebra(ideal_basis(field, nvars, gens));
}

std::vector<int> QuotientAlgebra::hilbert_vector() const {
  std::vector<int> out;
  for (std::size_t d = 0; d + 1 < offsets_.size(); ++d) out.push_back(offsets_[d + 1] - offsets_[d]);
  return out;
}

IntPoly QuotientAlgebra::hilbert_polynomial() const {
  std::vector<mpz_class> c;
  for (int h : hilbert_vector()) c.emplace_back(h);
  return IntPoly(std::move(c));
}

std::pair<int, int> QuotientAlgebra::degree_range(int d) const {
  if (d < 0 || d > top_degree()) return {dimension(), dimension()};
  return {offsets_[static_cast<std::size_t>(d)], offsets_[static_cast<std::size_t>(d) + 1]};
}

int QuotientAlgebra::index_of(const Monomial& m) const {
  auto [lo, hi] = degree_range(m.degree());
  for (int i = lo; i < hi; ++i)
    if (basis_[static_cast<std::size_t>(i)] == m) return i;
  return -1;
}

ScalarVector QuotientAlgebra::coordinates(const Polynomial& f) const {
  ScalarVector v(basis_.size(), Scalar(field()));
  const Polynomial nf = normal_form(f);
  for (const auto& t : nf.terms()) {
    const int i = index_of(t.mono);
    if (i < 0) throw EtaError("normal form left a non-standard monomial");
    v[static_cast<std::size_t>(i)] = t.coeff;
  }
  return v;
}

Polynomial QuotientAlgebra::from_coordinates(const ScalarVector& v) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.push_back({basis_[i], v[i]});
  return Polynomial::from_terms(field(), nvars(), std::move(terms));
}

Matrix QuotientAlgebra::multiplication_matrix(const Polynomial& g, int from) const {
  auto [s0, s1] = degree_range(from);
  const int e = g.is_zero() ? 0 : g.degree();
  auto [t0, t1] = degree_range(from + e);
  Matrix m(field(), t1 - t0, s1 - s0);
  for (int j = s0; j < s1; ++j) {
    ScalarVector c = coordinates(g * Polynomial::monomial(field(), nvars(), basis_[static_cast<std::size_t>(j)],
                                                          Scalar(field(), 1)));
    for (int i = t0; i < t1; ++i) m.at(i - t0, j - s0) = c[static_cast<std::size_t>(i)];
  }
  return m;
}

std::vector<Polynomial> QuotientAlgebra::socle_basis() const {
  std::vector<Polynomial> out;
  const int r = top_degree();
  for (int d = 0; d <= r; ++d) {
    auto [s0, s1] = degree_range(d);
    std::vector<ScalarVector> rows;
    for (int i = 0; i < nvars(); ++i) {
      Matrix m = multiplication_matrix(Polynomial::variable(field(), nvars(), i), d);
      for (int k = 0; k < m.rows(); ++k) rows.push_back(m.row(k));
    }
    std::vector<ScalarVector> kernel = kernel_basis(field(), rows, s1 - s0);
    for (const auto& v : kernel) {
      ScalarVector full(basis_.size(), Scalar(field()));
      for (int k = s0; k < s1; ++k) full[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k - s0)];
      out.push_back(from_coordinates(full));
    }
  }
  return out;
}

STAlgebra st_algebra(const Arrangement& a, const Polynomial& eta) {
  if (a.dimension() == 0) return st_algebra(a, eta, DerModule{});
  return st_algebra(a, eta, log_derivations(a, 1));
}

STAlgebra st_algebra(const Arrangement& a, const Polynomial& eta, const DerModule& d1) {
  if (eta.nvars() != a.dimension() || eta.field() != a.field()) throw EtaError("eta lives in another ring");
  if (eta.is_zero() || !eta.is_homogeneous()) throw EtaError("eta must be a nonzero homogeneous polynomial");
  std::vector<Polynomial> gens;
  for (const auto& theta : d1.generators) {
    Polynomial g = apply_derivation(theta, eta);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  std::optional<QuotientAlgebra> q;
  try {
    q.emplace(QuotientAlgebra::from_generators(a.field(), a.dimension(), gens));
  } catch (const EtaError&) {
    throw EtaError("eta not generic for this arrangement: the quotient is infinite-dimensional");
  }
  return {a, eta, eta.degree(), d1.generators, gens, std::move(*q)};
}

bool strong_lefschetz_element(const QuotientAlgebra& q, const Polynomial& g) {
  const int r = q.top_degree();
  const auto h = q.hilbert_vector();
  for (int i = 0; 2 * i < r; ++i) {
    const int j = r - i;
    Polynomial power = q.normal_form(g.pow(j - i));
    if (power.is_zero()) {
      if (h[static_cast<std::size_t>(i)] && h[static_cast<std::size_t>(j)]) return false;
      continue;
    }
    Matrix m = q.multiplication_matrix(power, i);
    if (m.rank() != std::min(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(j)])) return false;
  }
  return true;
}

std::string strong_lefschetz_verdict(const QuotientAlgebra& q, int trials) {
  std::mt19937_64 rng(kLefschetzSeed);
  for (int t = 0; t < trials; ++t) {
    std::vector<Scalar> c;
    for (int i = 0; i < q.nvars(); ++i) {
      long v = small_int(rng, 5);
      c.push_back(Scalar(q.field(), v == 0 ? 1 : v));
    }
    Polynomial g = q.nvars() ? Polynomial::linear_form(q.field(), c) : Polynomial(q.field(), 0);
    if (q.nvars() == 0 || strong_lefschetz_element(q, g)) return "holds";
  }
  return "not_established";
}

AnalysisReport analyze(const STAlgebra& st) {
  AnalysisReport r;
  const auto& q = st.algebra;
  const int l = st.arrangement.dimension();
  r.hilbert_vector = q.hilbert_vector();
  r.top_degree = q.top_degree();

  for (const auto& g : minimal_generators(q.field(), q.nvars(), st.ideal_generators))
    r.minimal_generator_degrees.push_back(g.degree());
  std::sort(r.minimal_generator_degrees.begin(), r.minimal_generator_degrees.end());
  r.complete_intersection = static_cast<int>(r.minimal_generator_degrees.size()) == l;

  if (auto f = factor_quantum_integers(q.hilbert_polynomial())) {
    std::vector<int> e = *f;
    while (static_cast<int>(e.size()) < l) e.insert(e.begin(), 0);
    r.quantum_factors = e;
  }
  if (r.complete_intersection) {
    std::vector<int> expected, exps;
    for (int deg : r.minimal_generator_degrees) {
      expected.push_back(deg - 1);
      exps.push_back(deg - 1 - st.degree + 2);
    }
    r.recovered_exponents = exps;
    r.factorization_consistent = r.quantum_factors && *r.quantum_factors == expected;
  }

  const auto socle = q.socle_basis();
  r.socle_dimension = static_cast<int>(socle.size());
  for (const auto& s : socle) r.socle_degrees.push_back(s.degree());
  r.gorenstein = r.socle_dimension == 1;
  r.palindromic = q.hilbert_polynomial().is_palindromic();
  r.slp = strong_lefschetz_verdict(q);
  r.expected_top_degree = st.arrangement.size() + l * (st.degree - 2);
  r.socle_degree_conjecture = r.top_degree == r.expected_top_degree && r.top_degree >= 0 &&
                              r.hilbert_vector[static_cast<std::size_t>(r.top_degree)] == 1;
  return r;
}

SocleWitness socle_witness(const STAlgebra& st) {
  SocleWitness w;
  w.witness = st.arrangement.defining_polynomial() * hessian_determinant(st.eta);
  w.normal_form = st.algebra.normal_form(w.witness);
  w.nonzero = !w.normal_form.is_zero();
  w.in_socle = true;
  for (int i = 0; i < st.algebra.nvars(); ++i)
    if (!st.algebra.normal_form(w.normal_form * Polynomial::variable(w.normal_form.field(), st.algebra.nvars(), i))
             .is_zero())
      w.in_socle = false;
  return w;
}

Polynomial apply_differential_operator(const Polynomial& f, const Polynomial& F) {
  Polynomial out(F.field(), F.nvars());
  for (const auto& t : f.terms()) {
    Polynomial g = F;
    for (int i = 0; i < f.nvars() && !g.is_zero(); ++i)
      for (int k = 0; k < t.mono[i] && !g.is_zero(); ++k) g = g.derivative(i);
    out += g * t.coeff;
  }
  return out;
}

MacaulayDual macaulay_dual(const QuotientAlgebra& q, const std::vector<Polynomial>& ideal_generators) {
  if (q.socle_basis().size() != 1) throw EtaError("Macaulay dual needs a Gorenstein algebra");
  const int r = q.top_degree();
  const int n = q.nvars();
  const int functional = q.degree_range(r).first;
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(n, r)) {
    Scalar c = q.coordinates(Polynomial::monomial(q.field(), n, m, Scalar(q.field(), 1)))[static_cast<std::size_t>(functional)];
    if (c.is_zero()) continue;
    mpz_class fact = 1;
    for (int i = 0; i < n; ++i)
      for (int k = 2; k <= m[i]; ++k) fact *= k;
    terms.push_back({m, c / Scalar(q.field(), mpq_class(fact))});
  }
  MacaulayDual d;
  d.dual = Polynomial::from_terms(q.field(), n, std::move(terms));
  d.annihilated = std::all_of(ideal_generators.begin(), ideal_generators.end(), [&](const Polynomial& g) {
    return apply_differential_operator(g, d.dual).is_zero();
  });
  return d;
}

NilpotentSearch exists_nilpotent_linear(const QuotientAlgebra& q) {
  NilpotentSearch out;
  const auto* field = q.field();
  auto [s0, s1] = q.degree_range(1);
  const int k = s1 - s0;
  if (k == 0) return out;
  std::vector<Polynomial> u;
  for (int j = s0; j < s1; ++j)
    u.push_back(Polynomial::monomial(field, q.nvars(), q.standard_monomials()[static_cast<std::size_t>(j)], Scalar(field, 1)));

  // Coordinates of v^2 for v = sum c_j u_j, as quadrics in the c_j.
  auto [t0, t1] = q.degree_range(2);
  std::vector<std::vector<Term>> quadrics(static_cast<std::size_t>(t1 - t0));
  for (int j = 0; j < k; ++j)
    for (int l = j; l < k; ++l) {
      ScalarVector c = q.coordinates(u[static_cast<std::size_t>(j)] * u[static_cast<std::size_t>(l)]);
      const Monomial cm = Monomial::variable(j) * Monomial::variable(l);
      for (int m = t0; m < t1; ++m) {
        Scalar s = c[static_cast<std::size_t>(m)];
        if (j != l) s *= Scalar(field, 2);
        if (!s.is_zero()) quadrics[static_cast<std::size_t>(m - t0)].push_back({cm, s});
      }
    }
  std::vector<Polynomial> system;
  for (auto& terms : quadrics) {
    Polynomial p = Polynomial::from_terms(field, k, std::move(terms));
    if (!p.is_zero()) system.push_back(std::move(p));
  }
  auto var = [&](int j) { return Polynomial::variable(field, k, j); };
  auto one = Polynomial::constant(field, k, 1);
  auto consistent = [&](const std::vector<Polynomial>& gens) { return !ideal_basis(field, k, gens).is_everything(); };

  for (int slice = 0; slice < k; ++slice) {
    std::vector<Polynomial> gens = system;
    for (int j = 0; j < slice; ++j) gens.push_back(var(j));
    gens.push_back(var(slice) - one);
    if (!consistent(gens)) continue;
    out.exists = true;

    // Fix the remaining coordinates one at a time to small rationals.
    std::vector<Scalar> value(static_cast<std::size_t>(k), Scalar(field));
    value[static_cast<std::size_t>(slice)] = Scalar(field, 1);
    bool complete = true;
    for (int j = slice + 1; j < k && complete; ++j) {
      bool fixed = false;
      for (long a : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) {
        std::vector<Polynomial> trial = gens;
        trial.push_back(var(j) - Polynomial::constant(field, k, a));
        if (consistent(trial)) {
          gens = std::move(trial);
          value[static_cast<std::size_t>(j)] = Scalar(field, a);
          fixed = true;
          break;
        }
      }
      complete = fixed;
    }
    if (complete) {
      Polynomial v(field, q.nvars());
      for (int j = 0; j < k; ++j) v += u[static_cast<std::size_t>(j)] * value[static_cast<std::size_t>(j)];
      if (!q.normal_form(v).is_zero() && q.normal_form(v * v).is_zero()) {
        out.witness = v;
        return out;
      }
    }
  }
  return out;
}

RestrictionCheck restriction_map_check(const Arrangement& a, int hyperplane, const Polynomial& eta) {
  RestrictionCheck c;
  const Arrangement deletion = a.deleted(hyperplane);
  const Restriction restriction = restrict_to(a, hyperplane);
  const Polynomial eta_h = restriction.pull_back(eta);
  c.eta_valid_on_deletion = verify_eta(deletion, eta).valid;
  c.eta_valid_on_restriction = !eta_h.is_zero() && verify_eta(restriction.arrangement, eta_h).valid;
  if (!c.eta_valid_on_deletion || !c.eta_valid_on_restriction) return c;

  const STAlgebra full = st_algebra(a, eta);
  const STAlgebra del = st_algebra(deletion, eta);
  const STAlgebra res = st_algebra(restriction.arrangement, eta_h);
  c.restricted_hilbert_vector = res.algebra.hilbert_vector();

  c.f2_well_defined = std::all_of(full.ideal_generators.begin(), full.ideal_generators.end(), [&](const Polynomial& g) {
    return res.algebra.normal_form(restriction.pull_back(g)).is_zero();
  });

  RowSpace image(a.field(), res.algebra.dimension());
  for (const auto& m : full.algebra.standard_monomials())
    image.insert(res.algebra.coordinates(restriction.pull_back(Polynomial::monomial(a.field(), a.dimension(), m, Scalar(a.field(), 1)))));
  c.f2_surjective = image.rank() == res.algebra.dimension();

  const Polynomial alpha = a.form(hyperplane);
  c.f1_well_defined = std::all_of(del.ideal_generators.begin(), del.ideal_generators.end(), [&](const Polynomial& g) {
    return full.algebra.normal_form(alpha * g).is_zero();
  });

  c.composition_zero = true;
  for (const auto& m : del.algebra.standard_monomials()) {
    Polynomial image_in_full = full.algebra.normal_form(alpha * Polynomial::monomial(a.field(), a.dimension(), m, Scalar(a.field(), 1)));
    if (!res.algebra.normal_form(restriction.pull_back(image_in_full)).is_zero()) c.composition_zero = false;
  }
  return c;
}

}  // namespace starr

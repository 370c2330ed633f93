// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/bruhat_oracle.hpp"
#include "oracle/derivation_oracle.hpp"
#include "starr/corpus.hpp"
#include "starr/coxeter.hpp"
#include "starr/io.hpp"
#include "starr/logder.hpp"
#include "starr/stalg.hpp"

using namespace starr;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (!pass) note << "; ";
    pass = false;
    note << why;
  }
};

std::vector<int> as_ints(const IntPoly& p) {
  std::vector<int> out;
  for (const auto& c : p.coeffs()) out.push_back(static_cast<int>(c.get_si()));
  return out;
}

std::string show(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Polynomial preferred_eta(const CorpusEntry& e) { return e.eta ? *e.eta : default_eta(e.arrangement, 2).eta; }

void c1_ex4(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = example("ex4").arrangement;
  const auto eta = parse_polynomial("x^2+y^2+z^2", a.field(), a.variable_names());
  const auto hv = st_algebra(a, eta).algebra.hilbert_vector();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (hv != std::vector<int>{1, 3, 5, 4, 1}) o.fail("hilbert vector " + show(hv));
  if (secs >= 10) o.fail("took " + std::to_string(secs) + " s");
  o.note << (o.pass ? "" : "; ") << "hilbert " << show(hv) << ", " << secs << " s";
}

void c2_notsplit(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = example("notsplit");
  const auto& a = e.arrangement;
  const auto eta = parse_polynomial("x^2+y^2+z^2", a.field(), a.variable_names());
  const auto st = st_algebra(a, eta);
  const auto hv = st.algebra.hilbert_vector();
  if (hv != std::vector<int>{1, 3, 5, 6, 6, 6, 4, 1}) o.fail("hilbert vector " + show(hv));
  for (const char* g : {"x^2+y^2+z^2", "z^3-y*z^2", "y^6-y^5*z", "y^6+3*y^4*z^2"})
    if (!st.algebra.normal_form(parse_polynomial(g, a.field(), a.variable_names())).is_zero())
      o.fail(std::string(g) + " not in the ideal");
  if (is_free(a).free) o.fail("reported free");
  const IntPoly pi = IntersectionLattice(a).poincare_polynomial();
  if (pi != IntPoly{1, 1} * IntPoly{1, 3} * IntPoly{1, 3}) o.fail("pi " + pi.to_list_string());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
  o.note << (o.pass ? "" : "; ") << "hilbert " << show(hv) << ", pi " << pi.to_list_string() << ", " << secs << " s";
}

void c3_free_forward(Outcome& o) {
  int n = 0;
  for (const auto& name : free_corpus()) {
    const auto e = example(name);
    const auto& a = e.arrangement;
    const auto d1 = log_derivations(a, 1);
    const auto fr = is_free(a, d1);
    if (!fr.free) {
      o.fail(name + " not free");
      continue;
    }
    const auto st = st_algebra(a, preferred_eta(e), d1);
    IntPoly prod{1};
    for (int d : fr.exponents) prod = prod * IntPoly::quantum_integer(d);
    if (st.algebra.hilbert_polynomial() != prod) o.fail(name + ": hilbert vector not the quantum product");
    const auto soc = analyze(st).socle_degrees;
    if (st.algebra.top_degree() != a.size() || soc != std::vector<int>{a.size()})
      o.fail(name + ": socle degree " + show(soc));
    ++n;
  }
  o.note << (o.pass ? "" : "; ") << n << " free arrangements";
}

void c4_plane_sweep(Outcome& o) {
  int n = 0, nonfree = 0;
  for (const auto& name : plane_corpus()) {
    const auto e = example(name);
    const auto& a = e.arrangement;
    const auto d1 = log_derivations(a, 1);
    const auto fr = is_free(a, d1);
    const auto rep = analyze(st_algebra(a, preferred_eta(e), d1));
    if (rep.complete_intersection != fr.free) o.fail(name + ": complete intersection != free");
    if (fr.free && rep.recovered_exponents != fr.exponents) o.fail(name + ": recovered exponents differ");
    if (!fr.free) ++nonfree;
    ++n;
  }
  if (n < 20) o.fail("corpus too small");
  o.note << (o.pass ? "" : "; ") << n << " arrangements, " << nonfree << " not free";
}

void c5_psi(Outcome& o) {
  int n = 0;
  for (const auto& name : full_corpus()) {
    const auto a = example(name).arrangement;
    const auto mods = all_log_derivations(a);
    BivariatePoly psi;
    try {
      psi = solomon_terao_polynomial(a, mods);
    } catch (const SeriesError& err) {
      o.fail(name + ": " + err.what());
      continue;
    }
    if (psi.at_x_equals_one() != IntersectionLattice(a).poincare_polynomial()) o.fail(name + ": Psi(1,t) != pi");
    if (!a.is_empty() && !psi.at_t_equals_minus_x().is_zero()) o.fail(name + ": Psi(x,-x) != 0");
    const auto fr = is_free(a, mods[1]);
    if (fr.free && psi != free_psi(fr.exponents)) o.fail(name + ": free product form");
    ++n;
  }
  o.note << (o.pass ? "" : "; ") << n << " arrangements";
}

void c6_tame_hilbert(Outcome& o) {
  int n = 0;
  for (const auto& name : full_corpus()) {
    const auto a = example(name).arrangement;
    if (a.dimension() > 3) continue;
    const auto mods = all_log_derivations(a);
    const auto expect = as_ints(solomon_terao_polynomial(a, mods).at_t_equals_one());
    const auto cands = eta_candidates(a.field(), a.dimension(), 2);
    std::vector<Polynomial> etas;
    for (const auto& c : cands) {
      if (etas.size() == 2) break;
      if (verify_eta(a, c).valid) etas.push_back(c);
    }
    if (etas.size() < 2) {
      o.fail(name + ": fewer than two valid eta");
      continue;
    }
    for (const auto& eta : etas) {
      const auto hv = st_algebra(a, eta, mods[1]).algebra.hilbert_vector();
      if (hv != expect) o.fail(name + ": " + show(hv) + " vs Psi(x,1) " + show(expect));
    }
    ++n;
  }
  o.note << (o.pass ? "" : "; ") << n << " arrangements, two eta each";
}

void c7_socle(Outcome& o) {
  int n = 0;
  for (const auto& name : full_corpus()) {
    const auto e = example(name);
    const auto w = socle_witness(st_algebra(e.arrangement, default_eta(e.arrangement, 2).eta));
    if (!w.nonzero) o.fail(name + ": witness is zero");
    if (!w.in_socle) o.fail(name + ": witness not in socle");
    ++n;
  }
  o.note << (o.pass ? "" : "; ") << n << " arrangements";
}

void c8_coxeter(Outcome& o) {
  int ideals = 0;
  for (auto [type, rank] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}}) {
    const auto rs = root_system(type, rank);
    for (const auto& ideal : all_lower_ideals(rs)) {
      const auto a = ideal_arrangement(rs, ideal);
      const auto fr = is_free(a);
      if (!fr.free || fr.exponents != ideal_exponents(rs, ideal, a.dimension()))
        o.fail(std::string(1, type) + std::to_string(rank) + " ideal " + show(ideal));
      ++ideals;
    }
  }
  int perms = 0;
  for (const auto& w : all_permutations(4)) {
    const auto fr = is_free(inversion_arrangement(w));
    if (!fr.free) continue;
    long prod = 1;
    for (int d : fr.exponents) prod *= 1 + d;
    const long interval = bruhat_interval_size(w);
    if (interval != oracle::bruhat_lower_interval(w)) o.fail(permutation_to_string(w) + ": Bruhat count disagrees");
    if (prod != interval)
      o.fail(permutation_to_string(w) + ": prod(1+d_i) = " + std::to_string(prod) + " but |[e,w]| = " +
             std::to_string(interval));
    ++perms;
  }
  o.note << (o.pass ? "" : "; ") << ideals << " ideals, " << perms << " free inversion arrangements";
}

void c9_schubert(Outcome& o) {
  const auto* Q = FieldDescriptor::rational();
  const auto sch = QuotientAlgebra::from_generators(Q, 4, schubert_presentation_4123());
  const auto v = parse_polynomial("x1+x2+x3", Q, default_variable_names(4));
  if (sch.normal_form(v).is_zero()) o.fail("x1+x2+x3 is zero");
  if (!sch.normal_form(v.pow(2)).is_zero()) o.fail("(x1+x2+x3)^2 is not zero");
  if (!exists_nilpotent_linear(sch).exists) o.fail("no nilpotent found in the presentation");
  const auto a = inversion_arrangement(parse_permutation("4123"));
  const auto st = st_algebra(a, lowest_invariant(root_system('A', 3)));
  if (exists_nilpotent_linear(st.algebra).exists) o.fail("ST has a square-zero linear form");
  o.note << (o.pass ? "" : "; ") << "hilbert " << show(st.algebra.hilbert_vector());
}

void c10_oracle(Outcome& o) {
  int n = 0;
  for (const auto& name : full_corpus()) {
    const auto e = example(name);
    const auto& a = e.arrangement;
    if (a.dimension() > 3) continue;
    const auto mods = all_log_derivations(a);
    const Polynomial eta = preferred_eta(e);
    const auto hv = st_algebra(a, eta, mods[1]).algebra.hilbert_vector();
    for (int d = 0; d <= 8; ++d) {
      for (int p = 0; p <= a.dimension(); ++p)
        if (mods[static_cast<std::size_t>(p)].hilbert.coefficient(d) != oracle::derivation_dimension(a, p, d))
          o.fail(name + ": D^" + std::to_string(p) + " in degree " + std::to_string(d));
      const long whole = static_cast<long>(monomials_of_degree(a.dimension(), d).size());
      const long h = d < static_cast<int>(hv.size()) ? hv[static_cast<std::size_t>(d)] : 0;
      if (oracle::ideal_dimension(a, eta, d) != whole - h) o.fail(name + ": ideal in degree " + std::to_string(d));
    }
    ++n;
  }
  o.note << (o.pass ? "" : "; ") << n << " arrangements, degrees 0..8";
}

void c11_gorenstein(Outcome& o) {
  const auto a = example("ex4").arrangement;
  const auto rep = analyze(st_algebra(a, default_eta(a, 2).eta));
  if (rep.gorenstein) o.fail("reported Gorenstein");
  if (rep.palindromic) o.fail("reported palindromic");
  o.note << (o.pass ? "" : "; ") << "socle degrees " << show(rep.socle_degrees);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"ex4 hilbert vector", c1_ex4},
      {"notsplit over Q(sqrt 2)", c2_notsplit},
      {"free arrangements: quantum product and socle degree", c3_free_forward},
      {"three variables: complete intersection iff free", c4_plane_sweep},
      {"Psi identities", c5_psi},
      {"hilbert vector = Psi(x,1) for two eta", c6_tame_hilbert},
      {"socle witness", c7_socle},
      {"ideal and inversion arrangements", c8_coxeter},
      {"4123 square-zero linear forms", c9_schubert},
      {"degreewise oracle", c10_oracle},
      {"ex4 not Gorenstein", c11_gorenstein},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " (" << o.note.str()
              << "; " << secs << " s)" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " passed" << std::endl;
  return failed ? 1 : 0;
}

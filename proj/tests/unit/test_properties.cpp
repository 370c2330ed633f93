#include <doctest.h>

#include "starr/corpus.hpp"
#include "starr/logder.hpp"
#include "starr/stalg.hpp"

using namespace starr;

namespace {

std::vector<std::string> small_corpus() {
  return {"ex4", "boolean-3", "braid-3", "pencil-4", "generic-3-5", "plane-2", "plane-4", "plane-7", "single-3", "empty-2"};
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("Psi is a polynomial with the expected specializations") {
  for (const auto& name : small_corpus()) {
    CAPTURE(name);
    const auto a = example(name).arrangement;
    const auto mods = all_log_derivations(a);
    const auto psi = solomon_terao_polynomial(a, mods);
    CHECK(psi.at_x_equals_one() == IntersectionLattice(a).poincare_polynomial());
    if (!a.is_empty()) CHECK(psi.at_t_equals_minus_x().is_zero());
    const auto fr = is_free(a, mods[1]);
    if (fr.free) CHECK(psi == free_psi(fr.exponents));
    CHECK(check_acyclicity(a, mods).holds == !a.is_empty());
  }
}

TEST_CASE("Hilbert vector equals Psi(x,1) and does not depend on eta") {
  for (const auto& name : small_corpus()) {
    CAPTURE(name);
    const auto a = example(name).arrangement;
    const auto mods = all_log_derivations(a);
    const auto psi1 = solomon_terao_polynomial(a, mods).at_t_equals_one();
    const auto cands = eta_candidates(a.field(), a.dimension(), 2);
    for (int k : {0, 1}) {
      REQUIRE(verify_eta(a, cands[static_cast<std::size_t>(k)]).valid);
      const auto st = st_algebra(a, cands[static_cast<std::size_t>(k)], mods[1]);
      CHECK(st.algebra.hilbert_polynomial() == psi1);
      CHECK(st.algebra.hilbert_polynomial().evaluate(1) == psi1.evaluate(1));
    }
  }
}

TEST_CASE("complete intersection iff free, with recovered exponents") {
  for (const auto& name : small_corpus()) {
    CAPTURE(name);
    const auto a = example(name).arrangement;
    const auto d1 = log_derivations(a, 1);
    const auto fr = is_free(a, d1);
    const auto rep = analyze(st_algebra(a, default_eta(a, 2).eta, d1));
    CHECK(rep.complete_intersection == fr.free);
    if (fr.free) {
      CHECK(rep.recovered_exponents == fr.exponents);
      IntPoly prod{1};
      for (int e : fr.exponents) prod = prod * IntPoly::quantum_integer(e);
      CHECK(IntPoly(std::vector<mpz_class>(rep.hilbert_vector.begin(), rep.hilbert_vector.end())) == prod);
      CHECK(rep.top_degree == a.size());
    }
    CHECK(rep.factorization_consistent);
  }
}

TEST_CASE("Hilbert vectors are positive up to the top degree") {
  for (const auto& name : small_corpus()) {
    const auto a = example(name).arrangement;
    const auto st = st_algebra(a, default_eta(a, 2).eta);
    for (int h : st.algebra.hilbert_vector()) CHECK(h > 0);
    CHECK(static_cast<int>(st.algebra.hilbert_vector().size()) == st.algebra.top_degree() + 1);
  }
}

TEST_CASE("socle witness on a cubic eta") {
  for (const char* name : {"ex4", "braid-3", "boolean-3"}) {
    CAPTURE(name);
    const auto a = example(name).arrangement;
    const auto st = st_algebra(a, default_eta(a, 3).eta);
    const auto w = socle_witness(st);
    CHECK(w.nonzero);
    CHECK(w.in_socle);
    CHECK(st.algebra.top_degree() == a.size() + a.dimension());
  }
}

}

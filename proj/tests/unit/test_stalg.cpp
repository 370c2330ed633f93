#include <doctest.h>

#include "starr/corpus.hpp"
#include "starr/coxeter.hpp"
#include "starr/io.hpp"
#include "starr/stalg.hpp"

using namespace starr;

namespace {

const FieldDescriptor* Q = FieldDescriptor::rational();

STAlgebra st_of(const std::string& name) {
  const auto e = example(name);
  return st_algebra(e.arrangement, e.eta ? *e.eta : default_eta(e.arrangement, 2).eta);
}

}  // namespace

TEST_SUITE("stalg") {

TEST_CASE("ex4") {
  const auto st = st_of("ex4");
  const auto rep = analyze(st);
  CHECK(rep.hilbert_vector == std::vector<int>{1, 3, 5, 4, 1});
  CHECK(rep.top_degree == 4);
  CHECK(!rep.complete_intersection);
  CHECK(!rep.gorenstein);
  CHECK(!rep.palindromic);
  CHECK(rep.socle_degrees == std::vector<int>{3, 4});
  CHECK(!rep.quantum_factors.has_value());
  CHECK(rep.socle_degree_conjecture);
  CHECK_THROWS_AS(macaulay_dual(st.algebra, st.ideal_generators), EtaError);
}

TEST_CASE("notsplit generators") {
  const auto e = example("notsplit");
  const auto st = st_algebra(e.arrangement, *e.eta);
  CHECK(st.algebra.hilbert_vector() == std::vector<int>{1, 3, 5, 6, 6, 6, 4, 1});
  for (const char* g : {"x^2 + y^2 + z^2", "z^3 - y*z^2", "y^6 - y^5*z", "y^6 + 3*y^4*z^2"})
    CHECK(st.algebra.normal_form(parse_polynomial(g, e.arrangement.field(), e.arrangement.variable_names())).is_zero());
  CHECK(!st.algebra.normal_form(parse_polynomial("x*y", e.arrangement.field(), e.arrangement.variable_names())).is_zero());
}

TEST_CASE("free arrangements give products of quantum integers") {
  const auto rep = analyze(st_of("braid-3"));
  CHECK(rep.hilbert_vector == std::vector<int>{1, 2, 2, 1});
  CHECK(rep.complete_intersection);
  CHECK(rep.gorenstein);
  CHECK(rep.palindromic);
  CHECK(rep.quantum_factors == std::vector<int>{0, 1, 2});
  CHECK(rep.recovered_exponents == std::vector<int>{0, 1, 2});
  CHECK(rep.slp == "holds");
  CHECK(rep.socle_degrees == std::vector<int>{3});
}

TEST_CASE("eta validation") {
  const auto a = example("ex4").arrangement;
  const auto names = a.variable_names();
  CHECK(verify_eta(a, parse_polynomial("x^2+y^2+z^2", Q, names)).valid);
  const auto bad = verify_eta(a, parse_polynomial("x*y", Q, names));
  CHECK(!bad.valid);
  CHECK(!bad.failing.empty());
  const auto cands = eta_candidates(Q, 3, 2);
  CHECK(cands[0] == parse_polynomial("x^2+y^2+z^2", Q, names));
  CHECK(cands[1] == parse_polynomial("x^2+2*y^2+3*z^2", Q, names));
  CHECK(cands == eta_candidates(Q, 3, 2));
  const auto spec = default_eta(a, 2);
  CHECK(spec.attempt == 0);
  CHECK(spec.validation.valid);
  CHECK_THROWS_AS(st_algebra(a, parse_polynomial("x*y", Q, names)), EtaError);
}

TEST_CASE("scaling eta does not change the ideal") {
  const auto a = example("notsplit").arrangement;
  const Polynomial eta = *example("notsplit").eta;
  const Scalar c = Scalar::generator(a.field()) + Scalar(a.field(), 3);
  const auto s1 = st_algebra(a, eta), s2 = st_algebra(a, eta * c);
  CHECK(s1.algebra.ideal().polynomials() == s2.algebra.ideal().polynomials());
}

TEST_CASE("socle witness") {
  for (const char* name : {"ex4", "braid-3", "notsplit"}) {
    CAPTURE(name);
    const auto w = socle_witness(st_of(name));
    CHECK(w.nonzero);
    CHECK(w.in_socle);
  }
}

TEST_CASE("Macaulay dual of a complete intersection") {
  const auto st = st_of("boolean-3");
  const auto dual = macaulay_dual(st.algebra, st.ideal_generators);
  CHECK(dual.annihilated);
  CHECK(dual.dual.degree() == 3);
  CHECK(apply_differential_operator(parse_polynomial("x", Q, {"x", "y", "z"}), parse_polynomial("x^2*y", Q, {"x", "y", "z"})) ==
        parse_polynomial("2*x*y", Q, {"x", "y", "z"}));
}

TEST_CASE("nilpotent linear forms") {
  const auto sch = QuotientAlgebra::from_generators(Q, 4, schubert_presentation_4123());
  const auto n = exists_nilpotent_linear(sch);
  CHECK(n.exists);
  REQUIRE(n.witness.has_value());
  CHECK(!sch.normal_form(*n.witness).is_zero());
  CHECK(sch.normal_form(n.witness->pow(2)).is_zero());
  const auto w = parse_permutation("4123");
  const auto a = inversion_arrangement(w);
  const auto st = st_algebra(a, lowest_invariant(root_system('A', 3)));
  CHECK(!exists_nilpotent_linear(st.algebra).exists);
  CHECK(sch.hilbert_vector() == st.algebra.hilbert_vector());
}

TEST_CASE("deletion-restriction maps") {
  const auto a = example("ex4").arrangement;
  const auto eta = default_eta(a, 2).eta;
  for (int h = 0; h < a.size(); ++h) {
    const auto chk = restriction_map_check(a, h, eta);
    CHECK(chk.ok());
  }
}

TEST_CASE("quotient algebra basics") {
  const auto q = QuotientAlgebra::from_generators(Q, 2, {parse_polynomial("x^2", Q, {"x", "y"}), parse_polynomial("y^3", Q, {"x", "y"})});
  CHECK(q.hilbert_vector() == std::vector<int>{1, 2, 2, 1});
  CHECK(q.dimension() == 6);
  CHECK(q.top_degree() == 3);
  CHECK(q.socle_basis().size() == 1);
  CHECK(strong_lefschetz_verdict(q) == "holds");
  CHECK_THROWS_AS(QuotientAlgebra::from_generators(Q, 2, {parse_polynomial("x^2", Q, {"x", "y"})}), EtaError);
}

}

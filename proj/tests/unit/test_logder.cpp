#include <doctest.h>

#include "starr/corpus.hpp"
#include "starr/logder.hpp"

using namespace starr;

namespace {

std::vector<long> dims(const HilbertSeries& h, int upto) {
  std::vector<long> out;
  for (int d = 0; d <= upto; ++d) out.push_back(h.coefficient(d).get_si());
  return out;
}

}  // namespace

TEST_SUITE("logder") {

TEST_CASE("subset indexing") {
  CHECK(subsets_of_size(3, 2) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(subsets_of_size(4, 0).size() == 1);
  CHECK(subsets_of_size(4, 4).size() == 1);
}

// The values below were produced by the degreewise oracle in tests/oracle.
TEST_CASE("frozen graded dimensions") {
  CHECK(dims(log_derivations(example("boolean-2").arrangement, 1).hilbert, 4) == std::vector<long>{0, 2, 4, 6, 8});
  CHECK(dims(log_derivations(example("pencil-3").arrangement, 1).hilbert, 4) == std::vector<long>{0, 1, 3, 5, 7});
  const auto ex4 = example("ex4").arrangement;
  const auto d1 = log_derivations(ex4, 1);
  CHECK(dims(d1.hilbert, 8) == std::vector<long>{0, 1, 6, 14, 25, 39, 56, 76, 99});
  CHECK(d1.hilbert.numerator == IntPoly{0, 1, 3, -1});
  CHECK(log_derivations(ex4, 2).hilbert.numerator == IntPoly{0, 0, 0, 4, -1});
  CHECK(log_derivations(example("notsplit").arrangement, 1).hilbert.numerator == IntPoly{0, 1, 1, 0, 0, 2, -1});
  CHECK(log_derivations(example("braid-3").arrangement, 1).hilbert.numerator == IntPoly{1, 1, 1});
  CHECK(log_derivations(example("boolean-2").arrangement, 2).hilbert.numerator == IntPoly{0, 0, 1});
}

TEST_CASE("top module is generated by Q") {
  for (const char* name : {"ex4", "braid-3", "notsplit"}) {
    const auto a = example(name).arrangement;
    const auto top = log_derivations(a, a.dimension());
    CHECK(top.degrees == std::vector<int>{a.size()});
  }
}

TEST_CASE("freeness") {
  const auto braid = is_free(example("braid-3").arrangement);
  CHECK(braid.free);
  CHECK(braid.exponents == std::vector<int>{0, 1, 2});
  const auto ex4 = is_free(example("ex4").arrangement);
  CHECK(!ex4.free);
  CHECK(ex4.generator_degrees == std::vector<int>{1, 2, 2, 2});
  const auto ns = is_free(example("notsplit").arrangement);
  CHECK(!ns.free);
  CHECK(ns.generator_degrees == std::vector<int>{1, 2, 5, 5});
  CHECK(is_free(example("boolean-4").arrangement).exponents == std::vector<int>{1, 1, 1, 1});
  CHECK(is_free(example("weyl-B3").arrangement).exponents == std::vector<int>{1, 3, 5});
  CHECK(is_free(example("empty-3").arrangement).exponents == std::vector<int>{0, 0, 0});
}

TEST_CASE("Euler derivation is logarithmic") {
  const auto a = example("notsplit").arrangement;
  std::vector<Polynomial> comps;
  for (int i = 0; i < 3; ++i) comps.push_back(Polynomial::variable(a.field(), 3, i));
  CHECK(satisfies_contraction(a, 1, ModuleElement::from_components(comps)));
  comps[0] = Polynomial::variable(a.field(), 3, 1);
  CHECK(!satisfies_contraction(a, 1, ModuleElement::from_components(comps)));
}

TEST_CASE("every generator satisfies the contraction condition") {
  for (const auto& name : full_corpus()) {
    const auto a = example(name).arrangement;
    if (a.dimension() > 4) continue;
    CAPTURE(name);
    for (const auto& m : all_log_derivations(a))
      for (const auto& g : m.generators) CHECK(satisfies_contraction(a, m.p, g));
  }
}

TEST_CASE("Psi for ex4") {
  const auto a = example("ex4").arrangement;
  const auto psi = solomon_terao_polynomial(a);
  CHECK(psi.at_x_equals_one() == IntPoly{1, 4, 6, 3});
  CHECK(psi.at_t_equals_minus_x().is_zero());
  CHECK(check_acyclicity(a, all_log_derivations(a)).holds);
}

TEST_CASE("free Psi") {
  // single hyperplane in two variables: exponents (0, 1)
  const auto psi = free_psi({0, 1});
  CHECK(psi == solomon_terao_polynomial(example("single-2").arrangement));
  CHECK(free_psi({1, 2}).at_x_equals_one() == IntPoly{1, 3, 2});
}

TEST_CASE("Terao factorization and tameness") {
  const auto a = example("weyl-A3").arrangement;
  const auto fr = is_free(a);
  CHECK(terao_factorization_check(a, fr));
  CHECK_THROWS(terao_factorization_check(example("ex4").arrangement, is_free(example("ex4").arrangement)));
  const auto ex4 = example("ex4").arrangement;
  const auto t = is_tame(ex4, all_log_derivations(ex4), is_free(ex4));
  CHECK(t.tame);
  CHECK(t.via == "rank<=3");
  const auto g = example("generic-4-5").arrangement;
  const auto gm = all_log_derivations(g);
  const auto tg = is_tame(g, gm, is_free(g, gm[1]));
  CHECK(tg.via == "resolution");
  CHECK(tg.projective_dimensions.size() == 5);
}

}

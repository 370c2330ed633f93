#include <doctest.h>

#include "../oracle/whitney_oracle.hpp"
#include "starr/arrangement.hpp"
#include "starr/corpus.hpp"
#include "starr/io.hpp"

using namespace starr;

namespace {
const FieldDescriptor* Q = FieldDescriptor::rational();
ScalarVector v(std::initializer_list<long> xs) {
  ScalarVector out;
  for (long x : xs) out.emplace_back(Q, x);
  return out;
}
}  // namespace

TEST_SUITE("arr") {

TEST_CASE("normalization and deduplication") {
  CHECK(normalize_linear_form(v({0, -2, 4})) == v({0, 1, -2}));
  CHECK_THROWS_AS(normalize_linear_form(v({0, 0})), ArrangementError);
  const Arrangement a(Q, 2, {v({1, 1}), v({-2, -2}), v({1, 0})});
  CHECK(a.size() == 2);
  CHECK(a.index_of(v({3, 3})) == 0);
  CHECK(a.index_of(v({0, 1})) == -1);
  CHECK(a.defining_polynomial().degree() == 2);
  CHECK(a.rank() == 2);
}

TEST_CASE("defining polynomial of ex4") {
  const auto a = example("ex4").arrangement;
  CHECK(a.defining_polynomial() == parse_polynomial("x*y*z*(x+y+z)", Q, {"x", "y", "z"}));
}

TEST_CASE("lattice of the braid arrangement") {
  const IntersectionLattice lat(example("braid-3").arrangement);
  CHECK(lat.rank_counts() == std::vector<int>{1, 3, 1});
  CHECK(lat.poincare_polynomial() == IntPoly{1, 3, 2});
  CHECK(lat.characteristic_polynomial() == IntPoly{0, 2, -3, 1});
  CHECK(lat.elements()[0].mobius == 1);
  CHECK(lat.covers().size() == 6);
}

TEST_CASE("lattice of ex4 and notsplit") {
  CHECK(IntersectionLattice(example("ex4").arrangement).poincare_polynomial() == IntPoly{1, 4, 6, 3});
  CHECK(IntersectionLattice(example("notsplit").arrangement).poincare_polynomial() == IntPoly{1, 7, 15, 9});
}

TEST_CASE("restriction") {
  const auto a = example("ex4").arrangement;
  const Restriction r = restrict_to(a, 0);
  CHECK(r.arrangement.dimension() == 2);
  CHECK(r.arrangement.size() == 3);
  CHECK(a.deleted(0).size() == 3);
  for (const auto& f : a.forms()) {
    const auto pulled = r.pull_back(f);
    CHECK(pulled.degree() <= 1);
  }
  CHECK(r.pull_back(a.form(0)).is_zero());
}

TEST_CASE("Moebius function recursion") {
  for (const auto& name : full_corpus()) {
    CAPTURE(name);
    const IntersectionLattice lat(example(name).arrangement);
    const auto& el = lat.elements();
    for (std::size_t x = 1; x < el.size(); ++x) {
      long sum = 0;
      for (std::size_t y = 0; y < el.size(); ++y)
        if (y != x && (el[y].hyperplanes & ~el[x].hyperplanes) == 0) sum += el[y].mobius;
      CHECK(el[x].mobius == -sum);
    }
  }
}

TEST_CASE("Whitney expansion agrees with the Moebius function") {
  for (const auto& name : full_corpus()) {
    const auto a = example(name).arrangement;
    if (a.size() > 12) continue;
    CAPTURE(name);
    const IntersectionLattice lat(a);
    CHECK(lat.characteristic_polynomial() == oracle::whitney_characteristic(a));
    CHECK(lat.poincare_polynomial() == oracle::whitney_poincare(a));
  }
}

TEST_CASE("deletion-restriction and the factor 1 + t") {
  for (const auto& name : full_corpus()) {
    const auto a = example(name).arrangement;
    CAPTURE(name);
    const IntPoly pi = IntersectionLattice(a).poincare_polynomial();
    if (!a.is_empty()) CHECK(pi.divide_exact(IntPoly{1, 1}).has_value());
    for (int h = 0; h < a.size(); ++h) {
      const IntPoly del = IntersectionLattice(a.deleted(h)).poincare_polynomial();
      const IntPoly res = IntersectionLattice(restrict_to(a, h).arrangement).poincare_polynomial();
      CHECK(pi == del + IntPoly{0, 1} * res);
    }
  }
}

}

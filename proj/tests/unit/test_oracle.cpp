#include <doctest.h>

#include "../oracle/derivation_oracle.hpp"
#include "starr/corpus.hpp"
#include "starr/logder.hpp"
#include "starr/stalg.hpp"

using namespace starr;

TEST_SUITE("oracle") {

TEST_CASE("graded pieces of D^p and of the ideal agree with linear algebra") {
  for (const char* name : {"boolean-2", "pencil-3", "ex4", "braid-3", "plane-9", "weyl-A2", "single-1"}) {
    CAPTURE(name);
    const auto e = example(name);
    const auto& a = e.arrangement;
    const auto mods = all_log_derivations(a);
    for (int p = 0; p <= a.dimension(); ++p)
      for (int d = 0; d <= 6; ++d) {
        CAPTURE(p);
        CAPTURE(d);
        CHECK(mpz_class(oracle::derivation_dimension(a, p, d)) == mods[static_cast<std::size_t>(p)].hilbert.coefficient(d));
      }
    const Polynomial eta = e.eta ? *e.eta : default_eta(a, 2).eta;
    const auto hv = st_algebra(a, eta, mods[1]).algebra.hilbert_vector();
    for (int d = 0; d <= 6; ++d) {
      const long whole = static_cast<long>(monomials_of_degree(a.dimension(), d).size());
      const long h = d < static_cast<int>(hv.size()) ? hv[static_cast<std::size_t>(d)] : 0;
      CHECK(oracle::ideal_dimension(a, eta, d) == whole - h);
    }
  }
}

TEST_CASE("oracle on a hand example") {
  // x y: D(A) = S x dx + S y dy
  const auto a = example("boolean-2").arrangement;
  const auto piece = oracle::derivation_piece(a, 1, 1);
  CHECK(piece.basis.size() == 2);
  CHECK(oracle::derivation_dimension(a, 2, 2) == 1);
  CHECK(oracle::derivation_dimension(a, 2, 1) == 0);
}

}

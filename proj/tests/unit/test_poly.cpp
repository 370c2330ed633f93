#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "starr/io.hpp"
#include "starr/polynomial.hpp"
#include "starr/series.hpp"

using namespace starr;

namespace {

const FieldDescriptor* Q = FieldDescriptor::rational();

Polynomial P(const std::string& s, int n = 3) { return parse_polynomial(s, Q, default_variable_names(n)); }

Polynomial random_poly(std::mt19937& rng, int n, int maxdeg) {
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<int> e(0, maxdeg);
  std::vector<Term> terms;
  for (int k = 0; k < 5; ++k) {
    std::vector<int> ex(static_cast<std::size_t>(n));
    for (auto& x : ex) x = e(rng);
    terms.push_back({Monomial(ex), Scalar(Q, c(rng))});
  }
  return Polynomial::from_terms(Q, n, terms);
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("grevlex order") {
  const auto m = monomials_of_degree(3, 2);
  std::vector<std::string> names;
  for (const auto& x : m) names.push_back(x.to_string({"x", "y", "z"}));
  CHECK(names == std::vector<std::string>{"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"});
  CHECK(compare_grevlex(Monomial::variable(0, 3), Monomial::variable(2, 2)) > 0);
  // multiplicative
  const Monomial a = Monomial::variable(1, 2), b = Monomial::variable(0) * Monomial::variable(2);
  const Monomial c = Monomial::variable(2, 3);
  CHECK(compare_grevlex(a, b) > 0);
  CHECK(compare_grevlex(a * c, b * c) > 0);
}

TEST_CASE("monomial basics") {
  const Monomial m(std::vector<int>{2, 0, 1});
  CHECK(m.degree() == 3);
  CHECK(m.exponents(3) == std::vector<int>{2, 0, 1});
  CHECK(Monomial::lcm(m, Monomial::variable(1)) == Monomial(std::vector<int>{2, 1, 1}));
  CHECK(Monomial::variable(0).divides(m));
  CHECK(!Monomial::variable(1).divides(m));
  CHECK(Monomial::colon(m, Monomial::variable(0, 5)) == Monomial::variable(2));
  CHECK_THROWS(Monomial(std::vector<int>{1, -1}));
  CHECK(monomials_of_degree(4, 3).size() == 20);
}

TEST_CASE("arithmetic and printing") {
  const Polynomial f = P("(x+y)^2");
  CHECK(f.to_string({"x", "y", "z"}) == "x^2 + 2*x*y + y^2");
  CHECK(f == P("x^2+2*x*y+y^2"));
  CHECK((f - f).is_zero());
  CHECK(f.is_homogeneous());
  CHECK(!P("x^2 + y").is_homogeneous());
  CHECK(f.degree() == 2);
  CHECK(P("x*y*z").derivative(1) == P("x*z"));
  CHECK(P("x^3 - 2*x*z").derivative(0) == P("3*x^2 - 2*z"));
  CHECK(P("1/2*x + 1/3*y").to_string({"x", "y", "z"}) == "1/2*x + 1/3*y");
  CHECK(P("2*x + 4*y").monic() == P("x + 2*y"));
  CHECK(P("x - y").pow(3) == P("x^3 - 3*x^2*y + 3*x*y^2 - y^3"));
  CHECK(P("x^2*y + z^3 + x").homogeneous_part(3) == P("x^2*y + z^3"));
}

TEST_CASE("substitute and evaluate") {
  const Polynomial f = P("x^2 + y*z");
  const Polynomial g = f.substitute({P("x+y", 2), P("y", 2), P("x", 2)});
  CHECK(g == P("x^2 + 3*x*y + y^2", 2));
  CHECK(f.evaluate({Scalar(Q, 2), Scalar(Q, 3), Scalar(Q, 5)}) == Scalar(Q, 19));
}

TEST_CASE("determinant") {
  const std::vector<std::vector<Polynomial>> m = {{P("x"), P("y")}, {P("z"), P("x")}};
  CHECK(determinant(m) == P("x^2 - y*z"));
  std::vector<std::vector<Polynomial>> v(3, std::vector<Polynomial>(3));
  const std::vector<std::string> vars = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v[i][j] = P(vars[static_cast<std::size_t>(i)]).pow(j);
  CHECK(determinant(v) == P("(y-x)*(z-x)*(z-y)"));
}

TEST_CASE("ring axioms and Leibniz rule on random polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial f = random_poly(rng, 3, 3), g = random_poly(rng, 3, 3), h = random_poly(rng, 3, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    for (int i = 0; i < 3; ++i) CHECK((f * g).derivative(i) == f * g.derivative(i) + g * f.derivative(i));
    for (const auto& t : (f * g).terms()) CHECK(!t.coeff.is_zero());
  }
}

}

TEST_SUITE("series") {

TEST_CASE("IntPoly basics") {
  const IntPoly a{1, 1}, b{1, 1, 1};
  CHECK((a * b) == IntPoly{1, 2, 2, 1});
  CHECK(IntPoly::quantum_integer(3) == IntPoly{1, 1, 1, 1});
  CHECK((a * b).divide_exact(a) == b);
  CHECK(!IntPoly({1, 0, 1}).divide_exact(a).has_value());
  CHECK(IntPoly{1, 3, 3, 1}.evaluate(1) == 8);
  CHECK(IntPoly{1, 4, 6, 3}.to_list_string() == "[1,4,6,3]");
  CHECK(IntPoly({1, 0, 0}).degree() == 0);
  CHECK(IntPoly{1, 2}.scale_variable(-1) == IntPoly{1, -2});
}

TEST_CASE("palindromic test agrees with reversal") {
  for (const IntPoly& p : {IntPoly{1, 3, 5, 4, 1}, IntPoly{1, 2, 2, 1}, IntPoly{1}, IntPoly{1, 3, 5, 6, 6, 6, 4, 1},
                           IntPoly{2, 0, 2}, IntPoly{1, 0}})
    CHECK(p.is_palindromic() == (p == p.reversed()));
  CHECK(IntPoly{1, 2, 2, 1}.is_palindromic());
  CHECK(!IntPoly{1, 3, 5, 4, 1}.is_palindromic());
}

TEST_CASE("quantum integer factorization recovers every multiset with sum at most 12") {
  // all partitions of s <= 12 into parts >= 1
  std::function<void(int, int, std::vector<int>&)> rec = [&](int left, int maxpart, std::vector<int>& parts) {
    IntPoly prod{1};
    for (int e : parts) prod = prod * IntPoly::quantum_integer(e);
    auto got = factor_quantum_integers(prod);
    REQUIRE(got.has_value());
    auto want = parts;
    std::sort(want.begin(), want.end());
    CHECK(*got == want);
    for (int e = std::min(left, maxpart); e >= 1; --e) {
      parts.push_back(e);
      rec(left - e, e, parts);
      parts.pop_back();
    }
  };
  std::vector<int> parts;
  rec(12, 12, parts);
}

TEST_CASE("non-factorable polynomials") {
  CHECK(!factor_quantum_integers(IntPoly{1, 3, 5, 4, 1}).has_value());
  CHECK(!factor_quantum_integers(IntPoly{1, 3, 5, 6, 6, 6, 4, 1}).has_value());
  CHECK(!factor_quantum_integers(IntPoly{1, 1, 2}).has_value());
}

TEST_CASE("Hilbert series coefficients") {
  const HilbertSeries s{IntPoly{1}, 3};
  for (int d = 0; d < 8; ++d) CHECK(s.coefficient(d) == (d + 2) * (d + 1) / 2);
  const HilbertSeries t{IntPoly{1, -1}, 2};
  CHECK(t.reduced().denominator_exponent == 1);
  CHECK(t.reduced().numerator == IntPoly{1});
  const HilbertSeries fin{IntPoly{1, 3, 5, 4, 1}, 0};
  CHECK(fin.evaluate_at_one() == 14);
  CHECK_THROWS_AS(s.evaluate_at_one(), SeriesError);
}

TEST_CASE("bivariate polynomials") {
  BivariatePoly p;
  p.add_to(0, 0, 1);
  p.add_to(1, 0, -1);  // 1 - x
  BivariatePoly q = p * BivariatePoly::from_t(IntPoly{2, 1});
  auto back = q.divide_one_minus_x();
  REQUIRE(back.has_value());
  CHECK(*back == BivariatePoly::from_t(IntPoly{2, 1}));
  CHECK(!BivariatePoly::from_x(IntPoly{1, 1}).divide_one_minus_x().has_value());
  const BivariatePoly r = BivariatePoly::from_x(IntPoly{0, 1}) + BivariatePoly::from_t(IntPoly{0, 1});  // x + t
  CHECK(r.pow(2).at_t_equals_minus_x().is_zero());
  CHECK(r.pow(3).at_x_equals_one() == IntPoly{1, 3, 3, 1});
  CHECK(r.pow(3).at_t_equals_one() == IntPoly{1, 3, 3, 1});
  CHECK(r.pow(2).coeff(1, 1) == 2);
}

}

#include <random>
#include <vector>

#include "doctest.h"
#include "oscint/bivariate.hpp"

using namespace oscint;

namespace {

// Independent differentiation oracle: works straight off the term list with
// its own loop, no shared code with BiPoly::dx/dy.
BiPoly oracle_dx_dy(const BiPoly& p) {
  BiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.dx < 1 || m.dy < 1) continue;
    out = out + BiPoly::term(c * Rat(m.dx) * Rat(m.dy), m.dx - 1, m.dy - 1);
  }
  return out;
}

BiPoly random_poly(std::mt19937& rng, bool homogeneous) {
  std::uniform_int_distribution<int> nterms(1, 6), expo(0, 5), num(-9, 9),
      den(1, 4), deg(2, 8);
  BiPoly p;
  int d = deg(rng);
  int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    int a = expo(rng), b = expo(rng);
    if (homogeneous) {
      a = std::uniform_int_distribution<int>(0, d)(rng);
      b = d - a;
    }
    int nu = num(rng);
    if (nu == 0) nu = 1;
    p = p + BiPoly::term(rat(nu, den(rng)), a, b);
  }
  return p;
}

}  // namespace

TEST_CASE("parsing matches hand-expanded coefficient tables") {
  BiPoly p = BiPoly::parse("x^2*y + x*y^2");
  CHECK(p.coeff(2, 1) == Rat(1));
  CHECK(p.coeff(1, 2) == Rat(1));
  CHECK(p.terms().size() == 2);

  BiPoly q = BiPoly::parse("3/2*x^3*y - y^4");
  CHECK(q.coeff(3, 1) == rat(3, 2));
  CHECK(q.coeff(0, 4) == Rat(-1));
  CHECK(q.terms().size() == 2);

  CHECK(BiPoly::parse("x^2*y - x^2*y").is_zero());
  CHECK(BiPoly::parse("x^2*y - x^2*y").str() == "0");
  CHECK(BiPoly::parse(" x ^ 2 * y ").coeff(2, 1) == Rat(1));
  CHECK(BiPoly::parse("x*x^2").coeff(3, 0) == Rat(1));  // repeated factors
  CHECK(BiPoly::parse("5").coeff(0, 0) == Rat(5));
  CHECK(BiPoly::parse("-x*y").coeff(1, 1) == Rat(-1));
}

TEST_CASE("parser rejects malformed input") {
  for (const char* s : {"", "x^", "x^0", "2**x", "x+", "z", "1/0*x", "x^-2",
                        "3/2x", "x y", "+", "4*"}) {
    CHECK_THROWS_AS(BiPoly::parse(s), BadInput);
  }
}

TEST_CASE("canonical printing is graded-lex with explicit operators") {
  CHECK(BiPoly::parse("y^4+3/2*x^3*y").str() == "3/2*x^3*y + y^4");
  CHECK(BiPoly::parse("x*y^3+x^3*y").str() == "x^3*y + x*y^3");
  CHECK(BiPoly::parse("x^2*y^2").str() == "x^2*y^2");
  CHECK(BiPoly::parse("y-x").str() == "-x + y");
  CHECK((-BiPoly::parse("x*y")).str() == "-x*y");
}

TEST_CASE("print-parse round trip on random polynomials") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 100; ++i) {
    BiPoly p = random_poly(rng, false);
    CHECK(BiPoly::parse(p.str()) == p);
  }
}

TEST_CASE("homogeneity detection") {
  CHECK(BiPoly::parse("x^3*y + x*y^3").homogeneous_degree() == 4);
  CHECK(!BiPoly::parse("x^2*y + y^2").homogeneous_degree().has_value());
  // (x - y)^3 expanded
  BiPoly cube = BiPoly::parse("x^3 - 3*x^2*y + 3*x*y^2 - y^3");
  CHECK(cube.homogeneous_degree() == 3);
  CHECK(!BiPoly().homogeneous_degree().has_value());
}

TEST_CASE("mixed hessian matches frozen values and the oracle") {
  Phase s1 = Phase::parse("x^2*y^2");
  CHECK(mixed_hessian(s1) == BiPoly::parse("4*x*y"));

  Phase s2 = Phase::parse("x^3 - 3*x^2*y + 3*x*y^2 - y^3");  // (x-y)^3
  CHECK(mixed_hessian(s2) == BiPoly::parse("6*y - 6*x"));

  Phase s3 = Phase::parse("x^4");
  CHECK(mixed_hessian(s3).is_zero());

  std::mt19937 rng(777);
  for (int i = 0; i < 50; ++i) {
    BiPoly p = random_poly(rng, false);
    CHECK(p.dx().dy() == oracle_dx_dy(p));
    CHECK(p.dx().dy() == p.dy().dx());
  }
}

TEST_CASE("k extremes") {
  KExtremes k1 = k_extremes(Phase::parse("x^3*y + x*y^3"));
  CHECK(k1.k_min == 1);
  CHECK(k1.k_max == 3);
  KExtremes k2 = k_extremes(Phase::parse("x^2*y^2"));
  CHECK(k2.k_min == 2);
  CHECK(k2.k_max == 2);
  CHECK_THROWS_AS(k_extremes(Phase::parse("x^4")), DegeneratePhase);
  CHECK_THROWS_AS(k_extremes(Phase::parse("x^4 + y^4")), DegeneratePhase);
  CHECK_THROWS_AS(Phase::parse("x^2*y + y^2"), NonHomogeneous);
  CHECK_THROWS_AS(Phase::parse("x"), NonHomogeneous);
}

TEST_CASE("evaluation") {
  BiPoly p = BiPoly::parse("x^2*y^2");
  CHECK(p.eval(Rat(2), Rat(3)) == Rat(36));
  CHECK(p.eval(2.0, 3.0) == doctest::Approx(36.0));
  BiPoly cube = BiPoly::parse("x^3 - 3*x^2*y + 3*x*y^2 - y^3");
  CHECK(cube.eval(Rat(1), Rat(1)).is_zero());
  CHECK(BiPoly().eval(rat(7, 3), rat(-2, 5)).is_zero());
}

TEST_CASE("dehomogenize strips axis powers and keeps exact degree") {
  auto d1 = dehomogenize(BiPoly::parse("4*x*y"));
  CHECK(d1.gamma == 1);
  CHECK(d1.beta == 1);
  CHECK(d1.g == UniPoly::constant(Rat(4)));

  auto d2 = dehomogenize(BiPoly::parse("3*x^2 + 3*y^2"));
  CHECK(d2.gamma == 0);
  CHECK(d2.beta == 0);
  CHECK(d2.g.str() == "3*t^2 + 3");

  auto d3 = dehomogenize(BiPoly::parse("6*y - 6*x"));
  CHECK(d3.gamma == 0);
  CHECK(d3.beta == 0);
  CHECK(d3.g.str() == "6*t - 6");
  CHECK(!d3.g.coeff(0).is_zero());  // g(0) != 0 by construction
}

TEST_CASE("Euler identity on random homogeneous polynomials") {
  std::mt19937 rng(424242);
  for (int i = 0; i < 50; ++i) {
    BiPoly p = random_poly(rng, true);
    while (p.is_zero()) p = random_poly(rng, true);  // terms may cancel
    auto d = p.homogeneous_degree();
    REQUIRE(d.has_value());
    BiPoly euler = BiPoly::parse("x") * p.dx() + BiPoly::parse("y") * p.dy();
    CHECK(euler == p.scaled(Rat(*d)));
  }
}

TEST_CASE("phase transposition reverses coefficients") {
  Phase s = Phase::parse("x^5*y + 2*x^4*y^2");
  Phase t = s.transposed();
  CHECK(t.poly() == BiPoly::parse("x*y^5 + 2*x^2*y^4"));
  KExtremes ks = k_extremes(s), kt = k_extremes(t);
  CHECK(kt.k_min == s.n() - ks.k_max);
  CHECK(kt.k_max == s.n() - ks.k_min);
}

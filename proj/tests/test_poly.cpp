#include <doctest.h>

#include "kakeya/poly.hpp"
#include "kakeya/util.hpp"

using namespace kakeya;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial{std::move(e)}; }

Polynomial random_poly(const Field& f, std::uint32_t n, std::uint32_t max_deg, Rng& rng) {
  auto mons = monomials_of_degree(n, max_deg, DegreeMode::at_most);
  Polynomial p(f, n);
  for (const auto& m : mons)
    p.set_coeff(m, static_cast<std::uint32_t>(rng.below(f.q())));
  return p;
}

}  // namespace

TEST_CASE("monomial enumeration in grlex order") {
  auto exact = monomials_of_degree(2, 3, DegreeMode::exactly);
  REQUIRE(exact.size() == 4);  // C(4,1)
  CHECK(exact[0] == mono({0, 3}));
  CHECK(exact[1] == mono({1, 2}));
  CHECK(exact[2] == mono({2, 1}));
  CHECK(exact[3] == mono({3, 0}));

  auto atmost = monomials_of_degree(2, 1, DegreeMode::at_most);
  REQUIRE(atmost.size() == 3);  // C(3,2)
  CHECK(atmost[0] == mono({0, 0}));
  CHECK(atmost[1] == mono({0, 1}));
  CHECK(atmost[2] == mono({1, 0}));

  CHECK(monomials_of_degree(3, 2, DegreeMode::exactly).size() == 6);
}

TEST_CASE("monomial counts match binomials") {
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::uint32_t d = 0; d <= 10; ++d) {
      CHECK(monomials_of_degree(n, d, DegreeMode::exactly).size() ==
            binomial(d + n - 1, n - 1));
      CHECK(monomials_of_degree(n, d, DegreeMode::at_most).size() ==
            binomial(d + n, n));
    }
}

TEST_CASE("evaluation") {
  Field f5(5);
  Polynomial p(f5, 2);
  p.set_coeff(mono({2, 1}), 1);  // x1^2 x2
  CHECK(p.evaluate({2, 3}) == 2);
  CHECK(Polynomial::zero(f5, 2).evaluate({4, 4}) == 0);

  Field f2(2);
  Polynomial s(f2, 2);
  s.set_coeff(mono({1, 0}), 1);
  s.set_coeff(mono({0, 1}), 1);
  CHECK(s.evaluate({1, 1}) == 0);
  CHECK_THROWS_AS(s.evaluate({1, 1, 1}), usage_error);
}

TEST_CASE("homogeneous parts") {
  Field f5(5);
  Polynomial p(f5, 2);  // x^2 + xy + x + 1
  p.set_coeff(mono({2, 0}), 1);
  p.set_coeff(mono({1, 1}), 1);
  p.set_coeff(mono({1, 0}), 1);
  p.set_coeff(mono({0, 0}), 1);
  CHECK(p.homogeneous_part(2).str() == "1*x1^1*x2^1+1*x1^2");
  CHECK(p.homogeneous_part(1).str() == "1*x1^1");
  CHECK(p.homogeneous_part(0).str() == "1");
  CHECK(p.homogeneous_part(3).is_zero());
  CHECK(Polynomial::zero(f5, 2).homogeneous_part(0).is_zero());

  // reconstruction on random polynomials
  for (std::uint32_t qi : {3u, 5u, 7u}) {
    Field f(qi);
    Rng rng(11 + qi);
    for (int t = 0; t < 500; ++t) {
      Polynomial r = random_poly(f, 2, 4, rng);
      Polynomial sum = Polynomial::zero(f, 2);
      for (int i = 0; i <= 4; ++i) sum = sum + r.homogeneous_part(i);
      CHECK(sum == r);
    }
  }
}

TEST_CASE("restrict_to_line basics") {
  Field f3(3);
  Polynomial p(f3, 2);
  p.set_coeff(mono({1, 1}), 1);  // x1*x2
  UniPoly u = p.restrict_to_line({1, 0}, {0, 1});
  CHECK(u.c == std::vector<std::uint32_t>{0, 1});

  Polynomial c = Polynomial::constant(f3, 2, 2);
  CHECK(c.restrict_to_line({1, 2}, {2, 1}).c == std::vector<std::uint32_t>{2});
  CHECK_THROWS_AS(p.restrict_to_line({1}, {0, 1}), usage_error);
}

TEST_CASE("restriction agrees with pointwise evaluation") {
  Field f5(5);
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    Polynomial p = random_poly(f5, 2, 4, rng);
    std::vector<std::uint32_t> y = {std::uint32_t(rng.below(5)), std::uint32_t(rng.below(5))};
    std::vector<std::uint32_t> x = {std::uint32_t(rng.below(5)), std::uint32_t(rng.below(5))};
    UniPoly u = p.restrict_to_line(y, x);
    CHECK(u.degree() <= std::max(p.degree(), -1));
    for (std::uint32_t a = 0; a < 5; ++a) {
      std::vector<std::uint32_t> pt = {f5.add(y[0], f5.mul(a, x[0])),
                                       f5.add(y[1], f5.mul(a, x[1]))};
      CHECK(u.eval(a) == p.evaluate(pt));
    }
  }
}

TEST_CASE("top coefficient identity") {
  Field f3(3);
  Polynomial p(f3, 2);
  p.set_coeff(mono({1, 1}), 1);  // x1*x2, degree 2 = q-1
  // restriction along direction (1,2) from 0 is 2a^2
  CHECK(p.top_coefficient_on_line({1, 2}, {0, 0}, 2) == 2);
  CHECK(p.top_coefficient_on_line({1, 2}, {0, 0}, 2) ==
        p.homogeneous_part(2).evaluate({1, 2}));
  CHECK(p.top_coefficient_on_line({1, 2}, {0, 0}, 7) == 0);  // above the degree

  // the identity, mechanically: coeff of a^{q-1} in P(b + a*y) = P_{q-1}(y)
  Field f5(5);
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    Polynomial P = random_poly(f5, 2, 4, rng);
    std::vector<std::uint32_t> b = {std::uint32_t(rng.below(5)), std::uint32_t(rng.below(5))};
    std::vector<std::uint32_t> y = {std::uint32_t(rng.below(5)), std::uint32_t(rng.below(5))};
    CHECK(P.top_coefficient_on_line(y, b, 4) == P.homogeneous_part(4).evaluate(y));
  }
}

TEST_CASE("scale argument on homogeneous polynomials") {
  Field f3(3);
  Polynomial g(f3, 2);
  g.set_coeff(mono({2, 0}), 1);  // x1^2
  CHECK(g.scale_argument_holds(2, {1, 0}));
  CHECK(g.scale_argument_holds(1, {2, 2}));

  Field f4(2, 2, {1, 1, 1});
  Polynomial h(f4, 2);
  h.set_coeff(mono({1, 1}), 1);
  for (std::uint32_t c = 0; c < 4; ++c)
    for (std::uint32_t x0 = 0; x0 < 4; ++x0)
      for (std::uint32_t x1 = 0; x1 < 4; ++x1)
        CHECK(h.scale_argument_holds(c, {x0, x1}));

  Polynomial bad(f3, 2);
  bad.set_coeff(mono({1, 0}), 1);
  bad.set_coeff(mono({0, 0}), 1);
  CHECK_THROWS_AS(bad.scale_argument_holds(2, {1, 1}), usage_error);
}

TEST_CASE("evaluate is linear") {
  Field f7(7);
  Rng rng(4242);
  for (int t = 0; t < 200; ++t) {
    Polynomial a = random_poly(f7, 2, 3, rng);
    Polynomial b = random_poly(f7, 2, 3, rng);
    std::vector<std::uint32_t> x = {std::uint32_t(rng.below(7)), std::uint32_t(rng.below(7))};
    CHECK((a + b).evaluate(x) == f7.add(a.evaluate(x), b.evaluate(x)));
  }
}

TEST_CASE("serialization round-trip") {
  Field f5(5);
  Rng rng(5);
  CHECK(Polynomial::zero(f5, 2).str() == "0");
  CHECK(Polynomial::parse("0", f5, 2).is_zero());
  for (int t = 0; t < 100; ++t) {
    Polynomial p = random_poly(f5, 3, 3, rng);
    CHECK(Polynomial::parse(p.str(), f5, 3) == p);
  }
  CHECK_THROWS_AS(Polynomial::parse("1*x9^1", f5, 2), usage_error);
  CHECK_THROWS_AS(Polynomial::parse("7*x1^1", f5, 2), usage_error);
}

TEST_CASE("degree sentinel") {
  Field f3(3);
  CHECK(Polynomial::zero(f3, 2).degree() == -1);
  CHECK(Polynomial::constant(f3, 2, 1).degree() == 0);
  UniPoly z(f3);
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
}

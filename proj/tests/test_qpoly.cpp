#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppdyn/qpoly.hpp"

using namespace ppdyn;

namespace {

IntPolynomial poly(std::initializer_list<long long> coeffs_low_to_high) {
  IntPolynomial p;
  int d = 0;
  for (long long c : coeffs_low_to_high)
    p = p + IntPolynomial::monomial(BigInt(c), d++);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  IntPolynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  IntPolynomial p = poly({1, 2, 3});
  IntPolynomial q = poly({0, -2, -3, 5});
  CHECK((p + q) == poly({1, 0, 0, 5}));
  CHECK((p - p).is_zero());
  CHECK((p * z).is_zero());
  CHECK((p * q) == poly({0, -2, -7, -7, 1, 15}));
  CHECK(p.eval_one() == 6);
  CHECK(p.eval_int(BigInt(10)) == 321);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(7) == 0);
  CHECK(p.dilate(2) == poly({1, 0, 2, 0, 3}));
  CHECK(p.dilate(0) == poly({6}));
  CHECK(p.to_string() == "3*q^2 + 2*q + 1");
  CHECK(poly({-1, 1}).to_string() == "q - 1");
}

TEST_CASE("exact division") {
  IntPolynomial n = poly({-1, 0, 0, 0, 0, 0, 1});  // q^6 - 1
  IntPolynomial d = poly({-1, 0, 1});               // q^2 - 1
  auto q = IntPolynomial::divide_exact(n, d);
  REQUIRE(q.has_value());
  CHECK(*q == poly({1, 0, 1, 0, 1}));
  CHECK((*q * d) == n);
  CHECK_FALSE(IntPolynomial::divide_exact(poly({1, 1}), poly({1, 0, 1})).has_value());
  CHECK_FALSE(IntPolynomial::divide_exact(poly({1, 0, 1}), poly({1, 1})).has_value());
  CHECK(IntPolynomial::divide_exact(IntPolynomial(), d)->is_zero());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(3) == poly({1, 1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  for (int d = 1; d <= 30; ++d) {
    IntPolynomial prod = IntPolynomial::one();
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) prod = prod * cyclotomic(e);
    CHECK(prod == (IntPolynomial::monomial(BigInt(1), d) - IntPolynomial::one()));
  }
}

TEST_CASE("evaluation at roots of unity") {
  // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4; rotation fixed counts (6,0,2,0).
  IntPolynomial p = q_binomial_formula(4, 2).expand();
  CHECK(p == poly({1, 1, 2, 1, 1}));
  long long expect[4] = {6, 0, 2, 0};
  for (int k = 0; k < 4; ++k) {
    auto v = evaluate_at_root(p, 4, k).as_integer();
    REQUIRE(v.has_value());
    CHECK(*v == expect[k]);
  }
  CHECK(*evaluate_at_root(p, 1, 0).as_integer() == 6);
  // q^5 at the order-4 root, k = 3: residue is -q, not rational.
  auto irr = evaluate_at_root(IntPolynomial::monomial(BigInt(1), 5), 4, 3);
  CHECK(irr.residue == poly({0, -1}));
  CHECK_FALSE(irr.as_integer().has_value());
  // Negative k wraps.
  CHECK(evaluate_at_root(p, 4, -1) == evaluate_at_root(p, 4, 3));
  CHECK(evaluate_at_root(p, 4, 6) == evaluate_at_root(p, 4, 2));
}

TEST_CASE("galois conjugate evaluations agree on rationality") {
  IntPolynomial p = poly({1, 2, 3});
  for (int d = 1; d <= 12; ++d)
    for (int k = 0; k < d; ++k) {
      auto a = evaluate_at_root(p, d, k).as_integer();
      auto b = evaluate_at_root(p, d, d - k).as_integer();
      CHECK(a.has_value() == b.has_value());
      if (a && b) CHECK(*a == *b);
    }
}

TEST_CASE("box-counting product formula") {
  CHECK(mac_formula(1, 1, 3).expand() == poly({1, 1, 1, 1}));
  CHECK(mac_formula(2, 2, 1).expand() == q_binomial_formula(4, 2).expand());
  CHECK(mac_formula(3, 2, 1).expand() == q_binomial_formula(5, 3).expand());
  CHECK(mac_formula(0, 3, 2).expand() == IntPolynomial::one());
  CHECK(mac_formula(2, 2, 0).expand() == IntPolynomial::one());
  CHECK(mac_formula(2, 2, 2).expand().eval_one() == 20);
  CHECK(mac_formula(2, 3, 4).eval_one() == 490);
  CHECK(mac_formula(3, 4, 4).eval_one() == 24696);
  CHECK(mac_formula(3, 4, 4).expand().eval_one() == 24696);
  CHECK(mac_formula(2, 2, 2).expand().degree() == 8);
}

TEST_CASE("symmetric product formulas") {
  // Transpose-symmetric generating function at n=2, m=1: 1 + q + q^3 + q^4.
  IntPolynomial s = symmac_formula(2, 1).expand();
  CHECK(s == poly({1, 1, 0, 1, 1}));
  long long expect[4] = {4, 2, 0, 2};
  for (int k = 0; k < 4; ++k)
    CHECK(*evaluate_at_root(s, 4, k).as_integer() == expect[k]);
  // Odd m vanishes at q = -1; even m matches the closed product.
  CHECK(*evaluate_at_root(symmac_formula(2, 1).expand(), 2, 1).as_integer() == 0);
  CHECK(*evaluate_at_root(symmac_formula(3, 3).expand(), 2, 1).as_integer() == 0);
  for (int n = 1; n <= 4; ++n)
    for (int M = 0; M <= 3; ++M) {
      auto v = evaluate_at_root(symmac_formula(n, 2 * M).expand(), 2, 1).as_integer();
      REQUIRE(v.has_value());
      CHECK(*v == proctor_count(n, 2 * M));
    }
  CHECK(proctor_count(4, 6) == 330);
  // |.|'-weighted symmetric generating function at n=2, m=1: 1 + q + q^2 + q^3.
  CHECK(symmac_prime_formula(2, 1).expand() == poly({1, 1, 1, 1}));
  CHECK(symmac_prime_formula(3, 0).expand() == IntPolynomial::one());
}

TEST_CASE("triangle sieving polynomials") {
  CHECK(tall_conjecture_formula(2, 1).expand() == symmac_prime_formula(2, 1).expand());
  CHECK(wide_conjecture_formula(4, 3).eval_one() == 4719);
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      CHECK(corner_conjecture_formula(n, m).expand() ==
            mac_formula(n, n, m).expand().dilate(2));
  CHECK(wide_redux_formula(4, 3).expand() == wide_conjecture_formula(3, 3).expand());
  CHECK(corner_redux_formula(2, 3).expand() == corner_conjecture_formula(2, 3).expand());
}

TEST_CASE("formula edge cases and guards") {
  ProductFormula bad;
  bad.mul_num(2);
  bad.mul_den(3);
  CHECK_THROWS_AS(bad.expand(), NonPolynomialRatio);
  ProductFormula vanish;
  vanish.mul_num(2);
  CHECK(vanish.eval_one() == 0);
  ProductFormula pole;
  pole.mul_den(2);
  CHECK_THROWS_AS(pole.eval_one(), NonPolynomialRatio);
  CHECK_THROWS_AS(mac_formula(-1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(proctor_count(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

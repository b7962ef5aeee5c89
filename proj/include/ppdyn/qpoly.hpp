#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppdyn {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in q with arbitrary-width integer coefficients.
// Invariant: coefficient vector is trimmed (empty or nonzero leading term).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(BigInt constant);
  explicit IntPolynomial(std::vector<BigInt> coeffs_low_to_high);
  static IntPolynomial monomial(BigInt coeff, int deg);
  static IntPolynomial one() { return IntPolynomial(BigInt(1)); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int d) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  // p(q^t) for t >= 0; t = 0 collapses to the constant p(1).
  IntPolynomial dilate(int t) const;

  BigInt eval_int(const BigInt& x) const;
  BigInt eval_one() const;

  // Quotient if den divides num exactly over the integers, nullopt otherwise.
  static std::optional<IntPolynomial> divide_exact(const IntPolynomial& num,
                                                   const IntPolynomial& den);
  // Remainder of division by a monic polynomial.
  static IntPolynomial mod_monic(const IntPolynomial& num, const IntPolynomial& den);

  std::string to_string() const;

 private:
  std::vector<BigInt> c_;
  void trim();
};

struct NonPolynomialRatio : std::runtime_error {
  explicit NonPolynomialRatio(const std::string& what) : std::runtime_error(what) {}
};

// Ratio of products of factors (1 - q^e), e >= 1, kept symbolic until expanded.
class ProductFormula {
 public:
  void mul_num(int e);
  void mul_den(int e);

  const std::vector<int>& num() const { return num_; }
  const std::vector<int>& den() const { return den_; }

  // Exact expansion; throws NonPolynomialRatio if the ratio is not a polynomial.
  IntPolynomial expand() const;

  // Limit at q -> 1 without expanding (used as the size predictor for guards).
  // Requires equally many numerator and denominator factors after cancellation,
  // or more numerator factors (limit 0).
  BigInt eval_one() const;

 private:
  std::vector<int> num_;
  std::vector<int> den_;
};

// d-th cyclotomic polynomial, monic, cached.
const IntPolynomial& cyclotomic(int d);

// Element of Z[zeta_d] as a residue mod Phi_d (degree < phi(d)).
struct CyclotomicElement {
  int d = 1;
  IntPolynomial residue;

  bool operator==(const CyclotomicElement& o) const {
    return d == o.d && residue == o.residue;
  }
  // Constant residues are exactly the rational values.
  std::optional<BigInt> as_integer() const;
  std::string to_string() const;
};

// p(zeta^k) for zeta = exp(2*pi*i/d), reduced mod Phi_d.
CyclotomicElement evaluate_at_root(const IntPolynomial& p, int d, long long k);

// Product formulas. All exponents refer to factors (1 - q^e).
// Size generating function of m-bounded plane partitions in an a x b box.
ProductFormula mac_formula(int a, int b, int m);
// Size generating function of the transpose-symmetric subfamily (n x n box).
ProductFormula symmac_formula(int n, int m);
// Generating function by symmetric size |.|' over the same subfamily.
ProductFormula symmac_prime_formula(int n, int m);
// Gaussian binomial coefficient [N choose a]_q.
ProductFormula q_binomial_formula(int N, int a);
// Sieving polynomials for the triangular-poset conjectures.
ProductFormula tall_conjecture_formula(int n, int m);
ProductFormula wide_conjecture_formula(int n, int m);
ProductFormula corner_conjecture_formula(int n, int m);
ProductFormula wide_redux_formula(int n, int M);
ProductFormula corner_redux_formula(int n, int M);

// prod_{1<=i<=j<=n-1} (i+j+twoM)/(i+j): closed count of the even-superdiagonal
// triangular arrays, equal to symmac_formula(n, twoM) expanded at q = -1.
BigInt proctor_count(int n, int twoM);

}  // namespace ppdyn

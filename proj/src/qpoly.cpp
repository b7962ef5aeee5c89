#include "ppdyn/qpoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ppdyn {

IntPolynomial::IntPolynomial(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs_low_to_high) : c_(std::move(coeffs_low_to_high)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt coeff, int deg) {
  IntPolynomial p;
  if (deg < 0) throw std::invalid_argument("monomial: negative degree");
  if (coeff != 0) {
    p.c_.assign(static_cast<size_t>(deg) + 1, BigInt(0));
    p.c_.back() = std::move(coeff);
  }
  return p;
}

BigInt IntPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return BigInt(0);
  return c_[static_cast<size_t>(d)];
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  IntPolynomial r;
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::dilate(int t) const {
  if (t < 0) throw std::invalid_argument("dilate: negative stretch");
  if (t == 0) return IntPolynomial(eval_one());
  IntPolynomial r;
  if (c_.empty()) return r;
  r.c_.assign((c_.size() - 1) * static_cast<size_t>(t) + 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<size_t>(t)] = c_[i];
  r.trim();
  return r;
}

BigInt IntPolynomial::eval_int(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPolynomial::eval_one() const {
  BigInt acc(0);
  for (const auto& c : c_) acc += c;
  return acc;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& num,
                                                         const IntPolynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (num.is_zero()) return IntPolynomial();
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<BigInt> rem = num.c_;
  const BigInt& lead = den.c_.back();
  IntPolynomial quot;
  quot.c_.assign(rem.size() - den.c_.size() + 1, BigInt(0));
  for (int d = static_cast<int>(rem.size()) - 1; d >= den.degree(); --d) {
    const BigInt& top = rem[static_cast<size_t>(d)];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt f = top / lead;
    int shift = d - den.degree();
    for (size_t i = 0; i < den.c_.size(); ++i)
      rem[static_cast<size_t>(shift) + i] -= f * den.c_[i];
    quot.c_[static_cast<size_t>(shift)] = std::move(f);
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  quot.trim();
  return quot;
}

IntPolynomial IntPolynomial::mod_monic(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero() || den.c_.back() != 1)
    throw std::invalid_argument("mod_monic: divisor must be monic");
  std::vector<BigInt> rem = num.c_;
  for (int d = static_cast<int>(rem.size()) - 1; d >= den.degree(); --d) {
    BigInt f = rem[static_cast<size_t>(d)];
    if (f == 0) continue;
    int shift = d - den.degree();
    for (size_t i = 0; i < den.c_.size(); ++i)
      rem[static_cast<size_t>(shift) + i] -= f * den.c_[i];
  }
  IntPolynomial r;
  r.c_ = std::move(rem);
  r.trim();
  return r;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = c_[static_cast<size_t>(d)];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) out << mag.str();
    if (d > 0) {
      if (mag != 1) out << "*";
      out << "q";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

void ProductFormula::mul_num(int e) {
  if (e < 1) throw std::invalid_argument("ProductFormula: exponent must be >= 1");
  num_.push_back(e);
}

void ProductFormula::mul_den(int e) {
  if (e < 1) throw std::invalid_argument("ProductFormula: exponent must be >= 1");
  den_.push_back(e);
}

namespace {

// Multiset difference of equal exponents between numerator and denominator.
void cancel(std::vector<int>& num, std::vector<int>& den) {
  std::multiset<int> n(num.begin(), num.end());
  for (auto it = den.begin(); it != den.end();) {
    auto hit = n.find(*it);
    if (hit != n.end()) {
      n.erase(hit);
      it = den.erase(it);
    } else {
      ++it;
    }
  }
  num.assign(n.begin(), n.end());
}

IntPolynomial one_minus_q_pow(int e) {
  return IntPolynomial::one() - IntPolynomial::monomial(BigInt(1), e);
}

}  // namespace

IntPolynomial ProductFormula::expand() const {
  std::vector<int> n = num_, d = den_;
  cancel(n, d);
  IntPolynomial p = IntPolynomial::one();
  for (int e : n) p = p * one_minus_q_pow(e);
  for (int e : d) {
    auto q = IntPolynomial::divide_exact(p, one_minus_q_pow(e));
    if (!q) throw NonPolynomialRatio("product formula does not expand to a polynomial");
    p = std::move(*q);
  }
  return p;
}

BigInt ProductFormula::eval_one() const {
  std::vector<int> n = num_, d = den_;
  cancel(n, d);
  if (n.size() > d.size()) return BigInt(0);
  if (n.size() < d.size())
    throw NonPolynomialRatio("eval_one: ratio diverges at q = 1");
  BigInt np(1), dp(1);
  for (int e : n) np *= e;
  for (int e : d) dp *= e;
  if (np % dp != 0) throw NonPolynomialRatio("eval_one: non-integer limit at q = 1");
  return np / dp;
}

const IntPolynomial& cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d must be >= 1");
  static std::map<int, IntPolynomial> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  IntPolynomial p = IntPolynomial::monomial(BigInt(1), d) - IntPolynomial::one();
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = IntPolynomial::divide_exact(p, cyclotomic(e));
    if (!q) throw std::logic_error("cyclotomic: exact division failed");
    p = std::move(*q);
  }
  return cache.emplace(d, std::move(p)).first->second;
}

std::optional<BigInt> CyclotomicElement::as_integer() const {
  if (residue.degree() > 0) return std::nullopt;
  return residue.coeff(0);
}

std::string CyclotomicElement::to_string() const {
  return residue.to_string() + " (mod Phi_" + std::to_string(d) + ")";
}

CyclotomicElement evaluate_at_root(const IntPolynomial& p, int d, long long k) {
  if (d < 1) throw std::invalid_argument("evaluate_at_root: d must be >= 1");
  long long r = ((k % d) + d) % d;
  IntPolynomial sub = p.dilate(static_cast<int>(r));
  return CyclotomicElement{d, IntPolynomial::mod_monic(sub, cyclotomic(d))};
}

ProductFormula mac_formula(int a, int b, int m) {
  if (a < 0 || b < 0 || m < 0) throw std::invalid_argument("mac_formula: negative parameter");
  ProductFormula f;
  if (m == 0) return f;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      f.mul_num(i + j + m - 1);
      f.mul_den(i + j - 1);
    }
  return f;
}

ProductFormula symmac_formula(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("symmac_formula: negative parameter");
  ProductFormula f;
  if (m == 0) return f;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      f.mul_num(2 * (i + j + m - 1));
      f.mul_den(2 * (i + j - 1));
    }
  for (int i = 1; i <= n; ++i) {
    f.mul_num(2 * i + m - 1);
    f.mul_den(2 * i - 1);
  }
  return f;
}

ProductFormula symmac_prime_formula(int n, int m) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("symmac_prime_formula: negative parameter");
  ProductFormula f;
  if (m == 0) return f;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      f.mul_num(i + j + m - 1);
      f.mul_den(i + j - 1);
    }
  return f;
}

ProductFormula q_binomial_formula(int N, int a) {
  if (a < 0 || N < a) throw std::invalid_argument("q_binomial_formula: need 0 <= a <= N");
  ProductFormula f;
  for (int i = 1; i <= a; ++i) {
    f.mul_num(N + 1 - i);
    f.mul_den(i);
  }
  return f;
}

ProductFormula tall_conjecture_formula(int n, int m) { return symmac_prime_formula(n, m); }

ProductFormula wide_conjecture_formula(int n, int m) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("wide_conjecture_formula: negative parameter");
  ProductFormula f;
  if (m == 0) return f;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      f.mul_num(i + j + 2 * m);
      f.mul_den(i + j);
    }
  return f;
}

ProductFormula corner_conjecture_formula(int n, int m) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("corner_conjecture_formula: negative parameter");
  ProductFormula f;
  if (m == 0) return f;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      f.mul_num(2 * (i + j + m - 1));
      f.mul_den(2 * (i + j - 1));
    }
  return f;
}

ProductFormula wide_redux_formula(int n, int M) {
  return wide_conjecture_formula(n - 1, M);
}

ProductFormula corner_redux_formula(int n, int M) {
  return corner_conjecture_formula(n, M);
}

BigInt proctor_count(int n, int twoM) {
  if (n < 1 || twoM < 0 || twoM % 2 != 0)
    throw std::invalid_argument("proctor_count: need n >= 1 and even twoM");
  BigInt np(1), dp(1);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) {
      np *= i + j + twoM;
      dp *= i + j;
    }
  if (np % dp != 0) throw std::logic_error("proctor_count: non-integer product");
  return np / dp;
}

}  // namespace ppdyn

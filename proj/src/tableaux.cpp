#include "ppdyn/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ppdyn {

Partition trim_partition(Partition lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  return lambda;
}

bool is_partition(const Partition& lambda) {
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) return false;
    if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1]) return false;
  }
  return true;
}

long long partition_size(const Partition& lambda) {
  long long s = 0;
  for (int x : lambda) s += x;
  return s;
}

long long kappa(const Partition& lambda) {
  long long s = 0;
  for (size_t i = 0; i < lambda.size(); ++i) s += static_cast<long long>(i) * lambda[i];
  return s;
}

Partition rectangle_partition(int m, int a) { return Partition(static_cast<size_t>(a), m); }

Partition SSYT::shape() const {
  Partition lambda;
  for (const auto& row : rows) lambda.push_back(static_cast<int>(row.size()));
  return lambda;
}

bool SSYT::valid() const {
  if (!is_partition(shape())) return false;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    for (size_t c = 0; c < rows[r].size(); ++c) {
      int e = rows[r][c];
      if (e < 1 || e > k) return false;
      if (c + 1 < rows[r].size() && rows[r][c + 1] < e) return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r + 1][c] <= e) return false;
    }
  }
  return true;
}

bool SSYT::is_rectangular() const {
  for (const auto& row : rows)
    if (row.size() != rows[0].size()) return false;
  return true;
}

std::vector<int> SSYT::content() const {
  std::vector<int> alpha(static_cast<size_t>(k), 0);
  for (const auto& row : rows)
    for (int e : row) ++alpha[static_cast<size_t>(e - 1)];
  return alpha;
}

std::string SSYT::to_string() const {
  std::ostringstream out;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) out << " / ";
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out << ' ';
      out << rows[r][c];
    }
  }
  return out.str();
}

bool GTPattern::valid() const {
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      if (at(i, j) < 0) return false;
      if (j < k && at(i, j) < at(i, j + 1)) return false;
      if (i < j && at(i, j) < at(i + 1, j)) return false;
    }
  return true;
}

Partition GTPattern::diagonal() const {
  Partition lambda;
  for (int i = 1; i <= k; ++i) lambda.push_back(at(i, i));
  return lambda;
}

Partition GTPattern::restriction_shape(int r) const {
  Partition lambda;
  for (int p = 1; p <= r; ++p) lambda.push_back(at(p, k - r + p));
  return lambda;
}

std::vector<int> GTPattern::content() const {
  std::vector<int> alpha(static_cast<size_t>(k), 0);
  long long prev = 0;
  for (int r = 1; r <= k; ++r) {
    long long cur = partition_size(restriction_shape(r));
    alpha[static_cast<size_t>(r - 1)] = static_cast<int>(cur - prev);
    prev = cur;
  }
  return alpha;
}

void GTPattern::toggle(int i, int j) {
  if (!(1 <= i && i < j && j <= k)) throw std::invalid_argument("toggle cell out of range");
  int lo = (i >= 2) ? std::min(at(i, j - 1), at(i - 1, j)) : at(i, j - 1);
  int hi = (j < k) ? std::max(at(i + 1, j), at(i, j + 1)) : at(i + 1, j);
  set(i, j, lo + hi - at(i, j));
}

void GTPattern::file_toggle(int l) {
  if (!(1 <= l && l <= k - 1)) throw std::invalid_argument("file toggle out of range");
  for (int i = 1; i + l <= k; ++i) toggle(i, i + l);
}

std::string GTPattern::to_string() const {
  std::ostringstream out;
  for (int i = 1; i <= k; ++i) {
    if (i > 1) out << " / ";
    for (int j = i; j <= k; ++j) {
      if (j > i) out << ' ';
      out << at(i, j);
    }
  }
  return out.str();
}

SSYT gt_to_ssyt(const GTPattern& g) {
  SSYT t;
  t.k = g.k;
  Partition prev;  // restriction shape for r-1
  for (int r = 1; r <= g.k; ++r) {
    Partition cur = g.restriction_shape(r);
    for (int i = 1; i <= r; ++i) {
      int lo = (i <= static_cast<int>(prev.size())) ? prev[static_cast<size_t>(i - 1)] : 0;
      int hi = cur[static_cast<size_t>(i - 1)];
      if (hi > lo) {
        while (static_cast<int>(t.rows.size()) < i) t.rows.emplace_back();
        t.rows[static_cast<size_t>(i - 1)].insert(t.rows[static_cast<size_t>(i - 1)].end(),
                             static_cast<size_t>(hi - lo), r);
      }
    }
    prev = std::move(cur);
  }
  return t;
}

GTPattern ssyt_to_gt(const SSYT& t) {
  int k = t.k;
  // shapes[r][i-1] = number of entries <= r in row i
  std::vector<Partition> shapes(static_cast<size_t>(k) + 1);
  for (int r = 1; r <= k; ++r) {
    Partition lambda;
    for (const auto& row : t.rows) {
      int cnt = static_cast<int>(std::upper_bound(row.begin(), row.end(), r) - row.begin());
      lambda.push_back(cnt);
    }
    shapes[static_cast<size_t>(r)] = lambda;
  }
  GTPattern g(k);
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      const Partition& lam = shapes[static_cast<size_t>(k - j + i)];
      g.set(i, j, (i <= static_cast<int>(lam.size())) ? lam[static_cast<size_t>(i - 1)] : 0);
    }
  return g;
}

GTPattern pp_to_gt(const PlanePartition& p) {
  int a = p.rows(), b = p.cols(), m = p.bound();
  GTPattern g(a + b);
  for (int i = 1; i <= a + b; ++i)
    for (int j = i; j <= a + b; ++j) {
      if (i > a)
        g.set(i, j, 0);
      else if (j <= a)
        g.set(i, j, m);
      else
        g.set(i, j, p.at(i, j - a));
    }
  return g;
}

PlanePartition gt_to_pp(const GTPattern& g, int a, int m) {
  int b = g.k - a;
  if (a < 1 || b < 1) throw std::invalid_argument("gt_to_pp: bad split");
  for (int i = 1; i <= g.k; ++i)
    for (int j = i; j <= g.k; ++j) {
      if (i > a && g.at(i, j) != 0) throw std::invalid_argument("gt_to_pp: lower triangle not zero");
      if (i <= a && j <= a && g.at(i, j) != m) throw std::invalid_argument("gt_to_pp: upper triangle not m");
    }
  PlanePartition p(a, b, m);
  for (int i = 1; i <= a; ++i)
    for (int c = 1; c <= b; ++c) p.set(i, c, g.at(i, a + c));
  return p;
}

SSYT pp_to_tableau(const PlanePartition& p) { return gt_to_ssyt(pp_to_gt(p)); }

PlanePartition tableau_to_pp(const SSYT& t, int a, int m) { return gt_to_pp(ssyt_to_gt(t), a, m); }

SSYT bender_knuth(const SSYT& t, int i) {
  if (!(1 <= i && i < t.k)) throw std::invalid_argument("bender_knuth index out of range");
  SSYT out = t;
  for (size_t r = 0; r < out.rows.size(); ++r) {
    std::vector<size_t> free_cols;
    int x = 0, y = 0;  // unfrozen i's, unfrozen (i+1)'s
    for (size_t c = 0; c < out.rows[r].size(); ++c) {
      int e = out.rows[r][c];
      if (e == i) {
        bool frozen = r + 1 < out.rows.size() && c < out.rows[r + 1].size() &&
               out.rows[r + 1][c] == i + 1;
        if (!frozen) { free_cols.push_back(c); ++x; }
      } else if (e == i + 1) {
        bool frozen = r > 0 && out.rows[r - 1][c] == i;
        if (!frozen) { free_cols.push_back(c); ++y; }
      }
    }
    for (size_t p = 0; p < free_cols.size(); ++p)
      out.rows[r][free_cols[p]] = (static_cast<int>(p) < y) ? i : i + 1;
    (void)x;
  }
  return out;
}

SSYT tableau_promotion(const SSYT& t) {
  SSYT out = t;
  for (int i = t.k - 1; i >= 1; --i) out = bender_knuth(out, i);
  return out;
}

SSYT tableau_promotion_inv(const SSYT& t) {
  SSYT out = t;
  for (int i = 1; i <= t.k - 1; ++i) out = bender_knuth(out, i);
  return out;
}

SSYT evacuation(const SSYT& t) {
  SSYT out = t;
  for (int j = t.k - 1; j >= 1; --j)
    for (int i = 1; i <= j; ++i) out = bender_knuth(out, i);
  return out;
}

SSYT dual_evacuation(const SSYT& t) {
  SSYT out = t;
  for (int j = 1; j <= t.k - 1; ++j)
    for (int i = t.k - 1; i >= j; --i) out = bender_knuth(out, i);
  return out;
}

SSYT rotate_complement(const SSYT& t) {
  if (!t.is_rectangular()) throw std::invalid_argument("rotate_complement needs a rectangle");
  size_t a = t.rows.size();
  size_t m = t.rows.empty() ? 0 : t.rows[0].size();
  SSYT out = t;
  for (size_t r = 0; r < a; ++r)
    for (size_t c = 0; c < m; ++c)
      out.rows[r][c] = t.k + 1 - t.rows[a - 1 - r][m - 1 - c];
  return out;
}

SSYT column_complement(const SSYT& t) {
  if (!t.is_rectangular()) throw std::invalid_argument("column_complement needs a rectangle");
  int n = static_cast<int>(t.rows.size());
  if (t.k != 2 * n) throw std::invalid_argument("column_complement needs k = 2 * rows");
  size_t m = t.rows.empty() ? 0 : t.rows[0].size();
  SSYT out = t;
  for (size_t c = 0; c < m; ++c) {
    std::set<int> neg;
    for (int r = 0; r < n; ++r) neg.insert(2 * n + 1 - t.rows[static_cast<size_t>(r)][c]);
    std::vector<int> col;
    for (int e = 1; e <= 2 * n; ++e)
      if (!neg.count(e)) col.push_back(e);
    for (int r = 0; r < n; ++r) out.rows[static_cast<size_t>(r)][c] = col[static_cast<size_t>(r)];
  }
  return out;
}

std::vector<std::set<int>> tableau_columns(const SSYT& t) {
  std::vector<std::set<int>> cols(static_cast<size_t>(t.num_columns()));
  for (const auto& row : t.rows)
    for (size_t c = 0; c < row.size(); ++c) cols[c].insert(row[c]);
  return cols;
}

std::set<int> pp_to_subset(const PlanePartition& p) {
  if (p.bound() != 1) throw std::invalid_argument("pp_to_subset needs m = 1");
  std::set<int> I;
  for (int i = 1; i <= p.rows(); ++i) {
    int lam = 0;
    for (int j = 1; j <= p.cols(); ++j) lam += p.at(i, j);
    I.insert(p.cols() - lam + i);
  }
  return I;
}

PlanePartition subset_to_pp(const std::set<int>& I, int a, int b) {
  if (static_cast<int>(I.size()) != a) throw std::invalid_argument("subset_to_pp: wrong size");
  PlanePartition p(a, b, 1);
  int i = 1;
  for (int pos : I) {
    if (pos < 1 || pos > a + b) throw std::invalid_argument("subset_to_pp: element out of range");
    int lam = b + i - pos;
    for (int j = 1; j <= lam; ++j) p.set(i, j, 1);
    ++i;
  }
  if (!p.valid()) throw std::invalid_argument("subset_to_pp: invalid result");
  return p;
}

std::set<int> rotate_subset(const std::set<int>& I, int n) {
  std::set<int> out;
  for (int x : I) out.insert(x == n ? 1 : x + 1);
  return out;
}

std::set<int> reverse_subset(const std::set<int>& I, int n) {
  std::set<int> out;
  for (int x : I) out.insert(n + 1 - x);
  return out;
}

std::set<int> complement_subset(const std::set<int>& I, int n) {
  std::set<int> out;
  for (int x = 1; x <= n; ++x)
    if (!I.count(x)) out.insert(x);
  return out;
}

std::set<int> twisted_rotate_subset(const std::set<int>& I, int n) {
  std::set<int> out = rotate_subset(I, n);
  if (out.count(1))
    out.erase(1);
  else
    out.insert(1);
  return out;
}

namespace {

void gt_dfs(GTPattern& g, int j, int i, const std::function<void(const GTPattern&)>& fn) {
  if (j > g.k) {
    fn(g);
    return;
  }
  if (i < 1) {
    gt_dfs(g, j + 1, j, fn);
    return;
  }
  int lo = g.at(i + 1, j);
  int hi = g.at(i, j - 1);
  for (int v = lo; v <= hi; ++v) {
    g.set(i, j, v);
    gt_dfs(g, j, i - 1, fn);
  }
}

}  // namespace

void for_each_gt(const Partition& lambda, int k, const std::function<void(const GTPattern&)>& fn) {
  Partition lam = trim_partition(lambda);
  if (!is_partition(lam)) throw std::invalid_argument("for_each_gt: not a partition");
  if (static_cast<int>(lam.size()) > k) return;  // no tableaux with entries <= k
  GTPattern g(k);
  for (int i = 1; i <= k; ++i)
    g.set(i, i, (i <= static_cast<int>(lam.size())) ? lam[static_cast<size_t>(i - 1)] : 0);
  gt_dfs(g, 2, 1, fn);
}

BigInt count_ssyt(const Partition& lambda, int k) {
  BigInt n = 0;
  for_each_gt(lambda, k, [&](const GTPattern&) { ++n; });
  return n;
}

IntPolynomial schur_principal(const Partition& lambda, int k) {
  std::vector<BigInt> coeffs;
  for_each_gt(lambda, k, [&](const GTPattern& g) {
    std::vector<int> alpha = g.content();
    long long e = 0;
    for (int r = 1; r <= k; ++r) e += static_cast<long long>(r - 1) * alpha[static_cast<size_t>(r - 1)];
    if (static_cast<size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<size_t>(e) + 1, BigInt(0));
    coeffs[static_cast<size_t>(e)] += 1;
  });
  return IntPolynomial(std::move(coeffs));
}

BigInt schur_eval_signs(const Partition& lambda, int k, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != k) throw std::invalid_argument("schur_eval_signs: need k signs");
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("schur_eval_signs: signs must be +-1");
  BigInt total = 0;
  for_each_gt(lambda, k, [&](const GTPattern& g) {
    std::vector<int> alpha = g.content();
    int neg = 0;
    for (int r = 1; r <= k; ++r)
      if (signs[static_cast<size_t>(r - 1)] == -1) neg += alpha[static_cast<size_t>(r - 1)];
    total += (neg % 2 == 0) ? 1 : -1;
  });
  return total;
}

}  // namespace ppdyn

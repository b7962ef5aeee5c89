#pragma once

#include "ppdyn/plane_partition.hpp"
#include "ppdyn/qpoly.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace ppdyn {

// Partitions are weakly decreasing nonnegative integer vectors; trailing
// zeros are allowed and ignored by comparisons that go through trim_partition.
using Partition = std::vector<int>;

Partition trim_partition(Partition lambda);
bool is_partition(const Partition& lambda);
long long partition_size(const Partition& lambda);
// kappa(lambda) = sum_i (i-1)*lambda_i.
long long kappa(const Partition& lambda);
Partition rectangle_partition(int m, int a);

// Semistandard Young tableau with entries in {1..k}: rows weakly increasing,
// columns strictly increasing.
struct SSYT {
  int k = 0;
  std::vector<std::vector<int>> rows;

  SSYT() = default;
  SSYT(int k_, std::vector<std::vector<int>> rows_) : k(k_), rows(std::move(rows_)) {}

  Partition shape() const;
  bool valid() const;
  bool is_rectangular() const;
  int num_columns() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  std::vector<int> content() const;  // count of each entry 1..k

  bool operator==(const SSYT& o) const { return k == o.k && rows == o.rows; }
  bool operator!=(const SSYT& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Triangular array (g_{i,j})_{1<=i<=j<=k}, weakly decreasing in rows and
// columns, with main diagonal (g_{1,1},...,g_{k,k}) equal to the shape.
struct GTPattern {
  int k = 0;
  std::vector<int> v;  // row-major; row i holds cells (i,i)..(i,k)

  GTPattern() = default;
  explicit GTPattern(int k_) : k(k_), v(static_cast<size_t>(k_) * (k_ + 1) / 2, 0) {}

  int offset(int i) const { return (i - 1) * (2 * k - i + 2) / 2; }
  int at(int i, int j) const { return v[static_cast<size_t>(offset(i) + (j - i))]; }
  void set(int i, int j, int x) { v[static_cast<size_t>(offset(i) + (j - i))] = x; }

  bool valid() const;
  Partition diagonal() const;
  // Shape of the restriction of the corresponding tableau to entries {1..r}:
  // the diagonal (g_{1,k+1-r}, g_{2,k+2-r}, ..., g_{r,k}).
  Partition restriction_shape(int r) const;
  std::vector<int> content() const;

  void toggle(int i, int j);       // 1 <= i < j <= k
  void file_toggle(int l);         // toggles along j-i = l, 1 <= l <= k-1

  bool operator==(const GTPattern& o) const { return k == o.k && v == o.v; }
  bool operator!=(const GTPattern& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Bijection between patterns and tableaux: restriction shapes are read off
// the diagonals of the pattern.
SSYT gt_to_ssyt(const GTPattern& g);
GTPattern ssyt_to_gt(const SSYT& t);

// Border a plane partition in PP^m(a x b) with a triangle of m's (upper
// left) and a triangle of 0's (lower right) to get a pattern of shape m^a
// and length a+b.
GTPattern pp_to_gt(const PlanePartition& p);
PlanePartition gt_to_pp(const GTPattern& g, int a, int m);
SSYT pp_to_tableau(const PlanePartition& p);
PlanePartition tableau_to_pp(const SSYT& t, int a, int m);

// Swap unfrozen i's and (i+1)'s row by row; an involution for 1 <= i < k.
SSYT bender_knuth(const SSYT& t, int i);
SSYT tableau_promotion(const SSYT& t);      // BK_{k-1} first, then down to BK_1
SSYT tableau_promotion_inv(const SSYT& t);
SSYT evacuation(const SSYT& t);
SSYT dual_evacuation(const SSYT& t);
// Rotate 180 degrees and replace each entry e by k+1-e (rectangular shape).
SSYT rotate_complement(const SSYT& t);
// For shape m^n with k = 2n: negate entries (e -> 2n+1-e), then replace each
// column by its set complement in {1..2n}.
SSYT column_complement(const SSYT& t);

std::vector<std::set<int>> tableau_columns(const SSYT& t);

// m = 1 layer: a plane partition in PP^1(a x b) is a lattice path, recorded
// as the a-subset of {1..a+b} of positions of down-steps.
std::set<int> pp_to_subset(const PlanePartition& p);
PlanePartition subset_to_pp(const std::set<int>& I, int a, int b);
std::set<int> rotate_subset(const std::set<int>& I, int n);      // x -> x+1 mod n
std::set<int> reverse_subset(const std::set<int>& I, int n);     // x -> n+1-x
std::set<int> complement_subset(const std::set<int>& I, int n);
// Rotate inside {1..n}, then toggle membership of 1; has order 2n.
std::set<int> twisted_rotate_subset(const std::set<int>& I, int n);

// Enumerate all patterns with the given main diagonal (shape) and length k.
void for_each_gt(const Partition& lambda, int k,
         const std::function<void(const GTPattern&)>& fn);
BigInt count_ssyt(const Partition& lambda, int k);

// Principal specialization s_lambda(1, q, ..., q^{k-1}).
IntPolynomial schur_principal(const Partition& lambda, int k);
// s_lambda(x_1,...,x_k) with each x_r = +1 or -1.
BigInt schur_eval_signs(const Partition& lambda, int k, const std::vector<int>& signs);

}  // namespace ppdyn

#pragma once

#include "ppdyn/plane_partition.hpp"
#include "ppdyn/poset.hpp"
#include "ppdyn/qpoly.hpp"
#include "ppdyn/report.hpp"
#include "ppdyn/tableaux.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

namespace ppdyn {

struct SieveOptions {
  long long cap = 3'000'000;  // refuse enumerations predicted to exceed this
  int workers = 0;            // 0 = all hardware threads, 1 = serial reference
};

// Thrown when a predicted enumeration size exceeds the configured cap.
struct CapExceeded : std::runtime_error {
  BigInt predicted;
  long long cap;
  CapExceeded(BigInt predicted_, long long cap_);
};

// Exact family sizes from the product formulas.
BigInt pp_family_size(int a, int b, int m);
BigInt sym_pp_family_size(int n, int m);

// Serial enumeration, minimal cells assigned first (row a to row 1, column b
// to column 1 within a row).
void for_each_pp(int a, int b, int m, const std::function<void(const PlanePartition&)>& fn);
// Transpose-symmetric members of the n x n family, enumerated directly off
// the upper triangle. Only sound for predicates over sets that contain the
// plain transpose-fixedness constraint.
void for_each_symmetric_pp(int n, int m, const std::function<void(const PlanePartition&)>& fn);

std::vector<PlanePartition> all_pp(int a, int b, int m, const SieveOptions& opt);
std::vector<PlanePartition> all_symmetric_pp(int n, int m, const SieveOptions& opt);

// Counting kernels. The predicate must be pure; with more than one worker it
// runs concurrently over disjoint DFS subtrees and the counts are merged
// deterministically.
long long count_pp(int a, int b, int m, const std::function<bool(const PlanePartition&)>& pred,
                   const SieveOptions& opt);
long long count_symmetric_pp(int n, int m,
                             const std::function<bool(const PlanePartition&)>& pred,
                             const SieveOptions& opt);

// Orbit structure of a bijection acting on a materialized family.
struct OrbitData {
  std::vector<std::pair<long long, long long>> histogram;  // (orbit size, count)
  long long order = 1;                                     // lcm of orbit sizes
  long long total = 0;
};

template <class T, class KeyFn, class StepFn>
OrbitData orbit_histogram(const std::vector<T>& family, KeyFn&& key, StepFn&& step) {
  std::unordered_set<std::string> seen;
  std::map<long long, long long> hist;
  OrbitData data;
  for (const T& start : family) {
    std::string k0 = key(start);
    if (seen.count(k0)) continue;
    long long len = 0;
    T cur = start;
    do {
      seen.insert(key(cur));
      cur = step(cur);
      ++len;
      if (len > static_cast<long long>(family.size()))
        throw std::runtime_error("orbit_histogram: operator leaves the family");
    } while (key(cur) != k0);
    ++hist[len];
    data.order = std::lcm(data.order, len);
    data.total += len;
  }
  data.histogram.assign(hist.begin(), hist.end());
  return data;
}

// Number of fixed points of the k-th power, read off an orbit histogram.
long long fixed_from_histogram(const std::vector<std::pair<long long, long long>>& hist,
                               long long k);

// Predicted number of fixed points of Co Pro^k (equal for Co Row^k): the
// q = -1 evaluation when k is even or a side is even; for odd k with both
// sides odd, a signed tableau count.
BigInt complement_fixed_prediction(int a, int b, int m, long long k);

// Root-of-unity sieving checks on the rectangle families.
VerifyReport verify_promotion_csp(int a, int b, int m, const SieveOptions& opt);
VerifyReport verify_rowmotion_csp(int a, int b, int m, const SieveOptions& opt);
VerifyReport verify_complement_csp(int a, int b, int m, const SieveOptions& opt);
VerifyReport verify_complement_row_csp(int a, int b, int m, const SieveOptions& opt);
VerifyReport verify_transpose_csp(int n, int m, const SieveOptions& opt);
VerifyReport verify_transpose_row_csp(int n, int m, const SieveOptions& opt);
VerifyReport verify_trco_csp(int n, int m, const SieveOptions& opt);
VerifyReport verify_trco_row_csp(int n, int m, const SieveOptions& opt);
// The three q = -1 counts: Co-fixed, TrCo-fixed, and Tr-and-Co-fixed.
VerifyReport verify_qneg_family(int n, int m, const SieveOptions& opt);

// pi[i,j] + Row^{i+j-1}(pi)[a+1-i, b+1-j] = m for every cell of every member.
VerifyReport verify_reciprocity(int a, int b, int m, const SieveOptions& opt);

// Word factorizations, conjugacies and operator orders, checked pointwise.
VerifyReport verify_operator_identities(int a, int b, int m, const SieveOptions& opt);

// Equivalence of the triangular arrays with even superdiagonal and the
// Tr Pro-fixed points, via the explicit file-toggle dictionary.
VerifyReport verify_cy(int n, int twoM, const SieveOptions& opt);

// Dictionaries between plane partitions, triangular patterns, tableaux and
// (for m = 1) subsets, including the operator translations.
VerifyReport verify_bijections(int a, int b, int m, const SieveOptions& opt);

// Size generating functions against the product formulas.
VerifyReport verify_genfun(int a, int b, int m, const SieveOptions& opt);

// Triangular poset embeddings into rectangle families.
PlanePartition embed_tall_labeling(const Poset& tallP, const Labeling& v, int m);
PlanePartition embed_wide_labeling(const Poset& wideP, const Labeling& v, int M);
PlanePartition embed_corner_labeling(const Poset& cornerP, const Labeling& v, int M);

VerifyReport verify_tall_embedding(int n, int m, const SieveOptions& opt);
VerifyReport verify_wide_embedding(int n, int M, const SieveOptions& opt);
VerifyReport verify_corner_embedding(int n, int M, const SieveOptions& opt);

// Conjectured sieving counts for the triangular posets, checked either on
// the poset labelings directly or on the embedded rectangle families.
VerifyReport verify_tall_conjecture(int n, int m, bool embedded, const SieveOptions& opt);
VerifyReport verify_wide_conjecture(int n, int m, bool embedded, const SieveOptions& opt);
VerifyReport verify_corner_conjecture(int n, int m, bool embedded, const SieveOptions& opt);

}  // namespace ppdyn

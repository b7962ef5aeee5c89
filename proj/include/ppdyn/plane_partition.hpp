#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppdyn {

// Plane partition in an a x b box with entries in [0, m]: weakly decreasing
// along rows and columns. Cell access is 1-based. Fixed-capacity storage keeps
// copies cheap inside the counting kernels.
class PlanePartition {
 public:
  static constexpr int kMaxCells = 144;

  PlanePartition() : a_(0), b_(0), m_(0) {}
  PlanePartition(int a, int b, int m);
  static PlanePartition from_rows(int m, const std::vector<std::vector<int>>& rows);

  int rows() const { return a_; }
  int cols() const { return b_; }
  int bound() const { return m_; }

  int at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, int v) { e_[idx(i, j)] = static_cast<int8_t>(v); }

  bool valid() const;
  long long size() const;      // sum of all entries
  long long sym_size() const;  // sum over cells with i <= j

  bool operator==(const PlanePartition& o) const;
  bool operator!=(const PlanePartition& o) const { return !(*this == o); }

  // Byte key for hash sets; distinct within a fixed (a, b, m) family.
  std::string key() const;
  std::vector<std::vector<int>> to_rows() const;
  std::string to_string() const;

  // Piecewise-linear toggle at one cell: new value is
  // min(upper neighbours, default m) + max(lower neighbours, default 0) - old.
  void toggle(int i, int j);

  // Simultaneous toggles along a file (j - i = k), a rank (i + j - 1 = k),
  // a row fiber (P_k) or a column fiber (N_k). Cells within one file or rank
  // are pairwise non-adjacent, so their toggles commute; fiber toggles are
  // ordered and come with explicit inverses.
  void file_toggle(int k);   // -(a-1) <= k <= b-1
  void rank_toggle(int k);   // 1 <= k <= a+b-1
  void row_fiber(int k);     // P_k: toggles (k,1), (k,2), ..., (k,b)
  void row_fiber_inv(int k);
  void col_fiber(int k);     // N_k: toggles (1,k), (2,k), ..., (a,k)
  void col_fiber_inv(int k);

  void promotion();      // file toggles, k ascending from -(a-1) to b-1
  void promotion_inv();
  void rowmotion();      // rank toggles, k ascending: row-major toggle sweep
  void rowmotion_inv();

  void complement();     // entry (i,j) -> m - entry(a+1-i, b+1-j)
  void transpose();      // requires a == b

  // Conjugating word D built from inverse row fibers, and its inverse.
  void d_word();
  void d_word_inv();

 private:
  int a_, b_, m_;
  std::array<int8_t, kMaxCells> e_{};

  int idx(int i, int j) const { return (i - 1) * b_ + (j - 1); }
  void check_cell(int i, int j) const;
};

// Alternative factorizations kept for identity tests.
namespace words {
void pro_via_row_fibers(PlanePartition& p);   // P_a first, then P_{a-1}, ..., P_1
void pro_via_col_fibers(PlanePartition& p);   // N_1^{-1} first, ..., N_b^{-1}
void row_via_row_fibers(PlanePartition& p);   // P_1 first, ..., P_a
void row_via_col_fibers(PlanePartition& p);   // N_1 first, ..., N_b
void co_via_file_toggles(PlanePartition& p);  // triangular file-toggle word
void co_via_rank_toggles(PlanePartition& p);  // triangular rank-toggle word
void co_d_via_col_fibers(PlanePartition& p);  // word equal to Co composed with D
}  // namespace words

// Word in the generators Pro, Row, Co, Tr, TrCo with integer exponents,
// applied rightmost factor first. Text form: "Co Pro^2", "Tr", "Row^-3".
struct GroupFactor {
  enum class Op { Pro, Row, Co, Tr, TrCo };
  Op op;
  long long exp = 1;
};

struct GroupWord {
  std::vector<GroupFactor> factors;  // in written (left to right) order

  static GroupWord parse(const std::string& text);
  std::string to_string() const;
  void apply(PlanePartition& p) const;
  bool fixes(const PlanePartition& p) const;
};

}  // namespace ppdyn

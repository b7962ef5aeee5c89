#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ppdyn {

// Finite poset with a stored canonical linear extension. Element ids are
// 0..size-1; for the named coordinate families the ids already follow the
// canonical extension (minimal end first) and carry (i, j) coordinates.
class Poset {
 public:
  enum class Family { Rect, Tall, Wide, Corner, Custom };

  // Rectangle: cells (i,j), 1 <= i <= a, 1 <= j <= b.
  static Poset rectangle(int a, int b);
  // Tall triangle: cells 1 <= i <= j <= n.
  static Poset tall(int n);
  // Wide triangle: cells i, j >= 1 with i + j <= n + 1.
  static Poset wide(int n);
  // Corner shape: cells 1 <= i <= j with i + j <= 2n (n^2 elements).
  static Poset corner(int n);
  // Arbitrary poset from cover pairs (lower, upper) over ids 0..size-1.
  static Poset custom(std::string name, int size,
                      const std::vector<std::pair<int, int>>& covers);

  Family family() const { return family_; }
  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(up_.size()); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int id) const { return up_[id]; }
  const std::vector<int>& lower_covers(int id) const { return lo_[id]; }
  // Canonical linear extension, minimal end first.
  const std::vector<int>& extension() const { return ext_; }

  bool has_coords() const { return !coords_.empty(); }
  std::pair<int, int> coords(int id) const { return coords_[id]; }
  int index_of(int i, int j) const;  // -1 when absent

  // All linear extensions (intended for small posets in tests).
  std::vector<std::vector<int>> all_linear_extensions() const;

 private:
  Family family_ = Family::Custom;
  std::string name_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, lo_;
  std::vector<int> ext_;
  std::vector<std::pair<int, int>> coords_;
  std::map<std::pair<int, int>, int> cell_index_;

  static Poset from_cells(Family fam, std::string name,
                          std::vector<std::pair<int, int>> cells);
  void finish_covers();
};

// Order-preserving labelings v : P -> [0, m], indexed by element id.
using Labeling = std::vector<int>;

bool is_monotone(const Poset& P, const Labeling& v, int m);
long long labeling_size(const Labeling& v);

void toggle_at(const Poset& P, int m, Labeling& v, int id);
// Toggle along the canonical extension from the maximal end.
void rowmotion(const Poset& P, int m, Labeling& v);
void rowmotion_inv(const Poset& P, int m, Labeling& v);
// Same sweep along an arbitrary extension (maximal end first); the result is
// independent of the extension, which tests assert.
void rowmotion_via_extension(const Poset& P, int m, Labeling& v,
                             const std::vector<int>& extension);

// DFS enumeration in lexicographic order along the canonical extension.
template <class Fn>
void for_each_labeling(const Poset& P, int m, Fn&& fn) {
  const std::vector<int>& ext = P.extension();
  Labeling v(static_cast<size_t>(P.size()), 0);
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == ext.size()) {
      fn(const_cast<const Labeling&>(v));
      return;
    }
    int id = ext[pos];
    int lo = 0;
    for (int c : P.lower_covers(id)) lo = std::max(lo, v[c]);
    for (int val = lo; val <= m; ++val) {
      v[id] = val;
      self(self, pos + 1);
    }
    v[id] = 0;
  };
  rec(rec, 0);
}

long long count_labelings(const Poset& P, int m);

}  // namespace ppdyn

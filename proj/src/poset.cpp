#include "ppdyn/poset.hpp"

#include <queue>
#include <stdexcept>

namespace ppdyn {

Poset Poset::from_cells(Family fam, std::string name,
                        std::vector<std::pair<int, int>> cells) {
  // Descending lexicographic order lists every cell after its lower covers
  // (i+1, j) and (i, j+1), so it is the canonical extension, minimal end first.
  std::sort(cells.begin(), cells.end(),
            [](const auto& x, const auto& y) { return x > y; });
  Poset P;
  P.family_ = fam;
  P.name_ = std::move(name);
  P.coords_ = cells;
  int n = static_cast<int>(cells.size());
  P.up_.assign(static_cast<size_t>(n), {});
  P.lo_.assign(static_cast<size_t>(n), {});
  P.ext_.resize(static_cast<size_t>(n));
  for (int id = 0; id < n; ++id) {
    P.ext_[static_cast<size_t>(id)] = id;
    P.cell_index_[cells[static_cast<size_t>(id)]] = id;
  }
  for (int id = 0; id < n; ++id) {
    auto [i, j] = cells[static_cast<size_t>(id)];
    // Covers of the coordinate families: (i,j) < (i-1,j) and (i,j) < (i,j-1),
    // restricted to the shape.
    for (auto [ui, uj] : {std::pair{i - 1, j}, std::pair{i, j - 1}}) {
      int up = P.index_of(ui, uj);
      if (up >= 0) P.covers_.emplace_back(id, up);
    }
  }
  P.finish_covers();
  return P;
}

void Poset::finish_covers() {
  std::sort(covers_.begin(), covers_.end());
  for (auto [lo, hi] : covers_) {
    up_[static_cast<size_t>(lo)].push_back(hi);
    lo_[static_cast<size_t>(hi)].push_back(lo);
  }
}

Poset Poset::rectangle(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("rectangle: negative side");
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) cells.emplace_back(i, j);
  return from_cells(Family::Rect,
                    "rect(" + std::to_string(a) + "," + std::to_string(b) + ")",
                    std::move(cells));
}

Poset Poset::tall(int n) {
  if (n < 0) throw std::invalid_argument("tall: negative size");
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) cells.emplace_back(i, j);
  return from_cells(Family::Tall, "tall(" + std::to_string(n) + ")", std::move(cells));
}

Poset Poset::wide(int n) {
  if (n < 0) throw std::invalid_argument("wide: negative size");
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n + 1; ++j) cells.emplace_back(i, j);
  return from_cells(Family::Wide, "wide(" + std::to_string(n) + ")", std::move(cells));
}

Poset Poset::corner(int n) {
  if (n < 0) throw std::invalid_argument("corner: negative size");
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; i + j <= 2 * n; ++j) cells.emplace_back(i, j);
  return from_cells(Family::Corner, "corner(" + std::to_string(n) + ")",
                    std::move(cells));
}

Poset Poset::custom(std::string name, int size,
                    const std::vector<std::pair<int, int>>& covers) {
  if (size < 0) throw std::invalid_argument("custom: negative size");
  Poset P;
  P.family_ = Family::Custom;
  P.name_ = std::move(name);
  P.up_.assign(static_cast<size_t>(size), {});
  P.lo_.assign(static_cast<size_t>(size), {});
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= size || hi < 0 || hi >= size || lo == hi)
      throw std::invalid_argument("custom: bad cover pair");
    P.covers_.emplace_back(lo, hi);
  }
  P.finish_covers();
  // Kahn topological sort with smallest-id tie break; rejects cycles.
  std::vector<int> indeg(static_cast<size_t>(size), 0);
  for (auto [lo, hi] : P.covers_) indeg[static_cast<size_t>(hi)]++;
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int id = 0; id < size; ++id)
    if (indeg[static_cast<size_t>(id)] == 0) ready.push(id);
  while (!ready.empty()) {
    int id = ready.top();
    ready.pop();
    P.ext_.push_back(id);
    for (int up : P.up_[static_cast<size_t>(id)])
      if (--indeg[static_cast<size_t>(up)] == 0) ready.push(up);
  }
  if (static_cast<int>(P.ext_.size()) != size)
    throw std::invalid_argument("custom: cover relation has a cycle");
  return P;
}

int Poset::index_of(int i, int j) const {
  auto it = cell_index_.find({i, j});
  return it == cell_index_.end() ? -1 : it->second;
}

std::vector<std::vector<int>> Poset::all_linear_extensions() const {
  std::vector<std::vector<int>> out;
  int n = size();
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (auto [lo, hi] : covers_) {
    (void)lo;
    indeg[static_cast<size_t>(hi)]++;
  }
  std::vector<int> ext;
  std::vector<bool> used(static_cast<size_t>(n), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(ext.size()) == n) {
      out.push_back(ext);
      return;
    }
    for (int id = 0; id < n; ++id) {
      if (used[static_cast<size_t>(id)] || indeg[static_cast<size_t>(id)] != 0) continue;
      used[static_cast<size_t>(id)] = true;
      ext.push_back(id);
      for (int up : up_[static_cast<size_t>(id)]) indeg[static_cast<size_t>(up)]--;
      self(self);
      for (int up : up_[static_cast<size_t>(id)]) indeg[static_cast<size_t>(up)]++;
      ext.pop_back();
      used[static_cast<size_t>(id)] = false;
    }
  };
  rec(rec);
  return out;
}

bool is_monotone(const Poset& P, const Labeling& v, int m) {
  if (static_cast<int>(v.size()) != P.size()) return false;
  for (int x : v)
    if (x < 0 || x > m) return false;
  for (auto [lo, hi] : P.covers())
    if (v[static_cast<size_t>(lo)] > v[static_cast<size_t>(hi)]) return false;
  return true;
}

long long labeling_size(const Labeling& v) {
  long long s = 0;
  for (int x : v) s += x;
  return s;
}

void toggle_at(const Poset& P, int m, Labeling& v, int id) {
  int ceil = m;
  for (int u : P.upper_covers(id)) ceil = std::min(ceil, v[static_cast<size_t>(u)]);
  int floor = 0;
  for (int l : P.lower_covers(id)) floor = std::max(floor, v[static_cast<size_t>(l)]);
  v[static_cast<size_t>(id)] = ceil + floor - v[static_cast<size_t>(id)];
}

void rowmotion(const Poset& P, int m, Labeling& v) {
  rowmotion_via_extension(P, m, v, P.extension());
}

void rowmotion_inv(const Poset& P, int m, Labeling& v) {
  for (int id : P.extension()) toggle_at(P, m, v, id);
}

void rowmotion_via_extension(const Poset& P, int m, Labeling& v,
                             const std::vector<int>& extension) {
  for (auto it = extension.rbegin(); it != extension.rend(); ++it)
    toggle_at(P, m, v, *it);
}

long long count_labelings(const Poset& P, int m) {
  long long n = 0;
  for_each_labeling(P, m, [&](const Labeling&) { ++n; });
  return n;
}

}  // namespace ppdyn

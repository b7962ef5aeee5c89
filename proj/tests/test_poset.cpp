#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <utility>
#include <vector>

#include "ppdyn/plane_partition.hpp"
#include "ppdyn/poset.hpp"
#include "ppdyn/qpoly.hpp"

using namespace ppdyn;

namespace {

// Collect every labeling of P with values in [0, m].
std::vector<Labeling> labelings(const Poset& P, int m) {
  std::vector<Labeling> out;
  for_each_labeling(P, m, [&](const Labeling& v) { out.push_back(v); });
  return out;
}

// Position of each element inside one linear extension.
std::vector<int> positions(const std::vector<int>& ext) {
  std::vector<int> pos(ext.size());
  for (size_t t = 0; t < ext.size(); ++t) pos[static_cast<size_t>(ext[t])] = static_cast<int>(t);
  return pos;
}

}  // namespace

TEST_CASE("named families have the expected elements and covers") {
  struct Row {
    Poset P;
    int elements;
    int covers;
  };
  const Row rows[] = {
      {Poset::rectangle(2, 3), 6, 7},  // a(b-1) + (a-1)b grid edges
      {Poset::rectangle(3, 3), 9, 12},
      {Poset::tall(3), 6, 6},
      {Poset::wide(3), 6, 6},
      {Poset::corner(4), 16, 21},
  };
  for (const Row& r : rows) {
    CHECK(r.P.size() == r.elements);
    CHECK(static_cast<int>(r.P.covers().size()) == r.covers);
  }
  CHECK(Poset::rectangle(2, 3).family() == Poset::Family::Rect);
  CHECK(Poset::corner(4).family() == Poset::Family::Corner);
}

TEST_CASE("coordinates, index lookup and the canonical extension") {
  for (const Poset& P : {Poset::rectangle(2, 3), Poset::tall(4), Poset::wide(4), Poset::corner(3)}) {
    REQUIRE(P.has_coords());
    // coords and index_of are inverse to each other.
    for (int id = 0; id < P.size(); ++id) {
      auto [i, j] = P.coords(id);
      CHECK(P.index_of(i, j) == id);
    }
    CHECK(P.index_of(0, 0) == -1);
    CHECK(P.index_of(100, 1) == -1);
    // The stored extension is a genuine linear extension.
    const std::vector<int>& ext = P.extension();
    REQUIRE(static_cast<int>(ext.size()) == P.size());
    std::vector<int> pos = positions(ext);
    for (auto [lo, hi] : P.covers()) {
      CHECK(pos[static_cast<size_t>(lo)] < pos[static_cast<size_t>(hi)]);
    }
  }
}

TEST_CASE("cover relation points toward the corner cell") {
  // In the rectangle (1,1) is the unique maximal element: it covers (1,2) and
  // (2,1) and is covered by nothing.
  Poset P = Poset::rectangle(2, 2);
  int top = P.index_of(1, 1);
  CHECK(P.upper_covers(top).empty());
  std::set<int> below(P.lower_covers(top).begin(), P.lower_covers(top).end());
  CHECK(below == std::set<int>{P.index_of(1, 2), P.index_of(2, 1)});
  int bottom = P.index_of(2, 2);
  CHECK(P.lower_covers(bottom).empty());
}

TEST_CASE("labeling counts match the product formulas at q = 1") {
  CHECK(BigInt(count_labelings(Poset::rectangle(2, 3), 2)) == mac_formula(2, 3, 2).eval_one());
  CHECK(BigInt(count_labelings(Poset::rectangle(3, 3), 2)) == mac_formula(3, 3, 2).eval_one());
  CHECK(BigInt(count_labelings(Poset::tall(2), 3)) == tall_conjecture_formula(2, 3).eval_one());
  CHECK(BigInt(count_labelings(Poset::tall(3), 2)) == tall_conjecture_formula(3, 2).eval_one());
  CHECK(BigInt(count_labelings(Poset::tall(4), 3)) == tall_conjecture_formula(4, 3).eval_one());
  CHECK(BigInt(count_labelings(Poset::wide(2), 3)) == wide_conjecture_formula(2, 3).eval_one());
  CHECK(BigInt(count_labelings(Poset::wide(3), 2)) == wide_conjecture_formula(3, 2).eval_one());
  CHECK(BigInt(count_labelings(Poset::corner(2), 2)) == corner_conjecture_formula(2, 2).eval_one());
  CHECK(BigInt(count_labelings(Poset::corner(3), 1)) == corner_conjecture_formula(3, 1).eval_one());
}

TEST_CASE("rectangle labelings are exactly the plane partitions") {
  const int a = 2, b = 3, m = 2;
  Poset P = Poset::rectangle(a, b);
  long long seen = 0;
  for_each_labeling(P, m, [&](const Labeling& v) {
    PlanePartition p(a, b, m);
    for (int id = 0; id < P.size(); ++id) {
      auto [i, j] = P.coords(id);
      p.set(i, j, v[static_cast<size_t>(id)]);
    }
    CHECK(p.valid());
    CHECK(labeling_size(v) == p.size());

    // Poset rowmotion agrees with the plane-partition rowmotion.
    Labeling w = v;
    rowmotion(P, m, w);
    PlanePartition q = p;
    q.rowmotion();
    for (int id = 0; id < P.size(); ++id) {
      auto [i, j] = P.coords(id);
      CHECK(w[static_cast<size_t>(id)] == q.at(i, j));
    }
    ++seen;
  });
  CHECK(BigInt(seen) == mac_formula(a, b, m).eval_one());
}

TEST_CASE("rowmotion does not depend on the chosen linear extension") {
  for (const Poset& P : {Poset::wide(3), Poset::tall(3)}) {
    const int m = 2;
    std::vector<std::vector<int>> exts = P.all_linear_extensions();
    REQUIRE(exts.size() > 1);
    for (const Labeling& v : labelings(P, m)) {
      Labeling canonical = v;
      rowmotion(P, m, canonical);
      for (const std::vector<int>& ext : exts) {
        Labeling w = v;
        rowmotion_via_extension(P, m, w, ext);
        CHECK(w == canonical);
      }
    }
  }
}

TEST_CASE("linear extension enumeration on a small shape") {
  // The wide 2-triangle is a V: two incomparable atoms under one top, so the
  // two atoms can be ordered either way.
  Poset V = Poset::wide(2);
  CHECK(V.all_linear_extensions().size() == 2);
  // A 3-chain admits exactly one extension.
  Poset chain = Poset::custom("chain3", 3, {{0, 1}, {1, 2}});
  CHECK(chain.all_linear_extensions().size() == 1);
  // A 3-antichain admits all 3! orders.
  Poset anti = Poset::custom("anti3", 3, {});
  CHECK(anti.all_linear_extensions().size() == 6);
}

TEST_CASE("toggles are involutions that preserve monotonicity") {
  Poset P = Poset::wide(3);
  const int m = 2;
  for (const Labeling& v : labelings(P, m)) {
    REQUIRE(is_monotone(P, v, m));
    for (int id = 0; id < P.size(); ++id) {
      Labeling w = v;
      toggle_at(P, m, w, id);
      CHECK(is_monotone(P, w, m));
      toggle_at(P, m, w, id);
      CHECK(w == v);
    }
  }
}

TEST_CASE("rowmotion and its inverse cancel") {
  for (const Poset& P : {Poset::tall(3), Poset::corner(2)}) {
    const int m = 2;
    for (const Labeling& v : labelings(P, m)) {
      Labeling w = v;
      rowmotion(P, m, w);
      rowmotion_inv(P, m, w);
      CHECK(w == v);
      Labeling u = v;
      rowmotion_inv(P, m, u);
      rowmotion(P, m, u);
      CHECK(u == v);
    }
  }
}

TEST_CASE("custom posets validate their cover relation") {
  CHECK_THROWS(Poset::custom("cycle", 2, {{0, 1}, {1, 0}}));
  CHECK_THROWS(Poset::custom("loop", 1, {{0, 0}}));
  CHECK_THROWS(Poset::custom("range", 2, {{0, 5}}));
  CHECK_THROWS(Poset::custom("negative", -1, {}));

  // Chain labelings are weakly increasing tuples: C(m + n, n) of them.
  Poset chain = Poset::custom("chain3", 3, {{0, 1}, {1, 2}});
  CHECK(count_labelings(chain, 3) == 20);  // C(6, 3)
  Poset anti = Poset::custom("anti2", 2, {});
  CHECK(count_labelings(anti, 4) == 25);  // (m + 1)^2
}

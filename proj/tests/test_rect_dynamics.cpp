#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppdyn/plane_partition.hpp"
#include "ppdyn/sieve.hpp"

#include <vector>

using namespace ppdyn;

namespace {

// All members of pp(a x b, m), serially enumerated.
std::vector<PlanePartition> family(int a, int b, int m) {
  std::vector<PlanePartition> out;
  for_each_pp(a, b, m, [&](const PlanePartition& p) { out.push_back(p); });
  return out;
}

PlanePartition pp(int m, std::vector<std::vector<int>> rows) {
  return PlanePartition::from_rows(m, rows);
}

}  // namespace

TEST_CASE("construction, validity and sizes") {
  PlanePartition p = pp(4, {{2, 2}, {1, 0}});
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 2);
  CHECK(p.bound() == 4);
  CHECK(p.valid());
  CHECK(p.size() == 5);
  CHECK(p.sym_size() == 4);  // cells (1,1), (1,2), (2,2)
  CHECK(p.at(1, 1) == 2);
  CHECK(p.at(2, 1) == 1);

  PlanePartition along_row(2, 2, 4);  // increasing along a row
  along_row.set(1, 2, 1);
  CHECK_FALSE(along_row.valid());
  PlanePartition down_col(2, 2, 4);  // increasing down a column
  down_col.set(1, 1, 2);
  down_col.set(1, 2, 2);
  down_col.set(2, 1, 3);
  CHECK_FALSE(down_col.valid());
  CHECK_THROWS(pp(4, {{1, 2}, {0, 0}}));  // from_rows rejects invalid input
  CHECK_THROWS(pp(1, {{2}}));             // entry above the bound
}

TEST_CASE("toggles are involutions and commute unless adjacent") {
  for (const PlanePartition& p : family(2, 3, 3)) {
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 3; ++j) {
        PlanePartition q = p;
        q.toggle(i, j);
        CHECK(q.valid());
        q.toggle(i, j);
        CHECK(q == p);
      }
    // (1,1) and (2,3) are not adjacent; (1,1) and (1,2) are.
    PlanePartition x = p, y = p;
    x.toggle(1, 1);
    x.toggle(2, 3);
    y.toggle(2, 3);
    y.toggle(1, 1);
    CHECK(x == y);
  }
}

TEST_CASE("promotion worked example") {
  PlanePartition p = pp(4, {{2, 2}, {1, 0}});
  PlanePartition q = p;
  q.promotion();
  CHECK(q == pp(4, {{4, 3}, {1, 1}}));
  q.promotion_inv();
  CHECK(q == p);
}

TEST_CASE("operator words factor the named operators") {
  for (auto [a, b, m] : {std::tuple{2, 3, 2}, std::tuple{3, 3, 2}, std::tuple{1, 4, 3}}) {
    for (const PlanePartition& p : family(a, b, m)) {
      PlanePartition x = p, y = p;
      x.promotion();
      words::pro_via_row_fibers(y);
      CHECK(x == y);
      y = p;
      words::pro_via_col_fibers(y);
      CHECK(x == y);

      x = p;
      y = p;
      x.rowmotion();
      words::row_via_row_fibers(y);
      CHECK(x == y);
      y = p;
      words::row_via_col_fibers(y);
      CHECK(x == y);

      x = p;
      y = p;
      x.complement();
      words::co_via_file_toggles(y);
      CHECK(x == y);
      y = p;
      words::co_via_rank_toggles(y);
      CHECK(x == y);

      x = p;
      y = p;
      x.d_word();
      x.complement();
      words::co_d_via_col_fibers(y);
      CHECK(x == y);
    }
  }
}

TEST_CASE("operator orders and inverses") {
  for (auto [a, b, m] : {std::tuple{2, 3, 2}, std::tuple{3, 3, 2}}) {
    for (const PlanePartition& p : family(a, b, m)) {
      PlanePartition q = p;
      for (int s = 0; s < a + b; ++s) q.promotion();
      CHECK(q == p);
      q = p;
      for (int s = 0; s < a + b; ++s) q.rowmotion();
      CHECK(q == p);
      q = p;
      q.complement();
      q.complement();
      CHECK(q == p);
      q = p;
      q.rowmotion();
      q.rowmotion_inv();
      CHECK(q == p);
      q = p;
      q.d_word();
      q.d_word_inv();
      CHECK(q == p);
    }
  }
}

TEST_CASE("complement is the box complement") {
  for (const PlanePartition& p : family(2, 3, 3)) {
    PlanePartition q = p;
    q.complement();
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 3; ++j) CHECK(q.at(i, j) == 3 - p.at(3 - i, 4 - j));
  }
}

TEST_CASE("transpose requires a square shape") {
  PlanePartition p = pp(2, {{1, 1, 0}, {1, 0, 0}});
  CHECK_THROWS(p.transpose());
  PlanePartition s = pp(2, {{2, 1}, {2, 0}});
  s.transpose();
  CHECK(s == pp(2, {{2, 2}, {1, 0}}));
}

TEST_CASE("conjugation relations between the symmetries and the rotations") {
  for (const PlanePartition& p : family(3, 3, 2)) {
    PlanePartition x = p, y = p;
    x.promotion();
    x.complement();
    y.complement();
    y.promotion_inv();
    CHECK(x == y);  // Co Pro = Pro^-1 Co

    x = p;
    y = p;
    x.promotion();
    x.transpose();
    y.transpose();
    y.promotion_inv();
    CHECK(x == y);  // Tr Pro = Pro^-1 Tr

    x = p;
    y = p;
    x.rowmotion();
    x.complement();
    y.complement();
    y.rowmotion_inv();
    CHECK(x == y);  // Co Row = Row^-1 Co

    x = p;
    y = p;
    x.rowmotion();
    x.transpose();
    y.transpose();
    y.rowmotion();
    CHECK(x == y);  // Tr Row = Row Tr
  }
}

TEST_CASE("conjugating word and its interaction with the symmetries") {
  for (auto [a, b, m] : {std::tuple{2, 3, 2}, std::tuple{3, 3, 2}}) {
    for (const PlanePartition& p : family(a, b, m)) {
      // D Row = Pro D
      PlanePartition x = p, y = p;
      x.rowmotion();
      x.d_word();
      y.d_word();
      y.promotion();
      CHECK(x == y);
      // D Co Row^-(a+1) = Co D
      x = p;
      y = p;
      for (int s = 0; s < a + 1; ++s) x.rowmotion_inv();
      x.complement();
      x.d_word();
      y.d_word();
      y.complement();
      CHECK(x == y);
      if (a == b) {
        // D Tr Row^n = Tr Co D
        x = p;
        y = p;
        for (int s = 0; s < a; ++s) x.rowmotion();
        x.transpose();
        x.d_word();
        y.d_word();
        y.complement();
        y.transpose();
        CHECK(x == y);
        // D Tr Co Row^-1 = Tr D
        x = p;
        y = p;
        x.rowmotion_inv();
        x.complement();
        x.transpose();
        x.d_word();
        y.d_word();
        y.transpose();
        CHECK(x == y);
      }
    }
  }
}

TEST_CASE("rowmotion reciprocity") {
  for (auto [a, b, m] : {std::tuple{2, 2, 2}, std::tuple{2, 3, 3}, std::tuple{1, 4, 2}}) {
    for (const PlanePartition& p : family(a, b, m)) {
      PlanePartition r = p;
      for (int t = 1; t <= a + b - 1; ++t) {
        r.rowmotion();
        for (int i = 1; i <= a; ++i)
          for (int j = 1; j <= b; ++j)
            if (i + j - 1 == t) CHECK(p.at(i, j) + r.at(a + 1 - i, b + 1 - j) == m);
      }
    }
  }
}

TEST_CASE("group words parse, print and act") {
  GroupWord w = GroupWord::parse("Co Pro^2");
  CHECK(w.to_string() == "Co Pro^2");
  CHECK(w.factors.size() == 2);

  PlanePartition p = pp(4, {{2, 2}, {1, 0}});
  PlanePartition x = p;
  w.apply(x);
  PlanePartition y = p;
  y.promotion();
  y.promotion();  // rightmost factor first
  y.complement();
  CHECK(x == y);

  GroupWord neg = GroupWord::parse("Row^-3");
  x = p;
  neg.apply(x);
  y = p;
  for (int s = 0; s < 3; ++s) y.rowmotion_inv();
  CHECK(x == y);

  GroupWord trco = GroupWord::parse("TrCo Pro^4");
  x = p;
  trco.apply(x);
  y = p;
  for (int s = 0; s < 4; ++s) y.promotion();
  y.complement();
  y.transpose();
  CHECK(x == y);
  CHECK(trco.to_string() == "TrCo Pro^4");

  CHECK(GroupWord::parse("Tr").fixes(pp(2, {{2, 1}, {1, 0}})));
  CHECK_FALSE(GroupWord::parse("Tr").fixes(pp(2, {{2, 2}, {1, 0}})));
  CHECK_THROWS(GroupWord::parse("Bogus^2"));
}

TEST_CASE("file and rank toggle index ranges") {
  PlanePartition p = pp(2, {{2, 1, 0}, {1, 1, 0}});
  CHECK_THROWS(p.file_toggle(-2));
  CHECK_THROWS(p.file_toggle(3));
  CHECK_THROWS(p.rank_toggle(0));
  CHECK_THROWS(p.rank_toggle(5));
  PlanePartition q = p;
  q.file_toggle(-1);
  q.file_toggle(-1);
  CHECK(q == p);
  q.rank_toggle(2);
  q.rank_toggle(2);
  CHECK(q == p);
}

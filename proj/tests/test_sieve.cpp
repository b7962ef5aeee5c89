#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "ppdyn/qpoly.hpp"
#include "ppdyn/sieve.hpp"

using namespace ppdyn;

namespace {

const SieveOptions kSerial{3'000'000, 1};

GroupWord word(std::vector<GroupFactor> factors) {
  GroupWord w;
  w.factors = std::move(factors);
  return w;
}

using Op = GroupFactor::Op;

long long count_fixed(int a, int b, int m, const GroupWord& w) {
  return count_pp(a, b, m, [&](const PlanePartition& p) { return w.fixes(p); }, kSerial);
}

void expect_green(const VerifyReport& r) {
  INFO(r.family, " / ", r.statement);
  for (const CheckRow& row : r.rows) {
    INFO(row.label, ": predicted ", row.predicted, ", observed ", row.observed);
    CHECK(row.match);
  }
  CHECK(r.all_match);
}

}  // namespace

TEST_CASE("family sizes agree with direct enumeration") {
  long long n = 0;
  for_each_pp(2, 3, 2, [&](const PlanePartition& p) {
    CHECK(p.valid());
    ++n;
  });
  CHECK(BigInt(n) == pp_family_size(2, 3, 2));
  CHECK(pp_family_size(2, 2, 2) == 20);
  CHECK(pp_family_size(3, 3, 2) == 175);
  CHECK(pp_family_size(4, 4, 6) == 9'343'620);

  std::set<std::string> keys;
  long long s = 0;
  for_each_symmetric_pp(3, 2, [&](const PlanePartition& p) {
    CHECK(p.valid());
    PlanePartition q = p;
    q.transpose();
    CHECK(q == p);
    CHECK(keys.insert(p.key()).second);
    ++s;
  });
  CHECK(BigInt(s) == sym_pp_family_size(3, 2));

  CHECK(all_pp(2, 2, 1, kSerial).size() == 6);
  CHECK(all_symmetric_pp(2, 1, kSerial).size() == 4);
}

TEST_CASE("kernels refuse enumerations past the cap") {
  SieveOptions tight{1000, 1};
  CHECK_THROWS_AS(count_pp(4, 4, 6, [](const PlanePartition&) { return true; }, tight),
                  CapExceeded);
  CHECK_THROWS_AS((void)all_pp(4, 4, 6, tight), CapExceeded);
  CHECK_THROWS_AS((void)all_symmetric_pp(6, 6, tight), CapExceeded);
  try {
    count_pp(4, 4, 6, [](const PlanePartition&) { return true; }, tight);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.predicted == 9'343'620);
    CHECK(e.cap == 1000);
  }
}

TEST_CASE("fixed point counts read off an orbit histogram") {
  std::vector<std::pair<long long, long long>> hist{{1, 3}, {2, 5}, {6, 2}};
  CHECK(fixed_from_histogram(hist, 0) == 25);  // every element
  CHECK(fixed_from_histogram(hist, 1) == 3);
  CHECK(fixed_from_histogram(hist, 2) == 13);
  CHECK(fixed_from_histogram(hist, 3) == 3);
  CHECK(fixed_from_histogram(hist, 4) == 13);
  CHECK(fixed_from_histogram(hist, 6) == 25);

  // Against live orbits of promotion on a small family.
  std::vector<PlanePartition> family = all_pp(2, 2, 2, kSerial);
  OrbitData data = orbit_histogram(
      family, [](const PlanePartition& p) { return p.key(); },
      [](const PlanePartition& p) {
        PlanePartition q = p;
        q.promotion();
        return q;
      });
  CHECK(data.total == 20);
  CHECK(data.order == 4);  // promotion has order a+b
  for (long long k = 0; k <= 4; ++k)
    CHECK(fixed_from_histogram(data.histogram, k) ==
          count_fixed(2, 2, 2, word({{Op::Pro, k}})));
}

TEST_CASE("orbit walks that leave the family are rejected") {
  std::vector<PlanePartition> some = all_pp(2, 2, 1, kSerial);
  some.resize(2);  // not closed under promotion
  CHECK_THROWS(orbit_histogram(
      some, [](const PlanePartition& p) { return p.key(); },
      [](const PlanePartition& p) {
        PlanePartition q = p;
        q.promotion();
        return q;
      }));
}

TEST_CASE("complement prediction matches brute force") {
  for (int k = 0; k <= 6; ++k) {
    CHECK(complement_fixed_prediction(3, 3, 2, k) ==
          BigInt(count_fixed(3, 3, 2, word({{Op::Co, 1}, {Op::Pro, k}}))));
    CHECK(complement_fixed_prediction(2, 3, 3, k) ==
          BigInt(count_fixed(2, 3, 3, word({{Op::Co, 1}, {Op::Pro, k}}))));
    // The same prediction counts the rowmotion variant.
    CHECK(complement_fixed_prediction(3, 3, 2, k) ==
          BigInt(count_fixed(3, 3, 2, word({{Op::Co, 1}, {Op::Row, k}}))));
  }
}

TEST_CASE("frozen sieving rows for the two-row board at bound one") {
  // SymMac(2,1;q) = 1 + q + q^3 + q^4 evaluates to 4, 2, 0, 2 at i^k, and
  // those are the counts of subsets with c^{2+k}(I) = -I.
  VerifyReport r = verify_trco_csp(2, 1, kSerial);
  expect_green(r);
  REQUIRE(r.rows.size() >= 4);
  CHECK(r.order == 4);
  CHECK(r.rows[0].observed == "4");
  CHECK(r.rows[1].observed == "2");
  CHECK(r.rows[2].observed == "0");
  CHECK(r.rows[3].observed == "2");

  // Transposition composed with an odd rotation never has fixed points at
  // bound one.
  VerifyReport tr = verify_transpose_csp(2, 1, kSerial);
  expect_green(tr);
  REQUIRE(tr.rows.size() >= 4);
  CHECK(tr.rows[0].observed == "4");
  CHECK(tr.rows[1].observed == "0");
  CHECK(tr.rows[2].observed == "4");
  CHECK(tr.rows[3].observed == "0");
}

TEST_CASE("rotation sieving verifiers are green") {
  for (auto [a, b, m] : {std::tuple<int, int, int>{1, 1, 1},
                         {1, 3, 2},
                         {2, 2, 3},
                         {2, 3, 2},
                         {3, 3, 2}}) {
    expect_green(verify_promotion_csp(a, b, m, kSerial));
    expect_green(verify_rowmotion_csp(a, b, m, kSerial));
    expect_green(verify_complement_csp(a, b, m, kSerial));
    expect_green(verify_complement_row_csp(a, b, m, kSerial));
  }
}

TEST_CASE("symmetry sieving verifiers are green") {
  for (auto [n, m] : {std::pair<int, int>{1, 2}, {2, 1}, {2, 3}, {3, 2}}) {
    expect_green(verify_transpose_csp(n, m, kSerial));
    expect_green(verify_transpose_row_csp(n, m, kSerial));
    expect_green(verify_trco_csp(n, m, kSerial));
    expect_green(verify_trco_row_csp(n, m, kSerial));
    expect_green(verify_qneg_family(n, m, kSerial));
  }
}

TEST_CASE("reciprocity and the operator identities are green") {
  for (auto [a, b, m] : {std::tuple<int, int, int>{1, 2, 1},
                         {2, 2, 2},
                         {2, 3, 3},
                         {3, 3, 2}}) {
    expect_green(verify_reciprocity(a, b, m, kSerial));
    expect_green(verify_operator_identities(a, b, m, kSerial));
  }
}

TEST_CASE("no transpose-rotation fixed points at odd bounds") {
  for (int n : {2, 3}) {
    for (int m : {1, 3}) {
      GroupWord w = word({{Op::Tr, 1}, {Op::Row, n}});
      CHECK(count_fixed(n, n, m, w) == 0);
      // consistent with the q = -1 evaluation vanishing
      IntPolynomial f = symmac_formula(n, m).expand();
      CHECK(evaluate_at_root(f, 2, 1).as_integer().value() == 0);
    }
  }
}

TEST_CASE("triangular array dictionary is green") {
  for (auto [n, twoM] : {std::pair<int, int>{2, 2}, {2, 4}, {3, 2}, {3, 4}, {4, 2}}) {
    expect_green(verify_cy(n, twoM, kSerial));
  }
}

TEST_CASE("bijection and generating function suites are green") {
  for (auto [a, b, m] : {std::tuple<int, int, int>{2, 2, 2}, {2, 3, 1}, {2, 3, 2}}) {
    expect_green(verify_bijections(a, b, m, kSerial));
    expect_green(verify_genfun(a, b, m, kSerial));
  }
  expect_green(verify_genfun(3, 3, 2, kSerial));
}

TEST_CASE("embedding worked examples") {
  // Tall triangle: the embedded square reflects the labeling across the
  // diagonal.
  Poset tall2 = Poset::tall(2);
  Labeling v(3, 0);
  v[static_cast<size_t>(tall2.index_of(1, 1))] = 2;
  v[static_cast<size_t>(tall2.index_of(1, 2))] = 1;
  v[static_cast<size_t>(tall2.index_of(2, 2))] = 0;
  PlanePartition image = embed_tall_labeling(tall2, v, 2);
  CHECK(image == PlanePartition::from_rows(2, {{2, 1}, {1, 0}}));

  // Wide and corner triangles on one cell: [[v+M, M], [M, v]].
  Poset wide1 = Poset::wide(1);
  Poset corner1 = Poset::corner(1);
  for (int M : {1, 2}) {
    for (int val = 0; val <= M; ++val) {
      PlanePartition expected = PlanePartition::from_rows(
          2 * M, {{val + M, M}, {M, val}});
      CHECK(embed_wide_labeling(wide1, {val}, M) == expected);
      CHECK(embed_corner_labeling(corner1, {val}, M) == expected);
    }
  }
}

TEST_CASE("embedding verifiers are green") {
  expect_green(verify_tall_embedding(2, 2, kSerial));
  expect_green(verify_tall_embedding(3, 2, kSerial));
  expect_green(verify_tall_embedding(4, 1, kSerial));
  expect_green(verify_wide_embedding(2, 2, kSerial));
  expect_green(verify_wide_embedding(3, 1, kSerial));
  expect_green(verify_wide_embedding(4, 1, kSerial));
  expect_green(verify_corner_embedding(2, 1, kSerial));
  expect_green(verify_corner_embedding(2, 2, kSerial));
}

TEST_CASE("triangular sieving conjectures are green on both routes") {
  for (bool embedded : {false, true}) {
    expect_green(verify_tall_conjecture(2, 2, embedded, kSerial));
    expect_green(verify_tall_conjecture(3, 2, embedded, kSerial));
    expect_green(verify_wide_conjecture(2, 2, embedded, kSerial));
    expect_green(verify_wide_conjecture(3, 1, embedded, kSerial));
    expect_green(verify_corner_conjecture(2, 1, embedded, kSerial));
  }
}

#include <doctest.h>

#include <map>

#include "framecomplex/errors.hpp"
#include "framecomplex/multi_index.hpp"

using fcx::MultiIndex;

TEST_CASE("degree sums the counts") {
  CHECK(MultiIndex({2, 1}).degree() == 3);
  CHECK(MultiIndex({0, 0}).degree() == 0);
  CHECK(MultiIndex({0, 0, 5}).degree() == 5);
}

TEST_CASE("index factorial is the product of count factorials") {
  CHECK(MultiIndex({2, 1}).index_factorial() == 2);
  CHECK(MultiIndex({0, 0}).index_factorial() == 1);
  CHECK(MultiIndex({3, 2}).index_factorial() == 12);
}

TEST_CASE("weight counts distinct rearrangements") {
  CHECK(MultiIndex({2, 1}).weight() == 3);
  CHECK(MultiIndex({1, 1}).weight() == 2);
  CHECK(MultiIndex({0, 4}).weight() == 1);
}

TEST_CASE("raise and lower") {
  CHECK(MultiIndex({1, 0}).raised(2) == MultiIndex({1, 1}));
  CHECK(MultiIndex({1, 1}).lowered(1) == MultiIndex({0, 1}));
  CHECK(!MultiIndex({0, 2}).lowered(1).has_value());
  CHECK_THROWS_AS(MultiIndex({1, 0}).raised(3), fcx::DomainError);
  CHECK_THROWS_AS(MultiIndex({1, 0}).lowered(0), fcx::DomainError);
}

TEST_CASE("enumeration by exact degree") {
  auto two_two = MultiIndex::all_of_degree(2, 2);
  REQUIRE(two_two.size() == 3);
  CHECK(two_two[0] == MultiIndex({0, 2}));
  CHECK(two_two[1] == MultiIndex({1, 1}));
  CHECK(two_two[2] == MultiIndex({2, 0}));

  CHECK(MultiIndex::all_of_degree(1, 3) == std::vector<MultiIndex>{MultiIndex({3})});

  auto three_one = MultiIndex::all_of_degree(3, 1);
  REQUIRE(three_one.size() == 3);
  CHECK(three_one[0] == MultiIndex({0, 0, 1}));
  CHECK(three_one[2] == MultiIndex({1, 0, 0}));
}

TEST_CASE("enumeration cardinality is C(m+p-1, p)") {
  auto choose = [](int a, int b) {
    long long out = 1;
    for (int i = 0; i < b; ++i) out = out * (a - i) / (i + 1);
    return out;
  };
  for (int m = 1; m <= 4; ++m)
    for (int p = 0; p <= 5; ++p)
      CHECK(static_cast<long long>(MultiIndex::all_of_degree(m, p).size()) ==
            choose(m + p - 1, p));
}

TEST_CASE("raise/lower round trip and degree shift") {
  for (int m = 1; m <= 3; ++m) {
    for (int p = 0; p <= 3; ++p) {
      for (const auto& index : MultiIndex::all_of_degree(m, p)) {
        for (int i = 1; i <= m; ++i) {
          MultiIndex raised = index.raised(i);
          CHECK(raised.degree() == index.degree() + 1);
          REQUIRE(raised.lowered(i).has_value());
          CHECK(*raised.lowered(i) == index);
        }
      }
    }
  }
}

TEST_CASE("multinomial theorem: weights of fixed degree sum to m^p") {
  for (int m = 1; m <= 4; ++m) {
    for (int p = 0; p <= 6; ++p) {
      long long total = 0;
      for (const auto& index : MultiIndex::all_of_degree(m, p)) total += index.weight();
      long long expected = 1;
      for (int i = 0; i < p; ++i) expected *= m;
      CHECK(total == expected);
    }
  }
}

TEST_CASE("weight rearrangement identity used in the homotopy proof") {
  // weight(J + 1_q) * (J(q) + 1) = weight(J) * (|J| + 1)
  for (int m = 2; m <= 3; ++m) {
    for (int p = 0; p <= 4; ++p) {
      for (const auto& J : MultiIndex::all_of_degree(m, p)) {
        for (int q = 1; q <= m; ++q) {
          CHECK(J.raised(q).weight() * (J.count(q) + 1) == J.weight() * (J.degree() + 1));
          CHECK(J.raised(q).weight() * J.raised(q).index_factorial() ==
                fcx::MultiIndex::all_of_degree(1, 0).front().weight() *
                    [&] {  // (|J|+1)!
                      long long f = 1;
                      for (int i = 2; i <= J.degree() + 1; ++i) f *= i;
                      return f;
                    }());
        }
      }
    }
  }
}

TEST_CASE("canonical order is degree-major") {
  CHECK(MultiIndex({0, 2}) < MultiIndex({2, 1}));
  CHECK(MultiIndex({0, 1}) < MultiIndex({1, 0}));
  CHECK_THROWS_AS((void)(MultiIndex({1}) < MultiIndex({1, 0})), fcx::DomainError);
}

TEST_CASE("textual rendering") {
  CHECK(MultiIndex({2, 0, 1}).to_string() == "(2,0,1)");
  CHECK(MultiIndex({2, 1}).directions() == std::vector<int>{1, 1, 2});
}

#include "doctest.h"

#include "sympinv/smallgroups.hpp"

using namespace sympinv;

TEST_CASE("group orders follow the order formula") {
  CHECK(symplectic_group_order(1, 3) == 24);
  CHECK(symplectic_group_order(1, 7) == 336);
  CHECK(symplectic_group_order(2, 3) == 51840);
  for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 3}, {1, 5}, {1, 7}, {1, 11}, {2, 3}}) {
    GroupTable g(n, q);
    CHECK(g.order() == symplectic_group_order(n, q));
    Mat gram = Mat::standard_symplectic(g.field(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.order(); i += 97) CHECK(is_symplectic(g.unpack(g.elements()[i]), gram));
  }
  CHECK_THROWS_AS(GroupTable(3, 3), BudgetExceeded);
}

TEST_CASE("conjugacy classes partition the group") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 3}, {1, 7}, {2, 3}}) {
    GroupTable g(n, q);
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < g.class_count(); ++c) total += g.class_size(c);
    CHECK(total == g.order());
    Mat id = Mat::identity(g.field(), g.dim());
    CHECK(g.class_size(g.class_of(*g.index_of(id))) == 1);
    CHECK(g.class_size(g.class_of(*g.index_of(-id))) == 1);
    // Representatives are the least elements of their classes.
    for (std::size_t i = 0; i < g.order(); i += 13) {
      std::size_t c = g.class_of(i);
      CHECK(g.elements()[g.class_representative(c)] <= g.elements()[i]);
    }
  }
  // SL(2, q) has q + 4 classes; Sp(4, 3) has 34.
  CHECK(GroupTable(1, 3).class_count() == 7);
  CHECK(GroupTable(1, 11).class_count() == 15);
  CHECK(GroupTable(2, 3).class_count() == 34);
}

TEST_CASE("involution and skew-involution censuses") {
  // In SL(2, q) the skew-involutions are the trace-zero elements:
  // q(q - 1) of them for q = 3 mod 4, q(q + 1) for q = 1 mod 4.
  for (std::int64_t q : {3, 5, 7, 11}) {
    GroupTable g(1, q);
    CHECK(g.involutions().size() == 2);
    CHECK(g.skew_involutions().size() == static_cast<std::size_t>(q % 4 == 3 ? q * (q - 1) : q * (q + 1)));
  }
  // Sp(4, 3): +-I and the |Sp(4,3)| / |Sp(2,3)|^2 = 90 conjugates of diag(1, -1).
  GroupTable g(2, 3);
  CHECK(g.involutions().size() == 92);
  CHECK(g.skew_involutions().size() == 540);
}

TEST_CASE("oracles") {
  GroupTable g(1, 3);
  Field f = g.field();
  Mat id = Mat::identity(f, 2);
  auto p = g.product(id, 1, 1);
  REQUIRE(p);
  CHECK(p->first * p->second == id);
  auto s = g.product(-id, -1, -1);
  REQUIRE(s);
  CHECK(s->first * s->first == -id);
  Mat t(f, {{1, 1}, {0, 1}});
  CHECK_FALSE(g.product(t, -1, -1));
  CHECK(*g.conjugate(t, t) * t == t * *g.conjugate(t, t));
  CHECK_FALSE(g.conjugate(t, Mat(f, {{1, 2}, {0, 1}})));
  Mat u(f, {{1, 1}, {1, 2}});
  if (auto a = g.conjugate(u, inverse(u))) CHECK(inverse(*a) * u * *a == inverse(u));
  CHECK_THROWS_AS(g.product(Mat(f, {{2, 0}, {0, 1}}), 1, 1), DomainError);
}

TEST_CASE("class table") {
  GroupTable g(1, 3);
  auto classes = conjugacy_classes(g, {}, 2);
  REQUIRE(classes.size() == 7);
  std::string csv = class_table_csv(classes);
  CHECK(csv.rfind("class_id,rep,size,order_of_element,elementary_divisors,is_involution,is_skew_involution,"
                  "reversible,bireflectional,two_skew,inv_skew,psp_rev_not_biref\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  for (const auto& r : classes) {
    CHECK(r.psp_rev_not_biref == Verdict::no);
    CHECK(r.reversible == r.two_skew);
  }
  CHECK(conjugacy_classes(g, {}, 1).size() == 7);
  CHECK(class_table_csv(conjugacy_classes(g, {}, 3)) == csv);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rookchar/rook_core.hpp"

using namespace rookchar;

namespace {

RookElement el(std::vector<RookElement::Entry> pairs) {
  return RookElement::from_map(pairs);
}

const RookElement::Image KILL{};

}  // namespace

TEST_CASE("from_map canonical constructor") {
  CHECK(el({{1, 2}, {2, 1}}) == cycle({1, 2}));
  CHECK(el({{2, KILL}}) == epsilon({2}));
  CHECK(el({{3, 3}}) == RookElement{});  // fixed point dropped
  CHECK(el({{3, 3}}).is_identity());

  CHECK_THROWS_AS(el({{1, 2}, {1, 3}}), Error);
  CHECK_THROWS_AS(el({{1, 3}, {2, 3}}), Error);
  CHECK_THROWS_AS(el({{0, KILL}}), Error);
  CHECK_THROWS_AS(el({{1, -2}}), Error);
  // output collides with an implicit fixed point
  CHECK_THROWS_AS(el({{1, 2}}), Error);
}

TEST_CASE("compose") {
  CHECK(compose(cycle({1, 2}), cycle({1, 2})).is_identity());
  CHECK(compose(cycle({1, 2}), epsilon({2})) == el({{1, KILL}, {2, 1}}));
  CHECK(compose(epsilon({1}), epsilon({2})) == epsilon({1, 2}));
}

TEST_CASE("star") {
  CHECK(star(cycle({1, 2, 3})) == cycle({1, 3, 2}));
  CHECK(star(epsilon({2})) == epsilon({2}));
  CHECK(star(el({{1, KILL}, {2, 1}})) == el({{1, 2}, {2, KILL}}));
}

TEST_CASE("epsilon") {
  CHECK(epsilon({}).is_identity());
  CHECK(epsilon({2}).rank_deficit() == 1);
  CHECK(epsilon({1, 3}) == compose(epsilon({1}), epsilon({3})));
}

TEST_CASE("cycle") {
  CHECK(cycle({1, 2}) == el({{1, 2}, {2, 1}}));
  CHECK(cycle({5}).is_identity());
  CHECK_THROWS_AS(cycle({1, 2, 1}), Error);
  // adjacent factorization under the fixed composition convention
  CHECK(cycle({1, 2, 3}) == compose(cycle({1, 2}), cycle({1, 3})));
}

TEST_CASE("support and rank deficit") {
  CHECK(RookElement{}.support().empty());
  CHECK(epsilon({2}).support() == std::set<int>{2});
  CHECK(cycle({3, 4}).support() == std::set<int>{3, 4});
  CHECK(cycle({1, 2, 3}).rank_deficit() == 0);
  CHECK(epsilon({1, 3}).rank_deficit() == 2);
  CHECK(compose(cycle({1, 2}), epsilon({2})).rank_deficit() == 1);
}

TEST_CASE("as_matrix") {
  auto m = as_matrix(epsilon({2}), 3);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(2, 2) == 0);
  CHECK(m.at(3, 3) == 1);
  CHECK(as_matrix(RookElement{}, 2) == as_matrix(cycle({7}), 2));
  auto t = as_matrix(cycle({1, 2}), 2);
  CHECK(t.at(1, 2) == 1);
  CHECK(t.at(2, 1) == 1);
  CHECK(t.at(1, 1) == 0);
  CHECK_THROWS_AS(as_matrix(epsilon({5}), 3), Error);
}

TEST_CASE("enumeration counts and uniqueness") {
  CHECK(enumerate_rn(1).size() == 2);
  CHECK(enumerate_rn(2).size() == 7);
  CHECK(enumerate_rn(3).size() == 34);
  CHECK(enumerate_rn(4).size() == 209);
  CHECK_THROWS_AS(enumerate_rn(7), Error);
  CHECK(enumerate_rn(7, 8).size() > 0);

  auto r3 = enumerate_rn(3);
  std::set<RookElement> unique(r3.begin(), r3.end());
  CHECK(unique.size() == r3.size());

  // deterministic order: identity first, then by rank deficit
  CHECK(r3.front().is_identity());
  for (std::size_t i = 1; i < r3.size(); ++i) {
    CHECK(r3[i - 1].rank_deficit() <= r3[i].rank_deficit());
  }
}

TEST_CASE("involution and idempotent properties over R_3") {
  auto r3 = enumerate_rn(3);
  for (const auto& r : r3) {
    CHECK(star(star(r)) == r);
    for (const auto& s : r3) {
      CHECK(star(compose(r, s)) == compose(star(s), star(r)));
    }
  }
}

TEST_CASE("epsilon conjugation identity up to 4") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (a == b) continue;
      auto lhs = compose(epsilon({a}), compose(cycle({a, b}), epsilon({a})));
      CHECK(lhs == compose(epsilon({a}), epsilon({b})));
    }
  }
}

TEST_CASE("support and deficit bounds under composition") {
  auto r3 = enumerate_rn(3);
  for (const auto& r : r3) {
    for (const auto& s : r3) {
      auto rs = compose(r, s);
      auto sup_r = r.support(), sup_s = s.support();
      for (int x : rs.support()) {
        CHECK((sup_r.count(x) || sup_s.count(x)));
      }
      int dr = r.rank_deficit(), ds = s.rank_deficit();
      CHECK(rs.rank_deficit() >= std::max(dr, ds));
      CHECK(rs.rank_deficit() <= dr + ds);
    }
  }
}

TEST_CASE("as_matrix is a star homomorphism on R_3") {
  auto r3 = enumerate_rn(3);
  for (const auto& r : r3) {
    CHECK(as_matrix(star(r), 3) == transpose(as_matrix(r, 3)));
    for (const auto& s : r3) {
      CHECK(as_matrix(compose(r, s), 3) ==
            multiply(as_matrix(r, 3), as_matrix(s, 3)));
    }
  }
}

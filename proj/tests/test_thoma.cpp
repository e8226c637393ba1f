#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rookchar/notation.hpp"
#include "rookchar/quasicycle.hpp"
#include "rookchar/thoma.hpp"

using namespace rookchar;

namespace {

ThomaParams p0() { return ThomaParams::validate({0.5, 0.3}, {0.2}, 2); }

}  // namespace

TEST_CASE("validate") {
  auto p = p0();
  CHECK(p.rho() == 0.3);
  CHECK(p.gamma() == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(ThomaParams::validate({0.6}, {0.6}, std::nullopt), Error);
  CHECK_THROWS_AS(ThomaParams::validate({0.3, 0.5}, {}, std::nullopt), Error);
  CHECK_THROWS_AS(ThomaParams::validate({0.5}, {}, 2), Error);
  CHECK_THROWS_AS(ThomaParams::validate({0.5, -0.1}, {}, std::nullopt), Error);

  auto trivial = ThomaParams::validate({1.0}, {}, std::nullopt);
  CHECK(trivial.rho() == 0.0);
}

TEST_CASE("cycle_value") {
  auto p = p0();
  CHECK(cycle_value(p, 1) == 1.0);
  CHECK(cycle_value(p, 2) == doctest::Approx(0.30).epsilon(1e-14));
  CHECK(cycle_value(p, 3) == doctest::Approx(0.16).epsilon(1e-14));
  // sign resolution on alpha=(0.6), beta=(0.4)
  auto q = ThomaParams::validate({0.6}, {0.4}, std::nullopt);
  CHECK(cycle_value(q, 2) == doctest::Approx(0.20).epsilon(1e-14));
}

TEST_CASE("character examples") {
  auto p = p0();
  CHECK(character(p, parse("(1 2)k{1}")) == doctest::Approx(0.09).epsilon(1e-14));
  CHECK(character(p, parse("(1 2 3)k{2}(4 5)")) ==
        doctest::Approx(0.3 * 0.3 * 0.3 * 0.30).epsilon(1e-12));
  CHECK(character(p, parse("e")) == 1.0);
}

TEST_CASE("star symmetry and bound over R_3") {
  auto p = p0();
  for (const auto& r : enumerate_rn(3)) {
    CHECK(character(p, star(r)) == doctest::Approx(character(p, r)).epsilon(1e-14));
  }
  for (const auto& r : enumerate_rn(4)) {
    CHECK(std::fabs(character(p, r)) <= 1.0 + 1e-14);
  }
}

TEST_CASE("multiplicativity over R_4") {
  auto p = p0();
  for (const auto& r : enumerate_rn(4)) {
    double product = 1.0;
    for (const auto& q : decompose(r)) {
      product *= character(p, to_element(q));
    }
    CHECK(character(p, r) == doctest::Approx(product).epsilon(1e-13));
  }
}

TEST_CASE("decomposition independence") {
  auto p = p0();
  for (const auto& r : enumerate_rn(4)) {
    auto qs = decompose(r);
    double canonical = character(p, r);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      double regrouped = 1.0;
      for (const auto& factor : random_regrouping(qs, seed)) {
        regrouped *= character(p, factor);
      }
      CHECK(regrouped == doctest::Approx(canonical).epsilon(1e-12));
    }
  }
}

TEST_CASE("rho zero kills chains") {
  auto p = ThomaParams::validate({0.4}, {0.3}, std::nullopt);
  CHECK(character(p, epsilon({1})) == 0.0);
  CHECK(character(p, parse("(1 2 3)k{2}")) == 0.0);
  CHECK(character(p, parse("(1 2)")) ==
        doctest::Approx(0.16 - 0.09).epsilon(1e-14));
}

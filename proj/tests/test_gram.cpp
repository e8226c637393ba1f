#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rookchar/gram.hpp"
#include "rookchar/notation.hpp"

using namespace rookchar;

namespace {

ThomaParams p0() { return ThomaParams::validate({0.5, 0.3}, {0.2}, 2); }

SymMatrix from_rows(std::vector<std::vector<double>> rows) {
  SymMatrix m = SymMatrix::zeros(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Independent oracle for small matrices: roots of the characteristic
// polynomial.
double min_eig_2x2(const SymMatrix& m) {
  double tr = m.at(0, 0) + m.at(1, 1);
  double det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  return (tr - std::sqrt(tr * tr - 4 * det)) / 2;
}

double min_eig_3x3(const SymMatrix& m) {
  // coefficients of -lambda^3 + c2 lambda^2 + c1 lambda + c0
  double a = m.at(0, 0), b = m.at(1, 1), c = m.at(2, 2);
  double d = m.at(0, 1), e = m.at(0, 2), f = m.at(1, 2);
  double c2 = a + b + c;
  double c1 = d * d + e * e + f * f - a * b - a * c - b * c;
  double c0 = a * b * c + 2 * d * e * f - a * f * f - b * e * e - c * d * d;
  // bisect on p(x) = -x^3 + c2 x^2 + c1 x + c0 for the smallest root
  auto p = [&](double x) { return ((-x + c2) * x + c1) * x + c0; };
  double lo = -10, best = 1e9;
  for (double hi = lo; hi <= 10; hi += 1e-3) {
    if (p(hi) * p(hi + 1e-3) <= 0) {
      double l = hi, r = hi + 1e-3;
      for (int i = 0; i < 80; ++i) {
        double mid = (l + r) / 2;
        (p(l) * p(mid) <= 0 ? r : l) = mid;
      }
      best = std::min(best, (l + r) / 2);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("gram_matrix examples") {
  auto p = p0();
  auto g = gram_matrix(p, {RookElement{}, epsilon({1})});
  CHECK(g.at(0, 0) == 1.0);
  CHECK(g.at(0, 1) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(g.at(1, 0) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(g.at(1, 1) == doctest::Approx(0.3).epsilon(1e-14));

  auto single = gram_matrix(p, {RookElement{}});
  CHECK(single.n == 1);
  CHECK(single.at(0, 0) == 1.0);

  auto g2 = gram_matrix(p, {RookElement{}, cycle({1, 2})});
  CHECK(g2.at(0, 1) == doctest::Approx(0.30).epsilon(1e-14));
  CHECK(g2.at(1, 1) == 1.0);

  CHECK_THROWS_AS(gram_matrix(p, {}), Error);
}

TEST_CASE("min_eigenvalue") {
  CHECK(min_eigenvalue(from_rows({{1, 0.3}, {0.3, 0.3}})) ==
        doctest::Approx((1.3 - std::sqrt(0.85)) / 2).epsilon(1e-12));
  SymMatrix id5 = SymMatrix::zeros(5);
  for (int i = 0; i < 5; ++i) id5.at(i, i) = 1.0;
  CHECK(min_eigenvalue(id5) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(min_eigenvalue(from_rows({{0, 1}, {1, 0}})) ==
        doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(min_eigenvalue(from_rows({{0, 1}, {0.5, 0}})), Error);
}

TEST_CASE("jacobi agrees with characteristic polynomial roots") {
  std::vector<SymMatrix> cases = {
      from_rows({{1, 0.3}, {0.3, 0.3}}),
      from_rows({{2, -1}, {-1, 0.5}}),
      from_rows({{1, 0.2, -0.4}, {0.2, 0.7, 0.1}, {-0.4, 0.1, -0.3}}),
  };
  for (const auto& m : cases) {
    double expected = m.n == 2 ? min_eig_2x2(m) : min_eig_3x3(m);
    CHECK(min_eigenvalue(m) == doctest::Approx(expected).epsilon(1e-10));
  }
  // repeated eigenvalue (a + 2b, a - b, a - b); the bisection oracle above
  // cannot see a double root, so pin the closed form directly
  CHECK(min_eigenvalue(from_rows(
            {{0.9, 0.5, 0.5}, {0.5, 0.9, 0.5}, {0.5, 0.5, 0.9}})) ==
        doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("PSD over full R_3 for validated parameters") {
  auto g = gram_matrix(p0(), enumerate_rn(3));
  CHECK(g.n == 34);
  for (int i = 0; i < g.n; ++i) CHECK(g.at(i, i) >= 0.0);
  CHECK(min_eigenvalue(g) >= -1e-9);
}

TEST_CASE("centrality over R_3 for five parameter sets") {
  std::vector<ThomaParams> sets = {
      p0(),
      ThomaParams::validate({1.0}, {}, 1),
      ThomaParams::validate({0.4}, {0.3}, std::nullopt),
      ThomaParams::validate({0.25, 0.25}, {0.25, 0.25}, 1),
      ThomaParams::validate({0.7}, {0.1}, 1),
  };
  auto r3 = enumerate_rn(3);
  for (const auto& p : sets) {
    auto report = check_centrality(p, r3);
    CHECK(report.pass);
    CHECK(report.max_deviation <= 1e-12);
  }
}

TEST_CASE("witness search") {
  auto valid = witness_search(p0(), enumerate_rn(3), 8, 7);
  CHECK(valid.is_psd);
  CHECK(valid.min_eigenvalue >= -1e-9);
  CHECK(valid.witness_vector.empty());

  // invalid rho: report only, no sign assertion
  auto invalid = ThomaParams::with_unchecked_rho({1.0}, {}, 0.5);
  auto report = witness_search(invalid, enumerate_rn(4), 10, 3);
  CHECK(report.subset.size() >= 1);
  CHECK(report.is_psd == report.witness_vector.empty());
  auto again = witness_search(invalid, enumerate_rn(4), 10, 3);
  CHECK(report.min_eigenvalue == again.min_eigenvalue);
  CHECK(report.subset == again.subset);

  CHECK_THROWS_AS(witness_search(p0(), {}, 8, 0), Error);
  CHECK_THROWS_AS(witness_search(p0(), enumerate_rn(2), 13, 0), Error);
}

TEST_CASE("negative witness quadratic form is negative") {
  auto invalid = ThomaParams::with_unchecked_rho({1.0}, {}, 0.5);
  auto report = witness_search(invalid, enumerate_rn(4), 10, 3);
  if (!report.is_psd) {
    auto g = gram_matrix(invalid, report.subset);
    double quad = 0.0;
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        quad += report.witness_vector[i] * g.at(i, j) * report.witness_vector[j];
    CHECK(quad < 0.0);
  }
}

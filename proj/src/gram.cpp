#include "rookchar/gram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace rookchar {

namespace {

double off_diagonal_norm(const SymMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (i != j) s += m.at(i, j) * m.at(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const SymMatrix& m) {
  double s = 0.0;
  for (double v : m.a) s += v * v;
  return std::sqrt(s);
}

void check_symmetric(const SymMatrix& m) {
  double scale = 0.0;
  for (double v : m.a) scale = std::max(scale, std::fabs(v));
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (std::fabs(m.at(i, j) - m.at(j, i)) > 1e-14 * std::max(1.0, scale)) {
        throw Error(Errc::NotSymmetric, "matrix is not symmetric");
      }
}

}  // namespace

EigenResult jacobi_eigen(SymMatrix m) {
  check_symmetric(m);
  const int n = m.n;
  // V starts as identity and accumulates the rotations; columns become
  // eigenvectors.
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  const double norm = frobenius_norm(m);
  const double target = 1e-12 * std::max(norm, 1e-300);
  constexpr int kMaxSweeps = 100;

  int sweep = 0;
  while (off_diagonal_norm(m) >= target) {
    if (++sweep > kMaxSweeps) {
      throw Error(Errc::NoConvergence, "Jacobi iteration did not converge");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = m.at(p, q);
        if (apq == 0.0) continue;
        double app = m.at(p, p), aqq = m.at(q, q);
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        for (int k = 0; k < n; ++k) {
          double akp = m.at(k, p), akq = m.at(k, q);
          m.at(k, p) = c * akp - s * akq;
          m.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = m.at(p, k), aqk = m.at(q, k);
          m.at(p, k) = c * apk - s * aqk;
          m.at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  EigenResult res;
  res.values.resize(n);
  res.vectors.assign(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    res.values[k] = m.at(k, k);
    for (int i = 0; i < n; ++i) res.vectors[k][i] = v[i][k];
  }
  return res;
}

double min_eigenvalue(const SymMatrix& m) {
  EigenResult res = jacobi_eigen(m);
  return *std::min_element(res.values.begin(), res.values.end());
}

SymMatrix gram_matrix(const ThomaParams& p,
                      const std::vector<RookElement>& elements) {
  if (elements.empty()) {
    throw Error(Errc::EmptyPool, "element list is empty");
  }
  const int n = static_cast<int>(elements.size());
  SymMatrix g = SymMatrix::zeros(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double value = character(p, compose(star(elements[i]), elements[j]));
      g.at(i, j) = value;
      g.at(j, i) = value;
    }
  }
  return g;
}

CentralityReport check_centrality(const ThomaParams& p,
                                  const std::vector<RookElement>& elements,
                                  double tolerance) {
  CentralityReport report;
  for (const RookElement& r : elements) {
    for (const RookElement& s : elements) {
      double d = std::fabs(character(p, compose(r, s)) -
                           character(p, compose(s, r)));
      report.max_deviation = std::max(report.max_deviation, d);
    }
  }
  report.pass = report.max_deviation <= tolerance;
  return report;
}

PsdReport witness_search(const ThomaParams& p,
                         const std::vector<RookElement>& pool, int max_subset,
                         std::uint64_t seed) {
  if (pool.empty()) {
    throw Error(Errc::EmptyPool, "witness pool is empty");
  }
  if (max_subset < 1 || max_subset > 12) {
    throw Error(Errc::InvalidArgument, "max_subset must be in [1, 12]");
  }
  constexpr int kTrials = 200;
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> indices(pool.size());
  std::iota(indices.begin(), indices.end(), 0);

  PsdReport best;
  best.min_eigenvalue = std::numeric_limits<double>::infinity();
  const int max_size =
      std::min<int>(max_subset, static_cast<int>(pool.size()));
  for (int trial = 0; trial < kTrials; ++trial) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    int size = size_dist(rng);
    std::shuffle(indices.begin(), indices.end(), rng);
    std::vector<RookElement> subset;
    for (int i = 0; i < size; ++i) subset.push_back(pool[indices[i]]);

    EigenResult eig = jacobi_eigen(gram_matrix(p, subset));
    auto it = std::min_element(eig.values.begin(), eig.values.end());
    if (*it < best.min_eigenvalue) {
      best.min_eigenvalue = *it;
      best.subset = subset;
      best.witness_vector = eig.vectors[it - eig.values.begin()];
    }
  }
  best.is_psd = best.min_eigenvalue >= -kPsdTolerance;
  if (best.is_psd) best.witness_vector.clear();
  return best;
}

}  // namespace rookchar

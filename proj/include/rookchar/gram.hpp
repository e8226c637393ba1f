#ifndef ROOKCHAR_GRAM_HPP_
#define ROOKCHAR_GRAM_HPP_

#include <cstdint>
#include <vector>

#include "rookchar/rook_core.hpp"
#include "rookchar/thoma.hpp"

namespace rookchar {

struct SymMatrix {
  int n = 0;
  std::vector<double> a;  // row-major, n*n

  static SymMatrix zeros(int n) {
    return SymMatrix{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Full symmetric eigendecomposition by cyclic Jacobi sweeps.
struct EigenResult {
  std::vector<double> values;              // unordered
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};
EigenResult jacobi_eigen(SymMatrix m);

// Smallest eigenvalue; throws NotSymmetric / NoConvergence.
double min_eigenvalue(const SymMatrix& m);

// G_ij = f(r_i* r_j).
SymMatrix gram_matrix(const ThomaParams& p,
                      const std::vector<RookElement>& elements);

struct CentralityReport {
  double max_deviation = 0.0;
  bool pass = false;
};
CentralityReport check_centrality(const ThomaParams& p,
                                  const std::vector<RookElement>& elements,
                                  double tolerance = 1e-12);

constexpr double kPsdTolerance = 1e-9;

struct PsdReport {
  double min_eigenvalue = 0.0;
  bool is_psd = true;
  std::vector<double> witness_vector;  // nonempty iff !is_psd
  std::vector<RookElement> subset;
};

// Exploratory search over random subsets of the pool for a Gram matrix with
// a negative eigenvalue; reports the most negative minimum found.
PsdReport witness_search(const ThomaParams& p,
                         const std::vector<RookElement>& pool, int max_subset,
                         std::uint64_t seed);

}  // namespace rookchar

#endif  // ROOKCHAR_GRAM_HPP_

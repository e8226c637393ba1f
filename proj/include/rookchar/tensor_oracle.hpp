#ifndef ROOKCHAR_TENSOR_ORACLE_HPP_
#define ROOKCHAR_TENSOR_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rookchar/rook_core.hpp"
#include "rookchar/thoma.hpp"

namespace rookchar {

// Finite diagonal model of the spectral operator driving the tensor
// realization: d eigenvalues, an optional distinguished positive eigenbasis
// index q, and a truncation level for the tensor product.
class SpectralModel {
 public:
  static SpectralModel validate(std::vector<double> diag,
                                std::optional<int> q_index, int n_factors);

  int dim() const { return static_cast<int>(diag_.size()); }
  int n_factors() const { return n_factors_; }
  const std::vector<double>& diag() const { return diag_; }
  std::optional<int> q_index() const { return q_index_; }  // 1-based

  double gamma() const { return gamma_; }
  const std::vector<int>& kernel_indices() const { return kernel_indices_; }
  bool is_negative(int letter) const { return diag_[letter - 1] < 0.0; }
  bool e_minus_full() const;

  // Per-factor density rho_k(i) = |a_i| + gamma * [i == k-th kernel index];
  // weights are >= 0 and sum to one.  k and letter are 1-based.
  double factor_weight(int k, int letter) const;

  // alpha = positive eigenvalues descending, beta = |negatives| descending,
  // rho = a_q (located in alpha) or zero when q is absent.
  ThomaParams induced_params() const;

  // Number of basis tuples d^n_factors, capped by ROOKCHAR_MAX_BASIS.
  std::size_t basis_size() const;

 private:
  SpectralModel() = default;

  std::vector<double> diag_;
  std::optional<int> q_index_;
  int n_factors_ = 0;
  double gamma_ = 0.0;
  std::vector<int> kernel_indices_;
};

// Generators the lift factors through: adjacent transpositions (k k+1) and
// the one-point kill at 1.
struct Generator {
  enum class Kind { AdjacentTransposition, EpsilonOne };
  Kind kind;
  int k = 0;  // (k k+1), AdjacentTransposition only

  bool operator==(const Generator&) const = default;
};

RookElement generator_to_element(const Generator& g);

// A word in the generators whose left-to-right composition reproduces r,
// via the factorization r = eps_K * sigma with K the killed inputs and sigma
// the permutation extending r onto the missing outputs in increasing order.
std::vector<Generator> generator_word(const RookElement& r);

// A partial permutation of the tensor-product basis with one real weight per
// mapped tuple, stored structurally as a word of primitive steps evaluated
// lazily per basis tuple.  Lifts of rook elements carry weights in {+1,-1};
// limit operators carry the eigenvalues.
class SignedPartialPerm {
 public:
  struct Step {
    enum class Kind {
      AdjSwap,   // swap factors (factor, factor+1), sign -1 iff both letters
                 // are negative-spectrum
      LongSwap,  // swap factors (factor, factor+span) with the intermediate
                 // sign string; closed-form cross-check path
      ProjQ,     // diagonal projection onto letter q in `factor`
      DiagA,     // diagonal weight a_{letter} in `factor`
      Zero,      // the zero operator
    };
    Kind kind;
    int factor = 0;
    int span = 0;
  };

  SignedPartialPerm(int dim, int n_factors) : dim_(dim), n_factors_(n_factors) {}

  int dim() const { return dim_; }
  int n_factors() const { return n_factors_; }
  const std::vector<Step>& word() const { return word_; }
  std::vector<Step>& word() { return word_; }

  // Image of the basis tuple b (letters 1..d): nullopt when annihilated,
  // otherwise the mapped tuple and its weight.  Steps apply right to left
  // (operator-product order).
  std::optional<std::pair<std::vector<int>, double>> apply(
      const SpectralModel& m, std::vector<int> b) const;

 private:
  int dim_;
  int n_factors_;
  std::vector<Step> word_;
};

SignedPartialPerm lift(const RookElement& r, const SpectralModel& m);

// Closed-form lift of the transposition (k k+span): one step carrying the
// sign string across the intermediate factors.  Cross-check against the
// word-built lift.
SignedPartialPerm lift_long_transposition(const SpectralModel& m, int k,
                                          int span);

// Operator product x * y (y applied first).
SignedPartialPerm product(const SignedPartialPerm& x,
                          const SignedPartialPerm& y);

// Adjoint = reversed word; every primitive step is self-adjoint.
SignedPartialPerm adjoint(const SignedPartialPerm& x);

// Entrywise comparison over the full basis, exact.
bool structurally_equal(const SpectralModel& m, const SignedPartialPerm& x,
                        const SignedPartialPerm& y);

// Product-state value: sum over basis tuples fixed by x of the weight times
// the per-factor densities.
double expectation(const SignedPartialPerm& x, const SpectralModel& m);

// Diagonal operator with weight a_{b_k} in factor k, the stabilized value of
// the transpositions (k n) for large n.  Requires the negative spectrum to
// be a proper subset.
SignedPartialPerm limit_operator(const SpectralModel& m, int k);

// <pi(r) xi0, xi0> at the truncation level; independently validates the
// character formula.  Zero for killing elements when q is absent.
double oracle_character(const SpectralModel& m, const RookElement& r);

}  // namespace rookchar

#endif  // ROOKCHAR_TENSOR_ORACLE_HPP_

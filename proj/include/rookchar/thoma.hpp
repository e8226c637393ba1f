#ifndef ROOKCHAR_THOMA_HPP_
#define ROOKCHAR_THOMA_HPP_

#include <optional>
#include <vector>

#include "rookchar/rook_core.hpp"

namespace rookchar {

// Character parameters: two descending sequences alpha, beta in (0,1] with
// sum at most one, and a designator for rho = f(epsilon_{k}).  rho is an
// index into alpha (or zero), never a free float; the unchecked variant
// exists solely for witness exploration in gram_lab.
class ThomaParams {
 public:
  enum class RhoKind { Zero, AlphaIndex, Unchecked };

  // rho_index: nullopt -> rho = 0, i -> rho = alpha_i (1-based).
  static ThomaParams validate(std::vector<double> alpha,
                              std::vector<double> beta,
                              std::optional<int> rho_index);

  // No constraint between rho and alpha; alpha/beta are still validated.
  static ThomaParams with_unchecked_rho(std::vector<double> alpha,
                                        std::vector<double> beta, double rho);

  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& beta() const { return beta_; }
  RhoKind rho_kind() const { return rho_kind_; }
  int alpha_index() const { return alpha_index_; }  // 1-based, AlphaIndex only

  double rho() const;
  double gamma() const;  // residual mass 1 - sum(alpha) - sum(beta)

 private:
  ThomaParams() = default;
  static void check_lists(const std::vector<double>& alpha,
                          const std::vector<double>& beta);

  std::vector<double> alpha_;
  std::vector<double> beta_;
  RhoKind rho_kind_ = RhoKind::Zero;
  int alpha_index_ = 0;
  double unchecked_rho_ = 0.0;
};

// Value on a single cycle of the given length: 1 for length 1, otherwise
// sum(alpha^l) + (-1)^(l+1) sum(beta^l).
double cycle_value(const ThomaParams& p, int length);

// Character value: product over the quasicycle decomposition, a pure cycle
// of length l contributing cycle_value(l) and a chain of length m
// contributing rho^m.
double character(const ThomaParams& p, const RookElement& r);

}  // namespace rookchar

#endif  // ROOKCHAR_THOMA_HPP_

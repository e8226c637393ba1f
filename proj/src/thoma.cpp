#include "rookchar/thoma.hpp"

#include <cmath>
#include <numeric>

#include "rookchar/quasicycle.hpp"

namespace rookchar {

namespace {
constexpr double kMassTolerance = 1e-12;
}

void ThomaParams::check_lists(const std::vector<double>& alpha,
                              const std::vector<double>& beta) {
  for (const auto* list : {&alpha, &beta}) {
    for (std::size_t i = 0; i < list->size(); ++i) {
      double v = (*list)[i];
      if (!(v > 0.0) || v > 1.0) {
        throw Error(Errc::NotDescending, "entries must lie in (0, 1]");
      }
      if (i > 0 && v > (*list)[i - 1]) {
        throw Error(Errc::NotDescending, "parameter list is not descending");
      }
    }
  }
  double mass = std::accumulate(alpha.begin(), alpha.end(), 0.0) +
                std::accumulate(beta.begin(), beta.end(), 0.0);
  if (mass > 1.0 + kMassTolerance) {
    throw Error(Errc::MassExceedsOne,
                "sum(alpha) + sum(beta) = " + std::to_string(mass) + " > 1");
  }
}

ThomaParams ThomaParams::validate(std::vector<double> alpha,
                                  std::vector<double> beta,
                                  std::optional<int> rho_index) {
  check_lists(alpha, beta);
  ThomaParams p;
  if (rho_index) {
    if (*rho_index < 1 || *rho_index > static_cast<int>(alpha.size())) {
      throw Error(Errc::RhoIndexOutOfRange,
                  "rho index " + std::to_string(*rho_index) +
                      " out of range for alpha");
    }
    p.rho_kind_ = RhoKind::AlphaIndex;
    p.alpha_index_ = *rho_index;
  } else {
    p.rho_kind_ = RhoKind::Zero;
  }
  p.alpha_ = std::move(alpha);
  p.beta_ = std::move(beta);
  return p;
}

ThomaParams ThomaParams::with_unchecked_rho(std::vector<double> alpha,
                                            std::vector<double> beta,
                                            double rho) {
  check_lists(alpha, beta);
  ThomaParams p;
  p.rho_kind_ = RhoKind::Unchecked;
  p.unchecked_rho_ = rho;
  p.alpha_ = std::move(alpha);
  p.beta_ = std::move(beta);
  return p;
}

double ThomaParams::rho() const {
  switch (rho_kind_) {
    case RhoKind::Zero:
      return 0.0;
    case RhoKind::AlphaIndex:
      return alpha_[alpha_index_ - 1];
    case RhoKind::Unchecked:
      return unchecked_rho_;
  }
  return 0.0;
}

double ThomaParams::gamma() const {
  double mass = std::accumulate(alpha_.begin(), alpha_.end(), 0.0) +
                std::accumulate(beta_.begin(), beta_.end(), 0.0);
  return std::max(0.0, 1.0 - mass);
}

double cycle_value(const ThomaParams& p, int length) {
  if (length < 1) {
    throw Error(Errc::InvalidArgument, "cycle length must be >= 1");
  }
  if (length == 1) return 1.0;
  double value = 0.0;
  for (double a : p.alpha()) value += std::pow(a, length);
  double beta_sum = 0.0;
  for (double b : p.beta()) beta_sum += std::pow(b, length);
  // Sign (-1)^(l+1): the realization's eigenvalue at -beta contributes
  // beta * (-beta)^(l-1).
  value += (length % 2 == 0 ? -1.0 : 1.0) * beta_sum;
  return value;
}

double character(const ThomaParams& p, const RookElement& r) {
  double value = 1.0;
  for (const Quasicycle& q : decompose(r)) {
    if (q.kind == Quasicycle::Kind::PureCycle) {
      value *= cycle_value(p, static_cast<int>(q.points.size()));
    } else {
      value *= std::pow(p.rho(), static_cast<int>(q.points.size()));
    }
  }
  return value;
}

}  // namespace rookchar

#include "rookchar/tensor_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace rookchar {

namespace {

constexpr double kTraceTolerance = 1e-12;

std::size_t max_basis() {
  if (const char* env = std::getenv("ROOKCHAR_MAX_BASIS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

// Adjacent-transposition word for a permutation given in one-line form
// p[i-1] = sigma(i): bubble-sorting p with adjacent swaps yields
// sigma = tau_1 * tau_2 * ... * tau_m (left-to-right composition).
void append_adjacent_word(std::vector<int> p, std::vector<Generator>* out) {
  const int n = static_cast<int>(p.size());
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        out->push_back({Generator::Kind::AdjacentTransposition, i + 1});
        swapped = true;
      }
    }
  }
}

void append_transposition_word(int a, int b, std::vector<Generator>* out) {
  int n = std::max(a, b);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::swap(p[a - 1], p[b - 1]);
  append_adjacent_word(std::move(p), out);
}

}  // namespace

SpectralModel SpectralModel::validate(std::vector<double> diag,
                                      std::optional<int> q_index,
                                      int n_factors) {
  if (diag.empty() || n_factors < 1) {
    throw Error(Errc::BadDimension, "need dim >= 1 and n_factors >= 1");
  }
  double trace = 0.0;
  for (double a : diag) trace += std::fabs(a);
  if (trace > 1.0 + kTraceTolerance) {
    throw Error(Errc::TraceExceedsOne,
                "trace norm " + std::to_string(trace) + " > 1");
  }
  if (q_index) {
    if (*q_index < 1 || *q_index > static_cast<int>(diag.size())) {
      throw Error(Errc::BadDimension, "q_index out of range");
    }
    if (!(diag[*q_index - 1] > 0.0)) {
      throw Error(Errc::QOnNonpositive,
                  "q must sit on a positive eigenvalue");
    }
  }

  SpectralModel m;
  m.gamma_ = std::max(0.0, 1.0 - trace);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0.0) m.kernel_indices_.push_back(static_cast<int>(i) + 1);
  }
  if (m.gamma_ > kTraceTolerance &&
      static_cast<int>(m.kernel_indices_.size()) < n_factors) {
    throw Error(Errc::KernelTooSmall,
                "trace norm < 1 requires at least n_factors kernel indices");
  }
  m.diag_ = std::move(diag);
  m.q_index_ = q_index;
  m.n_factors_ = n_factors;
  return m;
}

bool SpectralModel::e_minus_full() const {
  return std::all_of(diag_.begin(), diag_.end(),
                     [](double a) { return a < 0.0; });
}

double SpectralModel::factor_weight(int k, int letter) const {
  double w = std::fabs(diag_[letter - 1]);
  if (static_cast<int>(kernel_indices_.size()) >= k &&
      kernel_indices_[k - 1] == letter) {
    w += gamma_;
  }
  return w;
}

ThomaParams SpectralModel::induced_params() const {
  std::vector<double> alpha, beta;
  for (double a : diag_) {
    if (a > 0.0) alpha.push_back(a);
    if (a < 0.0) beta.push_back(-a);
  }
  std::sort(alpha.rbegin(), alpha.rend());
  std::sort(beta.rbegin(), beta.rend());
  std::optional<int> rho_index;
  if (q_index_) {
    double aq = diag_[*q_index_ - 1];
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == aq) {
        rho_index = static_cast<int>(i) + 1;
        break;
      }
    }
  }
  return ThomaParams::validate(std::move(alpha), std::move(beta), rho_index);
}

std::size_t SpectralModel::basis_size() const {
  std::size_t cap = max_basis();
  std::size_t size = 1;
  for (int k = 0; k < n_factors_; ++k) {
    size *= static_cast<std::size_t>(dim());
    if (size > cap) {
      throw Error(Errc::BoundExceeded,
                  "basis size d^n_factors exceeds ROOKCHAR_MAX_BASIS");
    }
  }
  return size;
}

RookElement generator_to_element(const Generator& g) {
  if (g.kind == Generator::Kind::EpsilonOne) return epsilon({1});
  return cycle({g.k, g.k + 1});
}

std::vector<Generator> generator_word(const RookElement& r) {
  std::vector<Generator> word;

  // eps_K part, K = killed inputs ascending; eps_j = (1 j) eps_1 (1 j).
  for (int j : r.killed_inputs()) {
    if (j == 1) {
      word.push_back({Generator::Kind::EpsilonOne, 0});
    } else {
      std::vector<Generator> conj;
      append_transposition_word(1, j, &conj);
      word.insert(word.end(), conj.begin(), conj.end());
      word.push_back({Generator::Kind::EpsilonOne, 0});
      word.insert(word.end(), conj.begin(), conj.end());
    }
  }

  // sigma: defined points as r, killed inputs onto the missing outputs in
  // increasing order.
  int n = r.max_point();
  if (n > 0) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) {
      auto out = r.apply(i + 1);
      p[i] = out ? *out : 0;
    }
    auto killed = r.killed_inputs();
    auto missing = r.missing_outputs();
    auto mit = missing.begin();
    for (int j : killed) p[j - 1] = *mit++;
    append_adjacent_word(std::move(p), &word);
  }
  return word;
}

std::optional<std::pair<std::vector<int>, double>> SignedPartialPerm::apply(
    const SpectralModel& m, std::vector<int> b) const {
  double w = 1.0;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    const Step& st = *it;
    switch (st.kind) {
      case Step::Kind::Zero:
        return std::nullopt;
      case Step::Kind::AdjSwap: {
        int& u = b[st.factor - 1];
        int& v = b[st.factor];
        if (m.is_negative(u) && m.is_negative(v)) w = -w;
        std::swap(u, v);
        break;
      }
      case Step::Kind::LongSwap: {
        int& u = b[st.factor - 1];
        int& v = b[st.factor + st.span - 1];
        bool nu = m.is_negative(u), nv = m.is_negative(v);
        if (nu && nv) {
          w = -w;
        } else if (nu != nv) {
          for (int j = st.factor + 1; j < st.factor + st.span; ++j) {
            if (m.is_negative(b[j - 1])) w = -w;
          }
        }
        std::swap(u, v);
        break;
      }
      case Step::Kind::ProjQ: {
        if (!m.q_index() || b[st.factor - 1] != *m.q_index()) {
          return std::nullopt;
        }
        break;
      }
      case Step::Kind::DiagA:
        w *= m.diag()[b[st.factor - 1] - 1];
        break;
    }
  }
  return std::make_pair(std::move(b), w);
}

SignedPartialPerm lift(const RookElement& r, const SpectralModel& m) {
  if (r.max_point() > m.n_factors()) {
    throw Error(Errc::SupportExceedsTruncation,
                "support exceeds truncation level " +
                    std::to_string(m.n_factors()));
  }
  SignedPartialPerm x(m.dim(), m.n_factors());
  if (r.rank_deficit() > 0 && !m.q_index()) {
    // T(eps) = 0 when q is absent, hence every killing element lifts to zero.
    x.word().push_back({SignedPartialPerm::Step::Kind::Zero, 0, 0});
    return x;
  }
  for (const Generator& g : generator_word(r)) {
    if (g.kind == Generator::Kind::EpsilonOne) {
      x.word().push_back({SignedPartialPerm::Step::Kind::ProjQ, 1, 0});
    } else {
      x.word().push_back({SignedPartialPerm::Step::Kind::AdjSwap, g.k, 0});
    }
  }
  return x;
}

SignedPartialPerm lift_long_transposition(const SpectralModel& m, int k,
                                          int span) {
  if (span < 1 || k + span > m.n_factors()) {
    throw Error(Errc::SupportExceedsTruncation,
                "transposition exceeds truncation level");
  }
  SignedPartialPerm x(m.dim(), m.n_factors());
  if (span == 1) {
    x.word().push_back({SignedPartialPerm::Step::Kind::AdjSwap, k, 0});
  } else {
    x.word().push_back({SignedPartialPerm::Step::Kind::LongSwap, k, span});
  }
  return x;
}

SignedPartialPerm product(const SignedPartialPerm& x,
                          const SignedPartialPerm& y) {
  SignedPartialPerm z(x.dim(), x.n_factors());
  z.word() = x.word();
  z.word().insert(z.word().end(), y.word().begin(), y.word().end());
  return z;
}

SignedPartialPerm adjoint(const SignedPartialPerm& x) {
  SignedPartialPerm z(x.dim(), x.n_factors());
  z.word().assign(x.word().rbegin(), x.word().rend());
  return z;
}

namespace {

bool next_tuple(std::vector<int>& b, int d) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < d) {
      ++b[i];
      for (std::size_t j = 0; j < i; ++j) b[j] = 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool structurally_equal(const SpectralModel& m, const SignedPartialPerm& x,
                        const SignedPartialPerm& y) {
  if (x.dim() != y.dim() || x.n_factors() != y.n_factors()) return false;
  m.basis_size();  // enforce the cap
  std::vector<int> b(m.n_factors(), 1);
  do {
    auto xr = x.apply(m, b);
    auto yr = y.apply(m, b);
    bool xz = !xr || xr->second == 0.0;
    bool yz = !yr || yr->second == 0.0;
    if (xz != yz) return false;
    if (!xz && (xr->first != yr->first || xr->second != yr->second)) {
      return false;
    }
  } while (next_tuple(b, m.dim()));
  return true;
}

double expectation(const SignedPartialPerm& x, const SpectralModel& m) {
  m.basis_size();
  double sum = 0.0;
  std::vector<int> b(m.n_factors(), 1);
  do {
    auto r = x.apply(m, b);
    if (!r || r->first != b) continue;
    double weight = r->second;
    for (int k = 1; k <= m.n_factors(); ++k) {
      weight *= m.factor_weight(k, b[k - 1]);
    }
    sum += weight;
  } while (next_tuple(b, m.dim()));
  return sum;
}

SignedPartialPerm limit_operator(const SpectralModel& m, int k) {
  if (k < 1 || k > m.n_factors()) {
    throw Error(Errc::SupportExceedsTruncation, "factor index out of range");
  }
  if (m.e_minus_full()) {
    throw Error(Errc::EMinusIsFull,
                "limit operator needs E_minus to be a proper subset");
  }
  SignedPartialPerm x(m.dim(), m.n_factors());
  x.word().push_back({SignedPartialPerm::Step::Kind::DiagA, k, 0});
  return x;
}

double oracle_character(const SpectralModel& m, const RookElement& r) {
  if (r.rank_deficit() > 0 && !m.q_index()) return 0.0;
  return expectation(lift(r, m), m);
}

}  // namespace rookchar

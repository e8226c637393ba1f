#include "rookchar/rook_core.hpp"

#include <algorithm>
#include <numeric>

namespace rookchar {

RookElement RookElement::unchecked(std::map<int, Image> m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second && *it->second == it->first) {
      it = m.erase(it);
    } else {
      ++it;
    }
  }
  RookElement r;
  r.map_ = std::move(m);
  return r;
}

RookElement RookElement::from_map(const std::vector<Entry>& pairs) {
  std::map<int, Image> m;
  std::set<int> outputs;
  for (const auto& [in, out] : pairs) {
    if (in <= 0 || (out && *out <= 0)) {
      throw Error(Errc::NonPositiveIndex, "indices must be positive integers");
    }
    if (!m.emplace(in, out).second) {
      throw Error(Errc::DuplicateInput,
                  "duplicate input " + std::to_string(in));
    }
    if (out && !outputs.insert(*out).second) {
      throw Error(Errc::DuplicateOutput,
                  "duplicate output " + std::to_string(*out));
    }
  }
  // Carrier closure: a non-fixed output must itself be a non-fixed input,
  // otherwise its column collides with the implicit fixed point.
  for (const auto& [in, out] : m) {
    if (!out || *out == in) continue;
    auto it = m.find(*out);
    if (it == m.end() || (it->second && *it->second == it->first)) {
      throw Error(Errc::DuplicateOutput,
                  "output " + std::to_string(*out) +
                      " collides with a fixed point");
    }
  }
  return unchecked(std::move(m));
}

std::set<int> RookElement::support() const {
  std::set<int> s;
  for (const auto& [in, out] : map_) s.insert(in);
  return s;
}

std::set<int> RookElement::killed_inputs() const {
  std::set<int> s;
  for (const auto& [in, out] : map_)
    if (!out) s.insert(in);
  return s;
}

std::set<int> RookElement::missing_outputs() const {
  std::set<int> s = support();
  for (const auto& [in, out] : map_)
    if (out) s.erase(*out);
  return s;
}

int RookElement::rank_deficit() const {
  int d = 0;
  for (const auto& [in, out] : map_)
    if (!out) ++d;
  return d;
}

int RookElement::max_point() const {
  return map_.empty() ? 0 : map_.rbegin()->first;
}

RookElement compose(const RookElement& r, const RookElement& s) {
  std::map<int, RookElement::Image> m;
  std::set<int> carrier;
  for (const auto& [in, out] : r.entries()) carrier.insert(in);
  for (const auto& [in, out] : s.entries()) carrier.insert(in);
  for (int i : carrier) {
    auto mid = r.apply(i);
    m.emplace(i, mid ? s.apply(*mid) : RookElement::Image{});
  }
  return RookElement::unchecked(std::move(m));
}

RookElement star(const RookElement& r) {
  std::map<int, RookElement::Image> m;
  for (const auto& [in, out] : r.entries())
    if (out) m.emplace(*out, in);
  for (int i : r.missing_outputs()) m.emplace(i, RookElement::Image{});
  return RookElement::unchecked(std::move(m));
}

RookElement epsilon(const std::set<int>& a) {
  std::map<int, RookElement::Image> m;
  for (int i : a) {
    if (i <= 0) {
      throw Error(Errc::NonPositiveIndex, "indices must be positive integers");
    }
    m.emplace(i, RookElement::Image{});
  }
  return RookElement::unchecked(std::move(m));
}

RookElement cycle(const std::vector<int>& points) {
  std::set<int> seen;
  for (int p : points) {
    if (p <= 0) {
      throw Error(Errc::NonPositiveIndex, "indices must be positive integers");
    }
    if (!seen.insert(p).second) {
      throw Error(Errc::DuplicatePoint,
                  "repeated point " + std::to_string(p) + " in cycle");
    }
  }
  if (points.size() < 2) return RookElement{};
  std::map<int, RookElement::Image> m;
  for (std::size_t i = 0; i < points.size(); ++i) {
    m.emplace(points[i], points[(i + 1) % points.size()]);
  }
  return RookElement::unchecked(std::move(m));
}

MatrixView as_matrix(const RookElement& r, int n) {
  if (r.max_point() > n) {
    throw Error(Errc::SupportExceedsDimension,
                "support exceeds matrix dimension " + std::to_string(n));
  }
  MatrixView m;
  m.n = n;
  m.bits.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i) {
    auto out = r.apply(i);
    if (out) m.at(i, *out) = 1;
  }
  return m;
}

MatrixView multiply(const MatrixView& a, const MatrixView& b) {
  MatrixView c;
  c.n = a.n;
  c.bits.assign(static_cast<std::size_t>(a.n) * a.n, 0);
  for (int i = 1; i <= a.n; ++i)
    for (int k = 1; k <= a.n; ++k) {
      int sum = 0;
      for (int j = 1; j <= a.n; ++j) sum += a.at(i, j) * b.at(j, k);
      c.at(i, k) = static_cast<std::uint8_t>(sum);
    }
  return c;
}

MatrixView transpose(const MatrixView& a) {
  MatrixView t;
  t.n = a.n;
  t.bits.assign(a.bits.size(), 0);
  for (int i = 1; i <= a.n; ++i)
    for (int j = 1; j <= a.n; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

namespace {

// All k-subsets of {1..n} in lexicographic order of their sorted lists.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  if (k == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<RookElement> enumerate_rn(int n, int bound) {
  if (n < 0 || n > bound) {
    throw Error(Errc::BoundExceeded,
                "enumeration bound " + std::to_string(bound) + " exceeded");
  }
  std::vector<RookElement> out;
  for (int deficit = 0; deficit <= n; ++deficit) {
    int k = n - deficit;
    auto domains = subsets(n, k);
    auto images = subsets(n, k);
    for (const auto& dom : domains) {
      std::set<int> killed;
      for (int i = 1; i <= n; ++i) killed.insert(i);
      for (int d : dom) killed.erase(d);
      for (const auto& img : images) {
        std::vector<int> perm(img);
        do {
          std::vector<RookElement::Entry> pairs;
          for (int i = 0; i < k; ++i) pairs.emplace_back(dom[i], perm[i]);
          for (int x : killed) pairs.emplace_back(x, RookElement::Image{});
          out.push_back(RookElement::from_map(pairs));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  return out;
}

}  // namespace rookchar

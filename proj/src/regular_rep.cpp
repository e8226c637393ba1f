#include "rookchar/regular_rep.hpp"

#include <algorithm>
#include <map>

namespace rookchar {

namespace {

// tt*, t*t and r*r are diagonal idempotents; the domain condition
// eps_B * eps_A = eps_B is the inclusion A <= B of their kill sets.
bool includes(const std::set<int>& big, const std::set<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::optional<RookElement> left_action(const RookElement& r,
                                       const RookElement& t) {
  // kill set of tt* = killed inputs of t; kill set of r*r = missing outputs
  // of r (killed inputs of r*).
  if (!includes(t.killed_inputs(), star(r).killed_inputs())) {
    return std::nullopt;
  }
  return compose(r, t);
}

std::optional<RookElement> right_action(const RookElement& r,
                                        const RookElement& t) {
  // kill set of t*t = missing outputs of t.
  if (!includes(t.missing_outputs(), star(r).killed_inputs())) {
    return std::nullopt;
  }
  return compose(t, star(r));
}

std::vector<std::vector<double>> rep_matrix(Side side, const RookElement& r,
                                            int n) {
  if (n > 4) {
    throw Error(Errc::BoundExceeded, "rep_matrix limited to n <= 4");
  }
  std::vector<RookElement> basis = enumerate_rn(n);
  std::map<RookElement, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  std::vector<std::vector<double>> m(
      basis.size(), std::vector<double>(basis.size(), 0.0));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto image = side == Side::Left ? left_action(r, basis[col])
                                    : right_action(r, basis[col]);
    if (image) m[index.at(*image)][col] = 1.0;
  }
  return m;
}

}  // namespace rookchar

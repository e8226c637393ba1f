#ifndef ROOKCHAR_ROOK_CORE_HPP_
#define ROOKCHAR_ROOK_CORE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rookchar/error.hpp"

namespace rookchar {

// A finitary partial injection on the positive integers: identity outside a
// finite carrier, and inside the carrier either mapped injectively or killed
// (no image).  Canonical form never stores fixed points, so structural
// equality is semantic equality.
class RookElement {
 public:
  // nullopt = killed input.
  using Image = std::optional<int>;
  using Entry = std::pair<int, Image>;

  RookElement() = default;  // identity

  // Canonical constructor.  Inputs must be distinct, non-killed outputs
  // distinct and closed under the carrier (an output that is neither its own
  // input nor some listed input would collide with an implicit fixed point).
  static RookElement from_map(const std::vector<Entry>& pairs);

  // Identity outside the carrier.
  Image apply(int i) const {
    auto it = map_.find(i);
    return it == map_.end() ? Image(i) : it->second;
  }

  const std::map<int, Image>& entries() const { return map_; }
  bool is_identity() const { return map_.empty(); }

  std::set<int> support() const;
  std::set<int> killed_inputs() const;
  std::set<int> missing_outputs() const;
  int rank_deficit() const;
  int max_point() const;  // 0 for the identity

  bool operator==(const RookElement& o) const { return map_ == o.map_; }
  bool operator<(const RookElement& o) const { return map_ < o.map_; }

  // Canonicalizing constructor for internal use: drops fixed points, no
  // validation.
  static RookElement unchecked(std::map<int, Image> m);

 private:
  std::map<int, Image> map_;
};

// compose(r, s)(i) = s(r(i)); matches the matrix product r * s with
// row = input, so as_matrix is a homomorphism.
RookElement compose(const RookElement& r, const RookElement& s);

// Matrix transpose, i.e. the inverse partial map.
RookElement star(const RookElement& r);

// Diagonal idempotent killing exactly the set A.
RookElement epsilon(const std::set<int>& a);

// Cyclic permutation of the given distinct points (length 1 -> identity).
RookElement cycle(const std::vector<int>& points);

inline std::set<int> support(const RookElement& r) { return r.support(); }
inline int rank_deficit(const RookElement& r) { return r.rank_deficit(); }

// Finite 0-1 matrix truncation; at most one 1 per row and column.
struct MatrixView {
  int n = 0;
  std::vector<std::uint8_t> bits;  // row-major, n*n

  std::uint8_t at(int i, int j) const { return bits[(i - 1) * n + (j - 1)]; }
  std::uint8_t& at(int i, int j) { return bits[(i - 1) * n + (j - 1)]; }

  bool operator==(const MatrixView&) const = default;
};

MatrixView as_matrix(const RookElement& r, int n);
MatrixView multiply(const MatrixView& a, const MatrixView& b);
MatrixView transpose(const MatrixView& a);

// All of R_n, each element once, ordered by rank deficit and then
// lexicographically on (domain subset, image subset, bijection).
std::vector<RookElement> enumerate_rn(int n, int bound = 6);

}  // namespace rookchar

#endif  // ROOKCHAR_ROOK_CORE_HPP_

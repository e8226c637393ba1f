#ifndef ROOKCHAR_TESTS_TEST_UTIL_HPP_
#define ROOKCHAR_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <random>
#include <vector>

#include "rookchar/rook_core.hpp"

namespace rookchar::testing {

// Uniform-ish random element of R_n: random domain subset, random image
// subset of the same size, random bijection.
inline RookElement random_element(std::mt19937_64& rng, int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;

  std::uniform_int_distribution<int> size_dist(0, n);
  int k = size_dist(rng);
  std::vector<int> dom = all, img = all;
  std::shuffle(dom.begin(), dom.end(), rng);
  std::shuffle(img.begin(), img.end(), rng);
  dom.resize(k);
  img.resize(k);
  std::sort(dom.begin(), dom.end());

  std::vector<RookElement::Entry> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(dom[i], img[i]);
  for (int x : all) {
    if (std::find(dom.begin(), dom.end(), x) == dom.end()) {
      pairs.emplace_back(x, RookElement::Image{});
    }
  }
  return RookElement::from_map(pairs);
}

}  // namespace rookchar::testing

#endif  // ROOKCHAR_TESTS_TEST_UTIL_HPP_

#include "rookchar/quasicycle.hpp"

#include <algorithm>
#include <random>

namespace rookchar {

std::vector<Quasicycle> decompose(const RookElement& r) {
  std::set<int> carrier = r.support();
  std::set<int> images;
  for (const auto& [in, out] : r.entries())
    if (out) images.insert(*out);

  std::vector<Quasicycle> out;
  std::set<int> visited;

  // Maximal paths: start at carrier points without preimage, walk to a kill.
  for (int start : carrier) {
    if (images.count(start)) continue;
    std::vector<int> pts;
    int cur = start;
    while (true) {
      pts.push_back(cur);
      visited.insert(cur);
      auto next = r.apply(cur);
      if (!next) break;
      cur = *next;
    }
    out.push_back({Quasicycle::Kind::Chain, std::move(pts)});
  }

  // What remains are in/out-complete orbits, i.e. pure cycles.
  for (int start : carrier) {
    if (visited.count(start)) continue;
    std::vector<int> pts;
    int cur = start;  // least unvisited point of its orbit
    do {
      pts.push_back(cur);
      visited.insert(cur);
      cur = *r.apply(cur);
    } while (cur != start);
    out.push_back({Quasicycle::Kind::PureCycle, std::move(pts)});
  }

  std::sort(out.begin(), out.end(), [](const Quasicycle& a, const Quasicycle& b) {
    return *std::min_element(a.points.begin(), a.points.end()) <
           *std::min_element(b.points.begin(), b.points.end());
  });
  return out;
}

RookElement to_element(const Quasicycle& q) {
  if (q.kind == Quasicycle::Kind::PureCycle) return cycle(q.points);
  std::vector<RookElement::Entry> pairs;
  for (std::size_t i = 0; i + 1 < q.points.size(); ++i) {
    pairs.emplace_back(q.points[i], q.points[i + 1]);
  }
  pairs.emplace_back(q.points.back(), RookElement::Image{});
  return RookElement::from_map(pairs);
}

std::vector<RookElement> random_regrouping(const std::vector<Quasicycle>& qs,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<const Quasicycle*> chains;
  std::vector<RookElement> out;
  for (const Quasicycle& q : qs) {
    if (q.kind == Quasicycle::Kind::Chain) {
      chains.push_back(&q);
    } else {
      out.push_back(to_element(q));
    }
  }
  std::shuffle(chains.begin(), chains.end(), rng);

  // Merge a group of chains into one factor: the cycle running through all
  // their points in order, with the killed endpoint of each chain killed.
  std::size_t i = 0;
  while (i < chains.size()) {
    std::size_t remaining = chains.size() - i;
    std::uniform_int_distribution<std::size_t> dist(1, remaining);
    std::size_t group = dist(rng);
    std::vector<int> pts;
    std::set<int> kills;
    for (std::size_t j = i; j < i + group; ++j) {
      pts.insert(pts.end(), chains[j]->points.begin(), chains[j]->points.end());
      kills.insert(chains[j]->points.back());
    }
    out.push_back(compose(epsilon(kills), cycle(pts)));
    i += group;
  }
  return out;
}

}  // namespace rookchar

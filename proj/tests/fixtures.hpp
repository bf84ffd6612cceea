#pragma once

#include <random>
#include <string>
#include <vector>

#include "mhproj/grading.hpp"

namespace fixtures {

using mhproj::Int;
using mhproj::IntVector;

inline mhproj::RingSpec make_spec(std::vector<std::string> names, const std::vector<IntVector>& free, std::size_t s,
                                  std::vector<Int> orders = {}, const std::vector<IntVector>& tor = {}) {
  std::vector<mhproj::Multidegree> degs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    mhproj::Multidegree d;
    d.free = i < free.size() ? free[i] : IntVector{};
    d.torsion = i < tor.size() ? tor[i] : IntVector{};
    degs.push_back(d);
  }
  return mhproj::RingSpec(std::move(names), std::move(degs), mhproj::GradingGroup{s, std::move(orders)});
}

inline mhproj::RingSpec doubled_line() { return make_spec({"X", "Y"}, {{1}, {-1}}, 1); }
inline mhproj::RingSpec p2() { return make_spec({"x", "y", "z"}, {{1}, {1}, {1}}, 1); }
inline mhproj::RingSpec p112() { return make_spec({"x", "y", "z"}, {{1}, {1}, {2}}, 1); }
inline mhproj::RingSpec p1xp1() { return make_spec({"x1", "x2", "y1", "y2"}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}, 2); }
inline mhproj::RingSpec empty_proj() { return make_spec({"A", "B"}, {{1, 0}, {2, 0}}, 2); }

inline mhproj::RingSpec z2example() {
  std::vector<std::string> names;
  std::vector<IntVector> degs;
  for (int i = 1; i <= 4; ++i) names.push_back("X" + std::to_string(i)), degs.push_back({1, 0});
  for (int i = 1; i <= 4; ++i) names.push_back("Y" + std::to_string(i)), degs.push_back({0, 1});
  names.push_back("Z");
  degs.push_back({1, 1});
  return make_spec(names, degs, 2);
}

/// X_0..X_m of degree 1 and T_1..T_r of degree -1.
inline mhproj::RingSpec determinantal(int m, int r) {
  std::vector<std::string> names;
  std::vector<IntVector> degs;
  for (int i = 0; i <= m; ++i) names.push_back("X" + std::to_string(i)), degs.push_back({1});
  for (int j = 1; j <= r; ++j) names.push_back("T" + std::to_string(j)), degs.push_back({-1});
  return make_spec(names, degs, 1);
}

/// X_0..X_m and T of degree 1, S of degree -1.
inline mhproj::RingSpec projection(int m) {
  std::vector<std::string> names;
  std::vector<IntVector> degs;
  for (int i = 0; i <= m; ++i) names.push_back("X" + std::to_string(i)), degs.push_back({1});
  names.push_back("S"), degs.push_back({-1});
  names.push_back("T"), degs.push_back({1});
  return make_spec(names, degs, 1);
}

inline Int uniform(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

/// Random spec with k variables, free rank s, entries in [lo, hi], optional torsion.
inline mhproj::RingSpec random_spec(std::mt19937_64& rng, std::size_t k, std::size_t s, Int lo, Int hi,
                                    std::vector<Int> orders = {}) {
  std::vector<std::string> names;
  std::vector<IntVector> free, tor;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("T" + std::to_string(i));
    IntVector d(s);
    for (auto& x : d) x = uniform(rng, lo, hi);
    free.push_back(d);
    IntVector t;
    for (Int m : orders) t.push_back(uniform(rng, 0, m - 1));
    tor.push_back(t);
  }
  return make_spec(names, free, s, orders, tor);
}

inline std::vector<std::size_t> mask_indices(std::uint32_t mask, std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace fixtures

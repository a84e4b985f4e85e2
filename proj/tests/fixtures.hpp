#pragma once

#include "fintop/spaces.hpp"

namespace fixtures {

using fintop::FinSpace;
using fintop::Preorder;

/// Sierpinski space on {a, b} with {b} open; b <= a.
inline FinSpace sierpinski() { return fintop::build_space({"a", "b"}, {{}, {"b"}, {"a", "b"}}); }

inline FinSpace discrete2() { return fintop::build_space({"a", "b"}, {{}, {"a"}, {"b"}, {"a", "b"}}); }

inline FinSpace indiscrete2() { return fintop::build_space({"a", "b"}, {{}, {"a", "b"}}); }

inline FinSpace point() { return fintop::build_space({"*"}, {{}, {"*"}}); }

/// bot <= s, bot <= t.
inline FinSpace v3() { return fintop::alexandrov(Preorder::from_pairs(3, {{0, 1}, {0, 2}}), {"bot", "s", "t"}); }

/// Diamond lattice: bot < a, b, c < top.
inline FinSpace m3() {
  return fintop::alexandrov(Preorder::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}),
                            {"bot", "a", "b", "c", "top"});
}

/// Pentagon: bot < a < b < top, bot < c < top.
inline FinSpace n5() {
  return fintop::alexandrov(Preorder::from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}),
                            {"bot", "a", "b", "c", "top"});
}

/// Chain 0 < 1 < ... < n-1.
inline FinSpace chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return fintop::alexandrov(Preorder::from_pairs(n, pairs));
}

inline fintop::PointSet set(const FinSpace& x, std::initializer_list<const char*> names) {
  fintop::PointSet s;
  for (auto name : names)
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x.label(i) == name) s.insert(i);
  return s;
}

inline std::size_t pt(const FinSpace& x, const char* name) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.label(i) == name) return i;
  throw std::logic_error(std::string("no point ") + name);
}

}  // namespace fixtures

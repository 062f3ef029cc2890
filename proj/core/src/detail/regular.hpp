#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "dforge/perm.hpp"

namespace dforge::detail {

struct RegularScratch {
  explicit RegularScratch(std::size_t n) : label(n), order(n), ref(2 * n) {}
  std::vector<Point> label, order, ref;
};

/// A transitive <x, y> is regular iff relabeling by BFS from every root gives
/// the same pair of image tables (each root is then the image of 0 under an
/// automorphism, so Aut is transitive and has order n).
inline bool is_regular_raw(const Point *x, const Point *y, std::size_t n,
                           RegularScratch &s) {
  constexpr Point kUnset = ~Point{0};
  for (Point root = 0; root < n; ++root) {
    std::fill(s.label.begin(), s.label.end(), kUnset);
    s.label[root] = 0;
    s.order[0] = root;
    std::size_t assigned = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Point e = s.order[i];
      for (const Point *gen : {x, y}) {
        const Point next = gen[e];
        if (s.label[next] == kUnset) {
          s.label[next] = static_cast<Point>(assigned);
          s.order[assigned++] = next;
        }
      }
      const Point lx = s.label[x[e]], ly = s.label[y[e]];
      if (root == 0) {
        s.ref[2 * i] = lx;
        s.ref[2 * i + 1] = ly;
      } else if (s.ref[2 * i] != lx || s.ref[2 * i + 1] != ly) {
        return false;
      }
    }
  }
  return true;
}

} // namespace dforge::detail

#pragma once

// Deliberately naive reference implementations. They work on plain image
// vectors and share no code with the library beyond the Permutation type at
// the boundary.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "dforge/perm.hpp"

namespace oracle {

using Img = std::vector<int>;

inline Img images(const dforge::Permutation &p) { return {p.images().begin(), p.images().end()}; }

inline dforge::Permutation perm(const Img &v) {
  return dforge::Permutation::from_images({v.begin(), v.end()});
}

inline Img identity(int n) {
  Img v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// (a b)(e) = a(b(e))
inline Img mul(const Img &a, const Img &b) {
  Img r(a.size());
  for (std::size_t e = 0; e < a.size(); ++e)
    r[e] = a[b[e]];
  return r;
}

inline Img inv(const Img &a) {
  Img r(a.size());
  for (std::size_t e = 0; e < a.size(); ++e)
    r[a[e]] = static_cast<int>(e);
  return r;
}

inline Img sigma(int n) {
  Img v(n);
  for (int e = 0; e < n; ++e)
    v[e] = (e + 1) % n;
  return v;
}

inline std::vector<int> cycle_lengths(const Img &a) {
  std::vector<int> out;
  std::vector<bool> seen(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (seen[s])
      continue;
    int len = 0;
    for (std::size_t e = s; !seen[e]; e = a[e]) {
      seen[e] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

template <typename F> void for_each_perm(int n, F f) {
  Img v = identity(n);
  do {
    f(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

inline std::vector<Img> of_type(int n, const std::vector<int> &type) {
  std::vector<Img> out;
  for_each_perm(n, [&](const Img &v) {
    if (cycle_lengths(v) == type)
      out.push_back(v);
  });
  return out;
}

/// |<gens>| by closing under right multiplication. Small groups only.
inline std::uint64_t closure_order(const std::vector<Img> &gens) {
  std::set<Img> seen{identity(static_cast<int>(gens.front().size()))};
  std::vector<Img> queue(seen.begin(), seen.end());
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (const auto &g : gens) {
      Img next = mul(queue[h], g);
      if (seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  return seen.size();
}

inline bool transitive(const std::vector<Img> &gens) {
  const int n = static_cast<int>(gens.front().size());
  std::vector<bool> seen(n);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int e = stack.back();
    stack.pop_back();
    for (const auto &g : gens) {
      if (!seen[g[e]]) {
        seen[g[e]] = true;
        ++count;
        stack.push_back(g[e]);
      }
    }
  }
  return count == n;
}

/// Every g in S_n commuting with all gens.
inline std::vector<Img> centralizer(const std::vector<Img> &gens) {
  std::vector<Img> out;
  for_each_perm(static_cast<int>(gens.front().size()), [&](const Img &g) {
    for (const auto &s : gens) {
      if (mul(g, s) != mul(s, g))
        return;
    }
    out.push_back(g);
  });
  return out;
}

inline bool isomorphic(const Img &x1, const Img &y1, const Img &x2, const Img &y2) {
  bool found = false;
  for_each_perm(static_cast<int>(x1.size()), [&](const Img &g) {
    if (found)
      return;
    const Img gi = inv(g);
    found = mul(mul(g, x1), gi) == x2 && mul(mul(g, y1), gi) == y2;
  });
  return found;
}

/// Number of isomorphism classes of dessins with the passport: every pair
/// (x, y) of the right types with transitive group, modulo simultaneous
/// conjugation (x is fixed; classes are orbits of C(x) on the valid y).
inline std::size_t class_count(int n, const std::vector<int> &black, const std::vector<int> &white,
                               const std::vector<int> &face) {
  const auto xs = of_type(n, black);
  if (xs.empty())
    return 0;
  const Img x = xs.front();
  std::vector<Img> ys;
  for (const auto &y : of_type(n, white)) {
    if (cycle_lengths(inv(mul(x, y))) == face && transitive({x, y}))
      ys.push_back(y);
  }
  const auto cx = centralizer({x});
  std::set<Img> done;
  std::size_t classes = 0;
  for (const auto &y : ys) {
    if (done.count(y))
      continue;
    ++classes;
    for (const auto &g : cx)
      done.insert(mul(mul(g, y), inv(g)));
  }
  return classes;
}

/// Pairs (s, r) of the given types with s r equal to the standard n-cycle.
inline std::uint64_t connection_count(int n, const std::vector<int> &lambda,
                                      const std::vector<int> &mu) {
  const Img pi = sigma(n);
  std::uint64_t count = 0;
  for (const auto &s : of_type(n, lambda)) {
    if (cycle_lengths(mul(inv(s), pi)) == mu)
      ++count;
  }
  return count;
}

/// y maps every residue class {e : (e+1) mod m == r} onto some residue class.
inline bool residue_classes_preserved(const Img &y, int m) {
  const int n = static_cast<int>(y.size());
  std::vector<std::set<int>> cls(m);
  for (int e = 0; e < n; ++e)
    cls[(e + 1) % m].insert(e);
  for (const auto &c : cls) {
    std::set<int> image;
    for (int e : c)
      image.insert(y[e]);
    if (std::find(cls.begin(), cls.end(), image) == cls.end())
      return false;
  }
  return true;
}

/// Primitive iff no subset S containing 0 with 1 < |S| < n is a block.
inline bool primitive(const std::vector<Img> &gens) {
  const int n = static_cast<int>(gens.front().size());
  if (!transitive(gens))
    return false;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<bool> in(n);
    in[0] = true;
    int size = 1;
    for (int e = 1; e < n; ++e) {
      if (mask >> (e - 1) & 1) {
        in[e] = true;
        ++size;
      }
    }
    if (size == n || n % size != 0)
      continue;
    // S is a block iff its images under the group are pairwise equal or disjoint.
    std::uint64_t s = 0;
    for (int e = 0; e < n; ++e)
      s |= std::uint64_t{in[e]} << e;
    std::set<std::uint64_t> seen{s};
    std::vector<std::uint64_t> queue{s};
    bool block = true;
    for (std::size_t h = 0; h < queue.size() && block; ++h) {
      for (const auto &g : gens) {
        std::uint64_t t = 0;
        for (int e = 0; e < n; ++e)
          if (queue[h] >> e & 1)
            t |= std::uint64_t{1} << g[e];
        if (!seen.insert(t).second)
          continue;
        for (std::uint64_t u : queue)
          if ((u & t) != 0 && u != t)
            block = false;
        queue.push_back(t);
      }
    }
    if (block)
      return false;
  }
  return true;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

} // namespace oracle

#include <algorithm>
#include <numeric>

#include "dforge/error.hpp"
#include "dforge/group.hpp"

namespace dforge {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Point{0});
  }
  Point find(Point a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  // Keeps the smaller root so classes are labelled by their least point.
  void unite(Point a, Point b) {
    if (a > b)
      std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<Point> parent_;
};

} // namespace

BlockSystem minimal_block_system(std::span<const Permutation> gens, Point a, Point b) {
  if (gens.empty())
    throw InvalidInput("minimal_block_system needs generators");
  const std::size_t n = gens.front().degree();
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> pending;
  if (uf.find(a) != uf.find(b)) {
    uf.unite(uf.find(a), uf.find(b));
    pending.emplace_back(a, b);
  }
  while (!pending.empty()) {
    auto [u, v] = pending.back();
    pending.pop_back();
    for (const auto &g : gens) {
      const Point ru = uf.find(g(u)), rv = uf.find(g(v));
      if (ru != rv) {
        uf.unite(ru, rv);
        pending.emplace_back(ru, rv);
      }
    }
  }

  std::vector<std::vector<Point>> by_root(n);
  for (Point e = 0; e < n; ++e)
    by_root[uf.find(e)].push_back(e);
  BlockSystem system;
  for (auto &block : by_root) {
    if (!block.empty())
      system.blocks.push_back(std::move(block));
  }
  return system;
}

bool is_primitive_general(std::span<const Permutation> gens) {
  if (gens.empty())
    throw InvalidInput("is_primitive_general needs generators");
  const std::size_t n = gens.front().degree();
  if (!is_transitive(gens, n))
    return false;
  for (Point e = 1; e < n; ++e) {
    if (minimal_block_system(gens, 0, e).block_count() > 1)
      return false;
  }
  return true;
}

std::vector<std::size_t> block_divisors(std::span<const Permutation> gens) {
  if (gens.empty())
    return {};
  const std::size_t n = gens.front().degree();
  std::vector<std::size_t> out;
  for (Point e = 1; e < n; ++e) {
    const std::size_t m = minimal_block_system(gens, 0, e).block_count();
    if (m > 1)
      out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> proper_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t m = 2; m < n; ++m) {
    if (n % m == 0)
      out.push_back(m);
  }
  return out;
}

bool residue_blocks_preserved(const Permutation &y, std::size_t m) {
  const std::size_t n = y.degree();
  if (m < 2 || m >= n || n % m != 0)
    throw InvalidInput("residue blocks need m | n and 2 <= m < n (m = " + std::to_string(m) +
                       ", n = " + std::to_string(n) + ")");
  // 1-based point p lies in class p mod m; 0-based e in class (e + 1) mod m.
  constexpr std::size_t kUnset = ~std::size_t{0};
  std::vector<std::size_t> image_class(m, kUnset);
  for (Point e = 0; e < n; ++e) {
    const std::size_t from = (e + 1) % m, to = (y(e) + 1) % m;
    if (image_class[from] == kUnset)
      image_class[from] = to;
    else if (image_class[from] != to)
      return false;
  }
  return true;
}

bool residue_blocks_preserved(const Dessin &d, std::size_t m) {
  if (d.x() != Permutation::standard_cycle(d.degree()))
    throw InvalidInput("residue block test requires x = (1 2 ... n)");
  return residue_blocks_preserved(d.y(), m);
}

bool is_primitive(const Dessin &d) {
  const std::size_t n = d.degree();
  if (d.x() == Permutation::standard_cycle(n)) {
    for (std::size_t m : proper_divisors(n)) {
      if (residue_blocks_preserved(d.y(), m))
        return false;
    }
    return true;
  }
  const std::array<Permutation, 2> gens{d.x(), d.y()};
  return is_primitive_general(gens);
}

namespace {

bool is_composite(std::size_t n) {
  if (n < 4)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return true;
  }
  return false;
}

} // namespace

bool primitive_implies_trivial_check(const Dessin &d) {
  if (!is_composite(d.degree()) || !is_primitive(d))
    return true;
  return automorphism_group(d).size() == 1;
}

} // namespace dforge

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "dforge/dessin.hpp"
#include "dforge/perm.hpp"

namespace dforge {

/// Stabilizer chain (base and strong generating set) of a permutation group,
/// built by the deterministic Schreier-Sims algorithm. Base points are taken
/// in increasing order: point 0 first, then the smallest point moved by each
/// sifted residue.
class PermGroup {
public:
  /// The group generated by `gens` (all of the same, positive degree).
  explicit PermGroup(std::vector<Permutation> gens);

  std::size_t degree() const { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }
  std::vector<Point> base() const;
  std::size_t levels() const { return levels_.size(); }

  /// Exact order: the product of the fundamental orbit lengths.
  const mpz_class &order() const { return order_; }

  /// Exact membership test by sifting.
  bool contains(const Permutation &g) const;

  /// Orbit of the i-th base point under the i-th stabilizer.
  std::vector<Point> fundamental_orbit(std::size_t level) const;

  /// Generators of the pointwise stabilizer of base[0..level-1]. For
  /// level = 1 and base[0] = 0 this is the stabilizer of point 0.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

private:
  struct Level {
    Point base_point;
    std::vector<Permutation> strong;     // generators of this level's group
    std::vector<std::optional<Permutation>> transversal; // u with u(base) = pt
    std::vector<Point> orbit;
  };

  void add_level(Point base_point);
  void rebuild_orbit(Level &level) const;
  /// Sifts g from `from`; returns the residue and the level it stopped at
  /// (levels_.size() when it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void schreier_sims();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  mpz_class order_ = 1;
};

/// Orbit of `point` under the group generated by `gens`, in BFS order.
std::vector<Point> orbit(std::span<const Permutation> gens, Point point);

/// |<gens>| via a stabilizer chain.
mpz_class group_order(std::span<const Permutation> gens);

/// |<x, y>| == n. Uses a closure that stops as soon as more than n elements
/// have been produced.
bool is_regular(const Dessin &d);

/// The automorphism group: the centralizer of <x, y> in S_n. Candidates for
/// the image of point 0 are the fixed points of Stab(0); each defines at most
/// one centralizing permutation through the orbit transversal. The identity
/// is always first; the result is sorted.
std::vector<Permutation> automorphism_group(const Dessin &d);

/// A partition of {0..n-1} into blocks of equal size.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;

  std::size_t block_count() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

/// Smallest block system of the transitive group <gens> in which a and b lie in
/// the same block (union-find closure).
BlockSystem minimal_block_system(std::span<const Permutation> gens, Point a, Point b);

/// True for a transitive group with no block system other than the trivial ones.
bool is_primitive_general(std::span<const Permutation> gens);

/// Block counts m (1 < m < n) of the block systems generated by pairs {0, e}.
std::vector<std::size_t> block_divisors(std::span<const Permutation> gens);

/// Whether y maps every residue class mod m of {1..n} onto a residue class mod m.
/// Requires m | n and 2 <= m < n.
bool residue_blocks_preserved(const Permutation &y, std::size_t m);

/// Dessin form; requires x to be the standard n-cycle.
bool residue_blocks_preserved(const Dessin &d, std::size_t m);

/// Residue-class test over every divisor when x = (1 2 ... n), general
/// block closure otherwise.
bool is_primitive(const Dessin &d);

/// (n composite and primitive) implies |Aut| = 1.
bool primitive_implies_trivial_check(const Dessin &d);

/// Proper divisors m of n with 2 <= m < n, ascending.
std::vector<std::size_t> proper_divisors(std::size_t n);

} // namespace dforge

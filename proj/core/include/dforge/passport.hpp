#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dforge/perm.hpp"

namespace dforge {

/// Cycle types of (x, y, z): black vertex valencies, white vertex valencies,
/// face valencies. All three partition the same n.
class Passport {
public:
  /// Throws InvalidPassport unless the sizes agree and the genus is a
  /// non-negative integer.
  Passport(CycleType black, CycleType white, CycleType face);

  /// Accepts "[6,3^2,6]" and "[4 1, 3 1 1, 4 1]".
  static Passport parse(std::string_view text);

  std::size_t degree() const { return black_.size(); }
  const CycleType &black() const { return black_; }
  const CycleType &white() const { return white_; }
  const CycleType &face() const { return face_; }
  const CycleType &at(std::size_t role) const;

  std::size_t genus() const { return genus_; }
  bool is_uniform() const;
  /// Some coordinate is the single part (n).
  bool is_tree() const;

  /// "[6,3^2,6]".
  std::string to_string() const;

  friend bool operator==(const Passport &, const Passport &) = default;
  friend auto operator<=>(const Passport &, const Passport &) = default;

private:
  CycleType black_, white_, face_;
  std::size_t genus_ = 0;
};

/// (n - (l0 + l1 + l_inf)) / 2 + 1 for three partitions of n; throws
/// InvalidPassport for odd parity or negative genus.
std::size_t genus(const CycleType &black, const CycleType &white, const CycleType &face);
inline std::size_t genus(const Passport &p) { return p.genus(); }

inline bool is_uniform(const Passport &p) { return p.is_uniform(); }

struct UniformPassport {
  Passport passport;
  std::size_t genus;
};

/// Every [a^p, b^q, c^r] with pa = qb = rc = n and integral genus >= 0, one
/// representative per role-permutation class written with c >= a >= b.
/// Sorted by genus, then by (a, b, c).
std::vector<UniformPassport> uniform_passports(std::size_t n);

/// Every passport of degree n (triples of partitions with integral genus
/// >= 0), in lexicographic order of the three partitions.
std::vector<Passport> all_passports(std::size_t n);

/// One passport per orbit under permuting the three roles (all six role
/// permutations of a dessin are dessins with the same monodromy group).
/// Roles are arranged for enumeration speed: the largest conjugacy class
/// plays x, the smallest plays y.
std::vector<Passport> passports_up_to_roles(std::size_t n);

/// All partitions of n, each sorted descending, in descending lexicographic order.
std::vector<CycleType> partitions_of(std::size_t n);

} // namespace dforge

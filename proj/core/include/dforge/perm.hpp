#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dforge {

/// A point of {0, ..., n-1}. Library code is 0-based; every textual and JSON
/// format is 1-based, matching the usual edge labels 1..n.
using Point = std::uint32_t;

/// Multiset of cycle lengths, stored sorted descending.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> parts);
  CycleType(std::initializer_list<std::size_t> parts);

  /// q parts each equal to b.
  static CycleType uniform(std::size_t b, std::size_t q);

  /// Parses "4 1", "3^2", "2^2 1", "(4,2)" or "4,2".
  static CycleType parse(std::string_view text);

  std::span<const std::size_t> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::size_t size() const; ///< sum of parts
  bool is_uniform() const;
  /// Largest part; 0 for the empty partition.
  std::size_t largest() const { return parts_.empty() ? 0 : parts_.front(); }
  std::size_t multiplicity(std::size_t part) const;

  /// Exponent notation, e.g. "6", "3^2", "4 1", "2^2 1".
  std::string to_string() const;

  friend bool operator==(const CycleType &, const CycleType &) = default;
  friend auto operator<=>(const CycleType &, const CycleType &) = default;

private:
  std::vector<std::size_t> parts_;
};

/// A bijection of {0, ..., n-1}. Products follow the left action:
/// (p * q)(e) = p(q(e)), so the right factor acts first.
class Permutation;
Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);
Permutation conjugate(const Permutation &p, const Permutation &g);

class Permutation {
public:
  Permutation() = default;
  /// The identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Validates that `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);
  /// The standard n-cycle (1 2 ... n).
  static Permutation standard_cycle(std::size_t degree);
  /// Builds a permutation from disjoint 0-based cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point e) const { return images_[e]; }
  Point operator[](Point e) const { return images_[e]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  /// Disjoint cycles including fixed points, each starting at its smallest
  /// point, ordered by that smallest point.
  std::vector<std::vector<Point>> cycles() const;
  CycleType cycle_type() const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  std::size_t support_size() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  friend Permutation compose(const Permutation &, const Permutation &);
  friend Permutation inverse(const Permutation &);
  friend Permutation conjugate(const Permutation &, const Permutation &);

  explicit Permutation(std::vector<Point> images, bool /*trusted*/)
      : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// (p q)(e) = p(q(e)).
Permutation compose(const Permutation &p, const Permutation &q);
inline Permutation operator*(const Permutation &p, const Permutation &q) {
  return compose(p, q);
}
Permutation inverse(const Permutation &p);
/// p^k for any integer k; negative exponents invert.
Permutation power(const Permutation &p, long long k);
/// g p g^-1.
Permutation conjugate(const Permutation &p, const Permutation &g);

/// Disjoint-cycle notation with 1-based points, e.g. "(1 4)(2 5)(3 7)(6 8)".
/// Fixed points may be omitted; "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// Canonical cycle notation: cycles ordered by smallest point, each rotated to
/// start there, fixed points omitted, identity printed as "()".
std::string print_cycles(const Permutation &p);

/// Canonical permutation of a cycle type: cycles in the stored (descending)
/// order laid out on consecutive points, e.g. (4,1) -> (1 2 3 4).
Permutation canonical_of_cycle_type(const CycleType &ct);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace dforge

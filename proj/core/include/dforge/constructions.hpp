#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dforge/dessin.hpp"
#include "dforge/passport.hpp"

namespace dforge {

/// Target passport [a^p, b^q, n] with pa = qb = n.
struct TreeSpec {
  std::size_t a = 0, p = 0, b = 0, q = 0;

  std::size_t degree() const { return a * p; }
  /// Throws InvalidPassport when the genus is not integral.
  Passport passport() const;
  std::string to_string() const; ///< "[a^p,b^q,n]", valid or not
};

/// x = s^(lp), y = s^(mq) with s = (1 2 ... n), gcd(a, l) = gcd(b, m) = 1 and
/// lp + mq = 1 (mod n). Such (l, m) exist iff gcd(p, q) = 1 and [a^p, b^q, n]
/// is a passport; otherwise empty. Throws InvalidInput if pa != qb.
std::optional<Dessin> regular_tree_dessin(const TreeSpec &spec);

/// x = (1 2 ... n), y = (2 4 ... n-1 n n-2 ... 3 1); passport [n, n, n] and
/// monodromy group A_n. n odd, n >= 5.
Dessin alternating_witness(std::size_t n);

enum class Genus0Kind { Star, Polygon };

/// Star: x = (1 2 ... n), y = identity, passport [n, 1^n, n].
/// Polygon (n = 2m): x = (1 2)(3 4)..., y = (2 3)(4 5)...(2m 1), passport [2^m, 2^m, m^2].
Dessin genus0_dessin(Genus0Kind kind, std::size_t n);

/// Exhaustive: does some dessin with this uniform passport have |<x, y>| = n?
/// Throws InvalidInput for non-uniform passports and InfeasibleSize above
/// the guard.
bool regular_exists(const Passport &p, const EnumerateOptions &options = {});

} // namespace dforge

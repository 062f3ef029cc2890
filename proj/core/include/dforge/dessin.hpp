#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dforge/passport.hpp"
#include "dforge/perm.hpp"

namespace dforge {

/// True when the group generated by `gens` has a single orbit on {0..n-1}.
bool is_transitive(std::span<const Permutation> gens, std::size_t n);

/// A dessin d'enfant as a pair (x, y) of permutations of the edges with
/// <x, y> transitive. z = (xy)^-1 is derived.
class Dessin {
public:
  /// Throws InvalidInput for mismatched degrees or an intransitive pair.
  Dessin(Permutation x, Permutation y);

  std::size_t degree() const { return x_.degree(); }
  const Permutation &x() const { return x_; }
  const Permutation &y() const { return y_; }
  Permutation z() const { return inverse(compose(x_, y_)); }
  Passport passport() const;
  std::array<Permutation, 2> generators() const { return {x_, y_}; }

  /// The six dessins obtained by permuting the roles of black vertices, white
  /// vertices and faces: (x,y), (y,z), (z,x), (y^-1,x^-1), (z^-1,y^-1), (x^-1,z^-1).
  std::array<Dessin, 6> role_variants() const;

  friend bool operator==(const Dessin &, const Dessin &) = default;
  friend auto operator<=>(const Dessin &, const Dessin &) = default;

private:
  Permutation x_, y_;
};

/// Conjugates both permutations by g.
Dessin conjugate(const Dessin &d, const Permutation &g);

/// Representative of the isomorphism class (simultaneous conjugacy of x, y):
/// the minimum, keyed by the image sequence of x followed by that of y, over
/// the n relabelings obtained by breadth-first search from each edge.
Dessin canonical_form(const Dessin &d);

struct EnumerateOptions {
  std::size_t guard = 14; ///< refuse passports of larger degree
  unsigned threads = 1;
};

/// Visits every y of cycle type λ1 such that (x, y) has passport `p`, where x is
/// the canonical permutation of λ0 (cycles in descending length on
/// consecutive labels). Transitivity is checked; isomorphic duplicates are not
/// removed. Returning false from the visitor stops the search. Returns false
/// iff the visitor stopped it.
bool for_each_dessin(const Passport &p, const std::function<bool(const Dessin &)> &visit,
                     const EnumerateOptions &options = {});

/// One canonical dessin per isomorphism class with passport p, sorted.
/// Throws InfeasibleSize above the guard.
std::vector<Dessin> enumerate_dessins(const Passport &p, const EnumerateOptions &options = {});

} // namespace dforge

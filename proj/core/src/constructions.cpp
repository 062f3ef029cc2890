#include "dforge/constructions.hpp"

#include <numeric>

#include "detail/enumerate.hpp"
#include "detail/regular.hpp"
#include "dforge/error.hpp"

namespace dforge {

std::string TreeSpec::to_string() const {
  return "[" + CycleType::uniform(a, p).to_string() + "," + CycleType::uniform(b, q).to_string() +
         "," + std::to_string(a * p) + "]";
}

Passport TreeSpec::passport() const {
  if (a == 0 || p == 0 || b == 0 || q == 0 || a * p != b * q)
    throw InvalidInput("tree spec needs positive a, p, b, q with pa = qb");
  const std::size_t n = a * p;
  return Passport(CycleType::uniform(a, p), CycleType::uniform(b, q), CycleType{n});
}

std::optional<Dessin> regular_tree_dessin(const TreeSpec &spec) {
  if (spec.a == 0 || spec.p == 0 || spec.b == 0 || spec.q == 0 || spec.a * spec.p != spec.b * spec.q)
    throw InvalidInput("tree spec needs positive a, p, b, q with pa = qb");
  const std::size_t n = spec.degree();
  // Checked before the passport itself: [3^2,3^2,6] is not even a passport.
  if (std::gcd(spec.p, spec.q) != 1)
    return std::nullopt;
  // Coprime but of the wrong parity, e.g. [6,2^3,6]: no dessin at all.
  if ((n + 1 - spec.p - spec.q) % 2 != 0)
    return std::nullopt;
  // l = 0 only survives the gcd test when a = 1 (x trivial), likewise m.
  for (std::size_t l = 0; l < spec.a; ++l) {
    if (std::gcd(spec.a, l) != 1)
      continue;
    for (std::size_t m = 0; m < spec.b; ++m) {
      if (std::gcd(spec.b, m) != 1 || (l * spec.p + m * spec.q) % n != 1 % n)
        continue;
      const Permutation s = Permutation::standard_cycle(n);
      return Dessin(power(s, static_cast<long long>(l * spec.p)),
                    power(s, static_cast<long long>(m * spec.q)));
    }
  }
  throw InternalError("no (l, m) found for coprime p, q in " + spec.passport().to_string());
}

Dessin alternating_witness(std::size_t n) {
  if (n < 5 || n % 2 == 0)
    throw InvalidInput("alternating_witness needs odd n >= 5, got " + std::to_string(n));
  // 1-based cycle (2 4 ... n-1 n n-2 ... 3 1).
  std::vector<Point> cycle;
  for (std::size_t e = 2; e < n; e += 2)
    cycle.push_back(static_cast<Point>(e - 1));
  for (std::size_t e = n + 2; e > 1; e -= 2)
    cycle.push_back(static_cast<Point>(e - 3));
  return Dessin(Permutation::standard_cycle(n), Permutation::from_cycles(n, {cycle}));
}

Dessin genus0_dessin(Genus0Kind kind, std::size_t n) {
  if (kind == Genus0Kind::Star) {
    if (n == 0)
      throw InvalidInput("star needs n >= 1");
    return Dessin(Permutation::standard_cycle(n), Permutation(n));
  }
  if (n < 2 || n % 2 != 0)
    throw InvalidInput("polygon needs even n >= 2, got " + std::to_string(n));
  std::vector<std::vector<Point>> xc, yc;
  for (Point e = 0; e < n; e += 2) {
    xc.push_back({e, e + 1});
    yc.push_back({e + 1, static_cast<Point>((e + 2) % n)});
  }
  return Dessin(Permutation::from_cycles(n, xc), Permutation::from_cycles(n, yc));
}

bool regular_exists(const Passport &p, const EnumerateOptions &options) {
  if (!p.is_uniform())
    throw InvalidInput("regular_exists needs a uniform passport, got " + p.to_string());
  const std::size_t n = p.degree();
  return !detail::for_each_raw(
      p,
      [n](unsigned) -> detail::RawVisit {
        return [n, scratch = detail::RegularScratch(n)](const Point *x,
                                                        const Point *y) mutable {
          return !detail::is_regular_raw(x, y, n, scratch);
        };
      },
      options);
}

} // namespace dforge

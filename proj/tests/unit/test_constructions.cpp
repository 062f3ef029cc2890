#include <catch_amalgamated.hpp>

#include <numeric>

#include "dforge/constructions.hpp"
#include "dforge/error.hpp"
#include "dforge/group.hpp"

using namespace dforge;

namespace {

Passport PP(const char *text) { return Passport::parse(text); }

} // namespace

TEST_CASE("tree construction examples") {
  const auto d = regular_tree_dessin({6, 1, 3, 2});
  REQUIRE(d);
  const auto s = Permutation::standard_cycle(6);
  CHECK(d->x() == power(s, 5));
  CHECK(d->y() == power(s, 2));
  CHECK(d->passport() == PP("[6,3^2,6]"));
  CHECK(is_regular(*d));

  CHECK_FALSE(regular_tree_dessin({3, 2, 3, 2}));
  // Coprime, but [6,2^3,6] has the wrong parity.
  CHECK_FALSE(regular_tree_dessin({6, 1, 2, 3}));
  // [3^2,3^2,6] has non-integral genus; still just absent.
  CHECK_FALSE(regular_tree_dessin({3, 2, 3, 2}).has_value());
  CHECK(TreeSpec{3, 2, 3, 2}.to_string() == "[3^2,3^2,6]");
  CHECK_THROWS_AS(TreeSpec({3, 2, 3, 2}).passport(), InvalidPassport);
  CHECK_THROWS_AS(regular_tree_dessin({3, 2, 2, 2}), InvalidInput);
  CHECK_THROWS_AS(regular_tree_dessin({0, 2, 0, 2}), InvalidInput);
}

TEST_CASE("tree family: regular iff gcd(p, q) = 1 for passports") {
  std::size_t built = 0;
  for (std::size_t n = 1; n <= 30; ++n)
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= n; ++b) {
        if (n % a || n % b)
          continue;
        const TreeSpec spec{a, n / a, b, n / b};
        const auto d = regular_tree_dessin(spec);
        const bool passport = (n + 1 - spec.p - spec.q) % 2 == 0;
        CHECK(d.has_value() == (passport && std::gcd(spec.p, spec.q) == 1));
        if (!d)
          continue;
        ++built;
        CHECK(d->passport() == spec.passport());
        CHECK(is_regular(*d));
        CHECK(automorphism_group(*d).size() == n);
      }
  CHECK(built > 100);
}

TEST_CASE("alternating witness") {
  const auto d = alternating_witness(5);
  CHECK(d.y() == parse_cycles("(2 4 5 3 1)", 5));
  CHECK(d.x() * d.y() == parse_cycles("(1 3 2 5 4)", 5));
  CHECK(group_order(d.generators()) == 60);
  CHECK(automorphism_group(d).size() == 1);
  for (std::size_t n = 7; n <= 21; n += 2) {
    const auto w = alternating_witness(n);
    CHECK(w.passport() == Passport(CycleType{n}, CycleType{n}, CycleType{n}));
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    CHECK(group_order(w.generators()) == f / 2);
    CHECK(automorphism_group(w).size() == 1);
  }
  CHECK_THROWS_AS(alternating_witness(3), InvalidInput);
  CHECK_THROWS_AS(alternating_witness(8), InvalidInput);
}

TEST_CASE("genus 0 families") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto star = genus0_dessin(Genus0Kind::Star, n);
    CHECK(star.passport() == Passport(CycleType{n}, CycleType::uniform(1, n), CycleType{n}));
    CHECK(star.passport().genus() == 0);
    CHECK(is_regular(star));
  }
  for (std::size_t m = 2; m <= 8; ++m) {
    const auto poly = genus0_dessin(Genus0Kind::Polygon, 2 * m);
    CHECK(poly.passport() ==
          Passport(CycleType::uniform(2, m), CycleType::uniform(2, m), CycleType::uniform(m, 2)));
    CHECK(poly.passport().genus() == 0);
    CHECK(is_regular(poly));
  }
  CHECK_THROWS_AS(genus0_dessin(Genus0Kind::Polygon, 5), InvalidInput);
}

TEST_CASE("regular_exists") {
  CHECK(regular_exists(PP("[3^3,3^3,3^3]")));
  CHECK(regular_exists(PP("[6,3^2,6]")));
  CHECK(regular_exists(PP("[4^2,2^4,4^2]")));
  CHECK_FALSE(regular_exists(PP("[3^2,3^2,3^2]")));
  CHECK_THROWS_AS(regular_exists(PP("[4 1,3 1 1,4 1]")), InvalidInput);
}

TEST_CASE("regular_exists agrees with the full enumeration") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto &u : uniform_passports(n)) {
      bool any = false;
      for (const auto &d : enumerate_dessins(u.passport))
        any = any || is_regular(d);
      INFO(u.passport.to_string());
      CHECK(regular_exists(u.passport) == any);
    }
}

#include <catch_amalgamated.hpp>

#include <set>

#include "dforge/dessin.hpp"
#include "dforge/error.hpp"
#include "dforge/group.hpp"
#include "dforge/random.hpp"
#include "oracles.hpp"

using namespace dforge;

namespace {

Passport PP(const char *text) { return Passport::parse(text); }

std::vector<int> parts_of(const CycleType &ct) { return {ct.parts().begin(), ct.parts().end()}; }

Permutation random_perm(std::size_t n, Rng &rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  rng.shuffle(std::span<Point>(v));
  return Permutation::from_images(v);
}

} // namespace

TEST_CASE("dessin construction") {
  const Dessin d(parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)(2 4)", 4));
  CHECK(d.z() == inverse(parse_cycles("(1 4 3 2)", 4)));
  CHECK(d.passport() == PP("[4,2^2,4]"));
  CHECK_THROWS_AS(Dessin(parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)), InvalidInput);
  CHECK_THROWS_AS(Dessin(Permutation(3), Permutation(4)), InvalidInput);
  CHECK_NOTHROW(Dessin(Permutation(1), Permutation(1)));
}

TEST_CASE("is_transitive") {
  const std::array<Permutation, 1> cyc{Permutation::standard_cycle(7)};
  CHECK(is_transitive(cyc, 7));
  const std::array<Permutation, 2> split{parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)};
  CHECK_FALSE(is_transitive(split, 4));
}

TEST_CASE("enumeration: known passports") {
  CHECK(enumerate_dessins(PP("[2^2,2^2,3 1]")).empty());
  CHECK(enumerate_dessins(PP("[3^2,3^2,4 2]")).empty());
  CHECK(enumerate_dessins(PP("[6,3^2,6]")).size() == 4);
  CHECK(enumerate_dessins(PP("[4^2,2^4,4^2]")).size() == 2);
  const auto one = enumerate_dessins(PP("[1,1,1]"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].x().is_identity());
}

TEST_CASE("enumeration output is valid, sorted, canonical") {
  for (const char *text : {"[6,3^2,6]", "[4^2,2^4,4^2]", "[3^3,3^3,3^3]", "[4 1,3 1 1,4 1]"}) {
    const Passport p = PP(text);
    const auto list = enumerate_dessins(p);
    CHECK(std::is_sorted(list.begin(), list.end()));
    for (const auto &d : list) {
      CHECK(d.passport() == p);
      CHECK(canonical_form(d) == d);
    }
  }
}

TEST_CASE("enumeration class counts match the brute-force oracle") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto &p : all_passports(n)) {
      const auto expect = oracle::class_count(static_cast<int>(n), parts_of(p.black()),
                                              parts_of(p.white()), parts_of(p.face()));
      INFO(p.to_string());
      CHECK(enumerate_dessins(p).size() == expect);
      ++checked;
    }
  }
  for (const char *text : {"[4 2 1,3 2 2,7]", "[7,7,7]", "[2^2 1^3,3^2 1,7]", "[3 1^4,5 1 1,7]"}) {
    const Passport p = PP(text);
    INFO(text);
    CHECK(enumerate_dessins(p).size() ==
          oracle::class_count(7, parts_of(p.black()), parts_of(p.white()), parts_of(p.face())));
  }
  CHECK(checked > 300);
}

TEST_CASE("threaded enumeration gives the same list") {
  for (const char *text : {"[6,3^2,6]", "[3^3,3^3,3^3]", "[2^4,2^4,4^2]"}) {
    const Passport p = PP(text);
    CHECK(enumerate_dessins(p, {14, 1}) == enumerate_dessins(p, {14, 3}));
  }
}

TEST_CASE("for_each_dessin visits labelled pairs and can stop early") {
  std::size_t all = 0;
  CHECK(for_each_dessin(PP("[6,3^2,6]"), [&](const Dessin &) {
    ++all;
    return true;
  }));
  // x fixed: the labelled count is the sum over classes of |C(x)| / |Aut|
  // = 6/6 + 6/3 + 6/2 + 6/1.
  CHECK(all == 12);
  std::size_t seen = 0;
  CHECK_FALSE(for_each_dessin(PP("[6,3^2,6]"), [&](const Dessin &) { return ++seen < 2; }));
  CHECK(seen == 2);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_dessins(PP("[3^5,3^5,3^5]")), InfeasibleSize);
  CHECK_THROWS_AS(enumerate_dessins(PP("[6,3^2,6]"), {5, 1}), InfeasibleSize);
}

TEST_CASE("canonical form is a complete invariant") {
  Rng rng(3);
  SECTION("idempotent and conjugation invariant") {
    for (const char *text : {"[6,3^2,6]", "[4^2,2^4,4^2]", "[3^3,3^3,3^3]"}) {
      for (const auto &d : enumerate_dessins(PP(text))) {
        CHECK(canonical_form(canonical_form(d)) == canonical_form(d));
        for (int t = 0; t < 10; ++t) {
          const auto g = random_perm(d.degree(), rng);
          CHECK(canonical_form(conjugate(d, g)) == canonical_form(d));
        }
      }
    }
  }
  SECTION("agrees with brute-force isomorphism") {
    for (int t = 0; t < 150; ++t) {
      const std::size_t n = 2 + rng.below(5);
      const auto x1 = random_perm(n, rng), y1 = random_perm(n, rng);
      const std::array<Permutation, 2> g1{x1, y1};
      if (!is_transitive(g1, n))
        continue;
      // Half the time a conjugate, otherwise an unrelated pair of the same types.
      Permutation x2 = x1, y2 = y1;
      if (rng.below(2)) {
        const auto g = random_perm(n, rng);
        x2 = conjugate(x1, g);
        y2 = conjugate(y1, g);
      } else {
        x2 = random_of_cycle_type(x1.cycle_type(), rng);
        y2 = random_of_cycle_type(y1.cycle_type(), rng);
      }
      const std::array<Permutation, 2> g2{x2, y2};
      if (!is_transitive(g2, n))
        continue;
      const bool same = canonical_form(Dessin(x1, y1)) == canonical_form(Dessin(x2, y2));
      CHECK(same == oracle::isomorphic(oracle::images(x1), oracle::images(y1),
                                       oracle::images(x2), oracle::images(y2)));
    }
  }
}

TEST_CASE("the two [4^2,2^4,4^2] dessins are distinct classes") {
  const auto list = enumerate_dessins(PP("[4^2,2^4,4^2]"));
  REQUIRE(list.size() == 2);
  CHECK(canonical_form(list[0]) != canonical_form(list[1]));
}

TEST_CASE("enumeration is conjugation complete") {
  Rng rng(8);
  for (const char *text : {"[6,3^2,6]", "[3^3,3^3,3^3]", "[4^2,2^4,4^2]"}) {
    const auto list = enumerate_dessins(PP(text));
    const std::set<Dessin> all(list.begin(), list.end());
    for (const auto &d : list) {
      const auto g = random_perm(d.degree(), rng);
      CHECK(all.count(canonical_form(conjugate(d, g))) == 1);
    }
  }
}

TEST_CASE("role variants") {
  for (const char *text : {"[6,3^2,6]", "[4^2,2^4,4^2]", "[4 1,3 1 1,4 1]"}) {
    for (const auto &d : enumerate_dessins(PP(text))) {
      const auto order = group_order(d.generators());
      const auto aut = automorphism_group(d).size();
      const Passport p = d.passport();
      const auto variants = d.role_variants();
      CHECK(variants[0] == d);
      // (y, z) has passport [l1, l_inf, l0], (z, x) has [l_inf, l0, l1].
      CHECK(variants[1].passport() == Passport(p.white(), p.face(), p.black()));
      CHECK(variants[2].passport() == Passport(p.face(), p.black(), p.white()));
      CHECK(variants[3].passport() == Passport(p.white(), p.black(), p.face()));
      for (const auto &v : variants) {
        CHECK(group_order(v.generators()) == order);
        CHECK(automorphism_group(v).size() == aut);
        CHECK(is_regular(v) == is_regular(d));
      }
    }
  }
}

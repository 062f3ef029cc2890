#include <catch_amalgamated.hpp>

#include <set>

#include "dforge/error.hpp"
#include "dforge/passport.hpp"

using namespace dforge;

namespace {

Passport PP(const char *text) { return Passport::parse(text); }

std::set<std::string> uniform_at_genus(std::size_t n, std::size_t g) {
  std::set<std::string> out;
  for (const auto &u : uniform_passports(n)) {
    if (u.genus == g)
      out.insert(u.passport.to_string());
  }
  return out;
}

} // namespace

TEST_CASE("genus") {
  CHECK(PP("[4 1, 3 1 1, 4 1]").genus() == 0);
  CHECK(PP("[3^3,3^3,3^3]").genus() == 1);
  CHECK(PP("[6,3^2,6]").genus() == 2);
  CHECK(PP("[1,1,1]").genus() == 0);
  CHECK(genus(CycleType{2, 2}, CycleType{2, 2}, CycleType{3, 1}) == 0);
  CHECK_THROWS_AS(PP("[2,2,2]"), InvalidPassport);   // parity
  CHECK_THROWS_AS(PP("[1^4,1^4,4]"), InvalidPassport); // negative genus
  CHECK_THROWS_AS(PP("[3,2,3]"), InvalidPassport);   // sizes differ
}

TEST_CASE("passport parsing and printing") {
  CHECK(PP("[6,3^2,6]").to_string() == "[6,3^2,6]");
  CHECK(PP("[4 1, 3 1 1, 4 1]").to_string() == "[4 1,3 1^2,4 1]");
  CHECK(PP(" [ 4^2 , 2^4 , 4^2 ] ") == PP("[4^2,2^4,4^2]"));
  CHECK(PP("[4^2,2^4,4^2]").degree() == 8);
  CHECK(PP("[6,3^2,6]").white() == CycleType{3, 3});
  CHECK_THROWS_AS(PP("6,3^2,6"), InvalidInput);
  CHECK_THROWS_AS(PP("[6,3^2]"), InvalidInput);
  CHECK_THROWS_AS(PP("[6,3^2,6,1]"), InvalidInput);
}

TEST_CASE("uniformity and trees") {
  CHECK(PP("[2^3,2^3,3^2]").is_uniform());
  CHECK_FALSE(PP("[4 1, 3 1 1, 4 1]").is_uniform());
  CHECK(PP("[6,1^6,6]").is_uniform());
  CHECK(is_uniform(PP("[7,1^7,7]")));
  CHECK(PP("[6,3^2,6]").is_tree());
  CHECK_FALSE(PP("[3^3,3^3,3^3]").is_tree());
}

TEST_CASE("uniform passports of degree 6") {
  CHECK(uniform_at_genus(6, 0) == std::set<std::string>{"[6,1^6,6]", "[2^3,2^3,3^2]"});
  CHECK(uniform_at_genus(6, 1) == std::set<std::string>{"[3^2,2^3,6]", "[3^2,3^2,3^2]"});
  CHECK(uniform_at_genus(6, 2) == std::set<std::string>{"[6,3^2,6]"});
  for (std::size_t g = 3; g < 10; ++g)
    CHECK(uniform_at_genus(6, g).empty());
}

TEST_CASE("uniform passports respect c >= a >= b and are sorted") {
  for (std::size_t n = 1; n <= 24; ++n) {
    const auto list = uniform_passports(n);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto &p = list[i].passport;
      CHECK(p.is_uniform());
      CHECK(p.genus() == list[i].genus);
      CHECK(p.face().largest() >= p.black().largest());
      CHECK(p.black().largest() >= p.white().largest());
      if (i)
        CHECK(list[i - 1].genus <= list[i].genus);
    }
    // Brute force over divisor triples, deduplicated by the ordering.
    std::set<std::string> expect;
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= a; ++b)
        for (std::size_t c = a; c <= n; ++c) {
          if (n % a || n % b || n % c)
            continue;
          const std::size_t l = n / a + n / b + n / c;
          if (l > n + 2 || (n + 2 - l) % 2)
            continue;
          expect.insert(Passport(CycleType::uniform(a, n / a), CycleType::uniform(b, n / b),
                                 CycleType::uniform(c, n / c))
                            .to_string());
        }
    std::set<std::string> got;
    for (const auto &u : list)
      got.insert(u.passport.to_string());
    CHECK(got == expect);
  }
}

TEST_CASE("partitions and passports") {
  // p(n) for n = 1..10
  const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (std::size_t n = 1; n <= 10; ++n)
    CHECK(partitions_of(n).size() == p[n - 1]);

  for (std::size_t n = 1; n <= 7; ++n) {
    const auto all = all_passports(n);
    std::set<std::array<CycleType, 3>> orbits;
    for (const auto &q : all) {
      std::array<CycleType, 3> key{q.black(), q.white(), q.face()};
      std::sort(key.begin(), key.end());
      orbits.insert(key);
    }
    const auto reps = passports_up_to_roles(n);
    CHECK(reps.size() == orbits.size());
    std::set<std::array<CycleType, 3>> rep_keys;
    for (const auto &q : reps) {
      std::array<CycleType, 3> key{q.black(), q.white(), q.face()};
      std::sort(key.begin(), key.end());
      rep_keys.insert(key);
    }
    CHECK(rep_keys == orbits);
  }
}

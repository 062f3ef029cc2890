#include <catch_amalgamated.hpp>

#include "dforge/counting.hpp"
#include "dforge/dessin.hpp"
#include "dforge/error.hpp"
#include "dforge/group.hpp"
#include "dforge/search.hpp"

using namespace dforge;

namespace {

const std::vector<WitnessCertificate> &fixture() {
  static const auto rows = load_witness_tables(DFORGE_FIXTURE);
  return rows;
}

WitnessCertificate row(std::size_t b, std::size_t q) {
  for (const auto &r : fixture())
    if (r.b == b && r.q == q)
      return r;
  FAIL("no fixture row " << b << "," << q);
  return {};
}

CertifyStep failed_step(const WitnessCertificate &c) {
  const auto r = certify(c);
  REQUIRE_FALSE(r.accepted);
  REQUIRE(r.failed);
  return *r.failed;
}

} // namespace

TEST_CASE("fixture loads every table row") {
  const auto &rows = fixture();
  CHECK(rows.size() == 40);
  std::size_t order_rows = 0;
  for (const auto &r : rows) {
    CHECK(r.y.degree() == r.degree());
    CHECK(r.table >= 2);
    CHECK(r.table <= 4);
    if (r.conclusion == Conclusion::OrderBased) {
      ++order_rows;
      CHECK(r.order);
      CHECK_FALSE(r.word);
    } else {
      CHECK(r.word);
      CHECK(r.prime);
    }
  }
  CHECK(order_rows == 2);
  CHECK(row(2, 6).word->to_string() == "xyxyx^4yx^3yx");
}

TEST_CASE("every fixture row certifies") {
  for (const auto &r : fixture()) {
    INFO("(" << r.b << "," << r.q << ")");
    const auto res = certify(r);
    CHECK(res.accepted);
    CHECK(res.detail.empty());
    if (r.conclusion == Conclusion::FullSymmetric)
      CHECK((r.degree() % 2 == 0 || ((r.b - 1) * r.q) % 2 == 1));
    if (r.conclusion == Conclusion::Alternating)
      CHECK(r.degree() % 2 == 1);
  }
  const auto r336 = certify(row(2, 4));
  CHECK(r336.computed_order == mpz_class(336));
  CHECK(r336.aut_order == 1u);
  const auto r120 = certify(row(3, 2));
  CHECK(r120.computed_order == mpz_class(120));
  CHECK(r120.aut_order == 1u);
}

TEST_CASE("fixture dessins have trivial automorphism group end to end") {
  for (const auto &r : fixture()) {
    if (r.degree() > 20)
      continue;
    const Dessin d(Permutation::standard_cycle(r.degree()), r.y);
    CHECK(d.passport() == Passport(CycleType{r.degree()}, CycleType::uniform(r.b, r.q),
                                   CycleType{r.degree()}));
    CHECK(automorphism_group(d).size() == 1);
    CHECK(is_primitive(d));
  }
}

TEST_CASE("tampered certificates fail at the right step") {
  SECTION("white type") {
    auto c = row(2, 6);
    c.y = parse_cycles("(1 4 2 9)(3 6)(5 8)(7 11)(10 12)", 12);
    CHECK(failed_step(c) == CertifyStep::WhiteType);
  }
  SECTION("face type") {
    auto c = row(2, 6);
    c.y = parse_cycles("(1 2)(3 4)(5 6)(7 8)(9 10)(11 12)", 12);
    CHECK(failed_step(c) == CertifyStep::FaceType);
  }
  SECTION("primitivity") {
    // Find a type-(2^4) y with an 8-cycle face that preserves residues mod 2.
    std::optional<Permutation> found;
    const auto x = Permutation::standard_cycle(8);
    for_each_of_cycle_type(CycleType::uniform(2, 4), [&](std::span<const Point> img) {
      const auto y = Permutation::from_images({img.begin(), img.end()});
      if ((x * y).cycle_type() == CycleType{8} && residue_blocks_preserved(y, 2)) {
        found = y;
        return false;
      }
      return true;
    });
    REQUIRE(found);
    auto c = row(2, 4);
    c.y = *found;
    CHECK(failed_step(c) == CertifyStep::Primitivity);
  }
  SECTION("word: wrong prime") {
    auto c = row(2, 6);
    c.prime = 7;
    CHECK(failed_step(c) == CertifyStep::Word);
  }
  SECTION("word: wrong stated cycle") {
    auto c = row(2, 6);
    c.w = parse_cycles("(4 6 9 11 5)", 12);
    CHECK(failed_step(c) == CertifyStep::Word);
  }
  SECTION("word: not a single cycle") {
    auto c = row(2, 6);
    c.word = GroupWord::parse("xy");
    CHECK(failed_step(c) == CertifyStep::Word);
  }
  SECTION("order") {
    auto c = row(2, 4);
    c.order = mpz_class(337);
    CHECK(failed_step(c) == CertifyStep::Order);
  }
  SECTION("conclusion") {
    auto c = row(2, 6);
    c.conclusion = Conclusion::Alternating;
    CHECK(failed_step(c) == CertifyStep::Conclusion);
    auto a = row(3, 3);
    a.conclusion = Conclusion::FullSymmetric;
    CHECK(failed_step(a) == CertifyStep::Conclusion);
  }
  SECTION("evidence") {
    auto c = row(2, 6);
    c.word.reset();
    CHECK(failed_step(c) == CertifyStep::Evidence);
    auto o = row(2, 4);
    o.word = GroupWord::parse("xy");
    CHECK(failed_step(o) == CertifyStep::Evidence);
  }
  SECTION("degree mismatch is an input error") {
    auto c = row(2, 6);
    c.y = Permutation(10);
    CHECK_THROWS_AS(certify(c), InvalidInput);
  }
}

TEST_CASE("fixture parsing errors") {
  const std::string missing_y = R"js([{"b": 2, "q": 4}])js";
  const std::string bad_group =
      R"js([{"b": 2, "q": 4, "y": "(1 4)(2 5)(3 7)(6 8)", "group": "T8"}])js";
  const std::string both =
      R"js([{"b": 2, "q": 4, "y": "(1 4)(2 5)(3 7)(6 8)", "group": "S8", "order": 1}])js";
  CHECK_THROWS_AS(parse_witness_tables("{"), InvalidInput);
  CHECK_THROWS_AS(parse_witness_tables("{}"), InvalidInput);
  CHECK_THROWS_AS(parse_witness_tables(missing_y), InvalidInput);
  CHECK_THROWS_AS(parse_witness_tables(bad_group), InvalidInput);
  CHECK_THROWS_AS(parse_witness_tables(both), InvalidInput);
  CHECK(parse_witness_tables("[]").empty());
  CHECK_THROWS_AS(load_witness_tables("/nonexistent/rows.json"), InvalidInput);
}

TEST_CASE("is_prime") {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (std::uint64_t k = 0; k < 50; ++k)
    CHECK(is_prime(k) == (std::find(primes.begin(), primes.end(), k) != primes.end()));
}

TEST_CASE("search finds the order-based rows") {
  const auto r32 = search_trivial_aut(3, 2, 1, 5000);
  REQUIRE(r32.certificate);
  CHECK(r32.certificate->conclusion == Conclusion::OrderBased);
  CHECK(r32.certificate->order == mpz_class(120));
  CHECK(certify(*r32.certificate).accepted);

  const auto r24 = search_trivial_aut(2, 4, 1, 5000);
  REQUIRE(r24.certificate);
  CHECK(r24.certificate->order == mpz_class(336));
  CHECK(certify(*r24.certificate).accepted);
}

TEST_CASE("search finds word certificates across seeds") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto r = search_trivial_aut(2, 6, seed, 20000);
    INFO("seed " << seed);
    REQUIRE(r.certificate);
    CHECK(certify(*r.certificate).accepted);
    CHECK(r.draws == r.winning_draw + 1);
    CHECK(r.face_ok >= r.primitive_ok);
    CHECK(r.draws >= r.face_ok);
  }
  const auto odd = search_trivial_aut(5, 5, 3, 20000);
  REQUIRE(odd.certificate);
  CHECK(odd.certificate->conclusion == Conclusion::Alternating);
  CHECK(certify(*odd.certificate).accepted);
}

TEST_CASE("search is deterministic and thread independent") {
  SearchOptions one, three;
  three.threads = 3;
  const auto a = search_trivial_aut(3, 4, 42, 20000, one);
  const auto b = search_trivial_aut(3, 4, 42, 20000, three);
  const auto c = search_trivial_aut(3, 4, 42, 20000, one);
  REQUIRE(a.certificate);
  REQUIRE(b.certificate);
  CHECK(a.winning_draw == b.winning_draw);
  CHECK(a.certificate->y == b.certificate->y);
  CHECK(a.certificate->word == b.certificate->word);
  CHECK(a.certificate->y == c.certificate->y);
  CHECK(a.draws == b.draws);
}

TEST_CASE("search input validation") {
  CHECK_THROWS_AS(search_trivial_aut(2, 1, 1, 10), InvalidInput);  // prime n
  CHECK_THROWS_AS(search_trivial_aut(2, 3, 1, 10), InvalidInput);  // parity
  CHECK_THROWS_AS(search_trivial_aut(0, 3, 1, 10), InvalidInput);
  // Budget too small is a miss, not an error.
  const auto miss = search_trivial_aut(2, 20, 1, 1);
  CHECK(miss.draws <= 1);
}

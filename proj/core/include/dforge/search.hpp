#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dforge/perm.hpp"
#include "dforge/word.hpp"

namespace dforge {

/// What the evidence proves about G = <(1 2 ... n), y>.
enum class Conclusion {
  FullSymmetric, ///< G = S_n (a prime-cycle word, n even)
  Alternating,   ///< G = A_n (a prime-cycle word, n odd)
  OrderBased,    ///< exact order and centralizer computed directly
};

std::string_view to_string(Conclusion c);

/// Evidence that the dessin ((1 2 ... n), y) with passport [n, b^q, n] has
/// trivial automorphism group.
struct WitnessCertificate {
  std::size_t b = 0, q = 0;
  Permutation y;
  Conclusion conclusion = Conclusion::OrderBased;
  std::optional<GroupWord> word;
  std::optional<std::size_t> prime;
  std::optional<Permutation> w; ///< the stated value of the word, if recorded
  std::optional<mpz_class> order;
  int table = 0; ///< source table number for fixture rows, 0 otherwise

  std::size_t degree() const { return b * q; }
};

/// Reads the witness fixture (a JSON array of row objects with fields b, q,
/// y, and either order or group/word/prime/w).
std::vector<WitnessCertificate> parse_witness_tables(std::string_view json_text);
std::vector<WitnessCertificate> load_witness_tables(const std::filesystem::path &path);

enum class CertifyStep {
  WhiteType,   ///< cycle type of y is not (b^q)
  FaceType,    ///< (1 2 ... n) y is not an n-cycle
  Primitivity, ///< y preserves the residue classes mod some m
  Word,        ///< word evidence does not evaluate to a small prime cycle
  Order,       ///< order evidence or centralizer check failed
  Conclusion,  ///< S_n / A_n claim contradicts the parity of the generators
  Evidence,    ///< neither word nor order-based evidence supplied
};

std::string_view to_string(CertifyStep step);

struct CertifyResult {
  bool accepted = false;
  std::optional<CertifyStep> failed; ///< first failing step
  std::string detail;
  std::optional<mpz_class> computed_order; ///< set for order-based evidence
  std::optional<std::size_t> aut_order;    ///< set for order-based evidence
};

/// Checks, in order: type of y, type of (1 2 ... n) y, no residue blocks,
/// then the evidence. Word evidence must evaluate to a single p-cycle with
/// p prime and p <= n - 3; order evidence is verified by a stabilizer chain
/// and a direct centralizer computation.
CertifyResult certify(const WitnessCertificate &cert);

bool is_prime(std::uint64_t p);

struct SearchOptions {
  std::size_t max_word_letters = 12;
  std::size_t max_exponent = 0;       ///< 0 means n; also capped at ord(g) - 1
  std::size_t word_trials = 50000;    ///< random words per candidate y
  std::size_t order_fallback_max_n = 12;
  unsigned threads = 1;
};

struct SearchResult {
  std::optional<WitnessCertificate> certificate;
  std::uint64_t draws = 0;          ///< candidates inspected (up to the winning index)
  std::uint64_t face_ok = 0;        ///< of those, with (1 2 ... n) y an n-cycle
  std::uint64_t primitive_ok = 0;   ///< of those, also primitive
  std::uint64_t winning_draw = 0;
};

/// Draws y of type (b^q) uniformly; candidate i uses its own generator seeded
/// from (seed, i), so the result does not depend on the thread count. The
/// smallest successful draw index wins. `budget` bounds the number of draws.
SearchResult search_trivial_aut(std::size_t b, std::size_t q, std::uint64_t seed,
                                std::uint64_t budget, const SearchOptions &options = {});

} // namespace dforge

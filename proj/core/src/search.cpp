#include "dforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "dforge/error.hpp"
#include "dforge/group.hpp"
#include "dforge/passport.hpp"
#include "dforge/random.hpp"

namespace dforge {

std::string_view to_string(Conclusion c) {
  switch (c) {
  case Conclusion::FullSymmetric:
    return "full-symmetric";
  case Conclusion::Alternating:
    return "alternating";
  case Conclusion::OrderBased:
    return "order-based";
  }
  return "?";
}

std::string_view to_string(CertifyStep step) {
  switch (step) {
  case CertifyStep::WhiteType:
    return "white-type";
  case CertifyStep::FaceType:
    return "face-type";
  case CertifyStep::Primitivity:
    return "primitivity";
  case CertifyStep::Word:
    return "word";
  case CertifyStep::Order:
    return "order";
  case CertifyStep::Conclusion:
    return "conclusion";
  case CertifyStep::Evidence:
    return "evidence";
  }
  return "?";
}

bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fixture

namespace {

template <typename T> T get_positive(const nlohmann::json &row, const char *key) {
  if (!row.contains(key) || !row[key].is_number_unsigned() || row[key].get<T>() == 0)
    throw InvalidInput(std::string("witness row: field '") + key +
                       "' must be a positive integer");
  return row[key].get<T>();
}

std::string get_string(const nlohmann::json &row, const char *key) {
  if (!row[key].is_string())
    throw InvalidInput(std::string("witness row: field '") + key + "' must be a string");
  return row[key].get<std::string>();
}

WitnessCertificate parse_row(const nlohmann::json &row) {
  if (!row.is_object())
    throw InvalidInput("witness row must be an object");
  WitnessCertificate cert;
  cert.b = get_positive<std::size_t>(row, "b");
  cert.q = get_positive<std::size_t>(row, "q");
  const std::size_t n = cert.degree();
  cert.y = parse_cycles(get_string(row, "y"), n);
  if (row.contains("table"))
    cert.table = row["table"].get<int>();

  if (row.contains("order")) {
    const auto &order = row["order"];
    cert.order = order.is_string() ? mpz_class(order.get<std::string>())
                                   : mpz_class(order.get<unsigned long>());
    cert.conclusion = Conclusion::OrderBased;
  }
  if (row.contains("group")) {
    const std::string group = get_string(row, "group");
    if (group.size() < 2 || (group[0] != 'S' && group[0] != 'A') ||
        group.substr(1) != std::to_string(n))
      throw InvalidInput("witness row: group '" + group + "' is not S" + std::to_string(n) +
                         " or A" + std::to_string(n));
    if (cert.order)
      throw InvalidInput("witness row: both 'order' and 'group' given");
    cert.conclusion = group[0] == 'S' ? Conclusion::FullSymmetric : Conclusion::Alternating;
  }
  if (row.contains("word"))
    cert.word = GroupWord::parse(get_string(row, "word"));
  if (row.contains("prime"))
    cert.prime = get_positive<std::size_t>(row, "prime");
  if (row.contains("w"))
    cert.w = parse_cycles(get_string(row, "w"), n);
  return cert;
}

} // namespace

std::vector<WitnessCertificate> parse_witness_tables(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception &e) {
    throw InvalidInput(std::string("witness fixture: ") + e.what());
  }
  if (!doc.is_array())
    throw InvalidInput("witness fixture must be a JSON array");
  std::vector<WitnessCertificate> out;
  for (const auto &row : doc) {
    try {
      out.push_back(parse_row(row));
    } catch (const nlohmann::json::exception &e) {
      throw InvalidInput(std::string("witness row: ") + e.what());
    }
  }
  return out;
}

std::vector<WitnessCertificate> load_witness_tables(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot read witness fixture " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_witness_tables(buffer.str());
}

// ---------------------------------------------------------------------------
// Certification

namespace {

bool face_is_full_cycle(std::span<const Point> y) {
  const std::size_t n = y.size();
  Point e = 0;
  std::size_t len = 0;
  do {
    const Point ye = y[e];
    e = static_cast<Point>(ye + 1 == n ? 0 : ye + 1);
    ++len;
  } while (e != 0);
  return len == n;
}

bool has_residue_blocks(const Permutation &y) {
  for (std::size_t m : proper_divisors(y.degree())) {
    if (residue_blocks_preserved(y, m))
      return true;
  }
  return false;
}

/// p if ct = (p, 1, ..., 1) with p >= 2, else 0.
std::size_t single_cycle_length(const CycleType &ct) {
  const auto parts = ct.parts();
  if (parts.empty() || parts[0] < 2)
    return 0;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] != 1)
      return 0;
  }
  return parts[0];
}

CertifyResult reject(CertifyStep step, std::string detail) {
  CertifyResult r;
  r.failed = step;
  r.detail = std::move(detail);
  return r;
}

} // namespace

CertifyResult certify(const WitnessCertificate &cert) {
  const std::size_t n = cert.degree();
  if (n == 0 || cert.y.degree() != n)
    throw InvalidInput("certificate: y must have degree b*q");
  const Permutation x = Permutation::standard_cycle(n);

  if (cert.y.cycle_type() != CycleType::uniform(cert.b, cert.q))
    return reject(CertifyStep::WhiteType, "y has cycle type " + cert.y.cycle_type().to_string() +
                                              ", expected " +
                                              CycleType::uniform(cert.b, cert.q).to_string());
  if (!face_is_full_cycle(cert.y.images()))
    return reject(CertifyStep::FaceType, "(1 2 ... n) y has cycle type " +
                                             (x * cert.y).cycle_type().to_string());
  for (std::size_t m : proper_divisors(n)) {
    if (residue_blocks_preserved(cert.y, m))
      return reject(CertifyStep::Primitivity,
                    "y preserves the residue classes mod " + std::to_string(m));
  }

  CertifyResult result;
  if (cert.conclusion == Conclusion::OrderBased) {
    if (cert.word)
      return reject(CertifyStep::Evidence, "order-based certificate carries a word");
    const PermGroup group({x, cert.y});
    result.computed_order = group.order();
    if (cert.order && *cert.order != group.order())
      return reject(CertifyStep::Order, "group order is " + group.order().get_str() +
                                            ", certificate says " + cert.order->get_str());
    const auto aut = automorphism_group(Dessin(x, cert.y));
    result.aut_order = aut.size();
    if (aut.size() != 1)
      return reject(CertifyStep::Order,
                    "centralizer has order " + std::to_string(aut.size()));
  } else {
    if (!cert.word)
      return reject(CertifyStep::Evidence, "no word given for an S_n / A_n certificate");
    const Permutation w = evaluate_word(*cert.word, x, cert.y);
    const std::size_t p = single_cycle_length(w.cycle_type());
    if (p == 0)
      return reject(CertifyStep::Word, cert.word->to_string() + " evaluates to " +
                                           print_cycles(w) + ", not a single cycle");
    if (!is_prime(p) || p + 3 > n)
      return reject(CertifyStep::Word, cert.word->to_string() + " gives a " +
                                           std::to_string(p) + "-cycle; need a prime <= n-3");
    if (cert.prime && *cert.prime != p)
      return reject(CertifyStep::Word, "word gives a " + std::to_string(p) +
                                           "-cycle, certificate says " +
                                           std::to_string(*cert.prime));
    if (cert.w && *cert.w != w)
      return reject(CertifyStep::Word, "word evaluates to " + print_cycles(w) +
                                           ", certificate says " + print_cycles(*cert.w));
    // G contains A_n; it is S_n iff a generator is odd.
    const bool x_odd = n % 2 == 0;
    const bool y_odd = ((cert.b - 1) * cert.q) % 2 == 1;
    const bool symmetric = x_odd || y_odd;
    if (symmetric != (cert.conclusion == Conclusion::FullSymmetric))
      return reject(CertifyStep::Conclusion,
                    std::string("the group is ") + (symmetric ? "S_n" : "A_n") +
                        " but the certificate claims otherwise");
  }
  result.accepted = true;
  return result;
}

// ---------------------------------------------------------------------------
// Randomized search

namespace {

struct Candidate {
  enum Stage { Rejected, FaceOk, PrimitiveOk, Found } stage = Rejected;
  WitnessCertificate cert;
};

class CandidateTester {
public:
  CandidateTester(std::size_t b, std::size_t q, const SearchOptions &options)
      : b_(b), q_(q), n_(b * q), options_(options),
        max_exp_(options.max_exponent ? options.max_exponent : n_) {
    const Permutation x = Permutation::standard_cycle(n_);
    x_powers_.reserve(max_exp_ + 1);
    for (std::size_t k = 0; k <= max_exp_; ++k)
      x_powers_.push_back(power(x, static_cast<long long>(k)));
    acc_.resize(n_);
    tmp_.resize(n_);
  }

  Candidate test(std::uint64_t seed, std::uint64_t index) {
    Rng rng(Rng::derive_seed(seed, index));
    Candidate c;
    Permutation y = random_of_cycle_type(CycleType::uniform(b_, q_), rng);
    if (!face_is_full_cycle(y.images()))
      return c;
    c.stage = Candidate::FaceOk;
    if (has_residue_blocks(y))
      return c;
    c.stage = Candidate::PrimitiveOk;

    c.cert.b = b_;
    c.cert.q = q_;
    c.cert.y = y;
    if (auto word = find_prime_word(y, rng)) {
      c.cert.word = *word;
      const Permutation w = evaluate_word(*word, x_powers_[1], y);
      c.cert.prime = w.cycle_type().largest();
      c.cert.w = w;
      const bool symmetric = n_ % 2 == 0 || ((b_ - 1) * q_) % 2 == 1;
      c.cert.conclusion = symmetric ? Conclusion::FullSymmetric : Conclusion::Alternating;
    } else if (n_ <= options_.order_fallback_max_n) {
      c.cert.conclusion = Conclusion::OrderBased;
      c.cert.order = PermGroup({x_powers_[1], y}).order();
    } else {
      return c;
    }
    if (!certify(c.cert).accepted)
      return c; // e.g. a non-trivial centralizer at prime n
    c.stage = Candidate::Found;
    return c;
  }

private:
  std::optional<GroupWord> find_prime_word(const Permutation &y, Rng &rng) {
    std::vector<Permutation> y_powers;
    y_powers.reserve(max_exp_ + 1);
    for (std::size_t k = 0; k <= std::min(max_exp_, b_); ++k)
      y_powers.push_back(power(y, static_cast<long long>(k)));

    GroupWord word;
    for (std::size_t trial = 0; trial < options_.word_trials; ++trial) {
      const std::size_t letters = rng.between(1, options_.max_word_letters);
      char g = rng.below(2) ? 'y' : 'x';
      word.letters.clear();
      for (Point e = 0; e < n_; ++e)
        acc_[e] = e;
      for (std::size_t i = 0; i < letters; ++i) {
        const std::size_t cap = std::min(max_exp_, (g == 'x' ? n_ : b_) - 1);
        const auto k = static_cast<unsigned>(rng.between(1, cap));
        word.letters.push_back({g, k});
        const auto img = (g == 'x' ? x_powers_[k] : y_powers[k]).images();
        // acc <- acc * g^k
        for (Point e = 0; e < n_; ++e)
          tmp_[e] = acc_[img[e]];
        std::swap(acc_, tmp_);
        g = g == 'x' ? 'y' : 'x';
      }
      const std::size_t p = small_prime_cycle();
      if (p)
        return word;
    }
    return std::nullopt;
  }

  // Length p of acc_ when it is a single cycle of prime length <= n - 3.
  std::size_t small_prime_cycle() const {
    std::size_t moved = 0;
    Point first = 0;
    for (Point e = 0; e < n_; ++e) {
      if (acc_[e] != e) {
        if (moved == 0)
          first = e;
        ++moved;
      }
    }
    if (moved < 2 || moved + 3 > n_ || !is_prime(moved))
      return 0;
    std::size_t len = 1;
    for (Point e = acc_[first]; e != first; e = acc_[e])
      ++len;
    return len == moved ? len : 0;
  }

  std::size_t b_, q_, n_;
  SearchOptions options_;
  std::size_t max_exp_;
  std::vector<Permutation> x_powers_;
  std::vector<Point> acc_, tmp_;
};

bool is_composite(std::size_t n) { return n >= 4 && !is_prime(n); }

} // namespace

SearchResult search_trivial_aut(std::size_t b, std::size_t q, std::uint64_t seed,
                                std::uint64_t budget, const SearchOptions &options) {
  if (b == 0 || q == 0)
    throw InvalidInput("search needs positive b and q");
  const std::size_t n = b * q;
  if (!is_composite(n))
    throw InvalidInput("search needs composite n = bq, got " + std::to_string(n));
  if ((n - q) % 2 != 0 || (n - q) / 2 < 2)
    throw InvalidInput("search needs [n, b^q, n] of genus >= 2");
  if (options.max_word_letters == 0)
    throw InvalidInput("search needs max_word_letters >= 1");

  const unsigned threads = std::max(1u, options.threads);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{budget}; // smallest successful index so far
  std::mutex mutex;
  std::optional<WitnessCertificate> winner;
  std::vector<std::uint64_t> face_indices, primitive_indices;

  auto worker = [&] {
    CandidateTester tester(b, q, options);
    std::vector<std::uint64_t> faces, prims;
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= budget || i > best.load())
        break;
      Candidate c = tester.test(seed, i);
      if (c.stage >= Candidate::FaceOk)
        faces.push_back(i);
      if (c.stage >= Candidate::PrimitiveOk)
        prims.push_back(i);
      if (c.stage == Candidate::Found) {
        std::lock_guard lock(mutex);
        if (i < best.load()) {
          best.store(i);
          winner = std::move(c.cert);
        }
      }
    }
    std::lock_guard lock(mutex);
    face_indices.insert(face_indices.end(), faces.begin(), faces.end());
    primitive_indices.insert(primitive_indices.end(), prims.begin(), prims.end());
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }

  SearchResult result;
  const std::uint64_t last = winner ? best.load() : budget - (budget ? 1 : 0);
  result.draws = budget == 0 ? 0 : last + 1;
  auto upto = [last](const std::vector<std::uint64_t> &v) {
    return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(),
                                                    [last](std::uint64_t i) { return i <= last; }));
  };
  result.face_ok = upto(face_indices);
  result.primitive_ok = upto(primitive_indices);
  if (winner) {
    result.winning_draw = best.load();
    result.certificate = std::move(winner);
  }
  return result;
}

} // namespace dforge

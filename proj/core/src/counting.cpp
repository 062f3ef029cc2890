#include "dforge/counting.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dforge/error.hpp"
#include "dforge/group.hpp"

namespace dforge {

mpz_class factorial(std::size_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binomial(std::size_t a, std::size_t b) {
  if (b > a)
    return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return out;
}

namespace {

mpz_class pow_ui(std::size_t base, std::size_t exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

mpz_class to_integer(const mpq_class &value, const char *what) {
  if (value.get_den() != 1)
    throw InternalError(std::string(what) + " evaluated to the non-integer " +
                        value.get_str());
  return value.get_num();
}

void require_bq(std::size_t b, std::size_t q) {
  if (b == 0 || q == 0)
    throw InvalidInput("b and q must be positive");
}

} // namespace

mpz_class t_count(std::size_t b, std::size_t q) {
  require_bq(b, q);
  return factorial(b * q) / (pow_ui(b, q) * factorial(q));
}

mpz_class z_lambda(const CycleType &ct) {
  mpz_class z = 1;
  for (std::size_t part = 1; part <= ct.largest(); ++part) {
    const std::size_t alpha = ct.multiplicity(part);
    if (alpha)
      z *= factorial(alpha) * pow_ui(part, alpha);
  }
  return z;
}

mpz_class class_size(const CycleType &ct) { return factorial(ct.size()) / z_lambda(ct); }

namespace {

/// Sum over compositions (j_1, ..., j_k) of `remaining` of prod C(parts_i, 2 j_i + 1).
/// Parts with C(a, 2j+1) = 0 (2j + 1 > a) are never entered; `capacity[i]`
/// bounds what parts i.. can still absorb.
mpz_class composition_sum(std::span<const std::size_t> parts,
                          std::span<const std::size_t> capacity, std::size_t index,
                          std::size_t remaining) {
  if (index == parts.size())
    return remaining == 0 ? 1 : 0;
  if (remaining > capacity[index])
    return 0;
  mpz_class total = 0;
  const std::size_t cap = (parts[index] - 1) / 2;
  for (std::size_t j = 0; j <= std::min(cap, remaining); ++j) {
    mpz_class rest = composition_sum(parts, capacity, index + 1, remaining - j);
    if (rest != 0)
      total += binomial(parts[index], 2 * j + 1) * rest;
  }
  return total;
}

std::vector<std::size_t> suffix_capacity(std::span<const std::size_t> parts) {
  std::vector<std::size_t> capacity(parts.size() + 1, 0);
  for (std::size_t i = parts.size(); i-- > 0;)
    capacity[i] = capacity[i + 1] + (parts[i] - 1) / 2;
  return capacity;
}

} // namespace

mpz_class goupil_connection(const CycleType &lambda, const CycleType &mu) {
  const std::size_t n = lambda.size();
  if (mu.size() != n)
    throw InvalidInput("goupil_connection: partitions of different sizes " +
                       std::to_string(n) + " and " + std::to_string(mu.size()));
  const std::size_t l = lambda.length(), m = mu.length();
  if (n + 1 < l + m || (n + 1 - l - m) % 2 != 0)
    return 0;
  const std::size_t g = (n + 1 - l - m) / 2;

  const auto lambda_cap = suffix_capacity(lambda.parts());
  const auto mu_cap = suffix_capacity(mu.parts());
  mpz_class sum = 0;
  for (std::size_t g1 = 0; g1 <= g; ++g1) {
    const std::size_t g2 = g - g1;
    mpz_class inner_l = composition_sum(lambda.parts(), lambda_cap, 0, g1);
    if (inner_l == 0)
      continue;
    mpz_class inner_m = composition_sum(mu.parts(), mu_cap, 0, g2);
    if (inner_m == 0)
      continue;
    sum += factorial(l + 2 * g1 - 1) * factorial(m + 2 * g2 - 1) * inner_l * inner_m;
  }
  mpq_class value(sum * static_cast<unsigned long>(n),
                  z_lambda(lambda) * z_lambda(mu) * pow_ui(2, 2 * g));
  value.canonicalize();
  return to_integer(value, "goupil_connection");
}

mpz_class n_count(std::size_t b, std::size_t q) {
  require_bq(b, q);
  return goupil_connection(CycleType{b * q}, CycleType::uniform(b, q));
}

// ---------------------------------------------------------------------------
// Census of a conjugacy class

namespace {

class ClassWalker {
public:
  using Visit = std::function<bool(std::span<const Point>)>;

  ClassWalker(const CycleType &ct, Visit visit, std::size_t shard, std::size_t shards)
      : n_(ct.size()), visit_(std::move(visit)), shard_(shard), shards_(shards) {
    left_.assign(n_ + 1, 0);
    for (std::size_t part : ct.parts())
      ++left_[part];
    images_.assign(n_, 0);
    used_.assign(n_, false);
  }

  void run() { next_cycle(true); }

private:
  // The first choice made (length and second point of the first cycle) is
  // the shard key.
  void next_cycle(bool first) {
    Point start = 0;
    while (start < n_ && used_[start])
      ++start;
    if (start == n_) {
      if (!visit_(images_))
        stopped_ = true;
      return;
    }
    used_[start] = true;
    for (std::size_t len = 1; len <= n_ && !stopped_; ++len) {
      if (!left_[len])
        continue;
      --left_[len];
      extend(start, start, 1, len, first);
      ++left_[len];
    }
    used_[start] = false;
  }

  void extend(Point start, Point cur, std::size_t count, std::size_t len, bool first) {
    if (count == len) {
      if (first && len == 1 && (counter_++ % shards_) != shard_)
        return;
      images_[cur] = start;
      next_cycle(false);
      return;
    }
    for (Point f = start + 1; f < n_ && !stopped_; ++f) {
      if (used_[f])
        continue;
      if (first && count == 1 && (counter_++ % shards_) != shard_)
        continue;
      used_[f] = true;
      images_[cur] = f;
      extend(start, f, count + 1, len, false);
      used_[f] = false;
    }
  }

  std::size_t n_;
  Visit visit_;
  std::size_t shard_, shards_;
  std::size_t counter_ = 0;
  bool stopped_ = false;
  std::vector<std::size_t> left_;
  std::vector<Point> images_;
  std::vector<bool> used_;
};

/// Counts permutations of type (b^q) satisfying `pred`, sharded over threads.
mpz_class census(std::size_t b, std::size_t q, const CountingOptions &options,
                 const std::function<bool(std::span<const Point>)> &pred) {
  require_bq(b, q);
  if (b * q > options.oracle_guard)
    throw InfeasibleSize("census of type (" + std::to_string(b) + "^" + std::to_string(q) +
                         ") exceeds the oracle guard n <= " +
                         std::to_string(options.oracle_guard));
  const CycleType ct = CycleType::uniform(b, q);
  const std::size_t shards = std::max(1u, options.threads);
  std::vector<std::uint64_t> counts(shards, 0);
  auto work = [&](std::size_t shard) {
    ClassWalker walker(
        ct,
        [&, shard](std::span<const Point> y) {
          counts[shard] += pred(y) ? 1 : 0;
          return true;
        },
        shard, shards);
    walker.run();
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t s = 0; s < shards; ++s)
      pool.emplace_back(work, s);
    for (auto &t : pool)
      t.join();
  }
  mpz_class total = 0;
  for (std::uint64_t c : counts)
    total += static_cast<unsigned long>(c);
  return total;
}

} // namespace

void for_each_of_cycle_type(const CycleType &ct,
                            const std::function<bool(std::span<const Point>)> &visit) {
  ClassWalker(ct, visit, 0, 1).run();
}

mpz_class n_count_bruteforce(std::size_t b, std::size_t q, const CountingOptions &options) {
  const std::size_t n = b * q;
  return census(b, q, options, [n](std::span<const Point> y) {
    // (1 2 ... n) y is an n-cycle iff the orbit of 0 has length n.
    Point e = 0;
    std::size_t len = 0;
    do {
      Point ye = y[e];
      e = static_cast<Point>(ye + 1 == n ? 0 : ye + 1);
      ++len;
    } while (e != 0);
    return len == n;
  });
}

// ---------------------------------------------------------------------------
// Residue-class blocks

std::vector<BlockPartition> block_partitions(std::size_t b, std::size_t q, std::size_t m) {
  require_bq(b, q);
  const std::size_t n = b * q;
  // The constraints force m | n, so other m simply have no partitions.
  if (m < 2 || m >= n || n % m != 0)
    return {};
  std::vector<std::size_t> allowed;
  for (std::size_t d = 1; d <= std::min(b, m); ++d) {
    if (b % d == 0 && (d * q) % m == 0)
      allowed.push_back(d);
  }
  std::vector<BlockPartition> out;
  BlockPartition current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t index,
                                                           std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (index == allowed.size())
      return;
    const std::size_t d = allowed[index];
    for (std::size_t t = remaining / d; t >= 1; --t) {
      current.parts.emplace_back(d, t);
      rec(index + 1, remaining - d * t);
      current.parts.pop_back();
    }
    rec(index + 1, remaining);
  };
  rec(0, m);
  std::sort(out.begin(), out.end(), [](const BlockPartition &l, const BlockPartition &r) {
    if (l.parts.size() != r.parts.size())
      return l.parts.size() < r.parts.size();
    return l.parts < r.parts;
  });
  return out;
}

mpz_class i_m_count(std::size_t b, std::size_t q, std::size_t m) {
  const std::size_t n = b * q;
  if (m < 2 || m >= n || n % m != 0)
    throw InvalidInput("I_m needs m | n and 2 <= m < n");
  const auto partitions = block_partitions(b, q, m);
  mpq_class sum = 0;
  for (const auto &partition : partitions) {
    mpq_class term = 1;
    for (auto [d, t] : partition.parts) {
      const std::size_t cycles = d * q / m;
      mpq_class per_type(pow_ui(d, cycles), factorial(cycles));
      per_type.canonicalize();
      mpq_class factor(1, 1);
      for (std::size_t k = 0; k < t; ++k)
        factor *= per_type;
      mpq_class lead(1, pow_ui(d, t) * factorial(t));
      lead.canonicalize();
      term *= lead * factor;
    }
    sum += term;
  }
  mpz_class block_fact = factorial(n / m);
  mpz_class block_pow;
  mpz_pow_ui(block_pow.get_mpz_t(), block_fact.get_mpz_t(), m);
  mpq_class prefactor(factorial(m) * block_pow, pow_ui(b, q));
  prefactor.canonicalize();
  return to_integer(prefactor * sum, "i_m_count");
}

mpz_class i_m_bruteforce(std::size_t b, std::size_t q, std::size_t m,
                         const CountingOptions &options) {
  const std::size_t n = b * q;
  if (m < 2 || m >= n || n % m != 0)
    throw InvalidInput("i_m_bruteforce needs m | n and 2 <= m < n");
  return census(b, q, options, [m, n](std::span<const Point> y) {
    std::vector<std::size_t> image_class(m, n);
    for (Point e = 0; e < n; ++e) {
      const std::size_t from = (e + 1) % m, to = (y[e] + 1) % m;
      if (image_class[from] == n)
        image_class[from] = to;
      else if (image_class[from] != to)
        return false;
    }
    return true;
  });
}

std::vector<mpz_class> odd_binomial_power_coefficients(std::size_t b, std::size_t q) {
  require_bq(b, q);
  std::vector<mpz_class> base((b - 1) / 2 + 1);
  for (std::size_t j = 0; j < base.size(); ++j)
    base[j] = binomial(b, 2 * j + 1);
  std::vector<mpz_class> result{1};
  for (std::size_t k = 0; k < q; ++k) {
    std::vector<mpz_class> next(result.size() + base.size() - 1, 0);
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (std::size_t j = 0; j < base.size(); ++j)
        next[i + j] += result[i] * base[j];
    }
    result = std::move(next);
  }
  return result;
}

BoundCheck bound_check(std::size_t b, std::size_t q) {
  require_bq(b, q);
  const std::size_t n = b * q;
  if (((b - 1) * q) % 2 != 0)
    throw InvalidInput("[n, b^q, n] needs q(b-1) even (b = " + std::to_string(b) +
                       ", q = " + std::to_string(q) + ")");
  BoundCheck out;
  out.ratio = mpq_class(n_count(b, q), t_count(b, q));
  out.ratio.canonicalize();
  out.bound = mpq_class(2, static_cast<unsigned long>(n + 2));
  out.bound.canonicalize();
  out.holds = out.ratio >= out.bound;
  out.tight = out.ratio == out.bound;
  if (out.tight != (b == 2))
    throw InternalError("N/T = 2/(n+2) should hold exactly when b = 2 (b = " +
                        std::to_string(b) + ", q = " + std::to_string(q) + ")");
  return out;
}

CountReport count_report(std::size_t b, std::size_t q) {
  CountReport report;
  report.b = b;
  report.q = q;
  report.n = b * q;
  report.t = t_count(b, q);
  report.n_count = n_count(b, q);
  mpq_class i_sum = 0;
  for (std::size_t m : proper_divisors(report.n)) {
    report.i_m[m] = i_m_count(b, q, m);
    i_sum += mpq_class(report.i_m[m], report.t);
  }
  i_sum.canonicalize();
  report.i_over_t = i_sum;
  report.n_over_t = mpq_class(report.n_count, report.t);
  report.n_over_t.canonicalize();
  report.bound = mpq_class(2, static_cast<unsigned long>(report.n + 2));
  report.bound.canonicalize();
  report.is_passport = ((b - 1) * q) % 2 == 0;
  if (report.is_passport) {
    const BoundCheck check = bound_check(b, q);
    report.bound_holds = check.holds;
    report.bound_tight = check.tight;
  }
  return report;
}

} // namespace dforge

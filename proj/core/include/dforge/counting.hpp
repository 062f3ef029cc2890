#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dforge/perm.hpp"

namespace dforge {

struct CountingOptions {
  std::size_t oracle_guard = 12; ///< largest n = bq the brute-force oracles accept
  unsigned threads = 1;
};

/// Number of permutations of S_n with cycle type (b^q): n! / (b^q q!).
mpz_class t_count(std::size_t b, std::size_t q);

/// Number of permutations with the given cycle type: n! / z_lambda.
mpz_class class_size(const CycleType &ct);

/// z_lambda = prod_i alpha_i! i^alpha_i.
mpz_class z_lambda(const CycleType &ct);

/// Goupil's connection coefficient: the number of pairs (sigma, rho) with
/// sigma of type lambda, rho of type mu and sigma rho = a fixed n-cycle.
/// Zero when the associated genus (n - (l + m) + 1) / 2 is not a non-negative
/// integer.
mpz_class goupil_connection(const CycleType &lambda, const CycleType &mu);

/// N(b, q): type-(b^q) permutations y with (1 2 ... n) y an n-cycle.
mpz_class n_count(std::size_t b, std::size_t q);

/// Census of all type-(b^q) permutations; throws InfeasibleSize above the guard.
mpz_class n_count_bruteforce(std::size_t b, std::size_t q, const CountingOptions &options = {});

/// A way of grouping the m residue blocks into cycles of the induced block
/// permutation: t_i cycles through d_i blocks each.
struct BlockPartition {
  std::vector<std::pair<std::size_t, std::size_t>> parts; ///< (d_i, t_i), d ascending

  friend bool operator==(const BlockPartition &, const BlockPartition &) = default;
};

/// Every {(d_i, t_i)} with sum d_i t_i = m, d_i | b and m | d_i q; empty unless
/// 2 <= m < bq (the constraints already force m | bq).
std::vector<BlockPartition> block_partitions(std::size_t b, std::size_t q, std::size_t m);

/// I_m(b, q): type-(b^q) permutations that preserve the residue classes mod m
/// as a block system (closed form summed over block partitions).
mpz_class i_m_count(std::size_t b, std::size_t q, std::size_t m);

/// Census version of i_m_count.
mpz_class i_m_bruteforce(std::size_t b, std::size_t q, std::size_t m,
                         const CountingOptions &options = {});

/// A_{g2} for g2 = 0..q*floor((b-1)/2): the coefficients of P_b(x)^q with
/// P_b(x) = sum_j C(b, 2j+1) x^j. They sum to 2^(q(b-1)).
std::vector<mpz_class> odd_binomial_power_coefficients(std::size_t b, std::size_t q);

struct BoundCheck {
  mpq_class ratio; ///< N / T
  mpq_class bound; ///< 2 / (n + 2)
  bool holds = false;
  bool tight = false;
};

/// Compares N/T with 2/(n+2) exactly. Only defined when [n, b^q, n] is a
/// passport (q(b-1) even); InvalidInput otherwise. Throws InternalError if
/// tightness and b == 2 disagree.
BoundCheck bound_check(std::size_t b, std::size_t q);

struct CountReport {
  std::size_t n = 0, b = 0, q = 0;
  mpz_class t, n_count;
  std::map<std::size_t, mpz_class> i_m;
  mpq_class n_over_t;
  mpq_class i_over_t; ///< sum over m of I_m / T
  mpq_class bound;
  bool is_passport = false; ///< [n, b^q, n] has integral genus; bound flags only then
  bool bound_holds = false, bound_tight = false;
};

CountReport count_report(std::size_t b, std::size_t q);

/// Calls visit(images) for every permutation of cycle type ct (0-based images).
/// Returning false stops the census.
void for_each_of_cycle_type(const CycleType &ct,
                            const std::function<bool(std::span<const Point>)> &visit);

mpz_class factorial(std::size_t n);
mpz_class binomial(std::size_t a, std::size_t b);

} // namespace dforge

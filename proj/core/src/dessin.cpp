#include "dforge/dessin.hpp"

#include <algorithm>

#include "detail/canonical.hpp"
#include "dforge/error.hpp"

namespace dforge {

bool is_transitive(std::span<const Permutation> gens, std::size_t n) {
  if (n == 0)
    return false;
  for (const auto &g : gens) {
    if (g.degree() != n)
      throw InvalidInput("generator degree does not match n");
  }
  std::vector<bool> seen(n, false);
  std::vector<Point> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto &g : gens) {
      Point next = g(queue[head]);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  return queue.size() == n;
}

Dessin::Dessin(Permutation x, Permutation y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.degree() != y_.degree())
    throw InvalidInput("dessin permutations have different degrees");
  const std::array<Permutation, 2> gens{x_, y_};
  if (!is_transitive(gens, x_.degree()))
    throw InvalidInput("<x, y> is not transitive; not a dessin");
}

Passport Dessin::passport() const {
  return Passport(x_.cycle_type(), y_.cycle_type(), z().cycle_type());
}

std::array<Dessin, 6> Dessin::role_variants() const {
  const Permutation z = this->z();
  const Permutation xi = inverse(x_), yi = inverse(y_), zi = inverse(z);
  return {Dessin(x_, y_), Dessin(y_, z),  Dessin(z, x_),
          Dessin(yi, xi), Dessin(zi, yi), Dessin(xi, zi)};
}

Dessin conjugate(const Dessin &d, const Permutation &g) {
  return Dessin(conjugate(d.x(), g), conjugate(d.y(), g));
}

namespace detail {

void canonical_key(const Point *x, const Point *y, std::size_t n, std::string &key) {
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> label(n), order(n), cand(2 * n);
  key.clear();
  bool have_best = false;

  for (Point root = 0; root < n; ++root) {
    std::fill(label.begin(), label.end(), kUnset);
    label[root] = 0;
    order[0] = root;
    std::size_t assigned = 1;
    // -1: candidate already smaller, 0: tied so far, 1: larger (abandon).
    int cmp = have_best ? 0 : -1;
    for (std::size_t i = 0; i < n && cmp <= 0; ++i) {
      const Point e = order[i];
      for (const Point *gen : {x, y}) {
        const Point next = gen[e];
        if (label[next] == kUnset) {
          label[next] = static_cast<Point>(assigned);
          order[assigned++] = next;
        }
      }
      cand[i] = label[x[e]];
      cand[n + i] = label[y[e]];
      if (cmp == 0) {
        // x' entries are final in label order; compare them as they appear.
        const auto best_x = static_cast<unsigned char>(key[i]);
        if (cand[i] != best_x)
          cmp = cand[i] < best_x ? -1 : 1;
      }
    }
    if (cmp > 0)
      continue;
    if (cmp == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto best_y = static_cast<unsigned char>(key[n + i]);
        if (cand[n + i] != best_y) {
          cmp = cand[n + i] < best_y ? -1 : 1;
          break;
        }
      }
      if (cmp >= 0)
        continue;
    }
    key.resize(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
      key[i] = static_cast<char>(static_cast<unsigned char>(cand[i]));
    have_best = true;
  }
}

void decode_key(const std::string &key, std::size_t n, std::vector<Point> &x,
                std::vector<Point> &y) {
  x.resize(n);
  y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<unsigned char>(key[i]);
    y[i] = static_cast<unsigned char>(key[n + i]);
  }
}

} // namespace detail

Dessin canonical_form(const Dessin &d) {
  const std::size_t n = d.degree();
  if (n > 256)
    throw InfeasibleSize("canonical_form supports degree <= 256");
  std::string key;
  detail::canonical_key(d.x().images().data(), d.y().images().data(), n, key);
  std::vector<Point> x, y;
  detail::decode_key(key, n, x, y);
  return Dessin(Permutation::from_images(std::move(x)), Permutation::from_images(std::move(y)));
}

} // namespace dforge

#include "dforge/group.hpp"

#include <algorithm>
#include <unordered_set>

#include "dforge/error.hpp"

namespace dforge {

PermGroup::PermGroup(std::vector<Permutation> gens) : generators_(std::move(gens)) {
  if (generators_.empty())
    throw InvalidInput("PermGroup needs at least one generator");
  degree_ = generators_.front().degree();
  if (degree_ == 0)
    throw InvalidInput("PermGroup needs positive degree");
  for (const auto &g : generators_) {
    if (g.degree() != degree_)
      throw InvalidInput("PermGroup generators have different degrees");
  }
  schreier_sims();
}

void PermGroup::add_level(Point base_point) {
  Level level;
  level.base_point = base_point;
  level.transversal.assign(degree_, std::nullopt);
  levels_.push_back(std::move(level));
}

void PermGroup::rebuild_orbit(Level &level) const {
  std::fill(level.transversal.begin(), level.transversal.end(), std::nullopt);
  level.orbit.clear();
  level.transversal[level.base_point] = Permutation(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const Point beta = level.orbit[head];
    for (const auto &s : level.strong) {
      const Point gamma = s(beta);
      if (!level.transversal[gamma]) {
        level.transversal[gamma] = s * *level.transversal[beta];
        level.orbit.push_back(gamma);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const Point beta = g(levels_[j].base_point);
    const auto &u = levels_[j].transversal[beta];
    if (!u)
      return {std::move(g), j};
    g = inverse(*u) * g;
  }
  return {std::move(g), levels_.size()};
}

namespace {

Point smallest_moved(const Permutation &g) {
  for (Point e = 0; e < g.degree(); ++e) {
    if (g(e) != e)
      return e;
  }
  return static_cast<Point>(g.degree());
}

} // namespace

void PermGroup::schreier_sims() {
  add_level(0);
  for (const auto &g : generators_) {
    if (g.is_identity())
      continue;
    // Make sure some base point is moved by g.
    bool moved = false;
    for (const auto &level : levels_)
      moved = moved || g(level.base_point) != level.base_point;
    if (!moved)
      add_level(smallest_moved(g));
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto &g : generators_) {
      if (g.is_identity())
        continue;
      bool fixes_prefix = true;
      for (std::size_t k = 0; k < l && fixes_prefix; ++k)
        fixes_prefix = g(levels_[k].base_point) == levels_[k].base_point;
      if (fixes_prefix)
        levels_[l].strong.push_back(g);
    }
    rebuild_orbit(levels_[l]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto level_index = static_cast<std::size_t>(i);
    bool extended = false;
    // Snapshot: strong generators and orbit may not change at this level
    // while we iterate, only deeper ones.
    const std::vector<Point> orbit = levels_[level_index].orbit;
    const std::vector<Permutation> strong = levels_[level_index].strong;
    for (std::size_t oi = 0; oi < orbit.size() && !extended; ++oi) {
      const Point beta = orbit[oi];
      const Permutation &u_beta = *levels_[level_index].transversal[beta];
      for (const auto &s : strong) {
        const Point gamma = s(beta);
        const Permutation &u_gamma = *levels_[level_index].transversal[gamma];
        Permutation schreier = inverse(u_gamma) * s * u_beta;
        if (schreier.is_identity())
          continue;
        auto [residue, j] = sift(std::move(schreier), level_index + 1);
        if (j == levels_.size() && residue.is_identity())
          continue;
        if (j == levels_.size())
          add_level(smallest_moved(residue));
        for (std::size_t l = level_index + 1; l <= j; ++l) {
          levels_[l].strong.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended)
      --i;
  }

  order_ = 1;
  for (const auto &level : levels_)
    order_ *= static_cast<unsigned long>(level.orbit.size());
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto &level : levels_)
    out.push_back(level.base_point);
  return out;
}

bool PermGroup::contains(const Permutation &g) const {
  if (g.degree() != degree_)
    return false;
  auto [residue, j] = sift(g, 0);
  return j == levels_.size() && residue.is_identity();
}

std::vector<Point> PermGroup::fundamental_orbit(std::size_t level) const {
  return levels_.at(level).orbit;
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::size_t level) const {
  if (level >= levels_.size())
    return {};
  return levels_[level].strong;
}

std::vector<Point> orbit(std::span<const Permutation> gens, Point point) {
  if (gens.empty())
    return {point};
  const std::size_t n = gens.front().degree();
  std::vector<bool> seen(n, false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto &g : gens) {
      const Point next = g(out[head]);
      if (!seen[next]) {
        seen[next] = true;
        out.push_back(next);
      }
    }
  }
  return out;
}

mpz_class group_order(std::span<const Permutation> gens) {
  return PermGroup(std::vector<Permutation>(gens.begin(), gens.end())).order();
}

bool is_regular(const Dessin &d) {
  const std::size_t n = d.degree();
  const std::array<Permutation, 2> gens{d.x(), d.y()};
  std::unordered_set<Permutation, PermutationHash> elements;
  std::vector<Permutation> queue{Permutation(n)};
  elements.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto &s : gens) {
      Permutation next = s * queue[head];
      if (elements.insert(next).second) {
        if (elements.size() > n)
          return false;
        queue.push_back(std::move(next));
      }
    }
  }
  return elements.size() == n;
}

std::vector<Permutation> automorphism_group(const Dessin &d) {
  const std::size_t n = d.degree();
  const PermGroup group({d.x(), d.y()});
  // Base point 0 is always first, so level 0 carries a transversal for the
  // whole (transitive) orbit and level 1 generates Stab(0).
  const auto stab = group.stabilizer_generators(1);

  std::vector<Permutation> transversal(n);
  {
    // BFS transversal: t[k](0) = k.
    std::vector<bool> seen(n, false);
    std::vector<Point> queue{0};
    seen[0] = true;
    transversal[0] = Permutation(n);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Point k = queue[head];
      for (const Permutation *s : {&d.x(), &d.y()}) {
        const Point next = (*s)(k);
        if (!seen[next]) {
          seen[next] = true;
          transversal[next] = *s * transversal[k];
          queue.push_back(next);
        }
      }
    }
  }

  std::vector<Permutation> out;
  for (Point target = 0; target < n; ++target) {
    bool fixed = true;
    for (const auto &h : stab)
      fixed = fixed && h(target) == target;
    if (!fixed)
      continue;
    std::vector<Point> images(n);
    for (Point k = 0; k < n; ++k)
      images[k] = transversal[k](target);
    std::vector<bool> hit(n, false);
    bool bijective = true;
    for (Point v : images) {
      if (hit[v]) {
        bijective = false;
        break;
      }
      hit[v] = true;
    }
    if (!bijective)
      continue;
    Permutation c = Permutation::from_images(std::move(images));
    if (c * d.x() == d.x() * c && c * d.y() == d.y() * c)
      out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace dforge

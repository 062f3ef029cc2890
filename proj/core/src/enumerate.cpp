#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "detail/canonical.hpp"
#include "detail/enumerate.hpp"
#include "dforge/dessin.hpp"
#include "dforge/error.hpp"

namespace dforge {

namespace {

constexpr Point kUnset = ~Point{0};

/// Backtracking over y with prescribed cycle type, x fixed. The partial
/// product w = xy is tracked as a partial injection; a w-cycle may only close
/// with a length still available in the face partition, and an open w-path
/// may never be longer than the largest face part still available.
class YSearch {
public:
  using Leaf = std::function<bool(const Point *x, const Point *y)>;

  YSearch(const Passport &p, std::vector<Point> x, Leaf leaf, const std::atomic<bool> &stop)
      : n_(p.degree()), x_(std::move(x)), leaf_(std::move(leaf)), stop_(stop) {
    white_left_.assign(n_ + 1, 0);
    face_left_.assign(n_ + 1, 0);
    for (std::size_t part : p.white().parts())
      ++white_left_[part];
    for (std::size_t part : p.face().parts())
      ++face_left_[part];
    y_.assign(n_, kUnset);
    w_.assign(n_, kUnset);
    winv_.assign(n_, kUnset);
    used_.assign(n_, false);
  }

  /// Distinct (cycle length, y(0)) choices for the first cycle; the unit of
  /// parallel work.
  std::vector<std::pair<std::size_t, Point>> first_choices() const {
    std::vector<std::pair<std::size_t, Point>> out;
    for (std::size_t len = 1; len <= n_; ++len) {
      if (white_left_[len] == 0)
        continue;
      if (len == 1) {
        out.emplace_back(1, Point{0});
        continue;
      }
      for (Point f = 1; f < n_; ++f)
        out.emplace_back(len, f);
    }
    return out;
  }

  /// Runs the subtree whose first y-cycle has length `len` and y(0) = `first`.
  /// Returns false if the leaf callback asked to stop.
  bool run(std::size_t len, Point first) {
    --white_left_[len];
    used_[0] = true;
    if (len == 1) {
      std::size_t closed = 0;
      if (assign(0, 0, closed)) {
        next_cycle();
        unassign(0, closed);
      }
    } else {
      used_[first] = true;
      std::size_t closed = 0;
      if (assign(0, first, closed)) {
        extend(0, first, 2, len);
        unassign(0, closed);
      }
      used_[first] = false;
    }
    used_[0] = false;
    ++white_left_[len];
    return !halted_;
  }

private:
  std::size_t max_face_left() const {
    for (std::size_t len = n_; len >= 1; --len) {
      if (face_left_[len])
        return len;
    }
    return 0;
  }

  // Sets y(e) = f. On success `closed` is the length of the w-cycle this
  // closed (0 if none). On failure nothing is changed.
  bool assign(Point e, Point f, std::size_t &closed) {
    const Point we = x_[f];
    y_[e] = f;
    w_[e] = we;
    winv_[we] = e;

    std::size_t len = 1;
    Point a = e;
    while (w_[a] != kUnset && w_[a] != e) {
      a = w_[a];
      ++len;
    }
    if (w_[a] == e) {
      if (face_left_[len] == 0) {
        undo_raw(e);
        return false;
      }
      --face_left_[len];
      closed = len;
      return true;
    }
    for (Point b = e; winv_[b] != kUnset; b = winv_[b])
      ++len;
    if (len > max_face_left()) {
      undo_raw(e);
      return false;
    }
    closed = 0;
    return true;
  }

  void undo_raw(Point e) {
    winv_[w_[e]] = kUnset;
    w_[e] = kUnset;
    y_[e] = kUnset;
  }

  void unassign(Point e, std::size_t closed) {
    if (closed)
      ++face_left_[closed];
    undo_raw(e);
  }

  void extend(Point start, Point cur, std::size_t count, std::size_t len) {
    if (halted_ || stop_.load(std::memory_order_relaxed)) {
      halted_ = true;
      return;
    }
    std::size_t closed = 0;
    if (count == len) {
      if (assign(cur, start, closed)) {
        next_cycle();
        unassign(cur, closed);
      }
      return;
    }
    for (Point f = start + 1; f < n_ && !halted_; ++f) {
      if (used_[f])
        continue;
      used_[f] = true;
      if (assign(cur, f, closed)) {
        extend(start, f, count + 1, len);
        unassign(cur, closed);
      }
      used_[f] = false;
    }
  }

  void next_cycle() {
    Point start = 0;
    while (start < n_ && used_[start])
      ++start;
    if (start == n_) {
      leaf();
      return;
    }
    used_[start] = true;
    for (std::size_t len = 1; len <= n_ && !halted_; ++len) {
      if (white_left_[len] == 0)
        continue;
      --white_left_[len];
      extend(start, start, 1, len);
      ++white_left_[len];
    }
    used_[start] = false;
  }

  void leaf() {
    // Transitivity of <x, y>.
    seen_.assign(n_, false);
    queue_.clear();
    queue_.push_back(0);
    seen_[0] = true;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Point e = queue_[head];
      for (Point next : {x_[e], y_[e]}) {
        if (!seen_[next]) {
          seen_[next] = true;
          queue_.push_back(next);
        }
      }
    }
    if (queue_.size() != n_)
      return;
    if (!leaf_(x_.data(), y_.data()))
      halted_ = true;
  }

  std::size_t n_;
  std::vector<Point> x_;
  Leaf leaf_;
  const std::atomic<bool> &stop_;
  bool halted_ = false;

  std::vector<std::size_t> white_left_, face_left_;
  std::vector<Point> y_, w_, winv_;
  std::vector<bool> used_;
  std::vector<bool> seen_;
  std::vector<Point> queue_;
};

std::vector<Point> canonical_x(const Passport &p) {
  const auto x = canonical_of_cycle_type(p.black());
  return {x.images().begin(), x.images().end()};
}

/// Runs every first-choice subtree, distributing them over `threads` workers.
/// `make_leaf(worker)` gives each worker its own leaf callback.
void run_search(const Passport &p, unsigned threads,
                const std::function<YSearch::Leaf(unsigned)> &make_leaf,
                std::atomic<bool> &stop) {
  const auto x = canonical_x(p);
  const auto choices = YSearch(p, x, nullptr, stop).first_choices();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(choices.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned id) {
    YSearch search(p, x, make_leaf(id), stop);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= choices.size() || stop.load())
        return;
      if (!search.run(choices[i].first, choices[i].second))
        stop.store(true);
    }
  };
  if (threads == 1) {
    worker(0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back(worker, t);
  for (auto &t : pool)
    t.join();
}

void check_guard(const Passport &p, const EnumerateOptions &options) {
  if (p.degree() > options.guard)
    throw InfeasibleSize("passport " + p.to_string() + " has degree " +
                         std::to_string(p.degree()) + " above the enumeration guard " +
                         std::to_string(options.guard));
  if (p.degree() > 256)
    throw InfeasibleSize("enumeration supports degree <= 256");
}

} // namespace

namespace detail {

bool for_each_raw(const Passport &p, const std::function<RawVisit(unsigned)> &make_visit,
                  const EnumerateOptions &options) {
  check_guard(p, options);
  std::atomic<bool> stop{false};
  run_search(p, options.threads, make_visit, stop);
  return !stop.load();
}

} // namespace detail

bool for_each_dessin(const Passport &p, const std::function<bool(const Dessin &)> &visit,
                     const EnumerateOptions &options) {
  const std::size_t n = p.degree();
  std::mutex visit_mutex;
  auto make_leaf = [&](unsigned) -> detail::RawVisit {
    return [&, n](const Point *x, const Point *y) {
      Dessin d(Permutation::from_images({x, x + n}), Permutation::from_images({y, y + n}));
      std::lock_guard lock(visit_mutex);
      return visit(d);
    };
  };
  return detail::for_each_raw(p, make_leaf, options);
}

std::vector<Dessin> enumerate_dessins(const Passport &p, const EnumerateOptions &options) {
  check_guard(p, options);
  const std::size_t n = p.degree();
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::unordered_set<std::string>> found(threads);
  std::atomic<bool> stop{false};
  auto make_leaf = [&](unsigned id) -> YSearch::Leaf {
    return [&found, id, n, key = std::string()](const Point *x, const Point *y) mutable {
      detail::canonical_key(x, y, n, key);
      found[id].insert(key);
      return true;
    };
  };
  run_search(p, threads, make_leaf, stop);

  std::unordered_set<std::string> merged;
  for (auto &set : found)
    merged.merge(set);
  std::vector<std::string> keys(merged.begin(), merged.end());
  std::sort(keys.begin(), keys.end());

  std::vector<Dessin> out;
  out.reserve(keys.size());
  std::vector<Point> x, y;
  for (const auto &key : keys) {
    detail::decode_key(key, n, x, y);
    out.emplace_back(Permutation::from_images(x), Permutation::from_images(y));
  }
  return out;
}

} // namespace dforge

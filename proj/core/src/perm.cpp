#include "dforge/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "dforge/error.hpp"

namespace dforge {

// ---------------------------------------------------------------------------
// CycleType

CycleType::CycleType(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t part : parts_) {
    if (part == 0)
      throw InvalidInput("cycle type parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType::CycleType(std::initializer_list<std::size_t> parts)
    : CycleType(std::vector<std::size_t>(parts)) {}

CycleType CycleType::uniform(std::size_t b, std::size_t q) {
  if (b == 0 || q == 0)
    throw InvalidInput("uniform cycle type needs b, q >= 1");
  return CycleType(std::vector<std::size_t>(q, b));
}

namespace {

std::size_t parse_positive(std::string_view token, std::string_view context) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value == 0)
    throw InvalidInput("bad number '" + std::string(token) + "' in '" +
                       std::string(context) + "'");
  return value;
}

} // namespace

CycleType CycleType::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ',' || c == '{' || c == '}')
      cleaned.push_back(' ');
    else
      cleaned.push_back(c);
  }
  std::vector<std::size_t> parts;
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    auto caret = token.find('^');
    if (caret == std::string::npos) {
      parts.push_back(parse_positive(token, text));
      continue;
    }
    std::size_t base = parse_positive(std::string_view(token).substr(0, caret), text);
    std::size_t exponent = parse_positive(std::string_view(token).substr(caret + 1), text);
    parts.insert(parts.end(), exponent, base);
  }
  if (parts.empty())
    throw InvalidInput("empty cycle type '" + std::string(text) + "'");
  return CycleType(std::move(parts));
}

std::size_t CycleType::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

bool CycleType::is_uniform() const {
  return std::adjacent_find(parts_.begin(), parts_.end(), std::not_equal_to<>()) ==
         parts_.end();
}

std::size_t CycleType::multiplicity(std::size_t part) const {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), part));
}

std::string CycleType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i])
      ++j;
    if (!out.empty())
      out.push_back(' ');
    out += std::to_string(parts_[i]);
    if (j - i > 1)
      out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point image : images) {
    if (image >= images.size() || seen[image])
      throw InvalidInput("images do not form a bijection");
    seen[image] = true;
  }
  return Permutation(std::move(images), true);
}

Permutation Permutation::standard_cycle(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>((i + 1) % degree);
  return Permutation(std::move(images), true);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a >= degree)
        throw InvalidInput("point " + std::to_string(a + 1) + " exceeds degree " +
                           std::to_string(degree));
      if (used[a])
        throw InvalidInput("point " + std::to_string(a + 1) + " repeated");
      used[a] = true;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images), true);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::vector<Point> cycle;
    for (Point e = start; !seen[e]; e = images_[e]) {
      seen[e] = true;
      cycle.push_back(e);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::size_t len = 0;
    for (Point e = start; !seen[e]; e = images_[e]) {
      seen[e] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(std::move(lengths));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  const CycleType ct = cycle_type();
  for (std::size_t len : ct.parts())
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::size_t Permutation::support_size() const {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    moved += images_[i] != i;
  return moved;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw InvalidInput("degree mismatch in compose: " + std::to_string(p.degree()) +
                       " vs " + std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (Point e = 0; e < images.size(); ++e)
    images[e] = p(q(e));
  return Permutation(std::move(images), true);
}

Permutation inverse(const Permutation &p) {
  std::vector<Point> images(p.degree());
  for (Point e = 0; e < images.size(); ++e)
    images[p(e)] = e;
  return Permutation(std::move(images), true);
}

Permutation power(const Permutation &p, long long k) {
  const long long order = static_cast<long long>(p.order());
  long long r = ((k % order) + order) % order;
  std::vector<Point> images(p.degree());
  // Walk each cycle once instead of multiplying r times.
  for (const auto &cycle : p.cycles()) {
    const std::size_t len = cycle.size();
    const std::size_t shift = static_cast<std::size_t>(r % static_cast<long long>(len));
    for (std::size_t i = 0; i < len; ++i)
      images[cycle[i]] = cycle[(i + shift) % len];
  }
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation &p, const Permutation &g) {
  if (p.degree() != g.degree())
    throw InvalidInput("degree mismatch in conjugate");
  // (g p g^-1)(g(e)) = g(p(e))
  std::vector<Point> images(p.degree());
  for (Point e = 0; e < images.size(); ++e)
    images[g(e)] = g(p(e));
  return Permutation(std::move(images), true);
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  if (i == text.size())
    throw InvalidInput("empty cycle text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw InvalidInput("expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i == text.size())
        throw InvalidInput("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw InvalidInput("unexpected character '" + std::string(1, text[i]) +
                           "' in '" + std::string(text) + "'");
      std::size_t value = 0;
      std::from_chars(text.data() + start, text.data() + i, value);
      if (value == 0 || value > degree)
        throw InvalidInput("point " + std::to_string(value) + " outside 1.." +
                           std::to_string(degree));
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string print_cycles(const Permutation &p) {
  std::string out;
  for (const auto &cycle : p.cycles()) {
    if (cycle.size() < 2)
      continue;
    out.push_back('(');
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        out.push_back(' ');
      out += std::to_string(cycle[i] + 1);
    }
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

Permutation canonical_of_cycle_type(const CycleType &ct) {
  std::vector<std::vector<Point>> cycles;
  Point next = 0;
  for (std::size_t len : ct.parts()) {
    std::vector<Point> cycle(len);
    std::iota(cycle.begin(), cycle.end(), next);
    next += static_cast<Point>(len);
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(ct.size(), cycles);
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Point e : p.images()) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace dforge

#include "dforge/passport.hpp"

#include <algorithm>
#include <tuple>

#include "dforge/counting.hpp"
#include "dforge/error.hpp"

namespace dforge {

std::size_t genus(const CycleType &black, const CycleType &white, const CycleType &face) {
  const std::size_t n = black.size();
  if (white.size() != n || face.size() != n)
    throw InvalidPassport("passport partitions have different sizes " + std::to_string(n) +
                          ", " + std::to_string(white.size()) + ", " +
                          std::to_string(face.size()));
  if (n == 0)
    throw InvalidPassport("passport of degree 0");
  const std::size_t lengths = black.length() + white.length() + face.length();
  if (lengths > n + 2)
    throw InvalidPassport("negative genus: l0 + l1 + l_inf = " + std::to_string(lengths) +
                          " > n + 2 = " + std::to_string(n + 2));
  if ((n + 2 - lengths) % 2 != 0)
    throw InvalidPassport("genus is not an integer: n - (l0 + l1 + l_inf) is odd");
  return (n + 2 - lengths) / 2;
}

Passport::Passport(CycleType black, CycleType white, CycleType face)
    : black_(std::move(black)), white_(std::move(white)), face_(std::move(face)) {
  genus_ = dforge::genus(black_, white_, face_);
}

Passport Passport::parse(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && (body.front() == ' ' || body.front() == '['))
    body.remove_prefix(1);
  while (!body.empty() && (body.back() == ' ' || body.back() == ']' || body.back() == '\n'))
    body.remove_suffix(1);
  if (text.find('[') == std::string_view::npos || text.find(']') == std::string_view::npos)
    throw InvalidInput("passport must be bracketed, e.g. [6,3^2,6]: '" + std::string(text) + "'");

  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      fields.push_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  if (fields.size() != 3)
    throw InvalidInput("passport needs three comma-separated partitions: '" +
                       std::string(text) + "'");
  return Passport(CycleType::parse(fields[0]), CycleType::parse(fields[1]),
                  CycleType::parse(fields[2]));
}

const CycleType &Passport::at(std::size_t role) const {
  switch (role) {
  case 0:
    return black_;
  case 1:
    return white_;
  case 2:
    return face_;
  }
  throw InvalidInput("passport role must be 0, 1 or 2");
}

bool Passport::is_uniform() const {
  return black_.is_uniform() && white_.is_uniform() && face_.is_uniform();
}

bool Passport::is_tree() const {
  return black_.length() == 1 || white_.length() == 1 || face_.length() == 1;
}

std::string Passport::to_string() const {
  return "[" + black_.to_string() + "," + white_.to_string() + "," + face_.to_string() + "]";
}

std::vector<UniformPassport> uniform_passports(std::size_t n) {
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0)
      divisors.push_back(d);
  }
  // Valencies as a multiset {lo <= mid <= hi}; written [mid, lo, hi] so that
  // c >= a >= b.
  std::vector<UniformPassport> out;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    for (std::size_t j = i; j < divisors.size(); ++j) {
      for (std::size_t k = j; k < divisors.size(); ++k) {
        const std::size_t lo = divisors[i], mid = divisors[j], hi = divisors[k];
        const std::size_t lengths = n / lo + n / mid + n / hi;
        if (lengths > n + 2 || (n + 2 - lengths) % 2 != 0)
          continue;
        Passport p(CycleType::uniform(mid, n / mid), CycleType::uniform(lo, n / lo),
                   CycleType::uniform(hi, n / hi));
        out.push_back({p, p.genus()});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const UniformPassport &l, const UniformPassport &r) {
    auto key = [](const UniformPassport &u) {
      return std::make_tuple(u.genus, u.passport.black().largest(),
                             u.passport.white().largest(), u.passport.face().largest());
    };
    return key(l) < key(r);
  });
  return out;
}

namespace {

void partitions_rec(std::size_t remaining, std::size_t max_part, std::vector<std::size_t> &cur,
                    std::vector<CycleType> &out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<CycleType> partitions_of(std::size_t n) {
  std::vector<CycleType> out;
  std::vector<std::size_t> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Passport> all_passports(std::size_t n) {
  const auto parts = partitions_of(n);
  std::vector<Passport> out;
  for (const auto &a : parts) {
    for (const auto &b : parts) {
      for (const auto &c : parts) {
        const std::size_t lengths = a.length() + b.length() + c.length();
        if (lengths > n + 2 || (n + 2 - lengths) % 2 != 0)
          continue;
        out.emplace_back(a, b, c);
      }
    }
  }
  return out;
}

std::vector<Passport> passports_up_to_roles(std::size_t n) {
  const auto parts = partitions_of(n);
  std::vector<mpz_class> sizes;
  for (const auto &p : parts)
    sizes.push_back(class_size(p));
  std::vector<Passport> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      for (std::size_t k = j; k < parts.size(); ++k) {
        const std::size_t lengths = parts[i].length() + parts[j].length() + parts[k].length();
        if (lengths > n + 2 || (n + 2 - lengths) % 2 != 0)
          continue;
        std::array<std::size_t, 3> idx{i, j, k};
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t l, std::size_t r) { return sizes[l] < sizes[r]; });
        // The enumerator fixes x and backtracks over y: y gets the smallest class.
        out.emplace_back(parts[idx[2]], parts[idx[0]], parts[idx[1]]);
      }
    }
  }
  return out;
}

} // namespace dforge

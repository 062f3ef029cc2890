#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dforge/perm.hpp"

namespace dforge {

/// A positive word over {x, y} such as "xyxyx^4yx^3yx" (braced exponents
/// "x^{4}" are accepted too).
struct GroupWord {
  struct Letter {
    char generator; ///< 'x' or 'y'
    unsigned exponent;
    friend bool operator==(const Letter &, const Letter &) = default;
  };
  std::vector<Letter> letters;

  static GroupWord parse(std::string_view text);
  std::string to_string() const;
  std::size_t length() const; ///< sum of exponents

  friend bool operator==(const GroupWord &, const GroupWord &) = default;
};

/// The product l1 l2 ... lk under the library's composition, so the
/// rightmost letter acts first.
Permutation evaluate_word(const GroupWord &w, const Permutation &x, const Permutation &y);

} // namespace dforge

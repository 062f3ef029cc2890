#pragma once

#include <cstddef>
#include <string>

#include "dforge/perm.hpp"

namespace dforge::detail {

/// Writes the canonical (x', y') images as 2n bytes into `key`. Requires
/// n <= 256 and <x, y> transitive.
void canonical_key(const Point *x, const Point *y, std::size_t n, std::string &key);

/// Inverse of canonical_key's encoding.
void decode_key(const std::string &key, std::size_t n, std::vector<Point> &x,
                std::vector<Point> &y);

} // namespace dforge::detail

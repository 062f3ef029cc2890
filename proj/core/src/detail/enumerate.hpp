#pragma once

#include <functional>

#include "dforge/dessin.hpp"

namespace dforge::detail {

/// Leaf callback on raw image arrays (valid only during the call).
using RawVisit = std::function<bool(const Point *x, const Point *y)>;

/// for_each_dessin without building Dessin objects; `make_visit(worker)` gives
/// every worker thread its own callback, so no locking is done here.
bool for_each_raw(const Passport &p, const std::function<RawVisit(unsigned)> &make_visit,
                  const EnumerateOptions &options);

} // namespace dforge::detail

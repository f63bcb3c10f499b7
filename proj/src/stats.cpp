#include "mfc/stats.hpp"

#include <algorithm>
#include <cmath>

#include "mfc/errors.hpp"

namespace mfc {

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InputError("quantile of empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw InputError("quantile q out of [0,1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
  if (lo == hi) return values[lo];
  const double f = pos - static_cast<double>(lo);
  return values[lo] + f * (values[hi] - values[lo]);
}

}  // namespace mfc

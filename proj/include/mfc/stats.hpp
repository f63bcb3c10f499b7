#pragma once

#include <vector>

namespace mfc {

// Linear-interpolation quantile of the values, q in [0, 1]. Throws
// InputError on an empty input.
double quantile(std::vector<double> values, double q);

}  // namespace mfc

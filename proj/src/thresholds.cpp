#include "mfc/thresholds.hpp"

#include <cmath>
#include <string>

#include "mfc/errors.hpp"

namespace mfc {

double& ThresholdConfig::threshold(int index) {
  double* slots[] = {&t1,  &t2,  &t3,  &t4,  &t5,  &t6,  &t7,  &t8,  &t9,
                     &t10, &t11, &t12, &t13, &t14, &t15, &t16, &t17, &t18,
                     &t19, &t20, &t21, &t22, &t23, &t24, &t25, &t26};
  if (index < 1 || index > 26)
    throw ConfigError("threshold index t" + std::to_string(index) +
                      " out of range");
  return *slots[index - 1];
}

const double& ThresholdConfig::threshold(int index) const {
  return const_cast<ThresholdConfig*>(this)->threshold(index);
}

void ThresholdConfig::validate() const {
  for (int i = 1; i <= 26; ++i)
    if (!std::isfinite(threshold(i)))
      throw ConfigError("t" + std::to_string(i) + " is not finite");
  if (!(t2 > 0.0 && t2 <= 1.0))
    throw ConfigError("t2 must lie in (0, 1]");
  if (guided_radius < 1) throw ConfigError("guided_radius must be >= 1");
  if (!(guided_epsilon > 0.0) || !std::isfinite(guided_epsilon))
    throw ConfigError("guided_epsilon must be positive");
}

}  // namespace mfc

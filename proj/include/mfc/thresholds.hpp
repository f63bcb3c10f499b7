#pragma once

namespace mfc {

// The full t1..t26 threshold vector plus the guided-filter constants, with
// the recommended defaults. See README for the role of each entry.
struct ThresholdConfig {
  // rough cloud mask: HOT > t1, VBR > t2, red > t3
  double t1 = 0.13;
  double t2 = 0.7;
  double t3 = 0.07;
  // water test: (NDVI < t4 and NIR < t5) or (NDVI < t6 and NIR < t7)
  double t4 = 0.15;
  double t5 = 0.2;
  double t6 = 0.2;
  double t7 = 0.15;
  // cloud refinement: filtered > t8 and (HOT > t9 or water)
  double t8 = 0.12;
  double t9 = 0.08;
  // cloud object filter: area exemption t10, FRAC t11, LWR t12,
  // small-object pair (t13, t14)
  double t10 = 4e4;
  double t11 = 1.56;
  double t12 = 6.3;
  double t13 = 4e3;
  double t14 = 5.4;
  // texture decision rule margins
  double t15 = 0.02;
  double t16 = 0.10;
  double t17 = 0.02;
  double t18 = 0.03;
  // shadow extraction (t19 land, t20 water), refinement t21, and the
  // shadow object filter t22..t26
  double t19 = 0.06;
  double t20 = 0.01;
  double t21 = 0.27;
  double t22 = 1.56;
  double t23 = 4e4;
  double t24 = 6.3;
  double t25 = 400;
  double t26 = 5.4;

  int guided_radius = 60;
  double guided_epsilon = 1e-6;

  // Readability aliases.
  double segment() const { return t8; }
  double hot_refine() const { return t9; }

  double& threshold(int index);              // 1-based access to t1..t26
  const double& threshold(int index) const;

  void validate() const;  // throws ConfigError
};

}  // namespace mfc

#include "mfc/guided_filter.hpp"

#include <cmath>

#include "mfc/box_filter.hpp"
#include "mfc/errors.hpp"
#include "mfc/parallel.hpp"
#include "mfc/spectral.hpp"

namespace mfc {

namespace {

// Solves (symmetric positive definite) A x = rhs for 3x3 A via Cholesky.
// A is given by its lower triangle {a00, a10, a11, a20, a21, a22}.
std::array<double, 3> solve_spd3(const std::array<double, 6>& A,
                                 const std::array<double, 3>& rhs) {
  constexpr double kFloor = 1e-300;
  const double l00 = std::sqrt(std::max(A[0], kFloor));
  const double l10 = A[1] / l00;
  const double l20 = A[3] / l00;
  const double l11 = std::sqrt(std::max(A[2] - l10 * l10, kFloor));
  const double l21 = (A[4] - l20 * l10) / l11;
  const double l22 =
      std::sqrt(std::max(A[5] - l20 * l20 - l21 * l21, kFloor));

  const double y0 = rhs[0] / l00;
  const double y1 = (rhs[1] - l10 * y0) / l11;
  const double y2 = (rhs[2] - l20 * y0 - l21 * y1) / l22;

  std::array<double, 3> x;
  x[2] = y2 / l22;
  x[1] = (y1 - l21 * x[2]) / l11;
  x[0] = (y0 - l10 * x[1] - l20 * x[2]) / l00;
  return x;
}

GrayImage product(const GrayImage& a, const GrayImage& b) {
  GrayImage out(a.width(), a.height());
  parallel_for(0, static_cast<int>(a.size()), [&](int i) { out[i] = a[i] * b[i]; });
  return out;
}

}  // namespace

GrayImage guided_filter(const std::array<const GrayImage*, 3>& guide,
                        const GrayImage& input, int radius, double epsilon,
                        const BinaryImage* valid) {
  const int w = input.width(), h = input.height();
  for (const GrayImage* g : guide)
    if (!g->same_dims(input))
      throw InputError("dimension mismatch: guide vs input");
  if (valid && !valid->same_dims(input))
    throw InputError("dimension mismatch: valid vs input");
  if (radius < 1) throw InputError("guided radius must be >= 1");
  if (!(epsilon > 0)) throw InputError("guided epsilon must be positive");
  if (input.empty()) return input;

  // Masked planes; invalid pixels contribute nothing to window statistics.
  GrayImage weight(w, h, 1.0);
  GrayImage p = input;
  std::array<GrayImage, 3> g;
  for (int c = 0; c < 3; ++c) g[c] = *guide[c];
  if (valid) {
    parallel_for(0, static_cast<int>(p.size()), [&](int i) {
      if (!(*valid)[i]) {
        weight[i] = 0.0;
        p[i] = 0.0;
        g[0][i] = g[1][i] = g[2][i] = 0.0;
      }
    });
  }

  const GrayImage n = valid ? box_sum(weight, radius) : box_count(w, h, radius);
  const GrayImage sum_p = box_sum(p, radius);
  std::array<GrayImage, 3> sum_g, sum_gp;
  std::array<GrayImage, 6> sum_gg;  // lower triangle {00,10,11,20,21,22}
  for (int c = 0; c < 3; ++c) {
    sum_g[c] = box_sum(g[c], radius);
    sum_gp[c] = box_sum(product(g[c], p), radius);
  }
  constexpr int kRow[6] = {0, 1, 1, 2, 2, 2};
  constexpr int kCol[6] = {0, 0, 1, 0, 1, 2};
  for (int t = 0; t < 6; ++t)
    sum_gg[t] = box_sum(product(g[kRow[t]], g[kCol[t]]), radius);

  // Per-window affine coefficients.
  std::array<GrayImage, 3> coeff_a;
  for (auto& c : coeff_a) c = GrayImage(w, h, 0.0);
  GrayImage coeff_b(w, h, 0.0);

  parallel_for(0, h, [&](int y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = p.index(x, y);
      const double nk = n[i];
      if (nk < 0.5) continue;  // window holds no valid pixels
      std::array<double, 3> mu;
      for (int c = 0; c < 3; ++c) mu[c] = sum_g[c][i] / nk;
      const double pbar = sum_p[i] / nk;
      std::array<double, 3> cov;
      for (int c = 0; c < 3; ++c) cov[c] = sum_gp[c][i] / nk - mu[c] * pbar;
      std::array<double, 6> var;
      for (int t = 0; t < 6; ++t)
        var[t] = sum_gg[t][i] / nk - mu[kRow[t]] * mu[kCol[t]];
      var[0] += epsilon;
      var[2] += epsilon;
      var[5] += epsilon;
      const auto a = solve_spd3(var, cov);
      for (int c = 0; c < 3; ++c) coeff_a[c][i] = a[c];
      coeff_b[i] = pbar - (a[0] * mu[0] + a[1] * mu[1] + a[2] * mu[2]);
    }
  });

  // Average the coefficients of every window covering each pixel. Windows
  // exist for all pixels, so the denominator is the cropped window count.
  const GrayImage cnt = box_count(w, h, radius);
  std::array<GrayImage, 3> abar;
  for (int c = 0; c < 3; ++c) abar[c] = box_sum(coeff_a[c], radius);
  GrayImage bbar = box_sum(coeff_b, radius);

  GrayImage q(w, h);
  parallel_for(0, h, [&](int y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = q.index(x, y);
      const double c = cnt[i];
      q[i] = (abar[0][i] / c) * (*guide[0])[i] +
             (abar[1][i] / c) * (*guide[1])[i] +
             (abar[2][i] / c) * (*guide[2])[i] + bbar[i] / c;
    }
  });
  return q;
}

BinaryImage refine_cloud_mask(const Scene& s, const BinaryImage& rough,
                              const BinaryImage& water,
                              const ThresholdConfig& cfg) {
  return refine_cloud_mask(s, rough, water, hot(s), cfg);
}

BinaryImage refine_cloud_mask(const Scene& s, const BinaryImage& rough,
                              const BinaryImage& water,
                              const GrayImage& hot_plane,
                              const ThresholdConfig& cfg) {
  s.check_consistent();
  if (!rough.same_dims(s.valid) || !water.same_dims(s.valid) ||
      !hot_plane.same_dims(s.valid))
    throw InputError("dimension mismatch: refine_cloud_mask inputs");

  GrayImage in(s.width(), s.height(), 0.0);
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = rough[i] ? 1.0 : 0.0;
  const GrayImage filtered =
      guided_filter({&s.b3, &s.b2, &s.b1}, in, cfg.guided_radius,
                    cfg.guided_epsilon, &s.valid);

  BinaryImage out(s.width(), s.height(), 0);
  const int w = s.width();
  parallel_for(0, s.height(), [&](int y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = out.index(x, y);
      if (!s.valid[i]) continue;
      const bool added = filtered[i] > cfg.segment() &&
                         (hot_plane[i] > cfg.hot_refine() || water[i]);
      out[i] = rough[i] || added;  // core detections are never dropped
    }
  });
  return out;
}

}  // namespace mfc

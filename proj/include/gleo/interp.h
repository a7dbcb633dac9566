#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>

#include "gleo/tensor.h"

namespace gleo {

/// Bilinear tap decomposition of a continuous sample position.
struct BilinearTaps {
  int x0, y0;      // floor corner
  double fx, fy;   // fractional offsets in [0,1)
};

inline BilinearTaps bilinear_taps(double sx, double sy) {
  const double fx0 = std::floor(sx);
  const double fy0 = std::floor(sy);
  return {static_cast<int>(fx0), static_cast<int>(fy0), sx - fx0, sy - fy0};
}

/// Sample an {H,W} map at a continuous position; out-of-bounds taps read 0.
inline double bilinear_sample_zero(const double* m, int h, int w, double sx,
                                   double sy) {
  const BilinearTaps t = bilinear_taps(sx, sy);
  auto fetch = [&](int x, int y) -> double {
    if (x < 0 || y < 0 || x >= w || y >= h) return 0.0;
    return m[static_cast<std::size_t>(y) * w + x];
  };
  const double v00 = fetch(t.x0, t.y0);
  const double v10 = fetch(t.x0 + 1, t.y0);
  const double v01 = fetch(t.x0, t.y0 + 1);
  const double v11 = fetch(t.x0 + 1, t.y0 + 1);
  const double top = v00 * (1.0 - t.fx) + v10 * t.fx;
  const double bot = v01 * (1.0 - t.fx) + v11 * t.fx;
  return top * (1.0 - t.fy) + bot * t.fy;
}

/// Sample with edge clamping (used for upsampling, where the map is defined
/// everywhere by extension).
inline double bilinear_sample_clamp(const double* m, int h, int w, double sx,
                                    double sy) {
  const BilinearTaps t = bilinear_taps(sx, sy);
  auto cx = [&](int x) { return std::clamp(x, 0, w - 1); };
  auto cy = [&](int y) { return std::clamp(y, 0, h - 1); };
  const double v00 = m[static_cast<std::size_t>(cy(t.y0)) * w + cx(t.x0)];
  const double v10 = m[static_cast<std::size_t>(cy(t.y0)) * w + cx(t.x0 + 1)];
  const double v01 = m[static_cast<std::size_t>(cy(t.y0 + 1)) * w + cx(t.x0)];
  const double v11 = m[static_cast<std::size_t>(cy(t.y0 + 1)) * w + cx(t.x0 + 1)];
  const double top = v00 * (1.0 - t.fx) + v10 * t.fx;
  const double bot = v01 * (1.0 - t.fx) + v11 * t.fx;
  return top * (1.0 - t.fy) + bot * t.fy;
}

/// Source position for an output pixel under the half-pixel-center resize
/// convention: each input value is anchored at its cell center.
inline double resize_src_coord(int out_idx, int in_dim, int out_dim) {
  const double scale = static_cast<double>(in_dim) / out_dim;
  return (static_cast<double>(out_idx) + 0.5) * scale - 0.5;
}

/// Bilinear resize of {H,W} or {C,H,W} tensors, edges clamped.
Tensor upsample_bilinear_map(const Tensor& x, int out_h, int out_w);

/// Map an output pixel through m_out_to_in. Returns false when the point is
/// at infinity (|z| below 1e-12).
inline bool project_pixel(const Eigen::Matrix3d& m, double x, double y,
                          double* sx, double* sy) {
  const double z = m(2, 0) * x + m(2, 1) * y + m(2, 2);
  if (std::abs(z) < 1e-12) return false;
  *sx = (m(0, 0) * x + m(0, 1) * y + m(0, 2)) / z;
  *sy = (m(1, 0) * x + m(1, 1) * y + m(1, 2)) / z;
  return true;
}

}  // namespace gleo

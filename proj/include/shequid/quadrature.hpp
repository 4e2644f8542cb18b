#pragma once

#include <functional>

namespace shequid {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
/// Subdivides until the K15-G7 error estimate on every panel is below the
/// tolerance share. Intended for smooth integrands; max_depth bounds the
/// recursion on near-singular ridges.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol,
                                    int max_depth = 48);

}  // namespace shequid

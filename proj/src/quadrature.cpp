#include "shequid/quadrature.hpp"

#include <array>
#include <cmath>

namespace shequid {

namespace {

// Kronrod-15 abscissae on [-1, 1] (positive half) and weights; the odd
// entries are the embedded Gauss-7 nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};

constexpr std::array<double, 8> kWeightsK = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};

constexpr std::array<double, 4> kWeightsG = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double integral = 0.0;
  double error = 0.0;
};

Panel gauss_kronrod_15(const std::function<double(double)>& f, double a,
                       double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_center = f(center);

  double result_k = kWeightsK[7] * f_center;
  double result_g = kWeightsG[3] * f_center;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double sum = f(center - dx) + f(center + dx);
    result_k += kWeightsK[i] * sum;
    if (i % 2 == 1) result_g += kWeightsG[i / 2] * sum;
  }
  Panel p;
  p.integral = result_k * half;
  p.error = std::abs((result_k - result_g) * half);
  return p;
}

void refine(const std::function<double(double)>& f, double a, double b,
            double tol, int depth, QuadratureResult& out) {
  const Panel p = gauss_kronrod_15(f, a, b);
  out.evaluations += 15;
  if (p.error <= tol || depth <= 0) {
    out.value += p.integral;
    out.error_estimate += p.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  refine(f, a, mid, 0.5 * tol, depth - 1, out);
  refine(f, mid, b, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth) {
  QuadratureResult out;
  if (a == b) return out;
  refine(f, a, b, abs_tol, max_depth, out);
  return out;
}

}  // namespace shequid

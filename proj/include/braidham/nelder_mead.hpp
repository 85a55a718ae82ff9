#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace braidham {

struct NelderMeadOptions {
  double initial_step = 0.5;
  double f_target = 0.0;        // stop as soon as the best value drops below this
  double x_tolerance = 1e-14;   // simplex diameter at which a run is considered collapsed
  int max_evaluations = 20000;
  int max_rebuilds = 20;        // fresh simplices around the incumbent after a collapse
};

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x;
  double value;
  int evaluations;
};

/// Unconstrained derivative-free minimization (standard reflection /
/// expansion / contraction / shrink coefficients 1, 2, 1/2, 1/2).
/// When the simplex collapses without reaching f_target it is rebuilt around
/// the best vertex with a smaller step; a rebuild that brings no improvement
/// ends the search.
template <std::size_t N, class F>
NelderMeadResult<N> nelder_mead(F&& f, std::array<double, N> x0,
                                const NelderMeadOptions& opts = {}) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> simplex;
  std::array<double, N + 1> values;
  int evaluations = 0;

  auto eval = [&](const Point& x) {
    ++evaluations;
    return f(x);
  };

  auto build = [&](const Point& centre, double step) {
    simplex[0] = centre;
    values[0] = eval(centre);
    for (std::size_t i = 0; i < N; ++i) {
      simplex[i + 1] = centre;
      simplex[i + 1][i] += step;
      values[i + 1] = eval(simplex[i + 1]);
    }
  };

  auto affine = [](const Point& a, const Point& b, double t) {
    // a + t (b - a)
    Point out;
    for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  double step = opts.initial_step;
  build(x0, step);
  double best_before_rebuild = values[0];

  for (int rebuild = 0;; ++rebuild) {
    while (evaluations < opts.max_evaluations) {
      std::array<std::size_t, N + 1> order;
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
      {
        auto s = simplex;
        auto v = values;
        for (std::size_t i = 0; i <= N; ++i) {
          simplex[i] = s[order[i]];
          values[i] = v[order[i]];
        }
      }
      if (values[0] < opts.f_target) break;

      double diameter = 0.0;
      for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 0; j < N; ++j)
          diameter = std::max(diameter, std::abs(simplex[i][j] - simplex[0][j]));
      if (diameter < opts.x_tolerance) break;

      Point centroid{};
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) centroid[j] += simplex[i][j] / static_cast<double>(N);

      const Point& worst = simplex[N];
      const Point reflected = affine(centroid, worst, -1.0);
      const double f_reflected = eval(reflected);

      if (f_reflected < values[0]) {
        const Point expanded = affine(centroid, worst, -2.0);
        const double f_expanded = eval(expanded);
        if (f_expanded < f_reflected) {
          simplex[N] = expanded;
          values[N] = f_expanded;
        } else {
          simplex[N] = reflected;
          values[N] = f_reflected;
        }
        continue;
      }
      if (f_reflected < values[N - 1]) {
        simplex[N] = reflected;
        values[N] = f_reflected;
        continue;
      }

      const bool outside = f_reflected < values[N];
      const Point contracted =
          outside ? affine(centroid, reflected, 0.5) : affine(centroid, worst, 0.5);
      const double f_contracted = eval(contracted);
      if (f_contracted < std::min(f_reflected, values[N])) {
        simplex[N] = contracted;
        values[N] = f_contracted;
        continue;
      }

      for (std::size_t i = 1; i <= N; ++i) {
        simplex[i] = affine(simplex[0], simplex[i], 0.5);
        values[i] = eval(simplex[i]);
      }
    }

    const auto best = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    if (values[best] < opts.f_target || evaluations >= opts.max_evaluations ||
        rebuild >= opts.max_rebuilds ||
        (rebuild > 0 && !(values[best] < best_before_rebuild))) {
      return {simplex[best], values[best], evaluations};
    }
    best_before_rebuild = values[best];
    step *= 0.1;
    build(Point(simplex[best]), std::max(step, 1e3 * opts.x_tolerance));
  }
}

}  // namespace braidham

// SPDX-License-Identifier: Apache-2.0
//
// Globally adaptive Gauss-Kronrod 7/15 quadrature for complex-valued
// integrands on finite intervals, with an oscillation guard for integrands
// of the form (smooth) * exp(i*phase(t)).
//
// The guard pre-partitions the interval so that no initial panel is wider
// than one eighth of the shortest local phase period; plain adaptive
// bisection is notoriously happy to "converge" on an aliased answer when
// a panel straddles many oscillation cycles.  Adaptive refinement then
// runs on top of the guarded partition; max_subdivisions bounds the number
// of *additional* splits, not the initial panel count.

#ifndef UDW_QUADRATURE_HPP
#define UDW_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "udw/errors.hpp"

namespace udw {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  // Best-effort mode returns the running estimate instead of throwing when
  // the budget runs out or refinement stops paying (the error estimate is
  // still reported).  Used where cancellation puts the tolerance below the
  // attainable roundoff floor and the caller owns the accuracy policy.
  bool best_effort = false;
};

struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  double err_est = 0.0;
  long n_evals = 0;
};

/// Number of equal panels needed so that each spans at most 1/8 of an
/// oscillation period at the given maximum phase rate |d(phase)/dt|.
int guarded_panel_count(double a, double b, double max_phase_rate);

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1].
inline constexpr double kXgk15[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk15[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg7[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  std::complex<double> value;
  double err;
  long seq;  // insertion order; deterministic tie-break in the heap
};

struct PanelWorse {
  bool operator()(const Panel& p, const Panel& q) const {
    if (p.err != q.err) return p.err < q.err;
    return p.seq > q.seq;
  }
};

// One Kronrod evaluation of f over [a, b]; QUADPACK-style error estimate.
template <class F>
Panel gk15_panel(F& f, double a, double b, long seq) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);

  std::complex<double> fv1[7], fv2[7];
  const std::complex<double> fc = f(c);
  std::complex<double> resg = kWg7[3] * fc;
  std::complex<double> resk = kWgk15[7] * fc;
  double resabs = kWgk15[7] * std::abs(fc);

  for (int j = 0; j < 7; ++j) {
    const double dx = hl * kXgk15[j];
    fv1[j] = f(c - dx);
    fv2[j] = f(c + dx);
    const std::complex<double> fsum = fv1[j] + fv2[j];
    if (j % 2 == 1) resg += kWg7[j / 2] * fsum;
    resk += kWgk15[j] * fsum;
    resabs += kWgk15[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
  }

  const std::complex<double> reskh = resk * 0.5;
  double resasc = kWgk15[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk15[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  resabs *= std::abs(hl);
  resasc *= std::abs(hl);
  double err = std::abs(resk - resg) * std::abs(hl);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / eps50)
    err = std::max(err, eps50 * resabs);

  return Panel{a, b, resk * hl, err, seq};
}

}  // namespace detail

/// Adaptive integral of a complex-valued f over [a, b].  max_phase_rate is
/// the caller's bound on |d(phase)/dt| of the integrand's oscillatory factor
/// (0 disables the guard).  Throws AccuracyError if the subdivision budget
/// runs out before the tolerance is met.
template <class F>
QuadResult integrate_oscillatory(F&& f, double a, double b,
                                 const QuadratureSpec& spec = {},
                                 double max_phase_rate = 0.0) {
  QuadResult out;
  if (a == b) return out;

  const int n0 = guarded_panel_count(a, b, max_phase_rate);
  std::vector<detail::Panel> heap;
  heap.reserve(static_cast<size_t>(n0) + 64);

  long seq = 0;
  const double w = (b - a) / n0;
  for (int i = 0; i < n0; ++i) {
    const double pa = a + i * w;
    const double pb = (i + 1 == n0) ? b : a + (i + 1) * w;
    heap.push_back(detail::gk15_panel(f, pa, pb, seq++));
  }
  out.n_evals = 15L * n0;
  std::make_heap(heap.begin(), heap.end(), detail::PanelWorse{});

  auto totals = [&heap](std::complex<double>& v, double& e) {
    v = 0.0;
    e = 0.0;
    for (const auto& p : heap) {
      v += p.value;
      e += p.err;
    }
  };

  std::complex<double> val;
  double err;
  totals(val, err);

  int splits = 0;
  int stagnant = 0;
  while (true) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(val));
    if (err <= tol) break;
    if (splits >= spec.max_subdivisions) {
      if (spec.best_effort) break;
      throw AccuracyError("quadrature: subdivision budget exhausted", err);
    }
    // Once every panel error is roundoff-dominated, further splitting cannot
    // reduce the estimate; stop rather than burn the whole budget.
    if (spec.best_effort && stagnant >= 8) break;

    std::pop_heap(heap.begin(), heap.end(), detail::PanelWorse{});
    detail::Panel worst = heap.back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // cannot refine further
    heap.pop_back();

    heap.push_back(detail::gk15_panel(f, worst.a, mid, seq++));
    std::push_heap(heap.begin(), heap.end(), detail::PanelWorse{});
    heap.push_back(detail::gk15_panel(f, mid, worst.b, seq++));
    std::push_heap(heap.begin(), heap.end(), detail::PanelWorse{});
    out.n_evals += 30;
    ++splits;
    const double err_before = err;
    totals(val, err);
    stagnant = (err > 0.999 * err_before) ? stagnant + 1 : 0;
  }

  // Deterministic final reduction: sum left-to-right regardless of the
  // refinement order the heap happened to take.
  std::sort(heap.begin(), heap.end(),
            [](const detail::Panel& p, const detail::Panel& q) { return p.a < q.a; });
  totals(val, err);
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(val));
  if (err > tol && !spec.best_effort)
    throw AccuracyError("quadrature: tolerance not met (interval too hard)", err);
  out.value = val;
  out.err_est = err;
  return out;
}

/// Real-valued convenience wrapper.
template <class F>
QuadResult integrate_real(F&& f, double a, double b,
                          const QuadratureSpec& spec = {},
                          double max_phase_rate = 0.0) {
  auto g = [&f](double t) { return std::complex<double>(f(t), 0.0); };
  return integrate_oscillatory(g, a, b, spec, max_phase_rate);
}

}  // namespace udw

#endif  // UDW_QUADRATURE_HPP

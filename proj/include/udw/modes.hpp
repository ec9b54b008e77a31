// SPDX-License-Identifier: Apache-2.0
//
// Dirichlet cavity mode bases for the two experiments.
//
// Four families, all Klein-Gordon orthonormal in their native chart:
//   StaticCavity          u_n(x)  = sin(n pi (x-x1)/L) / sqrt(L w_n),
//                         w_n = sqrt((n pi / L)^2 + m^2), lab chart
//   ConformalMassless     v_n(z)  = sin(n pi (z-z1)/L') / sqrt(n pi),
//                         w_n = n pi / L', conformal Rindler chart
//   RindlerMasslessDirect v_n(xi) = sin(w_n log(xi/xi1)) / sqrt(n pi),
//                         w_n = n pi / log(xi2/xi1), Rindler chart
//   RindlerMassive        v_n(xi) = A_n [ReI_{iw}(m xi1) K_{iw}(m xi)
//                                        - ReI_{iw}(m xi) K_{iw}(m xi1)],
//                         w_n the roots of the same bracket at xi = xi2,
//                         normalized by 2 w_n int (dxi/xi) v_n^2 = 1.
// ConformalMassless and RindlerMasslessDirect describe the same physical
// modes (z - z1 = log(xi/xi1)/a, L' = log(xi2/xi1)/a); both are provided so
// either chart can drive the response integrals.
//
// Sign convention: the first lobe (adjacent to the lower wall) is positive.

#ifndef UDW_MODES_HPP
#define UDW_MODES_HPP

#include <vector>

#include "udw/errors.hpp"

namespace udw {

enum class ModeKind {
  StaticCavity,
  ConformalMassless,
  RindlerMasslessDirect,
  RindlerMassive,
};

/// First N Dirichlet eigenfrequencies of the massive field between Rindler
/// wedges xi1 < xi2 (m > 0).  Scans the mode bracket in steps of at most a
/// quarter of the asymptotic spacing pi/log(xi2/xi1), bisects each sign
/// change to 1e-10 absolute, and cross-checks the count against the
/// asymptotic density (SpectrumError if roots appear to have been missed).
/// Results are memoized in-process; if the environment variable
/// UDW_CACHE_DIR names a writable directory, they are also cached on disk.
std::vector<double> rindler_massive_spectrum(double xi1, double xi2, double m,
                                             int N);

class ModeFamily {
 public:
  /// Empty family (size 0); assign from a factory before use.
  ModeFamily() = default;

  static ModeFamily static_cavity(double x1, double L, double m, int N);
  static ModeFamily conformal_massless(double zeta1, double Lprime, int N);
  static ModeFamily rindler_massless_direct(double xi1, double xi2, int N);
  static ModeFamily rindler_massive(double xi1, double xi2, double m, int N);

  ModeKind kind() const { return kind_; }
  int size() const { return static_cast<int>(omegas_.size()); }
  double mass() const { return m_; }
  /// Cavity walls in the family's native coordinate (x, zeta, or xi).
  double wall_lo() const { return lo_; }
  double wall_hi() const { return hi_; }

  /// Mode frequency conjugate to the native time coordinate; n is 1-based.
  double omega(int n) const;
  const std::vector<double>& omegas() const { return omegas_; }

  /// Mode function at native coordinate q.  The closed forms extend smoothly
  /// a little past the walls; support restriction is the caller's job.
  double profile(int n, double q) const;

 private:
  void check_index(int n) const;

  ModeKind kind_ = ModeKind::StaticCavity;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double m_ = 0.0;
  std::vector<double> omegas_;
  // Per-mode data for RindlerMassive: signed normalization A_n and the
  // scaled Bessel pair at the rear wall (the xi-independent coefficients).
  struct MassiveCoef {
    double amp;
    double i1;
    double k1;
  };
  std::vector<MassiveCoef> massive_;
};

/// Klein-Gordon inner product (w_a + w_b) int mu(q) u_a(q) u_b(q) dq with the
/// family's native measure (dx, dzeta, or dxi/xi).  ~delta_ab for any family.
double kg_inner_product(const ModeFamily& fam, int na, int nb);

// Closed forms, usable without a family object.
double static_mode(int n, double x, double x1, double L, double m);
double conformal_mode(int n, double zeta, double zeta1, double Lprime);
double rindler_massless_mode_direct(int n, double xi, double xi1, double xi2);
/// RindlerMassive profile via a prebuilt family (needs spectrum + norms).
double rindler_massive_mode(const ModeFamily& fam, int n, double xi);

}  // namespace udw

#endif  // UDW_MODES_HPP

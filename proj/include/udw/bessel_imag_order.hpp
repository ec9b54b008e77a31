// SPDX-License-Identifier: Apache-2.0
//
// Modified Bessel functions of purely imaginary order: K_{i nu}(x) and
// Re I_{i nu}(x) for real nu >= 0, x > 0.  Both are real-valued; they form
// the solution basis of x^2 f'' + x f' + (nu^2 - x^2) f = 0 and carry the
// Wronskian Re I'_{i nu} K_{i nu} - Re I_{i nu} K'_{i nu} = 1/x.
//
// Two evaluation routes, switched on the (nu, x) regime:
//   * integral representations
//       K_{i nu}(x)    = int_0^inf e^{-x cosh t} cos(nu t) dt
//       Re I_{i nu}(x) = (1/pi) int_0^pi e^{x cos th} cosh(nu th) dth
//                        - (sinh(nu pi)/pi) int_0^inf e^{-x cosh t} sin(nu t) dt
//     safe for K when x >~ nu pi/2 (and for nu ~ 0); the tails are cut where
//     the envelope drops to 1e-18 of its peak.
//   * the ascending power series of I_{i nu}(x) summed in scaled form
//       e^{-nu pi/2} I_{i nu}(x) = phat * S,   S = sum_k (x^2/4)^k / (k! prod_{j<=k}(j + i nu))
//     with |Gamma(1 + i nu)| from |Gamma(1+i nu)|^2 = nu pi / sinh(nu pi) and
//     arg Gamma from a shifted Stirling sum.  K follows from
//     K_{i nu} = -pi Im I_{i nu} / sinh(nu pi).  This route covers the deep
//     oscillatory regime x << nu where the integral representation loses all
//     significant digits to cancellation.
//
// The e^{-+ nu pi/2} scaled pair is exposed separately: the cavity mode
// bracket ReI(x1)K(x) - ReI(x)K(x1) is scale-invariant, and for the mode
// solver's regimes (nu up to ~3e4) the unscaled values over/underflow double
// range even though the bracket is perfectly representable.

#ifndef UDW_BESSEL_IMAG_ORDER_HPP
#define UDW_BESSEL_IMAG_ORDER_HPP

#include "udw/errors.hpp"

namespace udw {

struct ImOrderEval {
  double nu = 0.0;
  double x = 0.0;
  double value = 0.0;
  double abs_err_est = 0.0;
};

/// K_{i nu}(x). Throws DomainError for x <= 0 and AccuracyError if the
/// estimated relative accuracy is worse than 1e-6.
double bessel_k_im(double nu, double x);
ImOrderEval bessel_k_im_ev(double nu, double x);

/// Re I_{i nu}(x). Same error contract; additionally throws DomainError when
/// the true value exceeds double range (use bessel_scaled_pair instead).
double bessel_rei_im(double nu, double x);
ImOrderEval bessel_rei_im_ev(double nu, double x);

/// Scaled pair { e^{-nu pi/2} Re I_{i nu}(x), e^{+nu pi/2} K_{i nu}(x) }.
/// Products like ihat(x1)*khat(x2) equal their unscaled counterparts exactly.
struct ScaledImOrderPair {
  double ihat = 0.0;
  double khat = 0.0;
};
ScaledImOrderPair bessel_scaled_pair(double nu, double x);

enum class ImOrderFn { K, ReI };

/// |x^2 f'' + x f' + (nu^2 - x^2) f| / max(|f|, 1e-300) with 5-point central
/// differences, h = max(1e-4, 1e-4 x).  Validation helper, not a physics path.
double ode_residual(double nu, double x, ImOrderFn f);

namespace detail {
/// log |Gamma(1 + i nu)| and arg Gamma(1 + i nu); exposed for tests.
struct LogGamma1PlusINu {
  double log_mod;
  double arg;
};
LogGamma1PlusINu loggamma_1_plus_inu(double nu);
}  // namespace detail

}  // namespace udw

#endif  // UDW_BESSEL_IMAG_ORDER_HPP

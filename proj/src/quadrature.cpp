// SPDX-License-Identifier: Apache-2.0

#include "udw/quadrature.hpp"

#include <cmath>

namespace udw {

int guarded_panel_count(double a, double b, double max_phase_rate) {
  if (!(max_phase_rate > 0.0)) return 1;
  const double width = std::abs(b - a);
  // panel width <= (2*pi / rate) / 8
  const double n = std::ceil(width * max_phase_rate * 8.0 / (2.0 * M_PI));
  if (n > 5e5)
    throw AccuracyError(
        "quadrature: oscillation guard demands more than 5e5 panels", n);
  return n < 1.0 ? 1 : static_cast<int>(n);
}

}  // namespace udw

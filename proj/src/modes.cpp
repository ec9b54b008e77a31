// SPDX-License-Identifier: Apache-2.0

#include "udw/modes.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "udw/bessel_imag_order.hpp"
#include "udw/quadrature.hpp"

namespace udw {
namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw DomainError(msg);
}

// The Dirichlet determinant and mode shape both reduce to this bracket; the
// e^{-+ w pi/2} scale factors cancel between the two products, so it equals
// the unscaled ReI/K combination even where those overflow.
double det_at(double w, double m, double xi1, double xi2) {
  const ScaledImOrderPair p1 = bessel_scaled_pair(w, m * xi1);
  const ScaledImOrderPair p2 = bessel_scaled_pair(w, m * xi2);
  return p1.ihat * p2.khat - p2.ihat * p1.khat;
}

std::vector<double> compute_spectrum(double xi1, double xi2, double m, int N) {
  const double Ls = std::log(xi2 / xi1);
  auto det = [&](double w) { return det_at(w, m, xi1, xi2); };

  // Quarter of the asymptotic spacing; mode frequencies never bunch tighter
  // (the potential m^2 xi^2 only pushes them apart at the low end).
  const double step = 0.25 * M_PI / Ls;
  // In the Schroedinger form on s = log(xi/xi1) the potential m^2 xi^2 is
  // pinned between its wall values, so by eigenvalue comparison
  //   omega_n in [hypot(n pi/Ls, m xi1), hypot(n pi/Ls, m xi2)].
  const double w_cap =
      std::hypot((N + 1) * M_PI / Ls, m * xi2) + step;

  std::vector<double> roots;
  roots.reserve(static_cast<size_t>(N));
  // Start one step below the first root's comparison bound: below it the
  // determinant has no zeros, only a widening |I(x2)K(x1)| gap where (at
  // large m xi) the exponentially small khat drowns in roundoff.
  double w_prev =
      std::max(step * 1e-3, std::hypot(M_PI / Ls, m * xi1) - step);
  double d_prev = det(w_prev);
  while (static_cast<int>(roots.size()) < N) {
    const double w = w_prev + step;
    if (w > w_cap)
      throw SpectrumError(
          "rindler_massive_spectrum: fewer sign changes than modes requested "
          "below the spectral cap");
    double d = det(w);
    if (d == 0.0) {
      roots.push_back(w);
      w_prev = w + step * 1e-6;
      d_prev = det(w_prev);
      continue;
    }
    if (d_prev * d < 0.0) {
      double lo = w_prev, hi = w, dlo = d_prev;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double dm = det(mid);
        if (dm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (dlo * dm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          dlo = dm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    w_prev = w;
    d_prev = d;
  }

  // Every root must sit inside its comparison bracket; anything outside
  // means the scan latched onto determinant noise or skipped a crossing.
  for (size_t i = 0; i < roots.size(); ++i) {
    const double kn = (static_cast<double>(i) + 1.0) * M_PI / Ls;
    const double lo_n = std::hypot(kn, m * xi1);
    const double hi_n = std::hypot(kn, m * xi2);
    if (roots[i] < lo_n - 1e-6 * hi_n || roots[i] > hi_n + 1e-6 * hi_n)
      throw SpectrumError(
          "rindler_massive_spectrum: root outside its comparison bracket "
          "(corrupted determinant scan?)");
  }
  // Asymptotic-density cross-check: omega_N Ls/pi exceeding N by more than
  // the largest possible mass shift means the scan skipped sign changes.
  const double n_est = roots.back() * Ls / M_PI;
  const double shift = m * xi2 * Ls / M_PI;
  if (n_est > N + 1.0 + 0.5 * shift * shift / N)
    throw SpectrumError(
        "rindler_massive_spectrum: root count inconsistent with asymptotic "
        "density (missed roots?)");
  return roots;
}

// ---- disk cache (optional, via UDW_CACHE_DIR) -----------------------------

uint64_t fnv1a(const void* data, size_t n, uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_file_name(double xi1, double xi2, double m, int N) {
  const char tag[] = "rindler-massive-spectrum-v1";
  uint64_t h = fnv1a(tag, sizeof(tag) - 1, 1469598103934665603ull);
  h = fnv1a(&xi1, sizeof xi1, h);
  h = fnv1a(&xi2, sizeof xi2, h);
  h = fnv1a(&m, sizeof m, h);
  const int32_t n32 = N;
  h = fnv1a(&n32, sizeof n32, h);
  char buf[48];
  std::snprintf(buf, sizeof buf, "udw-spectrum-%016llx.txt",
                static_cast<unsigned long long>(h));
  return buf;
}

bool parse_double(const std::string& s, double& out) {
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end && *end == '\0' && end != s.c_str();
}

// Returns true only if the file parses cleanly and echoes the exact
// parameters (hash collisions and stale formats fall through to recompute).
bool load_cached(const std::filesystem::path& file, double xi1, double xi2,
                 double m, int N, std::vector<double>& out) {
  std::ifstream in(file);
  if (!in) return false;
  double f_xi1 = NAN, f_xi2 = NAN, f_m = NAN;
  long f_n = -1;
  std::vector<double> roots;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) return false;
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    double v;
    if (key == "xi1") {
      if (!parse_double(val, f_xi1)) return false;
    } else if (key == "xi2") {
      if (!parse_double(val, f_xi2)) return false;
    } else if (key == "m") {
      if (!parse_double(val, f_m)) return false;
    } else if (key == "N") {
      f_n = std::strtol(val.c_str(), nullptr, 10);
    } else if (key.rfind("omega_", 0) == 0) {
      if (!parse_double(val, v)) return false;
      roots.push_back(v);
    } else {
      return false;
    }
  }
  if (f_xi1 != xi1 || f_xi2 != xi2 || f_m != m || f_n != N) return false;
  if (static_cast<int>(roots.size()) != N) return false;
  for (size_t i = 1; i < roots.size(); ++i)
    if (!(roots[i] > roots[i - 1])) return false;
  out = std::move(roots);
  return true;
}

void store_cached(const std::filesystem::path& file, double xi1, double xi2,
                  double m, int N, const std::vector<double>& roots) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::filesystem::path tmp = file;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream outf(tmp);
    if (!outf) return;  // cache is best-effort; never fail the computation
    char buf[64];
    outf << "# udw rindler massive cavity spectrum cache\n";
    auto put = [&](const char* key, double v) {
      std::snprintf(buf, sizeof buf, "%s=%.17g\n", key, v);
      outf << buf;
    };
    put("xi1", xi1);
    put("xi2", xi2);
    put("m", m);
    outf << "N=" << N << "\n";
    for (size_t i = 0; i < roots.size(); ++i) {
      std::snprintf(buf, sizeof buf, "omega_%zu=%.17g\n", i + 1, roots[i]);
      outf << buf;
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::mutex g_spectrum_mutex;
std::map<std::tuple<double, double, double, int>, std::vector<double>>
    g_spectrum_memo;

}  // namespace

std::vector<double> rindler_massive_spectrum(double xi1, double xi2, double m,
                                             int N) {
  require(N >= 1, "rindler_massive_spectrum: N must be >= 1");
  require(xi1 > 0.0 && xi2 > xi1,
          "rindler_massive_spectrum: need 0 < xi1 < xi2");
  require(m > 0.0,
          "rindler_massive_spectrum: m must be > 0 (massless modes are "
          "closed-form)");

  const auto key = std::make_tuple(xi1, xi2, m, N);
  {
    std::lock_guard<std::mutex> lock(g_spectrum_mutex);
    const auto it = g_spectrum_memo.find(key);
    if (it != g_spectrum_memo.end()) return it->second;
  }

  std::filesystem::path file;
  if (const char* dir = std::getenv("UDW_CACHE_DIR"); dir && *dir)
    file = std::filesystem::path(dir) / cache_file_name(xi1, xi2, m, N);

  std::vector<double> roots;
  if (file.empty() || !load_cached(file, xi1, xi2, m, N, roots)) {
    roots = compute_spectrum(xi1, xi2, m, N);
    if (!file.empty()) store_cached(file, xi1, xi2, m, N, roots);
  }

  std::lock_guard<std::mutex> lock(g_spectrum_mutex);
  g_spectrum_memo.emplace(key, roots);
  return roots;
}

// ---- families --------------------------------------------------------------

ModeFamily ModeFamily::static_cavity(double x1, double L, double m, int N) {
  require(L > 0.0, "static_cavity: L must be > 0");
  require(m >= 0.0, "static_cavity: m must be >= 0");
  require(N >= 1, "static_cavity: N must be >= 1");
  ModeFamily fam;
  fam.kind_ = ModeKind::StaticCavity;
  fam.lo_ = x1;
  fam.hi_ = x1 + L;
  fam.m_ = m;
  fam.omegas_.resize(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n)
    fam.omegas_[n - 1] = std::hypot(n * M_PI / L, m);
  return fam;
}

ModeFamily ModeFamily::conformal_massless(double zeta1, double Lprime, int N) {
  require(Lprime > 0.0, "conformal_massless: L' must be > 0");
  require(N >= 1, "conformal_massless: N must be >= 1");
  ModeFamily fam;
  fam.kind_ = ModeKind::ConformalMassless;
  fam.lo_ = zeta1;
  fam.hi_ = zeta1 + Lprime;
  fam.m_ = 0.0;
  fam.omegas_.resize(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) fam.omegas_[n - 1] = n * M_PI / Lprime;
  return fam;
}

ModeFamily ModeFamily::rindler_massless_direct(double xi1, double xi2, int N) {
  require(xi1 > 0.0 && xi2 > xi1,
          "rindler_massless_direct: need 0 < xi1 < xi2");
  require(N >= 1, "rindler_massless_direct: N must be >= 1");
  ModeFamily fam;
  fam.kind_ = ModeKind::RindlerMasslessDirect;
  fam.lo_ = xi1;
  fam.hi_ = xi2;
  fam.m_ = 0.0;
  const double Ls = std::log(xi2 / xi1);
  fam.omegas_.resize(static_cast<size_t>(N));
  for (int n = 1; n <= N; ++n) fam.omegas_[n - 1] = n * M_PI / Ls;
  return fam;
}

ModeFamily ModeFamily::rindler_massive(double xi1, double xi2, double m,
                                       int N) {
  ModeFamily fam;
  fam.kind_ = ModeKind::RindlerMassive;
  fam.lo_ = xi1;
  fam.hi_ = xi2;
  fam.m_ = m;
  fam.omegas_ = rindler_massive_spectrum(xi1, xi2, m, N);

  const double Ls = std::log(xi2 / xi1);
  fam.massive_.resize(fam.omegas_.size());
  QuadratureSpec spec;
  spec.rel_tol = 1e-11;
  spec.abs_tol = 1e-300;  // the norm integral is positive, rel_tol governs
  spec.max_subdivisions = 8000;
  for (int n = 1; n <= N; ++n) {
    const double w = fam.omegas_[n - 1];
    const ScaledImOrderPair p1 = bessel_scaled_pair(w, m * xi1);
    MassiveCoef& c = fam.massive_[n - 1];
    c.i1 = p1.ihat;
    c.k1 = p1.khat;
    auto shape = [&](double s) {
      const ScaledImOrderPair p = bessel_scaled_pair(w, m * xi1 * std::exp(s));
      return c.i1 * p.khat - p.ihat * c.k1;
    };
    const QuadResult norm = integrate_real(
        [&](double s) {
          const double b = shape(s);
          return b * b;
        },
        0.0, Ls, spec, 2.0 * w);
    c.amp = 1.0 / std::sqrt(2.0 * w * norm.value.real());
    // First lobe positive: sample before the first node (the local phase
    // rate never exceeds w, so w s = pi/2 is safely inside the lobe).
    const double s_probe = std::min(0.5 * M_PI / w, 0.5 * Ls);
    if (shape(s_probe) < 0.0) c.amp = -c.amp;
  }
  return fam;
}

void ModeFamily::check_index(int n) const {
  if (n < 1 || n > size())
    throw DomainError("ModeFamily: mode index out of range");
}

double ModeFamily::omega(int n) const {
  check_index(n);
  return omegas_[n - 1];
}

double ModeFamily::profile(int n, double q) const {
  check_index(n);
  switch (kind_) {
    case ModeKind::StaticCavity: {
      const double L = hi_ - lo_;
      return std::sin(n * M_PI * (q - lo_) / L) /
             std::sqrt(L * omegas_[n - 1]);
    }
    case ModeKind::ConformalMassless: {
      const double Lp = hi_ - lo_;
      return std::sin(n * M_PI * (q - lo_) / Lp) / std::sqrt(n * M_PI);
    }
    case ModeKind::RindlerMasslessDirect: {
      require(q > 0.0, "profile: xi must be > 0");
      return std::sin(omegas_[n - 1] * std::log(q / lo_)) /
             std::sqrt(n * M_PI);
    }
    case ModeKind::RindlerMassive: {
      require(q > 0.0, "profile: xi must be > 0");
      const MassiveCoef& c = massive_[n - 1];
      const ScaledImOrderPair p = bessel_scaled_pair(omegas_[n - 1], m_ * q);
      return c.amp * (c.i1 * p.khat - p.ihat * c.k1);
    }
  }
  return 0.0;  // unreachable
}

double kg_inner_product(const ModeFamily& fam, int na, int nb) {
  const double wa = fam.omega(na);
  const double wb = fam.omega(nb);
  QuadratureSpec spec;
  spec.rel_tol = 1e-11;
  spec.abs_tol = 1e-13;  // off-diagonal entries integrate to ~0
  spec.max_subdivisions = 8000;

  double integral = 0.0;
  switch (fam.kind()) {
    case ModeKind::StaticCavity:
    case ModeKind::ConformalMassless: {
      const double width = fam.wall_hi() - fam.wall_lo();
      const double rate = (na + nb) * M_PI / width;
      integral = integrate_real(
                     [&](double q) {
                       return fam.profile(na, q) * fam.profile(nb, q);
                     },
                     fam.wall_lo(), fam.wall_hi(), spec, rate)
                     .value.real();
      break;
    }
    case ModeKind::RindlerMasslessDirect:
    case ModeKind::RindlerMassive: {
      // dxi/xi measure: substitute xi = xi1 e^s.
      const double Ls = std::log(fam.wall_hi() / fam.wall_lo());
      const double rate = wa + wb;
      integral = integrate_real(
                     [&](double s) {
                       const double xi = fam.wall_lo() * std::exp(s);
                       return fam.profile(na, xi) * fam.profile(nb, xi);
                     },
                     0.0, Ls, spec, rate)
                     .value.real();
      break;
    }
  }
  return (wa + wb) * integral;
}

// ---- closed forms ----------------------------------------------------------

double static_mode(int n, double x, double x1, double L, double m) {
  require(n >= 1, "static_mode: n must be >= 1");
  require(L > 0.0, "static_mode: L must be > 0");
  require(m >= 0.0, "static_mode: m must be >= 0");
  const double w = std::hypot(n * M_PI / L, m);
  return std::sin(n * M_PI * (x - x1) / L) / std::sqrt(L * w);
}

double conformal_mode(int n, double zeta, double zeta1, double Lprime) {
  require(n >= 1, "conformal_mode: n must be >= 1");
  require(Lprime > 0.0, "conformal_mode: L' must be > 0");
  return std::sin(n * M_PI * (zeta - zeta1) / Lprime) / std::sqrt(n * M_PI);
}

double rindler_massless_mode_direct(int n, double xi, double xi1, double xi2) {
  require(n >= 1, "rindler_massless_mode_direct: n must be >= 1");
  require(xi1 > 0.0 && xi2 > xi1,
          "rindler_massless_mode_direct: need 0 < xi1 < xi2");
  require(xi > 0.0, "rindler_massless_mode_direct: xi must be > 0");
  const double w = n * M_PI / std::log(xi2 / xi1);
  return std::sin(w * std::log(xi / xi1)) / std::sqrt(n * M_PI);
}

double rindler_massive_mode(const ModeFamily& fam, int n, double xi) {
  if (fam.kind() != ModeKind::RindlerMassive)
    throw UsageError("rindler_massive_mode: family is not RindlerMassive");
  return fam.profile(n, xi);
}

}  // namespace udw

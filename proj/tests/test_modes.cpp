// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "udw/errors.hpp"
#include "udw/modes.hpp"

using namespace udw;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kLn2 = 0.693147180559945309417232121458;

// Massive Rindler cavity, xi1 = 1, xi2 = 2, m = 1 (mpmath, 40 digits):
// roots of ReI_{iw}(1) K_{iw}(2) - ReI_{iw}(2) K_{iw}(1).
constexpr double kMassiveRoots[8] = {
    4.754113848614165304989,  9.181956060544559255423,
    13.67602860589451199461,  18.18885855861976212046,
    22.70941154953119054996,  27.23387112088044218516,
    31.76057622255483038091,  36.28868959698789658828,
};
// Signed normalizations 1/sqrt(2 w_n int (dxi/xi) v^2), first lobe positive.
constexpr double kMassiveAmp1 = -2.536349587801049628863;
constexpr double kMassiveAmp2 = -3.606219320268474855493;
constexpr double kMassiveAmp3 = -4.423277018553406194924;
constexpr double kMassiveAmp6 = -6.261517586517034192495;
// v_n(xi = 1.37) for the same family.
constexpr double kMassiveV1 = 0.5466146378458030349777;
constexpr double kMassiveV2 = 0.1074468067413057885557;
constexpr double kMassiveV3 = -0.2960606052187588898295;
constexpr double kMassiveV6 = 0.1743052298583131085008;

// Closed-form spot values (mpmath).
constexpr double kStaticW3 = 6.303048278758257653216;   // L=1.5, m=0.5
constexpr double kStaticU3 = 0.1004989253325934068547;  // x1=0.25, x=0.7
constexpr double kConfW2 = 7.853981633974483096157;     // L'=0.8
constexpr double kConfV2 = 0.1526686011795763409956;    // z1=-0.3, z=0.05
constexpr double kDirW4 = 13.0210541581289610126;       // xi1=0.8, xi2=2.1
constexpr double kDirV4 = 0.01089693902860818935853;    // xi=1.3

// Mirror of the spectrum cache naming contract (FNV-1a over a version tag
// plus the raw parameter bytes), frozen so the test can plant entries.
std::string cache_name(double xi1, double xi2, double m, int N) {
  auto mix = [](const void* data, size_t n, uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
    return h;
  };
  const char tag[] = "rindler-massive-spectrum-v1";
  uint64_t h = mix(tag, sizeof(tag) - 1, 1469598103934665603ull);
  h = mix(&xi1, sizeof xi1, h);
  h = mix(&xi2, sizeof xi2, h);
  h = mix(&m, sizeof m, h);
  const int32_t n32 = N;
  h = mix(&n32, sizeof n32, h);
  char buf[48];
  std::snprintf(buf, sizeof buf, "udw-spectrum-%016llx.txt",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

TEST_CASE("static cavity family: spectrum and profiles") {
  auto fam = ModeFamily::static_cavity(0.25, 1.5, 0.5, 6);
  CHECK(fam.kind() == ModeKind::StaticCavity);
  CHECK(fam.size() == 6);
  CHECK(fam.wall_lo() == 0.25);
  CHECK(fam.wall_hi() == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(fam.omega(3) == doctest::Approx(kStaticW3).epsilon(1e-15));
  CHECK(fam.profile(3, 0.7) == doctest::Approx(kStaticU3).epsilon(1e-14));
  CHECK(static_mode(3, 0.7, 0.25, 1.5, 0.5) ==
        doctest::Approx(kStaticU3).epsilon(1e-14));

  // Dirichlet walls
  CHECK(fam.profile(2, 0.25) == 0.0);
  CHECK(std::abs(fam.profile(2, 1.75)) < 1e-14);

  // massless dispersion degenerates to n pi / L
  auto fam0 = ModeFamily::static_cavity(0.0, 2.0, 0.0, 3);
  CHECK(fam0.omega(2) == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("conformal massless family matches the direct Rindler form") {
  // Same physical modes in two charts: zeta - zeta1 = log(xi/xi1)/a.
  const double a = 0.7, xi1 = 0.9, xi2 = 2.3;
  const double Ls = std::log(xi2 / xi1);
  const double zeta1 = std::log(a * xi1) / a;
  const double Lp = Ls / a;
  auto conf = ModeFamily::conformal_massless(zeta1, Lp, 5);
  auto dir = ModeFamily::rindler_massless_direct(xi1, xi2, 5);
  for (int n = 1; n <= 5; ++n) {
    CHECK(conf.omega(n) == doctest::Approx(a * dir.omega(n)).epsilon(1e-14));
    for (int k = 0; k <= 10; ++k) {
      const double xi = xi1 + (xi2 - xi1) * k / 10.0;
      const double zeta = zeta1 + std::log(xi / xi1) / a;
      CHECK(conf.profile(n, zeta) ==
            doctest::Approx(dir.profile(n, xi)).epsilon(1e-13));
    }
  }
}

TEST_CASE("conformal/direct closed-form spot values") {
  CHECK(conformal_mode(2, 0.05, -0.3, 0.8) ==
        doctest::Approx(kConfV2).epsilon(1e-14));
  auto conf = ModeFamily::conformal_massless(-0.3, 0.8, 4);
  CHECK(conf.omega(2) == doctest::Approx(kConfW2).epsilon(1e-15));

  CHECK(rindler_massless_mode_direct(4, 1.3, 0.8, 2.1) ==
        doctest::Approx(kDirV4).epsilon(1e-12));
  auto dir = ModeFamily::rindler_massless_direct(0.8, 2.1, 4);
  CHECK(dir.omega(4) == doctest::Approx(kDirW4).epsilon(1e-14));
}

TEST_CASE("massive Rindler spectrum against the high-precision oracle") {
  auto roots = rindler_massive_spectrum(1.0, 2.0, 1.0, 8);
  REQUIRE(roots.size() == 8);
  for (int n = 0; n < 8; ++n)
    CHECK(roots[n] == doctest::Approx(kMassiveRoots[n]).epsilon(1e-10));
  // mass pushes every frequency above the massless value
  for (int n = 1; n <= 8; ++n) CHECK(roots[n - 1] > n * kPi / kLn2);
}

TEST_CASE("massive Rindler spectrum: massless limit (m = 1e-6)") {
  auto roots = rindler_massive_spectrum(1.0, 2.0, 1e-6, 10);
  for (int n = 1; n <= 10; ++n)
    CHECK(roots[n - 1] == doctest::Approx(n * kPi / kLn2).epsilon(1e-5));
}

TEST_CASE("massive Rindler spectrum at shallow-cavity scale") {
  // xi1 = 100, xi2 = 101: the weak-acceleration regime where the orders
  // reach ~3000.  Mass shift here is ~1e-9 relative, so the massless grid
  // is a tight reference.
  const double Ls = std::log(101.0 / 100.0);
  auto roots = rindler_massive_spectrum(100.0, 101.0, 1e-4, 10);
  for (int n = 1; n <= 10; ++n) {
    CHECK(std::isfinite(roots[n - 1]));
    CHECK(roots[n - 1] == doctest::Approx(n * kPi / Ls).epsilon(1e-6));
  }
}

TEST_CASE("massive Rindler spectrum with heavy walls (m xi >> 1)") {
  // xi1 = 20, xi2 = 21, m = 1: below the first root the determinant pits
  // I ~ e^{x} against K ~ e^{-x}; a routing bug here once produced spurious
  // sign changes and a garbage spectrum.  mpmath root anchors, plus the
  // eigenvalue-comparison bracket hypot(n pi/Ls, m xi1..xi2).
  const double Ls = std::log(21.0 / 20.0);
  auto roots = rindler_massive_spectrum(20.0, 21.0, 1.0, 3);
  REQUIRE(roots.size() == 3);
  const double oracle[3] = {67.5730505876827061, 130.400795618917975,
                            194.254117412513308};
  for (int n = 1; n <= 3; ++n) {
    CHECK(roots[n - 1] == doctest::Approx(oracle[n - 1]).epsilon(1e-9));
    CHECK(roots[n - 1] >= std::hypot(n * kPi / Ls, 20.0));
    CHECK(roots[n - 1] <= std::hypot(n * kPi / Ls, 21.0));
  }
}

TEST_CASE("massive Rindler family: normalization, signs, profile values") {
  auto fam = ModeFamily::rindler_massive(1.0, 2.0, 1.0, 6);
  CHECK(fam.kind() == ModeKind::RindlerMassive);
  CHECK(fam.mass() == 1.0);

  CHECK(fam.profile(1, 1.37) == doctest::Approx(kMassiveV1).epsilon(1e-9));
  CHECK(fam.profile(2, 1.37) == doctest::Approx(kMassiveV2).epsilon(1e-9));
  CHECK(fam.profile(3, 1.37) == doctest::Approx(kMassiveV3).epsilon(1e-9));
  CHECK(fam.profile(6, 1.37) == doctest::Approx(kMassiveV6).epsilon(1e-9));
  CHECK(rindler_massive_mode(fam, 1, 1.37) ==
        doctest::Approx(kMassiveV1).epsilon(1e-9));

  // Dirichlet condition: exact zero at the rear wall by construction,
  // root-finder-accurate zero at the front wall.
  for (int n = 1; n <= 6; ++n) {
    CHECK(fam.profile(n, 1.0) == 0.0);
    CHECK(std::abs(fam.profile(n, 2.0)) < 1e-8);
  }

  // First lobe positive for every mode.
  const double Ls = kLn2;
  for (int n = 1; n <= 6; ++n) {
    const double s = std::min(0.5 * kPi / fam.omega(n), 0.5 * Ls);
    CHECK(fam.profile(n, std::exp(s)) > 0.0);
  }
}

TEST_CASE("massive profiles reduce to the massless modes as m -> 0") {
  auto fam = ModeFamily::rindler_massive(1.0, 2.0, 1e-6, 4);
  auto dir = ModeFamily::rindler_massless_direct(1.0, 2.0, 4);
  for (int n = 1; n <= 4; ++n) {
    CHECK(fam.omega(n) == doctest::Approx(dir.omega(n)).epsilon(1e-9));
    for (int k = 1; k < 12; ++k) {
      const double xi = 1.0 + k / 12.0;
      CHECK(fam.profile(n, xi) ==
            doctest::Approx(dir.profile(n, xi)).epsilon(1e-7));
    }
  }
}

TEST_CASE("Klein-Gordon orthonormality for every family") {
  auto check_orthonormal = [](const ModeFamily& fam, double tol) {
    for (int na = 1; na <= fam.size(); ++na)
      for (int nb = na; nb <= fam.size(); ++nb) {
        const double ip = kg_inner_product(fam, na, nb);
        if (na == nb)
          CHECK(ip == doctest::Approx(1.0).epsilon(tol));
        else
          CHECK(std::abs(ip) < tol);
      }
  };
  check_orthonormal(ModeFamily::static_cavity(0.3, 1.2, 0.8, 5), 1e-9);
  check_orthonormal(ModeFamily::conformal_massless(-0.2, 0.9, 5), 1e-9);
  check_orthonormal(ModeFamily::rindler_massless_direct(0.5, 1.9, 5), 1e-9);
  check_orthonormal(ModeFamily::rindler_massive(1.0, 2.0, 1.0, 5), 1e-6);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(ModeFamily::static_cavity(0.0, -1.0, 0.0, 3), DomainError);
  CHECK_THROWS_AS(ModeFamily::static_cavity(0.0, 1.0, -0.1, 3), DomainError);
  CHECK_THROWS_AS(ModeFamily::static_cavity(0.0, 1.0, 0.0, 0), DomainError);
  CHECK_THROWS_AS(ModeFamily::conformal_massless(0.0, 0.0, 3), DomainError);
  CHECK_THROWS_AS(ModeFamily::rindler_massless_direct(2.0, 1.0, 3),
                  DomainError);
  CHECK_THROWS_AS(ModeFamily::rindler_massive(0.0, 1.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(rindler_massive_spectrum(1.0, 2.0, 0.0, 3), DomainError);
  CHECK_THROWS_AS(rindler_massive_spectrum(1.0, 2.0, -1.0, 3), DomainError);

  auto fam = ModeFamily::static_cavity(0.0, 1.0, 0.0, 3);
  CHECK_THROWS_AS(fam.omega(0), DomainError);
  CHECK_THROWS_AS(fam.omega(4), DomainError);
  CHECK_THROWS_AS(fam.profile(-1, 0.5), DomainError);
  CHECK_THROWS_AS(rindler_massive_mode(fam, 1, 0.5), UsageError);
}

TEST_CASE("spectrum disk cache via UDW_CACHE_DIR") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "udw-modes-cache-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  setenv("UDW_CACHE_DIR", dir.c_str(), 1);

  // First computation writes the expected file.
  auto r1 = rindler_massive_spectrum(1.1, 2.2, 0.9, 4);
  CHECK(fs::exists(dir / cache_name(1.1, 2.2, 0.9, 4)));

  // A planted entry for parameters this process has never requested is
  // returned verbatim: results really are served from disk.  (The memo
  // shields parameters that were already computed, hence the fresh set.)
  const std::vector<double> planted = {5.0, 10.0, 15.0, 20.0};
  {
    std::ofstream out(dir / cache_name(1.15, 2.2, 0.9, 4));
    char buf[64];
    out << "# udw rindler massive cavity spectrum cache\n";
    std::snprintf(buf, sizeof buf, "xi1=%.17g\n", 1.15);
    out << buf;
    std::snprintf(buf, sizeof buf, "xi2=%.17g\n", 2.2);
    out << buf;
    std::snprintf(buf, sizeof buf, "m=%.17g\n", 0.9);
    out << buf << "N=4\n";
    for (size_t i = 0; i < planted.size(); ++i) {
      std::snprintf(buf, sizeof buf, "omega_%zu=%.17g\n", i + 1, planted[i]);
      out << buf;
    }
  }
  auto got = rindler_massive_spectrum(1.15, 2.2, 0.9, 4);
  REQUIRE(got.size() == 4);
  for (size_t i = 0; i < 4; ++i) CHECK(got[i] == planted[i]);

  // A corrupted or mismatched file falls back to honest computation and is
  // rewritten in place.
  const fs::path f3 = dir / cache_name(1.3, 2.6, 0.9, 3);
  {
    std::ofstream out(f3);
    out << "xi1=999\n";
  }
  auto r3 = rindler_massive_spectrum(1.3, 2.6, 0.9, 3);
  REQUIRE(r3.size() == 3);
  CHECK(r3[0] > kPi / kLn2);        // honest physics, not the stale echo
  CHECK(r3[0] < 1.2 * kPi / kLn2);  // (massive shift is a few percent here)
  std::vector<double> reloaded;
  {
    std::ifstream in(f3);
    std::string line;
    while (std::getline(in, line))
      if (line.rfind("omega_", 0) == 0)
        reloaded.push_back(std::strtod(line.c_str() + line.find('=') + 1,
                                       nullptr));
  }
  REQUIRE(reloaded.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(reloaded[i] == r3[i]);

  // Without the environment variable nothing is written.
  unsetenv("UDW_CACHE_DIR");
  (void)rindler_massive_spectrum(1.4, 2.8, 0.7, 3);
  CHECK(!fs::exists(dir / cache_name(1.4, 2.8, 0.7, 3)));

  fs::remove_all(dir);
}

TEST_CASE("spectrum memoization returns identical values") {
  auto r1 = rindler_massive_spectrum(1.0, 3.0, 0.5, 6);
  auto r2 = rindler_massive_spectrum(1.0, 3.0, 0.5, 6);
  REQUIRE(r1.size() == r2.size());
  for (size_t i = 0; i < r1.size(); ++i) CHECK(r1[i] == r2[i]);
}

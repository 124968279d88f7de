#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <random>

#include "doctest.h"
#include "klag/dunkl.hpp"
#include "klag/kernels.hpp"
#include "klag/sl2.hpp"
#include "klag/specfun.hpp"
#include "klag/transform.hpp"

using namespace klag;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("alpha and beta") {
  const AlphaBeta r = alpha_beta(0.8);
  CHECK(r.alpha == doctest::Approx(1.0 / std::tanh(0.8)));
  CHECK(r.beta == doctest::Approx(1.0 / std::cosh(0.8)));
  const AlphaBeta ax = alpha_beta(cplx(0.0, 1.1));
  CHECK(ax.alpha == doctest::Approx(0.0).scale(1.0));
  CHECK(ax.beta == doctest::Approx(std::cos(1.1)));
  const cplx z(0.4, 2.2);
  CHECK(alpha_beta(z).alpha == doctest::Approx((1.0 / std::tanh(z)).real()));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> ux(1e-3, 4.0), uy(-10.0, 10.0);
  int bad = 0;
  for (int q = 0; q < 10000; ++q) bad += std::abs(alpha_beta({ux(rng), uy(rng)}).beta) >= 1.0;
  CHECK(bad == 0);
}

TEST_CASE("log sinh branch") {
  for (cplx z : {cplx(0.3, 0.2), cplx(0.3, 2.9), cplx(1.5, -4.0), cplx(0.0, 1.0)})
    CHECK(std::abs(std::exp(log_sinh(z)) - std::sinh(z)) < 1e-14 * std::max(1.0, std::abs(std::sinh(z))));
  CHECK(log_sinh(2.0).imag() == 0.0);
  // No jump along a path through Im z = π/2 and beyond.
  cplx prev = log_sinh(cplx(0.3, 0.0));
  double jump = 0.0;
  for (int q = 1; q <= 300; ++q) {
    const cplx cur = log_sinh(cplx(0.3, 0.01 * q));
    jump = std::max(jump, std::abs(cur - prev));
    prev = cur;
  }
  CHECK(jump < 0.05);
  CHECK_THROWS_AS(check_semigroup_parameter(cplx(0.0, kPi)), PoleError);
  CHECK_THROWS_AS(check_semigroup_parameter(0.0), PoleError);
  CHECK_THROWS_AS(check_semigroup_parameter(cplx(-0.1, 1.0)), DomainError);
}

TEST_CASE("radial kernel closed form against eigenfunction series") {
  for (auto [N, a, k] : std::vector<std::tuple<int, double, double>>{{1, 1.0, 0.6}, {2, 2.0, 0.0}, {3, 0.8, 0.3}})
    for (int m = 0; m <= 2; ++m) {
      const RadialSector s = RadialSector::make(DeformParams::make(N, a, {k}), m);
      for (cplx z : {cplx(0.7, 0.4), cplx(1.2, -2.0)})
        for (auto [r, rp] : std::vector<std::pair<double, double>>{{0.5, 1.1}, {1.7, 0.9}}) {
          const KernelEval c = lambda_m(r, rp, z, s);
          CHECK(c.provenance == Provenance::closed_form);
          CHECK(rel(c.value, lambda_m_series(r, rp, z, s, 60).value) < 1e-10);
        }
    }
}

TEST_CASE("radial kernel on the imaginary axis") {
  for (auto [a, k] : std::vector<std::pair<double, double>>{{1.0, 0.6}, {2.0, 0.25}, {0.7, 0.9}}) {
    const RadialSector s = RadialSector::make(DeformParams::make(1, a, {k}), 1);
    const double lam = s.lambda;
    for (auto [r, rp] : std::vector<std::pair<double, double>>{{0.5, 1.1}, {2.0, 1.4}}) {
      const double u = 2.0 / a * std::pow(r * rp, 0.5 * a);
      const double jt = boost::math::cyl_bessel_j(lam, u) * std::pow(0.5 * u, -lam);
      const cplx expect = std::pow(r * rp, s.m) * std::pow(a, -lam) *
                          std::exp(-kI * (0.5 * kPi * (lam + 1.0))) * jt;
      const cplx z = kI * (0.5 * kPi);
      CHECK(rel(lambda_m(r, rp, z, s).value, expect) < 1e-12);
      // Continuity from the right half-plane.
      CHECK(rel(lambda_m(r, rp, z + 1e-9, s).value, expect) < 1e-7);
    }
  }
}

TEST_CASE("profile coefficients are radial kernels") {
  for (double a : {1.0, 2.0, 0.8}) {
    const DeformParams p = DeformParams::make(3, a, {0.0});
    const double nu = 0.5;
    const double ratio = d_k(p) / c_ka(p);
    for (int m = 0; m <= 3; ++m) {
      const RadialSector s = RadialSector::make(p, m);
      const cplx z(0.6, 0.5);
      const cplx coeff = gegenbauer_transform(
          m, nu, [&](double t) { return h_profile(0.8, 1.3, z, t, p); }, 48);
      CHECK(rel(coeff, ratio * lambda_m(0.8, 1.3, z, s).value) < 1e-10);
    }
  }
  const DeformParams p1 = DeformParams::make(2, 1.0, {0.0});
  for (double t : {-0.9, 0.0, 0.7})
    CHECK(rel(h_profile(0.5, 1.2, cplx(0.4, 0.3), t, p1), h_profile_series(0.5, 1.2, cplx(0.4, 0.3), t, p1)) < 1e-10);
}

TEST_CASE("full kernel against its sector expansion") {
  const DeformParams p1 = DeformParams::make(1, 1.5, {0.4});
  for (auto [x, y] : std::vector<std::pair<double, double>>{{0.7, -1.2}, {1.5, 0.4}}) {
    const cplx z(0.5, 1.0);
    const KernelEval full = lambda_full({x}, {y}, z, p1);
    CHECK(rel(full.value, lambda_full_series({x}, {y}, z, p1, 1).value) < 1e-12);
    CHECK(full.bound_ok);
    CHECK(rel(full.value, lambda_full({y}, {x}, z, p1).value) < 1e-14);
  }
  for (double a : {1.0, 2.0}) {
    const DeformParams p3 = DeformParams::make(3, a, {0.0});
    const Point x{0.4, -0.2, 0.9}, y{-0.3, 0.8, 0.1};
    const SectorSum ss = lambda_full_series(x, y, cplx(0.7, 0.2), p3, 20);
    CHECK(rel(lambda_full(x, y, cplx(0.7, 0.2), p3).value, ss.value) < 1e-10);
    CHECK(ss.last_term < 1e-12);
  }
  CHECK_THROWS_AS(lambda_full({1.0, 0.5}, {0.2, 0.3}, 0.5, DeformParams::make(2, 1.0, {0.3})), ScopeError);
}

TEST_CASE("kernel bounds") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ur(0.0, 3.0), ux(0.05, 2.0), uy(-6.0, 6.0);
  const DeformParams p = DeformParams::make(1, 1.3, {0.5});
  for (int q = 0; q < 200; ++q) {
    const cplx z(ux(rng), uy(rng));
    const double x = ur(rng), y = -ur(rng);
    CHECK(lambda_full({x}, {y}, z, p).bound_ok);
    const RadialSector s = RadialSector::make(p, q % 2);
    CHECK(std::abs(lambda_m(x, -y, z, s).value) <= kernel_bound(x, -y, z, s) * (1.0 + 1e-12));
  }
}

TEST_CASE("poisson and reproducing kernels") {
  const DeformParams p1 = DeformParams::make(1, 2.0, {0.5});
  CHECK(poisson_kernel(0, {1.0}, {-1.0}, p1) == 1.0);
  CHECK(poisson_kernel(1, {1.0}, {-1.0}, p1) == -1.0);
  CHECK(poisson_kernel(2, {1.0}, {1.0}, p1) == 0.0);
  for (int m = 0; m <= 1; ++m)
    CHECK(reproducing_kernel(m, {-1.0}, {-1.0}, p1) == doctest::Approx(poisson_kernel(m, {-1.0}, {-1.0}, p1)));
  const DeformParams p3 = DeformParams::make(3, 2.0, {0.0});
  const Point om{0.6, 0.0, 0.8}, et{0.0, 1.0, 0.0}, ez{0.48, 0.6, 0.64};
  for (int m = 0; m <= 3; ++m) {
    const double t = 0.6 * 0.48 + 0.8 * 0.64;
    CHECK(poisson_kernel(m, om, ez, p3) == doctest::Approx(gegenbauer_weighted(m, 0.5, t)));
    CHECK(reproducing_kernel(m, om, ez, p3) == doctest::Approx(poisson_kernel(m, om, ez, p3)));
    CHECK(reproducing_kernel(m, om, et, p3) == doctest::Approx(poisson_kernel(m, om, et, p3)).scale(1.0));
  }
  CHECK_THROWS_AS(poisson_kernel(1, {0.6, 0.8}, {1.0, 0.0}, DeformParams::make(2, 2.0, {0.3})), ScopeError);
}

TEST_CASE("semigroup law and eigenrelation") {
  const RadialSector s = RadialSector::make(DeformParams::make(2, 0.9, {0.2}), 1);
  CHECK(semigroup_kernel_law(0.7, 1.4, cplx(0.3, 1.0), cplx(0.5, -0.4), s).residual < 1e-9);
  CHECK(semigroup_kernel_law(1.1, 0.2, 0.4, cplx(0.2, 2.0), s).residual < 1e-9);
  for (int l = 0; l <= 4; ++l) {
    const cplx z(0.5, 0.7);
    const double scale = std::abs(std::exp(-z * (2.0 * l + s.lambda + 1.0)));
    CHECK(kernel_eigenrelation(l, 0.9, z, s, scale).residual < 1e-9);
  }
}

TEST_CASE("weber integrals") {
  const IdentityResidual w1 = weber_first(1.3, 0.8, 1.1, 0.6);
  CHECK(w1.residual < 1e-10);
  const double expect = std::exp(-(0.64 + 1.21) / 1.3) *
                        boost::math::cyl_bessel_i(0.6, 2.0 * 0.8 * 1.1 / 1.3) / 1.3 /
                        std::pow(0.8 * 1.1, 0.6);
  CHECK(std::abs(w1.rhs - expect) < 1e-13);
  CHECK(weber_first(cplx(0.8, 1.2), 1.4, 0.5, 0.0).residual < 1e-9);
  CHECK(weber_second(cplx(1.0, -0.5), 0.7, 1.3, 1.2, 3).residual < 1e-9);
  CHECK(weber_second(2.0, 1.5, 0.6, 0.4, 0).residual < 1e-9);
  CHECK_THROWS_AS(weber_first(cplx(-0.1, 1.0), 1.0, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(weber_first(1.0, 1.0, 1.0, -0.5), DomainError);
  CHECK_THROWS_AS(weber_second(1.0, 1.0, 1.0, 0.0, 2), DomainError);
}

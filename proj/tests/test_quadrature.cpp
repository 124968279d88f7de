#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "doctest.h"
#include "klag/dunkl.hpp"
#include "klag/quadrature.hpp"
#include "klag/specfun.hpp"

using namespace klag;

TEST_CASE("gauss laguerre small rules") {
  const QuadRule r1 = gauss_laguerre(1, 0.0);
  CHECK(r1.nodes[0] == doctest::Approx(1.0));
  CHECK(r1.weights[0] == doctest::Approx(1.0));
  const QuadRule r2 = gauss_laguerre(1, 0.8);
  CHECK(r2.nodes[0] == doctest::Approx(1.8));
  CHECK(r2.weights[0] == doctest::Approx(std::tgamma(1.8)));
  const QuadRule r3 = gauss_laguerre(2, 0.0);
  CHECK(r3.integrate([](double t) { return t * t * t; }) == doctest::Approx(6.0).epsilon(1e-13));
  CHECK_THROWS_AS(gauss_laguerre(4, -1.0), DomainError);
}

TEST_CASE("laguerre exactness, positivity, interlacing") {
  for (double lam : {-0.4, 0.0, 2.5}) {
    for (int n : {5, 17, 40}) {
      const QuadRule r = gauss_laguerre(n, lam);
      for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(r.weights[i] > 0.0);
        CHECK(r.nodes[i] > 0.0);
        if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
      }
      for (int j = 0; j <= 2 * n - 1 && j <= 30; ++j) {
        const double mom = r.integrate([&](double t) { return std::pow(t, j); });
        CHECK(mom == doctest::Approx(std::tgamma(lam + j + 1.0)).epsilon(1e-11));
      }
      const QuadRule s = gauss_laguerre(n + 1, lam);
      for (int i = 0; i < n; ++i) {
        CHECK(s.nodes[i] < r.nodes[i]);
        CHECK(r.nodes[i] < s.nodes[i + 1]);
      }
    }
  }
}

TEST_CASE("gegenbauer rules") {
  for (double nu : {0.1, 0.5, 1.7}) {
    const QuadRule r1 = gauss_gegenbauer(1, nu);
    CHECK(r1.nodes[0] == doctest::Approx(0.0));
    CHECK(r1.weights[0] ==
          doctest::Approx(std::sqrt(kPi) * std::tgamma(nu + 0.5) / std::tgamma(nu + 1.0)).epsilon(1e-13));
    const QuadRule r = gauss_gegenbauer(9, nu);
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(r.nodes[i] == -r.nodes[r.size() - 1 - i]);
    const QuadRule r2 = gauss_gegenbauer(2, nu);
    const double m2 = r2.integrate([](double t) { return t * t; });
    CHECK(m2 == doctest::Approx(boost::math::beta(1.5, nu + 0.5)).epsilon(1e-12));
  }
  const QuadRule j = gauss_jacobi(12, 0.3, -0.6);
  for (int p = 0; p <= 23; ++p) {
    // ∫(1−t)^α(1+t)^β t^p dt against a 60-point reference rule
    const QuadRule ref = gauss_jacobi(60, 0.3, -0.6);
    const auto f = [&](double t) { return std::pow(t, p); };
    CHECK(j.integrate(f) == doctest::Approx(ref.integrate(f)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("radial rule orthonormality") {
  {
    const DeformParams p = DeformParams::make(1, 2.0, {0.0});
    const QuadRule r = radial_rule(20, p, 0);
    // f_{0,0}² e^{+(2/a)r^a} is constant: the integral is the normalization.
    const double norm = r.integrate([](double) { return 1.0; });
    const double expected = std::sqrt(kPi) / 2.0;  // ∫ e^{−r²} dr
    CHECK(norm == doctest::Approx(expected).epsilon(1e-12));
  }
  {
    const DeformParams p = DeformParams::make(3, 1.0, {0.0});
    const QuadRule r = radial_rule(40, p, 0);
    const double lam = p.lambda(0);
    const auto lag = [&](int l, double rr) { return laguerre(l, lam, 2.0 * rr); };
    for (int l = 0; l <= 8; ++l)
      for (int s = 0; s <= 8; ++s) {
        const double g = r.integrate([&](double rr) { return lag(l, rr) * lag(s, rr); });
        const double nl = std::tgamma(lam + l + 1.0) / std::tgamma(l + 1.0) / std::pow(2.0, lam + 1.0);
        const double ns = std::tgamma(lam + s + 1.0) / std::tgamma(s + 1.0) / std::pow(2.0, lam + 1.0);
        CHECK(std::abs(g / std::sqrt(nl * ns) - (l == s ? 1.0 : 0.0)) < 1e-10);
      }
  }
}

TEST_CASE("sphere rule mass and exactness") {
  for (int N : {1, 2, 3, 4}) {
    for (double k : {0.0, 0.5, 1.3}) {
      std::vector<double> kv(N, k);
      if (N > 1) kv[0] = 0.25;
      const DeformParams p = DeformParams::make(N, 2.0, kv);
      const SphereRule s = sphere_rule(N, p.k, 6);
      double mass = 0.0;
      for (double w : s.weights) mass += w;
      CHECK(mass * d_k(p) == doctest::Approx(1.0).epsilon(1e-12));
      if (N >= 2) {
        // ∫ ω_1² ϑ_k dσ / ∫ ϑ_k dσ = (k_1+1/2)/(⟨k⟩+N/2)
        double m2 = 0.0;
        for (std::size_t i = 0; i < s.points.size(); ++i) m2 += s.weights[i] * s.points[i][0] * s.points[i][0];
        CHECK(m2 / mass == doctest::Approx((p.k[0] + 0.5) / (p.index() + 0.5 * N)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("generalized hermite rule") {
  const QuadRule r = generalized_hermite(10, 0.7, 1.3);
  for (int j = 0; j <= 8; j += 2) {
    const double mom = r.integrate([&](double x) { return std::pow(x, j); });
    const double ref = std::tgamma(0.7 + 0.5 * j + 0.5) * std::pow(1.3, -(0.7 + 0.5 * j + 0.5));
    CHECK(mom == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK(r.integrate([](double x) { return x * x * x; }) == doctest::Approx(0.0).scale(1.0));
}

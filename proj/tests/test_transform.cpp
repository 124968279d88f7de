#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <random>

#include "doctest.h"
#include "klag/dunkl.hpp"
#include "klag/sl2.hpp"
#include "klag/transform.hpp"

using namespace klag;

namespace {

double dist(cplx a, cplx b) { return std::abs(a - b); }

SpectralFunction small_spectral(const DeformParams& p) {
  SpectralFunction f;
  f.params = p;
  f.l_max = 4;
  f.m_max = 2;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int m = 0; m <= 2; ++m)
    for (std::size_t j = 0; j < unit_harmonics(p, m).size(); ++j)
      for (int l = 0; l <= 4; ++l) f.coeffs[{l, m, static_cast<int>(j)}] = cplx(g(rng), g(rng));
  return f;
}

}  // namespace

TEST_CASE("normalizing constant") {
  CHECK(c_ka(DeformParams::make(1, 2.0, {0.0})) == doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-14));
  CHECK(c_ka(DeformParams::make(2, 2.0, {0.0})) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
  for (auto [N, a, k] : std::vector<std::tuple<int, double, double>>{{1, 1.0, 0.3}, {2, 0.6, 0.2}, {3, 1.7, 0.0}}) {
    const DeformParams p = DeformParams::make(N, a, {k});
    CHECK(std::abs(c_ka_quadrature(p) / c_ka(p) - 1.0) < 1e-10);
  }
}

TEST_CASE("closed B kernels agree with the semigroup kernel") {
  const std::vector<std::pair<DeformParams, BScope>> cases = {
      {DeformParams::make(1, 1.0, {0.5}), BScope::rank_one},
      {DeformParams::make(1, 0.7, {1.2}), BScope::rank_one},
      {DeformParams::make(2, 1.0, {0.0}), BScope::k_zero_a1},
      {DeformParams::make(3, 1.0, {0.0}), BScope::k_zero_a1},
      {DeformParams::make(2, 2.0, {0.0}), BScope::k_zero_a2},
  };
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto& [p, scope] : cases) {
    const BKernelSpec spec = BKernelSpec::make(p, scope);
    for (int q = 0; q < 10; ++q) {
      Point x(p.N), y(p.N);
      for (int i = 0; i < p.N; ++i) x[i] = u(rng), y[i] = u(rng);
      CHECK(dist(b_kernel(x, y, spec), b_kernel_from_lambda(x, y, p)) < 1e-10);
    }
  }
  const BKernelSpec prod = BKernelSpec::make(DeformParams::make(2, 2.0, {0.4, 0.9}), BScope::z2n_a2);
  const BKernelSpec one0 = BKernelSpec::make(DeformParams::make(1, 2.0, {0.4}), BScope::rank_one);
  const BKernelSpec one1 = BKernelSpec::make(DeformParams::make(1, 2.0, {0.9}), BScope::rank_one);
  const Point x{0.7, -1.3}, y{1.1, 0.4};
  CHECK(dist(b_kernel(x, y, prod), b_kernel({0.7}, {1.1}, one0) * b_kernel({-1.3}, {0.4}, one1)) < 1e-14);
}

TEST_CASE("B kernel against classical closed forms") {
  const BKernelSpec fourier = BKernelSpec::make(DeformParams::make(2, 2.0, {0.0}), BScope::k_zero_a2);
  const BKernelSpec cosine = BKernelSpec::make(DeformParams::make(2, 1.0, {0.0}), BScope::k_zero_a1);
  const Point x{0.7, -1.3}, y{1.1, 0.4};
  const double dot = 0.7 * 1.1 - 1.3 * 0.4;
  CHECK(dist(b_kernel(x, y, fourier), std::exp(-kI * dot)) < 1e-14);
  const double nx = std::hypot(0.7, 1.3), ny = std::hypot(1.1, 0.4);
  CHECK(dist(b_kernel(x, y, cosine), std::cos(std::sqrt(2.0 * (nx * ny + dot)))) < 1e-13);

  // Rank one with a = 2 is the one-dimensional Dunkl kernel E_k(x, −iy).
  using boost::math::cyl_bessel_j;
  auto jn = [](double al, double t) { return std::tgamma(al + 1.0) * std::pow(0.5 * t, -al) * cyl_bessel_j(al, t); };
  for (double k : {0.5, 1.3})
    for (auto [xv, yv] : std::vector<std::pair<double, double>>{{0.8, 1.9}, {-1.4, 0.6}}) {
      const BKernelSpec s = BKernelSpec::make(DeformParams::make(1, 2.0, {k}), BScope::rank_one);
      const double t = std::abs(xv * yv);
      const cplx expect = jn(k - 0.5, t) - kI * (xv * yv / (2.0 * k + 1.0)) * jn(k + 0.5, t);
      CHECK(dist(b_kernel({xv}, {yv}, s), expect) < 1e-13);
    }
}

TEST_CASE("scope selection and errors") {
  CHECK(BKernelSpec::automatic(DeformParams::make(1, 0.6, {0.4})).scope == BScope::rank_one);
  CHECK(BKernelSpec::automatic(DeformParams::make(3, 2.0, {0.0})).scope == BScope::k_zero_a2);
  CHECK(BKernelSpec::automatic(DeformParams::make(2, 1.0, {0.0})).scope == BScope::k_zero_a1);
  CHECK(BKernelSpec::automatic(DeformParams::make(2, 2.0, {0.3, 0.5})).scope == BScope::z2n_a2);
  CHECK_THROWS_AS(BKernelSpec::automatic(DeformParams::make(2, 1.0, {0.3})), ScopeError);
  CHECK_THROWS_AS(BKernelSpec::make(DeformParams::make(2, 1.0, {0.0}), BScope::rank_one), ScopeError);
  CHECK_THROWS_AS(BKernelSpec::make(DeformParams::make(2, 2.0, {0.2}), BScope::k_zero_a2), ScopeError);
  CHECK_THROWS_AS(BKernelSpec::make(DeformParams::make(2, 1.0, {0.2, 0.3}), BScope::z2n_a2), ScopeError);
  CHECK_THROWS_WITH(BKernelSpec::make(DeformParams::make(2, 1.0, {0.0}), BScope::rank_one),
                    doctest::Contains("N = 1"));
  CHECK(scope_from_string(to_string(BScope::z2n_a2)) == BScope::z2n_a2);
  CHECK_THROWS_AS(scope_from_string("bogus"), DomainError);
}

TEST_CASE("kernel is bounded by one") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (const BKernelSpec& s : {BKernelSpec::make(DeformParams::make(1, 0.8, {0.6}), BScope::rank_one),
                               BKernelSpec::make(DeformParams::make(2, 2.0, {0.5, 1.0}), BScope::z2n_a2)}) {
    double worst = 0.0;
    for (int q = 0; q < 2000; ++q) {
      Point x(s.params.N), y(s.params.N);
      for (int i = 0; i < s.params.N; ++i) x[i] = u(rng), y[i] = u(rng);
      worst = std::max(worst, std::abs(b_kernel(x, y, s)));
    }
    CHECK(worst <= 1.0 + 1e-13);
  }
}

TEST_CASE("Hankel transform of a Gaussian") {
  for (double nu : {0.0, 0.5, 1.7}) {
    const std::vector<double> s{0.0, 0.5, 1.4, 3.0};
    const auto h = hankel([](double r) { return cplx(std::exp(-0.5 * r * r)); }, 2.0, nu, s);
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(dist(h[i], std::pow(2.0, nu) * std::exp(-0.5 * s[i] * s[i])) < 1e-11);
  }
}

TEST_CASE("Hecke and Bochner identities") {
  const BKernelSpec s = BKernelSpec::make(DeformParams::make(1, 1.5, {0.5}), BScope::rank_one);
  const std::vector<Point> xi{{-1.2}, {0.3}, {0.9}, {2.1}};
  const TransformOptions opt;
  CHECK(hecke_check([](const Point&) { return cplx(1.0); }, 0, s, xi, opt) < 1e-12);
  CHECK(hecke_check([](const Point& x) { return cplx(x[0]); }, 1, s, xi, opt) < 1e-12);
  auto psi = [](double r) { return cplx(std::exp(-0.7 * std::pow(r, 1.5)) * (1.0 + r * r * r)); };
  CHECK(bochner_check([](const Point& x) { return cplx(x[0]); }, 1, psi, 0.7, s, xi, opt) < 1e-10);

  const BKernelSpec f2 = BKernelSpec::make(DeformParams::make(2, 2.0, {0.0}), BScope::k_zero_a2);
  TransformOptions o2;
  o2.n_radial = 40;
  o2.n_angular = 16;
  const std::vector<Point> xi2{{0.5, -0.3}, {1.2, 0.8}};
  CHECK(hecke_check([](const Point& x) { return cplx(x[0], x[1]); }, 1, f2, xi2, o2) < 1e-9);
}

TEST_CASE("master formula reduces to a Fresnel integral") {
  // For the classical Fourier kernel the integral is Gaussian and equals
  // e^{iπ/4} e^{−i(x+y)²/2}.
  const BKernelSpec s = BKernelSpec::make(DeformParams::make(1, 2.0, {0.0}), BScope::rank_one);
  const MasterResult r = master_formula_check({1.0}, {1.0}, s);
  const cplx expect = std::exp(kI * (kPi / 4.0 - 2.0));
  CHECK(dist(r.lhs, expect) < 1e-5);
  CHECK(dist(r.rhs, expect) < 1e-14);
  CHECK(r.residual < 1e-5);
  CHECK(r.residual_printed > 0.1);
  CHECK_THROWS_AS(master_formula_check({1.0}, {1.0}, s, 1), DomainError);
}

TEST_CASE("kernel differential equations") {
  const BKernelSpec r1 = BKernelSpec::make(DeformParams::make(1, 1.0, {0.5}), BScope::rank_one);
  CHECK(pde_residuals({0.7}, {-1.1}, r1).max() < 1e-6);
  const BKernelSpec z2 = BKernelSpec::make(DeformParams::make(2, 2.0, {0.3, 0.8}), BScope::z2n_a2);
  CHECK(pde_residuals({0.7, -0.5}, {1.2, 0.9}, z2).max() < 1e-6);
  CHECK_THROWS_AS(pde_residuals({0.02}, {1.0}, r1), DomainError);
}

TEST_CASE("inversion and intertwining") {
  CHECK(inversion_check(small_spectral(DeformParams::make(2, 1.0, {0.3}))) == 0.0);
  CHECK(inversion_check(small_spectral(DeformParams::make(1, 2.0, {0.6}))) == 0.0);
  CHECK_THROWS_WITH_AS(inversion_check(small_spectral(DeformParams::make(1, 1.5, {0.6}))),
                       doctest::Contains("a = 1/r"), DomainError);
  for (int m = 0; m <= 2; ++m)
    CHECK(intertwining_check(RadialSector::make(DeformParams::make(2, 0.8, {0.4}), m), 10) < 1e-10);
}

TEST_CASE("sampled pipelines on Gaussians") {
  ExpandOptions opt;
  std::vector<double> r;
  std::vector<cplx> v;
  for (int i = 0; i <= 100; ++i) {
    r.push_back(0.08 * i);
    v.push_back(std::exp(-0.5 * r.back() * r.back()));
  }
  const SampledTransform rad = fka_apply_sampled_radial(r, v, DeformParams::make(2, 2.0, {0.0}), opt);
  double err = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) err = std::max(err, dist(rad.values[i], v[i]));
  CHECK(err < 1e-8);
  CHECK(std::abs(rad.norm_ratio - 1.0) < 1e-8);

  // Hecke: x e^{−x²/2} maps to −i x e^{−x²/2} for a = 2.
  std::vector<double> x;
  std::vector<cplx> w;
  for (int i = -80; i <= 80; ++i) {
    x.push_back(0.1 * i);
    w.push_back(x.back() * std::exp(-0.5 * x.back() * x.back()));
  }
  const SampledTransform line = fka_apply_sampled_line(x, w, DeformParams::make(1, 2.0, {0.7}), opt);
  double lerr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) lerr = std::max(lerr, dist(line.values[i], -kI * w[i]));
  CHECK(lerr < 1e-8);

  CHECK_THROWS_AS(fka_apply_sampled_line(x, w, DeformParams::make(2, 2.0, {0.0}), opt), ScopeError);
  CHECK_THROWS_AS(fka_apply_sampled_radial({0.0, 1.0}, {1.0, 0.5}, DeformParams::make(1, 2.0, {0.5}), opt),
                  DomainError);
}

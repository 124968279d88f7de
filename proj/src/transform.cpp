#include "klag/transform.hpp"

#include <algorithm>
#include <boost/math/interpolators/barycentric_rational.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <map>
#include <sstream>

#include "klag/dunkl.hpp"
#include "klag/kernels.hpp"
#include "klag/quadrature.hpp"
#include "klag/specfun.hpp"

namespace klag {

namespace {

double norm_of(const Point& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double dot(const Point& x, const Point& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool near(double x, double y) { return std::abs(x - y) < 1e-12; }

// Γ((2k+a−1)/a)[J̃_{(2k−1)/a}(u) + xy (ai)^{−2/a} J̃_{(2k+1)/a}(u)], u = (2/a)|xy|^{a/2}.
cplx rank_one_b(double xy, double k, double a) {
  const double u = 2.0 / a * std::pow(std::abs(xy), 0.5 * a);
  const cplx ai = std::pow(a, 2.0 / a) * std::exp(kI * (kPi / a));
  cplx v = bessel_j_tilde((2.0 * k - 1.0) / a, u);
  if (xy != 0.0) v += xy / ai * bessel_j_tilde((2.0 * k + 1.0) / a, u);
  return gamma((2.0 * k + a - 1.0) / a) * v;
}

void check_scope(const DeformParams& p, BScope scope) {
  const auto fail = [&](const std::string& cond) {
    throw ScopeError("condition " + cond + " violated for B kernel scope " + to_string(scope));
  };
  switch (scope) {
    case BScope::rank_one:
      if (p.N != 1) fail("N = 1");
      break;
    case BScope::k_zero_a1:
      if (!p.k_zero()) fail("k = 0");
      if (!near(p.a, 1.0)) fail("a = 1");
      if (p.N < 2) fail("N >= 2");
      break;
    case BScope::k_zero_a2:
      if (!p.k_zero()) fail("k = 0");
      if (!near(p.a, 2.0)) fail("a = 2");
      break;
    case BScope::z2n_a2:
      if (!near(p.a, 2.0)) fail("a = 2");
      break;
  }
}

using Interp = boost::math::barycentric_rational<double>;

// Barycentric interpolant of complex samples, zero beyond the last node and
// constant below the first.
struct ComplexInterp {
  double lo, hi;
  Interp re, im;
  ComplexInterp(std::vector<double> x, const std::vector<cplx>& v)
      : lo(x.front()),
        hi(x.back()),
        re(make(x, v, true)),
        im(make(std::move(x), v, false)) {}

  static Interp make(std::vector<double> x, const std::vector<cplx>& v, bool real) {
    std::vector<double> y(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) y[i] = real ? v[i].real() : v[i].imag();
    return Interp(std::move(x), std::move(y), 5);
  }

  cplx operator()(double t) const {
    if (t > hi) return 0.0;
    t = std::max(t, lo);
    return {re(t), im(t)};
  }
};

void check_grid(const std::vector<double>& x, const std::vector<cplx>& v) {
  if (x.size() != v.size()) throw DomainError("sample grid and values differ in length");
  if (x.size() < 8) throw DomainError("condition at least 8 samples violated");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) throw DomainError("condition strictly increasing sample grid violated");
}

}  // namespace

double c_ka(const DeformParams& params) {
  const double a = params.a;
  return d_k(params) * std::exp(-params.lambda(0) * std::log(a) - std::lgamma(params.mu() / a));
}

double c_ka_quadrature(const DeformParams& params) {
  const double a = params.a;
  const double tol = 1e-14;
  // Radial factor ∫₀^∞ e^{−r^a/a} r^{μ−1} dr, with u = r^μ removing the endpoint singularity.
  const double mu = params.mu();
  boost::math::quadrature::exp_sinh<double> radial;
  const double rad = radial.integrate(
                         [&](double u) {
                           if (!(u > 0.0) || !std::isfinite(u)) return 0.0;
                           return std::exp(-std::pow(u, a / mu) / a);
                         },
                         tol) /
                     mu;
  // Sphere factor by peeling off one coordinate at a time:
  // ∫_{S^{n−1}} ϑ dσ = 2∫₀¹ t^{2k_n}(1−t²)^{(n−3)/2+⟨k'⟩} dt · ∫_{S^{n−2}} ϑ' dσ'.
  boost::math::quadrature::tanh_sinh<double> ts;
  double sphere = 2.0;
  double index_lower = params.k[0];
  for (int n = 2; n <= params.N; ++n) {
    const double kn = params.k[n - 1];
    const double g = 0.5 * (n - 3) + index_lower;
    sphere *= 2.0 * ts.integrate(
                        [&](double t, double tc) {
                          // tc = 1 − t near the right end keeps (1−t²) accurate.
                          const double one_minus = t > 0.5 ? tc * (2.0 - tc) : 1.0 - t * t;
                          if (t <= 0.0 || one_minus <= 0.0) return 0.0;
                          return std::exp(2.0 * kn * std::log(t) + g * std::log(one_minus));
                        },
                        0.0, 1.0, tol);
    index_lower += kn;
  }
  return 1.0 / (rad * sphere);
}

std::string to_string(BScope s) {
  switch (s) {
    case BScope::rank_one:
      return "rank_one";
    case BScope::k_zero_a1:
      return "k_zero_a1";
    case BScope::k_zero_a2:
      return "k_zero_a2";
    case BScope::z2n_a2:
      return "z2n_a2";
  }
  return "?";
}

BScope scope_from_string(const std::string& s) {
  for (BScope b : {BScope::rank_one, BScope::k_zero_a1, BScope::k_zero_a2, BScope::z2n_a2})
    if (to_string(b) == s) return b;
  throw DomainError("unknown B kernel scope '" + s + "'");
}

BKernelSpec BKernelSpec::make(const DeformParams& params, BScope scope) {
  check_scope(params, scope);
  return {params, scope};
}

BKernelSpec BKernelSpec::automatic(const DeformParams& params) {
  for (BScope b : {BScope::rank_one, BScope::k_zero_a2, BScope::k_zero_a1, BScope::z2n_a2}) {
    try {
      return make(params, b);
    } catch (const ScopeError&) {
    }
  }
  std::ostringstream os;
  os << "no closed B kernel for N = " << params.N << ", a = " << params.a
     << "; condition N = 1, a = 2, or (k = 0 and a = 1) violated";
  throw ScopeError(os.str());
}

cplx b_kernel(const Point& x, const Point& y, const BKernelSpec& spec) {
  const DeformParams& p = spec.params;
  if (static_cast<int>(x.size()) != p.N || static_cast<int>(y.size()) != p.N)
    throw DomainError("point dimension differs from N");
  switch (spec.scope) {
    case BScope::rank_one:
      return rank_one_b(x[0] * y[0], p.k[0], p.a);
    case BScope::k_zero_a1: {
      const double arg = std::max(0.0, 2.0 * (norm_of(x) * norm_of(y) + dot(x, y)));
      if (p.N == 2) return std::cos(std::sqrt(arg));
      const double nu = 0.5 * (p.N - 3);
      return gamma(0.5 * (p.N - 1)) * bessel_j_tilde(nu, std::sqrt(arg));
    }
    case BScope::k_zero_a2:
      return std::exp(-kI * dot(x, y));
    case BScope::z2n_a2: {
      cplx v = 1.0;
      for (int i = 0; i < p.N; ++i) v *= rank_one_b(x[i] * y[i], p.k[i], 2.0);
      return v;
    }
  }
  return 0.0;
}

cplx b_kernel_from_lambda(const Point& x, const Point& y, const DeformParams& params) {
  const cplx z = kI * (0.5 * kPi);
  return std::exp(kI * (0.5 * kPi * params.mu() / params.a)) * lambda_full(x, y, z, params).value;
}

PolarRule polar_rule(const DeformParams& params, int n_radial, int n_angular, double rate) {
  const double a = params.a;
  const QuadRule rad = radial_rule_rate(n_radial, params.lambda(0), a, rate);
  const SphereRule sph = sphere_rule(params.N, params.k, n_angular);
  PolarRule out;
  out.points.reserve(rad.size() * sph.points.size());
  for (std::size_t i = 0; i < rad.size(); ++i) {
    const double r = rad.nodes[i];
    const double wr = rad.weights[i] * std::exp(rate * std::pow(r, a));
    for (std::size_t j = 0; j < sph.points.size(); ++j) {
      Point p = sph.points[j];
      for (double& v : p) v *= r;
      out.points.push_back(std::move(p));
      out.weights.push_back(wr * sph.weights[j]);
    }
  }
  return out;
}

namespace {

// On the line the odd parts of B and f are r times smooth functions of r^a, so the
// odd product gets its own rule carrying the factor r².
std::vector<cplx> fka_apply_line(const std::function<cplx(const Point&)>& f,
                                 const std::vector<Point>& xi, const BKernelSpec& spec, int n,
                                 double rate) {
  const DeformParams& p = spec.params;
  const double a = p.a;
  const SphereRule sph = sphere_rule(1, p.k, 1);
  double wsph = 0.0;
  for (double w : sph.weights) wsph += w;
  const QuadRule even = radial_rule_rate(n, p.lambda(0), a, rate);
  const QuadRule odd = radial_rule_rate(n, p.lambda(1), a, rate);
  std::vector<cplx> fe(n), fo(n);
  for (int i = 0; i < n; ++i) {
    const double r = even.nodes[i];
    fe[i] = 0.5 * (f({r}) + f({-r})) * even.weights[i] * std::exp(rate * std::pow(r, a));
    const double t = odd.nodes[i];
    fo[i] = 0.5 * (f({t}) - f({-t})) / t * odd.weights[i] * std::exp(rate * std::pow(t, a));
  }
  const double c = c_ka(p) * wsph;
  std::vector<cplx> out(xi.size());
  for (std::size_t q = 0; q < xi.size(); ++q) {
    cplx s = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = even.nodes[i], t = odd.nodes[i];
      s += 0.5 * (b_kernel(xi[q], {r}, spec) + b_kernel(xi[q], {-r}, spec)) * fe[i];
      s += 0.5 * (b_kernel(xi[q], {t}, spec) - b_kernel(xi[q], {-t}, spec)) / t * fo[i];
    }
    out[q] = c * s;
  }
  return out;
}

}  // namespace

std::vector<cplx> fka_apply_kernel(const std::function<cplx(const Point&)>& f,
                                   const std::vector<Point>& xi, const BKernelSpec& spec,
                                   const TransformOptions& opt) {
  const DeformParams& p = spec.params;
  const double rate = opt.rate > 0.0 ? opt.rate : 1.0 / p.a;
  if (p.N == 1) return fka_apply_line(f, xi, spec, opt.n_radial, rate);
  const PolarRule rule = polar_rule(p, opt.n_radial, opt.n_angular, rate);
  std::vector<cplx> fw(rule.points.size());
  for (std::size_t i = 0; i < fw.size(); ++i) fw[i] = rule.weights[i] * f(rule.points[i]);
  const double c = c_ka(p);
  std::vector<cplx> out(xi.size());
  for (std::size_t q = 0; q < xi.size(); ++q) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < fw.size(); ++i)
      if (fw[i] != 0.0) s += b_kernel(xi[q], rule.points[i], spec) * fw[i];
    out[q] = c * s;
  }
  return out;
}

std::vector<cplx> hankel(const std::function<cplx(double)>& psi, double a, double nu,
                         const std::vector<double>& s, int n_nodes, double rate) {
  if (!(nu > -1.0)) throw DomainError("condition nu > -1 violated");
  if (rate <= 0.0) rate = 1.0 / a;
  const QuadRule rule = radial_rule_rate(n_nodes, nu, a, rate);
  std::vector<cplx> pw(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i)
    pw[i] = rule.weights[i] * std::exp(rate * std::pow(rule.nodes[i], a)) * psi(rule.nodes[i]);
  std::vector<cplx> out(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
      acc += pw[i] * bessel_j_tilde(nu, 2.0 / a * std::pow(rule.nodes[i] * s[q], 0.5 * a));
    out[q] = acc;
  }
  return out;
}

namespace {

double relative_sup(const std::vector<cplx>& lhs, const std::vector<cplx>& rhs) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    num = std::max(num, std::abs(lhs[i] - rhs[i]));
    den = std::max(den, std::abs(rhs[i]));
  }
  return den > 0.0 ? num / den : num;
}

}  // namespace

double hecke_check(const HarmonicFn& p, int m, const BKernelSpec& spec,
                   const std::vector<Point>& xi, const TransformOptions& opt) {
  const double a = spec.params.a;
  const auto f = [&](const Point& x) { return std::exp(-std::pow(norm_of(x), a) / a) * p(x); };
  TransformOptions o = opt;
  o.rate = 1.0 / a;
  const std::vector<cplx> lhs = fka_apply_kernel(f, xi, spec, o);
  const cplx phase = std::exp(-kI * (kPi * m / a));
  std::vector<cplx> rhs(xi.size());
  for (std::size_t q = 0; q < xi.size(); ++q)
    rhs[q] = phase * std::exp(-std::pow(norm_of(xi[q]), a) / a) * p(xi[q]);
  return relative_sup(lhs, rhs);
}

double bochner_check(const HarmonicFn& p, int m, const std::function<cplx(double)>& psi,
                     double rate, const BKernelSpec& spec, const std::vector<Point>& xi,
                     const TransformOptions& opt) {
  const DeformParams& prm = spec.params;
  const double a = prm.a;
  const double lam = prm.lambda(m);
  const auto f = [&](const Point& x) { return p(x) * psi(norm_of(x)); };
  TransformOptions o = opt;
  o.rate = rate;
  const std::vector<cplx> lhs = fka_apply_kernel(f, xi, spec, o);
  std::vector<double> s(xi.size());
  for (std::size_t q = 0; q < xi.size(); ++q) s[q] = norm_of(xi[q]);
  const std::vector<cplx> h = hankel(psi, a, lam, s, std::max(opt.n_radial, 80), rate);
  const cplx pre = std::exp(-lam * std::log(a)) * std::exp(-kI * (kPi * m / a));
  std::vector<cplx> rhs(xi.size());
  for (std::size_t q = 0; q < xi.size(); ++q) rhs[q] = pre * p(xi[q]) * h[q];
  return relative_sup(lhs, rhs);
}

MasterResult master_formula_check(const Point& x, const Point& y, const BKernelSpec& spec, int levels) {
  if (levels < 2) throw DomainError("condition levels >= 2 violated");
  const DeformParams& p = spec.params;
  const double a = p.a;
  const double lam0 = p.lambda(0);
  const double span = norm_of(x) + norm_of(y);
  std::vector<double> eps(levels);
  for (int j = 0; j < levels; ++j) eps[j] = 0.2 * std::ldexp(1.0, -j);
  const double t_max = (40.0 + std::max(0.0, lam0) * std::log(40.0 / eps.back())) / eps.back();

  // Nodes in t = ‖u‖^a carrying the weight t^{λ₀}: a Gauss–Jacobi head panel,
  // then Gauss–Legendre panels of length 2.
  std::vector<double> tn, tw;
  const double head = 1.0;
  {
    const QuadRule& gj = cached_gauss_jacobi(24, 0.0, lam0);
    const double sc = std::pow(0.5 * head, lam0 + 1.0);
    for (std::size_t i = 0; i < gj.size(); ++i) {
      tn.push_back(0.5 * head * (1.0 + gj.nodes[i]));
      tw.push_back(sc * gj.weights[i]);
    }
    const QuadRule& gl = cached_gauss_jacobi(16, 0.0, 0.0);
    const double len = 2.0;
    for (double t0 = head; t0 < t_max; t0 += len)
      for (std::size_t i = 0; i < gl.size(); ++i) {
        const double t = t0 + 0.5 * len * (1.0 + gl.nodes[i]);
        tn.push_back(t);
        tw.push_back(0.5 * len * gl.weights[i] * std::pow(t, lam0));
      }
  }

  // Angular order follows the local frequency ρ(‖x‖+‖y‖) in u.
  std::map<int, SphereRule> spheres;
  const auto sphere_for = [&](double rho) -> const SphereRule& {
    const int n = p.N == 1 ? 1 : std::clamp(static_cast<int>(0.3 * rho * span) + 8, 8, 128);
    auto it = spheres.find(n);
    if (it == spheres.end()) it = spheres.emplace(n, sphere_rule(p.N, p.k, n)).first;
    return it->second;
  };

  std::vector<cplx> g(tn.size());
  for (std::size_t i = 0; i < tn.size(); ++i) {
    const double rho = std::pow(tn[i], 1.0 / a);
    cplx s = 0.0;
    if (spec.scope == BScope::rank_one) {
      // B(x,±ρ) = e ± ρ o shares its Bessel factors between both signs.
      const auto parts = [&](double v) {
        const double k = p.k[0];
        const double u = 2.0 / a * std::pow(std::abs(v) * rho, 0.5 * a);
        const cplx ai = std::pow(a, 2.0 / a) * std::exp(kI * (kPi / a));
        const double g0 = gamma((2.0 * k + a - 1.0) / a);
        return std::pair<cplx, cplx>{g0 * bessel_j_tilde((2.0 * k - 1.0) / a, u),
                                     g0 * v / ai * bessel_j_tilde((2.0 * k + 1.0) / a, u)};
      };
      const auto [ex, ox] = parts(x[0]);
      const auto [ey, oy] = parts(y[0]);
      g[i] = tw[i] * std::exp(kI * (tn[i] / a)) * 2.0 * (ex * ey + rho * rho * ox * oy);
      continue;
    }
    const SphereRule& sph = sphere_for(rho);
    for (std::size_t j = 0; j < sph.points.size(); ++j) {
      Point u = sph.points[j];
      for (double& v : u) v *= rho;
      s += sph.weights[j] * b_kernel(x, u, spec) * b_kernel(u, y, spec);
    }
    g[i] = tw[i] * std::exp(kI * (tn[i] / a)) * s;
  }

  const double c = c_ka(p) / a;
  std::vector<cplx> level(eps.size());
  for (std::size_t e = 0; e < eps.size(); ++e) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < tn.size(); ++i) s += std::exp(-eps[e] * tn[i]) * g[i];
    level[e] = c * s;
  }
  // Neville–Richardson with step ratio 2 on an expansion in powers of ε.
  std::vector<cplx> tab = level;
  for (std::size_t j = 1; j < tab.size(); ++j)
    for (std::size_t i = tab.size() - 1; i >= j; --i) {
      const double f = std::pow(2.0, static_cast<double>(j));
      tab[i] = (f * tab[i] - tab[i - 1]) / (f - 1.0);
    }

  MasterResult out;
  out.lhs = tab.back();
  const double mu = p.mu();
  const cplx base = std::exp(-kI * ((std::pow(norm_of(x), a) + std::pow(norm_of(y), a)) / a)) *
                    b_kernel(x, y, spec);
  out.rhs = std::exp(kI * (0.5 * kPi * mu / a)) * base;
  out.rhs_printed = std::exp(kI * (kPi * mu / a)) * base;
  out.residual = std::abs(out.lhs - out.rhs);
  out.residual_printed = std::abs(out.lhs - out.rhs_printed);
  out.extrapolation_spread = std::abs(out.lhs - level.back());
  return out;
}

PdeResiduals pde_residuals(const Point& xi, const Point& x, const BKernelSpec& spec, double h) {
  const DeformParams& p = spec.params;
  const int N = p.N;
  for (int i = 0; i < N; ++i)
    if (std::abs(xi[i]) < 4.0 * h || std::abs(x[i]) < 4.0 * h)
      throw DomainError("condition |coordinate| >= 4h violated; step too large near a reflecting hyperplane");
  const double a = p.a;
  const cplx b0 = b_kernel(xi, x, spec);
  double mag = std::abs(b0);

  // Derivatives in slot 0 (ξ) or slot 1 (x) along coordinate i.
  struct Diff {
    cplx d1, d2, reflected;
  };
  const auto diff = [&](int slot, int i) {
    const auto at = [&](double shift) {
      Point u = xi, v = x;
      (slot == 0 ? u : v)[i] += shift;
      const cplx b = b_kernel(u, v, spec);
      mag = std::max(mag, std::abs(b));
      return b;
    };
    const cplx fm2 = at(-2 * h), fm1 = at(-h), fp1 = at(h), fp2 = at(2 * h);
    Point u = xi, v = x;
    (slot == 0 ? u : v)[i] *= -1.0;
    Diff d;
    d.d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    d.d2 = (-fm2 + 16.0 * fm1 - 30.0 * b0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    d.reflected = b_kernel(u, v, spec);
    return d;
  };

  cplx euler_xi = 0.0, euler_x = 0.0, lap_xi = 0.0, lap_x = 0.0;
  for (int i = 0; i < N; ++i) {
    const Diff dxi = diff(0, i);
    const Diff dx = diff(1, i);
    euler_xi += xi[i] * dxi.d1;
    euler_x += x[i] * dx.d1;
    lap_xi += dxi.d2 + p.k[i] * (2.0 * dxi.d1 / xi[i] - (b0 - dxi.reflected) / (xi[i] * xi[i]));
    lap_x += dx.d2 + p.k[i] * (2.0 * dx.d1 / x[i] - (b0 - dx.reflected) / (x[i] * x[i]));
  }
  const double nxi = norm_of(xi), nx = norm_of(x);
  PdeResiduals out;
  out.euler = std::abs(euler_x - euler_xi) / std::max({std::abs(euler_x), std::abs(euler_xi), mag});
  out.laplace_xi = std::abs(std::pow(nxi, 2.0 - a) * lap_xi + std::pow(nx, a) * b0) /
                   (mag * std::pow(nx, a));
  out.laplace_x = std::abs(std::pow(nx, 2.0 - a) * lap_x + std::pow(nxi, a) * b0) /
                  (mag * std::pow(nxi, a));
  return out;
}

double inversion_check(const SpectralFunction& f) {
  const double a = f.params.a;
  const double inv = 1.0 / a, half = 2.0 / a;
  bool identity = false;
  if (near(inv, std::round(inv))) {
    identity = true;
  } else if (!(near(half, std::round(half)) && static_cast<long>(std::round(half)) % 2 == 1)) {
    throw DomainError("condition a = 1/r or a = 2/(2r+1) violated");
  }
  const SpectralFunction g = fka_apply_spectral(fka_apply_spectral(f));
  double num = 0.0;
  for (const auto& [idx, c] : f.coeffs) {
    const double sign = identity || idx[1] % 2 == 0 ? 1.0 : -1.0;
    num += std::norm(g.coeff(idx[0], idx[1], idx[2]) - sign * c);
  }
  const double den = f.norm_sq();
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double intertwining_check(const RadialSector& sector, int lmax) {
  const int n = lmax + 1;
  Eigen::VectorXcd d(n);
  for (int l = 0; l < n; ++l) d(l) = fka_phase(l, sector.m, sector.params.a);
  const auto conj = [&](const Eigen::MatrixXcd& A) {
    return (d.asDiagonal() * A * d.conjugate().asDiagonal()).eval();
  };
  const auto block = [&](const Eigen::MatrixXcd& A) { return A.topLeftCorner(lmax, lmax).norm(); };
  const Eigen::MatrixXcd H = ladder_matrix(Sl2Op::H, sector, lmax);
  const Eigen::MatrixXcd Ep = ladder_matrix(Sl2Op::Eplus, sector, lmax);
  const Eigen::MatrixXcd Em = ladder_matrix(Sl2Op::Eminus, sector, lmax);
  const Eigen::MatrixXcd K = ladder_matrix(Sl2Op::K, sector, lmax);
  const double scale = block(H);
  double r = block(conj(H) + H);
  r = std::max(r, block(conj(Ep) + Em));
  r = std::max(r, block(conj(Em) + Ep));
  r = std::max(r, block(conj(K) - K));
  return r / scale;
}

PlancherelResult plancherel_kernel(const std::function<cplx(const Point&)>& f,
                                   const BKernelSpec& spec, double out_rate,
                                   const TransformOptions& opt) {
  const DeformParams& p = spec.params;
  const double rate = opt.rate > 0.0 ? opt.rate : 1.0 / p.a;
  const PolarRule in = polar_rule(p, opt.n_radial, opt.n_angular, 2.0 * rate);
  PlancherelResult out;
  for (std::size_t i = 0; i < in.points.size(); ++i) out.norm_in += in.weights[i] * std::norm(f(in.points[i]));
  const PolarRule onodes = polar_rule(p, opt.n_radial, opt.n_angular, 2.0 * out_rate);
  TransformOptions o = opt;
  o.rate = rate;
  const std::vector<cplx> g = fka_apply_kernel(f, onodes.points, spec, o);
  for (std::size_t i = 0; i < g.size(); ++i) out.norm_out += onodes.weights[i] * std::norm(g[i]);
  out.norm_in = std::sqrt(out.norm_in);
  out.norm_out = std::sqrt(out.norm_out);
  return out;
}

namespace {

// Transforms one sector given its radial factor g; returns transformed coefficients.
RadialExpandResult transform_sector(const std::function<cplx(double)>& g, const RadialSector& sector,
                                    const ExpandOptions& opt) {
  RadialExpandResult res = expand_radial(g, sector, opt);
  for (std::size_t l = 0; l < res.coeffs.size(); ++l)
    res.coeffs[l] *= fka_phase(static_cast<int>(l), sector.m, sector.params.a);
  return res;
}

cplx evaluate_sector(const std::vector<cplx>& c, const RadialSector& sector, double r) {
  const std::vector<double> f = phi_basis_all(static_cast<int>(c.size()) - 1, sector, r);
  cplx s = 0.0;
  for (std::size_t l = 0; l < c.size(); ++l) s += c[l] * f[l];
  return s;
}

double coeff_norm_sq(const std::vector<cplx>& c) {
  double s = 0.0;
  for (const auto& v : c) s += std::norm(v);
  return s;
}

}  // namespace

SampledTransform fka_apply_sampled_radial(const std::vector<double>& r,
                                          const std::vector<cplx>& values,
                                          const DeformParams& params, const ExpandOptions& opt) {
  check_grid(r, values);
  if (r.front() < 0.0) throw DomainError("condition r >= 0 violated");
  const ComplexInterp psi(r, values);
  const double y0 = std::sqrt(d_k(params));
  const RadialSector sector = RadialSector::make(params, 0);
  const RadialExpandResult res = transform_sector([&](double t) { return psi(t) / y0; }, sector, opt);
  SampledTransform out;
  out.r = r;
  out.values.resize(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out.values[i] = y0 * evaluate_sector(res.coeffs, sector, r[i]);
  out.parseval_defect = res.defect;
  out.norm_ratio = res.norm_sq > 0.0 ? std::sqrt(coeff_norm_sq(res.coeffs) / res.norm_sq) : 1.0;
  return out;
}

SampledTransform fka_apply_sampled_line(const std::vector<double>& x,
                                        const std::vector<cplx>& values,
                                        const DeformParams& params, const ExpandOptions& opt) {
  if (params.N != 1) throw ScopeError("condition N = 1 violated for line samples");
  check_grid(x, values);
  const ComplexInterp f(x, values);
  const auto at = [&](double t) { return t < x.front() ? cplx(0.0) : f(t); };
  const RadialSector s0 = RadialSector::make(params, 0);
  const RadialSector s1 = RadialSector::make(params, 1);
  const double y0 = unit_harmonics(params, 0)[0].eval(Point{1.0});
  const double y1 = unit_harmonics(params, 1)[0].eval(Point{1.0});
  // A sector may hold only rounding noise, so the limit applies to the total.
  ExpandOptions sector_opt = opt;
  sector_opt.refuse = false;
  const RadialExpandResult even =
      transform_sector([&](double t) { return 0.5 * (at(t) + at(-t)) / y0; }, s0, sector_opt);
  const RadialExpandResult odd =
      transform_sector([&](double t) { return 0.5 * (at(t) - at(-t)) / y1; }, s1, sector_opt);
  SampledTransform out;
  out.r = x;
  out.values.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = std::abs(x[i]);
    const double sgn = x[i] < 0.0 ? -1.0 : 1.0;
    out.values[i] = y0 * evaluate_sector(even.coeffs, s0, t) + sgn * y1 * evaluate_sector(odd.coeffs, s1, t);
  }
  const double in = even.norm_sq + odd.norm_sq;
  out.parseval_defect = in > 0.0 ? 1.0 - (coeff_norm_sq(even.coeffs) + coeff_norm_sq(odd.coeffs)) / in : 0.0;
  out.norm_ratio = in > 0.0 ? std::sqrt((coeff_norm_sq(even.coeffs) + coeff_norm_sq(odd.coeffs)) / in) : 1.0;
  if (opt.refuse && std::abs(out.parseval_defect) > opt.max_defect)
    throw ConvergenceError("Parseval defect " + std::to_string(out.parseval_defect) +
                           " exceeds the truncation limit " + std::to_string(opt.max_defect));
  return out;
}

}  // namespace klag

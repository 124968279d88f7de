#include "klag/kernels.hpp"

#include <cmath>

#include "klag/dunkl.hpp"
#include "klag/quadrature.hpp"
#include "klag/sl2.hpp"
#include "klag/specfun.hpp"

namespace klag {

namespace {

// coth z = (1 + e^{−2z}) / (1 − e^{−2z}), stable for large Re z.
cplx coth(cplx z) {
  const cplx e = std::exp(-2.0 * z);
  return (1.0 + e) / (1.0 - e);
}

double norm_of(const Point& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

Point direction(const Point& x, double r) {
  Point w(x.size(), 0.0);
  if (r > 0.0) {
    for (std::size_t i = 0; i < x.size(); ++i) w[i] = x[i] / r;
  } else {
    w[0] = 1.0;
  }
  return w;
}

// log(d_k / c_{k,a}) = ((2⟨k⟩+N−2)/a) log a + log Γ(μ/a)
double log_dk_over_cka(const DeformParams& p) {
  return (2.0 * p.index() + p.N - 2.0) / p.a * std::log(p.a) + std::lgamma(p.mu() / p.a);
}

void check_sector(const RadialSector& sector) {
  if (!(sector.lambda > -1.0))
    throw DomainError("condition 2m + 2<k> + N + a - 2 > 0 violated for this sector");
}

void check_profile_domain(const DeformParams& p) {
  const double lhs = 2.0 * p.index() + p.N;
  if (!(lhs > std::max(1.0, 2.0 - p.a)))
    throw DomainError("condition 2<k> + N > max(1, 2 - a) violated (value " + std::to_string(lhs) +
                      ")");
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed_form";
    case Provenance::series: return "series";
    case Provenance::quadrature: return "quadrature";
  }
  return "unknown";
}

AlphaBeta alpha_beta(cplx z) {
  const double x = z.real(), y = z.imag();
  const double ax = std::abs(x);
  const double e2 = std::exp(-2.0 * ax);
  const double denom = 1.0 + e2 * e2 - 2.0 * e2 * std::cos(2.0 * y);
  if (!(denom > 1e-300)) throw PoleError("alpha(z) has a pole: z lies in i*pi*Z");
  AlphaBeta ab;
  ab.alpha = std::copysign((1.0 - e2 * e2) / denom, x);
  if (x == 0.0) ab.alpha = 0.0;
  ab.beta = std::cos(y) / std::cosh(x);
  return ab;
}

cplx log_sinh(cplx z) {
  const cplx one_minus = 1.0 - std::exp(-2.0 * z);
  if (std::abs(one_minus) < 1e-300) throw PoleError("sinh z vanishes: z lies in i*pi*Z");
  return z + std::log(one_minus) - std::log(2.0);
}

void check_semigroup_parameter(cplx z) {
  if (z.real() < 0.0) throw DomainError("condition Re z >= 0 violated");
  if (std::abs(1.0 - std::exp(-2.0 * z)) < 1e-14)
    throw PoleError("z lies in i*pi*Z, where the kernel is a multiple of a delta function");
}

// Radial kernels

KernelEval lambda_m(double r, double s, cplx z, const RadialSector& sector) {
  check_semigroup_parameter(z);
  check_sector(sector);
  if (r < 0.0 || s < 0.0) throw DomainError("radial variables must be nonnegative");
  const double a = sector.params.a;
  const double lam = sector.lambda;
  const int m = sector.m;
  const double rs = r * s;
  const cplx ls = log_sinh(z);
  const double sum_pow = std::pow(r, a) + std::pow(s, a);

  KernelEval out;
  out.provenance = Provenance::closed_form;
  if (rs == 0.0 && m > 0) {
    out.value = 0.0;
    return out;
  }
  const double log_rs_m = rs > 0.0 ? m * std::log(rs) : 0.0;
  const cplx base = log_rs_m - lam * std::log(a) - (lam + 1.0) * ls;
  if (z.real() == 0.0) {
    // z = iμ: Ĩ_λ(w/ i sin μ) = J̃_λ(w / sin μ), coth(iμ) = −i cot μ.
    const double mu = z.imag();
    const double u = 2.0 / a * std::pow(rs, 0.5 * a) / std::sin(mu);
    out.value = std::exp(base + kI * sum_pow * (std::cos(mu) / std::sin(mu)) / a) *
                bessel_j_tilde(lam, u);
  } else {
    const cplx w = 2.0 / a * std::pow(rs, 0.5 * a) * std::exp(-ls);
    out.value = std::exp(base - sum_pow * coth(z) / a + std::abs(w.real())) *
                bessel_i_tilde_scaled(lam, w);
  }
  const double bound = kernel_bound(r, s, z, sector);
  out.bound_ok = std::abs(out.value) <= bound * (1.0 + 1e-10) + 1e-300;
  return out;
}

KernelEval lambda_m_series(double r, double s, cplx z, const RadialSector& sector, int terms) {
  check_semigroup_parameter(z);
  check_sector(sector);
  if (!(z.real() > 0.0))
    throw DomainError("the eigenfunction series needs Re z > 0");
  const auto fr = phi_basis_all(terms - 1, sector, r);
  const auto fs = phi_basis_all(terms - 1, sector, s);
  cplx sum = 0.0;
  for (int l = 0; l < terms; ++l)
    sum += fr[l] * fs[l] * std::exp(-z * (2.0 * l + sector.lambda + 1.0));
  KernelEval out;
  out.value = sum;
  out.provenance = Provenance::series;
  out.bound_ok = std::abs(sum) <= kernel_bound(r, s, z, sector) * (1.0 + 1e-8);
  return out;
}

double kernel_bound(double r, double s, cplx z, const RadialSector& sector) {
  const double a = sector.params.a;
  const double lam = sector.lambda;
  const AlphaBeta ab = alpha_beta(z);
  const double rs = r * s;
  if (rs == 0.0 && sector.m > 0) return 0.0;
  const double log_rs_m = rs > 0.0 ? sector.m * std::log(rs) : 0.0;
  const double lc = -lam * std::log(a) - std::lgamma(lam + 1.0) - (lam + 1.0) * log_sinh(z).real();
  return std::exp(lc + log_rs_m -
                  (std::pow(r, a) + std::pow(s, a)) * ab.alpha * (1.0 - std::abs(ab.beta)) / a);
}

// Profile and full kernels

cplx h_profile(double r, double s, cplx z, double t, const DeformParams& params) {
  const double a = params.a;
  if (a != 1.0 && a != 2.0) return h_profile_series(r, s, z, t, params);
  check_semigroup_parameter(z);
  check_profile_domain(params);
  const double kk = params.index();
  const int N = params.N;
  const cplx ls = log_sinh(z);
  const cplx pref = -(std::pow(r, a) + std::pow(s, a)) * coth(z) / a - params.mu() / a * ls;
  if (a == 2.0) return std::exp(pref + r * s * t * std::exp(-ls));
  const cplx w = std::sqrt(2.0 * r * s * (1.0 + t)) * std::exp(-ls);
  return std::exp(pref + std::lgamma(kk + 0.5 * (N - 1)) + std::abs(w.real())) *
         bessel_i_tilde_scaled(kk + 0.5 * (N - 3), w);
}

cplx h_profile_series(double r, double s, cplx z, double t, const DeformParams& params) {
  check_semigroup_parameter(z);
  check_profile_domain(params);
  const double a = params.a;
  const double nu = 0.5 * (2.0 * params.index() + params.N - 2.0);
  const cplx ls = log_sinh(z);
  const double rs = r * s;
  const cplx pref = -(std::pow(r, a) + std::pow(s, a)) * coth(z) / a - params.mu() / a * ls;
  if (rs == 0.0) return std::exp(pref);
  // w = 2(rs)^{a/2} / (a sinh z), with log(w/2) on the same branch as log sinh.
  const cplx log_half_w = 0.5 * a * std::log(rs) - std::log(a) - ls;
  const cplx w = 2.0 * std::exp(log_half_w);
  const double shift = std::abs(w.real());
  const SeriesResult sr = i_fun_log(2.0 / a, nu, w, log_half_w, t, shift);
  return std::exp(pref + shift) * sr.value;
}

KernelEval lambda_full(const Point& x, const Point& y, cplx z, const DeformParams& params) {
  check_semigroup_parameter(z);
  const double a = params.a;
  const double r = norm_of(x), s = norm_of(y);
  const cplx ls = log_sinh(z);
  KernelEval out;
  out.provenance = Provenance::closed_form;
  if (params.N == 1) {
    const double k = params.k[0];
    const double xy = x[0] * y[0];
    const double order = (2.0 * k + a - 1.0) / a;
    const cplx w = 2.0 / a * std::pow(std::abs(xy), 0.5 * a) * std::exp(-ls);
    const double rew = std::abs(w.real());
    const cplx lead = std::lgamma(order) - (std::pow(r, a) + std::pow(s, a)) * coth(z) / a -
                      order * ls + rew;
    const cplx odd = xy == 0.0 ? cplx(0.0)
                               : xy * std::exp(-2.0 / a * (std::log(a) + ls)) *
                                     bessel_i_tilde_scaled((2.0 * k + 1.0) / a, w);
    out.value = std::exp(lead) * (bessel_i_tilde_scaled((2.0 * k - 1.0) / a, w) + odd);
  } else if (params.k_zero()) {
    const Point om = direction(x, r), et = direction(y, s);
    double t = 0.0;
    for (int i = 0; i < params.N; ++i) t += om[i] * et[i];
    t = std::clamp(t, -1.0, 1.0);
    out.value = h_profile(r, s, z, t, params);
  } else {
    throw ScopeError("closed full kernel needs N = 1 or k = 0; use the sector sum");
  }
  const AlphaBeta ab = alpha_beta(z);
  const double bound =
      std::exp(-params.mu() / a * ls.real() -
               (std::pow(r, a) + std::pow(s, a)) * ab.alpha * (1.0 - std::abs(ab.beta)) / a);
  out.bound_ok = std::abs(out.value) <= bound * (1.0 + 1e-10);
  return out;
}

SectorSum lambda_full_series(const Point& x, const Point& y, cplx z, const DeformParams& params,
                             int m_max) {
  const double r = norm_of(x), s = norm_of(y);
  const Point om = direction(x, r), et = direction(y, s);
  const double pref = std::exp(log_dk_over_cka(params));
  SectorSum out;
  const int top = params.N == 1 ? std::min(m_max, 1) : m_max;
  for (int m = 0; m <= top; ++m) {
    const RadialSector sec = RadialSector::make(params, m);
    const cplx term = pref * lambda_m(r, s, z, sec).value * reproducing_kernel(m, om, et, params);
    out.value += term;
    out.last_term = std::abs(term);
  }
  return out;
}

double poisson_kernel(int m, const Point& omega, const Point& eta, const DeformParams& params) {
  if (m < 0) throw DomainError("harmonic degree must be nonnegative");
  if (params.N == 1) {
    if (m == 0) return 1.0;
    if (m == 1) return omega[0] * eta[0] > 0.0 ? 1.0 : -1.0;
    return 0.0;
  }
  if (!params.k_zero()) throw ScopeError("closed Poisson kernel needs N = 1 or k = 0");
  double t = 0.0;
  for (int i = 0; i < params.N; ++i) t += omega[i] * eta[i];
  return gegenbauer_weighted(m, 0.5 * (params.N - 2), std::clamp(t, -1.0, 1.0));
}

double reproducing_kernel(int m, const Point& omega, const Point& eta, const DeformParams& params) {
  const auto& Y = unit_harmonics(params, m);
  double s = 0.0;
  for (const auto& p : Y) s += p.eval(omega) * p.eval(eta);
  return s / d_k(params);
}

// Integral identities

IdentityResidual semigroup_kernel_law(double r, double rp, cplx z1, cplx z2,
                                      const RadialSector& sector, int n_nodes) {
  if (!(z1.real() > 0.0 && z2.real() > 0.0))
    throw DomainError("semigroup law check needs Re z1 > 0 and Re z2 > 0");
  const double a = sector.params.a;
  const double rate = (alpha_beta(z1).alpha + alpha_beta(z2).alpha) / a;
  const QuadRule rule = radial_rule_rate(n_nodes, sector.lambda, a, rate);
  IdentityResidual res;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double s = rule.nodes[i];
    const cplx v = lambda_m(r, s, z1, sector).value * lambda_m(s, rp, z2, sector).value;
    res.lhs += rule.weights[i] * v * std::exp(rate * std::pow(s, a) - 2.0 * sector.m * std::log(s));
  }
  res.rhs = lambda_m(r, rp, z1 + z2, sector).value;
  res.residual = std::abs(res.lhs - res.rhs) / std::abs(res.rhs);
  return res;
}

IdentityResidual kernel_eigenrelation(int l, double r, cplx z, const RadialSector& sector,
                                      double scale, int n_nodes) {
  const double a = sector.params.a;
  const double rate = (alpha_beta(z).alpha + 1.0) / a;
  const QuadRule rule = radial_rule_rate(n_nodes, sector.lambda, a, rate);
  IdentityResidual res;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double s = rule.nodes[i];
    const cplx v = lambda_m(r, s, z, sector).value * phi_basis(l, sector, s);
    res.lhs += rule.weights[i] * v * std::exp(rate * std::pow(s, a) - 2.0 * sector.m * std::log(s));
  }
  res.rhs = std::exp(-z * (2.0 * l + sector.lambda + 1.0)) * phi_basis(l, sector, r);
  res.residual = std::abs(res.lhs - res.rhs) / scale;
  return res;
}

IdentityResidual weber_first(cplx delta, double alpha, double beta, double nu, int n_nodes) {
  if (!(delta.real() > 0.0)) throw DomainError("condition |arg delta| < pi/2 violated");
  if (nu < 0.0) throw DomainError("condition nu >= 0 violated");
  // J_ν(2α√T)J_ν(2β√T) = (αβT)^ν J̃_ν(2α√T)J̃_ν(2β√T); the factor (αβ)^ν cancels.
  const double rho = delta.real();
  const cplx osc = kI * delta.imag() / rho;
  const QuadRule& rule = cached_gauss_laguerre(n_nodes, nu);
  IdentityResidual res;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double T = rule.nodes[i] / rho;
    res.lhs += rule.weights[i] * std::exp(-osc * rule.nodes[i]) *
               bessel_j_tilde(nu, 2.0 * alpha * std::sqrt(T)) *
               bessel_j_tilde(nu, 2.0 * beta * std::sqrt(T));
  }
  res.lhs *= std::pow(rho, -nu - 1.0);
  // δ^{−1} e^{−(α²+β²)/δ} (αβ/δ)^ν Ĩ_ν(2αβ/δ), divided by (αβ)^ν.
  res.rhs = std::pow(delta, -nu - 1.0) * std::exp(-(alpha * alpha + beta * beta) / delta) *
            bessel_i_tilde(nu, 2.0 * alpha * beta / delta);
  res.residual = std::abs(res.lhs - res.rhs) / std::abs(res.rhs);
  return res;
}

IdentityResidual weber_second(cplx delta, double alpha, double beta, double nu, int l,
                              int n_nodes) {
  if (!(delta.real() > 0.0)) throw DomainError("condition Re delta > 0 violated");
  if (!(nu > 0.0)) throw DomainError("condition Re nu > 0 violated");
  // J_ν(β√T)T^{ν/2} = (β/2)^ν T^ν J̃_ν(β√T); the factor (β/2)^ν cancels.
  const double rho = delta.real();
  const cplx osc = kI * delta.imag() / rho;
  const QuadRule& rule = cached_gauss_laguerre(n_nodes, nu);
  IdentityResidual res;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double T = rule.nodes[i] / rho;
    res.lhs += rule.weights[i] * std::exp(-osc * rule.nodes[i]) * laguerre(l, nu, alpha * T) *
               bessel_j_tilde(nu, beta * std::sqrt(T));
  }
  res.lhs *= std::pow(rho, -nu - 1.0);
  const cplx arg = alpha * beta * beta / (4.0 * delta * (alpha - delta));
  res.rhs = std::pow(delta - alpha, l) * std::pow(delta, -nu - l - 1.0) *
            std::exp(-beta * beta / (4.0 * delta)) * laguerre(l, nu, arg);
  res.residual = std::abs(res.lhs - res.rhs) / std::abs(res.rhs);
  return res;
}

}  // namespace klag

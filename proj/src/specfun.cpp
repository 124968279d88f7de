#include "klag/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "klag/quadrature.hpp"

namespace klag {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,  676.5203681218851,
                                -1259.1392167224028,  771.32342877765313,
                                -176.61502916214059,  12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6,
                                1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// log Γ(z) for Re z ≥ 1/2.
cplx lanczos_log_gamma(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// Sign of Γ(x) for real x that is not a pole.
double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1.0 : -1.0;
}

// Number of Gauss–Jacobi nodes that resolves e^{wt} on [−1,1].
int integral_nodes(double abs_w) {
  int n = 24 + static_cast<int>(std::ceil(0.75 * abs_w));
  return (n + 7) / 8 * 8;
}

}  // namespace

double PolynomialCoeffs::operator()(double t) const {
  double s = 0.0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) s = s * t + coeffs[i];
  return s;
}

double gamma(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("Gamma has a pole at nonpositive integers");
  return std::tgamma(x);
}

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
    throw PoleError("Gamma has a pole at nonpositive integers");
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(std::sin(kPi * z)) - lanczos_log_gamma(1.0 - z);
  }
  return lanczos_log_gamma(z);
}

cplx gamma(cplx z) {
  if (z.imag() == 0.0) return gamma(z.real());
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * std::exp(lanczos_log_gamma(1.0 - z)));
  return std::exp(lanczos_log_gamma(z));
}

double pochhammer(double x, int n) {
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= x + i;
  return p;
}

// Laguerre

double laguerre(int l, double lambda, double t) {
  if (l < 0) return 0.0;
  double p0 = 1.0;
  if (l == 0) return p0;
  double p1 = 1.0 + lambda - t;
  for (int n = 1; n < l; ++n) {
    const double p2 = ((2.0 * n + 1.0 + lambda - t) * p1 - (n + lambda) * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

cplx laguerre(int l, double lambda, cplx t) {
  if (l < 0) return 0.0;
  cplx p0 = 1.0;
  if (l == 0) return p0;
  cplx p1 = 1.0 + lambda - t;
  for (int n = 1; n < l; ++n) {
    const cplx p2 = ((2.0 * n + 1.0 + lambda - t) * p1 - (n + lambda) * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

std::vector<double> laguerre_all(int lmax, double lambda, double t) {
  std::vector<double> out(std::max(lmax + 1, 0));
  if (lmax < 0) return out;
  out[0] = 1.0;
  if (lmax >= 1) out[1] = 1.0 + lambda - t;
  for (int n = 1; n < lmax; ++n)
    out[n + 1] = ((2.0 * n + 1.0 + lambda - t) * out[n] - (n + lambda) * out[n - 1]) / (n + 1.0);
  return out;
}

PolynomialCoeffs laguerre_coeffs(int l, double lambda) {
  PolynomialCoeffs p;
  p.degree = l;
  p.coeffs = laguerre_coeffs_t<double>(l, lambda);
  return p;
}

double laguerre_semigroup_monomial(int l, double lambda, double c, double t) {
  if (c == 0.0) throw DomainError("Laguerre semigroup representation needs c != 0");
  PolynomialCoeffs p;
  p.degree = l;
  p.coeffs = laguerre_semigroup_coeffs<double>(l, lambda, c);
  return p(t);
}

// Bessel

SeriesResult bessel_i_tilde_series(double lambda, cplx w, double shift, const SeriesOptions& opt) {
  if (!(lambda > -1.0)) throw DomainError("normalized Bessel series requires order > -1");
  const cplx y = 0.25 * w * w;
  const double ay = std::abs(y);
  cplx term = std::exp(-shift - std::lgamma(lambda + 1.0));
  cplx sum = term;
  SeriesResult res;
  for (int l = 0; l < opt.max_terms; ++l) {
    const double denom = (l + 1.0) * (lambda + l + 1.0);
    term *= y / denom;
    sum += term;
    const double ratio = ay / ((l + 2.0) * (lambda + l + 2.0));
    const double scale = std::max(std::abs(sum), 1e-300);
    if (ratio < 0.5 && std::abs(term) <= opt.tol * scale) {
      res.value = sum;
      res.terms_used = l + 2;
      res.truncation_error_estimate = std::abs(term) * ratio / (1.0 - ratio) / scale;
      return res;
    }
    if (term == 0.0) {
      res.value = sum;
      res.terms_used = l + 2;
      return res;
    }
  }
  throw ConvergenceError("normalized Bessel series exceeded the term cap");
}

cplx bessel_i_tilde_integral(double lambda, cplx w, int n_nodes, double shift) {
  if (!(lambda > -0.5))
    throw DomainError("integral representation of the normalized Bessel function needs order > -1/2");
  const QuadRule& q = cached_gauss_jacobi(n_nodes, lambda - 0.5, lambda - 0.5);
  cplx s = 0.0;
  if (w.real() == 0.0 && shift == 0.0) {
    // Symmetric rule: the sine part cancels for imaginary argument.
    double c = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) c += q.weights[i] * std::cos(w.imag() * q.nodes[i]);
    s = c;
  } else {
    for (std::size_t i = 0; i < q.size(); ++i) s += q.weights[i] * std::exp(w * q.nodes[i] - shift);
  }
  return s / std::exp(0.5 * std::log(kPi) + std::lgamma(lambda + 0.5));
}

cplx bessel_i_tilde_scaled(double lambda, cplx w) {
  if (!(lambda > -1.0)) throw DomainError("normalized Bessel function requires order > -1");
  const double aw = std::abs(w);
  const double shift = std::abs(w.real());
  if (aw <= 6.0 || aw - shift <= 6.0) return bessel_i_tilde_series(lambda, w, shift).value;
  const int n = integral_nodes(aw);
  if (lambda > -0.5) return bessel_i_tilde_integral(lambda, w, n, shift);
  // Orders in (−1, −1/2]: Ĩ_λ = (w²/4) Ĩ_{λ+2} + (λ+1) Ĩ_{λ+1}.
  const cplx i1 = bessel_i_tilde_integral(lambda + 1.0, w, n, shift);
  const cplx i2 = bessel_i_tilde_integral(lambda + 2.0, w, n, shift);
  return 0.25 * w * w * i2 + (lambda + 1.0) * i1;
}

cplx bessel_i_tilde(double lambda, cplx w) {
  return bessel_i_tilde_scaled(lambda, w) * std::exp(std::abs(w.real()));
}

cplx bessel_j_tilde(double nu, cplx w) { return bessel_i_tilde(nu, kI * w); }

// Gegenbauer

double gegenbauer(int m, double nu, double t) {
  if (m < 0) return 0.0;
  double c0 = 1.0;
  if (m == 0) return c0;
  double c1 = 2.0 * nu * t;
  for (int n = 1; n < m; ++n) {
    const double c2 = (2.0 * (n + nu) * t * c1 - (n + 2.0 * nu - 1.0) * c0) / (n + 1.0);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

double gegenbauer_cos_sum(int m, double nu, double t) {
  const double theta = std::acos(std::clamp(t, -1.0, 1.0));
  double s = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double coef = pochhammer(nu, j) * pochhammer(nu, m - j) /
                        (std::tgamma(j + 1.0) * std::tgamma(m - j + 1.0));
    s += coef * std::cos((m - 2.0 * j) * theta);
  }
  return s;
}

double gegenbauer_limit0(int m, double t) {
  if (m < 1) throw DomainError("the nu -> 0 limit of C_m/nu exists only for m >= 1");
  // Chebyshev recurrence for T_m(t) = cos(m arccos t).
  double t0 = 1.0, t1 = t;
  for (int n = 1; n < m; ++n) {
    const double t2 = 2.0 * t * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return 2.0 * t1 / m;
}

double gegenbauer_weighted(int m, double nu, double t) {
  if (m == 0) return 1.0;
  if (nu == 0.0) return m * gegenbauer_limit0(m, t);
  return (m + nu) / nu * gegenbauer(m, nu, t);
}

double gegenbauer_b(int m, double nu) {
  if (nu == 0.0 || is_nonpositive_integer(m + 2.0 * nu))
    throw DomainError("Gegenbauer normalization undefined at this (nu, m)");
  const double lg = (2.0 * nu - 1.0) * std::log(2.0) + std::lgamma(m + 1.0) + std::lgamma(nu) +
                    std::lgamma(nu + 1.0) - std::log(kPi) - std::lgamma(m + 2.0 * nu);
  return gamma_sign(nu) * gamma_sign(m + 2.0 * nu) * std::exp(lg);
}

cplx gegenbauer_transform(int m, double nu, const std::function<cplx(double)>& h, int n_nodes) {
  if (!(nu > -0.5)) throw DomainError("Gegenbauer transform requires nu > -1/2");
  if (n_nodes < m + 1)
    throw QuadratureError("Gegenbauer transform: node count below the degree of C_m");
  const QuadRule& q = cached_gauss_jacobi(n_nodes, nu - 0.5, nu - 0.5);
  cplx s = 0.0;
  if (nu == 0.0) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      const double ker = m == 0 ? 1.0 : 0.5 * m * gegenbauer_limit0(m, q.nodes[i]);
      s += q.weights[i] * h(q.nodes[i]) * ker;
    }
    return s / kPi;
  }
  for (std::size_t i = 0; i < q.size(); ++i)
    s += q.weights[i] * h(q.nodes[i]) * gegenbauer(m, nu, q.nodes[i]);
  return gegenbauer_b(m, nu) * s;
}

// Bessel–Gegenbauer series

SeriesResult i_fun_log(double b, double nu, cplx w, cplx log_half_w, double t, double shift,
                       const SeriesOptions& opt) {
  if (!(b > 0.0)) throw DomainError("I-series requires b > 0");
  if (!(1.0 + b * nu > 0.0)) throw DomainError("I-series requires 1 + b*nu > 0");
  SeriesResult res;
  if (w == 0.0) {
    res.value = std::exp(-shift);
    res.terms_used = 1;
    return res;
  }
  const double rew = std::abs(w.real());
  cplx sum = 0.0;
  int small_run = 0;
  for (int m = 0; m < opt.max_terms; ++m) {
    const cplx pw = std::exp(b * m * log_half_w);
    const cplx bi = bessel_i_tilde_scaled(b * (m + nu), w);
    const double g = gegenbauer_weighted(m, nu, t);
    const double gmax = std::max({1.0, std::abs(g), std::abs(gegenbauer_weighted(m, nu, 1.0))});
    sum += pw * bi * g;
    const double envelope = std::abs(pw * bi) * gmax;
    const double scale = std::max(std::abs(sum), 1e-300);
    small_run = (m > 0 && envelope <= opt.tol * scale) ? small_run + 1 : 0;
    if (small_run >= 3) {
      res.terms_used = m + 1;
      res.truncation_error_estimate = envelope / scale;
      res.value = std::exp(std::lgamma(b * nu + 1.0) + rew - shift) * sum;
      return res;
    }
  }
  throw ConvergenceError("I-series exceeded the term cap");
}

SeriesResult i_fun(double b, double nu, cplx w, double t, const SeriesOptions& opt) {
  const cplx lw = w == 0.0 ? cplx(0.0) : std::log(0.5 * w);
  return i_fun_log(b, nu, w, lw, t, 0.0, opt);
}

// Hille–Hardy

cplx hille_hardy_lhs(double lambda, double u, double v, cplx w, int n_terms) {
  if (!(lambda > -1.0)) throw DomainError("Hille-Hardy requires lambda > -1");
  const auto lu = laguerre_all(n_terms - 1, lambda, u);
  const auto lv = laguerre_all(n_terms - 1, lambda, v);
  cplx s = 0.0, wk = 1.0;
  for (int k = 0; k < n_terms; ++k) {
    const double c = std::exp(std::lgamma(k + 1.0) - std::lgamma(lambda + k + 1.0));
    s += c * lu[k] * lv[k] * wk;
    wk *= w;
  }
  return s;
}

cplx hille_hardy_rhs(double lambda, double u, double v, cplx w) {
  if (!(std::abs(w) < 1.0)) throw DomainError("Hille-Hardy requires |w| < 1");
  const cplx one_m = 1.0 - w;
  const cplx arg = 2.0 * std::sqrt(u * v * w) / one_m;
  return std::pow(one_m, -lambda - 1.0) * std::exp(-(u + v) * w / one_m) *
         bessel_i_tilde(lambda, arg);
}

}  // namespace klag

#pragma once

#include <functional>
#include <vector>

#include "klag/types.hpp"

namespace klag {

struct SeriesResult {
  cplx value{};
  int terms_used = 0;
  double truncation_error_estimate = 0.0;
};

struct SeriesOptions {
  double tol = 1e-12;
  int max_terms = 10000;
};

/// Real polynomial in one variable, coefficients indexed by power.
struct PolynomialCoeffs {
  int degree = 0;
  std::vector<double> coeffs;

  double operator()(double t) const;
};

// Gamma and friends

double gamma(double x);
cplx gamma(cplx z);
cplx log_gamma(cplx z);
double pochhammer(double x, int n);

// Laguerre

/// L_ℓ^(λ)(t) by the three-term recurrence in ℓ.
double laguerre(int l, double lambda, double t);
cplx laguerre(int l, double lambda, cplx t);
/// L_0 … L_lmax at one point.
std::vector<double> laguerre_all(int lmax, double lambda, double t);
/// Coefficients of L_ℓ^(λ) from the defining finite sum.
PolynomialCoeffs laguerre_coeffs(int l, double lambda);

/// Coefficients of L_ℓ^(λ) in any field T (double, exact rationals, ...).
template <class T>
std::vector<T> laguerre_coeffs_t(int l, const T& lambda) {
  std::vector<T> c(l + 1);
  for (int j = 0; j <= l; ++j) {
    T num(1);
    for (int q = j + 1; q <= l; ++q) num *= lambda + T(q);
    T den(1);
    for (int q = 2; q <= j; ++q) den *= T(q);
    for (int q = 2; q <= l - j; ++q) den *= T(q);
    c[j] = (j % 2 ? T(-1) : T(1)) * num / den;
  }
  return c;
}

/// Coefficients of exp(−cB) t^ℓ with B = t d²/dt² + (λ+1) d/dt, summed as the
/// terminating series Σ_j (−c)^j/j! B^j t^ℓ.
template <class T>
std::vector<T> laguerre_semigroup_coeffs(int l, const T& lambda, const T& c) {
  std::vector<T> out(l + 1, T(0));
  T term(1);  // (−c)^j/j! · Π_{i<j} (ℓ−i)(λ+ℓ−i)
  for (int j = 0; j <= l; ++j) {
    out[l - j] = term;
    if (j == l) break;
    term *= -c * T(l - j) * (lambda + T(l - j)) / T(j + 1);
  }
  return out;
}

/// Coefficients of (−c)^ℓ ℓ! L_ℓ^(λ)(t/c).
template <class T>
std::vector<T> scaled_laguerre_coeffs(int l, const T& lambda, const T& c) {
  std::vector<T> lc = laguerre_coeffs_t<T>(l, lambda);
  T pref(1);
  for (int q = 0; q < l; ++q) pref *= -c;
  for (int q = 2; q <= l; ++q) pref *= T(q);
  T cpow(1);
  for (int i = 0; i <= l; ++i) {
    lc[i] = pref * lc[i] / cpow;
    cpow *= c;
  }
  return lc;
}

double laguerre_semigroup_monomial(int l, double lambda, double c, double t);

// Bessel

/// Ĩ_λ(w) = (w/2)^{−λ} I_λ(w), entire and even in w. Accepts λ > −1.
cplx bessel_i_tilde(double lambda, cplx w);
/// e^{−|Re w|} Ĩ_λ(w), safe when combined with decaying prefactors.
cplx bessel_i_tilde_scaled(double lambda, cplx w);
/// J̃_ν(w) = Ĩ_ν(iw).
cplx bessel_j_tilde(double nu, cplx w);

/// Power series Σ (w²/4)^ℓ / (ℓ! Γ(λ+ℓ+1)), optionally multiplied by e^{−shift}.
SeriesResult bessel_i_tilde_series(double lambda, cplx w, double shift = 0.0,
                                   const SeriesOptions& opt = {});
/// Gauss–Jacobi evaluation of (√π Γ(λ+1/2))^{−1} ∫ e^{wt − shift} (1−t²)^{λ−1/2} dt, λ > −1/2.
cplx bessel_i_tilde_integral(double lambda, cplx w, int n_nodes, double shift = 0.0);

// Gegenbauer

/// C_m^ν(t) by the three-term recurrence.
double gegenbauer(int m, double nu, double t);
/// C_m^ν(cos θ) from the closed cosine sum.
double gegenbauer_cos_sum(int m, double nu, double t);
/// lim_{ν→0} C_m^ν(t)/ν = (2/m) cos(m arccos t) for m ≥ 1.
double gegenbauer_limit0(int m, double t);
/// ((m+ν)/ν) C_m^ν(t), continuous through ν = 0.
double gegenbauer_weighted(int m, double nu, double t);
/// Normalization b_{ν,m} of the Gegenbauer transform (ν ≠ 0).
double gegenbauer_b(int m, double nu);

/// 𝓒_{ν,m}(h) = b_{ν,m} ∫ h(t) C_m^ν(t) (1−t²)^{ν−1/2} dt by Gauss–Gegenbauer.
cplx gegenbauer_transform(int m, double nu, const std::function<cplx(double)>& h,
                          int n_nodes);

// Bessel–Gegenbauer series

/// 𝓘(b,ν;w;t) = Γ(bν+1)/ν Σ_m (m+ν)(w/2)^{bm} Ĩ_{b(m+ν)}(w) C_m^ν(t), principal branch of (w/2)^b.
SeriesResult i_fun(double b, double nu, cplx w, double t, const SeriesOptions& opt = {});
/// Same series with the branch fixed by an explicit value of log(w/2), and an
/// overall factor e^{−shift}.
SeriesResult i_fun_log(double b, double nu, cplx w, cplx log_half_w, double t,
                       double shift = 0.0, const SeriesOptions& opt = {});

// Hille–Hardy

cplx hille_hardy_lhs(double lambda, double u, double v, cplx w, int n_terms);
cplx hille_hardy_rhs(double lambda, double u, double v, cplx w);

}  // namespace klag

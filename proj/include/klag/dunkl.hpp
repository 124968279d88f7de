#pragma once

#include <functional>
#include <string>
#include <vector>

#include "klag/params.hpp"
#include "klag/poly.hpp"

namespace klag {

/// ϑ_k(x) = Π |x_i|^{2k_i}.
double theta_k(const Point& x, const DeformParams& params);
/// ϑ_{k,a}(x) = ‖x‖^{a−2} Π |x_i|^{2k_i}.
double weight(const Point& x, const DeformParams& params);

/// d_k = (∫_{S^{N−1}} ϑ_k dσ)^{−1}, closed form for ℤ₂ᴺ.
double d_k(const DeformParams& params);

/// T_i(k) on polynomials: ∂_i f + k_i (f − f∘σ_i)/x_i, divided exactly.
template <class T>
Poly<T> dunkl_apply(const Poly<T>& f, int i, const std::vector<T>& k) {
  Poly<T> r(f.dim());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponent g(e);
    --g[i];
    T factor = T(e[i]);
    if (e[i] % 2) factor += T(2) * k[i];
    r.add_term(g, c * factor);
  }
  return r;
}

/// Δ_k = Σ_i T_i(k)².
template <class T>
Poly<T> dunkl_laplacian(const Poly<T>& f, const std::vector<T>& k) {
  Poly<T> r(f.dim());
  for (int i = 0; i < f.dim(); ++i) r += dunkl_apply(dunkl_apply(f, i, k), i, k);
  return r;
}

PolyND dunkl_apply(const PolyND& f, int i, const DeformParams& params);
PolyND dunkl_laplacian(const PolyND& f, const DeformParams& params);

/// Scalar b_n with V_k xⁿ = b_n xⁿ in rank one.
template <class T>
T intertwiner_coefficient(int n, const T& k) {
  T b(1);
  const int q = (n + 1) / 2;
  for (int j = 0; j < q; ++j) b *= (T(2 * j + 1) / T(2)) / (k + T(2 * j + 1) / T(2));
  return b;
}

/// Rank-one intertwining operator, monomial by monomial.
template <class T>
Poly<T> intertwiner_rank1(const Poly<T>& f, const T& k) {
  if (f.dim() != 1) throw ScopeError("rank-one intertwiner needs a one-variable polynomial");
  Poly<T> r(1);
  for (const auto& [e, c] : f.terms()) r.add_term(e, c * intertwiner_coefficient<T>(e[0], k));
  return r;
}

/// Basis of k-harmonic polynomials of degree m, orthonormal for
/// (p, q) = d_k ∫_{S^{N−1}} p q ϑ_k dσ.
std::vector<PolyND> harmonic_basis(int m, const DeformParams& params);
/// dim 𝓗^m(ℝᴺ) = dim 𝓟_m − dim 𝓟_{m−2}.
long harmonic_dimension(int N, int m);

/// (Ṽ_k h)(ω, η) on S⁰ × S⁰: c_k ∫ h(tωη)(1+t)(1−t²)^{k−1} dt.
double vtilde_rank1(const std::function<double(double)>& h, double omega, double eta, double k,
                    int n_nodes = 48);

/// Funk–Hecke residual |d_k∫(Ṽ_k h)(ω,η)p(η)ϑ_k dσ(η) − 𝓒_{⟨k⟩+(N−2)/2,m}(h) p(ω)|.
double funk_hecke_check(const std::function<double(double)>& h, const PolyND& p, int m,
                        const Point& omega, const DeformParams& params, int n_nodes = 48);

struct CheckLine {
  std::string name;
  double residual = 0.0;
};

/// Exact (rational) residuals of the Dunkl commutation identities on the given
/// polynomials; every residual is 0 when the identities hold.
std::vector<CheckLine> commutator_checks(const DeformParams& params,
                                         const std::vector<PolyQ>& test_polys);

Rational to_rational(double x);

}  // namespace klag

#pragma once

#include <string>

#include "klag/params.hpp"
#include "klag/types.hpp"

namespace klag {

enum class Provenance { closed_form, series, quadrature };

std::string to_string(Provenance p);

struct KernelEval {
  cplx value{};
  Provenance provenance = Provenance::closed_form;
  bool bound_ok = true;
};

struct AlphaBeta {
  double alpha = 0.0;  ///< Re coth z
  double beta = 0.0;   ///< Re(1/sinh z) / Re coth z
};

/// α(z) = sinh 2x / (cosh 2x − cos 2y), β(z) = cos y / cosh x for z = x + iy.
AlphaBeta alpha_beta(cplx z);

/// log sinh z on the branch z + Log(1 − e^{−2z}) − log 2, continuous on Re z ≥ 0
/// away from iπℤ and real on the positive axis.
cplx log_sinh(cplx z);

/// Throws PoleError for z ∈ iπℤ and DomainError for Re z < 0.
void check_semigroup_parameter(cplx z);

// Radial kernels

/// Λ^{(m)}(r,s;z): Ĩ closed form for Re z > 0, J̃ form on the imaginary axis.
KernelEval lambda_m(double r, double s, cplx z, const RadialSector& sector);
/// Truncated eigenfunction sum Σ_{ℓ<terms} f_ℓ(r) f_ℓ(s) e^{−z(2ℓ+λ+1)}; needs Re z > 0.
KernelEval lambda_m_series(double r, double s, cplx z, const RadialSector& sector, int terms);

/// C(k,a,m;z) (rs)^m exp(−(1/a)(r^a+s^a) α(z)(1−|β(z)|)).
double kernel_bound(double r, double s, cplx z, const RadialSector& sector);

// Profile and full kernels

/// h_{k,a}(r,s;z;t): elementary closed form for a ∈ {1, 2}, Bessel–Gegenbauer series otherwise.
cplx h_profile(double r, double s, cplx z, double t, const DeformParams& params);
/// h_{k,a} through the Bessel–Gegenbauer series for every a.
cplx h_profile_series(double r, double s, cplx z, double t, const DeformParams& params);

/// Λ_{k,a}(x,y;z): two-Bessel closed form in rank one, h at t = ⟨ω,η⟩ when k ≡ 0.
/// bound_ok reports |Λ| ≤ |sinh z|^{−μ/a} e^{−(‖x‖^a+‖y‖^a)α(1−|β|)/a}.
KernelEval lambda_full(const Point& x, const Point& y, cplx z, const DeformParams& params);

struct SectorSum {
  cplx value{};
  double last_term = 0.0;  ///< magnitude of the m = m_max summand
};
/// (d_k/c_{k,a}) Σ_{m ≤ m_max} Λ^{(m)}(r,s;z) P_{k,m}(ω,η) with the reproducing
/// kernel built from the harmonic basis; valid for every (N, k).
SectorSum lambda_full_series(const Point& x, const Point& y, cplx z, const DeformParams& params,
                             int m_max);

/// P_{k,m}(ω,η) = ((ν+m)/ν)(Ṽ_k C_m^ν)(ω,η), ν = ⟨k⟩ + (N−2)/2; N = 1 or k ≡ 0.
double poisson_kernel(int m, const Point& omega, const Point& eta, const DeformParams& params);
/// Σ_j Ỹ_j(ω) Ỹ_j(η) over the orthonormal harmonic basis of degree m.
double reproducing_kernel(int m, const Point& omega, const Point& eta, const DeformParams& params);

// Integral identities

struct IdentityResidual {
  cplx lhs{};
  cplx rhs{};
  double residual = 0.0;  ///< |lhs − rhs| / |rhs| unless stated otherwise
};

/// ∫ Λ^{(m)}(r,s;z₁) Λ^{(m)}(s,r′;z₂) s^{2⟨k⟩+N+a−3} ds against Λ^{(m)}(r,r′;z₁+z₂).
IdentityResidual semigroup_kernel_law(double r, double rp, cplx z1, cplx z2,
                                      const RadialSector& sector, int n_nodes = 160);

/// ∫ Λ^{(m)}(r,s;z) f_ℓ(s) s^{2⟨k⟩+N+a−3} ds against e^{−z(2ℓ+λ+1)} f_ℓ(r).
/// The residual is measured relative to |e^{−z(2ℓ+λ+1)}| sup_r |f_ℓ(r)| given as scale.
IdentityResidual kernel_eigenrelation(int l, double r, cplx z, const RadialSector& sector,
                                      double scale, int n_nodes = 160);

/// ∫₀^∞ e^{−δT} J_ν(2α√T) J_ν(2β√T) dT = δ^{−1} e^{−(α²+β²)/δ} I_ν(2αβ/δ).
/// lhs and rhs are reported divided by (αβ)^ν.
IdentityResidual weber_first(cplx delta, double alpha, double beta, double nu, int n_nodes = 200);

/// ∫₀^∞ e^{−δT} L_ℓ^{(ν)}(αT) J_ν(β√T) T^{ν/2} dT
///   = (δ−α)^ℓ β^ν / (2^ν δ^{ν+ℓ+1}) e^{−β²/(4δ)} L_ℓ^{(ν)}(αβ²/(4δ(α−δ))).
/// lhs and rhs are reported divided by (β/2)^ν.
IdentityResidual weber_second(cplx delta, double alpha, double beta, double nu, int l,
                              int n_nodes = 200);

}  // namespace klag

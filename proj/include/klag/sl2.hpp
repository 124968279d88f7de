#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "klag/dunkl.hpp"
#include "klag/params.hpp"
#include "klag/poly.hpp"

namespace klag {

// Radial basis

/// ∫ |Φ_ℓ|² r^{2⟨k⟩+N+a−3} dr for the unnormalized radial part
/// r^m L_ℓ^(λ)((2/a)r^a) e^{−r^a/a}, namely a^λ Γ(λ+ℓ+1) / (2^{1+λ} ℓ!).
double phi_norm_sq(int l, const RadialSector& sector);
double phi_unnormalized(int l, const RadialSector& sector, double r);
/// f_{ℓ,m}^{(a)}(r), orthonormal in L²(ℝ₊, r^{2⟨k⟩+N+a−3} dr).
double phi_basis(int l, const RadialSector& sector, double r);
/// f_{0,m} … f_{lmax,m} at one radius.
std::vector<double> phi_basis_all(int lmax, const RadialSector& sector, double r);

// Ladder matrices

enum class Sl2Op { H, Eplus, Eminus, K, Nplus, Nminus };

std::string to_string(Sl2Op op);

/// Matrix of an sl₂ element on span{f_{0,m}, …, f_{lmax,m}}. The raising
/// operators lose their top row to truncation.
Eigen::MatrixXcd ladder_matrix(Sl2Op op, const RadialSector& sector, int lmax);

struct RelationResidual {
  std::string relation;
  double residual = 0.0;
};

/// [H,E±] = ±2E±, [E⁺,E⁻] = H, [K,N±] = ±2N±, [N⁺,N⁻] = K and skew-adjointness
/// of H, E±, measured on the block ℓ < lmax away from the truncation edge.
std::vector<RelationResidual> sl2_relation_check(const RadialSector& sector, int lmax);

// Exact action on radial profiles

/// ψ(t) = q(t) e^{−βt} with q a polynomial in t = r^a; a function p(x)ψ(‖x‖^a)
/// with p harmonic of degree m lies in sector m.
struct RadialProfile {
  std::vector<cplx> q;  ///< coefficients, q[j] multiplies t^j
  cplx beta = 0.0;

  cplx operator()(double t) const;
  RadialProfile derivative() const;
  RadialProfile& operator+=(const RadialProfile& o);
  RadialProfile operator*(cplx s) const;
};

/// Radial forms: H = 2t d/dt + (λ+1), E⁺ = (i/a) t, E⁻ = a i (t d²/dt² + (λ+1) d/dt),
/// and K, N± through the Cayley relations.
RadialProfile sl2_operators_apply(Sl2Op op, const RadialProfile& f, const RadialSector& sector);

/// Profile of Φ_ℓ: L_ℓ^(λ)(2t/a) e^{−t/a}.
RadialProfile phi_profile(int l, const RadialSector& sector);

/// max |ψ₁(t) − ψ₂(t)| over t on a grid in [0, t_max].
double profile_distance(const RadialProfile& f, const RadialProfile& g, double t_max = 20.0,
                        int n = 200);

// Spectrum

struct SpectrumEntry {
  double eigenvalue = 0.0;
  int l = 0;
  int m = 0;
  long multiplicity = 0;  ///< dim 𝓗^m(ℝᴺ)
};

/// Lowest eigenvalues a(2ℓ + λ_{k,a,m} + 1) of −‖x‖^{2−a}Δ_k + ‖x‖^a, one entry per (ℓ, m).
std::vector<SpectrumEntry> spectrum(const DeformParams& params, int count);

// Spectral functions

using ModeIndex = std::array<int, 3>;  // (ℓ, m, j)

struct SpectralFunction {
  DeformParams params;
  int l_max = 0;
  int m_max = 0;
  std::map<ModeIndex, cplx> coeffs;

  cplx coeff(int l, int m, int j) const;
  double norm_sq() const;
  /// Σ c_{ℓ,m,j} Φ̃_{ℓ,m,j}(x).
  cplx evaluate(const Point& x) const;
};

struct ExpandOptions {
  int l_max = 40;
  int m_max = 4;
  int n_radial = 64;
  int n_angular = 0;          ///< 0 picks m_max + 8
  double rate = 0.0;          ///< decay rate of the radial rule; 0 picks 2/a
  double max_defect = 1e-6;   ///< refuse above this Parseval defect
  bool refuse = true;
};

struct ExpandResult {
  SpectralFunction f;
  double norm_sq = 0.0;  ///< ‖f‖²_k by quadrature
  double defect = 0.0;   ///< 1 − Σ|c|²/‖f‖²
};

/// c_{ℓ,m,j} = ⟨f, Φ̃_{ℓ,m,j}⟩_k by polar quadrature.
ExpandResult expand(const std::function<cplx(const Point&)>& f, const DeformParams& params,
                    const ExpandOptions& opt = {});

struct RadialExpandResult {
  std::vector<cplx> coeffs;
  double norm_sq = 0.0;
  double defect = 0.0;
};

/// Coefficients of g against f_{ℓ,m}; g is the radial factor of Ỹ(ω) g(r) with
/// Ỹ a unit-norm harmonic.
RadialExpandResult expand_radial(const std::function<cplx(double)>& g,
                                 const RadialSector& sector, const ExpandOptions& opt = {});

/// Closed-form coefficients of e^{−c r^a} r^m against f_{ℓ,m}.
std::vector<double> gaussian_coefficients(double c, const RadialSector& sector, int lmax);

/// Basis harmonics cached per (params, m): √d_k · orthonormal harmonic basis.
const std::vector<PolyND>& unit_harmonics(const DeformParams& params, int m);

// Semigroup and transform

/// Ω_{k,a}(γ_z): multiplies c_{ℓ,m,j} by e^{−z(2ℓ+λ_{k,a,m}+1)}.
SpectralFunction semigroup_apply(const SpectralFunction& f, cplx z);
/// sup over retained modes of |e^{−z(2ℓ+λ+1)}|.
double semigroup_norm(const SpectralFunction& f, cplx z);

/// e^{−iπθ}, exact when 2θ is an integer.
cplx unit_phase(double theta);
/// 𝓕_{k,a}: multiplies c_{ℓ,m,j} by e^{−iπ(ℓ + m/a)}.
SpectralFunction fka_apply_spectral(const SpectralFunction& f);
/// Phase e^{−iπ(ℓ+m/a)} of 𝓕_{k,a} on the (ℓ, m) eigenspace.
cplx fka_phase(int l, int m, double a);

/// Residual of 𝓕ⁿ on rational a = p/q, with phases tracked as exact fractions
/// of π; n defaults to 2p. Also returns the smallest order on the retained modes.
struct FiniteOrderResult {
  long p = 0, q = 0;
  long applied = 0;
  long order_on_modes = 0;
  double residual = 0.0;
};
FiniteOrderResult finite_order_check(const SpectralFunction& f, long p, long q, long n = 0);

/// 𝓑_{k,a}(p ‖x‖^{aℓ}) = p(x) exp(−(a/2)B)[t^ℓ] e^{−‖x‖^a/a} = (−a/2)^ℓ ℓ! Φ_ℓ(p, x).
std::function<double(const Point&)> segal_bargmann_apply(const PolyND& p, int l,
                                                         const RadialSector& sector);
/// The same operator built from the radial forms of E⁺, E⁻ as exp(iE⁺)exp((i/2)E⁻) t^ℓ.
RadialProfile segal_bargmann_profile(int l, const RadialSector& sector);

// Heisenberg

/// Tridiagonal matrix of multiplication by r^a on f_{0,m}, …, f_{n−1,m}.
Eigen::MatrixXd radial_power_matrix(const RadialSector& sector, int n);
/// ‖ ‖x‖^{a/2} f ‖²_k computed from the coefficients.
double position_moment(const SpectralFunction& f);

struct HeisenbergResult {
  double lhs = 0.0;
  double rhs = 0.0;
};
HeisenbergResult heisenberg_product(const SpectralFunction& f);

}  // namespace klag

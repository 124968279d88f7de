#pragma once

#include <functional>
#include <string>
#include <vector>

#include "klag/params.hpp"
#include "klag/sl2.hpp"
#include "klag/types.hpp"

namespace klag {

/// c_{k,a} = a^{−(2⟨k⟩+N−2)/a} Γ((2⟨k⟩+N+a−2)/a)^{−1} d_k.
double c_ka(const DeformParams& params);
/// (∫ e^{−‖x‖^a/a} ϑ_{k,a}(x) dx)^{−1} by double-exponential quadrature in polar
/// coordinates, with no Gamma function involved.
double c_ka_quadrature(const DeformParams& params);

/// Scopes in which B_{k,a} has a closed evaluation.
enum class BScope { rank_one, k_zero_a1, k_zero_a2, z2n_a2 };

std::string to_string(BScope s);
BScope scope_from_string(const std::string& s);

struct BKernelSpec {
  DeformParams params;
  BScope scope = BScope::rank_one;

  /// Validates that the scope covers params; throws ScopeError otherwise.
  static BKernelSpec make(const DeformParams& params, BScope scope);
  /// Picks the first scope that covers params.
  static BKernelSpec automatic(const DeformParams& params);
};

/// B_{k,a}(x,y).
cplx b_kernel(const Point& x, const Point& y, const BKernelSpec& spec);
/// e^{iπμ/(2a)} Λ_{k,a}(x,y; iπ/2), from the semigroup kernel.
cplx b_kernel_from_lambda(const Point& x, const Point& y, const DeformParams& params);

// Quadrature on ℝᴺ

/// Polar rule for ∫ g(x) ϑ_{k,a}(x) dx when g decays like e^{−rate‖x‖^a}; the
/// weights already contain the factor e^{rate‖x‖^a}.
struct PolarRule {
  std::vector<Point> points;
  std::vector<double> weights;
};
PolarRule polar_rule(const DeformParams& params, int n_radial, int n_angular, double rate);

struct TransformOptions {
  int n_radial = 60;
  int n_angular = 24;
  double rate = 0.0;  ///< decay rate of the input; 0 picks 1/a
};

/// 𝓕_{k,a} f(ξ) = c_{k,a} ∫ B(ξ,x) f(x) ϑ_{k,a}(x) dx at each ξ. For N = 1 the even
/// and odd parts use separate radial rules and n_angular is ignored.
std::vector<cplx> fka_apply_kernel(const std::function<cplx(const Point&)>& f,
                                   const std::vector<Point>& xi, const BKernelSpec& spec,
                                   const TransformOptions& opt = {});

/// H_{a,ν}(ψ)(s) = ∫ ψ(r) J̃_ν((2/a)(rs)^{a/2}) r^{a(ν+1)−1} dr; ψ should decay like e^{−rate r^a}.
std::vector<cplx> hankel(const std::function<cplx(double)>& psi, double a, double nu,
                         const std::vector<double>& s, int n_nodes = 80, double rate = 0.0);

// Identity checks

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return residual <= tolerance; }
};

/// Harmonic polynomial of degree m given as a function, for complex combinations.
using HarmonicFn = std::function<cplx(const Point&)>;

/// sup_ξ |𝓕(e^{−‖·‖^a/a}p)(ξ) − e^{−iπm/a} e^{−‖ξ‖^a/a} p(ξ)| / sup_ξ |rhs|.
double hecke_check(const HarmonicFn& p, int m, const BKernelSpec& spec,
                   const std::vector<Point>& xi, const TransformOptions& opt = {});

/// 𝓕(pψ(‖·‖)) against a^{−λ_m} e^{−iπm/a} p(ξ) H_{a,λ_m}(ψ)(‖ξ‖), relative sup residual.
double bochner_check(const HarmonicFn& p, int m, const std::function<cplx(double)>& psi,
                     double rate, const BKernelSpec& spec, const std::vector<Point>& xi,
                     const TransformOptions& opt = {});

struct MasterResult {
  cplx lhs{};            ///< Richardson limit of the regularized integral
  cplx rhs{};            ///< e^{iπμ/(2a)} e^{−i(‖x‖^a+‖y‖^a)/a} B(x,y)
  cplx rhs_printed{};    ///< same with the phase e^{iπμ/a}
  double residual = 0.0;
  double residual_printed = 0.0;
  double extrapolation_spread = 0.0;  ///< |limit − last regularized value|
};
/// c_{k,a} ∫ e^{i‖u‖^a/a} B(x,u) B(u,y) ϑ_{k,a}(u) du, regularized by e^{−ε‖u‖^a}
/// for ε = 0.2·2^{−j}, j < levels, and extrapolated to ε = 0.
MasterResult master_formula_check(const Point& x, const Point& y, const BKernelSpec& spec,
                                  int levels = 7);

struct PdeResiduals {
  double euler = 0.0;        ///< E^x B = E^ξ B
  double laplace_xi = 0.0;   ///< ‖ξ‖^{2−a} Δ_k^ξ B = −‖x‖^a B
  double laplace_x = 0.0;    ///< ‖x‖^{2−a} Δ_k^x B = −‖ξ‖^a B
  double max() const { return std::max({euler, laplace_xi, laplace_x}); }
};
/// Five-point finite differences of B(ξ,x); residuals are divided by the size of
/// the largest term in each equation. Throws DomainError when a coordinate is
/// closer than 4h to a reflecting hyperplane.
PdeResiduals pde_residuals(const Point& xi, const Point& x, const BKernelSpec& spec,
                           double h = 1e-2);

/// Applies 𝓕 twice spectrally and compares with the identity (a = 1/r) or with
/// the parity f(−x) (a = 2/(2r+1)); throws DomainError for other a.
double inversion_check(const SpectralFunction& f);

/// Ladder identities 𝓕H𝓕⁻¹ = −H, 𝓕E^±𝓕⁻¹ = −E^∓, 𝓕K𝓕⁻¹ = K on one sector.
double intertwining_check(const RadialSector& sector, int lmax);

struct PlancherelResult {
  double norm_in = 0.0;
  double norm_out = 0.0;
  double ratio() const { return norm_out / norm_in; }
};
/// ‖𝓕f‖ / ‖f‖ with 𝓕f from the kernel quadrature, evaluated on the nodes of a
/// second polar rule with decay rate out_rate.
PlancherelResult plancherel_kernel(const std::function<cplx(const Point&)>& f,
                                   const BKernelSpec& spec, double out_rate,
                                   const TransformOptions& opt = {});

/// Spectral pipeline on sampled radial data: ψ samples at r (radial profile of f),
/// returned as the radial profile of 𝓕f on the same grid.
struct SampledTransform {
  std::vector<double> r;
  std::vector<cplx> values;
  double parseval_defect = 0.0;
  double norm_ratio = 1.0;
  bool interpolated = true;
};
SampledTransform fka_apply_sampled_radial(const std::vector<double>& r,
                                          const std::vector<cplx>& values,
                                          const DeformParams& params, const ExpandOptions& opt);
/// Rank-one sampled pipeline on a symmetric grid x (even and odd sectors).
SampledTransform fka_apply_sampled_line(const std::vector<double>& x,
                                        const std::vector<cplx>& values,
                                        const DeformParams& params, const ExpandOptions& opt);

}  // namespace klag

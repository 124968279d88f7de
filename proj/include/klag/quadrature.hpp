#pragma once

#include <vector>

#include "klag/params.hpp"
#include "klag/types.hpp"

namespace klag {

enum class Measure { laguerre, jacobi, jacobi_gegenbauer, legendre, radial };

/// Gauss rule Σ w_i g(x_i) for a fixed measure; nodes ascending, weights positive.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  Measure measure = Measure::legendre;
  std::vector<double> measure_params;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& g) const -> decltype(g(0.0)) {
    decltype(g(0.0)) s{};
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * g(nodes[i]);
    return s;
  }
};

/// Golub–Welsch: nodes and weights from the Jacobi matrix of a monic
/// three-term recurrence (diag a_j, off-diagonal √b_j) and total mass mu0.
QuadRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                      double mu0, Measure tag);

/// Weight t^λ e^{−t} on (0, ∞).
QuadRule gauss_laguerre(int n, double lambda);
/// Weight (1−t)^α (1+t)^β on (−1, 1).
QuadRule gauss_jacobi(int n, double alpha, double beta);
/// Weight (1−t²)^{ν−1/2} on (−1, 1).
QuadRule gauss_gegenbauer(int n, double nu);
QuadRule gauss_legendre(int n);

/// Shared, thread-safe cache of Gauss–Jacobi rules.
const QuadRule& cached_gauss_jacobi(int n, double alpha, double beta);
const QuadRule& cached_gauss_laguerre(int n, double lambda);

/// Rule for ∫ g(r) e^{−rate·r^a} r^{a(λ+1)−1} dr on (0, ∞); exact for g
/// polynomial in r^a of degree ≤ 2n−1.
QuadRule radial_rule_rate(int n, double lambda, double a, double rate);

/// Rule for ∫ g(r) e^{−(2/a) r^a} r^{2m+2⟨k⟩+N+a−3} dr, the sector-m radial measure.
QuadRule radial_rule(int n, const DeformParams& params, int m);

/// Points on S^{N−1} with weights that already include ϑ_k(ω) = Π|ω_i|^{2k_i};
/// Σ weights = d_k^{−1}. Exact for polynomials of degree ≤ 4n−1.
struct SphereRule {
  int dim = 1;
  std::vector<Point> points;
  std::vector<double> weights;
};
SphereRule sphere_rule(int N, const std::vector<double>& k, int n);

/// Symmetric rule on ℝ for ∫ g(x) |x|^{2k} e^{−rate·x²} dx, 2n points.
QuadRule generalized_hermite(int n, double k, double rate);

}  // namespace klag

#include "klag/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "klag/specfun.hpp"

namespace klag {

namespace {

// Orthonormal polynomials p_0..p_n at x and p_n'(x), from the recurrence
// √b_{j+1} p_{j+1} = (x − a_j) p_j − √b_j p_{j−1}.
struct OrthoEval {
  double pn = 0.0;
  double dpn = 0.0;
  double sum_sq = 0.0;  // Σ_{j<n} p_j(x)²
};

OrthoEval ortho_eval(double x, const std::vector<double>& a, const std::vector<double>& sb,
                     double mu0) {
  const std::size_t n = a.size();
  double pm1 = 0.0, p = 1.0 / std::sqrt(mu0);
  double dpm1 = 0.0, dp = 0.0;
  OrthoEval out;
  for (std::size_t j = 0; j < n; ++j) {
    out.sum_sq += p * p;
    const double sbj = j == 0 ? 0.0 : sb[j - 1];
    const double next_sb = sb[j];
    const double pn = ((x - a[j]) * p - sbj * pm1) / next_sb;
    const double dpn = (p + (x - a[j]) * dp - sbj * dpm1) / next_sb;
    pm1 = p;
    p = pn;
    dpm1 = dp;
    dp = dpn;
  }
  out.pn = p;
  out.dpn = dp;
  return out;
}

}  // namespace

QuadRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                      double mu0, Measure tag) {
  const int n = static_cast<int>(diag.size());
  if (n < 1) throw DomainError("quadrature order must be at least 1");
  QuadRule rule;
  rule.measure = tag;
  if (n == 1) {
    rule.nodes = {diag[0]};
    rule.weights = {mu0};
    return rule;
  }
  Eigen::VectorXd d(n), e(n - 1);
  for (int i = 0; i < n; ++i) d[i] = diag[i];
  for (int i = 0; i < n - 1; ++i) e[i] = offdiag[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("tridiagonal eigensolver did not converge");

  // Newton polish on p_n and weights 1/Σp_j² keep tiny weights accurate in
  // relative terms, which the eigenvector route does not.
  std::vector<double> sb(offdiag.begin(), offdiag.end());
  sb.resize(n);
  sb[n - 1] = 1.0;  // p_n is evaluated up to a positive constant
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      OrthoEval ev = ortho_eval(x, diag, sb, mu0);
      if (ev.dpn == 0.0 || !std::isfinite(ev.dpn)) break;
      const double step = ev.pn / ev.dpn;
      if (!std::isfinite(step)) break;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / ortho_eval(x, diag, sb, mu0).sum_sq;
  }
  return rule;
}

QuadRule gauss_laguerre(int n, double lambda) {
  if (!(lambda > -1.0)) throw DomainError("Gauss-Laguerre requires lambda > -1");
  std::vector<double> a(n), sb(std::max(n - 1, 0));
  for (int j = 0; j < n; ++j) a[j] = 2.0 * j + lambda + 1.0;
  for (int j = 1; j < n; ++j) sb[j - 1] = std::sqrt(j * (j + lambda));
  QuadRule r = golub_welsch(a, sb, std::tgamma(lambda + 1.0), Measure::laguerre);
  r.measure_params = {lambda};
  return r;
}

QuadRule gauss_jacobi(int n, double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw DomainError("Gauss-Jacobi requires alpha > -1 and beta > -1");
  const double ab = alpha + beta;
  std::vector<double> a(n), sb(std::max(n - 1, 0));
  for (int j = 0; j < n; ++j) {
    if (j == 0) {
      a[j] = (beta - alpha) / (ab + 2.0);
    } else {
      const double s = 2.0 * j + ab;
      a[j] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
  }
  for (int j = 1; j < n; ++j) {
    double b;
    if (j == 1) {
      b = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      const double s = 2.0 * j + ab;
      b = 4.0 * j * (j + alpha) * (j + beta) * (j + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sb[j - 1] = std::sqrt(b);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  QuadRule r = golub_welsch(a, sb, mu0, Measure::jacobi);
  r.measure_params = {alpha, beta};
  if (alpha == beta) {
    // Symmetrize to remove the last-bit asymmetry of the eigensolver.
    for (int i = 0; i < n / 2; ++i) {
      const double x = 0.5 * (r.nodes[n - 1 - i] - r.nodes[i]);
      const double w = 0.5 * (r.weights[n - 1 - i] + r.weights[i]);
      r.nodes[i] = -x;
      r.nodes[n - 1 - i] = x;
      r.weights[i] = r.weights[n - 1 - i] = w;
    }
    if (n % 2) r.nodes[n / 2] = 0.0;
  }
  return r;
}

QuadRule gauss_gegenbauer(int n, double nu) {
  if (!(nu > -0.5)) throw DomainError("Gauss-Gegenbauer requires nu > -1/2");
  QuadRule r = gauss_jacobi(n, nu - 0.5, nu - 0.5);
  r.measure = Measure::jacobi_gegenbauer;
  r.measure_params = {nu};
  return r;
}

QuadRule gauss_legendre(int n) {
  QuadRule r = gauss_jacobi(n, 0.0, 0.0);
  r.measure = Measure::legendre;
  r.measure_params.clear();
  return r;
}

const QuadRule& cached_gauss_jacobi(int n, double alpha, double beta) {
  static std::mutex mtx;
  static std::map<std::tuple<int, double, double>, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(n, alpha, beta);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gauss_jacobi(n, alpha, beta)).first;
  return it->second;
}

const QuadRule& cached_gauss_laguerre(int n, double lambda) {
  static std::mutex mtx;
  static std::map<std::pair<int, double>, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(n, lambda);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, gauss_laguerre(n, lambda)).first;
  return it->second;
}

QuadRule radial_rule_rate(int n, double lambda, double a, double rate) {
  if (!(a > 0.0) || !(rate > 0.0)) throw DomainError("radial rule needs a > 0 and rate > 0");
  if (!(lambda > -1.0))
    throw DomainError("radial measure not integrable: condition lambda > -1 violated");
  const QuadRule& gl = cached_gauss_laguerre(n, lambda);
  QuadRule r;
  r.measure = Measure::radial;
  r.measure_params = {lambda, a, rate};
  r.nodes.resize(n);
  r.weights.resize(n);
  const double scale = 1.0 / (a * std::pow(rate, lambda + 1.0));
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = std::pow(gl.nodes[i] / rate, 1.0 / a);
    r.weights[i] = gl.weights[i] * scale;
  }
  return r;
}

QuadRule radial_rule(int n, const DeformParams& params, int m) {
  const double lam = params.lambda(m);
  if (!(lam > -1.0))
    throw DomainError("sector measure not integrable: condition 2m + 2<k> + N + a - 2 > 0 violated");
  QuadRule r = radial_rule_rate(n, lam, params.a, 2.0 / params.a);
  return r;
}

SphereRule sphere_rule(int N, const std::vector<double>& k, int n) {
  if (N < 1) throw DomainError("sphere dimension must be at least 1");
  SphereRule s;
  s.dim = N;
  if (N == 1) {
    s.points = {{-1.0}, {1.0}};
    s.weights = {1.0, 1.0};
    return s;
  }
  std::vector<double> k_lower(k.begin(), k.begin() + (N - 1));
  double index_lower = 0.0;
  for (double v : k_lower) index_lower += v;
  SphereRule lower = sphere_rule(N - 1, k_lower, n);

  // ∫ F(t)|t|^{2κ}(1−t²)^γ dt = ½∫₀¹ [F(√s)+F(−√s)] s^{κ−1/2}(1−s)^γ ds.
  const double kappa = k[N - 1];
  const double gam = 0.5 * (N - 3) + index_lower;
  const double alpha = gam, beta = kappa - 0.5;
  const QuadRule& gj = cached_gauss_jacobi(n, alpha, beta);
  const double to01 = std::pow(2.0, -alpha - beta - 1.0);
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const double sv = 0.5 * (1.0 + gj.nodes[i]);
    const double w = 0.5 * gj.weights[i] * to01;
    const double t = std::sqrt(sv);
    const double rho = std::sqrt(1.0 - sv);
    for (int sign : {-1, 1}) {
      for (std::size_t j = 0; j < lower.points.size(); ++j) {
        Point p(N);
        for (int q = 0; q < N - 1; ++q) p[q] = rho * lower.points[j][q];
        p[N - 1] = sign * t;
        s.points.push_back(std::move(p));
        s.weights.push_back(w * lower.weights[j]);
      }
    }
  }
  return s;
}

QuadRule generalized_hermite(int n, double k, double rate) {
  if (!(k >= 0.0) || !(rate > 0.0)) throw DomainError("generalized Hermite rule needs k >= 0, rate > 0");
  const QuadRule& gl = cached_gauss_laguerre(n, k - 0.5);
  QuadRule r;
  r.measure = Measure::radial;
  r.measure_params = {k, rate};
  r.nodes.resize(2 * n);
  r.weights.resize(2 * n);
  const double scale = 0.5 * std::pow(rate, -k - 0.5);
  for (int i = 0; i < n; ++i) {
    const double x = std::sqrt(gl.nodes[i] / rate);
    r.nodes[n - 1 - i] = -x;
    r.nodes[n + i] = x;
    r.weights[n - 1 - i] = r.weights[n + i] = gl.weights[i] * scale;
  }
  return r;
}

}  // namespace klag

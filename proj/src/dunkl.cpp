#include "klag/dunkl.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "klag/quadrature.hpp"
#include "klag/specfun.hpp"

namespace klag {

// DeformParams / RadialSector

DeformParams DeformParams::make(int N, double a, std::vector<double> k) {
  if (N < 1) throw DomainError("dimension N must be at least 1");
  if (!(a > 0.0)) throw DomainError("deformation parameter a must be positive");
  if (k.empty()) k = {0.0};
  if (k.size() == 1 && N > 1) k.assign(N, k[0]);
  if (static_cast<int>(k.size()) != N)
    throw DomainError("multiplicity list must have one entry or N entries");
  for (double v : k)
    if (!(v >= 0.0)) throw DomainError("multiplicities must satisfy k >= 0");
  DeformParams p;
  p.N = N;
  p.a = a;
  p.k = std::move(k);
  if (!(p.a + 2.0 * p.index() + p.N - 2.0 > 0.0)) {
    std::ostringstream os;
    os << "condition a + 2<k> + N - 2 > 0 violated (value " << p.a + 2.0 * p.index() + p.N - 2.0
       << ")";
    if (N == 1) os << "; in rank one this is 2k > 1 - a";
    throw DomainError(os.str());
  }
  return p;
}

double DeformParams::index() const {
  double s = 0.0;
  for (double v : k) s += v;
  return s;
}

double DeformParams::mu() const { return 2.0 * index() + N + a - 2.0; }

bool DeformParams::k_zero() const {
  return std::all_of(k.begin(), k.end(), [](double v) { return v == 0.0; });
}

double DeformParams::lambda(int m) const { return (2.0 * m + 2.0 * index() + N - 2.0) / a; }

RadialSector RadialSector::make(const DeformParams& params, int m) {
  if (m < 0) throw DomainError("sector index m must be nonnegative");
  RadialSector s;
  s.m = m;
  s.params = params;
  s.lambda = params.lambda(m);
  if (!(s.lambda > -1.0))
    throw DomainError("condition 2m + 2<k> + N + a - 2 > 0 violated for this sector");
  return s;
}

// Weights

double theta_k(const Point& x, const DeformParams& params) {
  double w = 1.0;
  for (int i = 0; i < params.N; ++i)
    if (params.k[i] != 0.0) w *= std::pow(std::abs(x[i]), 2.0 * params.k[i]);
  return w;
}

double weight(const Point& x, const DeformParams& params) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double ex = params.a - 2.0;
  if (r2 == 0.0) {
    if (ex < 0.0) throw PoleError("weight is singular at the origin when a < 2");
    return ex == 0.0 && params.k_zero() ? 1.0 : 0.0;
  }
  return std::pow(r2, 0.5 * ex) * theta_k(x, params);
}

double d_k(const DeformParams& params) {
  double lg = std::lgamma(params.index() + 0.5 * params.N) - std::log(2.0);
  for (double v : params.k) lg -= std::lgamma(v + 0.5);
  return std::exp(lg);
}

PolyND dunkl_apply(const PolyND& f, int i, const DeformParams& params) {
  return dunkl_apply<double>(f, i, params.k);
}

PolyND dunkl_laplacian(const PolyND& f, const DeformParams& params) {
  return dunkl_laplacian<double>(f, params.k);
}

// Monomials and harmonics

std::vector<Exponent> monomials_of_degree(int dim, int m) {
  std::vector<Exponent> out;
  if (m < 0) return out;
  Exponent e(dim, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == dim - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, m);
  return out;
}

long harmonic_dimension(int N, int m) {
  if (m < 0) return 0;
  auto binom = [](long n, long r) {
    if (r < 0 || r > n) return 0L;
    long b = 1;
    for (long i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
  };
  return binom(m + N - 1, N - 1) - (m >= 2 ? binom(m - 2 + N - 1, N - 1) : 0L);
}

std::vector<PolyND> harmonic_basis(int m, const DeformParams& params) {
  const int N = params.N;
  const auto mons = monomials_of_degree(N, m);
  const auto lower = monomials_of_degree(N, m - 2);
  const int D = static_cast<int>(mons.size());

  // Null space of Δ_k : 𝓟_m → 𝓟_{m−2} on monomial coefficients.
  Eigen::MatrixXd K;
  if (lower.empty()) {
    K = Eigen::MatrixXd::Identity(D, D);
  } else {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<int>(lower.size()), D);
    for (int j = 0; j < D; ++j) {
      PolyND img = dunkl_laplacian(PolyND::monomial(N, mons[j]), params);
      for (int i = 0; i < static_cast<int>(lower.size()); ++i) A(i, j) = img.coeff(lower[i]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.rank() == D) return {};
    K = lu.kernel();
  }

  // Gram matrix of the monomials in (p,q) = d_k ∫ p q ϑ_k dσ.
  const SphereRule sr = sphere_rule(N, params.k, m + 2);
  const double dk = d_k(params);
  Eigen::MatrixXd V(static_cast<int>(sr.points.size()), D);
  for (int s = 0; s < V.rows(); ++s)
    for (int j = 0; j < D; ++j) V(s, j) = PolyND::monomial(N, mons[j]).eval(sr.points[s]);
  Eigen::VectorXd w(V.rows());
  for (int s = 0; s < V.rows(); ++s) w[s] = dk * sr.weights[s];
  const Eigen::MatrixXd G = V.transpose() * w.asDiagonal() * V;
  const Eigen::MatrixXd M = K.transpose() * G * K;
  Eigen::LLT<Eigen::MatrixXd> llt(M);
  if (llt.info() != Eigen::Success) throw ConvergenceError("harmonic Gram matrix not positive definite");
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd B = K * L.transpose().inverse();

  std::vector<PolyND> basis;
  for (int c = 0; c < B.cols(); ++c) {
    const double mx = B.col(c).cwiseAbs().maxCoeff();
    PolyND p(N);
    for (int j = 0; j < D; ++j)
      if (std::abs(B(j, c)) > 1e-13 * mx) p.add_term(mons[j], B(j, c));
    basis.push_back(std::move(p));
  }
  return basis;
}

// Rank-one intertwiner on profiles

double vtilde_rank1(const std::function<double(double)>& h, double omega, double eta, double k,
                    int n_nodes) {
  const double s = omega * eta;
  if (k == 0.0) return h(s);
  if (!(k > 0.0)) throw DomainError("multiplicities must satisfy k >= 0");
  const QuadRule& q = cached_gauss_jacobi(n_nodes, k - 1.0, k);
  const double ck = std::exp(std::lgamma(k + 0.5) - std::lgamma(k) - 0.5 * std::log(kPi));
  double sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) sum += q.weights[i] * h(q.nodes[i] * s);
  return ck * sum;
}

double funk_hecke_check(const std::function<double(double)>& h, const PolyND& p, int m,
                        const Point& omega, const DeformParams& params, int n_nodes) {
  const double nu = params.index() + 0.5 * (params.N - 2);
  double lhs = 0.0;
  if (params.N == 1) {
    const double k = params.k[0];
    for (double eta : {-1.0, 1.0})
      lhs += 0.5 * vtilde_rank1(h, omega[0], eta, k, n_nodes) * p.eval(Point{eta});
  } else if (params.k_zero()) {
    const SphereRule sr = sphere_rule(params.N, params.k, n_nodes);
    const double dk = d_k(params);
    for (std::size_t s = 0; s < sr.points.size(); ++s) {
      double dot = 0.0;
      for (int i = 0; i < params.N; ++i) dot += omega[i] * sr.points[s][i];
      lhs += dk * sr.weights[s] * h(dot) * p.eval(sr.points[s]);
    }
  } else {
    throw ScopeError("Funk-Hecke check supports N = 1 or k = 0 only");
  }
  const cplx c = gegenbauer_transform(
      m, nu, [&](double t) { return cplx(h(t)); }, n_nodes);
  return std::abs(lhs - c.real() * p.eval(omega));
}

// Commutation identities

Rational to_rational(double x) { return Rational(x); }

namespace {

double max_abs(const PolyQ& p) {
  Rational m(0);
  for (const auto& [e, c] : p.terms()) m = std::max(m, c < 0 ? Rational(-c) : c);
  return static_cast<double>(m);
}

}  // namespace

std::vector<CheckLine> commutator_checks(const DeformParams& params,
                                         const std::vector<PolyQ>& test_polys) {
  const int N = params.N;
  std::vector<Rational> k;
  for (double v : params.k) k.push_back(to_rational(v));
  Rational index(0);
  for (const auto& v : k) index += v;

  std::vector<CheckLine> out = {{"[Delta_k, x_i] = 2 T_i", 0.0},
                                {"[T_i, x_j] = [T_j, x_i]", 0.0},
                                {"[T_i, x_j] = delta_ij (1 + 2 k_i sigma_i)", 0.0},
                                {"sigma_i T_i sigma_i = -T_i", 0.0},
                                {"T_i T_j = T_j T_i", 0.0},
                                {"sum_j (x_j T_j + T_j x_j) = N + 2<k> + 2E", 0.0},
                                {"[E, Delta_k] = -2 Delta_k", 0.0}};
  auto bump = [&](int idx, const PolyQ& r) { out[idx].residual = std::max(out[idx].residual, max_abs(r)); };

  for (const PolyQ& p : test_polys) {
    const PolyQ lap = dunkl_laplacian(p, k);
    PolyQ sym(N);
    for (int i = 0; i < N; ++i) {
      const PolyQ ti = dunkl_apply(p, i, k);
      bump(0, dunkl_laplacian(p.times_coordinate(i), k) - lap.times_coordinate(i) - ti * Rational(2));
      bump(3, dunkl_apply(p.reflect(i), i, k).reflect(i) + ti);
      sym += ti.times_coordinate(i) + dunkl_apply(p.times_coordinate(i), i, k);
      for (int j = 0; j < N; ++j) {
        const PolyQ cij = dunkl_apply(p.times_coordinate(j), i, k) - dunkl_apply(p, i, k).times_coordinate(j);
        const PolyQ cji = dunkl_apply(p.times_coordinate(i), j, k) - dunkl_apply(p, j, k).times_coordinate(i);
        bump(1, cij - cji);
        PolyQ expect(N);
        if (i == j) expect = p + p.reflect(i) * (Rational(2) * k[i]);
        bump(2, cij - expect);
        bump(4, dunkl_apply(dunkl_apply(p, j, k), i, k) - dunkl_apply(ti, j, k));
      }
    }
    bump(5, sym - p * (Rational(N) + Rational(2) * index) - p.euler() * Rational(2));
    bump(6, dunkl_laplacian(p.euler(), k) - lap.euler() - lap * Rational(2));
  }
  return out;
}

}  // namespace klag

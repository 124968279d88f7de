#include "klag/sl2.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "klag/quadrature.hpp"
#include "klag/specfun.hpp"

namespace klag {

using boost::multiprecision::cpp_int;

namespace {

// log of (2^{λ+1} ℓ! / (a^λ Γ(λ+ℓ+1)))^{1/2}
double log_basis_norm(int l, double lambda, double a) {
  return 0.5 * ((lambda + 1.0) * std::log(2.0) + std::lgamma(l + 1.0) - lambda * std::log(a) -
                std::lgamma(lambda + l + 1.0));
}

RadialProfile times_t(const RadialProfile& f) {
  RadialProfile g;
  g.beta = f.beta;
  g.q.assign(f.q.size() + 1, 0.0);
  for (std::size_t j = 0; j < f.q.size(); ++j) g.q[j + 1] = f.q[j];
  return g;
}

}  // namespace

// Radial basis

double phi_norm_sq(int l, const RadialSector& sector) {
  const double lam = sector.lambda;
  const double a = sector.params.a;
  return std::exp(lam * std::log(a) + std::lgamma(lam + l + 1.0) - (1.0 + lam) * std::log(2.0) -
                  std::lgamma(l + 1.0));
}

double phi_unnormalized(int l, const RadialSector& sector, double r) {
  const double a = sector.params.a;
  const double ra = std::pow(r, a);
  return std::pow(r, sector.m) * laguerre(l, sector.lambda, 2.0 * ra / a) * std::exp(-ra / a);
}

double phi_basis(int l, const RadialSector& sector, double r) {
  return std::exp(log_basis_norm(l, sector.lambda, sector.params.a)) *
         phi_unnormalized(l, sector, r);
}

std::vector<double> phi_basis_all(int lmax, const RadialSector& sector, double r) {
  const double a = sector.params.a;
  const double ra = std::pow(r, a);
  std::vector<double> L = laguerre_all(lmax, sector.lambda, 2.0 * ra / a);
  const double common = std::pow(r, sector.m) * std::exp(-ra / a);
  for (int l = 0; l <= lmax; ++l)
    L[l] *= common * std::exp(log_basis_norm(l, sector.lambda, a));
  return L;
}

// Ladder matrices

std::string to_string(Sl2Op op) {
  switch (op) {
    case Sl2Op::H: return "H";
    case Sl2Op::Eplus: return "E+";
    case Sl2Op::Eminus: return "E-";
    case Sl2Op::K: return "K";
    case Sl2Op::Nplus: return "N+";
    case Sl2Op::Nminus: return "N-";
  }
  return "?";
}

Eigen::MatrixXcd ladder_matrix(Sl2Op op, const RadialSector& sector, int lmax) {
  const int n = lmax + 1;
  const double lam = sector.lambda;
  Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd Np = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd Nm = Eigen::MatrixXcd::Zero(n, n);
  for (int l = 0; l < n; ++l) {
    K(l, l) = 2.0 * l + lam + 1.0;
    if (l + 1 < n) {
      const double s = std::sqrt((l + 1.0) * (lam + l + 1.0));
      Np(l + 1, l) = kI * s;
      Nm(l, l + 1) = kI * s;
    }
  }
  switch (op) {
    case Sl2Op::K: return K;
    case Sl2Op::Nplus: return Np;
    case Sl2Op::Nminus: return Nm;
    case Sl2Op::H: return kI * (Nm - Np);
    case Sl2Op::Eplus: return 0.5 * (kI * K - (Np + Nm));
    case Sl2Op::Eminus: return 0.5 * (-kI * K - (Np + Nm));
  }
  return K;
}

std::vector<RelationResidual> sl2_relation_check(const RadialSector& sector, int lmax) {
  const auto M = [&](Sl2Op op) { return ladder_matrix(op, sector, lmax); };
  const Eigen::MatrixXcd H = M(Sl2Op::H), Ep = M(Sl2Op::Eplus), Em = M(Sl2Op::Eminus);
  const Eigen::MatrixXcd K = M(Sl2Op::K), Np = M(Sl2Op::Nplus), Nm = M(Sl2Op::Nminus);
  const auto block = [&](const Eigen::MatrixXcd& X) {
    return X.topLeftCorner(lmax, lmax).cwiseAbs().maxCoeff();
  };
  const auto comm = [](const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) -> Eigen::MatrixXcd {
    return A * B - B * A;
  };
  return {
      {"[H,E+] = 2E+", block(comm(H, Ep) - 2.0 * Ep)},
      {"[H,E-] = -2E-", block(comm(H, Em) + 2.0 * Em)},
      {"[E+,E-] = H", block(comm(Ep, Em) - H)},
      {"[K,N+] = 2N+", block(comm(K, Np) - 2.0 * Np)},
      {"[K,N-] = -2N-", block(comm(K, Nm) + 2.0 * Nm)},
      {"[N+,N-] = K", block(comm(Np, Nm) - K)},
      {"H skew-adjoint", block(H + H.adjoint())},
      {"E+ skew-adjoint", block(Ep + Ep.adjoint())},
      {"E- skew-adjoint", block(Em + Em.adjoint())},
  };
}

// Radial profiles

cplx RadialProfile::operator()(double t) const {
  cplx s = 0.0;
  for (std::size_t j = q.size(); j-- > 0;) s = s * t + q[j];
  return s * std::exp(-beta * t);
}

RadialProfile RadialProfile::derivative() const {
  RadialProfile g;
  g.beta = beta;
  g.q.assign(q.size(), 0.0);
  for (std::size_t j = 0; j < q.size(); ++j) {
    g.q[j] -= beta * q[j];
    if (j > 0) g.q[j - 1] += static_cast<double>(j) * q[j];
  }
  return g;
}

RadialProfile& RadialProfile::operator+=(const RadialProfile& o) {
  if (q.empty()) beta = o.beta;
  if (!o.q.empty() && beta != o.beta)
    throw ScopeError("profiles with different exponential rates cannot be added");
  if (o.q.size() > q.size()) q.resize(o.q.size(), 0.0);
  for (std::size_t j = 0; j < o.q.size(); ++j) q[j] += o.q[j];
  return *this;
}

RadialProfile RadialProfile::operator*(cplx s) const {
  RadialProfile g(*this);
  for (auto& c : g.q) c *= s;
  return g;
}

RadialProfile sl2_operators_apply(Sl2Op op, const RadialProfile& f, const RadialSector& sector) {
  const double a = sector.params.a;
  const double lam1 = sector.lambda + 1.0;
  const RadialProfile df = f.derivative();
  const auto H = [&] {
    RadialProfile g = times_t(df) * 2.0;
    g += f * lam1;
    return g;
  };
  const auto Ep = [&] { return times_t(f) * (kI / a); };
  const auto Em = [&] {
    RadialProfile g = times_t(df.derivative());
    g += df * lam1;
    return g * (a * kI);
  };
  switch (op) {
    case Sl2Op::H: return H();
    case Sl2Op::Eplus: return Ep();
    case Sl2Op::Eminus: return Em();
    case Sl2Op::K: {
      RadialProfile g = Ep();
      g += Em() * -1.0;
      return g * (-kI);
    }
    case Sl2Op::Nplus:
    case Sl2Op::Nminus: {
      RadialProfile g = Ep();
      g += Em();
      g = g * -0.5;
      g += H() * (op == Sl2Op::Nplus ? 0.5 * kI : -0.5 * kI);
      return g;
    }
  }
  return f;
}

RadialProfile phi_profile(int l, const RadialSector& sector) {
  const double a = sector.params.a;
  const PolynomialCoeffs c = laguerre_coeffs(l, sector.lambda);
  RadialProfile f;
  f.beta = 1.0 / a;
  f.q.resize(c.coeffs.size());
  double scale = 1.0;
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
    f.q[j] = c.coeffs[j] * scale;
    scale *= 2.0 / a;
  }
  return f;
}

double profile_distance(const RadialProfile& f, const RadialProfile& g, double t_max, int n) {
  double diff = 0.0, mag = 1.0;
  for (int i = 0; i <= n; ++i) {
    const double t = t_max * i / n;
    const cplx fv = f(t), gv = g(t);
    diff = std::max(diff, std::abs(fv - gv));
    mag = std::max({mag, std::abs(fv), std::abs(gv)});
  }
  return diff / mag;
}

// Spectrum

std::vector<SpectrumEntry> spectrum(const DeformParams& params, int count) {
  std::vector<SpectrumEntry> all;
  if (count <= 0) return all;
  const int m_top = params.N == 1 ? 1 : count;
  for (int m = 0; m <= m_top; ++m)
    for (int l = 0; l < count; ++l)
      all.push_back({params.a * (2.0 * l + params.lambda(m) + 1.0), l, m,
                     harmonic_dimension(params.N, m)});
  std::stable_sort(all.begin(), all.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
    if (x.eigenvalue != y.eigenvalue) return x.eigenvalue < y.eigenvalue;
    return x.m < y.m;
  });
  if (static_cast<int>(all.size()) > count) all.resize(count);
  return all;
}

// Spectral functions

const std::vector<PolyND>& unit_harmonics(const DeformParams& params, int m) {
  static std::mutex mtx;
  static std::map<std::pair<std::vector<double>, int>, std::vector<PolyND>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(params.k, m);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<PolyND> basis = harmonic_basis(m, params);
    const double s = std::sqrt(d_k(params));
    for (auto& p : basis) p *= s;
    it = cache.emplace(key, std::move(basis)).first;
  }
  return it->second;
}

cplx SpectralFunction::coeff(int l, int m, int j) const {
  auto it = coeffs.find({l, m, j});
  return it == coeffs.end() ? cplx(0.0) : it->second;
}

double SpectralFunction::norm_sq() const {
  double s = 0.0;
  for (const auto& [idx, c] : coeffs) s += std::norm(c);
  return s;
}

cplx SpectralFunction::evaluate(const Point& x) const {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double ra = std::pow(std::sqrt(r2), params.a);
  const double u = 2.0 * ra / params.a;
  const double damp = std::exp(-ra / params.a);
  cplx sum = 0.0;
  int cached_m = -1;
  std::vector<double> L;
  double lam = 0.0;
  for (const auto& [idx, c] : coeffs) {
    const auto [l, m, j] = idx;
    if (m != cached_m) {
      lam = params.lambda(m);
      L = laguerre_all(l_max, lam, u);
      cached_m = m;
    }
    const auto& Y = unit_harmonics(params, m);
    sum += c * Y[j].eval(x) * std::exp(log_basis_norm(l, lam, params.a)) * L[l] * damp;
  }
  return sum;
}

namespace {

void check_defect(double defect, const ExpandOptions& opt) {
  if (opt.refuse && std::abs(defect) > opt.max_defect)
    throw ConvergenceError("Parseval defect " + std::to_string(defect) +
                           " exceeds the truncation limit " + std::to_string(opt.max_defect));
}

}  // namespace

ExpandResult expand(const std::function<cplx(const Point&)>& f, const DeformParams& params,
                    const ExpandOptions& opt) {
  const int N = params.N;
  const double a = params.a;
  const double rate = opt.rate > 0.0 ? opt.rate : 2.0 / a;
  const int m_top = N == 1 ? std::min(opt.m_max, 1) : opt.m_max;
  const int n_ang = opt.n_angular > 0 ? opt.n_angular : opt.m_max + 8;
  const SphereRule sph = sphere_rule(N, params.k, n_ang);

  ExpandResult out;
  out.f.params = params;
  out.f.l_max = opt.l_max;
  out.f.m_max = m_top;

  const auto sample = [&](const QuadRule& rule, std::size_t i, std::size_t s) {
    Point x(sph.points[s]);
    for (auto& v : x) v *= rule.nodes[i];
    return f(x);
  };

  {
    const QuadRule rule = radial_rule_rate(opt.n_radial, params.lambda(0), a, rate);
    double nsq = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double back = std::exp(rate * std::pow(rule.nodes[i], a));
      for (std::size_t s = 0; s < sph.points.size(); ++s)
        nsq += rule.weights[i] * sph.weights[s] * std::norm(sample(rule, i, s)) * back;
    }
    out.norm_sq = nsq;
  }

  for (int m = 0; m <= m_top; ++m) {
    const auto& Y = unit_harmonics(params, m);
    if (Y.empty()) continue;
    const double lam = params.lambda(m);
    const QuadRule rule = radial_rule_rate(opt.n_radial, lam, a, rate);
    // Angular projections A_j(r_i) = Σ_s w_s Ỹ_j(ω_s) f(r_i ω_s).
    std::vector<std::vector<cplx>> A(Y.size(), std::vector<cplx>(rule.size(), 0.0));
    std::vector<std::vector<double>> Yv(Y.size(), std::vector<double>(sph.points.size()));
    for (std::size_t j = 0; j < Y.size(); ++j)
      for (std::size_t s = 0; s < sph.points.size(); ++s) Yv[j][s] = Y[j].eval(sph.points[s]);
    for (std::size_t i = 0; i < rule.size(); ++i)
      for (std::size_t s = 0; s < sph.points.size(); ++s) {
        const cplx v = sample(rule, i, s) * sph.weights[s];
        for (std::size_t j = 0; j < Y.size(); ++j) A[j][i] += Yv[j][s] * v;
      }
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double r = rule.nodes[i];
      const double ra = std::pow(r, a);
      const std::vector<double> L = laguerre_all(opt.l_max, lam, 2.0 * ra / a);
      const double common = rule.weights[i] * std::exp((rate - 1.0 / a) * ra - m * std::log(r));
      for (int l = 0; l <= opt.l_max; ++l) {
        const double basis = std::exp(log_basis_norm(l, lam, a)) * L[l] * common;
        for (std::size_t j = 0; j < Y.size(); ++j)
          out.f.coeffs[{l, m, static_cast<int>(j)}] += A[j][i] * basis;
      }
    }
  }
  out.defect = out.norm_sq > 0.0 ? 1.0 - out.f.norm_sq() / out.norm_sq : 0.0;
  check_defect(out.defect, opt);
  return out;
}

RadialExpandResult expand_radial(const std::function<cplx(double)>& g, const RadialSector& sector,
                                 const ExpandOptions& opt) {
  const double a = sector.params.a;
  const double rate = opt.rate > 0.0 ? opt.rate : 2.0 / a;
  const int m = sector.m;
  RadialExpandResult out;
  out.coeffs.assign(opt.l_max + 1, 0.0);
  const QuadRule rule = radial_rule_rate(opt.n_radial, sector.lambda, a, rate);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double r = rule.nodes[i];
    const double ra = std::pow(r, a);
    const cplx gv = g(r);
    const std::vector<double> L = laguerre_all(opt.l_max, sector.lambda, 2.0 * ra / a);
    const double common = rule.weights[i] * std::exp((rate - 1.0 / a) * ra - m * std::log(r));
    for (int l = 0; l <= opt.l_max; ++l)
      out.coeffs[l] += gv * std::exp(log_basis_norm(l, sector.lambda, a)) * L[l] * common;
  }
  const QuadRule rule0 = radial_rule_rate(opt.n_radial, sector.params.lambda(0), a, rate);
  for (std::size_t i = 0; i < rule0.size(); ++i) {
    const double r = rule0.nodes[i];
    out.norm_sq += rule0.weights[i] * std::norm(g(r)) * std::exp(rate * std::pow(r, a));
  }
  double csq = 0.0;
  for (const auto& c : out.coeffs) csq += std::norm(c);
  out.defect = out.norm_sq > 0.0 ? 1.0 - csq / out.norm_sq : 0.0;
  check_defect(out.defect, opt);
  return out;
}

std::vector<double> gaussian_coefficients(double c, const RadialSector& sector, int lmax) {
  const double a = sector.params.a;
  const double lam = sector.lambda;
  const double s = 0.5 * (a * c + 1.0);
  if (!(s > 0.0)) throw DomainError("Gaussian exponent must satisfy a c + 1 > 0");
  std::vector<double> out(lmax + 1);
  for (int l = 0; l <= lmax; ++l) {
    const double lg = log_basis_norm(l, lam, a) - std::log(a) + (lam + 1.0) * std::log(0.5 * a) +
                      std::lgamma(l + lam + 1.0) - std::lgamma(l + 1.0) -
                      (l + lam + 1.0) * std::log(s);
    out[l] = std::exp(lg) * std::pow(s - 1.0, l);
  }
  return out;
}

// Semigroup and transform

SpectralFunction semigroup_apply(const SpectralFunction& f, cplx z) {
  if (z.real() < 0.0) throw DomainError("condition Re z >= 0 violated");
  SpectralFunction g(f);
  for (auto& [idx, c] : g.coeffs) {
    const auto [l, m, j] = idx;
    c *= std::exp(-z * (2.0 * l + f.params.lambda(m) + 1.0));
  }
  return g;
}

double semigroup_norm(const SpectralFunction& f, cplx z) {
  double s = 0.0;
  for (const auto& [idx, c] : f.coeffs)
    s = std::max(s, std::exp(-z.real() * (2.0 * idx[0] + f.params.lambda(idx[1]) + 1.0)));
  return s;
}

cplx unit_phase(double theta) {
  double t = std::fmod(theta, 2.0);
  if (t < 0.0) t += 2.0;
  const double twice = 2.0 * t;
  const double nearest = std::round(twice);
  if (std::abs(twice - nearest) <= 1e-12 * std::max(1.0, std::abs(theta))) {
    switch (static_cast<int>(nearest) % 4) {
      case 0: return 1.0;
      case 1: return cplx(0.0, -1.0);
      case 2: return -1.0;
      case 3: return cplx(0.0, 1.0);
    }
  }
  return std::polar(1.0, -kPi * t);
}

cplx fka_phase(int l, int m, double a) { return unit_phase(l + m / a); }

SpectralFunction fka_apply_spectral(const SpectralFunction& f) {
  SpectralFunction g(f);
  for (auto& [idx, c] : g.coeffs) c *= fka_phase(idx[0], idx[1], f.params.a);
  return g;
}

FiniteOrderResult finite_order_check(const SpectralFunction& f, long p, long q, long n) {
  if (p <= 0 || q <= 0) throw DomainError("rational a = p/q needs p > 0 and q > 0");
  const long g0 = std::gcd(p, q);
  p /= g0;
  q /= g0;
  FiniteOrderResult res;
  res.p = p;
  res.q = q;
  res.applied = n > 0 ? n : 2 * p;
  res.order_on_modes = 1;
  for (const auto& [idx, c] : f.coeffs) {
    const Rational theta = Rational(idx[0]) + Rational(static_cast<long>(idx[1]) * q, p);
    const Rational prod = theta * res.applied;
    const cpp_int den = boost::multiprecision::denominator(prod);
    cpp_int num = boost::multiprecision::numerator(prod) % (2 * den);
    if (num < 0) num += 2 * den;
    const Rational total(num, den);  // θn reduced to [0, 2)
    cplx phase;
    if (total == 0) phase = 1.0;
    else if (total == Rational(1, 2)) phase = cplx(0.0, -1.0);
    else if (total == 1) phase = -1.0;
    else if (total == Rational(3, 2)) phase = cplx(0.0, 1.0);
    else phase = std::polar(1.0, -kPi * static_cast<double>(total));
    res.residual = std::max(res.residual, std::abs(phase * c - c));

    const long A = static_cast<long>(boost::multiprecision::numerator(theta));
    const long B = static_cast<long>(boost::multiprecision::denominator(theta));
    const long ord = A == 0 ? 1 : B * (A % 2 == 0 ? 1 : 2);
    res.order_on_modes = std::lcm(res.order_on_modes, ord);
  }
  return res;
}

std::function<double(const Point&)> segal_bargmann_apply(const PolyND& p, int l,
                                                         const RadialSector& sector) {
  const double a = sector.params.a;
  const double lam = sector.lambda;
  return [p, l, a, lam](const Point& x) {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    const double ra = std::pow(std::sqrt(r2), a);
    return p.eval(x) * laguerre_semigroup_monomial(l, lam, 0.5 * a, ra) * std::exp(-ra / a);
  };
}

RadialProfile segal_bargmann_profile(int l, const RadialSector& sector) {
  RadialProfile term;
  term.q.assign(l + 1, 0.0);
  term.q[l] = 1.0;
  RadialProfile sum = term;
  // exp((i/2)E⁻) terminates: E⁻ lowers the degree in t by one.
  for (int j = 1; j <= l; ++j) {
    term = sl2_operators_apply(Sl2Op::Eminus, term, sector) * (0.5 * kI / static_cast<double>(j));
    sum += term;
  }
  // exp(iE⁺) multiplies by e^{−t/a}.
  sum.beta += 1.0 / sector.params.a;
  return sum;
}

// Heisenberg

Eigen::MatrixXd radial_power_matrix(const RadialSector& sector, int n) {
  const double a = sector.params.a;
  const double lam = sector.lambda;
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n, n);
  for (int l = 0; l < n; ++l) {
    X(l, l) = 0.5 * a * (2.0 * l + lam + 1.0);
    if (l + 1 < n) X(l, l + 1) = X(l + 1, l) = -0.5 * a * std::sqrt((l + 1.0) * (lam + l + 1.0));
  }
  return X;
}

double position_moment(const SpectralFunction& f) {
  std::map<std::pair<int, int>, std::vector<cplx>> groups;
  for (const auto& [idx, c] : f.coeffs) {
    auto& v = groups[{idx[1], idx[2]}];
    if (static_cast<int>(v.size()) <= idx[0]) v.resize(idx[0] + 1, 0.0);
    v[idx[0]] = c;
  }
  double total = 0.0;
  for (const auto& [key, v] : groups) {
    const RadialSector sec = RadialSector::make(f.params, key.first);
    const Eigen::MatrixXd X = radial_power_matrix(sec, static_cast<int>(v.size()));
    Eigen::VectorXcd c(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) c[static_cast<int>(i)] = v[i];
    total += (c.adjoint() * X * c)(0, 0).real();
  }
  return total;
}

HeisenbergResult heisenberg_product(const SpectralFunction& f) {
  HeisenbergResult h;
  h.lhs = std::sqrt(position_moment(f)) * std::sqrt(position_moment(fka_apply_spectral(f)));
  h.rhs = 0.5 * f.params.mu() * f.norm_sq();
  return h;
}

}  // namespace klag

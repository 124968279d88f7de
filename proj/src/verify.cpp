#include "klag/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "klag/dunkl.hpp"
#include "klag/kernels.hpp"
#include "klag/quadrature.hpp"
#include "klag/sl2.hpp"
#include "klag/specfun.hpp"
#include "klag/transform.hpp"

namespace klag {

namespace {

CaseResult make_case(std::string name, std::string ref, int criterion, double residual,
                     double tolerance, std::string note = {}) {
  CaseResult c;
  c.name = std::move(name);
  c.paper_ref = std::move(ref);
  c.criterion = criterion;
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(residual) && residual <= tolerance;
  c.note = std::move(note);
  return c;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string label(const DeformParams& p) {
  std::ostringstream os;
  os << "N=" << p.N << ",a=" << p.a << ",k=";
  for (std::size_t i = 0; i < p.k.size(); ++i) os << (i ? "/" : "") << p.k[i];
  return os.str();
}

double norm_of(const Point& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

SpectralFunction random_spectral(const DeformParams& p, int lmax, int mmax, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  SpectralFunction f;
  f.params = p;
  f.l_max = lmax;
  f.m_max = mmax;
  for (int m = 0; m <= mmax; ++m) {
    const std::size_t dim = unit_harmonics(p, m).size();
    for (int l = 0; l <= lmax; ++l)
      for (std::size_t j = 0; j < dim; ++j) f.coeffs[{l, m, static_cast<int>(j)}] = cplx(g(rng), g(rng));
  }
  return f;
}

// Harmonic of degree m: the first basis element, plus i times the second when present.
HarmonicFn harmonic(const DeformParams& p, int m) {
  const std::vector<PolyND>& Y = unit_harmonics(p, m);
  if (Y.empty()) throw DomainError("no harmonic of this degree");
  const PolyND y0 = Y[0];
  if (Y.size() == 1) return [y0](const Point& x) { return cplx(y0.eval(x)); };
  const PolyND y1 = Y[1];
  return [y0, y1](const Point& x) { return cplx(y0.eval(x), y1.eval(x)); };
}

std::vector<Point> xi_grid(int N, int count, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Point> out;
  for (int q = 0; q < count; ++q) {
    Point d(N);
    for (double& v : d) v = g(rng);
    const double s = 0.2 + 2.8 * q / std::max(1, count - 1);
    const double n = norm_of(d);
    for (double& v : d) v *= s / n;
    out.push_back(d);
  }
  return out;
}

struct KernelConfig {
  int N;
  double a;
  double k;
  int m_max;
};
const std::vector<KernelConfig>& kernel_configs() {
  static const std::vector<KernelConfig> c{{1, 1.0, 0.6, 1}, {1, 2.0, 0.6, 1}, {3, 1.0, 0.0, 2}, {3, 2.0, 0.0, 2}};
  return c;
}

// 1. Laguerre orthogonality

std::vector<CaseResult> criterion1() {
  std::vector<CaseResult> out;
  for (double lam : {-0.4, 0.0, 2.5}) {
    const QuadRule rule = gauss_laguerre(20, lam);
    const int L = 12;
    std::vector<std::vector<double>> vals;
    for (double t : rule.nodes) vals.push_back(laguerre_all(L, lam, t));
    double worst = 0.0;
    std::vector<double> nrm(L + 1);
    for (int l = 0; l <= L; ++l) nrm[l] = std::exp(std::lgamma(lam + l + 1.0) - std::lgamma(l + 1.0));
    for (int l = 0; l <= L; ++l)
      for (int s = 0; s <= L; ++s) {
        double g = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) g += rule.weights[i] * vals[i][l] * vals[i][s];
        const double expect = l == s ? nrm[l] : 0.0;
        worst = std::max(worst, std::abs(g - expect) / std::sqrt(nrm[l] * nrm[s]));
      }
    out.push_back(make_case("laguerre_gram_lambda=" + fmt(lam), "Laguerre orthogonality", 1, worst, 1e-10));
  }
  return out;
}

// 2. exp(−cB) t^ℓ = (−c)^ℓ ℓ! L_ℓ^(λ)(t/c), exact

std::vector<CaseResult> criterion2() {
  std::vector<CaseResult> out;
  for (const Rational& lam : {Rational(0), Rational(3, 2), Rational(-2, 5), Rational(7, 3)})
    for (const Rational& c : {Rational(1, 2), Rational(3)}) {
      long mismatches = 0;
      for (int l = 0; l <= 10; ++l) {
        const auto lhs = laguerre_semigroup_coeffs<Rational>(l, lam, c);
        const auto rhs = scaled_laguerre_coeffs<Rational>(l, lam, c);
        for (int i = 0; i <= l; ++i) mismatches += lhs[i] != rhs[i];
      }
      out.push_back(make_case("laguerre_semigroup_lambda=" + lam.str() + ",c=" + c.str(),
                              "Laguerre semigroup representation exp(-cB)t^l", 2,
                              static_cast<double>(mismatches), 0.0, "exact rational arithmetic"));
    }
  return out;
}

// 3. Hille–Hardy

std::vector<CaseResult> criterion3() {
  std::vector<CaseResult> out;
  const std::vector<double> uv{0.2, 1.0, 2.5};
  const std::vector<cplx> ws{0.3, cplx(-0.45, 0.2), cplx(0.0, 0.6)};
  for (double lam : {0.3, 1.7}) {
    double worst = 0.0;
    for (double u : uv)
      for (double v : uv)
        for (cplx w : ws)
          worst = std::max(worst, rel(hille_hardy_lhs(lam, u, v, w, 80), hille_hardy_rhs(lam, u, v, w)));
    out.push_back(make_case("hille_hardy_lambda=" + fmt(lam), "Hille-Hardy formula", 3, worst, 1e-9));
  }
  return out;
}

// 4. Gegenbauer expansions

std::vector<CaseResult> criterion4() {
  std::vector<CaseResult> out;
  const std::vector<cplx> ws{5.0, -4.0, cplx(3.0, 4.0), cplx(0.0, -2.5), cplx(-1.0, 1.0)};
  for (double nu : {0.5, 1.5}) {
    double w1 = 0.0, w2 = 0.0;
    for (cplx w : ws)
      for (int q = 0; q <= 10; ++q) {
        const double t = -1.0 + 0.2 * q;
        cplx s1 = 0.0, s2 = 0.0;
        for (int m = 0; m <= 40; ++m) {
          const double c = gegenbauer(m, nu, t);
          s1 += (nu + m) * std::pow(0.5 * w, m) * bessel_i_tilde(nu + m, w) * c;
          s2 += (nu + m) * std::pow(0.5 * w, 2 * m) * bessel_i_tilde(2 * m + 2 * nu, w) * c;
        }
        s1 *= std::tgamma(nu);
        s2 *= std::pow(2.0, 2 * nu) * std::tgamma(nu) / std::sqrt(kPi);
        w1 = std::max(w1, rel(s1, std::exp(w * t)));
        w2 = std::max(w2, rel(s2, bessel_i_tilde(nu - 0.5, w * std::sqrt(0.5 * (1.0 + t)))));
      }
    out.push_back(make_case("gegenbauer_expansion_exp_nu=" + fmt(nu), "Gegenbauer expansion of e^{wt}", 4, w1, 1e-9));
    out.push_back(make_case("gegenbauer_expansion_bessel_nu=" + fmt(nu),
                            "Gegenbauer expansion of I~_{nu-1/2}(w sqrt((1+t)/2))", 4, w2, 1e-9));
  }
  return out;
}

// 5. Bessel–Gegenbauer series closed forms at b = 1, 2

std::vector<CaseResult> criterion5() {
  std::vector<cplx> ws;
  for (int q = 0; q < 10; ++q) ws.push_back(std::polar(0.6 * q, 0.7 * q - 1.0));
  const std::vector<double> ts{-1.0, -0.4, 0.0, 0.55, 1.0};
  const std::vector<double> nus{0.25, 0.5, 1.0, 1.5, 3.0};
  double w1 = 0.0, w2 = 0.0;
  int count = 0;
  for (cplx w : ws)
    for (double t : ts)
      for (double nu : nus) {
        w1 = std::max(w1, rel(i_fun(1.0, nu, w, t).value, std::exp(w * t)));
        const cplx ref = std::tgamma(nu + 0.5) * bessel_i_tilde(nu - 0.5, w * std::sqrt(0.5 * (1.0 + t)));
        w2 = std::max(w2, rel(i_fun(2.0, nu, w, t).value, ref));
        count += 2;
      }
  const std::string note = std::to_string(count) + " grid points in total";
  return {make_case("i_fun_b=1", "Bessel-Gegenbauer series at b=1 equals e^{wt}", 5, w1, 1e-10, note),
          make_case("i_fun_b=2", "Bessel-Gegenbauer series at b=2 equals a normalized I-Bessel function", 5, w2,
                    1e-10, note)};
}

// 6. sl₂ relations and the transform's action on them

std::vector<CaseResult> criterion6() {
  std::vector<CaseResult> out;
  const std::vector<std::pair<DeformParams, int>> cfg{
      {DeformParams::make(1, 2.0, {0.6}), 1},
      {DeformParams::make(1, 0.5, {0.9}), 1},
      {DeformParams::make(2, 1.0, {0.0}), 2},
      {DeformParams::make(3, 0.7, {0.2, 0.5, 1.0}), 3}};
  for (const auto& [p, mmax] : cfg) {
    double worst = 0.0, inter = 0.0;
    for (int m = 0; m <= mmax; ++m) {
      const RadialSector s = RadialSector::make(p, m);
      for (const auto& r : sl2_relation_check(s, 16)) worst = std::max(worst, r.residual);
      inter = std::max(inter, intertwining_check(s, 16));
    }
    out.push_back(make_case("sl2_relations_" + label(p), "sl2 triple commutation relations", 6, worst, 1e-10));
    out.push_back(make_case("transform_conjugation_" + label(p), "F H F^-1 = -H, F E+ F^-1 = -E-", 6, inter, 1e-10));
  }
  return out;
}

// 7. Kernel eigenrelation

std::vector<CaseResult> criterion7() {
  std::vector<CaseResult> out;
  for (const KernelConfig& c : kernel_configs()) {
    const DeformParams p = DeformParams::make(c.N, c.a, {c.k});
    double worst = 0.0;
    for (int m = 0; m <= c.m_max; ++m) {
      const RadialSector s = RadialSector::make(p, m);
      for (int l = 0; l <= 6; ++l) {
        double sup = 0.0;
        for (int q = 1; q <= 400; ++q) sup = std::max(sup, std::abs(phi_basis(l, s, 0.02 * q)));
        for (cplx z : {cplx(0.4), cplx(0.4, 1.0)}) {
          const double scale = std::abs(std::exp(-z * (2.0 * l + s.lambda + 1.0))) * sup;
          for (double r : {0.3, 1.0, 2.2})
            worst = std::max(worst, kernel_eigenrelation(l, r, z, s, scale).residual);
        }
      }
    }
    out.push_back(make_case("eigenrelation_" + label(p), "Laguerre kernel eigenrelation", 7, worst, 1e-8,
                            "relative to |e^{-z(2l+lambda+1)}| sup|f_l|"));
  }
  return out;
}

// 8. Semigroup law

std::vector<CaseResult> criterion8() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ur(0.2, 2.5), ux(0.15, 1.2), uy(-2.5, 2.5);
  for (const KernelConfig& c : kernel_configs()) {
    const DeformParams p = DeformParams::make(c.N, c.a, {c.k});
    double worst = 0.0;
    for (int q = 0; q < 20; ++q) {
      const RadialSector s = RadialSector::make(p, q % (c.m_max + 1));
      const double r = ur(rng), rp = ur(rng);
      const cplx z1(ux(rng), uy(rng)), z2(ux(rng), uy(rng));
      worst = std::max(worst, semigroup_kernel_law(r, rp, z1, z2, s).residual);
    }
    out.push_back(make_case("semigroup_law_" + label(p), "semigroup law of the radial kernels", 8, worst, 1e-7));
  }
  return out;
}

// 9. Weber integrals

std::vector<CaseResult> criterion9() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ud(0.4, 2.0), uarg(-1.2, 1.2), uab(0.3, 2.0), unu(0.2, 2.5);
  std::uniform_int_distribution<int> ul(0, 5);
  double w1 = 0.0, w2 = 0.0;
  for (int q = 0; q < 10; ++q) {
    const cplx delta = std::polar(ud(rng), uarg(rng));
    const double al = uab(rng), be = uab(rng), nu = unu(rng);
    w1 = std::max(w1, weber_first(delta, al, be, nu).residual);
    w2 = std::max(w2, weber_second(delta, uab(rng), be, nu, ul(rng)).residual);
  }
  return {make_case("weber_first", "Weber's first exponential integral", 9, w1, 1e-7),
          make_case("weber_second", "Weber's second exponential integral", 9, w2, 1e-7)};
}

// 10. Plancherel

std::vector<std::function<cplx(const Point&)>> plancherel_functions(double a) {
  const auto g = [a](const Point& x) { return std::exp(-std::pow(norm_of(x), a) / a); };
  return {
      [g](const Point& x) { return cplx(g(x)); },
      [g](const Point& x) { return (x[0] + kI * 0.5 * x.back()) * g(x); },
      [g, a](const Point& x) {
        const double t = std::pow(norm_of(x), a);
        return (1.0 + 0.3 * kI * t - 0.2 * t * t) * g(x);
      },
      [g](const Point& x) { return (x[0] * x[0] + 0.4 * x[0] + kI) * g(x); },
      [g](const Point& x) { return (x[0] * x.back() * x.back() - 2.0 * kI * x[0]) * g(x); },
  };
}

std::vector<CaseResult> criterion10() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(10);
  for (const DeformParams& p : {DeformParams::make(2, 0.7, {0.3}), DeformParams::make(1, 1.3, {0.5}),
                                DeformParams::make(3, 2.0, {0.0})}) {
    const SpectralFunction f = random_spectral(p, 10, 3, rng);
    const double r = std::abs(fka_apply_spectral(f).norm_sq() / f.norm_sq() - 1.0);
    out.push_back(make_case("plancherel_spectral_" + label(p), "unitarity of F_{k,a}", 10, r, 1e-14));
  }
  const std::vector<BKernelSpec> specs{
      BKernelSpec::make(DeformParams::make(1, 1.0, {0.6}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(1, 2.0, {0.6}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(1, 0.5, {0.8}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(2, 1.0, {0.0}), BScope::k_zero_a1),
      BKernelSpec::make(DeformParams::make(2, 2.0, {0.0}), BScope::k_zero_a2),
      BKernelSpec::make(DeformParams::make(2, 2.0, {0.5, 1.0}), BScope::z2n_a2)};
  for (const BKernelSpec& sp : specs) {
    TransformOptions o;
    // The product kernel is the costly one; the other scopes afford finer rules.
    const bool product = sp.scope == BScope::z2n_a2;
    o.n_radial = sp.params.N == 1 ? 40 : product ? 24 : 32;
    o.n_angular = sp.params.N == 1 ? 1 : product ? 12 : 16;
    double worst = 0.0;
    for (const auto& f : plancherel_functions(sp.params.a))
      worst = std::max(worst, std::abs(plancherel_kernel(f, sp, 1.0 / sp.params.a, o).ratio() - 1.0));
    out.push_back(make_case("plancherel_kernel_" + to_string(sp.scope) + "_" + label(sp.params),
                            "unitarity of F_{k,a}", 10, worst, 1e-6, "five test functions"));
  }
  return out;
}

// 11. Inversion and finite order

std::vector<CaseResult> criterion11() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(11);
  for (const DeformParams& p : {DeformParams::make(2, 1.0, {0.3}), DeformParams::make(1, 1.0, {0.7}),
                                DeformParams::make(1, 2.0, {0.6}), DeformParams::make(3, 2.0, {0.0})}) {
    const SpectralFunction f = random_spectral(p, 8, 3, rng);
    out.push_back(make_case(std::string(p.a == 1.0 ? "inversion_identity_" : "inversion_parity_") + label(p),
                            p.a == 1.0 ? "F_{k,1}^2 = id" : "F_{k,2}^2 = parity", 11, inversion_check(f), 0.0));
  }
  for (auto [pn, qn] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}, {3, 2}}) {
    const DeformParams p = DeformParams::make(2, static_cast<double>(pn) / qn, {0.4});
    const SpectralFunction f = random_spectral(p, 8, 3, rng);
    const FiniteOrderResult r = finite_order_check(f, pn, qn);
    out.push_back(make_case("finite_order_a=" + std::to_string(pn) + "/" + std::to_string(qn),
                            "F_{k,a}^{2p} = id for a = p/q", 11, r.residual, 0.0,
                            "order on retained modes " + std::to_string(r.order_on_modes)));
  }
  return out;
}

// 12. Hecke identity

std::vector<BKernelSpec> hecke_specs() {
  return {BKernelSpec::make(DeformParams::make(1, 1.0, {0.6}), BScope::rank_one),
          BKernelSpec::make(DeformParams::make(1, 2.0, {0.6}), BScope::rank_one),
          BKernelSpec::make(DeformParams::make(1, 2.0 / 3.0, {0.6}), BScope::rank_one),
          BKernelSpec::make(DeformParams::make(2, 1.0, {0.0}), BScope::k_zero_a1),
          BKernelSpec::make(DeformParams::make(3, 1.0, {0.0}), BScope::k_zero_a1),
          BKernelSpec::make(DeformParams::make(3, 2.0, {0.0}), BScope::k_zero_a2),
          BKernelSpec::make(DeformParams::make(2, 2.0, {0.4, 1.1}), BScope::z2n_a2)};
}

TransformOptions grid_options(const BKernelSpec& sp) {
  TransformOptions o;
  o.n_radial = 60;
  o.n_angular = sp.params.N == 1 ? 1 : 16;
  return o;
}

std::vector<CaseResult> criterion12() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(12);
  for (const BKernelSpec& sp : hecke_specs()) {
    const std::vector<Point> xi = xi_grid(sp.params.N, 8, rng);
    double worst = 0.0;
    for (int m = 0; m <= (sp.params.N == 1 ? 1 : 2); ++m)
      worst = std::max(worst, hecke_check(harmonic(sp.params, m), m, sp, xi, grid_options(sp)));
    out.push_back(make_case("hecke_" + to_string(sp.scope) + "_" + label(sp.params),
                            "Hecke identity for generalized Gaussians", 12, worst, 1e-7));
  }
  return out;
}

// 13. Bochner identity

std::vector<CaseResult> criterion13() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(13);
  const std::vector<BKernelSpec> specs{
      BKernelSpec::make(DeformParams::make(1, 1.0, {0.6}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(1, 2.0, {0.6}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(2, 1.0, {0.0}), BScope::k_zero_a1),
      BKernelSpec::make(DeformParams::make(3, 2.0, {0.0}), BScope::k_zero_a2),
      BKernelSpec::make(DeformParams::make(2, 2.0, {0.4, 1.1}), BScope::z2n_a2)};
  for (const BKernelSpec& sp : specs) {
    const double a = sp.params.a;
    const auto psi = [a](double r) { return cplx(std::exp(-0.7 * std::pow(r, a)) * (1.0 + r * r)); };
    const std::vector<Point> xi = xi_grid(sp.params.N, 8, rng);
    double worst = 0.0;
    for (int m = 0; m <= 1; ++m)
      worst = std::max(worst, bochner_check(harmonic(sp.params, m), m, psi, 0.7, sp, xi, grid_options(sp)));
    out.push_back(make_case("bochner_" + to_string(sp.scope) + "_" + label(sp.params),
                            "Bochner identity via the Hankel transform", 13, worst, 1e-7));
  }
  return out;
}

// 14. Master formula

std::vector<CaseResult> criterion14() {
  std::vector<CaseResult> out;
  struct M {
    BKernelSpec spec;
    Point x, y;
  };
  const std::vector<M> cases{
      {BKernelSpec::make(DeformParams::make(1, 2.0, {0.0}), BScope::rank_one), {1.0}, {1.0}},
      {BKernelSpec::make(DeformParams::make(1, 2.0, {0.6}), BScope::rank_one), {0.8}, {-0.5}},
      {BKernelSpec::make(DeformParams::make(1, 1.0, {0.6}), BScope::rank_one), {0.7}, {1.2}},
      {BKernelSpec::make(DeformParams::make(2, 2.0, {0.0}), BScope::k_zero_a2), {0.8, 0.3}, {-0.5, 0.4}}};
  for (const M& c : cases) {
    const MasterResult r = master_formula_check(c.x, c.y, c.spec);
    out.push_back(make_case("master_" + to_string(c.spec.scope) + "_" + label(c.spec.params),
                            "Master formula with phase e^{i pi mu/(2a)}", 14, r.residual, 1e-5,
                            "residual with phase e^{i pi mu/a}: " + fmt(r.residual_printed)));
  }
  return out;
}

// 15. |B| ≤ 1

std::vector<CaseResult> criterion15() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(15);
  std::normal_distribution<double> g(0.0, 2.0);
  const std::vector<BKernelSpec> specs{
      BKernelSpec::make(DeformParams::make(1, 1.0, {0.6}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(1, 2.0, {0.3}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(3, 1.0, {0.0}), BScope::k_zero_a1),
      BKernelSpec::make(DeformParams::make(2, 2.0, {0.0}), BScope::k_zero_a2),
      BKernelSpec::make(DeformParams::make(2, 2.0, {0.4, 1.2}), BScope::z2n_a2)};
  for (const BKernelSpec& sp : specs) {
    long violations = 0;
    double sup = 0.0;
    Point x(sp.params.N), y(sp.params.N);
    for (int q = 0; q < 100000; ++q) {
      for (double& v : x) v = g(rng);
      for (double& v : y) v = g(rng);
      const double b = std::abs(b_kernel(x, y, sp));
      sup = std::max(sup, b);
      violations += b > 1.0 + 1e-13;
    }
    out.push_back(make_case("kernel_bound_" + to_string(sp.scope) + "_" + label(sp.params),
                            "|B_{k,a}(x,y)| <= 1", 15, static_cast<double>(violations), 0.0,
                            "1e5 random pairs, max |B| = " + fmt(sup)));
  }
  return out;
}

// 16. Heisenberg inequality

std::vector<CaseResult> criterion16() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(16);
  const std::vector<DeformParams> cfg{DeformParams::make(1, 2.0, {0.6}), DeformParams::make(2, 1.0, {0.0}),
                                      DeformParams::make(3, 0.8, {0.2})};
  double worst = 0.0;
  for (int q = 0; q < 50; ++q) {
    const SpectralFunction f = random_spectral(cfg[q % cfg.size()], 6, 2, rng);
    const HeisenbergResult h = heisenberg_product(f);
    worst = std::max(worst, (h.rhs - h.lhs) / h.rhs);
  }
  out.push_back(make_case("heisenberg_inequality", "Heisenberg inequality", 16, std::max(worst, 0.0), 1e-12,
                          "50 random spectral functions"));
  for (const DeformParams& p : cfg) {
    double eq = 0.0;
    for (double c : {0.5, 1.0, 2.0}) {
      SpectralFunction f;
      f.params = p;
      f.l_max = 80;
      const auto co = gaussian_coefficients(c, RadialSector::make(p, 0), 80);
      for (int l = 0; l <= 80; ++l) f.coeffs[{l, 0, 0}] = co[l];
      const HeisenbergResult h = heisenberg_product(f);
      eq = std::max(eq, std::abs(h.lhs / h.rhs - 1.0));
    }
    out.push_back(make_case("heisenberg_equality_" + label(p), "equality for e^{-c|x|^a}", 16, eq, 1e-8));
  }
  return out;
}

// 17. PDE system

std::vector<CaseResult> criterion17() {
  std::vector<CaseResult> out;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> mag(0.3, 1.8);
  std::bernoulli_distribution sign;
  const std::vector<BKernelSpec> specs{
      BKernelSpec::make(DeformParams::make(1, 1.0, {0.6}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(1, 2.0, {0.6}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(1, 0.7, {0.8}), BScope::rank_one),
      BKernelSpec::make(DeformParams::make(3, 1.0, {0.0}), BScope::k_zero_a1),
      BKernelSpec::make(DeformParams::make(2, 2.0, {0.0}), BScope::k_zero_a2)};
  for (const BKernelSpec& sp : specs) {
    double worst = 0.0;
    Point x(sp.params.N), xi(sp.params.N);
    for (int q = 0; q < 100; ++q) {
      for (double& v : x) v = (sign(rng) ? 1.0 : -1.0) * mag(rng);
      for (double& v : xi) v = (sign(rng) ? 1.0 : -1.0) * mag(rng);
      worst = std::max(worst, pde_residuals(xi, x, sp).max());
    }
    out.push_back(make_case("pde_" + to_string(sp.scope) + "_" + label(sp.params),
                            "differential-difference system for B_{k,a}", 17, worst, 1e-6,
                            "100 random points, five-point differences"));
  }
  return out;
}

// 18. c_{k,a}

std::vector<CaseResult> criterion18() {
  const std::vector<DeformParams> cfg{
      DeformParams::make(1, 2.0, {0.0}),  DeformParams::make(1, 1.0, {0.3}),
      DeformParams::make(1, 0.5, {0.8}),  DeformParams::make(1, 0.4, {0.31}),
      DeformParams::make(2, 2.0, {0.0}),  DeformParams::make(2, 1.0, {0.0}),
      DeformParams::make(2, 1.5, {0.2, 0.7}), DeformParams::make(3, 2.0, {0.0}),
      DeformParams::make(3, 1.0, {0.1, 0.5, 1.5}), DeformParams::make(3, 0.7, {0.0, 0.05, 0.3}),
      DeformParams::make(4, 2.0, {0.25}), DeformParams::make(5, 1.2, {0.5, 0.0, 0.1, 0.0, 2.0})};
  double worst = 0.0;
  for (const DeformParams& p : cfg) worst = std::max(worst, std::abs(c_ka_quadrature(p) / c_ka(p) - 1.0));
  return {make_case("normalization_constant", "Gamma closed form of c_{k,a}", 18, worst, 1e-10,
                    "12 (N,a,k) triples")};
}

using CriterionFn = std::vector<CaseResult> (*)();
const std::map<int, CriterionFn>& criteria() {
  static const std::map<int, CriterionFn> m{
      {1, criterion1},   {2, criterion2},   {3, criterion3},   {4, criterion4},   {5, criterion5},
      {6, criterion6},   {7, criterion7},   {8, criterion8},   {9, criterion9},   {10, criterion10},
      {11, criterion11}, {12, criterion12}, {13, criterion13}, {14, criterion14}, {15, criterion15},
      {16, criterion16}, {17, criterion17}, {18, criterion18}};
  return m;
}

const std::map<std::string, std::vector<int>>& suite_criteria() {
  static const std::map<std::string, std::vector<int>> m{
      {"specfun", {1, 2, 3, 4, 5}},
      {"sl2", {6}},
      {"kernels", {7, 8}},
      {"weber", {9}},
      {"transform", {10, 11, 12, 13, 15, 17, 18}},
      {"master", {14}},
      {"heisenberg", {16}}};
  return m;
}

}  // namespace

bool SuiteReport::pass() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"specfun", "sl2", "kernels", "weber", "transform", "master", "heisenberg"};
  return n;
}

std::vector<CaseResult> run_criterion(int criterion) {
  const auto it = criteria().find(criterion);
  if (it == criteria().end()) throw DomainError("condition 1 <= criterion <= 18 violated");
  return it->second();
}

std::string criterion_title(int criterion) {
  static const std::map<int, std::string> t{
      {1, "Laguerre orthogonality"},
      {2, "Laguerre semigroup representation"},
      {3, "Hille-Hardy identity"},
      {4, "Gegenbauer expansions"},
      {5, "Bessel-Gegenbauer series closed forms"},
      {6, "sl2 relations as ladder matrices"},
      {7, "kernel eigenrelation"},
      {8, "semigroup law"},
      {9, "Weber integrals"},
      {10, "Plancherel"},
      {11, "inversion and finite order"},
      {12, "Hecke identity"},
      {13, "Bochner identity"},
      {14, "Master formula"},
      {15, "kernel bound |B| <= 1"},
      {16, "Heisenberg inequality"},
      {17, "kernel PDE system"},
      {18, "normalization c_{k,a}"}};
  const auto it = t.find(criterion);
  if (it == t.end()) throw DomainError("condition 1 <= criterion <= 18 violated");
  return it->second;
}

SuiteReport run_suite(const std::string& name) {
  SuiteReport rep;
  rep.suite = name;
  std::vector<std::string> names;
  if (name == "all") {
    names = suite_names();
  } else if (suite_criteria().count(name)) {
    names = {name};
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  for (const auto& s : names)
    for (int c : suite_criteria().at(s)) {
      std::vector<CaseResult> part = run_criterion(c);
      rep.cases.insert(rep.cases.end(), part.begin(), part.end());
    }
  return rep;
}

}  // namespace klag

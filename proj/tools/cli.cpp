// klag: kernels, transforms, spectra and verification suites from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage, config or domain error,
// 3 numerical non-convergence.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "config.hpp"
#include "klag/kernels.hpp"
#include "klag/sl2.hpp"
#include "klag/transform.hpp"
#include "klag/verify.hpp"

using namespace klag;
using namespace klag::cli;
using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

json pair_json(cplx v) { return json::array({v.real(), v.imag()}); }

json params_json(const DeformParams& p) { return {{"N", p.N}, {"a", p.a}, {"k", p.k}}; }

Point direction(const std::string& s, int N) {
  if (s.empty()) {
    Point e(N, 0.0);
    e[0] = 1.0;
    return e;
  }
  Point d = parse_list(s);
  if (static_cast<int>(d.size()) != N) throw DomainError("direction must have N = " + std::to_string(N) + " entries");
  return d;
}

void check_format(const RunConfig& c) {
  if (c.format != "csv" && c.format != "json")
    throw DomainError("unknown format '" + c.format + "'; use csv or json");
}

int cmd_kernel(const RunConfig& c) {
  const DeformParams p = c.params();
  const cplx z = parse_complex(c.z);
  if (c.grid_count < 1) throw DomainError("condition grid_count >= 1 violated");
  if (c.kind != "auto" && c.kind != "lambda" && c.kind != "b")
    throw DomainError("unknown kernel kind '" + c.kind + "'; use auto, lambda or b");
  // On the imaginary axis at iπ/2 the semigroup kernel is B up to a constant phase.
  const bool use_b = c.kind == "b" || (c.kind == "auto" && std::abs(z - kI * (0.5 * kPi)) < 1e-6);
  BKernelSpec spec;
  if (use_b)
    spec = c.scope == "auto" ? BKernelSpec::automatic(p) : BKernelSpec::make(p, scope_from_string(c.scope));
  const Point dx = direction(c.x_dir, p.N), dy = direction(c.y_dir, p.N);
  std::vector<double> t(c.grid_count, c.grid_min);
  for (int i = 1; i < c.grid_count; ++i)
    t[i] = c.grid_min + (c.grid_max - c.grid_min) * i / (c.grid_count - 1);

  struct Row {
    Point x, y;
    cplx value;
    std::string provenance;
  };
  std::vector<Row> rows;
  for (double tx : t)
    for (double ty : t) {
      Row r{dx, dy, {}, {}};
      for (double& v : r.x) v *= tx;
      for (double& v : r.y) v *= ty;
      if (use_b) {
        r.value = b_kernel(r.x, r.y, spec);
        r.provenance = "closed_form:" + to_string(spec.scope);
      } else {
        const KernelEval e = lambda_full(r.x, r.y, z, p);
        r.value = e.value;
        r.provenance = to_string(e.provenance);
      }
      rows.push_back(std::move(r));
    }

  OutputSink sink(c.output);
  std::ostream& out = sink.stream();
  if (c.format == "json") {
    json j = {{"kernel", use_b ? "B" : "Lambda"}, {"params", params_json(p)}, {"z", pair_json(z)}};
    j["rows"] = json::array();
    for (const Row& r : rows)
      j["rows"].push_back({{"x", r.x}, {"y", r.y}, {"value", pair_json(r.value)}, {"provenance", r.provenance}});
    out << j.dump(2) << "\n";
    return 0;
  }
  for (int i = 1; i <= p.N; ++i) out << "x" << i << ",";
  for (int i = 1; i <= p.N; ++i) out << "y" << i << ",";
  out << "z_re,z_im,val_re,val_im,provenance\n";
  for (const Row& r : rows) {
    for (double v : r.x) out << num(v) << ",";
    for (double v : r.y) out << num(v) << ",";
    out << num(z.real()) << "," << num(z.imag()) << "," << num(r.value.real()) << "," << num(r.value.imag())
        << "," << r.provenance << "\n";
  }
  return 0;
}

int cmd_transform(const RunConfig& c) {
  const DeformParams p = c.params();
  if (c.input.empty()) throw DomainError("transform needs an input file");
  const SampleTable t = read_samples(c.input);
  const auto& h = t.header;
  if (h.size() < 3 || h[h.size() - 2] != "value_re" || h.back() != "value_im")
    throw DomainError("input header must end with value_re,value_im");
  const bool radial = h.size() == 3 && h[0] == "r";
  if (!radial) {
    if (static_cast<int>(h.size()) != p.N + 2) throw DomainError("input has a point dimension different from N");
    for (int i = 0; i < p.N; ++i)
      if (h[i] != "x" + std::to_string(i + 1)) throw DomainError("unexpected column '" + h[i] + "'");
  }
  std::vector<double> grid;
  std::vector<cplx> values;
  for (const auto& row : t.rows) {
    grid.push_back(row[0]);
    values.emplace_back(row[h.size() - 2], row[h.size() - 1]);
  }
  ExpandOptions opt;
  opt.l_max = c.l_max;
  opt.n_radial = c.n_radial;
  opt.max_defect = c.max_defect;
  const SampledTransform res =
      radial ? fka_apply_sampled_radial(grid, values, p, opt) : fka_apply_sampled_line(grid, values, p, opt);

  OutputSink sink(c.output);
  std::ostream& out = sink.stream();
  const std::string col = radial ? "r" : "x1";
  if (c.format == "json") {
    json j = {{"params", params_json(p)},
              {"parseval_defect", res.parseval_defect},
              {"norm_ratio", res.norm_ratio},
              {"interpolated", res.interpolated}};
    j[col] = res.r;
    j["values"] = json::array();
    for (cplx v : res.values) j["values"].push_back(pair_json(v));
    out << j.dump(2) << "\n";
  } else {
    out << col << ",value_re,value_im\n";
    for (std::size_t i = 0; i < res.r.size(); ++i)
      out << num(res.r[i]) << "," << num(res.values[i].real()) << "," << num(res.values[i].imag()) << "\n";
    std::cerr << "parseval_defect=" << num(res.parseval_defect) << " norm_ratio=" << num(res.norm_ratio)
              << " interpolated=" << (res.interpolated ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_spectrum(const RunConfig& c) {
  const DeformParams p = c.params();
  if (c.count < 0) throw DomainError("condition count >= 0 violated");
  const std::vector<SpectrumEntry> s = spectrum(p, c.count);
  OutputSink sink(c.output);
  std::ostream& out = sink.stream();
  if (c.format == "json") {
    json j = {{"params", params_json(p)}, {"spectrum", json::array()}};
    for (const auto& e : s)
      j["spectrum"].push_back({{"eigenvalue", e.eigenvalue}, {"l", e.l}, {"m", e.m}, {"multiplicity", e.multiplicity}});
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "eigenvalue,l,m,multiplicity\n";
  for (const auto& e : s) out << num(e.eigenvalue) << "," << e.l << "," << e.m << "," << e.multiplicity << "\n";
  return 0;
}

int cmd_verify(const RunConfig& c) {
  c.params();
  const SuiteReport rep = run_suite(c.suite);
  OutputSink sink(c.output);
  std::ostream& out = sink.stream();
  if (c.format == "json") {
    json j = {{"suite", rep.suite}, {"cases", json::array()}};
    for (const auto& r : rep.cases) {
      json cj = {{"name", r.name},
                 {"paper_ref", r.paper_ref},
                 {"residual", r.residual},
                 {"tolerance", r.tolerance},
                 {"pass", r.pass}};
      if (!r.note.empty()) cj["note"] = r.note;
      j["cases"].push_back(cj);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "name,paper_ref,residual,tolerance,pass\n";
    for (const auto& r : rep.cases)
      out << csv_field(r.name) << "," << csv_field(r.paper_ref) << "," << num(r.residual) << "," << num(r.tolerance) << ","
          << (r.pass ? "true" : "false") << "\n";
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laguerre semigroup kernels and the (k,a)-generalized Fourier transform"};
  app.require_subcommand(1, 1);
  const char* env = std::getenv("KLAG_CONFIG");
  app.set_config("--config", env ? env : "", "flat key = value file; command-line flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig c;
  app.add_option("--N", c.N, "dimension")->capture_default_str();
  app.add_option("--a", c.a, "deformation parameter a > 0")->capture_default_str();
  app.add_option("--k", c.k, "multiplicity, one value or N comma-separated values")->capture_default_str();
  app.add_option("--format", c.format, "csv or json")->capture_default_str();
  app.add_option("--output", c.output, "output file; standard output when empty");
  app.add_option("--z", c.z, "semigroup parameter, e.g. 0.5 or 0+1.5707963i")->capture_default_str();
  app.add_option("--kind", c.kind, "lambda, b, or auto (b at z = i pi/2)")->capture_default_str();
  app.add_option("--scope", c.scope, "B kernel scope: auto, rank_one, k_zero_a1, k_zero_a2, z2n_a2")
      ->capture_default_str();
  app.add_option("--grid-min", c.grid_min, "first grid parameter t")->capture_default_str();
  app.add_option("--grid-max", c.grid_max, "last grid parameter t")->capture_default_str();
  app.add_option("--grid-count", c.grid_count, "grid size; points are t times the direction")->capture_default_str();
  app.add_option("--x-dir", c.x_dir, "direction of x points, comma-separated (default e1)");
  app.add_option("--y-dir", c.y_dir, "direction of y points, comma-separated (default e1)");
  app.add_option("--input", c.input, "CSV with header r,value_re,value_im or x1,value_re,value_im");
  app.add_option("--l-max", c.l_max, "radial truncation order")->capture_default_str();
  app.add_option("--n-radial", c.n_radial, "radial quadrature nodes")->capture_default_str();
  app.add_option("--max-defect", c.max_defect, "refuse above this Parseval defect")->capture_default_str();
  app.add_option("--count", c.count, "number of eigenvalues")->capture_default_str();
  app.add_option("--suite", c.suite, "specfun, sl2, kernels, weber, transform, master, heisenberg or all")
      ->capture_default_str();

  CLI::App* kernel = app.add_subcommand("kernel", "evaluate the semigroup kernel or B on a grid of pairs");
  CLI::App* transform = app.add_subcommand("transform", "transform sampled data through the spectral pipeline");
  CLI::App* spec = app.add_subcommand("spectrum", "list the lowest eigenvalues with their (l, m)");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite and report each case");
  for (CLI::App* s : {kernel, transform, spec, verify}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    check_format(c);
    if (*kernel) return cmd_kernel(c);
    if (*transform) return cmd_transform(c);
    if (*spec) return cmd_spectrum(c);
    return cmd_verify(c);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// Command-line front end: interpolation of matrix functions, error
// certificates, the Chebyshev comparison and the randomized experiment.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mfbound/bounds.hpp"
#include "mfbound/chebyshev_demo.hpp"
#include "mfbound/decomp.hpp"
#include "mfbound/error.hpp"
#include "mfbound/experiment.hpp"
#include "mfbound/expm.hpp"
#include "mfbound/matrix_market.hpp"
#include "mfbound/node_io.hpp"
#include "mfbound/report_json.hpp"

namespace {

using namespace mfbound;

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FunctionArgs {
  std::string name = "exp";
  std::string coeffs;
};

struct NodeArgs {
  std::string inline_list;
  std::string file;
};

NodeSet load_nodes(const NodeArgs& a) {
  if (!a.inline_list.empty() && !a.file.empty()) throw UsageError("give either --nodes or --nodes-file, not both");
  if (!a.file.empty()) return read_node_file(a.file);
  if (!a.inline_list.empty()) return parse_node_list(a.inline_list);
  throw UsageError("interpolation nodes required (--nodes or --nodes-file)");
}

AnalyticFunction load_function(const FunctionArgs& a) {
  if (a.name == "exp") return AnalyticFunction::exponential();
  if (a.name == "poly") {
    if (a.coeffs.empty()) throw UsageError("--function poly needs --coeffs c0,c1,...");
    const NodeSet c = parse_node_list(a.coeffs);
    return AnalyticFunction::polynomial({c.begin(), c.end()});
  }
  throw UsageError("unknown function '" + a.name + "' (expected exp or poly)");
}

ComplexMatrix load_matrix(const std::string& path) {
  if (path.empty()) throw UsageError("--matrix is required");
  return read_matrix_market(path);
}

void emit_matrix(const ComplexMatrix& m, const std::string& path) {
  if (path.empty() || path == "-") {
    write_matrix_market(std::cout, m);
  } else {
    write_matrix_market(path, m);
  }
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

// --- interp ----------------------------------------------------------------

struct InterpArgs {
  std::string matrix;
  NodeArgs nodes;
  FunctionArgs function;
  std::string reference;
  std::string out;
};

int cmd_interp(const InterpArgs& args) {
  const ComplexMatrix a = load_matrix(args.matrix);
  const NodeSet nodes = load_nodes(args.nodes);
  const AnalyticFunction f = load_function(args.function);
  const auto p = divided_differences(f, nodes);
  print_warnings(p.warnings);
  const ComplexMatrix pa = newton_eval_matrix(p, a);

  nlohmann::json summary{{"nodes", nodes.size()}, {"dim", a.rows()}, {"function", f.name}};
  if (!args.reference.empty()) {
    const ComplexMatrix ref = read_matrix_market(args.reference);
    summary["true_error"] = true_error(a, nodes, f, ref, MatrixNorm::spectral());
  }
  emit_matrix(pa, args.out);
  // Keep stdout a single Matrix Market stream when the matrix goes there.
  auto& summary_stream = (args.out.empty() || args.out == "-") ? std::cerr : std::cout;
  summary_stream << summary.dump() << '\n';
  return kExitOk;
}

// --- bound -----------------------------------------------------------------

struct BoundArgs {
  std::string matrix;
  NodeArgs nodes;
  FunctionArgs function;
  std::string methods;
  std::size_t t_count = 101;
  std::size_t per_edge = 64;
  bool no_refine = false;
  std::string norm = "spectral";
  std::optional<double> beta;
  std::string taylor_center;
  std::size_t taylor_order = 0;
  unsigned threads = 0;
};

std::vector<BoundMethod> parse_methods(const std::string& list, const AnalyticFunction& f) {
  std::vector<BoundMethod> out;
  if (list.empty()) {
    out.push_back(BoundMethod::theorem1);
    if (f.kind == FunctionKind::exponential) {
      for (auto m : {BoundMethod::cor3, BoundMethod::cor4, BoundMethod::cor5, BoundMethod::cor6}) out.push_back(m);
    }
    return out;
  }
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(bound_method_from_string(item));
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

int cmd_bound(const BoundArgs& args) {
  const ComplexMatrix a = load_matrix(args.matrix);
  const AnalyticFunction f = load_function(args.function);
  const auto methods = parse_methods(args.methods, f);
  MatrixNorm norm = [&] {
    try {
      return MatrixNorm::by_name(args.norm);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }();
  const bool needs_nodes = std::any_of(methods.begin(), methods.end(),
                                       [](BoundMethod m) { return m != BoundMethod::taylor; });
  std::optional<NodeSet> nodes;
  if (needs_nodes) nodes = load_nodes(args.nodes);

  BoundOptions opts;
  opts.t_count = args.t_count;
  opts.per_edge = args.per_edge;
  opts.refine = !args.no_refine;
  opts.threads = args.threads;
  opts.beta_override = args.beta;

  nlohmann::json out = nlohmann::json::array();
  std::optional<std::size_t> tightest;
  double tightest_value = 0.0;
  for (BoundMethod m : methods) {
    try {
      if (m != BoundMethod::theorem1 && m != BoundMethod::taylor && f.kind != FunctionKind::exponential) {
        throw InvalidArgument(to_string(m) + " applies to f = exp only");
      }
      BoundReport r;
      switch (m) {
        case BoundMethod::theorem1: r = theorem_bound(a, *nodes, f, norm, opts); break;
        case BoundMethod::cor3: r = exp_bound_cor3(a, *nodes, norm, opts); break;
        case BoundMethod::cor4: r = exp_bound_cor4(a, *nodes, norm, opts.tol); break;
        case BoundMethod::cor5: r = exp_bound_cor5(a, *nodes, norm, opts.tol); break;
        case BoundMethod::cor6: r = exp_bound_cor6(a, *nodes, norm, opts.tol); break;
        case BoundMethod::taylor: {
          if (args.taylor_center.empty() || args.taylor_order == 0)
            throw UsageError("taylor needs --taylor-center and --taylor-order");
          r = taylor_bound(a, parse_complex(args.taylor_center), args.taylor_order, f, norm, opts);
          break;
        }
      }
      print_warnings(r.warnings);
      nlohmann::json j = to_json(r);
      j["tightest"] = false;
      if (!tightest || r.value < tightest_value) {
        tightest = out.size();
        tightest_value = r.value;
      }
      out.push_back(std::move(j));
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      out.push_back({{"method", to_string(m)}, {"error", e.what()}});
    }
  }
  if (tightest) out[*tightest]["tightest"] = true;
  std::cout << out.dump(2) << '\n';
  return tightest ? kExitOk : kExitCompute;
}

// --- cheb-demo -------------------------------------------------------------

int cmd_cheb_demo(std::size_t n) {
  const ChebyshevDemo d = chebyshev_demo(n);
  std::printf("n = %zu Chebyshev nodes on [-1, 1], f = exp\n", d.n);
  std::printf("%-44s %.6e\n", "(a) closed form e/(n! 2^(n-1))", d.closed_form);
  std::printf("%-44s %.6e\n", "(b) normal-matrix certificate (Hermitian A)", d.cor5_value);
  std::printf("%-44s %.6e\n", "(c) max |e^x - p(x)| over [0, 1]", d.sharp_0_1);
  std::printf("%-44s %.6e\n", "    max |e^x - p(x)| over [-1, 1]", d.sharp_m1_1);
  std::printf("grid points: %zu, test matrix dimension: %zu\n", d.grid_points, d.test_dim);
  return kExitOk;
}

// --- experiment ------------------------------------------------------------

struct ExperimentArgs {
  ExperimentConfig cfg;
  std::string rect;
  std::string out_csv;
  std::string out_json;
  std::string out_curve;
};

SpectralRect parse_rect(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_complex(item).real());
  if (v.size() != 4) throw UsageError("--rect expects re_lo,re_hi,im_lo,im_hi");
  return {v[0], v[1], v[2], v[3]};
}

template <typename Writer>
void write_to(const std::string& path, Writer&& w) {
  if (path.empty()) return;
  if (path == "-") {
    w(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  w(out);
}

int cmd_experiment(ExperimentArgs args) {
  if (!args.rect.empty()) args.cfg.rect = parse_rect(args.rect);
  try {
    validate(args.cfg);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const ExperimentResult result = run_experiment(args.cfg);
  for (const auto& line : result.log) std::cerr << line << '\n';

  const nlohmann::json stats = to_json(result.stats);
  write_to(args.out_csv, [&](std::ostream& o) { write_records_csv(o, result.records); });
  write_to(args.out_json, [&](std::ostream& o) { o << stats.dump(2) << '\n'; });
  if (!args.out_curve.empty()) {
    // Figure data for the first trial.
    Rng rng(args.cfg.seed);
    const TrialMatrices m = random_trial_matrix(args.cfg.dim, args.cfg.rect, rng);
    write_to(args.out_curve,
             [&](std::ostream& o) { write_curve_csv(o, norms_curve(m, paper_nodes(), args.cfg.t_count)); });
  }
  if (args.out_csv.empty() && args.out_json.empty()) std::cout << stats.dump(2) << '\n';
  return kExitOk;
}

// --- expm / schur ----------------------------------------------------------

int cmd_expm(const std::string& matrix, const std::string& out) {
  const ExpmResult r = matrix_exp_detailed(load_matrix(matrix));
  std::cerr << "pade degree " << r.pade_degree << ", squarings " << r.squarings << '\n';
  emit_matrix(r.value, out);
  return kExitOk;
}

int cmd_schur(const std::string& matrix, const std::string& out_q, const std::string& out_t) {
  if (out_q.empty() || out_t.empty()) throw UsageError("schur needs --out-q and --out-t");
  const SchurForm s = schur(load_matrix(matrix));
  write_matrix_market(out_q, s.q);
  write_matrix_market(out_t, s.t);
  std::cerr << "QR sweeps " << s.sweeps << '\n';
  return kExitOk;
}

void add_node_options(CLI::App* cmd, NodeArgs& n) {
  cmd->add_option("--nodes", n.inline_list, "Inline nodes, e.g. \"0,pij,-1-pi/2j\"");
  cmd->add_option("--nodes-file", n.file, "Node file, one 'real imag' per line");
}

void add_function_options(CLI::App* cmd, FunctionArgs& f) {
  cmd->add_option("--function", f.name, "exp or poly")->capture_default_str();
  cmd->add_option("--coeffs", f.coeffs, "Polynomial coefficients c0,c1,... for --function poly");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation of matrix functions with a-priori error certificates"};
  app.require_subcommand(1);

  InterpArgs interp;
  auto* c_interp = app.add_subcommand("interp", "Evaluate the interpolation polynomial p(A)");
  c_interp->add_option("--matrix", interp.matrix, "Matrix Market file with A")->required();
  add_node_options(c_interp, interp.nodes);
  add_function_options(c_interp, interp.function);
  c_interp->add_option("--reference", interp.reference, "Matrix Market file with f(A); prints the true error");
  c_interp->add_option("--out", interp.out, "Output path for p(A) (default stdout)");

  BoundArgs bound;
  auto* c_bound = app.add_subcommand("bound", "Compute error certificates as JSON");
  c_bound->add_option("--matrix", bound.matrix, "Matrix Market file with A")->required();
  add_node_options(c_bound, bound.nodes);
  add_function_options(c_bound, bound.function);
  c_bound->add_option("--methods", bound.methods, "Comma list of theorem1,cor3,cor4,cor5,cor6,taylor");
  c_bound->add_option("--t-count", bound.t_count, "Points of the t grid")->capture_default_str();
  c_bound->add_option("--per-edge", bound.per_edge, "Hull boundary samples per edge")->capture_default_str();
  c_bound->add_flag("--no-refine", bound.no_refine, "Skip the grid refinement check");
  c_bound->add_option("--norm", bound.norm, "spectral, frobenius or one")->capture_default_str();
  c_bound->add_option("--beta", bound.beta, "Force beta in the exponential certificates");
  c_bound->add_option("--taylor-center", bound.taylor_center, "Expansion point for the taylor method");
  c_bound->add_option("--taylor-order", bound.taylor_order, "Number of Taylor terms for the taylor method");
  c_bound->add_option("--threads", bound.threads, "Worker threads (0 = all cores)")->capture_default_str();

  std::size_t cheb_n = 10;
  auto* c_cheb = app.add_subcommand("cheb-demo", "Chebyshev-node certificate versus sharp error");
  c_cheb->add_option("n", cheb_n, "Number of Chebyshev nodes")->capture_default_str()->check(CLI::PositiveNumber);

  ExperimentArgs exp;
  exp.cfg.dim = 128;
  exp.cfg.threads = 0;
  auto* c_exp = app.add_subcommand("experiment", "Randomized validity experiment");
  c_exp->add_option("--dim", exp.cfg.dim, "Matrix dimension")->capture_default_str();
  c_exp->add_option("--trials", exp.cfg.trials, "Number of trials")->capture_default_str();
  c_exp->add_option("--seed", exp.cfg.seed, "Base seed; trial k uses seed + k")->capture_default_str();
  c_exp->add_option("--rect", exp.rect, "Spectrum rectangle re_lo,re_hi,im_lo,im_hi (pi allowed)");
  c_exp->add_option("--kappa-cutoff", exp.cfg.kappa_cutoff, "Exclude trials with cond(T) above this")
      ->capture_default_str();
  c_exp->add_option("--t-count", exp.cfg.t_count, "Points of the t grid")->capture_default_str();
  c_exp->add_option("--threads", exp.cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
  c_exp->add_option("--out-csv", exp.out_csv, "Per-trial CSV ('-' for stdout)");
  c_exp->add_option("--out-json", exp.out_json, "Statistics JSON ('-' for stdout)");
  c_exp->add_option("--out-curve", exp.out_curve, "CSV of ||Omega(A) e^{tA}|| for the first trial");

  std::string expm_matrix, expm_out;
  auto* c_expm = app.add_subcommand("expm", "Matrix exponential");
  c_expm->add_option("--matrix", expm_matrix, "Matrix Market file with A")->required();
  c_expm->add_option("--out", expm_out, "Output path (default stdout)");

  std::string schur_matrix, schur_q, schur_t;
  auto* c_schur = app.add_subcommand("schur", "Complex Schur form A = Q^H T Q");
  c_schur->add_option("--matrix", schur_matrix, "Matrix Market file with A")->required();
  c_schur->add_option("--out-q", schur_q, "Output path for Q");
  c_schur->add_option("--out-t", schur_t, "Output path for T");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_interp->parsed()) return cmd_interp(interp);
    if (c_bound->parsed()) return cmd_bound(bound);
    if (c_cheb->parsed()) return cmd_cheb_demo(cheb_n);
    if (c_exp->parsed()) return cmd_experiment(exp);
    if (c_expm->parsed()) return cmd_expm(expm_matrix, expm_out);
    if (c_schur->parsed()) return cmd_schur(schur_matrix, schur_q, schur_t);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitUsage;
}

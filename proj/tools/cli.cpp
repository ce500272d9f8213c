#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gsimplex/geometry.hpp"
#include "gsimplex/instances.hpp"
#include "gsimplex/io.hpp"
#include "gsimplex/oracle.hpp"
#include "gsimplex/simplex.hpp"
#include "gsimplex/validators.hpp"

namespace gsimplex::cli {

namespace {

struct RunConfig {
  std::string instance;
  std::string objective;
  std::string policy = "unit-edge";
  std::string start;
  std::string arithmetic = "rational";
  std::size_t max_iter = 10000;
  std::size_t gamma_window = 1;
  std::string tol_active;
  std::string tol_zero;
  std::string tol_opt;
  std::string trace_path;
  std::string plot_path;
  std::string report_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t samples = 256;
  std::string sample_kind = "auto";
  std::size_t pairs = 16;
  unsigned threads = 1;
  bool emit_points = false;
  bool audit_gate = false;
  std::string point = "ones";
  double radius = 0.999;
  std::size_t sweep = 3600;
};

struct Preset {
  std::string name;
  std::vector<std::string> args;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view text) {
  std::string body = trim(text);
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  std::vector<std::string> out;
  if (trim(body).empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    out.push_back(trim(std::string_view(body).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// name(arg, arg, ...) with a lowercase name.
std::optional<Preset> parse_preset(std::string_view text) {
  std::string t = trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos || open == 0 || t.back() != ')') return std::nullopt;
  std::string name = t.substr(0, open);
  for (char c : name) {
    if (!(std::islower(static_cast<unsigned char>(c)) || c == '-')) return std::nullopt;
  }
  return Preset{name, split_list(t.substr(open + 1, t.size() - open - 2))};
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw Error(ErrorKind::Parse, what + ": expected a nonnegative integer, got '" + text + "'");
  return v;
}

void expect_args(const Preset& p, std::size_t count) {
  if (p.args.size() != count) {
    throw Error(ErrorKind::Spec, p.name + " takes " + std::to_string(count) + " argument(s), got " +
                                     std::to_string(p.args.size()));
  }
}

template <class T>
struct Loaded {
  std::optional<ConstraintSystem<T>> sys;
  std::optional<Objective<T>> file_objective;
  std::optional<HilbertCubeSpec> hilbert;
  std::optional<DiscSection> disc;
};

template <class T>
Loaded<T> load(const RunConfig& cfg) {
  if (cfg.instance.empty()) throw Error(ErrorKind::Spec, "no instance given (--instance)");
  Loaded<T> out;
  auto preset = parse_preset(cfg.instance);
  if (!preset) {
    Instance inst = load_instance(cfg.instance);
    out.sys = convert<T>(inst.system);
    if (inst.objective) out.file_objective = convert<T>(*inst.objective);
    return out;
  }
  const Preset& p = *preset;
  if (p.name == "hilbert-cube") {
    expect_args(p, 2);
    HilbertCubeSpec spec{GeometricWeights{parse_rational(p.args[0])}, parse_u64(p.args[1], "N")};
    out.sys = build_hilbert_cube<T>(spec);
    out.hilbert = spec;
  } else if (p.name == "cube") {
    expect_args(p, 1);
    out.sys = build_cube<T>(parse_u64(p.args[0], "n"));
  } else if (p.name == "simplex") {
    expect_args(p, 1);
    out.sys = build_simplex<T>(parse_u64(p.args[0], "n"));
  } else if (p.name == "random-lp") {
    expect_args(p, 3);
    RandomLpSpec spec;
    spec.dimension = parse_u64(p.args[0], "n");
    spec.constraints = parse_u64(p.args[1], "m");
    spec.seed = parse_u64(p.args[2], "seed");
    out.sys = convert<T>(build_random_lp(spec));
  } else if (p.name == "disc-section") {
    expect_args(p, 1);
    DiscSection disc({parse_u64(p.args[0], "N_dir")});
    out.sys = convert<T>(disc.raised_system());
    out.hilbert = HilbertCubeSpec{GeometricWeights{Rational(1, 2)}, disc.size()};
    out.disc = std::move(disc);
  } else {
    throw Error(ErrorKind::Spec, "unknown instance preset '" + p.name + "'");
  }
  return out;
}

template <class T>
std::vector<T> parse_scalars(const std::vector<std::string>& items) {
  std::vector<T> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(ScalarTraits<T>::parse(s));
  return out;
}

template <class T>
Point<T> parse_point(const std::string& text, const ConstraintSystem<T>& sys, const Tolerances<T>& tol) {
  const std::size_t n = sys.truncation();
  if (text == "origin-vertex" || text == "origin") {
    Point<T> p(n);
    if (text == "origin-vertex" && !is_extreme(sys, p, tol)) {
      throw Error(ErrorKind::Precondition, "the origin is not a vertex of this instance");
    }
    return p;
  }
  if (text == "ones") return Point<T>(std::vector<T>(n, T(1)));
  if (text == "center") return Point<T>(std::vector<T>(n, T(1) / T(2)));
  if (auto p = parse_preset(text); p && p->name == "vertex") {
    expect_args(*p, 1);
    const std::uint64_t k = parse_u64(p->args[0], "vertex index");
    VertexSet<T> vs = enumerate_vertices(sys, tol);
    if (k >= vs.vertices.size()) {
      throw Error(ErrorKind::Bounds, "vertex index " + std::to_string(k) + " out of range (" +
                                         std::to_string(vs.vertices.size()) + " vertices)");
    }
    return vs.vertices[k];
  }
  std::vector<T> coords = parse_scalars<T>(split_list(text));
  if (coords.size() != n) {
    throw Error(ErrorKind::Dimension, "point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                          std::to_string(n));
  }
  return Point<T>(std::move(coords));
}

template <class T>
std::optional<Objective<T>> make_objective(const RunConfig& cfg, const Loaded<T>& in, const Tolerances<T>& tol) {
  const ConstraintSystem<T>& sys = *in.sys;
  const std::size_t n = sys.truncation();
  if (cfg.objective.empty()) return in.file_objective;
  if (cfg.objective == "zero") return Objective<T>(Coeffs<T>(n));
  if (auto p = parse_preset(cfg.objective)) {
    if (p->name == "hilbert-h") {
      expect_args(*p, 1);
      if (!in.hilbert) throw Error(ErrorKind::Spec, "hilbert-h objectives need a hilbert-cube or disc-section instance");
      const Rational c = parse_rational(p->args[0]);
      return hilbert_cube_objective<T>(*in.hilbert, [c](std::size_t) { return c; }, abs(c));
    }
    if (p->name == "random") {
      expect_args(*p, 1);
      return convert<T>(random_objective(n, parse_u64(p->args[0], "seed")));
    }
    if (p->name == "exposing") {
      std::string inner = cfg.objective.substr(cfg.objective.find('(') + 1);
      inner.pop_back();
      return build_exposing_objective(sys, parse_point(trim(inner), sys, tol), tol);
    }
    throw Error(ErrorKind::Spec, "unknown objective preset '" + p->name + "'");
  }
  std::vector<T> coeffs = parse_scalars<T>(split_list(cfg.objective));
  if (coeffs.size() != n) {
    throw Error(ErrorKind::Dimension, "objective has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                          std::to_string(n));
  }
  return Objective<T>(Coeffs<T>::dense(std::span<const T>(coeffs)));
}

template <class T>
Tolerances<T> make_tolerances(const RunConfig& cfg) {
  Tolerances<T> tol = Tolerances<T>::defaults();
  if (!cfg.tol_active.empty()) tol.active = ScalarTraits<T>::parse(cfg.tol_active);
  if (!cfg.tol_zero.empty()) tol.zero = ScalarTraits<T>::parse(cfg.tol_zero);
  if (!cfg.tol_opt.empty()) tol.opt = ScalarTraits<T>::parse(cfg.tol_opt);
  tol.validate();
  return tol;
}

template <class T>
SampleSpec make_sample(const RunConfig& cfg, const ConstraintSystem<T>& sys) {
  SampleSpec s;
  s.size = cfg.samples;
  s.seed = cfg.seed;
  s.decomposition_pairs = cfg.pairs;
  s.threads = std::max(1U, cfg.threads);
  if (cfg.sample_kind == "exhaustive") {
    s.kind = SampleKind::Exhaustive;
  } else if (cfg.sample_kind == "random") {
    s.kind = SampleKind::RandomBinary;
  } else if (cfg.sample_kind == "auto") {
    const bool small = binomial(sys.size(), sys.truncation()) <= kDefaultOracleBudget;
    s.kind = sys.extent() == Extent::Finite && small ? SampleKind::Exhaustive : SampleKind::RandomBinary;
  } else {
    throw Error(ErrorKind::Spec, "unknown sample kind '" + cfg.sample_kind + "'");
  }
  return s;
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_atomic(path, contents);
  }
}

template <class T>
Objective<T> require_objective(const std::optional<Objective<T>>& obj, std::string_view command) {
  if (!obj) throw Error(ErrorKind::Spec, std::string(command) + " needs an objective (--objective)");
  return *obj;
}

template <class T>
Limits<T> make_limits(const RunConfig& cfg, const Tolerances<T>& tol) {
  Limits<T> limits;
  limits.max_iter = cfg.max_iter;
  limits.tol = tol;
  limits.gamma_window = std::max<std::size_t>(1, cfg.gamma_window);
  return limits;
}

template <class T>
int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  Loaded<T> in = load<T>(cfg);
  const ConstraintSystem<T>& sys = *in.sys;
  const Tolerances<T> tol = make_tolerances<T>(cfg);
  const NormPolicy policy = parse_norm_policy(cfg.policy);
  const Objective<T> obj = require_objective(make_objective(cfg, in, tol), "solve");
  const Point<T> p0 = parse_point(cfg.start.empty() ? "origin-vertex" : cfg.start, sys, tol);

  if (cfg.audit_gate) {
    AuditReport<T> report = audit(sys, &obj, policy, make_sample(cfg, sys), tol);
    if (!cfg.report_path.empty()) write_atomic(cfg.report_path, format_audit(report));
    std::string failed;
    for (const auto& v : report.verdicts) {
      if (v.status == VerdictStatus::Fail) failed += (failed.empty() ? "" : ",") + v.id;
    }
    if (!failed.empty()) {
      throw Error(ErrorKind::Precondition, "audit gate: " + failed + " failed under policy " + cfg.policy);
    }
  }

  SimplexTrace<T> trace = simplex_run(sys, obj, p0, policy, make_limits(cfg, tol));
  const std::string jsonl = format_trace(trace, {cfg.emit_points});
  if (!cfg.plot_path.empty()) write_atomic(cfg.plot_path, format_plot(trace));
  if (cfg.trace_path.empty()) {
    out << jsonl;
  } else {
    write_atomic(cfg.trace_path, jsonl);
    out << "stop=" << to_string(trace.stop) << " pivots=" << trace.pivot_count()
        << " value=" << format_scalar(trace.values.back()) << " gamma=" << format_scalar(trace.gammas.back()) << "\n";
  }
  return kOk;
}

template <class T>
int cmd_audit(const RunConfig& cfg, std::ostream& out) {
  Loaded<T> in = load<T>(cfg);
  const ConstraintSystem<T>& sys = *in.sys;
  const Tolerances<T> tol = make_tolerances<T>(cfg);
  const std::optional<Objective<T>> obj = make_objective(cfg, in, tol);
  AuditReport<T> report = audit(sys, obj ? &*obj : nullptr, parse_norm_policy(cfg.policy), make_sample(cfg, sys), tol);
  emit(cfg.report_path, format_audit(report), out);
  return kOk;
}

template <class T>
int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  Loaded<T> in = load<T>(cfg);
  const ConstraintSystem<T>& sys = *in.sys;
  const Tolerances<T> tol = make_tolerances<T>(cfg);
  const Point<T> base = parse_point(cfg.start.empty() ? "origin-vertex" : cfg.start, sys, tol);
  const Point<T> target = parse_point(cfg.point, sys, tol);
  SchauderDecomposition<T> dec = schauder_decompose(sys, base, target, tol);
  std::string csv = "n,id,theta,residual_sq\n0,,," + format_scalar(dec.residuals_sq[0]) + "\n";
  for (std::size_t k = 0; k < dec.coefficients.size(); ++k) {
    const auto& term = dec.coefficients[k];
    csv += std::to_string(k + 1) + "," + std::to_string(term.id) + "," + format_scalar(term.theta) + "," +
           format_scalar(dec.residuals_sq[k + 1]) + "\n";
  }
  emit(cfg.out_path, csv, out);
  return kOk;
}

double unit_draw(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11U) * 0x1.0p-53;
}

int cmd_section(const RunConfig& cfg, std::ostream& out) {
  auto preset = parse_preset(cfg.instance);
  if (!preset || preset->name != "disc-section") throw Error(ErrorKind::Spec, "section needs a disc-section(N_dir) instance");
  expect_args(*preset, 1);
  DiscSection disc({parse_u64(preset->args[0], "N_dir")});
  if (!(cfg.radius > 0)) throw Error(ErrorKind::Spec, "--radius must be positive");
  std::mt19937_64 engine(cfg.seed);
  std::vector<SectionSample> samples;
  samples.reserve(cfg.samples);
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const double r = cfg.radius * std::sqrt(unit_draw(engine));
    const double t = 2.0 * std::numbers::pi * unit_draw(engine);
    SectionSample s{r * std::cos(t), r * std::sin(t), false};
    s.accepted = disc.accepts(s.alpha, s.beta);
    accepted += s.accepted ? 1 : 0;
    samples.push_back(s);
  }
  double max_radius = 0.0;
  double min_radius = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < cfg.sweep; ++k) {
    const double r = disc.radial_extent(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(cfg.sweep));
    max_radius = std::max(max_radius, r);
    min_radius = std::min(min_radius, r);
  }
  if (!cfg.out_path.empty()) write_atomic(cfg.out_path, format_section(samples));
  out << "directions=" << disc.size() << " accepted=" << accepted << "/" << samples.size()
      << " max_radius=" << ScalarTraits<double>::to_string(max_radius)
      << " min_radius=" << ScalarTraits<double>::to_string(min_radius) << "\n";
  if (cfg.out_path.empty()) out << format_section(samples);
  return kOk;
}

template <class T>
int cmd_oracle_check(const RunConfig& cfg, std::ostream& out) {
  Loaded<T> in = load<T>(cfg);
  const ConstraintSystem<T>& sys = *in.sys;
  const Tolerances<T> tol = make_tolerances<T>(cfg);
  const Objective<T> obj = require_objective(make_objective(cfg, in, tol), "oracle-check");
  VertexSet<T> vs = enumerate_vertices(sys, tol);
  if (vs.vertices.empty()) throw Error(ErrorKind::Empty, "the instance has no vertices");
  const BruteOptimum<T> best = brute_optimum(vs, obj);
  const Point<T> p0 = parse_point(cfg.start.empty() ? "vertex(0)" : cfg.start, sys, tol);
  SimplexTrace<T> trace = simplex_run(sys, obj, p0, parse_norm_policy(cfg.policy), make_limits(cfg, tol));
  if (!cfg.trace_path.empty()) write_atomic(cfg.trace_path, format_trace(trace, {cfg.emit_points}));

  const T dedup = ScalarTraits<T>::exact ? T(0) : T(1e-8);
  std::vector<std::size_t> path;
  for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
    auto idx = vs.find(trace.iterates[n], dedup);
    if (!idx) throw Error(ErrorKind::OracleMismatch, "iterate is not an oracle vertex", std::nullopt, n);
    path.push_back(*idx);
  }
  for (std::size_t n = 0; n + 1 < path.size(); ++n) {
    auto nb = vs.neighbors(path[n]);
    if (!std::binary_search(nb.begin(), nb.end(), path[n + 1])) {
      throw Error(ErrorKind::OracleMismatch, "pivot does not follow an oracle edge", std::nullopt, n);
    }
  }
  const T final_value = trace.values.back();
  const T gap = abs_value(T(final_value - best.value));
  const T allowed = ScalarTraits<T>::exact ? T(0) : T(1e-9);
  if (gap > allowed) {
    throw Error(ErrorKind::OracleMismatch, "simplex value " + format_scalar(final_value) + " differs from brute optimum " +
                                               format_scalar(best.value));
  }
  out << "optimum agrees value=" << format_scalar(best.value) << " vertices=" << vs.vertices.size()
      << " edges=" << vs.adjacency.size() << " pivots=" << trace.pivot_count() << "\n";
  return kOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Budget:
      return kBudgetError;
    case ErrorKind::OracleMismatch:
      return kOracleMismatch;
    case ErrorKind::Precondition:
    case ErrorKind::Degenerate:
    case ErrorKind::Infeasible:
    case ErrorKind::Unbounded:
    case ErrorKind::Empty:
    case ErrorKind::Sampling:
    case ErrorKind::Unsupported:
      return kPreconditionError;
    case ErrorKind::Dimension:
    case ErrorKind::Lookup:
    case ErrorKind::Bounds:
    case ErrorKind::Spec:
    case ErrorKind::Parse:
      return kConfigError;
  }
  return kConfigError;
}

std::string quote(std::string_view text) {
  std::string q = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') q += '\\';
    q += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return q + "\"";
}

void report_error(std::ostream& err, int code, std::string_view kind, std::string_view message,
                  std::optional<ConstraintId> constraint = std::nullopt,
                  std::optional<std::size_t> iteration = std::nullopt) {
  err << "error code=" << code << " kind=" << kind;
  if (constraint) err << " constraint=" << *constraint;
  if (iteration) err << " iteration=" << *iteration;
  err << " message=" << quote(message) << "\n";
}

template <class T>
int dispatch(const std::string& command, const RunConfig& cfg, std::ostream& out) {
  if (command == "solve") return cmd_solve<T>(cfg, out);
  if (command == "audit") return cmd_audit<T>(cfg, out);
  if (command == "decompose") return cmd_decompose<T>(cfg, out);
  if (command == "oracle-check") return cmd_oracle_check<T>(cfg, out);
  return cmd_section(cfg, out);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-i,--instance", cfg.instance, "Preset such as cube(3) or hilbert-cube(1/2,20), or an instance file");
  sub->add_option("-a,--arithmetic", cfg.arithmetic, "rational or float")->capture_default_str();
  sub->add_option("--tol-active", cfg.tol_active, "Tightness tolerance")->envname("GSIMPLEX_TOL_ACTIVE");
  sub->add_option("--tol-zero", cfg.tol_zero, "Zero-pivot tolerance")->envname("GSIMPLEX_TOL_ZERO");
  sub->add_option("--tol-opt", cfg.tol_opt, "Optimality tolerance on gamma")->envname("GSIMPLEX_TOL_OPT");
  sub->add_option("--seed", cfg.seed, "Seed for every random draw")->capture_default_str();
}

void add_objective(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-c,--objective", cfg.objective,
                  "Coefficient list, zero, hilbert-h(c), random(seed) or exposing(point)");
}

void add_policy(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-p,--policy", cfg.policy, "unit-edge or ambient")->capture_default_str();
}

void add_start(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("-s,--start", cfg.start, "origin-vertex, vertex(k) or a coordinate list");
}

void add_limits(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--max-iter", cfg.max_iter, "Pivot limit")->capture_default_str();
  sub->add_option("--gamma-window", cfg.gamma_window, "Iterations within tol-opt before stopping on truncated systems")
      ->capture_default_str();
}

void add_sampling(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--samples", cfg.samples, "Number of random extreme points")->capture_default_str();
  sub->add_option("--sample-kind", cfg.sample_kind, "auto, exhaustive or random")->capture_default_str();
  sub->add_option("--pairs", cfg.pairs, "Decomposition pairs checked per audit")->capture_default_str();
  sub->add_option("--threads", cfg.threads, "Worker threads for sample evaluation")
      ->envname("GSIMPLEX_THREADS")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric simplex method over countably many constraints", "gsimplex"};
  app.set_config("--config", "", "TOML or INI file with option values");
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* solve = app.add_subcommand("solve", "Run the steepest-edge simplex walk");
  add_common(solve, cfg);
  add_objective(solve, cfg);
  add_policy(solve, cfg);
  add_start(solve, cfg);
  add_limits(solve, cfg);
  add_sampling(solve, cfg);
  solve->add_option("--trace", cfg.trace_path, "JSONL trace output (stdout when absent)");
  solve->add_option("--plot", cfg.plot_path, "CSV output with n,value,gamma");
  solve->add_option("--report", cfg.report_path, "Audit report output when gating");
  solve->add_flag("--emit-points", cfg.emit_points, "Write points even above dimension 32");
  solve->add_flag("--audit-gate", cfg.audit_gate, "Refuse to run when the audit fails an assumption");

  CLI::App* aud = app.add_subcommand("audit", "Estimate constants and check assumptions A1-A9");
  add_common(aud, cfg);
  add_objective(aud, cfg);
  add_policy(aud, cfg);
  add_sampling(aud, cfg);
  aud->add_option("--report", cfg.report_path, "Report output (stdout when absent)");

  CLI::App* dec = app.add_subcommand("decompose", "Expand a point along the edges out of a vertex");
  add_common(dec, cfg);
  add_start(dec, cfg);
  dec->add_option("--point", cfg.point, "ones, center or a coordinate list")->capture_default_str();
  dec->add_option("-o,--out", cfg.out_path, "CSV output (stdout when absent)");

  CLI::App* sec = app.add_subcommand("section", "Sample the two-dimensional disc section");
  add_common(sec, cfg);
  sec->add_option("--samples", cfg.samples, "Number of sampled points")->capture_default_str();
  sec->add_option("--radius", cfg.radius, "Largest sampled radius")->capture_default_str();
  sec->add_option("--sweep", cfg.sweep, "Angles in the boundary sweep")->capture_default_str();
  sec->add_option("-o,--out", cfg.out_path, "CSV output with alpha,beta,accepted");

  CLI::App* orc = app.add_subcommand("oracle-check", "Compare the simplex walk with brute-force enumeration");
  add_common(orc, cfg);
  add_objective(orc, cfg);
  add_policy(orc, cfg);
  add_start(orc, cfg);
  add_limits(orc, cfg);
  orc->add_option("--trace", cfg.trace_path, "JSONL trace output");
  orc->add_flag("--emit-points", cfg.emit_points, "Write points even above dimension 32");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, kConfigError, "usage", e.what());
    return kConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Arithmetic arithmetic = parse_arithmetic(cfg.arithmetic);
    if (arithmetic == Arithmetic::Rational) return dispatch<Rational>(command, cfg, out);
    return dispatch<double>(command, cfg, out);
  } catch (const Error& e) {
    const int code = exit_code(e.kind());
    report_error(err, code, to_string(e.kind()), e.what(), e.constraint_id(), e.iteration());
    return code;
  } catch (const std::exception& e) {
    report_error(err, kConfigError, "internal", e.what());
    return kConfigError;
  }
}

}  // namespace gsimplex::cli

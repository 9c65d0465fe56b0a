#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "plancut/io.hpp"
#include "plancut/oracle.hpp"

using namespace plancut;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

// "p/q" or "p" with integer parts
Rat parse_rat_arg(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stol(s));
    long num = std::stol(s.substr(0, slash));
    long den = std::stol(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a rational p/q, got \"" + s + "\"");
  }
}

void emit(const std::string& out_path, const std::string& text, const std::string& summary) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    spit(out_path, text);
    std::printf("%s -> %s\n", summary.c_str(), out_path.c_str());
  }
}

int run_halve(const std::string& path, std::uint64_t seed, const std::string& out,
              const std::string& svg) {
  InstanceDoc doc = parse_instance(slurp(path));
  ReductionConfig cfg;
  cfg.seed = seed;
  Solution sol = solve_reduction(doc.instance, cfg);
  HalvingReport rep = verify_halving(doc.instance, sol.lines);
  Rat q = choose_shear(doc.instance, seed);
  std::string summary = "halve: " + std::to_string(sol.lines.size()) +
                        " lines, t_used=" + std::to_string(sol.stats.t_used) +
                        ", t_lower=" + std::to_string(sol.stats.t_lower) +
                        (rep.valid ? ", valid" : ", INVALID");
  emit(out, write_halving_result(sol.lines, sol.stats, q, rep.valid), summary);
  if (!svg.empty()) spit(svg, svg_figure(doc.instance, sol.lines, {}));
  return rep.valid ? 0 : 2;
}

int run_guard(const std::string& path, std::uint64_t seed, const std::string& out,
              const std::string& svg) {
  InstanceDoc doc = parse_instance(slurp(path));
  GuardConfig cfg;
  cfg.seed = seed;
  GuardSet gs = solve_guarding(doc.instance, cfg);
  GuardingReport rep = verify_guarding(doc.instance, gs.guards);
  Rat q = choose_shear(doc.instance, seed);
  std::string summary = "guard: " + std::to_string(gs.guards.size()) +
                        " guards, t_used=" + std::to_string(gs.stats.t_used) +
                        ", t_lower=" + std::to_string(gs.stats.t_lower) +
                        (gs.stats.size_bound_guaranteed ? "" : " (no size bound; greedy net)") +
                        (rep.valid ? ", valid" : ", INVALID");
  emit(out, write_guarding_result(gs.guards, gs.stats, q, rep.valid), summary);
  if (!svg.empty()) spit(svg, svg_figure(doc.instance, {}, gs.guards));
  return rep.valid ? 0 : 2;
}

int run_cut(const std::string& lines_path, const std::string& eps_str, bool simple,
            std::uint64_t seed, const std::string& out) {
  std::vector<Line> input = parse_lines(slurp(lines_path));
  if (input.empty()) throw std::invalid_argument("cut: the input has no lines");
  Rat eps = parse_rat_arg(eps_str);
  if (!(eps > 0) || !(eps < 1)) throw std::invalid_argument("cut: eps must be in (0, 1)");
  WeightedLineSet L = WeightedLineSet::uniform(input);
  Cutting cut = simple ? simple_weak_cutting(L, eps, seed)
                       : weak_cutting(L, eps, CuttingParams::defaults(eps, seed));
  CutCheck check = verify_cutting(L, cut, eps);
  std::printf("cut: %zu lines (%ld sampled + %ld vertical, %ld attempt%s), worst face weight %s "
              "of bound %s: %s\n",
              cut.lines.size(), cut.stats.sample_size, cut.stats.refinement_lines,
              cut.stats.attempts, cut.stats.attempts == 1 ? "" : "s",
              rat_str(check.worst_weight).c_str(), rat_str(eps * L.total).c_str(),
              check.valid ? "valid" : "INVALID");
  if (!out.empty()) spit(out, write_cutting_result(cut, check, eps));
  return check.valid ? 0 : 2;
}

int run_verify(const std::string& inst_path, const std::string& result_path) {
  InstanceDoc doc = parse_instance(slurp(inst_path));
  ResultDoc res = parse_result(slurp(result_path));
  if (res.kind == ResultKind::Halving) {
    HalvingReport rep = verify_halving(doc.instance, res.lines);
    if (rep.valid) {
      std::printf("verify: %zu lines halve all %zu sets\n", res.lines.size(),
                  doc.instance.k());
      return 0;
    }
    std::printf("verify: INVALID, set %zu has a side with %ld points (allowed %s)\n",
                rep.set_index, rep.count, rat_str(rep.allowed).c_str());
    return 2;
  }
  GuardingReport rep = verify_guarding(doc.instance, res.guards);
  if (rep.valid) {
    std::printf("verify: %zu guards protect all %zu sets\n", res.guards.size(),
                doc.instance.k());
    return 0;
  }
  std::printf("verify: INVALID, set %zu has an unguarded region with %ld points "
              "(threshold %ld)\n",
              rep.set_index, rep.count, rep.threshold);
  return 2;
}

int run_gen(const std::string& kind_str, long n, std::uint64_t seed, long box,
            const std::string& fraction_str, const std::string& out) {
  GeneratorSpec spec;
  bool random = false;
  if (kind_str == "grid") {
    spec.kind = GenKind::Grid;
  } else if (kind_str == "convex") {
    spec.kind = GenKind::ConvexPosition;
  } else if (kind_str == "parabola") {
    spec.kind = GenKind::Parabola;
  } else if (kind_str == "random") {
    spec.kind = GenKind::UniformRandom;
    random = true;
  } else {
    throw std::invalid_argument("gen: unknown kind \"" + kind_str +
                                "\" (grid|convex|parabola|random)");
  }
  spec.n = n;
  spec.seed = seed;
  spec.box = box;
  Rat fr = parse_rat_arg(fraction_str);
  Instance inst = Instance::of({{gen_instance(spec), fr}});
  InstanceMeta meta;
  meta.name = kind_str + "-" + std::to_string(n);
  if (random) meta.seed = seed;
  emit(out, write_instance(inst, meta), "gen: " + *meta.name);
  return 0;
}

int run_calibrate(long trials, std::uint64_t seed, const std::string& out) {
  Calibration cal = calibrate_constants(trials, seed);
  emit(out, cal.to_text(), "calibrate: " + std::to_string(trials) + " trials");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for simultaneous halving lines and convex-region guard points"};
  app.require_subcommand(1);

  std::string in_path, out_path, svg_path, result_path, eps_str = "1/10", kind = "grid",
              fraction_str = "1";
  std::uint64_t seed = 0;
  long n = 8, box = 1000, trials = 50;
  bool simple = false;

  CLI::App* halve = app.add_subcommand("halve", "compute a simultaneous halving line set");
  halve->add_option("instance", in_path, "instance file")->required();
  halve->add_option("--seed", seed, "random seed (default 0)");
  halve->add_option("--out", out_path, "result file (default: stdout)");
  halve->add_option("--svg", svg_path, "also draw the result as SVG");

  CLI::App* guard = app.add_subcommand("guard", "compute a guard point set");
  guard->add_option("instance", in_path, "instance file")->required();
  guard->add_option("--seed", seed, "random seed (default 0)");
  guard->add_option("--out", out_path, "result file (default: stdout)");
  guard->add_option("--svg", svg_path, "also draw the result as SVG");

  CLI::App* cut = app.add_subcommand("cut", "build a weak cutting for a line set");
  cut->add_option("--lines", in_path, "line-set file")->required();
  cut->add_option("--eps", eps_str, "cutting parameter p/q in (0,1)")->required();
  cut->add_flag("--simple", simple, "use the quadratic-size construction");
  cut->add_option("--seed", seed, "random seed (default 0)");
  cut->add_option("--out", out_path, "cutting file (default: report only)");

  CLI::App* verify = app.add_subcommand("verify", "re-verify a result against its instance");
  verify->add_option("instance", in_path, "instance file")->required();
  verify->add_option("--result", result_path, "result file")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--kind", kind, "grid|convex|parabola|random")->required();
  gen->add_option("--n", n, "points per set")->required();
  gen->add_option("--seed", seed, "random seed (random kind)");
  gen->add_option("--box", box, "coordinate box for random (default 1000)");
  gen->add_option("--fraction", fraction_str, "per-set fraction p/q (default 1)");
  gen->add_option("--out", out_path, "instance file (default: stdout)");

  CLI::App* calibrate = app.add_subcommand("calibrate", "fit the soft-bound constants");
  calibrate->add_option("--trials", trials, "trial count (default 50)");
  calibrate->add_option("--seed", seed, "random seed (default 0)");
  calibrate->add_option("--out", out_path, "calibration file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(halve)) return run_halve(in_path, seed, out_path, svg_path);
    if (app.got_subcommand(guard)) return run_guard(in_path, seed, out_path, svg_path);
    if (app.got_subcommand(cut)) return run_cut(in_path, eps_str, simple, seed, out_path);
    if (app.got_subcommand(verify)) return run_verify(in_path, result_path);
    if (app.got_subcommand(gen)) return run_gen(kind, n, seed, box, fraction_str, out_path);
    if (app.got_subcommand(calibrate)) return run_calibrate(trials, seed, out_path);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "plancut: %s\n", e.what());
    return 1;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "plancut: %s\n", e.what());
    return 1;
  } catch (const std::logic_error& e) {
    std::fprintf(stderr, "plancut: internal check failed: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "plancut: %s\n", e.what());
    return 1;
  }
  return 1;
}

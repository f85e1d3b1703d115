#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ndiv/construct.hpp"
#include "ndiv/gram.hpp"
#include "ndiv/io.hpp"
#include "ndiv/kernels.hpp"
#include "ndiv/roots.hpp"
#include "ndiv/spectrum.hpp"

namespace {

using ndiv::json;

struct CommonOpts {
  int n = 2;
  std::int64_t cap = 4096;
  unsigned seed = 0;
  double tol = 1e-12;
  double grid_step = 0.0;
  double t_max = 0.0;
  std::string out;
};

json file_entry(const std::string& path, const std::string& text) {
  return json{{"path", path}, {"digest", ndiv::content_digest(text)}};
}

// Serialize with a trailing newline so files are friendly to line tools.
std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

ndiv::BranchFunction load_function(const std::string& path) {
  return ndiv::function_from_json(json::parse(ndiv::read_text_file(path)));
}

void emit_report(const json& report) { std::cout << dump_json(report); }

double gram_range_for(const ndiv::BranchFunction& f) {
  if (f.periodic()) return 3.5 * f.spec().generator()->period;
  double r = f.spec().max_bounded_abscissa();
  if (f.spec().has_unbounded_component())
    r = std::max(r, f.spec().positives().back().lo + 6.0 * f.atom().half_width);
  return r + 1.0;
}

// Positive-definiteness verdict for any function: spectrum route for
// generators with exact phases, Gram probes otherwise.
ndiv::PsdVerdict pd_verdict(const ndiv::BranchFunction& f, const CommonOpts& c, int trials,
                            int gram_points, double gram_range) {
  if (f.power() == 1 && f.exact_phases()) {
    const ndiv::CosineSpectrum s = ndiv::spectrum_of(f);
    const double step = c.grid_step > 0.0 ? c.grid_step : ndiv::default_bochner_step(s);
    const double tmax = c.t_max > 0.0 ? c.t_max : ndiv::default_bochner_tmax(s);
    return ndiv::bochner_check(s, step, tmax);
  }
  std::mt19937 rng(c.seed);
  const double range = gram_range > 0.0 ? gram_range : gram_range_for(f);
  return ndiv::gram_psd_search(f, rng, trials, gram_points, -range, range);
}

int cmd_construct(const CommonOpts& c, const std::string& spec_path, const std::string& params_path,
                  double period, double width, const std::string& generator_out) {
  if (spec_path.empty() && !(period > 0.0))
    throw ndiv::spec_error("construct needs --spec FILE or --period/--width");
  if (!spec_path.empty() && period > 0.0)
    throw ndiv::spec_error("--spec and --period/--width are mutually exclusive");
  ndiv::SupportSpec spec = period > 0.0
                               ? ndiv::SupportSpec::periodic(period, width)
                               : ndiv::support_from_json(json::parse(ndiv::read_text_file(spec_path)));
  ndiv::ConstructionParams params;
  if (!params_path.empty())
    params = ndiv::params_from_json(json::parse(ndiv::read_text_file(params_path)));
  const ndiv::BranchFunction f = ndiv::construct_f(spec, c.n, params);

  json report;
  report["command"] = "construct";
  report["ok"] = true;
  report["n"] = c.n;
  report["sigma"] = ndiv::sigma_of(spec);
  report["f0"] = f.value_at_zero();
  report["components"] = spec.infinite() ? json("inf") : json(spec.component_count());
  json files = json::array();
  const std::string text = dump_json(ndiv::function_to_json(f));
  if (c.out.empty()) {
    report["function"] = ndiv::function_to_json(f);
  } else {
    ndiv::write_text_file(c.out, text);
    files.push_back(file_entry(c.out, text));
  }
  if (!generator_out.empty()) {
    const std::string gtext = dump_json(ndiv::function_to_json(ndiv::build_generator(spec, params)));
    ndiv::write_text_file(generator_out, gtext);
    files.push_back(file_entry(generator_out, gtext));
  }
  report["files"] = files;
  emit_report(report);
  return 0;
}

int cmd_example(const CommonOpts& c, const std::string& which, double a) {
  const ndiv::BranchFunction f = which == "f1" ? ndiv::example_f1(c.n) : ndiv::example_f2(c.n, a);
  json report;
  report["command"] = "example";
  report["ok"] = true;
  report["which"] = which;
  report["n"] = c.n;
  report["f0"] = f.value_at_zero();
  report["components"] = f.spec().component_count();
  json files = json::array();
  const std::string text = dump_json(ndiv::function_to_json(f));
  if (c.out.empty()) {
    report["function"] = ndiv::function_to_json(f);
  } else {
    ndiv::write_text_file(c.out, text);
    files.push_back(file_entry(c.out, text));
  }
  report["files"] = files;
  emit_report(report);
  return 0;
}

int cmd_roots(const CommonOpts& c, const std::string& input, const std::string& emit_dir) {
  const ndiv::BranchFunction f = load_function(input);
  ndiv::RootOptions opts;
  opts.cap = c.cap;
  opts.tol = c.tol;
  opts.seed = c.seed;
  opts.grid_step = c.grid_step;
  opts.t_max = c.t_max;
  const ndiv::RootSet rs = ndiv::enumerate_roots(f, c.n, opts);
  const json rj = ndiv::rootset_to_json(rs);

  json report;
  report["command"] = "roots";
  report["ok"] = true;
  report["report"] = rj;
  report["distinct"] = ndiv::distinct_count(rs);
  json files = json::array();
  if (!c.out.empty()) {
    const std::string text = dump_json(rj);
    ndiv::write_text_file(c.out, text);
    files.push_back(file_entry(c.out, text));
  }
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      const std::string path = emit_dir + "/root_" + std::to_string(i) + ".json";
      const std::string text = dump_json(ndiv::function_to_json(rs.roots[i].g));
      ndiv::write_text_file(path, text);
      files.push_back(file_entry(path, text));
    }
  }
  report["files"] = files;
  emit_report(report);
  return 0;
}

int cmd_verify(const CommonOpts& c, const std::string& g_path, const std::string& f_path,
               int trials, int gram_points, double gram_range) {
  const ndiv::BranchFunction g = load_function(g_path);
  const ndiv::BranchFunction f = load_function(f_path);
  const bool residual_ok = ndiv::verify_root(g, f, c.n, c.tol);
  const std::vector<double> grid = ndiv::union_grid(f, g);
  const ndiv::GridPoint worst = ndiv::max_pow_residual(g, f, c.n, grid);
  const ndiv::PsdVerdict pd = pd_verdict(g, c, trials, gram_points, gram_range);
  const bool ok = residual_ok && pd.passed;

  json report;
  report["command"] = "verify";
  report["ok"] = ok;
  report["n"] = c.n;
  report["residual"] = worst.value;
  report["residual_at"] = worst.at;
  report["residual_tol"] = c.tol * std::max(1.0, f.value_at_zero());
  report["residual_ok"] = residual_ok;
  report["pd"] = ndiv::verdict_to_json(pd);
  emit_report(report);
  return ok ? 0 : 3;
}

int cmd_check(const CommonOpts& c, const std::string& input, const std::string& mode, int trials,
              int gram_points, double gram_range, const std::string& spectrum_path) {
  const ndiv::BranchFunction f = load_function(input);
  const bool spectral = f.power() == 1 && f.exact_phases();
  const bool run_bochner = mode == "bochner" || mode == "both" || (mode == "auto" && spectral);
  const bool run_gram = mode == "gram" || mode == "both" || (mode == "auto" && !spectral);

  json modes;
  bool pass = true;
  if (run_bochner) {
    const ndiv::CosineSpectrum s = ndiv::spectrum_of(f);  // throws when not applicable
    const double step = c.grid_step > 0.0 ? c.grid_step : ndiv::default_bochner_step(s);
    const double tmax = c.t_max > 0.0 ? c.t_max : ndiv::default_bochner_tmax(s);
    const ndiv::PsdVerdict v = ndiv::bochner_check(s, step, tmax);
    modes["bochner"] = ndiv::verdict_to_json(v);
    pass = pass && v.passed;
    if (!spectrum_path.empty()) {
      std::ostringstream csv;
      ndiv::write_spectrum_csv(csv, s, 0.0, tmax, step);
      ndiv::write_text_file(spectrum_path, csv.str());
    }
  } else if (!spectrum_path.empty()) {
    throw ndiv::spec_error("spectrum CSV requires the bochner route");
  }
  if (run_gram) {
    std::mt19937 rng(c.seed);
    const double range = gram_range > 0.0 ? gram_range : gram_range_for(f);
    const ndiv::PsdVerdict v = ndiv::gram_psd_search(f, rng, trials, gram_points, -range, range);
    modes["gram"] = ndiv::verdict_to_json(v);
    pass = pass && v.passed;
  }

  json report;
  report["command"] = "check";
  report["ok"] = pass;
  report["modes"] = modes;
  json files = json::array();
  if (!spectrum_path.empty()) files.push_back(json{{"path", spectrum_path}});
  report["files"] = files;
  emit_report(report);
  return pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, check, and enumerate n-th roots of compactly supported "
               "positive definite functions"};
  app.require_subcommand(1);

  CommonOpts c;
  std::string spec_path, params_path, generator_out;
  double period = 0.0, width = 0.0;
  std::string input, emit_dir, g_path, f_path;
  std::string which, mode = "auto", spectrum_path;
  double a = 16.0, gram_range = 0.0;
  int trials = 100, gram_points = 12;

  auto add_common = [&c](CLI::App* sub, bool needs_n) {
    sub->add_option("--n", c.n, "divisibility order")->required(needs_n);
    sub->add_option("--seed", c.seed, "rng seed for Gram point sets");
    sub->add_option("--tol", c.tol, "residual tolerance (relative to max(1, f(0)))");
    sub->add_option("--grid-step", c.grid_step, "bracket scan step (0 = automatic)");
    sub->add_option("--t-max", c.t_max, "bracket scan end (0 = automatic)");
    sub->add_option("--out", c.out, "output file");
  };

  CLI::App* sc = app.add_subcommand("construct", "build f = u^n over a support spec");
  add_common(sc, true);
  sc->add_option("--spec", spec_path, "support spec JSON file");
  sc->add_option("--period", period, "periodic support: component period");
  sc->add_option("--width", width, "periodic support: component width");
  sc->add_option("--params", params_path, "construction params JSON file");
  sc->add_option("--generator-out", generator_out, "also write the generator u");

  CLI::App* se = app.add_subcommand("example", "build a reference instance (f1 or f2)");
  se->add_option("which", which, "f1 or f2")->required()->check(CLI::IsMember({"f1", "f2"}));
  add_common(se, true);
  se->add_option("--a", a, "left end of the unbounded component (f2)");

  CLI::App* sr = app.add_subcommand("roots", "enumerate and verify the n-th roots of f");
  sr->add_option("input", input, "function JSON file")->required();
  add_common(sr, true);
  sr->add_option("--cap", c.cap, "enumeration budget");
  sr->add_option("--emit-roots", emit_dir, "directory for root function files");

  CLI::App* sv = app.add_subcommand("verify", "check that g^n = f and g is positive definite");
  sv->add_option("g", g_path, "candidate root JSON file")->required();
  sv->add_option("f", f_path, "target function JSON file")->required();
  add_common(sv, true);
  sv->add_option("--trials", trials, "Gram point sets to try");
  sv->add_option("--gram-points", gram_points, "max points per Gram set");
  sv->add_option("--gram-range", gram_range, "Gram points drawn from [-range, range]");

  CLI::App* sk = app.add_subcommand("check", "positive-definiteness verdict for a function");
  sk->add_option("input", input, "function JSON file")->required();
  add_common(sk, false);
  sk->add_option("--mode", mode, "auto | bochner | gram | both")
      ->check(CLI::IsMember({"auto", "bochner", "gram", "both"}));
  sk->add_option("--trials", trials, "Gram point sets to try");
  sk->add_option("--gram-points", gram_points, "max points per Gram set");
  sk->add_option("--gram-range", gram_range, "Gram points drawn from [-range, range]");
  sk->add_option("--spectrum", spectrum_path, "write the sampled spectrum as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*sc) return cmd_construct(c, spec_path, params_path, period, width, generator_out);
    if (*se) return cmd_example(c, which, a);
    if (*sr) return cmd_roots(c, input, emit_dir);
    if (*sv) return cmd_verify(c, g_path, f_path, trials, gram_points, gram_range);
    if (*sk) return cmd_check(c, input, mode, trials, gram_points, gram_range, spectrum_path);
    return 2;
  } catch (const ndiv::cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ndiv::spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

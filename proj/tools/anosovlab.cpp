#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "anosov/ball.hpp"
#include "anosov/errors.hpp"
#include "anosov/io.hpp"
#include "anosov/lab.hpp"
#include "anosov/scenario.hpp"
#include "anosov/suspension.hpp"

namespace {

using namespace anosov;

struct Common {
  std::string scenario_path;
  int radius = 6;
  int threads = 1;
  double band = kDefaultBand;
  bool no_dedup = false;
  std::string out_path;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--scenario", c.scenario_path, "scenario JSON file")->required();
  cmd->add_option("--radius", c.radius, "word-ball radius");
  cmd->add_option("--threads", c.threads, "worker threads (results do not depend on this)");
  cmd->add_option("--band", c.band, "indeterminacy half-width around thresholds");
  cmd->add_flag("--no-dedup", c.no_dedup, "enumerate all words, not one per conjugacy class");
  cmd->add_option("--out", c.out_path, "write the report to this file as well");
}

BallIndex make_ball(const Scenario& s, const Common& c) {
  BallOptions opts;
  opts.dedup = !c.no_dedup;
  return enumerate_ball(s.presentation, c.radius, opts);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file: " + path);
  return out;
}

template <class WriteFn>
void emit(const Common& c, WriteFn&& write) {
  write(std::cout);
  if (!c.out_path.empty()) {
    std::ofstream f = open_out(c.out_path);
    write(f);
  }
}

const RealCharacter& need_phi(const Scenario& s) {
  if (!s.phi) throw ValidationError("this command needs characters.phi in the scenario");
  return *s.phi;
}

Suspension need_suspension(const Scenario& s, double t_scale) {
  if (!s.suspension)
    throw ValidationError("this command needs a suspension block in the scenario");
  SuspensionSpec spec = *s.suspension;
  if (t_scale != 1.0) spec.phi = spec.phi.scaled(t_scale);
  return build_suspension(spec);
}

int run_validate(const Common& c) {
  Scenario s = load_scenario(c.scenario_path);
  ValidationReport r = rep_validate(s.rep);
  if (s.suspension) {
    try {
      build_suspension(*s.suspension);
    } catch (const ValidationError& e) {
      r.ok = false;
      r.problems.push_back(e.what());
    }
  }
  emit(c, [&](std::ostream& os) { write_validation_text(os, r); });
  return r.ok ? 0 : 2;
}

int run_spectrum(const Common& c, const std::string& word_text) {
  Scenario s = load_scenario(c.scenario_path);
  Word w = Word::parse(word_text);
  SpectrumMag sp = s.rep.word_spectrum(w);
  emit(c, [&](std::ostream& os) { write_spectrum_text(os, w.render(), sp); });
  return 0;
}

int run_suspend(const Common& c, double t_scale, int pairs, unsigned seed) {
  Scenario s = load_scenario(c.scenario_path);
  Suspension sus = need_suspension(s, t_scale);
  auto sample = cocycle_sample_pairs(s.presentation, pairs, seed);
  double residual =
      cocycle_residual(sus, [&](const Word& w) { return sus.kappa_of(w); }, sample);
  ValidationReport r = rep_validate(sus.rho());
  emit(c, [&](std::ostream& os) {
    os << "p=" << sus.p() << "\n";
    os << "q=" << sus.q() << "\n";
    os << "dim=" << sus.dim() << "\n";
    os << "ok=" << (r.ok ? 1 : 0) << "\n";
    os << "max_det_deviation=" << format_double(r.max_det_deviation) << "\n";
    os << "max_relator_residual=" << format_double(r.max_relator_residual) << "\n";
    os << "cocycle_pairs=" << pairs << "\n";
    os << "cocycle_residual=" << format_double(residual) << "\n";
  });
  return r.ok ? 0 : 2;
}

int run_generality(const Common& c, double t_scale) {
  Scenario s = load_scenario(c.scenario_path);
  Suspension sus = need_suspension(s, t_scale);
  BallIndex ball = make_ball(s, c);
  GeneralityReport g = generality_check(sus, ball, c.threads);
  emit(c, [&](std::ostream& os) {
    os << "radius=" << ball.radius << "\n";
    os << "classes=" << ball.entries.size() << "\n";
    os << "max_rel_deviation=" << format_double(g.max_rel_deviation) << "\n";
    os << "witness=" << g.witness << "\n";
  });
  return 0;
}

int run_gaps(const Common& c, int k, double t_scale, double cutoff) {
  Scenario s = load_scenario(c.scenario_path);
  BallIndex ball = make_ball(s, c);
  Representation rho = s.suspension ? need_suspension(s, t_scale).rho() : s.rep;
  GapSeries series = gap_series(rho, k, ball, c.threads);
  SlopeFit fit = growth_slope(series, cutoff);
  emit(c, [&](std::ostream& os) { write_gap_csv(os, series, &fit); });
  return 0;
}

int run_domain(const Common& c, int p, int k, double t_scale) {
  Scenario s = load_scenario(c.scenario_path);
  BallIndex ball = make_ball(s, c);
  RealCharacter phi = need_phi(s).scaled(t_scale);
  DomainEstimate e = membership(s.domain_source(), p, k, phi, ball, c.band, c.threads);
  emit(c, [&](std::ostream& os) { write_membership_text(os, e); });
  return e.verdict == Verdict::indeterminate ? 1 : 0;
}

int run_slice(const Common& c, int p, int k, int angles, const std::string& svg_path) {
  Scenario s = load_scenario(c.scenario_path);
  if (!s.psi1 || !s.psi2)
    throw ValidationError("slice needs characters.psi1 and characters.psi2");
  BallIndex ball = make_ball(s, c);
  SliceResult slice =
      slice_domain(s.domain_source(), p, k, *s.psi1, *s.psi2, angles, ball, c.threads);
  emit(c, [&](std::ostream& os) { write_slice_csv(os, slice); });
  if (!svg_path.empty()) {
    std::ofstream f = open_out(svg_path);
    write_slice_svg(f, slice);
  }
  return 0;
}

int run_sweep(const Common& c, int steps, double tmax_factor) {
  Scenario s = load_scenario(c.scenario_path);
  if (!s.composed)
    throw ValidationError("sweep needs a sym_power representation (fuchsian route)");
  if (steps < 2) throw ValidationError("sweep needs at least two grid points");
  if (!(tmax_factor > 0.0)) throw ValidationError("sweep factor must be positive");
  BallIndex ball = make_ball(s, c);
  DomainSource src = DomainSource::fuchsian(*s.composed);
  CriterionValue cv = criterion_inf(src, 1, need_phi(s), ball, c.threads);
  std::vector<double> grid(steps);
  for (int j = 0; j < steps; ++j)
    grid[j] = tmax_factor * cv.value * j / (steps - 1);
  SweepResult sw = deformation_sweep(*s.composed, need_phi(s), grid, ball, c.band,
                                     c.threads);
  emit(c, [&](std::ostream& os) { write_sweep_csv(os, sw); });
  return sw.pattern_consistent ? 0 : 1;
}

int run_nesting(const Common& c, int pmax, int qmax, int rays) {
  Scenario s = load_scenario(c.scenario_path);
  const Representation* base = nullptr;
  if (s.composed) base = &s.composed->base;
  else if (s.rep.dim() == 2) base = &s.rep;
  else throw ValidationError("nesting needs a 2-dimensional base representation");
  BallIndex ball = make_ball(s, c);
  NestingReport r = nesting_check(*base, pmax, qmax, ball, rays, c.threads);
  emit(c, [&](std::ostream& os) { write_nesting_text(os, r); });
  return (r.thresholds_ok && r.radii_ok) ? 0 : 1;
}

int run_bounds(const Common& c, int p, int k, int dirs, unsigned seed) {
  Scenario s = load_scenario(c.scenario_path);
  BallIndex ball = make_ball(s, c);
  DomainSource src = s.domain_source();
  BoundsReport r =
      ball_bounds_check(src, p, k, ball, dirs, seed, c.band, 0.95, 1.05, c.threads);
  emit(c, [&](std::ostream& os) {
    write_bounds_csv(os, r, p, src.q(), k, ball.radius);
  });
  return r.all_ok ? 0 : 1;
}

int run_sandwich(const Common& c, int p, int k, bool symmetric, double t_scale) {
  Scenario s = load_scenario(c.scenario_path);
  BallIndex ball = make_ball(s, c);
  RealCharacter phi = need_phi(s).scaled(t_scale);
  SandwichOptions opts;
  SandwichReport r = symmetric
                         ? symmetric_sandwich_check(s.rep, p, k, phi, ball, opts, c.threads)
                         : sandwich_check(s.rep, p, k, phi, ball, opts, c.threads);
  emit(c, [&](std::ostream& os) { write_sandwich_csv(os, r, ball.radius); });
  return r.all_pass ? 0 : 1;
}

int run_qie(const Common& c, double t_scale) {
  Scenario s = load_scenario(c.scenario_path);
  Suspension sus = need_suspension(s, t_scale);
  BallIndex ball = make_ball(s, c);
  QieReport r = qie_slope_check(sus, ball, c.threads);
  emit(c, [&](std::ostream& os) { write_qie_text(os, r, sus.q(), ball.radius); });
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "anosovlab: reducible suspensions of linear representations of hyperbolic "
      "groups, eigenvalue-gap certification and convex domain mapping"};
  app.require_subcommand(1);

  Common c;
  int k = 1, p = 1, angles = 64, steps = 40, pmax = 10, qmax = 10, rays = 8;
  int dirs = 50, pairs = 200;
  unsigned seed = 20240601u;
  double t_scale = 1.0, cutoff = 0.5, tmax_factor = 3.0;
  std::string word_text, svg_path;
  bool symmetric = false;

  CLI::App* validate = app.add_subcommand("validate", "check the scenario's representation and suspension");
  add_common(validate, c);

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalue magnitudes of one word image");
  add_common(spectrum, c);
  spectrum->add_option("--word", word_text, "word in letters a..z / A..Z")->required();

  CLI::App* suspend = app.add_subcommand("suspend", "build the suspension and test the cocycle rule");
  add_common(suspend, c);
  suspend->add_option("--t", t_scale, "scale factor applied to phi");
  suspend->add_option("--pairs", pairs, "sampled word pairs for the cocycle test");
  suspend->add_option("--seed", seed, "sample seed");

  CLI::App* generality = app.add_subcommand("generality", "compare suspension spectra against the plain reference");
  add_common(generality, c);
  generality->add_option("--t", t_scale, "scale factor applied to phi");

  CLI::App* gaps = app.add_subcommand("gaps", "eigenvalue gap growth over the ball");
  add_common(gaps, c);
  gaps->add_option("--k", k, "gap index")->required();
  gaps->add_option("--t", t_scale, "scale factor applied to phi");
  gaps->add_option("--cutoff", cutoff, "slope cutoff as a fraction of the radius");

  CLI::App* domain = app.add_subcommand("domain", "membership of phi in the convexity domain");
  add_common(domain, c);
  domain->add_option("--p", p, "upper block dimension")->required();
  domain->add_option("--k", k, "level")->required();
  domain->add_option("--t", t_scale, "scale factor applied to phi");

  CLI::App* slice = app.add_subcommand("slice", "polar boundary of a 2-plane domain slice");
  add_common(slice, c);
  slice->add_option("--p", p, "upper block dimension")->required();
  slice->add_option("--k", k, "level")->required();
  slice->add_option("--angles", angles, "number of sample angles");
  slice->add_option("--svg", svg_path, "write an SVG rendering to this file");

  CLI::App* sweep = app.add_subcommand("sweep", "membership along t*phi at p=1 for every level");
  add_common(sweep, c);
  sweep->add_option("--steps", steps, "grid points");
  sweep->add_option("--tmax-factor", tmax_factor, "grid end as a multiple of the criterion constant");

  CLI::App* nesting = app.add_subcommand("nesting", "strict domain nesting in p, q and k");
  add_common(nesting, c);
  nesting->add_option("--pmax", pmax, "largest p");
  nesting->add_option("--qmax", qmax, "largest q");
  nesting->add_option("--rays", rays, "sampled boundary rays");

  CLI::App* bounds = app.add_subcommand("bounds", "inner and outer ball bounds for the domain");
  add_common(bounds, c);
  bounds->add_option("--p", p, "upper block dimension")->required();
  bounds->add_option("--k", k, "level")->required();
  bounds->add_option("--dirs", dirs, "sampled directions");
  bounds->add_option("--seed", seed, "direction seed");

  CLI::App* sandwich = app.add_subcommand("sandwich", "two-sided eigenvalue bounds for e^{c phi}");
  add_common(sandwich, c);
  sandwich->add_option("--p", p, "upper block dimension")->required();
  sandwich->add_option("--k", k, "level")->required();
  sandwich->add_flag("--symmetric", symmetric, "use the |phi| variant");
  sandwich->add_option("--t", t_scale, "scale factor applied to phi");

  CLI::App* qie = app.add_subcommand("qie", "displacement comparison against the input");
  add_common(qie, c);
  qie->add_option("--t", t_scale, "scale factor applied to phi");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return run_validate(c);
    if (app.got_subcommand(spectrum)) return run_spectrum(c, word_text);
    if (app.got_subcommand(suspend)) return run_suspend(c, t_scale, pairs, seed);
    if (app.got_subcommand(generality)) return run_generality(c, t_scale);
    if (app.got_subcommand(gaps)) return run_gaps(c, k, t_scale, cutoff);
    if (app.got_subcommand(domain)) return run_domain(c, p, k, t_scale);
    if (app.got_subcommand(slice)) return run_slice(c, p, k, angles, svg_path);
    if (app.got_subcommand(sweep)) return run_sweep(c, steps, tmax_factor);
    if (app.got_subcommand(nesting)) return run_nesting(c, pmax, qmax, rays);
    if (app.got_subcommand(bounds)) return run_bounds(c, p, k, dirs, seed);
    if (app.got_subcommand(sandwich)) return run_sandwich(c, p, k, symmetric, t_scale);
    if (app.got_subcommand(qie)) return run_qie(c, t_scale);
  } catch (const ValidationError& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "error: limit: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "error: numeric: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "anosov/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace anosov {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void write_spectrum_text(std::ostream& os, const std::string& word,
                         const SpectrumMag& s) {
  os << "word=" << word << "\n";
  os << "dim=" << s.dim() << "\n";
  for (int k = 1; k <= s.dim(); ++k)
    os << "lambda_" << k << "=" << format_double(s.lambda(k)) << "\n";
  for (int k = 1; k < s.dim(); ++k)
    os << "gap_" << k << "=" << format_double(s.gap(k)) << "\n";
}

void write_validation_text(std::ostream& os, const ValidationReport& r) {
  os << "ok=" << (r.ok ? 1 : 0) << "\n";
  os << "max_det_deviation=" << format_double(r.max_det_deviation) << "\n";
  os << "max_relator_residual=" << format_double(r.max_relator_residual) << "\n";
  os << "problems=" << r.problems.size() << "\n";
  for (const std::string& p : r.problems) os << "problem=" << p << "\n";
}

void write_gap_csv(std::ostream& os, const GapSeries& series, const SlopeFit* fit) {
  os << "# units=nats\n";
  os << "# k=" << series.k << "\n";
  os << "# radius=" << series.radius << "\n";
  if (fit) {
    os << "# slope_a=" << format_double(fit->a) << "\n";
    os << "# offset_b=" << format_double(fit->b) << "\n";
    os << "# slope_witness=" << fit->witness << "\n";
  }
  os << "norm,gap,word\n";
  for (const GapPoint& p : series.points)
    os << p.norm << "," << format_double(p.gap) << "," << csv_field(p.word) << "\n";
}

void write_membership_text(std::ostream& os, const DomainEstimate& e) {
  os << "units=nats\n";
  os << "p=" << e.p << "\n";
  os << "q=" << e.q << "\n";
  os << "k=" << e.k << "\n";
  os << "radius=" << e.radius << "\n";
  os << "route=" << (e.fuchsian_route ? "fuchsian" : "generic") << "\n";
  os << "criterion=" << format_double(e.criterion) << "\n";
  os << "threshold=" << format_double(e.threshold) << "\n";
  os << "margin=" << format_double(e.margin) << "\n";
  os << "verdict=" << to_string(e.verdict) << "\n";
  os << "witness=" << e.witness << "\n";
}

void write_slice_csv(std::ostream& os, const SliceResult& s) {
  os << "# units=nats\n";
  os << "# p=" << s.p << "\n";
  os << "# q=" << s.q << "\n";
  os << "# k=" << s.k << "\n";
  os << "# radius=" << s.radius << "\n";
  os << "# route=" << (s.fuchsian_route ? "fuchsian" : "generic") << "\n";
  os << "theta,radius,degenerate\n";
  for (const SliceAngle& a : s.rows)
    os << format_double(a.theta) << "," << format_double(a.radius) << ","
       << (a.degenerate ? 1 : 0) << "\n";
}

void write_slice_svg(std::ostream& os, const SliceResult& s) {
  double rmax = 0.0;
  for (const SliceAngle& a : s.rows)
    if (!a.degenerate && std::isfinite(a.radius)) rmax = std::max(rmax, a.radius);
  const double scale = rmax > 0.0 ? 1.0 / rmax : 1.0;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.2 -1.2 2.4 2.4\">\n";
  os << "  <line x1=\"-1.1\" y1=\"0\" x2=\"1.1\" y2=\"0\" stroke=\"#cccccc\" "
        "stroke-width=\"0.01\"/>\n";
  os << "  <line x1=\"0\" y1=\"-1.1\" x2=\"0\" y2=\"1.1\" stroke=\"#cccccc\" "
        "stroke-width=\"0.01\"/>\n";
  os << "  <polygon fill=\"none\" stroke=\"#000000\" stroke-width=\"0.015\" points=\"";
  bool first = true;
  for (const SliceAngle& a : s.rows) {
    if (a.degenerate || !std::isfinite(a.radius)) continue;
    double x = scale * a.radius * std::cos(a.theta);
    double y = -scale * a.radius * std::sin(a.theta);
    if (!first) os << " ";
    first = false;
    os << format_double(x) << "," << format_double(y);
  }
  os << "\"/>\n";
  os << "</svg>\n";
}

void write_sweep_csv(std::ostream& os, const SweepResult& s) {
  os << "# units=nats\n";
  // The transition scales below treat the translation length of a class as
  // log lambda_1 of its image, not the hyperbolic 2*log lambda_1.
  os << "# translation_length=log_lambda_1\n";
  os << "# d=" << s.d << "\n";
  os << "# p=" << s.p << "\n";
  os << "# q=" << s.q << "\n";
  os << "# c=" << format_double(s.c) << "\n";
  for (std::size_t k = 0; k < s.transitions.size(); ++k)
    os << "# transition_k" << (k + 1) << "=" << format_double(s.transitions[k])
       << "\n";
  os << "# pattern_consistent=" << (s.pattern_consistent ? 1 : 0) << "\n";
  os << "t,k,threshold,margin,verdict\n";
  for (const SweepRow& row : s.rows)
    os << format_double(row.t) << "," << row.k << ","
       << format_double(row.threshold) << "," << format_double(row.margin) << ","
       << to_string(row.verdict) << "\n";
}

void write_bounds_csv(std::ostream& os, const BoundsReport& r, int p, int q, int k,
                      int radius) {
  os << "# units=nats\n";
  os << "# p=" << p << "\n";
  os << "# q=" << q << "\n";
  os << "# k=" << k << "\n";
  os << "# radius=" << radius << "\n";
  os << "# s_k=" << format_double(r.s_k) << "\n";
  os << "# r_in=" << format_double(r.r_in) << "\n";
  os << "# r_out=" << format_double(r.r_out) << "\n";
  os << "# inner_factor=" << format_double(r.inner_factor) << "\n";
  os << "# outer_factor=" << format_double(r.outer_factor) << "\n";
  os << "# all_ok=" << (r.all_ok ? 1 : 0) << "\n";
  std::size_t rank = r.rows.empty() ? 0 : r.rows.front().direction.size();
  os << "dir";
  for (std::size_t g = 0; g < rank; ++g) os << ",u" << g;
  os << ",inner,outer,ok\n";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const BoundsRow& row = r.rows[i];
    os << i;
    for (double v : row.direction) os << "," << format_double(v);
    os << "," << to_string(row.inner) << "," << to_string(row.outer) << ","
       << (row.ok ? 1 : 0) << "\n";
  }
}

void write_nesting_text(std::ostream& os, const NestingReport& r) {
  os << "comparisons=" << r.comparisons << "\n";
  os << "ray_checks=" << r.ray_checks << "\n";
  os << "thresholds_ok=" << (r.thresholds_ok ? 1 : 0) << "\n";
  os << "radii_ok=" << (r.radii_ok ? 1 : 0) << "\n";
  os << "violations=" << r.violations.size() << "\n";
  for (const std::string& v : r.violations) os << "violation=" << v << "\n";
}

void write_sandwich_csv(std::ostream& os, const SandwichReport& r, int radius) {
  os << "# units=nats\n";
  os << "# variant=" << (r.symmetric_variant ? "symmetric" : "plain") << "\n";
  os << "# p=" << r.p << "\n";
  os << "# q=" << r.q << "\n";
  os << "# k=" << r.k << "\n";
  os << "# radius=" << radius << "\n";
  os << "# all_pass=" << (r.all_pass ? 1 : 0) << "\n";
  os << "# all_strict=" << (r.all_strict ? 1 : 0) << "\n";
  os << "word,norm,phi,lam_k,lam_qk1,exp_term,pass,strict\n";
  for (const SandwichRow& row : r.rows)
    os << csv_field(row.word) << "," << row.norm << "," << format_double(row.phi)
       << "," << format_double(row.lam_k) << "," << format_double(row.lam_qk1)
       << "," << format_double(row.exp_term) << "," << (row.pass ? 1 : 0) << ","
       << (row.strict ? 1 : 0) << "\n";
}

void write_qie_text(std::ostream& os, const QieReport& r, int q, int radius) {
  os << "q=" << q << "\n";
  os << "radius=" << radius << "\n";
  os << "ok=" << (r.ok ? 1 : 0) << "\n";
  os << "min_margin=" << format_double(r.min_margin) << "\n";
  os << "witness=" << r.witness << "\n";
}

}  // namespace anosov

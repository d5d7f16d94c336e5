#pragma once

#include <iosfwd>
#include <string>

#include "anosov/lab.hpp"
#include "anosov/representation.hpp"
#include "anosov/suspension.hpp"

namespace anosov {

// All writers format floating-point values with %.17g (round-trip exact) and
// never consult locale, so equal inputs produce byte-identical files.
std::string format_double(double v);
std::string csv_field(const std::string& s);

void write_spectrum_text(std::ostream& os, const std::string& word,
                         const SpectrumMag& s);

void write_validation_text(std::ostream& os, const ValidationReport& r);

void write_gap_csv(std::ostream& os, const GapSeries& series, const SlopeFit* fit);

void write_membership_text(std::ostream& os, const DomainEstimate& e);

void write_slice_csv(std::ostream& os, const SliceResult& s);
void write_slice_svg(std::ostream& os, const SliceResult& s);

void write_sweep_csv(std::ostream& os, const SweepResult& s);

void write_bounds_csv(std::ostream& os, const BoundsReport& r, int p, int q, int k,
                      int radius);

void write_nesting_text(std::ostream& os, const NestingReport& r);

void write_sandwich_csv(std::ostream& os, const SandwichReport& r, int radius);

void write_qie_text(std::ostream& os, const QieReport& r, int q, int radius);

}  // namespace anosov

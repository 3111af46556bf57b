#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "volterra/sampled.hpp"

namespace volterra {

/// Table read from CSV: either `x,value` or `x,re,im` columns.
using SampledTable = std::variant<RealSamples, ComplexSamples>;

/// Parses a CSV with an optional header line. The x column must start at 0
/// and be uniform; throws UsageError otherwise.
SampledTable read_samples(std::istream& in);
SampledTable read_samples_file(const std::string& path);

/// Writes `x,value` (or `x,re,im`) with 17 significant digits and LF endings.
void write_samples(std::ostream& out, const RealSamples& g);
void write_samples(std::ostream& out, const ComplexSamples& g);

/// `%.17g`, the shortest format that round-trips every double.
std::string format_double(double v);

} // namespace volterra

#pragma once

#include <iosfwd>
#include <string>

#include "gsk/transforms.hpp"

namespace gsk {

// One sample per line: "re" or "re,im". Lines starting with '#' carry metadata
// (`# dt=<x>`, `# t0=<x>`) or are ignored. Throws ParseError with a 1-based line number.
Signal1D read_signal(std::istream& in);
Signal1D read_signal_file(const std::string& path);

void write_signal(std::ostream& out, const Signal1D& s);

// "# axis1=<name>:v,v,...", "# axis2=<name>:...", then one line per row of re,im pairs.
void write_coefficients(std::ostream& out, const CoefficientGrid& g);
void write_coefficients_file(const std::string& path, const CoefficientGrid& g);

// %.17g
std::string fmt17(double x);

}  // namespace gsk

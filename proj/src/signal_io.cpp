#include "gsk/signal_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "gsk/error.hpp"

namespace gsk {

namespace {

std::string trim(const std::string& s) {
  auto lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return {};
  auto hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

double parse_number(const std::string& text, std::size_t line) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError(line, "missing number");
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
    throw ParseError(line, "bad number '" + t + "'");
  return v;
}

}  // namespace

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Signal1D read_signal(std::istream& in) {
  Signal1D s;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string t = trim(raw);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string body = trim(t.substr(1));
      auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      std::string key = trim(body.substr(0, eq));
      if (key == "dt") {
        s.dt = parse_number(body.substr(eq + 1), line);
        if (!(s.dt > 0.0)) throw ParseError(line, "dt must be positive");
      } else if (key == "t0") {
        s.t0 = parse_number(body.substr(eq + 1), line);
      }
      continue;
    }
    auto comma = t.find(',');
    if (comma == std::string::npos) {
      s.samples.emplace_back(parse_number(t, line), 0.0);
    } else {
      if (t.find(',', comma + 1) != std::string::npos) throw ParseError(line, "expected 're' or 're,im'");
      s.samples.emplace_back(parse_number(t.substr(0, comma), line), parse_number(t.substr(comma + 1), line));
    }
  }
  if (s.samples.empty()) throw ParseError(line == 0 ? 1 : line, "no samples");
  if (s.samples.size() < 2) throw ParseError(line, "need at least 2 samples");
  return s;
}

Signal1D read_signal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_signal(in);
}

void write_signal(std::ostream& out, const Signal1D& s) {
  out << "# dt=" << fmt17(s.dt) << "\n# t0=" << fmt17(s.t0) << "\n";
  for (const auto& z : s.samples) out << fmt17(z.real()) << ',' << fmt17(z.imag()) << '\n';
}

void write_coefficients(std::ostream& out, const CoefficientGrid& g) {
  auto axis = [&](const char* key, const std::string& name, const std::vector<double>& v) {
    out << "# " << key << '=' << name << ':';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << fmt17(v[i]);
    out << '\n';
  };
  axis("axis1", g.axis1_name, g.axis1);
  axis("axis2", g.axis2_name, g.axis2);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const auto& z = g.at(i, j);
      out << (j ? "," : "") << fmt17(z.real()) << ',' << fmt17(z.imag());
    }
    out << '\n';
  }
}

void write_coefficients_file(const std::string& path, const CoefficientGrid& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Domain, "cannot write " + path);
  write_coefficients(out, g);
}

}  // namespace gsk

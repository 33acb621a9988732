#include <doctest.h>

#include <sstream>

#include "gsk/error.hpp"
#include "gsk/signal_io.hpp"

using namespace gsk;

namespace {

std::size_t parse_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_signal(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no throw");
  return 0;
}

}  // namespace

TEST_CASE("reads real and complex samples with metadata") {
  std::istringstream in("# dt=0.25\n# t0=-1\n# free comment\n1\n2.5,-1\n\n-3e-1\n");
  auto s = read_signal(in);
  CHECK(s.dt == 0.25);
  CHECK(s.t0 == -1.0);
  REQUIRE(s.size() == 3);
  CHECK(s.samples[1] == cplx(2.5, -1));
  CHECK(s.samples[2] == cplx(-0.3, 0));
}

TEST_CASE("parse errors carry the line") {
  CHECK(parse_line("") == 1);
  CHECK(parse_line("1\n2\nabc\n") == 3);
  CHECK(parse_line("1\n2,3,4\n") == 2);
  CHECK(parse_line("# dt=-1\n1\n2\n") == 1);
  CHECK(parse_line("1\n") >= 1);
  CHECK(parse_line("1\nnan\n") == 2);
  CHECK_THROWS_AS(read_signal_file("/nonexistent/dir/x.csv"), ParseError);
}

TEST_CASE("signal round trip is exact") {
  Signal1D s;
  s.dt = 0.1;
  s.t0 = 0.3;
  s.samples = {{1.0 / 3.0, 0.0}, {-2.0e-300, 1e300}, {M_PI, -M_E}};
  std::stringstream io;
  write_signal(io, s);
  auto back = read_signal(io);
  CHECK(back.dt == s.dt);
  CHECK(back.t0 == s.t0);
  CHECK(back.samples == s.samples);
}

TEST_CASE("coefficient file layout") {
  CoefficientGrid g;
  g.axis1_name = "scale";
  g.axis1 = {0.5, 1.0};
  g.axis2_name = "time";
  g.axis2 = {0.0, 0.1, 0.2};
  g.values = {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}};
  std::ostringstream out;
  write_coefficients(out, g);
  std::istringstream lines(out.str());
  std::string l;
  std::getline(lines, l);
  CHECK(l == "# axis1=scale:0.5,1");
  std::getline(lines, l);
  CHECK(l == "# axis2=time:0,0.10000000000000001,0.20000000000000001");
  std::getline(lines, l);
  CHECK(l == "1,2,3,4,5,6");
  std::getline(lines, l);
  CHECK(l == "7,8,9,10,11,12");
  CHECK(!std::getline(lines, l));
  CHECK(fmt17(0.1) == "0.10000000000000001");
}

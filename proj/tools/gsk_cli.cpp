// gsk: verify suites, transform signal files, dump orbit walks and the group atlas.
//
// exit codes: 0 ok, 1 failed checks or runtime error, 2 usage, 3 parse error,
// 4 inadmissible window for --reconstruct, 5 chart singularity

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gsk/dual_orbits.hpp"
#include "gsk/error.hpp"
#include "gsk/groups.hpp"
#include "gsk/signal_io.hpp"
#include "gsk/transforms.hpp"
#include "gsk/verify.hpp"

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kParse = 3, kInadmissible = 4, kSingular = 5 };

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::string json_out;
};

int run_verify(const VerifyOpts& o) {
  const auto& names = gsk::suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end()) {
    std::cerr << "unknown suite '" << o.suite << "' (groups|cocycles|orbits|reps|transforms|all)\n";
    return kUsage;
  }
  if (o.samples == 0) {
    std::cerr << "--samples must be >= 1\n";
    return kUsage;
  }
  auto report = gsk::run_verify({o.suite, o.seed, o.samples});
  std::cout << gsk::report_table(report);
  if (!o.json_out.empty() && !write_text(o.json_out, gsk::report_json(report))) {
    std::cerr << "cannot write " << o.json_out << "\n";
    return kFail;
  }
  return report.pass() ? kOk : kFail;
}

// ---------------------------------------------------------------------------

struct TransformOpts {
  std::string kind;
  std::string in, out;
  std::string window = "morlet";
  double omega0 = 6.0;
  double width = 0.0;  // 0: kind default
  double center = 0.0;
  std::size_t scales = 64;
  double scale_min = 0.0, scale_max = 0.0;  // 0: derived from the signal
  std::size_t hop = 1;
  std::size_t n_freq = 0;
  bool reconstruct = false;
};

gsk::WindowSpec make_window(const TransformOpts& o, const gsk::Signal1D& f) {
  if (o.window == "morlet") return gsk::WindowSpec::morlet(o.omega0);
  if (o.window == "mexican-hat") return gsk::WindowSpec::mexican_hat();
  if (o.window == "gaussian") {
    double w = o.width > 0.0 ? o.width : f.period() / 16.0;
    return gsk::WindowSpec::gaussian(w, o.center);
  }
  throw gsk::Error(gsk::ErrorCode::Domain, "unknown window '" + o.window + "'");
}

int run_transform(const TransformOpts& o) {
  gsk::Signal1D f;
  try {
    f = gsk::read_signal_file(o.in);
  } catch (const gsk::ParseError& e) {
    std::cerr << o.in << ": " << e.what() << "\n";
    return kParse;
  }
  auto w = make_window(o, f);
  gsk::CoefficientGrid g;
  if (o.kind == "cwt") {
    double lo = o.scale_min > 0.0 ? o.scale_min : 3.0 * f.dt;
    double hi = o.scale_max > 0.0 ? o.scale_max : f.period() / 4.0;
    g = gsk::cwt(f, w, gsk::log_uniform(lo, hi, o.scales));
  } else if (o.kind == "stft") {
    g = gsk::stft(f, w, o.hop);
  } else if (o.kind == "stockwell") {
    g = gsk::stockwell(f, o.n_freq > 0 ? o.n_freq : f.size() / 2);
  } else {
    std::cerr << "unknown kind '" << o.kind << "' (cwt|stft|stockwell)\n";
    return kUsage;
  }
  if (o.reconstruct && o.kind != "cwt") {
    std::cerr << "--reconstruct needs --kind cwt\n";
    return kUsage;
  }
  gsk::write_coefficients_file(o.out, g);
  if (o.reconstruct) {
    try {
      auto back = gsk::icwt(g, w);
      std::printf("relative L2 error: %s\n", gsk::fmt17(gsk::relative_l2(back.samples, f.samples)).c_str());
    } catch (const gsk::Error& e) {
      if (e.code() != gsk::ErrorCode::Inadmissible) throw;
      std::cerr << e.what() << "\n";
      return kInadmissible;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct OrbitOpts {
  std::string group;
  std::string point;
  std::size_t steps = 100;
  std::uint64_t seed = 1;
  std::string out;
  double kappa = 0.0;
  bool has_kappa = false;
  double mass = 1.0;
  bool boosts_only = false;
};

std::vector<double> parse_point(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw gsk::Error(gsk::ErrorCode::Domain, "bad --point component '" + item + "'");
    v.push_back(x);
  }
  return v;
}

int run_orbits(const OrbitOpts& o) {
  gsk::DualGroup g;
  try {
    g = gsk::parse_dual_group(o.group);
  } catch (const gsk::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  gsk::DualPoint x{g, parse_point(o.point), o.mass};
  if (g == gsk::DualGroup::GMS && o.has_kappa) {
    if (x.coords.size() == 2) x.coords.insert(x.coords.begin(), o.kappa);
    else if (!x.coords.empty()) x.coords[0] = o.kappa;
  }
  std::size_t want = g == gsk::DualGroup::GMS ? 3 : 2;
  if (x.coords.size() != want) {
    std::cerr << "--point for " << gsk::to_string(g) << " needs " << want << " components\n";
    return kUsage;
  }
  if (o.steps == 0) {
    std::cerr << "--steps must be >= 1\n";
    return kUsage;
  }

  std::mt19937_64 rng(o.seed);
  auto label = gsk::orbit_id(x);
  bool degenerate = label.cls == gsk::OrbitClass::DEGENERATE;
  std::size_t rows = degenerate ? 1 : o.steps;
  std::string csv = "step,coord1,coord2,label\n";
  for (std::size_t i = 0; i < rows; ++i) {
    if (i > 0) {
      auto h = gsk::random_factor(g, rng, 0.5);
      if (o.boosts_only)
        for (std::size_t k = 1; k < h.h.size(); ++k) h.h[k] = 0.0;
      x = gsk::dual_act(h, x);
    }
    std::vector<double> c;
    try {
      c = gsk::to_orbit_coords(x);
    } catch (const gsk::Error& e) {
      if (e.code() != gsk::ErrorCode::SingularChart) throw;
      std::cerr << e.what() << "\n";
      return kSingular;
    }
    csv += std::to_string(i) + "," + gsk::fmt17(c[0]) + "," + gsk::fmt17(c[1]) + "," + gsk::orbit_id(x).str() + "\n";
  }
  if (o.out.empty()) {
    std::cout << csv;
  } else if (!write_text(o.out, csv)) {
    std::cerr << "cannot write " << o.out << "\n";
    return kFail;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int run_dump_atlas(const std::string& out, double mass, double p) {
  nlohmann::ordered_json j;
  j["groups"] = nlohmann::ordered_json::array();
  for (const auto& d : gsk::GroupDescriptor::bundled(mass, p)) {
    nlohmann::ordered_json e;
    e["id"] = d.tag();
    e["arity"] = d.arity();
    e["params"] = d.param_names();
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto& [k, v] : d.constants()) c[k] = v;
    e["constants"] = c;
    e["matrix_dim"] = d.matrix_dim();
    j["groups"].push_back(e);
  }
  j["embeddings"] = nlohmann::ordered_json::array();
  for (const auto& m : gsk::embedding_atlas(mass, p)) {
    j["embeddings"].push_back(
        {{"name", m.name}, {"source", m.source.tag()}, {"target", m.target.tag()}, {"note", m.note}});
  }
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else if (!write_text(out, text)) {
    std::cerr << "cannot write " << out << "\n";
    return kFail;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-theoretic signal kit"};
  app.require_subcommand(1);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", vo.suite, "groups|cocycles|orbits|reps|transforms|all");
  verify->add_option("--seed", vo.seed);
  verify->add_option("--samples", vo.samples);
  verify->add_option("--json-out", vo.json_out);

  TransformOpts to;
  auto* transform = app.add_subcommand("transform", "transform a signal file");
  transform->add_option("--kind", to.kind, "cwt|stft|stockwell")->required();
  transform->add_option("--in", to.in)->required();
  transform->add_option("--out", to.out)->required();
  transform->add_option("--window", to.window, "morlet|gaussian|mexican-hat");
  transform->add_option("--omega0", to.omega0);
  transform->add_option("--width", to.width, "gaussian width in seconds");
  transform->add_option("--center", to.center, "gaussian modulation (rad/s)");
  transform->add_option("--scales", to.scales);
  transform->add_option("--scale-min", to.scale_min);
  transform->add_option("--scale-max", to.scale_max);
  transform->add_option("--hop", to.hop);
  transform->add_option("--n-freq", to.n_freq);
  transform->add_flag("--reconstruct", to.reconstruct, "cwt round trip, prints the relative L2 error");

  OrbitOpts oo;
  auto* orbits = app.add_subcommand("orbits", "random-walk orbit trajectory as CSV");
  orbits->add_option("--group", oo.group, "gaff|gms|gs|heis")->required();
  orbits->add_option("--point", oo.point, "comma-separated dual point")->required();
  orbits->add_option("--steps", oo.steps);
  orbits->add_option("--seed", oo.seed);
  orbits->add_option("--out", oo.out);
  auto* kappa = orbits->add_option("--kappa", oo.kappa, "GMS central charge q");
  orbits->add_option("--mass", oo.mass);
  orbits->add_flag("--boosts-only", oo.boosts_only, "walk with sigma = tau = 0");

  std::string atlas_out;
  double atlas_mass = 1.0, atlas_p = 0.5;
  auto* atlas = app.add_subcommand("dump-atlas", "group descriptors and embeddings as JSON");
  atlas->add_option("--out", atlas_out);
  atlas->add_option("--mass", atlas_mass);
  atlas->add_option("--p", atlas_p);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(vo);
    if (*transform) return run_transform(to);
    if (*orbits) {
      oo.has_kappa = kappa->count() > 0;
      return run_orbits(oo);
    }
    if (*atlas) return run_dump_atlas(atlas_out, atlas_mass, atlas_p);
  } catch (const gsk::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  } catch (const gsk::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == gsk::ErrorCode::SingularChart ? kSingular : kFail;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

#include "wchain/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "wchain/errors.hpp"
#include "wchain/paths.hpp"

namespace wchain::scan {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kVisibilityTolerance = 1e-6;

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw std::invalid_argument("'" + text + "' is not an integer");
  }
  return v;
}

// Golden-section minimum of f on [a, b]; returns the smallest value seen.
template <class F>
double golden_min_value(F&& f, double a, double b) {
  constexpr double gr = 0.6180339887498949;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int k = 0; k < 200 && (b - a) > 1e-14; ++k) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return std::min({f(0.5 * (a + b)), fc, fd});
}

void put_rational(nlohmann::json& j, const char* key, const Rational& r) {
  if (r.is_integer()) {
    j[key] = r.num();
  } else {
    j[key] = r.to_double();
  }
}

}  // namespace

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round_sig12(double v) { return std::strtod(format_sig12(v).c_str(), nullptr); }

std::vector<double> uniform_grid(double min, double max, int samples) {
  if (!std::isfinite(min) || !std::isfinite(max) || min >= max) {
    throw std::invalid_argument("grid requires finite min < max");
  }
  if (samples < 2) {
    throw std::invalid_argument("grid requires at least two samples");
  }
  std::vector<double> out(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    // Endpoint interpolation keeps 0 exact on symmetric odd grids.
    const double t = static_cast<double>(i) / (samples - 1);
    out[static_cast<std::size_t>(i)] = min * (1.0 - t) + max * t;
  }
  return out;
}

double parse_kd(const std::string& text) {
  const std::string t = trimmed(text);
  double mult = 1.0;
  std::string num = t;
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    mult = kPi;
    num = trimmed(t.substr(0, t.size() - 2));
    if (num.empty()) return kPi;
  }
  char* end = nullptr;
  const double v = std::strtod(num.c_str(), &end);
  if (num.empty() || end != num.c_str() + num.size() || !std::isfinite(v)) {
    throw std::invalid_argument("cannot parse kd value '" + text + "'");
  }
  return v * mult;
}

ParsedState parse_descriptor(const std::string& descriptor) {
  const std::string d = trimmed(descriptor);
  if (d.size() < 2 || (d[0] != 'W' && d[0] != 'S') || d[1] != ':') {
    throw std::invalid_argument("state descriptor must be 'W:n_excited,n_atoms' or "
                                "'S:n_excited,n_ground', got '" + descriptor + "'");
  }
  const auto comma = d.find(',', 2);
  if (comma == std::string::npos) {
    throw std::invalid_argument("state descriptor '" + descriptor + "' lacks a comma");
  }
  const int a = parse_int(d.substr(2, comma - 2));
  const int b = parse_int(d.substr(comma + 1));
  if (d[0] == 'W') {
    const int n_excited = a;
    const int n_atoms = b;
    if (n_excited < 1 || n_excited > n_atoms) {
      throw std::invalid_argument("W descriptor requires 1 <= n_excited <= n_atoms");
    }
    std::vector<SpecTerm> terms;
    for (const auto& config : configurations_with_excitations(n_atoms, n_excited)) {
      terms.push_back({1, config});
    }
    RawStateSpec spec(std::move(terms));
    PureState state = make_from_spec(spec);
    return {std::move(spec), std::move(state),
            "W:" + std::to_string(n_excited) + "," + std::to_string(n_atoms),
            std::make_pair(n_excited, n_atoms)};
  }
  const int n_excited = a;
  const int n_ground = b;
  if (n_excited < 0 || n_ground < 0 || n_excited + n_ground < 1) {
    throw std::invalid_argument("S descriptor requires non-negative counts and one atom");
  }
  const int n = n_excited + n_ground;
  const std::uint32_t mask = (n_excited == 0) ? 0u : ((1u << n_excited) - 1u);
  RawStateSpec spec({{1, BasisConfig(mask, n)}});
  PureState state = make_from_spec(spec);
  return {std::move(spec), std::move(state),
          "S:" + std::to_string(n_excited) + "," + std::to_string(n_ground), std::nullopt};
}

ParsedState load_spec_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw std::invalid_argument("cannot open spec file: " + path);
  }
  RawStateSpec spec = RawStateSpec::parse(f);
  PureState state = make_from_spec(spec);
  std::string descriptor = spec.descriptor();
  return {std::move(spec), std::move(state), std::move(descriptor), std::nullopt};
}

ParsedState from_spec(RawStateSpec spec) {
  PureState state = make_from_spec(spec);
  std::string descriptor = spec.descriptor();
  return {std::move(spec), std::move(state), std::move(descriptor), std::nullopt};
}

ScanExtrema scan_extrema(const PureState& state, const ChainGeometry& geom, double theta_min,
                         double theta_max, int samples) {
  const auto grid = uniform_grid(theta_min, theta_max, samples);
  const auto values = intensity_profile(state, geom, grid);
  const CorrelationMatrix corr(state);
  const auto value_at = [&](double theta) {
    return intensity_from_correlations(corr, geom, DetectionDirection(theta));
  };
  const auto refine = [&](std::size_t i, int direction) {
    const double a = grid[i > 0 ? i - 1 : 0];
    const double b = grid[i + 1 < grid.size() ? i + 1 : grid.size() - 1];
    if (direction > 0) {
      return -golden_min_value([&](double th) { return -value_at(th); }, a, b);
    }
    return golden_min_value(value_at, a, b);
  };
  const std::size_t imin =
      static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  const std::size_t imax =
      static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  return {std::min(values[imin], refine(imin, -1)), std::max(values[imax], refine(imax, +1))};
}

VisibilityReport visibility_report(int n_excited, int n_atoms, const ChainGeometry& geom) {
  const double closed = w_visibility_closed(n_excited, n_atoms);
  const auto ex =
      scan_extrema(make_symmetric_w(n_excited, n_atoms), geom, 0.0, 0.5 * kPi, 10001);
  const double numeric = (ex.max - ex.min) / (ex.max + ex.min);
  return {closed, numeric, std::abs(closed - numeric) <= kVisibilityTolerance};
}

Profile make_profile(const ParsedState& st, const ChainGeometry& geom, double theta_min,
                     double theta_max, int samples) {
  if (st.state.n_atoms() != geom.n_atoms()) {
    throw std::invalid_argument("state and geometry disagree on the chain length");
  }
  Profile p;
  p.state = st.descriptor;
  p.kd = geom.kd();
  p.n_atoms = geom.n_atoms();
  p.dipole_dipole_negligible = geom.dipole_dipole_negligible();
  p.theta = uniform_grid(theta_min, theta_max, samples);
  p.intensity = intensity_profile(st.state, geom, p.theta);
  if (st.symmetric_w) {
    const auto [n_excited, n_atoms] = *st.symmetric_w;
    if (n_excited < n_atoms) {
      p.visibility = visibility_report(n_excited, n_atoms, geom);
    }
  }
  return p;
}

Contour make_contour(const ParsedState& st, double kd_min, double kd_max, int kd_samples,
                     double theta_min, double theta_max, int theta_samples) {
  Contour c;
  c.state = st.descriptor;
  c.n_atoms = st.state.n_atoms();
  c.dipole_dipole_negligible = kd_min > 1.0;
  c.kd = uniform_grid(kd_min, kd_max, kd_samples);
  c.theta = uniform_grid(theta_min, theta_max, theta_samples);
  c.intensity.reserve(c.kd.size() * c.theta.size());
  for (double kd : c.kd) {
    const ChainGeometry geom(c.n_atoms, kd);
    const auto row = intensity_profile(st.state, geom, c.theta);
    c.intensity.insert(c.intensity.end(), row.begin(), row.end());
  }
  return c;
}

void write_csv(std::ostream& os, const Profile& p) {
  os << "# state=" << p.state << " kd=" << format_sig12(p.kd) << " N=" << p.n_atoms
     << " units=single-atom\n";
  if (!p.dipole_dipole_negligible) {
    os << "# warning=kd<=1-dipole-dipole-interaction-not-negligible\n";
  }
  if (p.visibility) {
    os << "# visibility_closed=" << format_sig12(p.visibility->closed_form)
       << " visibility_numeric=" << format_sig12(p.visibility->numeric)
       << " visibility_match=" << (p.visibility->match ? "yes" : "no") << "\n";
  }
  os << "theta,intensity\n";
  for (std::size_t i = 0; i < p.theta.size(); ++i) {
    os << format_sig12(p.theta[i]) << ',' << format_sig12(p.intensity[i]) << '\n';
  }
}

void write_json(std::ostream& os, const Profile& p) {
  nlohmann::json meta;
  meta["state"] = p.state;
  meta["kd"] = round_sig12(p.kd);
  meta["n_atoms"] = p.n_atoms;
  meta["units"] = "single-atom";
  meta["dipole_dipole_negligible"] = p.dipole_dipole_negligible;
  if (p.visibility) {
    meta["visibility"] = {{"closed", round_sig12(p.visibility->closed_form)},
                          {"numeric", round_sig12(p.visibility->numeric)},
                          {"match", p.visibility->match}};
  }
  nlohmann::json j;
  j["metadata"] = meta;
  auto& theta = j["theta"] = nlohmann::json::array();
  auto& intensity = j["intensity"] = nlohmann::json::array();
  for (std::size_t i = 0; i < p.theta.size(); ++i) {
    theta.push_back(round_sig12(p.theta[i]));
    intensity.push_back(round_sig12(p.intensity[i]));
  }
  os << j.dump(2) << '\n';
}

void write_csv(std::ostream& os, const Contour& c) {
  os << "# state=" << c.state << " N=" << c.n_atoms << " units=single-atom\n";
  os << "# grid kd_min=" << format_sig12(c.kd.front()) << " kd_max=" << format_sig12(c.kd.back())
     << " kd_steps=" << c.kd.size() << " theta_min=" << format_sig12(c.theta.front())
     << " theta_max=" << format_sig12(c.theta.back()) << " theta_steps=" << c.theta.size()
     << "\n";
  if (!c.dipole_dipole_negligible) {
    os << "# warning=kd<=1-dipole-dipole-interaction-not-negligible\n";
  }
  os << "kd,theta,intensity\n";
  for (std::size_t a = 0; a < c.kd.size(); ++a) {
    for (std::size_t b = 0; b < c.theta.size(); ++b) {
      os << format_sig12(c.kd[a]) << ',' << format_sig12(c.theta[b]) << ','
         << format_sig12(c.intensity[a * c.theta.size() + b]) << '\n';
    }
  }
}

void write_json(std::ostream& os, const Contour& c) {
  nlohmann::json j;
  j["metadata"] = {{"state", c.state},
                   {"n_atoms", c.n_atoms},
                   {"units", "single-atom"},
                   {"dipole_dipole_negligible", c.dipole_dipole_negligible}};
  auto& kd = j["kd"] = nlohmann::json::array();
  for (double v : c.kd) kd.push_back(round_sig12(v));
  auto& theta = j["theta"] = nlohmann::json::array();
  for (double v : c.theta) theta.push_back(round_sig12(v));
  auto& intensity = j["intensity"] = nlohmann::json::array();
  for (std::size_t a = 0; a < c.kd.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t b = 0; b < c.theta.size(); ++b) {
      row.push_back(round_sig12(c.intensity[a * c.theta.size() + b]));
    }
    intensity.push_back(std::move(row));
  }
  os << j.dump(2) << '\n';
}

std::string ledger_report_json(const ParsedState& st) {
  const PathLedger ledger = build_ledger(st.spec);
  nlohmann::json j;
  j["state"] = st.descriptor;
  put_rational(j, "offset", ledger.offset);
  put_rational(j, "qp_c", ledger.qp_constructive);
  j["f_c"] = ledger.f_constructive;
  put_rational(j, "qp_d", ledger.qp_destructive);
  j["f_d"] = ledger.f_destructive;
  j["norm_sq_num"] = ledger.norm_sq.num();
  j["norm_sq_den"] = ledger.norm_sq.den();
  put_rational(j, "extremum", ledger_extremum(ledger));
  j["path_count"] = ledger.path_count;
  j["final_state_count"] = ledger.final_state_count;
  j["residual_final_states"] = ledger.residual_final_states;
  // Independent check: kd drops out at theta = 0, any positive value works.
  const double theta0 =
      intensity(st.state, ChainGeometry(st.state.n_atoms(), kPi), DetectionDirection(0.0));
  j["theta0_intensity"] = round_sig12(theta0);
  return j.dump(2) + "\n";
}

std::vector<FigureDataset> figure_datasets(const std::string& id) {
  const double kd = 1.5 * kPi;
  std::vector<FigureDataset> out;
  const auto add_profile = [&](const std::string& stem, const std::string& descriptor) {
    const ParsedState st = parse_descriptor(descriptor);
    const ChainGeometry geom(st.state.n_atoms(), kd);
    out.push_back({stem, make_profile(st, geom, -kPi, kPi, 1001), std::nullopt});
  };
  if (id == "fig5") {
    for (int n : {2, 4, 8}) {
      add_profile("fig5_N" + std::to_string(n), "W:1," + std::to_string(n));
    }
  } else if (id == "fig6") {
    for (int ne : {3, 5, 7}) {
      add_profile("fig6_ne" + std::to_string(ne), "W:" + std::to_string(ne) + ",10");
    }
  } else if (id == "fig7a") {
    // Low-kd companion panel; the range (0, 8 pi] is sampled from 8 pi/100.
    const ParsedState st = parse_descriptor("W:1,5");
    out.push_back({"fig7a", std::nullopt,
                   make_contour(st, 8.0 * kPi / 100.0, 8.0 * kPi, 100, -kPi, kPi, 361)});
  } else if (id == "fig7b") {
    const ParsedState st = parse_descriptor("W:1,5");
    out.push_back({"fig7b", std::nullopt,
                   make_contour(st, 20.0 * kPi, 25.0 * kPi, 101, -kPi, kPi, 361)});
  } else if (id == "fig8") {
    add_profile("fig8_w21", "W:2,3");
    const ParsedState anti = from_spec(RawStateSpec::parse("1 ege\n1 eeg\n-2 gee\n"));
    const ParsedState tilde = from_spec(RawStateSpec::parse("1 ege\n-1 eeg\n"));
    const ChainGeometry geom(3, kd);
    out.push_back({"fig8_wm21", make_profile(anti, geom, -kPi, kPi, 1001), std::nullopt});
    out.push_back({"fig8_wt21", make_profile(tilde, geom, -kPi, kPi, 1001), std::nullopt});
  } else {
    throw std::invalid_argument("unknown figure id '" + id +
                                "' (expected fig5, fig6, fig7a, fig7b or fig8)");
  }
  return out;
}

}  // namespace wchain::scan

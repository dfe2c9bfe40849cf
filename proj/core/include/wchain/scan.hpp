#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wchain/geometry.hpp"
#include "wchain/intensity.hpp"
#include "wchain/state.hpp"

namespace wchain::scan {

// Inclusive uniform grid with at least two samples; theta = 0 is an exact
// sample for symmetric ranges with an odd sample count.
std::vector<double> uniform_grid(double min, double max, int samples);

// Accepts a plain number or the shorthand "<x>pi" ("1.5pi", "pi").
double parse_kd(const std::string& text);

// A state plus the integer spec it came from. `symmetric_w` carries
// (n_excited, n_atoms) when the descriptor named the symmetric family.
struct ParsedState {
  RawStateSpec spec;
  PureState state;
  std::string descriptor;
  std::optional<std::pair<int, int>> symmetric_w;
};

// "W:ne,N" (symmetric, ne of N atoms excited) or "S:ne,ng" (separable).
ParsedState parse_descriptor(const std::string& descriptor);
// Text spec file, one `<signed-int> <config>` per line.
ParsedState load_spec_file(const std::string& path);
ParsedState from_spec(RawStateSpec spec);

struct VisibilityReport {
  double closed_form;
  double numeric;
  bool match;  // |closed_form - numeric| <= 1e-6
};

// Closed form against a refined numeric scan over theta in [0, pi/2].
// The two differ whenever kd does not admit zeros of the grating factor.
VisibilityReport visibility_report(int n_excited, int n_atoms, const ChainGeometry& geom);

// Numeric extrema of the angular distribution: grid bracketing plus
// golden-section refinement.
struct ScanExtrema {
  double min;
  double max;
};
ScanExtrema scan_extrema(const PureState& state, const ChainGeometry& geom, double theta_min,
                         double theta_max, int samples);

struct Profile {
  std::string state;
  double kd = 0.0;
  int n_atoms = 0;
  bool dipole_dipole_negligible = true;
  std::vector<double> theta;
  std::vector<double> intensity;
  std::optional<VisibilityReport> visibility;  // symmetric-family scans only
};

Profile make_profile(const ParsedState& st, const ChainGeometry& geom, double theta_min,
                     double theta_max, int samples);

struct Contour {
  std::string state;
  int n_atoms = 0;
  bool dipole_dipole_negligible = true;
  std::vector<double> kd;
  std::vector<double> theta;
  std::vector<double> intensity;  // kd-major, size kd.size() * theta.size()
};

Contour make_contour(const ParsedState& st, double kd_min, double kd_max, int kd_samples,
                     double theta_min, double theta_max, int theta_samples);

// Serialization. Values are rounded to 12 significant digits in both
// formats, so CSV and JSON carry identical numeric content and output is
// byte-deterministic for a fixed request.
void write_csv(std::ostream& os, const Profile& p);
void write_json(std::ostream& os, const Profile& p);
void write_csv(std::ostream& os, const Contour& c);
void write_json(std::ostream& os, const Contour& c);

// Path-ledger counts plus the independently computed theta = 0 intensity.
std::string ledger_report_json(const ParsedState& st);

// Preset datasets: fig5, fig6, fig7a, fig7b, fig8.
struct FigureDataset {
  std::string stem;  // output filename stem, e.g. "fig5_N4"
  std::optional<Profile> profile;
  std::optional<Contour> contour;
};
std::vector<FigureDataset> figure_datasets(const std::string& id);

// %.12g rendering used by every serializer, and the matching value
// rounding applied before numbers enter a JSON document.
std::string format_sig12(double v);
double round_sig12(double v);

}  // namespace wchain::scan

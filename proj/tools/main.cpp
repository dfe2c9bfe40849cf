// Command line front end: angular scans, kd contours, path-ledger reports
// and preset figure datasets for chains of two-level atoms.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "wchain/errors.hpp"
#include "wchain/scan.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct StateOpts {
  std::string descriptor;
  std::string spec_file;
};

void add_state_options(CLI::App* cmd, StateOpts& opts) {
  cmd->add_option("--state", opts.descriptor,
                  "Built-in state: W:n_excited,n_atoms or S:n_excited,n_ground");
  cmd->add_option("--spec-file", opts.spec_file,
                  "State spec file: one '<signed-int> <config>' per line over {e,g}");
}

wchain::scan::ParsedState resolve_state(const StateOpts& opts) {
  if (!opts.descriptor.empty() && !opts.spec_file.empty()) {
    throw std::invalid_argument("use either --state or --spec-file, not both");
  }
  if (!opts.descriptor.empty()) return wchain::scan::parse_descriptor(opts.descriptor);
  if (!opts.spec_file.empty()) return wchain::scan::load_spec_file(opts.spec_file);
  throw std::invalid_argument("one of --state or --spec-file is required");
}

void write_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  emit(f);
}

void check_format(const std::string& format) {
  if (format != "csv" && format != "json") {
    throw std::invalid_argument("--format must be csv or json");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Far-field intensity of equidistant chains of two-level atoms"};
  app.require_subcommand(1);

  StateOpts scan_state;
  std::string scan_kd = "1.5pi";
  double scan_theta_min = -1.0, scan_theta_max = 1.0;
  int scan_theta_steps = 1001;
  std::string scan_format = "csv", scan_out;
  auto* scan_cmd = app.add_subcommand("scan", "Angular intensity profile at fixed kd");
  add_state_options(scan_cmd, scan_state);
  scan_cmd->add_option("--kd", scan_kd, "Chain spacing kd, plain number or '<x>pi'");
  scan_cmd->add_option("--theta-min", scan_theta_min, "Scan start, in fractions of pi");
  scan_cmd->add_option("--theta-max", scan_theta_max, "Scan end, in fractions of pi");
  scan_cmd->add_option("--theta-steps", scan_theta_steps, "Number of samples, endpoints included");
  scan_cmd->add_option("--format", scan_format, "Output format: csv or json");
  scan_cmd->add_option("--out", scan_out, "Output file (default: stdout)");
  scan_cmd->callback([&] {
    check_format(scan_format);
    const auto st = resolve_state(scan_state);
    const wchain::ChainGeometry geom(st.state.n_atoms(), wchain::scan::parse_kd(scan_kd));
    const auto profile = wchain::scan::make_profile(st, geom, scan_theta_min * kPi,
                                                    scan_theta_max * kPi, scan_theta_steps);
    write_output(scan_out, [&](std::ostream& os) {
      if (scan_format == "csv") {
        wchain::scan::write_csv(os, profile);
      } else {
        wchain::scan::write_json(os, profile);
      }
    });
  });

  StateOpts contour_state;
  std::string contour_kd_min, contour_kd_max;
  int contour_kd_steps = 101;
  double contour_theta_min = -1.0, contour_theta_max = 1.0;
  int contour_theta_steps = 361;
  std::string contour_format = "csv", contour_out;
  auto* contour_cmd = app.add_subcommand("contour", "Intensity over a (kd, theta) grid");
  add_state_options(contour_cmd, contour_state);
  contour_cmd->add_option("--kd-min", contour_kd_min, "Smallest kd, plain number or '<x>pi'")
      ->required();
  contour_cmd->add_option("--kd-max", contour_kd_max, "Largest kd, plain number or '<x>pi'")
      ->required();
  contour_cmd->add_option("--kd-steps", contour_kd_steps, "Number of kd samples");
  contour_cmd->add_option("--theta-min", contour_theta_min, "Scan start, in fractions of pi");
  contour_cmd->add_option("--theta-max", contour_theta_max, "Scan end, in fractions of pi");
  contour_cmd->add_option("--theta-steps", contour_theta_steps, "Number of theta samples");
  contour_cmd->add_option("--format", contour_format, "Output format: csv or json");
  contour_cmd->add_option("--out", contour_out, "Output file (default: stdout)");
  contour_cmd->callback([&] {
    check_format(contour_format);
    const auto st = resolve_state(contour_state);
    const auto contour = wchain::scan::make_contour(
        st, wchain::scan::parse_kd(contour_kd_min), wchain::scan::parse_kd(contour_kd_max),
        contour_kd_steps, contour_theta_min * kPi, contour_theta_max * kPi, contour_theta_steps);
    write_output(contour_out, [&](std::ostream& os) {
      if (contour_format == "csv") {
        wchain::scan::write_csv(os, contour);
      } else {
        wchain::scan::write_json(os, contour);
      }
    });
  });

  StateOpts ledger_state;
  std::string ledger_out;
  auto* ledger_cmd =
      app.add_subcommand("ledger", "Interference path counts and the theta = 0 extremum");
  add_state_options(ledger_cmd, ledger_state);
  ledger_cmd->add_option("--out", ledger_out, "Output file (default: stdout)");
  ledger_cmd->callback([&] {
    const auto st = resolve_state(ledger_state);
    const std::string report = wchain::scan::ledger_report_json(st);
    write_output(ledger_out, [&](std::ostream& os) { os << report; });
  });

  std::string figure_id;
  std::string figure_format = "csv", figure_out = ".";
  auto* figure_cmd = app.add_subcommand("figure", "Preset datasets (fig5..fig8)");
  figure_cmd->add_option("id", figure_id, "One of fig5, fig6, fig7a, fig7b, fig8")->required();
  figure_cmd->add_option("--format", figure_format, "Output format: csv or json");
  figure_cmd->add_option("--out", figure_out, "Output directory (default: current)");
  figure_cmd->callback([&] {
    check_format(figure_format);
    const auto datasets = wchain::scan::figure_datasets(figure_id);
    std::filesystem::create_directories(figure_out);
    for (const auto& ds : datasets) {
      const auto path =
          std::filesystem::path(figure_out) / (ds.stem + "." + figure_format);
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open output file: " + path.string());
      if (ds.profile) {
        if (figure_format == "csv") {
          wchain::scan::write_csv(f, *ds.profile);
        } else {
          wchain::scan::write_json(f, *ds.profile);
        }
      } else if (ds.contour) {
        if (figure_format == "csv") {
          wchain::scan::write_csv(f, *ds.contour);
        } else {
          wchain::scan::write_json(f, *ds.contour);
        }
      }
      std::cout << "wrote " << path.string() << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const wchain::ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const wchain::UnsupportedStateError& e) {
    std::cerr << "unsupported state: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

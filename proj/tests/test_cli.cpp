// End-to-end checks of the installed command line tool, driven through a
// shell. The binary path is injected by the build as WCHAIN_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  const std::string cmd =
      std::string(WCHAIN_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("scan of a separable state is flat at the excitation count") {
  const auto r = run_cli("scan --state S:3,5");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 2 + 1001);
  CHECK(lines[0] == "# state=S:3,5 kd=4.71238898038 N=8 units=single-atom");
  CHECK(lines[1] == "theta,intensity");
  int data_rows = 0;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    ++data_rows;
    CHECK(lines[i].substr(lines[i].find(',')) == ",3");
  }
  CHECK(data_rows == 1001);
}

TEST_CASE("scan output is byte deterministic") {
  const std::string args = "scan --state W:1,8 --kd 1.5pi --format csv";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(!first.out.empty());
}

TEST_CASE("scan emits parseable json with the forward peak") {
  const auto r = run_cli("scan --state W:2,3 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["metadata"]["state"] == "W:2,3");
  CHECK(j["metadata"]["n_atoms"] == 3);
  CHECK(j["metadata"]["units"] == "single-atom");
  REQUIRE(j["intensity"].size() == 1001);
  CHECK(std::abs(j["intensity"][500].get<double>() - 4.0) <= 1e-9);
  CHECK(j["metadata"]["visibility"]["match"] == true);
}

TEST_CASE("scan flags close spacing") {
  const auto r = run_cli("scan --state W:1,2 --kd 0.5 --theta-steps 11");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("# warning=kd<=1-dipole-dipole-interaction-not-negligible\n") !=
        std::string::npos);
}

TEST_CASE("contour header carries the grid") {
  const auto r =
      run_cli("contour --state W:1,3 --kd-min 2 --kd-max 4 --kd-steps 3 --theta-steps 5");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 3 + 15);
  CHECK(lines[0] == "# state=W:1,3 N=3 units=single-atom");
  CHECK(lines[1].rfind("# grid kd_min=2 kd_max=4 kd_steps=3", 0) == 0);
  CHECK(lines[2] == "kd,theta,intensity");
}

TEST_CASE("ledger report of the symmetric two-of-three state") {
  const auto r = run_cli("ledger --state W:2,3");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["state"] == "W:2,3");
  CHECK(j["offset"] == 2);
  CHECK(j["qp_c"] == 2);
  CHECK(j["f_c"] == 3);
  CHECK(j["qp_d"] == 0);
  CHECK(j["f_d"] == 0);
  CHECK(j["norm_sq_num"] == 1);
  CHECK(j["norm_sq_den"] == 3);
  CHECK(j["extremum"] == 4);
  CHECK(std::abs(j["theta0_intensity"].get<double>() - 4.0) <= 1e-9);
}

TEST_CASE("ledger accepts spec files and reports the worked anti-symmetric state") {
  const std::string spec_path = "cli_anti.spec.tmp";
  {
    std::ofstream f(spec_path);
    f << "1 ege\n1 eeg\n-2 gee\n";
  }
  const auto r = run_cli("ledger --spec-file " + spec_path);
  std::remove(spec_path.c_str());
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["state"] == "+1eeg+1ege-2gee");
  CHECK(j["qp_d"] == 4);
  CHECK(j["f_d"] == 2);
  CHECK(j["extremum"] == 1);
}

TEST_CASE("mixed-excitation spec files are rejected by the ledger") {
  const std::string spec_path = "cli_mixed.spec.tmp";
  {
    std::ofstream f(spec_path);
    f << "1 eg\n1 gg\n";
  }
  const auto r = run_cli("ledger --spec-file " + spec_path);
  std::remove(spec_path.c_str());
  CHECK(r.exit_code == 4);
  CHECK(r.err.find("unsupported state") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("scan --state X:9").exit_code == 2);
  CHECK(run_cli("scan --state W:0,3").exit_code == 2);
  CHECK(run_cli("scan").exit_code == 2);
  CHECK(run_cli("scan --state W:1,2 --spec-file x.tmp").exit_code == 2);
  CHECK(run_cli("scan --state W:1,2 --format xml").exit_code == 2);
  CHECK(run_cli("scan --state W:1,2 --kd junk").exit_code == 2);
  CHECK(run_cli("contour --state W:1,2 --kd-max 4").exit_code == 2);
  CHECK(run_cli("figure fig9").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("figure command writes one file per dataset") {
  namespace fs = std::filesystem;
  const fs::path dir = "cli_fig8_out.tmp";
  fs::remove_all(dir);
  const auto r = run_cli("figure fig8 --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  CHECK(lines.size() == 3);
  for (const auto& stem : {"fig8_w21", "fig8_wm21", "fig8_wt21"}) {
    const auto path = dir / (std::string(stem) + ".csv");
    CHECK(fs::exists(path));
    const auto content = slurp(path.string());
    CHECK(content.find("theta,intensity\n") != std::string::npos);
  }
  fs::remove_all(dir);
}

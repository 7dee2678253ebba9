// Copyright 2026 The qnoise authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("QNOISE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "QNOISE_CLI must point at the CLI binary");
  return p;
}

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "qnoise_cli_test";
  fs::create_directories(dir);
  return dir;
}

int run(const std::string& args, const fs::path& out) {
  const std::string cmd = cli_path() + " " + args + " --out " + out.string() +
                          " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

int run_nocapture(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("exit codes follow the 0/1/2 contract") {
  const fs::path dir = work_dir();

  // 0: success
  CHECK(run("plate-purity --spectrum mono --h-min 1 --h-max 10 --steps 3",
            dir / "ok.csv") == 0);

  // 1: flag and domain validation
  CHECK(run_nocapture("plate-purity --spectrum boxcar --fwhm 0.1") == 1);
  CHECK(run_nocapture("plate-purity --spectrum gauss") == 1);  // missing fwhm
  CHECK(run_nocapture("chi --t1 1 --t2 5 --n 10") == 1);       // T2 > 2 T1
  CHECK(run_nocapture("chi --gate bogus --t1 20 --t2 15") == 1);
  CHECK(run_nocapture("negativity --t1 20") == 1);  // missing required flag
  CHECK(run_nocapture("nonsense-subcommand") == 1);

  // 2: numerical tolerance failure (an impossible oracle tolerance)
  CHECK(run("plate-chi --spectrum gauss --fwhm 0.1 --h 200 --oracle 2000 "
            "--seed 1 --tolerance 1e-9",
            dir / "tol.csv") == 2);
}

TEST_CASE("matrix files feed the gate option") {
  const fs::path dir = work_dir();
  const fs::path mat = dir / "hadamard.json";
  const double r = 1.0 / std::sqrt(2.0);
  nlohmann::json j;
  j["real"] = {{r, r}, {r, -r}};
  j["imag"] = {{0.0, 0.0}, {0.0, 0.0}};
  std::ofstream(mat) << j.dump();

  CHECK(run("chi --gate file:" + mat.string() + " --t1 20 --t2 15 --n 10",
            dir / "had.csv") == 0);

  nlohmann::json bad = j;
  bad["real"][0][0] = 0.9;  // breaks unitarity
  const fs::path broken = dir / "broken.json";
  std::ofstream(broken) << bad.dump();
  CHECK(run("chi --gate file:" + broken.string() + " --t1 20 --t2 15",
            dir / "broken.csv") == 1);
}

TEST_CASE("json outputs carry the documented structure") {
  const fs::path dir = work_dir();

  const fs::path chi_out = dir / "chi.json";
  REQUIRE(run("chi --gate sqisw --t1 20 --t2 15 --n 10 --format json",
              chi_out) == 0);
  const nlohmann::json chi = nlohmann::json::parse(slurp(chi_out));
  CHECK(chi["command"] == "chi");
  CHECK(chi["chi"]["real"].size() == 16);
  CHECK(chi["chi"]["imag"].size() == 16);
  CHECK(chi["chi"]["magnitude"].size() == 16);
  CHECK(chi["metadata"].contains("convergence_trace_distance"));
  CHECK(chi["metadata"]["rank"].is_number_integer());

  const fs::path neg_out = dir / "neg.json";
  REQUIRE(run("negativity --t1 20 --t2 15 --n 12 --format json", neg_out) == 0);
  const nlohmann::json neg = nlohmann::json::parse(slurp(neg_out));
  CHECK(neg["rows"].size() == 13);
  CHECK(neg["rows"][0]["negativity_ideal"].get<double>() ==
        doctest::Approx(1.5));

  const fs::path plate_out = dir / "plate.json";
  REQUIRE(run("plate-chi --spectrum rect --fwhm 0.08 --h 120 --oracle 3000 "
              "--seed 2 --format json",
              plate_out) == 0);
  const nlohmann::json plate = nlohmann::json::parse(slurp(plate_out));
  CHECK(plate["command"] == "plate-chi");
  CHECK(plate["chi"]["real"].size() == 4);
  CHECK(plate["metadata"]["rank"].get<int>() <= 2);
  CHECK(plate["oracle"]["trace_distance"].get<double>() < 0.05);
  CHECK(plate["linearization"].contains("a"));
  CHECK(plate["fourier"].contains("I_c"));
}

TEST_CASE("csv outputs use stable headers") {
  const fs::path dir = work_dir();

  const fs::path neg_out = dir / "neg.csv";
  REQUIRE(run("negativity --t1 20 --t2 15 --n 5", neg_out) == 0);
  const std::string neg = slurp(neg_out);
  CHECK(neg.rfind("slice_index,time,negativity_ideal,negativity_noisy\r\n",
                  0) == 0);

  const fs::path pur_out = dir / "pur.csv";
  REQUIRE(run("plate-purity --spectrum gauss --fwhm 0.1 --h-min 10 --h-max 50 "
              "--steps 5",
              pur_out) == 0);
  CHECK(slurp(pur_out).rfind("spectrum,h,a,b,I_c,I_s,purity\r\n", 0) == 0);

  const fs::path chi_out = dir / "chi.csv";
  REQUIRE(run("chi --gate identity --t1 40 --t2 30 --n 5", chi_out) == 0);
  CHECK(slurp(chi_out).rfind("part,row,col,value\r\n", 0) == 0);
  CHECK(slurp(chi_out).find("meta.convergence_trace_distance") !=
        std::string::npos);
}

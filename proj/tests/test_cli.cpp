/* Copyright (C) 2026 The qaclcd authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sys/wait.h>
#include <unistd.h>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* p = std::getenv("QACLCD_CLI");
    return p ? p : "";
}

int run_cli(const std::string& args, const std::string& stdout_file) {
    std::string cmd = cli_path() + " " + args + " > " + stdout_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TmpDir {
    fs::path dir;
    TmpDir() {
        dir = fs::temp_directory_path() / ("qaclcd_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TmpDir() { std::error_code ec; fs::remove_all(dir, ec); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("cli: census emits the documented CSV schema and a JSON summary") {
    if (cli_path().empty()) { FAIL("QACLCD_CLI not set"); return; }
    TmpDir tmp;
    std::string rows = tmp.file("rows.csv"), sum = tmp.file("summary.json");
    int rc = run_cli("census --q 3 --group 5 --lambda 2 --delta 1/2 --output " + rows, sum);
    CHECK(rc == 0);

    std::string csv = slurp(rows);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "beta_id,min_wt,delta_num,delta_den,lcd_sufficient,lcd_exact,exact_scan");
    size_t count = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++count;
    CHECK(count == 320);

    auto j = nlohmann::json::parse(slurp(sum));
    CHECK(j["count_formula"] == "320");
    CHECK(j["count_oracle"] == 320);
    CHECK(j["rows"] == 320);
    CHECK(j["census"][0]["delta"] == "1/2");
    CHECK(j["config"]["command"] == "census");
}

TEST_CASE("cli: verify counting at the n=7 headline instance") {
    if (cli_path().empty()) { FAIL("QACLCD_CLI not set"); return; }
    TmpDir tmp;
    int rc = run_cli("verify --suite counting --q 3 --group 7 --lambda 2 --threads 2",
                     tmp.file("verify.txt"));
    CHECK(rc == 0);
    CHECK(slurp(tmp.file("verify.txt")).find("FAIL") == std::string::npos);
}

TEST_CASE("cli: enumerate over F_4 reports the empty family with exit 2") {
    if (cli_path().empty()) { FAIL("QACLCD_CLI not set"); return; }
    TmpDir tmp;
    int rc = run_cli("enumerate --q 2 --group 5", tmp.file("out.txt"));
    CHECK(rc == 2);
}

TEST_CASE("cli: idempotents JSON shape") {
    if (cli_path().empty()) { FAIL("QACLCD_CLI not set"); return; }
    TmpDir tmp;
    int rc = run_cli("idempotents --q 3 --group 5", tmp.file("idem.json"));
    CHECK(rc == 0);
    auto j = nlohmann::json::parse(slurp(tmp.file("idem.json")));
    CHECK(j["q"] == 3);
    CHECK(j["t"] == 2);
    CHECK(j["r"] == 0);
    CHECK(j["s"] == 1);
    CHECK(j["mu"] == 2);
    REQUIRE(j["components"].size() == 2);
    CHECK(j["components"][0]["type"] == "e0");
    CHECK(j["components"][1]["type"] == "paired");
    CHECK(j["components"][1]["k"] == 4);
}

TEST_CASE("cli: byte-identical outputs across reruns and thread counts") {
    if (cli_path().empty()) { FAIL("QACLCD_CLI not set"); return; }
    TmpDir tmp;
    std::string r1 = tmp.file("r1.csv"), r2 = tmp.file("r2.csv");
    std::string s1 = tmp.file("s1.json"), s2 = tmp.file("s2.json");
    CHECK(run_cli("census --q 3 --group 5 --lambda 2 --threads 1 --seed 0 --output " + r1, s1) == 0);
    CHECK(run_cli("census --q 3 --group 5 --lambda 2 --threads 2 --seed 0 --output " + r2, s2) == 0);
    CHECK(slurp(r1) == slurp(r2));
    CHECK(slurp(s1) == slurp(s2));

    std::string m1 = tmp.file("m1.json"), m2 = tmp.file("m2.json");
    CHECK(run_cli("mindist --q 3 --group 5 --beta 20001 --sampled --trials 500 --seed 9", m1) == 0);
    CHECK(run_cli("mindist --q 3 --group 5 --beta 20001 --sampled --trials 500 --seed 9", m2) == 0);
    CHECK(slurp(m1) == slurp(m2));
}

TEST_CASE("cli: malformed inputs exit with code 2") {
    if (cli_path().empty()) { FAIL("QACLCD_CLI not set"); return; }
    TmpDir tmp;
    CHECK(run_cli("census --q 6 --group 5", tmp.file("a")) == 2);     // not a prime power
    CHECK(run_cli("census --q 3 --group 4", tmp.file("b")) == 2);     // even order
    CHECK(run_cli("census --q 3 --group 9", tmp.file("c")) == 2);     // gcd violation
    CHECK(run_cli("mindist --q 3 --group 5 --beta zz", tmp.file("d")) == 2);
    CHECK(run_cli("lift --ring xx:q=1 --group 5 --beta 00000", tmp.file("e")) == 2);
    CHECK(run_cli("nonsense", tmp.file("f")) == 2);
}

/* Copyright 2026 The scx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

std::string fixture(const char* name) {
  return std::string(SCX_FIXTURE_DIR) + "/" + name;
}

Run scx(const std::string& args) {
  const std::string cmd = std::string(SCX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

std::size_t line_count(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("cli validate") {
  auto r = scx("validate " + fixture("chain.scx"));
  CHECK(r.status == 0);
  CHECK(r.out == "ok\n");

  CHECK(scx("validate " + fixture("zero_weight.scx")).status == 0);
  r = scx("validate --strict-positive " + fixture("zero_weight.scx"));
  CHECK(r.status == 1);
  CHECK(r.out.find("NonPositiveWeight") != std::string::npos);

  CHECK(scx("validate /no/such/file.scx").status == 2);

  const auto tmp = std::filesystem::temp_directory_path() / "scx_cli_bad.scx";
  std::ofstream(tmp) << "scx 2 4\n1 2 3 4 1\n";
  const std::string cmd = std::string(SCX_CLI_PATH) + " validate " + tmp.string() + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[512] = {};
  const std::size_t n = fread(buf, 1, sizeof buf - 1, pipe);
  const int raw = pclose(pipe);
  CHECK(WEXITSTATUS(raw) == 2);
  CHECK(std::string(buf, n).find(tmp.string() + ":2:") != std::string::npos);
  std::filesystem::remove(tmp);

  const auto negative = std::filesystem::temp_directory_path() / "scx_cli_negative.scx";
  std::ofstream(negative) << "scx 1 3\n1 2 -1\n2 3 1\n";
  r = scx("validate --json " + negative.string());
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK(j["violations"][0]["kind"] == "NegativeWeight");
  std::filesystem::remove(negative);
}

TEST_CASE("cli sssp") {
  auto r = scx("sssp " + fixture("chain.scx") + " --source 1,3");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "1,3 0 - -"));
  CHECK(has_line(r.out, "2,5 5 2,3 2,3,5"));
  CHECK(has_line(r.out, "4,7 15 4,5 4,5,7"));
  CHECK(line_count(r.out) == 11);
  // sorted by (distance, simplex)
  CHECK(r.out.find("1,2 2") < r.out.find("2,3 2"));
  CHECK(r.out.find("2,3 2") < r.out.find("2,5 5"));

  CHECK(scx("sssp " + fixture("chain.scx") + " --source 3,1").out == r.out);

  r = scx("sssp " + fixture("shared_edge.scx") + " --source 2,3");
  CHECK(r.status == 0);
  CHECK(r.out == "2,3 0 - -\n");
  r = scx("sssp " + fixture("shared_edge.scx") + " --source 2,3 --all");
  CHECK(line_count(r.out) == 6);
  CHECK(has_line(r.out, "1,4 inf - -"));

  r = scx("sssp " + fixture("empty.scx") + " --source 4,5");
  CHECK(r.status == 0);
  CHECK(r.out == "4,5 0 - -\n");

  CHECK(scx("sssp " + fixture("chain.scx") + " --source 1,2,3").status == 1);
  CHECK(scx("sssp " + fixture("chain.scx") + " --source 1,9").status == 1);
  CHECK(scx("sssp " + fixture("chain.scx") + " --source a,b").status == 2);
  CHECK(scx("sssp " + fixture("chain.scx")).status == 2);

  r = scx("sssp --json " + fixture("chain.scx") + " --source 1,3");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 11);
  CHECK(j["rows"][0]["distance"] == 0);
  CHECK(j["rows"][10]["simplex"] == nlohmann::json({5, 7}));
  CHECK(j["rows"][10]["distance"] == 15);
}

TEST_CASE("cli path") {
  auto r = scx("path " + fixture("chain.scx") + " --source 1,3 --target 4,7");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "simplices: 1,3 2,3 3,5 4,5 4,7\n"
        "via: 1,2,3 2,3,5 3,4,5 4,5,7\n"
        "hops: 4\n"
        "total: 15\n");

  r = scx("path " + fixture("chain.scx") + " --source 2,5 --target 5,2");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "hops: 0"));
  CHECK(has_line(r.out, "total: 0"));

  r = scx("path " + fixture("shared_edge.scx") + " --source 1,2 --target 2,3");
  CHECK(r.status == 1);
  CHECK(r.out == "unreachable\n");

  r = scx("path --json " + fixture("chain.scx") + " --source 1,3 --target 4,7");
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["hops"] == 4);
  CHECK(j["total"] == 15);
  CHECK(j["via"][3] == nlohmann::json({4, 5, 7}));
}

TEST_CASE("cli generate") {
  const std::string args = "generate --n 6 --d 2 --p 0.5 --seed 2026 --wmin 1 --wmax 10 --int";
  auto r = scx(args);
  CHECK(r.status == 0);
  CHECK(r.out == "scx 2 6\n1 3 4 3\n1 3 5 10\n1 3 6 3\n1 4 6 4\n2 3 6 5\n2 5 6 5\n3 4 5 6\n");
  CHECK(scx(args).out == r.out);

  CHECK(scx("generate --n 6 --d 2 --p 0").out == "scx 2 6\n");
  r = scx("generate --n 4 --d 2 --p 1");
  CHECK(r.out == "scx 2 4\n1 2 3 1\n1 2 4 1\n1 3 4 1\n2 3 4 1\n");

  const auto tmp = std::filesystem::temp_directory_path() / "scx_cli_gen.scx";
  CHECK(scx(args + " -o " + tmp.string()).status == 0);
  std::ifstream in(tmp);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == scx(args).out);
  std::filesystem::remove(tmp);

  CHECK(scx("generate --n 3 --d 3 --p 0.5").status == 1);
  CHECK(scx("generate --n 5 --d 2 --p 2").status == 1);
  CHECK(scx("generate --n 5 --d 2").status == 2);
}

TEST_CASE("cli bench") {
  auto r = scx("bench --sizes 500 --d 2");
  CHECK(r.status == 0);
  CHECK(line_count(r.out) == 2);
  CHECK(r.out.rfind("n_simplices,d,m,build_ms,sssp_ms\n", 0) == 0);

  r = scx("bench --sizes 500,1000 --repeat 3 --json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["d"] == 2);
  CHECK(j[1]["m"].get<int>() > j[0]["m"].get<int>());
  CHECK(j[0]["sssp_ms"].get<double>() >= 0);

  CHECK(scx("bench --repeat 0").status == 2);
}

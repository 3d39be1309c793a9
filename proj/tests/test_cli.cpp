#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ZETAKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& file) {
  std::ifstream in(file);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("zeta of the running example") {
  const Run r = run("zeta --type C --path NEEEENNNNNEE --labels '[1,-5,-4,2,3,6]'");
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["zeta"] == "NNENENNENENE");
  CHECK(j["reading_word"] == std::vector<int>{-2, 1, 3, 4, 6, 5});
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"input", "type", "area_vector", "zeta", "reading_word"});
  CHECK(run("zeta --type C --path NEEEENNNNNEE --labels '[1,-5,-4,2,3,6]'").out == r.out);
}

TEST_CASE("inverse and type D") {
  const Run inv = run("zeta --type C --path NNENENNENENE --inverse");
  CHECK(inv.code == 0);
  CHECK(nlohmann::json::parse(inv.out)["inverse"] == "NEEEENNNNNEE");
  const Run d = run("zeta --type D --path E-EENNNNNE");
  CHECK(d.code == 0);
  CHECK(nlohmann::json::parse(d.out)["zeta"] == "NENNENENE-");
}

TEST_CASE("sweep trace") {
  const Run r = run("zeta --type C --path NEEEENNNNNEE --sweep");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sweep"]["labels"] == std::vector<int>{0, 13, 1, -11, -23, -35, -22, -9, 4, 17, 30, 18});
  CHECK(j["sweep"]["image"] == "NNENENNENENE");
}

TEST_CASE("zeta exit codes") {
  CHECK(run("zeta --type C --path NEX").code == 2);
  CHECK(run("zeta --type Q --path NE").code == 2);
  CHECK(run("zeta --type C").code == 2);
  CHECK(run("zeta --type C --path NNE").code == 3);
  CHECK(run("zeta --type C --path NEEN --labels '[-2,1]'").code == 3);
  CHECK(run("zeta --type D --path NNENNENNE --inverse").code == 2);
  CHECK(run("zeta --type B --path NEEN --sweep").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("verify") {
  const Run ok = run("verify --type C --n 5");
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out).size() == 8);
  CHECK(run("verify --type C --n 99").code == 2);
  const Run two = run("verify --type D --n 3 --check bijectivity,uniform");
  CHECK(two.code == 0);
  const auto j = nlohmann::json::parse(two.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["check"] == "bijectivity");
  CHECK(j[1]["check"] == "uniform");
  CHECK(run("verify --type B --n 3 --check sweep_equiv").code == 2);
  CHECK(run("verify --type D --n 3 --check bijectivity,uniform").out == two.out);
}

TEST_CASE("table") {
  const std::string small = temp_file("zetakit_table_c3.csv");
  CHECK(run("table --type C --n 3 --stats area,dinv --out " + small).code == 0);
  const std::vector<std::string> rows = lines(small);
  REQUIRE(rows.size() == 21);
  CHECK(rows[0] == "path,area,dinv");

  const std::string empty = temp_file("zetakit_table_c0.csv");
  CHECK(run("table --type C --n 0 --stats area,dinv --out " + empty).code == 0);
  CHECK(lines(empty) == std::vector<std::string>{"path,area,dinv"});

  const std::string big = temp_file("zetakit_table_c6.csv");
  CHECK(run("table --type C --n 6 --stats area,dinv --out " + big).code == 0);
  const std::vector<std::string> all = lines(big);
  CHECK(all.size() == 925);
  CHECK(std::find(all.begin(), all.end(), "NEEEENNNNNEE,9,9") != all.end());

  CHECK(run("table --type C --n 3 --stats bogus --out " + small).code == 2);
  CHECK(run("table --type C --n 3 --stats area --out /nonexistent/dir/x.csv").code == 2);
  std::filesystem::remove(small);
  std::filesystem::remove(empty);
  std::filesystem::remove(big);
}

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string exe() {
  const char* e = std::getenv("CHIRAL_EXE");
  return e ? e : "chiral";
}

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + exe() + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string problem_file(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "chiral_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

const char* kLeeYang4 = "# Lee-Yang four point\n0 2/5/1/2\n1 2/5/1/2\n3 2/5/1/2\ninf 2/5/1/2\n";

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-verb").code == 2);
  CHECK(run("zhu --p").code == 2);
  CHECK(run("--format xml zhu --p 2 --q 5").code == 2);
}

TEST_CASE("bad input") {
  CHECK(run("blocks /definitely/not/here.txt").code == 3);
  CHECK(run("blocks " + problem_file("bad_label.txt", "0 2/5/9/2\n")).code == 3);
  CHECK(run("blocks " + problem_file("dup.txt", "0 2/5/1/2\n0 2/5/1/2\n")).code == 3);
  CHECK(run("zhu --p 2 --q 4").code == 3);
  CHECK(run("module 3/4/3/1").code == 3);
}

TEST_CASE("zhu verb") {
  Run r = run("--format json zhu --p 2 --q 5");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["dimension"] == 2);
  CHECK(doc["minimal_polynomial"] == "x^2 + 1/5*x");
  CHECK(doc["roots"] == nlohmann::json::array({"-1/5", "0"}));
  CHECK(doc["squarefree"] == "pass");
  Run t = run("zhu --p 3 --q 4");
  CHECK(t.code == 0);
  CHECK(t.out.find("roots: 0, 1/16, 1/2") != std::string::npos);
}

TEST_CASE("failed and unstable runs") {
  // too shallow to see the singular vector
  CHECK(run("zhu --p 2 --q 5 --depth 3").code == 1);
  CHECK(run("blocks --depth 2 " + problem_file("ly4.txt", kLeeYang4)).code == 4);
}

TEST_CASE("blocks verb with factorization") {
  Run r = run("blocks " + problem_file("ly4.txt", kLeeYang4) + " --check factorization --split 2");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("dimension: 2") != std::string::npos);
  CHECK(r.out.find("channel sum 2, direct 2") != std::string::npos);
  CHECK(r.out.find("verdict: pass") != std::string::npos);
  Run j = run("--format json blocks " + problem_file("ly4.txt", kLeeYang4) + " --check propagation --insert 5/2");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["dimension"] == 2);
}

TEST_CASE("module, sew and conditions verbs") {
  Run m = run("--format json module 2/5/1/2 --depth 6");
  REQUIRE(m.code == 0);
  auto doc = nlohmann::json::parse(m.out);
  CHECK(doc.dump().find("[1,1,1,1,2,2,3]") != std::string::npos);
  CHECK(run("sew --label 3/4/1/2 --q-order 3 --samples 10").code == 0);
  CHECK(run("conditions --p 2 --q 5").code == 0);
}

TEST_CASE("verify-axioms") {
  Run r = run("verify-axioms --p 2 --q 5 --samples 10 --exhaustive-weight 2 --sample-weight 4 --depth 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("fail") == std::string::npos);
}

TEST_CASE("connection verb") {
  std::string f = problem_file("ly4.txt", kLeeYang4);
  std::string out = (std::filesystem::temp_directory_path() / "chiral_cli_test" / "ode.json").string();
  std::filesystem::remove(out);
  Run r = run("--format json connection " + f + " --movable 2 --flat-with 1 --depth 3 --export " + out);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("fail") == std::string::npos);
  std::ifstream in(out);
  REQUIRE(in.good());
  auto doc = nlohmann::json::parse(in);
  CHECK(doc["singular_locus"] == nlohmann::json::array({"0", "1"}));
  CHECK(doc["dimension"] == 2);
}

TEST_CASE("output is deterministic across runs and thread counts") {
  std::string f = problem_file("ly4.txt", kLeeYang4);
  std::string args = "--format json blocks " + f + " --check factorization --split 2";
  Run a = run(args);
  Run b = run(args);
  Run c = run(args, "CB_THREADS=1");
  Run d = run("--threads 2 " + args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out == d.out);
}

// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(G2H_CLI_PATH) + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

double field(const std::string& out, const std::string& key) {
  auto at = out.find(key);
  REQUIRE(at != std::string::npos);
  return std::stod(out.substr(at + key.size()));
}

}  // namespace

TEST_CASE("height") {
  Run r = run("height --curve 1,2,3,4,5 --point \"(1,4)+(-2,-5)\" --method local --nmax 1000");
  CHECK(r.code == 0);
  CHECK(std::abs(field(r.out, "hhat") - 0.905661971737515) < 1e-5);
  CHECK(r.out.find("place 2") != std::string::npos);
  Run g = run("height --curve 1,2,3,4,5 --point \"(1,4)+(-2,-5)\" --method gcd --nmax 100");
  CHECK(g.code == 0);
  CHECK(std::abs(field(g.out, "hhat") - 0.905661971737515) == doctest::Approx(4.67e-4).epsilon(0.05));
  // Mumford form of the same point, default method.
  Run m = run("height --point \"-2,1;1,3\" --nmax 1000");
  CHECK(m.code == 0);
  CHECK(field(m.out, "hhat") == doctest::Approx(field(r.out, "hhat")).epsilon(1e-12));
  // Deterministic output.
  CHECK(run("height --nmax 100 --format csv").out == run("height --nmax 100 --format csv").out);
}

TEST_CASE("exit codes") {
  Run t = run("height --curve 1,2,3,4,5 --point \"(1,4)+(1,-4)\"");
  CHECK(t.code == 3);
  CHECK(t.out.find("point on theta divisor") != std::string::npos);
  CHECK(run("height --nmax 5").code == 2);
  CHECK(run("height --method nope").code == 2);
  CHECK(run("height --curve 1,2,3").code == 2);
  CHECK(run("height --point \"(1,5)+(-2,-5)\"").code == 3);
  CHECK(run("height --curve 0,0,0,0,0").code == 3);
  CHECK(run("table --nmax 5").code == 2);
  CHECK(run("selftest --pack /nonexistent.pack").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("height --method gcd --point \"(1,4)+(-2,5)\" --nmax 100").code == 3);
}

TEST_CASE("series") {
  Run one = run("series --nmax 1 --format csv");
  CHECK(one.code == 0);
  CHECK(lines(one.out) == 2);
  CHECK(one.out.rfind("n,lambda\n1,", 0) == 0);
  Run j1 = run("series --curve 25,20,30,40,50 --point \"148/5,1081/25;1799/25,13803/125\" --place inf --nmax 2000 --format csv");
  CHECK(j1.code == 0);
  CHECK(lines(j1.out) == 2001);
  Run j2 = run("series --curve 100,200,300,400,500 --point \"200,400;1990,3990\" --place 2 --nmax 300 --format csv");
  CHECK(j2.code == 0);
  CHECK(lines(j2.out) > 100);
  CHECK(run("series --place 4").code == 2);
}

TEST_CASE("tables") {
  Run g = run("table --method gcd --nmax 500 --format csv --reference 0.905661971737515301");
  CHECK(g.code == 0);
  std::istringstream in(g.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,estimate,error");
  std::string ns;
  while (std::getline(in, line)) ns += line.substr(0, line.find(',')) + " ";
  CHECK(ns == "10 100 200 300 400 500 ");
  Run l = run("table --method local --nmax 25000 --format csv");
  CHECK(l.code == 0);
  CHECK(lines(l.out) == 9);  // header, 10, 100, 1000, 5000 ... 25000
}

TEST_CASE("selftest") {
  Run s = run("selftest");
  CHECK(s.code == 0);
  CHECK(s.out.find("[FAIL]") == std::string::npos);
  CHECK(s.out.find("[PASS] V5") != std::string::npos);
}

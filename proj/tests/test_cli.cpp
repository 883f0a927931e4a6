#include "broomlab_cli/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = broomlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors") {
  CHECK(cli({}).code == broomlab::cli::kUsage);
  CHECK(cli({"frobnicate"}).code == broomlab::cli::kUsage);
  CHECK(cli({"bounds"}).code == broomlab::cli::kUsage);
  CHECK(cli({"bounds", "--t", "2"}).code == broomlab::cli::kUsage);
  CHECK(cli({"construct", "--family", "odd-matching", "--t", "4"}).code == broomlab::cli::kUsage);
  CHECK(cli({"construct", "--family", "f2-clique"}).code == broomlab::cli::kUsage);
  CHECK(cli({"search", "--host", "clique:6", "--t", "4", "--palette-cap", "3"}).code ==
        broomlab::cli::kUsage);
  CHECK(cli({"verify", "--in", temp("does-not-exist.col"), "--t", "4"}).code ==
        broomlab::cli::kUsage);
}

TEST_CASE("bounds") {
  const auto r = cli({"bounds", "--t", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[9/2, 65/12]") != std::string::npos);
  CHECK(cli({"bounds", "--t", "6"}).out.find("exact 7/2") != std::string::npos);
}

TEST_CASE("construct then verify and analyze") {
  const auto file = temp("broomlab_cli_f2.col");
  auto r = cli({"construct", "--family", "f2-clique", "--s", "3", "--out", file});
  CHECK(r.code == 0);
  CHECK(r.out.find("n 8") != std::string::npos);
  r = cli({"verify", "--in", file, "--t", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rainbow-free") != std::string::npos);
  r = cli({"verify", "--in", file, "--t", "5"});
  CHECK(r.code == 1);
  CHECK(r.out.find("handle") != std::string::npos);
  r = cli({"analyze", "--in", file, "--t", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("good-coloring yes") != std::string::npos);
  std::filesystem::remove(file);
}

TEST_CASE("improper coloring file is rejected") {
  const auto file = temp("broomlab_cli_bad.col");
  {
    std::ofstream out(file);
    out << "broomlab-coloring v1\nn 3 m 2 colors 1\n0 1 1\n1 2 1\n";
  }
  CHECK(cli({"verify", "--in", file, "--t", "3"}).code == broomlab::cli::kUsage);
  std::filesystem::remove(file);
}

TEST_CASE("search, certify and rerun") {
  const auto cert = temp("broomlab_cli_k6.cert");
  auto r = cli({"search", "--host", "clique:6", "--t", "4", "--out", cert});
  CHECK(r.code == 1);
  CHECK(r.out.find("result EXHAUSTED") != std::string::npos);
  r = cli({"certify", "--cert", cert, "--rerun"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rerun reproduces") != std::string::npos);
  std::filesystem::remove(cert);

  r = cli({"search", "--host", "clique:8", "--t", "6", "--out", cert});
  CHECK(r.code == 0);
  r = cli({"certify", "--cert", cert});
  CHECK(r.code == 0);
  CHECK(r.out.find("witness verifies") != std::string::npos);
  std::filesystem::remove(cert);
}

TEST_CASE("parallel search falls back to one worker") {
  auto r = cli({"search", "--host", "clique:6", "--t", "4", "--workers", "3"});
  CHECK(r.code == 1);
  CHECK(r.out.find("rerunning with 1 worker") != std::string::npos);
  r = cli({"search", "--host", "clique:8", "--t", "6", "--workers", "3"});
  CHECK(r.code == 0);
}

TEST_CASE("near-factorization mode") {
  auto r = cli({"search", "--host", "clique:7", "--t", "6", "--mode", "near-factorization"});
  CHECK(r.code == 0);
  r = cli({"search", "--host", "clique:8", "--t", "7", "--mode", "near-factorization"});
  CHECK(r.code == broomlab::cli::kUsage);
}

}

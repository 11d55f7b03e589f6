#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "eckart/expansion.hpp"

using namespace eckart;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

TEST(Cli, EvalExamples) {
  EXPECT_EQ(run({"eval", "--fn", "legendre-hyp", "--l", "1", "--m", "1", "--at", "1.0"}).out, "1.175201193643801\n");
  EXPECT_EQ(run({"eval", "--fn", "eigenfunction", "--l", "0", "--mt", "0", "--b", "1", "--at", "0,0"}).out, "1\n");
  EXPECT_EQ(run({"eval", "--fn", "romanovski", "--n", "1", "--alpha", "2", "--beta", "-1", "--at", "3"}).out, "-4\n");
}

TEST(Cli, EvalExactAndFloatPaths) {
  // P_2^{0,0}(1/2) = -1/8
  EXPECT_EQ(run({"eval", "--fn", "jacobi", "--n", "2", "--gamma", "0", "--delta", "0", "--at", "1/2"}).out, "-1/8\n");
  EXPECT_EQ(run({"eval", "--fn", "legendre-trig", "--l", "2", "--m", "0", "--at", "0"}).out, "1\n");
  EXPECT_EQ(run({"eval", "--fn", "legendre-hyp", "--l", "2", "--m", "0", "--at", "0"}).out, "1\n");
  // The Legendre value at t = 1 is irrational and printed as a float.
  const auto r = run({"eval", "--fn", "legendre-hyp", "--l", "2", "--m", "1", "--at", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["exact"].get<bool>());
  EXPECT_NEAR(j["re"].get<double>(), 3 * std::cosh(1.0) * std::sinh(1.0), 1e-14);
  // Harmonic with a phase yields a complex value.
  const auto h = run({"eval", "--fn", "harmonic", "--l", "1", "--m", "1", "--at", "1,0.5"});
  EXPECT_NE(h.out.find('i'), std::string::npos);
}

TEST(Cli, EvalErrors) {
  EXPECT_EQ(run({"eval", "--fn", "legendre-hyp", "--l", "1", "--m", "2", "--at", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--fn", "legendre-hyp", "--l", "1", "--m", "1", "--at", "-1"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--fn", "eigenfunction", "--l", "1", "--mt", "2", "--b", "1", "--at", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--fn", "nonsense", "--at", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--fn", "romanovski", "--n", "1", "--alpha", "x", "--at", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--fn", "legendre-hyp", "--l", "1", "--m", "1", "--at", "abc"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, CoeffsExamples) {
  EXPECT_EQ(run({"coeffs", "--l", "1", "--b", "1"}).out, "[1, -4/3]\n[0, 1]\n");
  const std::string l2 = run({"coeffs", "--l", "2", "--b", "1"}).out;
  EXPECT_EQ(l2.substr(0, l2.find('\n')), "[1, -8/15, 8/75]");
  EXPECT_EQ(run({"coeffs", "--l", "4", "--b", "0"}).out,
            "[1, 0, 0, 0, 0]\n[0, 1, 0, 0, 0]\n[0, 0, 1, 0, 0]\n[0, 0, 0, 1, 0]\n[0, 0, 0, 0, 1]\n");
}

TEST(Cli, CoeffsJsonRoundTrip) {
  const auto r = run({"--format", "json", "coeffs", "--l", "3", "--b", "3/2"});
  ASSERT_EQ(r.code, 0);
  const CoeffMatrix m = coeff_matrix_from_json(r.out);
  const CoeffMatrix expect = coeff_matrix(3, Rational(3, 2));
  EXPECT_EQ(m.entries, expect.entries);
  EXPECT_EQ(m.b, expect.b);
}

TEST(Cli, SpectrumExamples) {
  const auto csv = run({"spectrum", "--lmax", "2", "--b", "0", "--format", "csv"}).out;
  EXPECT_NE(csv.find("\n0,0,0,0,"), std::string::npos);
  EXPECT_NE(csv.find("\n1,0,0,-2,"), std::string::npos);
  EXPECT_NE(csv.find("\n2,0,0,-6,"), std::string::npos);
  const auto j = nlohmann::json::parse(run({"spectrum", "--lmax", "1", "--b", "1", "--format", "json"}).out);
  EXPECT_EQ(j["entries"][0]["epsilon"], "-4");
  EXPECT_EQ(j["entries"][1]["epsilon"], "-22/9");
}

TEST(Cli, VerifyExitCodes) {
  const auto rec = run({"verify", "--suite", "recurrences", "--lmax", "2"});
  EXPECT_EQ(rec.code, cli::kOk);
  EXPECT_EQ(lines(rec.out), 3);
  EXPECT_NE(rec.out.find("c=2/3"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "all", "--lmax", "0", "--b", "0"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "--suite", "recurrences", "--lmax", "3"}).code, cli::kVerifyFailed);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--suite", "eigen", "--grid-n", "4"}).code, cli::kUsage);
}

TEST(Cli, VerifyEigenWithOverrides) {
  const auto r = run({"verify", "--suite", "eigen", "--lmax", "2", "--b", "1/2,2", "--grid-n", "2001",
                      "--eta-max", "4", "--tol", "1e-6", "--format", "json"});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  bool saw_grid = false;
  for (const auto& rep : j["reports"]) saw_grid = saw_grid || rep["parameters"].get<std::string>().find("grid=2001") != std::string::npos;
  EXPECT_TRUE(saw_grid);
  // An absurd tolerance makes the numeric checks fail.
  EXPECT_EQ(run({"verify", "--suite", "eigen", "--lmax", "1", "--b", "1", "--tol", "1e-30"}).code, cli::kVerifyFailed);
}

TEST(Cli, MeshOutputAndFiles) {
  const auto csv = run({"mesh", "--kind", "hyperboloid-deformed", "--b", "0", "--nt", "3", "--nphi", "4"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(lines(csv.out), 13);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "x,y,z");
  EXPECT_EQ(csv.out.substr(6, 6), "0,0,1\n");
  const auto obj = run({"mesh", "--format", "text", "--nt", "3", "--nphi", "4"});
  EXPECT_NE(obj.out.find("\nf 1 5 6 2\n"), std::string::npos);
  const auto json = nlohmann::json::parse(run({"mesh", "--format", "json", "--kind", "sphere-free", "--nt", "2", "--nphi", "2"}).out);
  EXPECT_EQ(json["points"].size(), 4u);

  const auto path = std::filesystem::temp_directory_path() / "eckart_cli_mesh_test.csv";
  EXPECT_EQ(run({"mesh", "--out", path.string(), "--nt", "2", "--nphi", "2"}).code, 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "x,y,z");
  std::filesystem::remove(path);

  EXPECT_EQ(run({"mesh", "--out", "/nonexistent-dir/x.csv"}).code, cli::kUsage);
  EXPECT_EQ(run({"mesh", "--tmin", "2", "--tmax", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"mesh", "--nt", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"mesh", "--kind", "sphere-free", "--tmax", "4"}).code, cli::kUsage);
}

#include "ikdeg/census.hpp"
#include "ikdeg/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

using namespace ikdeg;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, SumBothPaths) {
  const Invocation r = run({"sum", "--p", "3", "--n", "1", "--b", "1", "--path", "both"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("paths agree: yes"), std::string::npos);
  EXPECT_NE(r.out.find("\"coeffs\": [-1, 0]"), std::string::npos);
  EXPECT_NE(r.out.find("degree: 1"), std::string::npos);
  EXPECT_NE(r.out.find("minpoly: x + 1"), std::string::npos);

  const Invocation zero = run({"sum", "--p", "3", "--n", "1", "--b", "2", "--path", "both"});
  EXPECT_NE(zero.out.find("\"coeffs\": [0, 0]"), std::string::npos);
}

TEST(Cli, SumJson) {
  const Invocation r = run({"sum", "--p", "7", "--n", "1", "--b", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["degree"], 3);
  EXPECT_EQ(doc["degree_bound"], 3);
  EXPECT_EQ(doc["embeddings"].size(), 6u);
}

TEST(Cli, InvalidParameters) {
  EXPECT_EQ(run({"verify", "degree", "--p", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
  EXPECT_EQ(run({"sum", "--p", "5", "--n", "1", "--b", "0"}).code, 2);
  EXPECT_EQ(run({"sum", "--p", "5", "--n", "4", "--b", "1", "--path", "brute", "--budget", "10"}).code, 2);
  EXPECT_EQ(run({"census", "--p", "5", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"census", "--p", "5", "--n", "1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, VerifyIdentitySmall) {
  const Invocation r = run({"verify", "identity", "--p", "5", "--n", "1"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("PASS identity", 0), 0u);
}

TEST(Cli, CensusRows) {
  const Invocation r7 = run({"census", "--p", "7", "--n", "1"});
  ASSERT_EQ(r7.code, 0) << r7.err;
  const auto rows7 = lines(r7.out);
  ASSERT_EQ(rows7.size(), 7u);
  EXPECT_EQ(rows7[0],
            "p,k_ext,q,n,b,degree,predicted_degree_bound,degree_matches,bound1_lhs,bound1_rhs,bound2_lhs,bound2_rhs,"
            "case_label,predicted_val,observed_val");
  // dlog order with generator 3: 1, 3, 2, 6, 4, 5
  const char* order[] = {"1", "3", "2", "6", "4", "5"};
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(rows7[static_cast<std::size_t>(i + 1)].rfind(std::string("7,1,7,1,") + order[i] + ",3,3,true,", 0), 0u)
        << rows7[static_cast<std::size_t>(i + 1)];
  }

  const auto rows5 = lines(run({"census", "--p", "5", "--n", "3"}).out);
  ASSERT_EQ(rows5.size(), 5u);
  for (std::size_t i = 1; i < rows5.size(); ++i) EXPECT_NE(rows5[i].find(",1,1,true,"), std::string::npos);
}

TEST(Cli, CensusExtensionJson) {
  const Invocation r = run({"census", "--p", "5", "--k", "2", "--n", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 24u);
  for (const auto& row : doc) {
    EXPECT_EQ(row["degree_matches"], "n/a");
    EXPECT_EQ(2 % row["degree"].get<int>(), 0);
    EXPECT_EQ(row["q"], 25);
  }
}

TEST(Cli, CensusDeterministicAcrossThreads) {
  const auto dir = std::filesystem::temp_directory_path() / "ikdeg_cli_test";
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "a.csv").string(), b = (dir / "b.csv").string();
  ASSERT_EQ(run({"census", "--p", "3", "--p-max", "13", "--n", "1", "--n-max", "3", "--threads", "1", "--out", a}).code, 0);
  ASSERT_EQ(run({"census", "--p", "3", "--p-max", "13", "--n", "1", "--n-max", "3", "--threads", "4", "--out", b}).code, 0);
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  std::filesystem::remove_all(dir);

  EXPECT_EQ(run({"census", "--p", "5", "--n", "1", "--out", "/nonexistent/dir/x.csv"}).code, 1);
}

TEST(Census, RowsSatisfyDegreeInvariants) {
  CensusParams params;
  params.primes = {2, 3, 5, 7, 11};
  params.k_ext = 1;
  params.ns = {1, 2, 3, 4};
  params.threads = 2;
  for (const auto& r : run_census(params)) {
    EXPECT_EQ(r.predicted_degree_bound % r.degree, 0);
    EXPECT_EQ(r.degree, r.predicted_degree_bound);
    EXPECT_EQ(r.bound2_lhs.has_value(), (r.n + 1) % r.p != 0);
  }
}

TEST(Census, DecimalFormat) {
  EXPECT_EQ(format_decimal(7.0), "7");
  EXPECT_EQ(format_decimal(3.19177448238123), "3.19177448238");
}

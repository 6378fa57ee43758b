#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>

#include "ngtrace/json_io.hpp"

using namespace ngtrace;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(NGTRACE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string quoted(const json& j) { return "'" + j.dump() + "'"; }

json example(Int m) {
  std::vector<Int> gens{7, m + 5, 2 * m + 3, 3 * m + 1};
  return {{"generators", gens}, {"order", gens}, {"m", {m, 1, 1, 1}}, {"ell", {1, 1, 1, 2}}};
}

json with_labels(json j, std::vector<int> I, std::vector<int> J) {
  j["I"] = I;
  j["J"] = J;
  return j;
}

}  // namespace

TEST(Cli, Sgp) {
  auto r = run("sgp -g 7,8,9,10 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["pseudo_frobenius"], json({11, 12, 13}));
  EXPECT_EQ(j["frobenius"], 13);

  EXPECT_EQ(json::parse(run("sgp -g 2,3 --format json").out)["symmetric"], true);

  auto t = json::parse(run("sgp '{\"generators\":[3,4,5]}' --format json").out);
  EXPECT_EQ(t["almost_symmetric"], true);
  EXPECT_EQ(t["type"], 2);

  EXPECT_EQ(run("sgp -g 4,6").code, 2);
  EXPECT_EQ(run("sgp -g 3,4,7").code, 2);
  auto table = run("sgp -g 7,8,9,10");
  EXPECT_NE(table.out.find("PF                {11,12,13}"), std::string::npos);
}

TEST(Cli, ClassifyExample) {
  auto r = run("classify " + quoted(example(3)) + " --format json");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["nearly_gorenstein"]["theorem"], true);
  EXPECT_EQ(j["nearly_gorenstein"]["oracle"], true);
  EXPECT_EQ(j["nearly_gorenstein"]["lambda"], true);
  EXPECT_EQ(j["almost_gorenstein"]["theorem"], false);
  EXPECT_EQ(j["case"], "CaseB");

  auto table = run("classify " + quoted(example(3)));
  EXPECT_NE(table.out.find("f = (t^7, t^8, t^9), j=1, f·N = 0 verified"), std::string::npos);
}

TEST(Cli, ClassifyAlmostGorenstein) {
  auto inst = search_instances({2, 1, 1}, {1, 1, 1}, 500).at(0);
  auto r = run("classify " + quoted(to_json(inst)) + " --format json --stretch-syzygy");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["generators"], json({3, 4, 5}));
  EXPECT_EQ(j["nearly_gorenstein"]["theorem"], true);
  EXPECT_EQ(j["nearly_gorenstein"]["syzygy"], true);
  EXPECT_EQ(j["almost_gorenstein"]["theorem"], true);
}

TEST(Cli, ExitCodes) {
  json bad = example(3);
  bad["m"] = {1, 1, 1, 1};
  EXPECT_EQ(run("classify " + quoted(bad)).code, 3);
  EXPECT_EQ(run("classify '{\"order\":[7,8'").code, 2);
  EXPECT_EQ(run("trace " + quoted(example(3)) + " --method syzygy").code, 2);
  EXPECT_EQ(run("search --m 1,1,1 --ell 1,1,1 --bound 501").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
}

TEST(Cli, Stdin) {
  std::string path = ::testing::TempDir() + "ngtrace_stdin.json";
  {
    FILE* f = fopen(path.c_str(), "w");
    fputs(example(3).dump().c_str(), f);
    fclose(f);
  }
  auto piped = run("classify --format json < " + path);
  ASSERT_EQ(piped.code, 0);
  EXPECT_EQ(json::parse(piped.out)["case"], "CaseB");
  auto from_file = run("trace " + path + " --format json");
  ASSERT_EQ(from_file.code, 0);
  auto j = json::parse(from_file.out);
  EXPECT_EQ(j["oracle"], j["lambda"]);
}

TEST(Cli, Search) {
  auto r = run("search --m 1,1,1 --ell 1,1,1 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out), json::array());
  auto hit = json::parse(run("search --m 3,1,1,1 --ell 1,1,1,2 --format json").out);
  ASSERT_EQ(hit.size(), 1u);
  EXPECT_EQ(hit[0]["order"], json({7, 8, 9, 10}));
  EXPECT_EQ(hit[0]["nearly_gorenstein"], true);
  EXPECT_NE(run("search --m 3,1,1,1 --ell 1,1,1,2").out.find("order,m,ell"), std::string::npos);
}

TEST(Cli, Higher) {
  auto base = search_instances({3, 1, 1, 1}, {1, 1, 2, 1}, 500).at(0);
  auto r = run("higher " + quoted(with_labels(to_json(base), {1}, {3})) + " --format json");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["rule"], "newnonAGcase(2b)");
  EXPECT_EQ(j["nearly_gorenstein"], true);
  EXPECT_EQ(j["witness"], "verified");
  EXPECT_EQ(j["dimension"], 3);

  auto three = json::parse(run("higher " + quoted(with_labels(to_json(base), {1}, {2, 3})) + " --format json").out);
  EXPECT_EQ(three["rule"], "newnonAGcase(3)");
  EXPECT_EQ(three["nearly_gorenstein"], false);
  EXPECT_EQ(run("verify " + quoted(with_labels(to_json(base), {1}, {2, 3}))).code, 4);

  std::optional<DeterminantalInstance> other;
  for (Int x = 1; x <= 3 && !other; ++x)
    for (const auto& inst : search_instances({1, 2, 1, x}, {2, 1, 1, 3}, 500))
      if (base_case_of(inst.form()) == BaseCase::Other) other = inst;
  ASSERT_TRUE(other.has_value());
  EXPECT_EQ(run("higher " + quoted(with_labels(to_json(*other), {1}, {}))).code, 4);
}

TEST(Cli, Verify) {
  auto r = run("verify " + quoted(example(4)) + " --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["rows"].size(), 2u);
}

TEST(Cli, CorpusSampleIsDeterministic) {
  std::string args = "corpus --sizes 3,4 --sample 200 --seed 11 --format json";
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  auto ja = json::parse(a.out), jb = json::parse(b.out);
  EXPECT_EQ(ja["instances"], jb["instances"]);
  EXPECT_EQ(ja["agreement"], jb["agreement"]);
  EXPECT_GT(ja["instances"].get<int>(), 0);
  auto other = json::parse(run("corpus --sizes 3,4 --sample 200 --seed 12 --format json").out);
  EXPECT_EQ(other["tuples"], 200);
}

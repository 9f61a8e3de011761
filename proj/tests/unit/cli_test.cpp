#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dlcf/cli/run.hpp"

namespace dlcf::cli {
namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dlcf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("dlcf_cli_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

TEST(Cli, VerifyDecompositionReport) {
  const auto r = run_cli({"-n", "2", "-q", "3", "verify", "--suite", "decomposition"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("8 lines / 8 classes, rank 8"), std::string::npos) << r.out;
}

TEST(Cli, IndicatorResidualForRationalUnipotentClass) {
  const auto r = run_cli({"-f", "SL", "-q", "5", "indicator", "--class", "u+1.1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_FALSE(j["residual"]["zero"].get<bool>());
  EXPECT_TRUE(j["residual"].contains("function"));
  ASSERT_EQ(j["residual"]["cuspidal_coeffs"].size(), 1u);
  EXPECT_EQ(j["residual"]["cuspidal_coeffs"][0]["line"], "cuspidal(+1)");
  EXPECT_EQ(cyclo_from_json(j["residual"]["cuspidal_coeffs"][0]["coeff"]), Cyclo(Rational(1, 2)));
  EXPECT_TRUE(j["reconstructed"].get<bool>());
}

TEST(Cli, GeometricIndicatorHasNoResidual) {
  const auto r = run_cli({"-f", "SL", "-q", "5", "indicator", "--class", "U+1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["residual"]["zero"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"-q", "3", "dlchar", "--torus", "(1,2)"}).code, 2);
  EXPECT_EQ(run_cli({"-q", "3", "dlchar", "--torus", "1,a"}).code, 2);
  EXPECT_EQ(run_cli({"-q", "3", "dlchar", "--torus", "3"}).code, 2);
  EXPECT_EQ(run_cli({"-q", "3", "dlchar", "--torus", "2", "--theta", "1,1"}).code, 2);
  EXPECT_EQ(run_cli({"-q", "6", "classes"}).code, 2);
  EXPECT_EQ(run_cli({"-f", "SL", "-q", "4", "classes"}).code, 2);
  EXPECT_EQ(run_cli({"-q", "3", "frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"classes"}).code, 2);
  EXPECT_EQ(run_cli({"-q", "3", "verify", "--suite", "everything"}).code, 2);
  EXPECT_EQ(run_cli({"-q", "3", "indicator", "--class", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"-q", "5", "table"}).code, 2);  // opt-in group
  EXPECT_EQ(run_cli({"-q", "16", "table"}).code, 2);  // above the explicit-group bound
  const auto r = run_cli({"-q", "3", "dlchar", "--torus", "(1,2)"});
  EXPECT_NE(r.err.find("malformed partition"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Help) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  for (const auto& fmt : {"table", "csv", "json"}) {
    const std::vector<std::string> args{"-n", "3", "-q", "2", "lines", "--values", "--format", fmt};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out) << fmt;
  }
}

TEST(Cli, CsvHeaderNamesClassesInCanonicalOrder) {
  const auto r = run_cli({"-q", "3", "dlchar", "--torus", "2", "--theta", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto header = r.out.substr(0, r.out.find('\n'));
  std::string expect = "function";
  for (const auto& c : Group::create({Family::GL, 2, 3})->classes()) expect += "," + csv_field(c.label);
  EXPECT_EQ(header, expect);
}

TEST(Cli, TableAppendsApproximationOnlyForIrrationalValues) {
  const auto r = run_cli({"-q", "3", "dlchar", "--torus", "2", "--theta", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("≈ 1.41421i"), std::string::npos) << r.out;
  const auto c = run_cli({"-q", "3", "dlchar", "--torus", "2", "--theta", "1", "--format", "csv"});
  EXPECT_EQ(c.out.find("≈"), std::string::npos);
}

TEST(Cli, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"-q", "3", "dlchar", "--torus", "2", "--theta", "1", "--format", "json"},
           {"-f", "SL", "-q", "7", "dlchar", "--torus", "coxeter", "--theta", "3", "--format", "json"},
           {"-n", "3", "-q", "4", "dlchar", "--torus", "3", "--theta", "5", "--format", "json"}}) {
    const auto r = run_cli(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto emitted = Json::parse(r.out)["function"];
    EXPECT_EQ(function_to_json(function_from_json(emitted)).dump(), emitted.dump());
  }
  // a value with a non-trivial common level
  const auto g = Group::create({Family::GL, 2, 3});
  ClassFunction f(g);
  f[0] = Cyclo(Rational(-3, 7));
  f[5] = Cyclo::zeta(8) + Cyclo::zeta(3);
  const auto j = function_to_json(f);
  EXPECT_EQ(j["values"][0]["level"], 24u);
  EXPECT_EQ(j["values"][0]["coeffs"][0], "-3/7");
  EXPECT_EQ(function_from_json(j), f);
  EXPECT_EQ(function_to_json(function_from_json(j)).dump(), j.dump());
}

TEST(Cli, MalformedJsonRejected) {
  EXPECT_THROW(cyclo_from_json(Json::parse(R"({"level": 4, "coeffs": ["1/2"]})")), UsageError);
  EXPECT_THROW(cyclo_from_json(Json::parse(R"({"level": 1, "coeffs": ["1/x"]})")), UsageError);
  EXPECT_THROW(cyclo_from_json(Json::parse(R"({"level": 1, "coeffs": ["1/0"]})")), UsageError);
  EXPECT_THROW(function_from_json(Json::parse(R"({"group": {"family": "GL", "n": 2, "q": 3}, "values": []})")), UsageError);
}

TEST(Cli, InduceFromJsonInput) {
  const auto dir = scratch("induce");
  const auto m = Group::create({Family::GL, 3, 2})->levi({2, 1});
  const auto f = dl_character(m, TorusType{TorusType::SL2Kind::None, {Partition{2}, Partition{1}}}, {1, 0});
  {
    std::ofstream(dir / "f.json") << function_to_json(f).dump();
  }
  const auto r = run_cli({"-n", "3", "-q", "2", "induce", "--levi", "2,1", "--input", (dir / "f.json").string(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto out = function_from_json(Json::parse(r.out)["function"]);
  EXPECT_EQ(out, dl_character(out.group(), TorusType::gl(Partition{2, 1}), {1, 0}));
  // the input must live on the named Levi
  EXPECT_EQ(run_cli({"-n", "3", "-q", "2", "induce", "--levi", "1,2", "--input", (dir / "f.json").string()}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, InduceFromTorusAgreesWithDirectCharacter) {
  const auto r = run_cli({"-n", "3", "-q", "3", "induce", "--levi", "2,1", "--torus", "(2)x(1)", "--theta", "1,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["matches_torus_induction"].get<bool>());
}

TEST(Cli, VerifyAllSuites) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"-n", "3", "-q", "2", "verify"}, {"-f", "SL", "-q", "5", "verify"}}) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.code, 0) << r.out << r.err;
  }
  const auto r = run_cli({"-n", "3", "-q", "3", "verify", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["suites"][3].contains("skipped"));  // oracle on GL_3(F_3) needs --opt-in
  EXPECT_EQ(run_cli({"-n", "3", "-q", "3", "verify", "--suite", "oracle"}).code, 2);
}

TEST(Cli, ListingCommands) {
  EXPECT_NE(run_cli({"-n", "3", "-q", "2", "classes"}).out.find("6 classes"), std::string::npos);
  const auto s = run_cli({"-f", "SL", "-q", "7", "strata", "--format", "json"});
  EXPECT_EQ(Json::parse(s.out)["strata"].size(), 5u);
  const auto t = run_cli({"-n", "3", "-q", "2", "tori", "--format", "csv"});
  EXPECT_NE(t.out.find("(3),7,3,3,2"), std::string::npos) << t.out;
  const auto tab = run_cli({"-q", "3", "table", "--format", "json"});
  EXPECT_EQ(Json::parse(tab.out)["degrees"], Json::parse("[1,1,2,2,2,3,3,4]"));
  const auto mk = run_cli({"-q", "3", "mackey", "--torus", "2", "--theta", "1", "--torus2", "2", "--theta2", "3", "--format", "json"});
  EXPECT_EQ(Json::parse(mk.out)["weyl_count"], 1);
  EXPECT_EQ(run_cli({"-n", "3", "-q", "2", "mackey"}).code, 0);
}

TEST(Cli, GreenCacheRoundTripAndCorruption) {
  const auto dir = scratch("cache");
  const std::vector<std::string> args{"-n", "3", "-q", "2", "--cache-dir", dir.string(), "dlchar", "--torus", "2,1", "--theta", "1,0"};
  const auto first = run_cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  const auto file = green_cache_path(dir, 3);
  ASSERT_TRUE(std::filesystem::exists(file));
  // no temporaries left behind
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);

  GreenCache fresh;
  const auto load = load_green_cache(dir, 3, fresh);
  EXPECT_TRUE(load.file_found);
  EXPECT_GT(load.loaded, 0u);
  EXPECT_EQ(load.rejected, 0u);
  for (const auto& [key, poly] : fresh.snapshot()) EXPECT_EQ(poly, compute_green_polynomial(key.first, key.second));

  // tamper with one coefficient: the entry must be dropped, not trusted
  auto doc = Json::parse(std::ifstream(file));
  auto& coeffs = doc["entries"][0]["coeffs"];
  coeffs[0] = coeffs[0].get<long>() + 1;
  std::ofstream(file) << doc.dump();
  GreenCache tampered;
  const auto load2 = load_green_cache(dir, 3, tampered);
  EXPECT_EQ(load2.rejected, 1u);
  EXPECT_EQ(load2.loaded, load.loaded - 1);

  EXPECT_EQ(run_cli(args).out, first.out);
  std::ofstream(file) << "{ not json";
  EXPECT_EQ(run_cli(args).out, first.out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, CacheDirFlagOverridesEnvironment) {
  const auto env_dir = scratch("env"), flag_dir = scratch("flag");
  ::setenv(kCacheEnv, env_dir.string().c_str(), 1);
  EXPECT_EQ(*resolve_cache_dir(std::nullopt), env_dir);
  EXPECT_EQ(*resolve_cache_dir(flag_dir.string()), flag_dir);
  ::unsetenv(kCacheEnv);
  EXPECT_FALSE(resolve_cache_dir(std::nullopt).has_value());
  std::filesystem::remove_all(env_dir);
  std::filesystem::remove_all(flag_dir);
}

}  // namespace
}  // namespace dlcf::cli

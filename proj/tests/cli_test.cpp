#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "support/fixtures.hpp"
#include "umlf/parse.hpp"
#include "umlf/print.hpp"

namespace umlf {
namespace {

namespace fs = std::filesystem;

using test::fixture_path;
using test::fixture_text;
using test::load_fixture;
using test::read_file;

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args, const std::string& stdin_text = {}) {
  std::string command = "UMLF_COLOR=0 " + std::string(UMLF_CLI_BIN) + " " + args;
  if (!stdin_text.empty()) {
    const std::string feed = fs::temp_directory_path() / "umlf_cli_stdin.txt";
    std::ofstream out(feed, std::ios::binary);
    out << stdin_text;
    out.close();
    command += " < " + feed;
  }
  command += " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string output;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

class CliWorkspace : public ::testing::Test {
 protected:
  void SetUp() override {
    std::string pattern =
        (fs::temp_directory_path() / "umlf_cli_XXXXXX").string();
    ASSERT_NE(mkdtemp(pattern.data()), nullptr);
    dir_ = pattern;
  }

  void TearDown() override {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  std::string path(const std::string& name) const {
    return (fs::path(dir_) / name).string();
  }

  std::string write(const std::string& name, const std::string& contents) const {
    const std::string p = path(name);
    std::ofstream out(p, std::ios::binary);
    out << contents;
    return p;
  }

 private:
  std::string dir_;
};

using Cli = CliWorkspace;

TEST_F(Cli, ValidateCleanModel) {
  const RunResult r = run("validate " + fixture_path("webedu.umlf"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "");
}

TEST_F(Cli, ValidateReportsErrors) {
  const std::string bad = write("bad.umlf",
                                "model M {\n  class A {\n    tags { variable }\n"
                                "  }\n}\n");
  const RunResult r = run("validate " + bad);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.output, "error UMLF-E001 M.A: {variable} applies only to methods\n");
}

TEST_F(Cli, WarningsKeepExitZero) {
  const std::string warned = write(
      "warned.umlf",
      "model M {\n"
      "  class Base { }\n"
      "  class Impl : Base { }\n"
      "  generalization Impl -> Base { tags { incomplete, static } }\n"
      "}\n");
  const RunResult r = run("validate " + warned);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            "warning UMLF-W001 M.Base: extension parent declares no abstract "
            "methods\n");
}

TEST_F(Cli, ParseErrorsCarryFilePositions) {
  const std::string broken = write("broken.umlf", "model M {\n  klass A { }\n}\n");
  const RunResult r = run("validate " + broken);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.output,
            broken + ":2:3: expected a declaration, found 'klass'\n");
}

TEST_F(Cli, MissingFileIsAUsageError) {
  const RunResult r = run("validate " + path("ghost.umlf"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("cannot read"), std::string::npos);
}

TEST_F(Cli, MissingSubcommandIsAUsageError) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate x").exit_code, 2);
}

TEST_F(Cli, PointsListsTheThreeHotSpots) {
  const RunResult r = run("points " + fixture_path("webedu.umlf"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            "variable-method dynamic WebEdu.SelectCourse.selectCourse\n"
            "extensible-class dynamic WebEdu.ShowCourse\n"
            "extensible-interface static WebEdu.rel[1] (Student -> Actor)\n");
}

TEST_F(Cli, PointsRefusesInvalidModels) {
  const std::string bad = write("bad.umlf",
                                "model M {\n  class A {\n    tags { variable }\n"
                                "  }\n}\n");
  const RunResult r = run("points " + bad);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("UMLF-E001"), std::string::npos);
}

TEST_F(Cli, TransformWritesTheRewrittenModel) {
  const std::string out = path("framework.umlf");
  const RunResult r = run("transform " + fixture_path("webedu.umlf") +
                          " --bindings " + fixture_path("webedu.bind") + " -o " +
                          out);
  EXPECT_EQ(r.exit_code, 0);
  ParseResult parsed = parse_model(read_file(out));
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(*parsed.model, load_fixture("webedu_framework.umlf"));

  // Same rewrite to stdout, byte-identical to the file.
  const RunResult to_stdout = run("transform " + fixture_path("webedu.umlf") +
                                  " --bindings " + fixture_path("webedu.bind"));
  EXPECT_EQ(to_stdout.exit_code, 0);
  EXPECT_EQ(to_stdout.output, read_file(out));
}

TEST_F(Cli, TransformReportsPlanErrors) {
  const std::string plan = write("partial.bind",
                                 "SelectCourse.selectCourse => strategy\n");
  const RunResult r = run("transform " + fixture_path("webedu.umlf") +
                          " --bindings " + plan);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("no binding covers variation point"), std::string::npos);
}

TEST_F(Cli, GenerateEmitsOneSkeletonPerClass) {
  const std::string out_dir = path("skel");
  const RunResult r =
      run("generate " + fixture_path("webedu_app.umlf") + " -o " + out_dir);
  EXPECT_EQ(r.exit_code, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(out_dir)) {
    EXPECT_EQ(entry.path().extension(), ".skel");
    ++files;
    EXPECT_NE(r.output.find("wrote " + entry.path().string()),
              std::string::npos);
  }
  EXPECT_EQ(files, 9);
  EXPECT_NE(read_file(out_dir + "/SimpleSelect.skel")
                .find("// application class"),
            std::string::npos);
}

TEST_F(Cli, GenerateIsDeterministic) {
  const std::string first = path("first");
  const std::string second = path("second");
  ASSERT_EQ(run("generate " + fixture_path("webedu.umlf") + " -o " + first)
                .exit_code,
            0);
  ASSERT_EQ(run("generate " + fixture_path("webedu.umlf") + " -o " + second)
                .exit_code,
            0);
  for (const auto& entry : fs::directory_iterator(first)) {
    const std::string name = entry.path().filename().string();
    EXPECT_EQ(read_file(entry.path().string()),
              read_file(second + "/" + name))
        << name;
  }
}

TEST_F(Cli, CheckAcceptsACleanSpec) {
  const RunResult r = run("check " + fixture_path("webedu_framework.umlf") +
                          " --spec " + fixture_path("simple_select.inst"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "");
}

TEST_F(Cli, CheckReportsRestrictionViolations) {
  const RunResult r = run("check " + fixture_path("webedu_framework.umlf") +
                          " --spec " + fixture_path("bad_write.inst"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.output,
            "error UMLF-E101 WebEdu.DailyTips.tipOfTheDay: "
            "writes preserved attribute 'fSelectedCourse'\n");
}

TEST_F(Cli, CheckReportsTraceViolations) {
  const RunResult r = run("check " + fixture_path("webedu_framework.umlf") +
                          " --spec " + fixture_path("bad_trace.inst"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find(
                "error UMLF-E202 WebEdu.EagerSelect.selectCourse: trace violates "
                "pattern 'selection' at position 0: expected displayLoginPage or "
                "showSelectionPage"),
            std::string::npos);
}

TEST_F(Cli, CheckRefusesUntransformedFrameworks) {
  const RunResult r = run("check " + fixture_path("webedu.umlf") + " --spec " +
                          fixture_path("simple_select.inst"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("UMLF-E200"), std::string::npos);
}

TEST_F(Cli, InstantiateBuildsTheApplicationModel) {
  const std::string out = path("app.umlf");
  const RunResult r = run("instantiate " + fixture_path("webedu_framework.umlf") +
                          " --spec " + fixture_path("simple_select.inst") +
                          " -o " + out);
  EXPECT_EQ(r.exit_code, 0);
  ParseResult parsed = parse_model(read_file(out));
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(*parsed.model, load_fixture("webedu_app.umlf"));
}

TEST_F(Cli, InstantiateNeedsASpecSource) {
  const RunResult r = run("instantiate " + fixture_path("webedu_framework.umlf"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("--spec or --interactive"), std::string::npos);
}

TEST_F(Cli, InstantiateStopsOnSpecErrors) {
  const RunResult r = run("instantiate " + fixture_path("webedu_framework.umlf") +
                          " --spec " + fixture_path("bad_write.inst") + " -o " +
                          path("never.umlf"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("UMLF-E101"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("never.umlf")));
}

TEST_F(Cli, EmitSpecReplaysTheInputSpec) {
  const std::string replay = path("replay.inst");
  const RunResult r = run("instantiate " + fixture_path("webedu_framework.umlf") +
                          " --spec " + fixture_path("simple_select.inst") +
                          " --emit-spec " + replay + " -o " + path("app.umlf"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(read_file(replay),
            print_instantiation_spec(test::load_spec_fixture("simple_select.inst")));
}

TEST_F(Cli, WizardDrivesAnInteractiveInstantiation) {
  const std::string script =
      "WizardApp\n"          // instance name
      "\n"                   // no Actor subclass
      "SimpleSelect\n"       // subclass SelectCourseStrategy
      "\n"                   // reads
      "\n"                   // writes
      "showSelectionPage\n"  // trace
      "\n"                   // no new methods
      "\n"                   // no further strategy subclasses
      "\n";                  // no ShowCourseHook subclass
  const std::string replay = path("wizard.inst");
  const std::string out = path("wizard_app.umlf");
  const RunResult r = run("instantiate " + fixture_path("webedu_framework.umlf") +
                              " --interactive --emit-spec " + replay + " -o " + out,
                          script);
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("framework WebEdu: 3 obligations"), std::string::npos);
  EXPECT_NE(r.output.find("abstract method selectCourse(s: Student): Course"),
            std::string::npos);

  EXPECT_EQ(read_file(replay),
            "instance WizardApp of WebEdu {\n"
            "  class SimpleSelect : SelectCourseStrategy {\n"
            "    method selectCourse(s: Student): Course {\n"
            "      trace [ showSelectionPage ]\n"
            "    }\n"
            "  }\n"
            "}\n");

  ParseResult parsed = parse_model(read_file(out));
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(parsed.model->instance_name, "WizardApp");
  ASSERT_NE(parsed.model->find_class("SimpleSelect"), nullptr);
}

TEST_F(Cli, WizardFailsWhenInputEndsEarly) {
  const RunResult r = run("instantiate " + fixture_path("webedu_framework.umlf") +
                              " --interactive",
                          "OnlyAName\n");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("input ended before the wizard finished"),
            std::string::npos);
}

}  // namespace
}  // namespace umlf

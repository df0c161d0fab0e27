// Microbenchmarks over the course enrolment fixture: parsing, printing,
// validation, classification, the full rewrite, conformance walks, trace
// expansion, code generation, and instantiation.

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "umlf/codegen.hpp"
#include "umlf/conformance.hpp"
#include "umlf/instantiate.hpp"
#include "umlf/parse.hpp"
#include "umlf/print.hpp"
#include "umlf/transform.hpp"
#include "umlf/validate.hpp"
#include "umlf/variation.hpp"

namespace {

using namespace umlf;

std::string read_fixture(const std::string& name) {
  const std::string path = std::string(UMLF_BENCH_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const std::string& design_text() {
  static const std::string text = read_fixture("webedu.umlf");
  return text;
}

const Model& design_model() {
  static const Model model = *parse_model(design_text()).model;
  return model;
}

const std::vector<Binding>& rewrite_plan() {
  static const std::vector<Binding> plan =
      parse_bindings(read_fixture("webedu.bind"));
  return plan;
}

const Model& framework_model() {
  static const Model model = transform_all(design_model(), rewrite_plan());
  return model;
}

const InstantiationSpec& app_spec() {
  static const InstantiationSpec spec =
      *parse_instantiation_spec(read_fixture("full_app.inst")).spec;
  return spec;
}

SequencePattern wide_pattern(int optionals) {
  SequencePattern pattern;
  pattern.name = "wide";
  pattern.owner_class = "C";
  pattern.owner_method = "m";
  pattern.events.push_back({"anchor", false});
  for (int i = 0; i < optionals; ++i)
    pattern.events.push_back({"o" + std::to_string(i), true});
  return pattern;
}

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    ParseResult result = parse_model(design_text());
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Parse);

void BM_Print(benchmark::State& state) {
  for (auto _ : state) {
    std::string text = print_model(design_model());
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_Print);

void BM_Validate(benchmark::State& state) {
  for (auto _ : state) {
    std::vector<Diagnostic> findings = validate(design_model());
    benchmark::DoNotOptimize(findings);
  }
}
BENCHMARK(BM_Validate);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) {
    std::vector<VariationPoint> points = classify_variation_points(design_model());
    benchmark::DoNotOptimize(points);
  }
}
BENCHMARK(BM_Classify);

void BM_TransformAll(benchmark::State& state) {
  for (auto _ : state) {
    Model framework = transform_all(design_model(), rewrite_plan());
    benchmark::DoNotOptimize(framework);
  }
}
BENCHMARK(BM_TransformAll);

void BM_Conforms(benchmark::State& state) {
  const SequencePattern pattern = wide_pattern(static_cast<int>(state.range(0)));
  Trace trace;
  for (const Event& event : pattern.events) trace.events.push_back(event.name);
  for (auto _ : state) {
    ConformanceResult result = conforms(trace, pattern);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Conforms)->Arg(4)->Arg(8)->Arg(15);

void BM_Expand(benchmark::State& state) {
  const SequencePattern pattern = wide_pattern(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::vector<Trace> traces = expand(pattern);
    benchmark::DoNotOptimize(traces);
  }
}
BENCHMARK(BM_Expand)->Arg(4)->Arg(8)->Arg(12);

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) {
    FileSet files = generate(framework_model());
    benchmark::DoNotOptimize(files);
  }
}
BENCHMARK(BM_Generate);

void BM_Instantiate(benchmark::State& state) {
  for (auto _ : state) {
    InstantiationResult result = instantiate(framework_model(), app_spec());
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Instantiate);

}  // namespace

BENCHMARK_MAIN();

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "umlf/codegen.hpp"
#include "umlf/instantiate.hpp"
#include "umlf/parse.hpp"
#include "umlf/print.hpp"
#include "umlf/transform.hpp"
#include "umlf/validate.hpp"
#include "umlf/variation.hpp"
#include "wizard.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

bool color_enabled() {
  const char* setting = std::getenv("UMLF_COLOR");
  if (setting != nullptr) return std::string_view(setting) != "0";
  return isatty(fileno(stdout)) != 0;
}

std::string styled(const umlf::Diagnostic& d) {
  const std::string text = umlf::render(d);
  if (!color_enabled()) return text;
  const bool error = d.severity == umlf::Diagnostic::Severity::Error;
  const std::size_t head = error ? 5 : 7;  // "error" / "warning"
  return std::string(error ? "\x1b[31m" : "\x1b[33m") + text.substr(0, head) +
         "\x1b[0m" + text.substr(head);
}

int print_diagnostics(const std::vector<umlf::Diagnostic>& diagnostics) {
  for (const umlf::Diagnostic& d : diagnostics)
    std::cout << styled(d) << "\n";
  return umlf::has_errors(diagnostics) ? kExitDiagnostics : kExitOk;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return false;
  }
  out << contents;
  return out.good();
}

// Parses a model file, reporting errors as "<path>:<line>:<col>: ...".
std::optional<umlf::Model> load_model(const std::string& path, int& exit_code) {
  const std::optional<std::string> source = read_file(path);
  if (!source) {
    exit_code = kExitUsage;
    return std::nullopt;
  }
  umlf::ParseResult result = umlf::parse_model(*source);
  if (!result.ok()) {
    for (const umlf::ParseError& error : result.errors)
      std::cout << path << ":" << umlf::render(error) << "\n";
    exit_code = kExitDiagnostics;
    return std::nullopt;
  }
  return std::move(result.model);
}

std::optional<umlf::InstantiationSpec> load_spec(const std::string& path,
                                                 int& exit_code) {
  const std::optional<std::string> source = read_file(path);
  if (!source) {
    exit_code = kExitUsage;
    return std::nullopt;
  }
  umlf::SpecParseResult result = umlf::parse_instantiation_spec(*source);
  if (!result.ok()) {
    for (const umlf::ParseError& error : result.errors)
      std::cout << path << ":" << umlf::render(error) << "\n";
    exit_code = kExitDiagnostics;
    return std::nullopt;
  }
  return std::move(result.spec);
}

bool emit_model(const umlf::Model& model, const std::string& out_path) {
  const std::string text = umlf::print_model(model);
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  return write_file(out_path, text);
}

int run_validate(const std::string& model_path) {
  int exit_code = kExitOk;
  const std::optional<umlf::Model> model = load_model(model_path, exit_code);
  if (!model) return exit_code;
  return print_diagnostics(umlf::validate(*model));
}

int run_points(const std::string& model_path) {
  int exit_code = kExitOk;
  const std::optional<umlf::Model> model = load_model(model_path, exit_code);
  if (!model) return exit_code;
  const std::vector<umlf::Diagnostic> diagnostics = umlf::validate(*model);
  if (umlf::has_errors(diagnostics)) return print_diagnostics(diagnostics);
  for (const umlf::VariationPoint& point : umlf::classify_variation_points(*model)) {
    std::cout << umlf::to_keyword(point.kind) << " "
              << umlf::to_keyword(point.timing) << " "
              << umlf::locus_path(*model, point);
    if (point.kind == umlf::VariationPoint::Kind::ExtensibleInterface) {
      const umlf::Relationship& rel = model->relationships[point.relationship_index];
      std::cout << " (" << rel.source << " -> " << rel.target << ")";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_transform(const std::string& model_path, const std::string& bindings_path,
                  const std::string& out_path) {
  int exit_code = kExitOk;
  const std::optional<umlf::Model> model = load_model(model_path, exit_code);
  if (!model) return exit_code;
  std::vector<umlf::Binding> bindings;
  if (!bindings_path.empty()) {
    const std::optional<std::string> text = read_file(bindings_path);
    if (!text) return kExitUsage;
    bindings = umlf::parse_bindings(*text);
  }
  const umlf::Model transformed = umlf::transform_all(*model, bindings);
  return emit_model(transformed, out_path) ? kExitOk : kExitUsage;
}

int run_generate(const std::string& model_path, const std::string& out_dir) {
  int exit_code = kExitOk;
  const std::optional<umlf::Model> model = load_model(model_path, exit_code);
  if (!model) return exit_code;
  const umlf::FileSet files = umlf::generate(*model);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cannot create " << out_dir << ": " << ec.message() << "\n";
    return kExitUsage;
  }
  for (const auto& [name, contents] : files) {
    const std::string path = (fs::path(out_dir) / name).string();
    if (!write_file(path, contents)) return kExitUsage;
    std::cout << "wrote " << path << "\n";
  }
  return kExitOk;
}

int run_check(const std::string& model_path, const std::string& spec_path) {
  int exit_code = kExitOk;
  const std::optional<umlf::Model> model = load_model(model_path, exit_code);
  if (!model) return exit_code;
  const std::optional<umlf::InstantiationSpec> spec =
      load_spec(spec_path, exit_code);
  if (!spec) return exit_code;
  return print_diagnostics(umlf::verify_instance(*model, *spec));
}

int run_instantiate(const std::string& model_path, const std::string& spec_path,
                    bool interactive, const std::string& emit_spec_path,
                    const std::string& out_path) {
  int exit_code = kExitOk;
  const std::optional<umlf::Model> model = load_model(model_path, exit_code);
  if (!model) return exit_code;

  std::optional<umlf::InstantiationSpec> spec;
  if (interactive) {
    spec = umlf::cli::run_wizard(*model, std::cin, std::cout);
    if (!spec) return kExitDiagnostics;
  } else {
    spec = load_spec(spec_path, exit_code);
    if (!spec) return exit_code;
  }

  if (!emit_spec_path.empty() &&
      !write_file(emit_spec_path, umlf::print_instantiation_spec(*spec)))
    return kExitUsage;

  const umlf::InstantiationResult result = umlf::instantiate(*model, *spec);
  const int diag_code = print_diagnostics(result.diagnostics);
  if (!result.ok()) return diag_code;
  return emit_model(*result.model, out_path) ? diag_code : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UML-F framework modelling toolkit"};
  app.require_subcommand(1);

  std::string model_path, bindings_path, spec_path, out_path, emit_spec_path;
  bool interactive = false;

  CLI::App* validate = app.add_subcommand("validate", "Check tag semantics");
  validate->add_option("model", model_path, "model file")->required();

  CLI::App* points = app.add_subcommand("points", "List variation points");
  points->add_option("model", model_path, "model file")->required();

  CLI::App* transform =
      app.add_subcommand("transform", "Rewrite variation points");
  transform->add_option("model", model_path, "model file")->required();
  transform->add_option("--bindings", bindings_path,
                        "variation point to implementation model bindings");
  transform->add_option("-o,--output", out_path, "output model file");

  CLI::App* generate = app.add_subcommand("generate", "Emit skeleton files");
  generate->add_option("model", model_path, "model file")->required();
  generate->add_option("-o,--output", out_path, "output directory")->required();

  CLI::App* instantiate =
      app.add_subcommand("instantiate", "Build an application instance");
  instantiate->add_option("model", model_path, "framework model file")->required();
  instantiate->add_option("--spec", spec_path, "instantiation spec file");
  instantiate->add_flag("--interactive", interactive,
                        "prompt for the instantiation instead of reading a spec");
  instantiate->add_option("--emit-spec", emit_spec_path,
                          "write the (possibly interactive) spec here");
  instantiate->add_option("-o,--output", out_path, "output model file");

  CLI::App* check = app.add_subcommand("check", "Verify a spec without building");
  check->add_option("model", model_path, "framework model file")->required();
  check->add_option("--spec", spec_path, "instantiation spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (instantiate->parsed() && !interactive && spec_path.empty()) {
    std::cerr << "instantiate needs --spec or --interactive\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(model_path);
    if (points->parsed()) return run_points(model_path);
    if (transform->parsed())
      return run_transform(model_path, bindings_path, out_path);
    if (generate->parsed()) return run_generate(model_path, out_path);
    if (instantiate->parsed())
      return run_instantiate(model_path, spec_path, interactive, emit_spec_path,
                             out_path);
    if (check->parsed()) return run_check(model_path, spec_path);
  } catch (const umlf::ModelError& e) {
    std::cerr << e.what() << "\n";
    return kExitDiagnostics;
  }
  return kExitUsage;
}

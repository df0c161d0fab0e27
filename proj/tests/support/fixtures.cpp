#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>

#include "umlf/parse.hpp"

namespace umlf::test {

std::string fixture_path(const std::string& name) {
  return std::string(UMLF_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fixture_text(const std::string& name) {
  return read_file(fixture_path(name));
}

Model parse_or_throw(const std::string& source) {
  ParseResult result = parse_model(source);
  if (!result.ok())
    throw std::runtime_error("parse failed: " + render(result.errors.front()));
  return *std::move(result.model);
}

Model load_fixture(const std::string& name) {
  return parse_or_throw(fixture_text(name));
}

InstantiationSpec load_spec_fixture(const std::string& name) {
  SpecParseResult result = parse_instantiation_spec(fixture_text(name));
  if (!result.ok())
    throw std::runtime_error("spec parse failed: " +
                             render(result.errors.front()));
  return *std::move(result.spec);
}

}  // namespace umlf::test

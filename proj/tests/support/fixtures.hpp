#pragma once

#include <string>

#include "umlf/instantiate.hpp"
#include "umlf/model.hpp"

namespace umlf::test {

std::string fixture_path(const std::string& name);
std::string read_file(const std::string& path);
std::string fixture_text(const std::string& name);

// Parse helpers that throw on any error so a broken fixture fails loudly.
Model parse_or_throw(const std::string& source);
Model load_fixture(const std::string& name);
InstantiationSpec load_spec_fixture(const std::string& name);

}  // namespace umlf::test

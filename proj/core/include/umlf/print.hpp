#pragma once

#include <string>

#include "umlf/model.hpp"

namespace umlf {

// Canonical textual form: two-space indent, one member per line, tags in
// registry order, LF line endings. print_model(parse(s).model) reparses to an
// equal model, and printing is idempotent on its own output.
std::string print_model(const Model& m);

}  // namespace umlf

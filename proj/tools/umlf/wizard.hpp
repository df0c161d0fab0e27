#pragma once

#include <iosfwd>
#include <optional>

#include "umlf/instantiate.hpp"

namespace umlf::cli {

// Walks the framework's obligations on a line-oriented prompt/answer loop and
// builds an instantiation spec. Returns nullopt when input ends early.
std::optional<InstantiationSpec> run_wizard(const Model& framework,
                                            std::istream& in, std::ostream& out);

}  // namespace umlf::cli

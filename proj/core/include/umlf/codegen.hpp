#pragma once

#include <map>
#include <string>

#include "umlf/model.hpp"

namespace umlf {

// File name -> file contents. std::map keeps emission order stable.
using FileSet = std::map<std::string, std::string>;

// One "<Class>.skel" skeleton per class. Hot spots carry @HOT-SPOT markers,
// restriction clauses become @RESTRICTION lines, and classes that forward to
// a strategy or meta-object get delegating stubs. Output is byte-identical
// across runs for the same model. Throws ModelError when the model has
// validation errors.
FileSet generate(const Model& model);

}  // namespace umlf

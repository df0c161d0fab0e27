#pragma once

#include <vector>

#include "umlf/model.hpp"

namespace umlf {

// Tag-placement and restriction rules, evaluated on a parsed and resolved
// model. Diagnostics are ordered by element path, then code. Warnings never
// block downstream tools; errors do.
//
// UMLF-E001  {variable} on a non-method element
// UMLF-E002  {extensible} on a non-class element
// UMLF-E003  {incomplete} on anything but a generalization/realization
// UMLF-E004  variation-point locus with neither {static} nor {dynamic}
// UMLF-E005  both {static} and {dynamic} on one element
// UMLF-E006  {appl-class} class without an {incomplete} generalization
//            (framework designs only; instances complete their edges)
// UMLF-E007  for-all-new-methods clause on a class that is neither
//            {extensible} nor an extension parent
// UMLF-E008  {optional} outside a sequence event
// UMLF-E009  {static}/{dynamic} on an element that is no variation-point
//            locus (abstract classes and interfaces may carry one: that is
//            the extension-parent marker)
// UMLF-E010  preserves clause naming an attribute that is not declared on the
//            class, inherited, or owned by an aggregating whole
// UMLF-W001  extension parent of an {incomplete} relationship without
//            abstract methods
// UMLF-W002  sequence pattern on a method that is no variation point
std::vector<Diagnostic> validate(const Model& m);

}  // namespace umlf

#pragma once

#include "lieorbit/document.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lieorbit {

/// Built-in algebra documents keyed by name. Each carries named functionals,
/// a default functional in metadata and its expected reports.
const std::map<std::string, AlgebraDocument>& fixtures();

/// Throws InputError for an unknown name.
const AlgebraDocument& fixture(std::string_view name);

/// metadata["default_functional"], falling back to the first functional.
std::string default_functional(const AlgebraDocument& doc);

/// One line per expected field that differs from a fresh classification.
std::vector<std::string> golden_mismatches(const AlgebraDocument& doc, const ClassifyOptions& options = {});

}  // namespace lieorbit

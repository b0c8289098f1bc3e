#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hopfgk/parser.hpp"

namespace hopfgk {

/// The bundled presentations, in a fixed order.
const std::vector<PresentationSource>& builtins();

std::optional<PresentationSource> findBuiltin(std::string_view name);

}  // namespace hopfgk

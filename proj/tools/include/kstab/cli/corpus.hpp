#pragma once

#include <string_view>
#include <vector>

#include "kstab/cli/input.hpp"

namespace kstab::cli {

/// Bundled toric log Fano fixtures, in a fixed order.
const std::vector<InputSpec>& corpus();

const InputSpec& corpus_entry(std::string_view name);

}  // namespace kstab::cli

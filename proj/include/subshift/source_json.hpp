#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "subshift/generators.hpp"

namespace subshift {

nlohmann::json source_to_json(const SourceSpec& spec);

// `default_seed` fills in omitted seed fields so runs stay reproducible.
SourceSpec source_from_json(const nlohmann::json& j,
                            std::uint64_t default_seed = 1);

SourceSpec source_from_json_file(const std::string& path,
                                 std::uint64_t default_seed = 1);

}  // namespace subshift

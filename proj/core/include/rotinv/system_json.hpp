#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rotinv/tensor_system.hpp"

namespace rotinv {

// Document shape:
//   {"dimension": 4, "metric": [1,-1,-1,-1],
//    "vectors": {"A": [a0, a1, a2, a3]},
//    "tensors": {"B": {"symmetry": "symmetric", "components": [[...], ...]}}}
// "metric" defaults to all +1. Object order in the document is the flatten order.

TensorSystem system_from_json(const nlohmann::ordered_json& doc);
TensorSystem parse_system(std::string_view text);
TensorSystem load_system(const std::filesystem::path& path);

nlohmann::ordered_json system_to_json(const TensorSystem& system);

nlohmann::json spec_to_json(const SystemSpec& spec);

}  // namespace rotinv

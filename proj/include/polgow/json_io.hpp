#pragma once

#include "polgow/experiments.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace polgow {

using Json = nlohmann::ordered_json;

Json group_to_json(const GroupTable& g);
GroupTable group_from_json(const Json& j);

Json fin_abelian_to_json(const FinAbelian& g);
FinAbelian fin_abelian_from_json(const Json& j);

Json fingerprint_to_json(const GroupFingerprint& fp);

Json group_map_to_json(const GroupMap& m);
GroupMap group_map_from_json(const Json& j);

Json phase_map_to_json(const PhaseMap& m);
PhaseMap phase_map_from_json(const Json& j);

Json mat_func_to_json(const MatFunc& f);
MatFunc mat_func_from_json(const Json& j);

Json gmodule_to_json(const GModule& m);

void save_json(const Json& j, const std::filesystem::path& path);
Json load_json(const std::filesystem::path& path);
std::string dump_json(const Json& j);

/// Parses a group spec string: "cyclic:n", "product:d1,d2,...",
/// "perm:<degree>:<images>;<images>", "a5", "s3", "d4", "sl25",
/// "heisenberg3", or a path to a group JSON file.
GroupTable parse_group_spec(const std::string& spec);

}  // namespace polgow

#pragma once

#include <string>

#include "passopt/types.hpp"

namespace passopt {

/// Parse a flat JSON config document. Keys match SystemConfig field names;
/// `sigma2` and `P` are given in dBm, `f` in Hz, `R_min` in bps/Hz.
/// Unknown keys are rejected. Throws std::invalid_argument on bad input.
SystemConfig config_from_json(const std::string& json_text);

SystemConfig config_from_file(const std::string& path);

/// Serialize back to the file schema (powers in dBm).
std::string config_to_json(const SystemConfig& cfg);

/// Apply a single `key=value` override using the file schema units.
void config_set(SystemConfig& cfg, const std::string& key, const std::string& value);

}  // namespace passopt

#include "passopt/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace passopt {

using nlohmann::json;

namespace {

void apply_key(SystemConfig& cfg, const std::string& key, const json& v) {
  auto num = [&]() -> double {
    if (!v.is_number()) throw std::invalid_argument("config key '" + key + "' must be a number");
    return v.get<double>();
  };
  auto integer = [&]() -> int {
    if (!v.is_number_integer()) throw std::invalid_argument("config key '" + key + "' must be an integer");
    return v.get<int>();
  };

  if (key == "K") cfg.K = integer();
  else if (key == "M") cfg.M = integer();
  else if (key == "N") cfg.N = integer();
  else if (key == "D") cfg.D = num();
  else if (key == "h") cfg.h = num();
  else if (key == "D_wg") cfg.D_wg = num();
  else if (key == "d1") cfg.d1 = num();
  else if (key == "d2") cfg.d2 = num();
  else if (key == "f") cfg.f = num();
  else if (key == "eps_c") cfg.eps_c = num();
  else if (key == "tan_delta") cfg.tan_delta = num();
  else if (key == "chi") cfg.chi = num();
  else if (key == "sigma2") cfg.sigma2 = dbm_to_watts(num());
  else if (key == "P") cfg.P = dbm_to_watts(num());
  else if (key == "R_min") cfg.R_min = num();
  else if (key == "G") cfg.G = integer();
  else if (key == "scheme") {
    if (!v.is_string()) throw std::invalid_argument("config key 'scheme' must be a string");
    cfg.scheme = scheme_from_string(v.get<std::string>());
  } else if (key == "mc_trials") cfg.mc_trials = integer();
  else if (key == "rng_seed") cfg.rng_seed = v.get<std::uint64_t>();
  else if (key == "interference_model") {
    const std::string s = v.get<std::string>();
    if (s == "coherent") cfg.interference = InterferenceModel::Coherent;
    else if (s == "power_sum") cfg.interference = InterferenceModel::PowerSum;
    else throw std::invalid_argument("interference_model must be 'coherent' or 'power_sum'");
  } else if (key == "weighted_slot_surrogate") cfg.weighted_slot_surrogate = v.get<bool>();
  else if (key == "heatmap_coherent") cfg.heatmap_coherent = v.get<bool>();
  else throw std::invalid_argument("unknown config key: " + key);
}

}  // namespace

SystemConfig config_from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
  SystemConfig cfg;
  for (auto it = doc.begin(); it != doc.end(); ++it) apply_key(cfg, it.key(), it.value());
  cfg.validate();
  return cfg;
}

SystemConfig config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

std::string config_to_json(const SystemConfig& cfg) {
  json doc;
  doc["K"] = cfg.K;
  doc["M"] = cfg.M;
  doc["N"] = cfg.N;
  doc["D"] = cfg.D;
  doc["h"] = cfg.h;
  doc["D_wg"] = cfg.D_wg;
  doc["d1"] = cfg.d1;
  doc["d2"] = cfg.d2;
  doc["f"] = cfg.f;
  doc["eps_c"] = cfg.eps_c;
  doc["tan_delta"] = cfg.tan_delta;
  doc["chi"] = cfg.chi;
  doc["sigma2"] = watts_to_dbm(cfg.sigma2);
  doc["P"] = watts_to_dbm(cfg.P);
  doc["R_min"] = cfg.R_min;
  doc["G"] = cfg.G;
  doc["scheme"] = to_string(cfg.scheme);
  doc["mc_trials"] = cfg.mc_trials;
  doc["rng_seed"] = cfg.rng_seed;
  doc["interference_model"] = cfg.interference == InterferenceModel::Coherent ? "coherent" : "power_sum";
  doc["weighted_slot_surrogate"] = cfg.weighted_slot_surrogate;
  doc["heatmap_coherent"] = cfg.heatmap_coherent;
  return doc.dump(2);
}

void config_set(SystemConfig& cfg, const std::string& key, const std::string& value) {
  json v;
  try {
    v = json::parse(value);
  } catch (const json::parse_error&) {
    v = value;  // bare strings (scheme names) arrive unquoted
  }
  apply_key(cfg, key, v);
  cfg.validate();
}

}  // namespace passopt

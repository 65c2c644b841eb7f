#include "config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "error.hpp"

namespace rs2 {

void AlgoConfig::validate() const {
    if (!(gamma > 0.0)) throw_invalid("gamma must be positive");
    if (!(c_setaside > 0.0)) throw_invalid("c must be positive");
    if (!(alpha > 0.0 && alpha < 0.125)) throw_invalid("alpha must lie in (0, 0.125)");
    if (d_min < 2) throw_invalid("d_min must be at least 2");
    if (!(budget_k > 0.0)) throw_invalid("budget_K must be positive");
}

AlgoConfig config_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw_parse("config is not valid JSON");
    if (!j.is_object()) throw_parse("config must be a JSON object");

    AlgoConfig cfg;
    for (auto& [key, value] : j.items()) {
        try {
            if (key == "gamma") {
                cfg.gamma = value.get<double>();
            } else if (key == "c") {
                cfg.c_setaside = value.get<double>();
            } else if (key == "alpha") {
                cfg.alpha = value.get<double>();
            } else if (key == "seed") {
                cfg.seed = value.get<uint64_t>();
            } else if (key == "budget_K") {
                cfg.budget_k = value.get<double>();
            } else if (key == "d_min") {
                cfg.d_min = value.get<int32_t>();
            } else {
                throw_parse("unknown config key '" + key + "'");
            }
        } catch (const nlohmann::json::exception&) {
            throw_parse("config key '" + key + "' has the wrong type");
        }
    }
    cfg.validate();
    return cfg;
}

AlgoConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_io("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str());
}

std::string config_to_json_text(const AlgoConfig& cfg) {
    nlohmann::json j{
        {"gamma", cfg.gamma},       {"c", cfg.c_setaside}, {"alpha", cfg.alpha},
        {"seed", cfg.seed},         {"budget_K", cfg.budget_k},
        {"d_min", cfg.d_min},
    };
    return j.dump(2);
}

}  // namespace rs2

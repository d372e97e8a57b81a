#ifndef PAREVAL_CONFIG_HPP
#define PAREVAL_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pareval/csv.hpp"
#include "pareval/errors.hpp"
#include "pareval/objective_space.hpp"
#include "pareval/pareto.hpp"
#include "pareval/tradeoff.hpp"

namespace pareval {

enum class Protocol { APriori, APosteriori };
enum class InputKind { SolutionCSV, PredictionCSV };

struct InputSpec {
    std::string system_name;
    std::string path;
    InputKind kind = InputKind::SolutionCSV;
    std::string validation_path; // prediction inputs under the a priori protocol
};

struct RunConfig {
    std::optional<ObjectiveSchema> schema;
    double epsilon = 1e-6;
    double sigma = 0.1;
    std::vector<double> thresholds = default_threshold_grid();
    Protocol protocol = Protocol::APosteriori;
    std::vector<InputSpec> inputs;
    std::string output_dir = ".";
};

namespace detail {
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}
} // namespace detail

/// FNV-1a over the canonical serialization of the effective configuration;
/// embedded in every output file so results are auditable.
inline std::string config_hash(const RunConfig& cfg) {
    std::ostringstream os;
    if (cfg.schema)
        for (const auto& o : cfg.schema->objectives())
            os << o.name << (o.direction == Direction::Maximize ? "+" : "-")
               << format_double(o.lower_bound) << ":" << format_double(o.upper_bound) << ";";
    os << "eps=" << format_double(cfg.epsilon) << ";sigma=" << format_double(cfg.sigma)
       << ";protocol=" << (cfg.protocol == Protocol::APriori ? "a_priori" : "a_posteriori") << ";";
    for (double t : cfg.thresholds) os << format_double(t) << ",";
    for (const auto& in : cfg.inputs)
        os << in.system_name << "=" << in.path << "|" << in.validation_path << ";";
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(detail::fnv1a(os.str())));
    return std::string(buf);
}

inline RunConfig parse_config_json(const nlohmann::json& j, const std::string& path) {
    RunConfig cfg;
    try {
        if (j.contains("objectives")) {
            std::vector<ObjectiveSpec> objs;
            for (const auto& o : j.at("objectives")) {
                ObjectiveSpec spec;
                spec.name = o.at("name").get<std::string>();
                const std::string dir = o.value("direction", "max");
                if (dir == "max" || dir == "maximize") spec.direction = Direction::Maximize;
                else if (dir == "min" || dir == "minimize") spec.direction = Direction::Minimize;
                else throw config_error("objective direction must be max or min, got '" + dir + "'");
                spec.lower_bound = o.value("lower", 0.0);
                spec.upper_bound = o.value("upper", 1.0);
                objs.push_back(std::move(spec));
            }
            cfg.schema = ObjectiveSchema(std::move(objs));
        }
        cfg.epsilon = j.value("epsilon", 1e-6);
        cfg.sigma = j.value("sigma", 0.1);
        if (j.contains("thresholds"))
            cfg.thresholds = j.at("thresholds").get<std::vector<double>>();
        const std::string proto = j.value("protocol", "a_posteriori");
        if (proto == "a_priori") cfg.protocol = Protocol::APriori;
        else if (proto == "a_posteriori") cfg.protocol = Protocol::APosteriori;
        else throw config_error("protocol must be a_priori or a_posteriori, got '" + proto + "'");
        cfg.output_dir = j.value("output_dir", ".");
        for (const auto& in : j.value("inputs", nlohmann::json::array())) {
            InputSpec spec;
            spec.system_name = in.at("system").get<std::string>();
            spec.path = in.at("path").get<std::string>();
            const std::string kind = in.value("kind", "solutions");
            if (kind == "solutions") spec.kind = InputKind::SolutionCSV;
            else if (kind == "predictions") spec.kind = InputKind::PredictionCSV;
            else throw config_error("input kind must be solutions or predictions, got '" + kind + "'");
            spec.validation_path = in.value("validation", "");
            cfg.inputs.push_back(std::move(spec));
        }
    } catch (const nlohmann::json::exception& e) {
        throw config_error(path + ": " + e.what());
    }
    if (!(cfg.epsilon > 0.0)) throw config_error("epsilon must be > 0");
    if (!(cfg.sigma > 0.0)) throw config_error("sigma must be > 0");
    for (std::size_t i = 1; i < cfg.thresholds.size(); ++i)
        if (!(cfg.thresholds[i - 1] < cfg.thresholds[i]))
            throw config_error("thresholds must be strictly increasing");
    return cfg;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error(path + ": cannot open config file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw config_error(path + ": " + e.what());
    }
    return parse_config_json(j, path);
}

/// Reads a solution-set CSV (system,model_id,<objective columns...>) and
/// canonicalizes the rows belonging to system_name. When no schema is
/// given, every objective column defaults to maximize over [0,1].
inline SolutionSet load_solution_set(const std::string& path, const std::string& system_name,
                                     const std::optional<ObjectiveSchema>& schema = {}) {
    const CsvTable t = read_csv(path);
    const std::size_t sys_col = column_index(t, "system", path);
    const std::size_t model_col = column_index(t, "model_id", path);

    std::vector<std::size_t> obj_cols;
    std::vector<ObjectiveSpec> default_objs;
    if (schema) {
        for (const auto& o : schema->objectives()) obj_cols.push_back(column_index(t, o.name, path));
    } else {
        for (std::size_t i = 0; i < t.header.size(); ++i)
            if (i != sys_col && i != model_col) {
                obj_cols.push_back(i);
                default_objs.push_back({t.header[i], Direction::Maximize, 0.0, 1.0});
            }
    }
    const ObjectiveSchema effective = schema ? *schema : ObjectiveSchema(std::move(default_objs));

    SolutionSet set;
    set.system_name = system_name;
    set.n_objectives = effective.size();
    for (std::size_t row = 0; row < t.rows.size(); ++row) {
        if (t.rows[row][sys_col] != system_name) continue;
        const std::string ctx = path + ":" + std::to_string(t.row_lines[row]);
        std::vector<double> raw;
        raw.reserve(obj_cols.size());
        for (std::size_t c : obj_cols) raw.push_back(parse_double(t.rows[row][c], ctx));
        set.points.push_back({t.rows[row][model_col], canonicalize(raw, effective)});
    }
    if (set.points.empty())
        throw ingestion_error(path + ": no rows for system '" + system_name + "'");
    return set;
}

/// Writes solution sets in the standard CSV layout. Objective columns get
/// generic names o1..oN unless a schema supplies them. With a schema the
/// values are written back in raw metric units (inverse affine map), so the
/// file reloads cleanly under the same schema; without one, canonical and
/// raw coincide.
inline std::string solution_set_csv(const std::vector<SolutionSet>& systems,
                                    const std::optional<ObjectiveSchema>& schema = {},
                                    const std::string& meta_block = "") {
    std::ostringstream os;
    os << meta_block;
    os << "system,model_id";
    const std::size_t n = systems.empty() ? 0 : systems.front().n_objectives;
    for (std::size_t i = 0; i < n; ++i)
        os << ',' << (schema ? schema->at(i).name : "o" + std::to_string(i + 1));
    os << '\n';
    for (const auto& s : systems)
        for (const auto& p : s.points) {
            os << s.system_name << ',' << p.id;
            if (schema) {
                for (double v : decanonicalize(p.point, *schema)) os << ',' << format_double(v);
            } else {
                for (double c : p.point.coords) os << ',' << format_double(c);
            }
            os << '\n';
        }
    return os.str();
}

} // namespace pareval

#endif

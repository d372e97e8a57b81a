// pareval: evaluates and compares ML systems under concurrent utility and
// fairness objectives via Pareto-front indicators and radar-area scores.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pareval/config.hpp"
#include "pareval/errors.hpp"
#include "pareval/indicators.hpp"
#include "pareval/radar.hpp"
#include "pareval/report.hpp"
#include "pareval/svg.hpp"
#include "pareval/synth.hpp"
#include "pareval/tradeoff.hpp"

namespace fs = std::filesystem;
using namespace pareval;

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ingestion_error(path + ": cannot open for writing");
    out << content;
}

std::vector<std::string> list_systems(const std::string& path) {
    const CsvTable t = read_csv(path);
    const std::size_t sys_col = column_index(t, "system", path);
    std::set<std::string> names;
    for (const auto& row : t.rows) names.insert(row[sys_col]);
    return {names.begin(), names.end()};
}

std::string resolve_system(const std::string& path, const std::string& requested) {
    if (!requested.empty()) return requested;
    const auto names = list_systems(path);
    if (names.size() != 1)
        throw config_error(path + " holds " + std::to_string(names.size()) +
                           " systems; pass --system to pick one");
    return names.front();
}

SolutionSet build_input_set(const InputSpec& in, const RunConfig& cfg) {
    if (in.kind == InputKind::SolutionCSV)
        return load_solution_set(in.path, in.system_name, cfg.schema);

    if (!cfg.schema)
        throw config_error("prediction input '" + in.system_name +
                           "' needs an objective schema in the config");
    if (cfg.protocol == Protocol::APriori) {
        if (in.validation_path.empty())
            throw config_error("a priori protocol: input '" + in.system_name +
                               "' needs a validation prediction file");
        const auto val_records = load_predictions(in.validation_path, in.system_name);
        std::vector<OperatingPoint> val_ops;
        for (const auto& [model_id, records] : val_records)
            for (double t : cfg.thresholds)
                val_ops.push_back(compute_operating_point(records, model_id, t, *cfg.schema));
        const auto test_records = load_predictions(in.path, in.system_name);
        return a_priori_select(val_ops, *cfg.schema, test_records, in.system_name, cfg.epsilon)
            .test_set;
    }
    return a_posteriori_evaluate(build_solution_set(load_predictions(in.path, in.system_name),
                                                    cfg.thresholds, *cfg.schema, in.system_name,
                                                    cfg.epsilon));
}

int run_compare(const RunConfig& cfg) {
    if (cfg.inputs.empty()) throw config_error("compare needs at least one input");
    fs::create_directories(cfg.output_dir);

    ReportMeta meta{config_hash(cfg), cfg.epsilon, cfg.sigma};

    std::vector<SolutionSet> systems;
    for (const auto& in : cfg.inputs) systems.push_back(build_input_set(in, cfg));

    auto reports = evaluate_session(systems, cfg.epsilon, NicheConfig(cfg.sigma));
    const auto session = score_session(std::move(reports));

    write_file(cfg.output_dir + "/report.csv", report_csv(session, meta));
    write_file(cfg.output_dir + "/report.txt", report_text(session, meta));

    std::vector<std::pair<std::string, RadarGeometry>> geoms;
    for (const auto& s : session)
        geoms.emplace_back(s.report.system_name, radar_geometry(s.report));
    emit_radar_svg(geoms, cfg.output_dir + "/radar.svg", meta);

    // per-system non-dominated operating points, for model selection
    for (const auto& sys : systems) {
        const auto part = pareto_partition(deduplicate(sys, cfg.epsilon));
        SolutionSet front{sys.system_name, sys.n_objectives, part.non_dominated};
        write_file(cfg.output_dir + "/front_" + sys.system_name + ".csv",
                   solution_set_csv({front}, cfg.schema, meta.comment_block("#")));
    }

    if (!systems.empty() && systems.front().n_objectives == 2)
        write_file(cfg.output_dir + "/pareto.svg", pareto_scatter_svg(systems, meta));

    std::cout << report_text(session, meta);
    return 0;
}

RadarGeometry geometry_from_row(const CsvTable& t, std::size_t row, const std::string& path) {
    IndicatorReport r;
    r.hv = parse_double(t.rows[row][column_index(t, "HV", path)], path);
    r.onvg_hat = parse_double(t.rows[row][column_index(t, "ONVG_hat", path)], path);
    r.onvgr = parse_double(t.rows[row][column_index(t, "ONVGR", path)], path);
    r.ud = parse_double(t.rows[row][column_index(t, "UD", path)], path);
    r.as_ = parse_double(t.rows[row][column_index(t, "AS", path)], path);
    return radar_geometry(r);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto-front evaluation of utility-fairness trade-off systems"};
    app.require_subcommand(1);

    // compare
    auto* cmp = app.add_subcommand("compare", "full pipeline: dedupe, partition, indicators, radar");
    std::string cfg_path, out_dir_flag, protocol_flag;
    double eps_flag = -1.0, sigma_flag = -1.0;
    cmp->add_option("--config", cfg_path, "run config (JSON)")->required();
    cmp->add_option("--output-dir", out_dir_flag, "override output directory");
    cmp->add_option("--epsilon", eps_flag, "override deduplication radius");
    cmp->add_option("--sigma", sigma_flag, "override niche radius");
    cmp->add_option("--protocol", protocol_flag, "override protocol: a_priori|a_posteriori");

    // pareto
    auto* par = app.add_subcommand("pareto", "split a solution CSV into its first front");
    std::string par_in, par_out, par_dom, par_sys;
    par->add_option("--in", par_in)->required();
    par->add_option("--out", par_out, "non-dominated points")->required();
    par->add_option("--dominated", par_dom, "also write the dominated part");
    par->add_option("--system", par_sys);

    // dedupe
    auto* ded = app.add_subcommand("dedupe", "drop epsilon-near-duplicate points");
    std::string ded_in, ded_out, ded_sys;
    double ded_eps = 1e-6;
    ded->add_option("--in", ded_in)->required();
    ded->add_option("--out", ded_out)->required();
    ded->add_option("--epsilon", ded_eps);
    ded->add_option("--system", ded_sys);

    // radar
    auto* rad = app.add_subcommand("radar", "render a radar chart from an indicator CSV");
    std::string rad_in, rad_out;
    rad->add_option("--in", rad_in, "CSV with system,HV,ONVG_hat,ONVGR,UD,AS")->required();
    rad->add_option("--out", rad_out)->required();

    // sweep
    auto* swp = app.add_subcommand("sweep", "emit operating points from a prediction CSV");
    std::string swp_cfg, swp_in, swp_out;
    swp->add_option("--config", swp_cfg, "config with objective schema")->required();
    swp->add_option("--in", swp_in, "prediction CSV")->required();
    swp->add_option("--out", swp_out)->required();

    // synth
    auto* syn = app.add_subcommand("synth", "generate a synthetic trade-off system");
    std::string syn_out, syn_sys = "synth", syn_shape = "linear", syn_uc;
    SynthSpec syn_spec;
    syn->add_option("--out", syn_out)->required();
    syn->add_option("--system", syn_sys);
    syn->add_option("--uc", syn_uc, "emit a UC1|UC2|UC3 two-system fixture instead");
    syn->add_option("--n-points", syn_spec.n_points);
    syn->add_option("--n-objectives", syn_spec.n_objectives);
    syn->add_option("--shape", syn_shape, "concave|convex|linear");
    syn->add_option("--spread", syn_spec.spread);
    syn->add_option("--jitter", syn_spec.jitter);
    syn->add_option("--n-dominated", syn_spec.n_dominated);
    syn->add_option("--seed", syn_spec.seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmp->parsed()) {
            RunConfig cfg = load_config(cfg_path);
            if (!out_dir_flag.empty()) cfg.output_dir = out_dir_flag;
            if (eps_flag > 0.0) cfg.epsilon = eps_flag;
            if (sigma_flag > 0.0) cfg.sigma = sigma_flag;
            if (!protocol_flag.empty()) {
                if (protocol_flag == "a_priori") cfg.protocol = Protocol::APriori;
                else if (protocol_flag == "a_posteriori") cfg.protocol = Protocol::APosteriori;
                else throw config_error("unknown protocol '" + protocol_flag + "'");
            }
            return run_compare(cfg);
        }
        if (par->parsed()) {
            const std::string sys = resolve_system(par_in, par_sys);
            const SolutionSet set = load_solution_set(par_in, sys);
            const ParetoPartition part = pareto_partition(set);
            write_file(par_out,
                       solution_set_csv({SolutionSet{sys, set.n_objectives, part.non_dominated}}));
            if (!par_dom.empty())
                write_file(par_dom,
                           solution_set_csv({SolutionSet{sys, set.n_objectives, part.dominated}}));
            return 0;
        }
        if (ded->parsed()) {
            const std::string sys = resolve_system(ded_in, ded_sys);
            const SolutionSet out = deduplicate(load_solution_set(ded_in, sys), ded_eps);
            write_file(ded_out, solution_set_csv({out}));
            return 0;
        }
        if (rad->parsed()) {
            const CsvTable t = read_csv(rad_in);
            const std::size_t sys_col = column_index(t, "system", rad_in);
            std::vector<std::pair<std::string, RadarGeometry>> geoms;
            for (std::size_t row = 0; row < t.rows.size(); ++row)
                geoms.emplace_back(t.rows[row][sys_col], geometry_from_row(t, row, rad_in));
            emit_radar_svg(geoms, rad_out, ReportMeta{});
            return 0;
        }
        if (swp->parsed()) {
            const RunConfig cfg = load_config(swp_cfg);
            if (!cfg.schema) throw config_error(swp_cfg + ": sweep needs an objective schema");
            std::ostringstream os;
            os << "model_id,threshold";
            for (const auto& o : cfg.schema->objectives()) os << ',' << o.name;
            os << '\n';
            for (const auto& [model_id, records] : load_predictions(swp_in))
                for (double t : cfg.thresholds) {
                    const auto op = compute_operating_point(records, model_id, t, *cfg.schema);
                    os << model_id << ',' << format_double(t);
                    for (const auto& o : cfg.schema->objectives())
                        os << ',' << format_double(op.raw_metrics.at(o.name));
                    os << '\n';
                }
            write_file(swp_out, os.str());
            return 0;
        }
        if (syn->parsed()) {
            if (!syn_uc.empty()) {
                UseCase uc;
                if (syn_uc == "UC1") uc = UseCase::UC1;
                else if (syn_uc == "UC2") uc = UseCase::UC2;
                else if (syn_uc == "UC3") uc = UseCase::UC3;
                else throw config_error("unknown use case '" + syn_uc + "'");
                const auto [a, b] = uc_fixture(uc);
                write_file(syn_out, solution_set_csv({a, b}));
            } else {
                if (syn_shape == "concave") syn_spec.front_shape = FrontShape::Concave;
                else if (syn_shape == "convex") syn_spec.front_shape = FrontShape::Convex;
                else if (syn_shape == "linear") syn_spec.front_shape = FrontShape::Linear;
                else throw config_error("unknown shape '" + syn_shape + "'");
                write_file(syn_out, solution_set_csv({generate(syn_spec, syn_sys)}));
            }
            return 0;
        }
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const schema_error& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#ifndef PAREVAL_TRADEOFF_HPP
#define PAREVAL_TRADEOFF_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pareval/csv.hpp"
#include "pareval/errors.hpp"
#include "pareval/objective_space.hpp"
#include "pareval/pareto.hpp"

namespace pareval {

/// One scored sample: model output in [0,1], binary ground truth, and the
/// sample's demographic group per attribute.
struct PredictionRecord {
    std::string sample_id;
    double score = 0.0;
    int label = 0;
    std::map<std::string, std::string> groups;
};

struct ConfusionCounts {
    long tp = 0, fp = 0, tn = 0, fn = 0;
    long total() const { return tp + fp + tn + fn; }
};

/// One (model, threshold) combination with its raw metric values keyed by
/// objective name.
struct OperatingPoint {
    std::string model_id;
    double threshold = 0.5;
    std::map<std::string, double> raw_metrics;

    std::string tag() const { return model_id + "@" + format_double(threshold); }
};

struct FairnessMetrics {
    double dp_diff = 0.0;
    double eodd_diff = 0.0;
    double minmax_f1_diff = 0.0;
    // groups excluded from the TPR or FPR min-max because the rate was
    // undefined (no positives / no negatives in the stratum)
    std::vector<std::string> excluded_groups;
};

/// Prediction = positive iff score >= threshold (tie goes to positive).
inline ConfusionCounts confusion_counts(
    const std::vector<PredictionRecord>& records, double threshold,
    const std::optional<std::pair<std::string, std::string>>& group_filter = {}) {
    ConfusionCounts c;
    for (const auto& r : records) {
        if (group_filter) {
            auto it = r.groups.find(group_filter->first);
            if (it == r.groups.end() || it->second != group_filter->second) continue;
        }
        const bool pred = r.score >= threshold;
        if (pred && r.label == 1) ++c.tp;
        else if (pred && r.label == 0) ++c.fp;
        else if (!pred && r.label == 0) ++c.tn;
        else ++c.fn;
    }
    return c;
}

/// Accuracy and F1. F1 is 0 by convention when 2TP+FP+FN = 0.
inline std::pair<double, double> utility_metrics(const ConfusionCounts& c) {
    if (c.total() == 0) throw evaluation_error("utility_metrics on empty counts");
    const double acc = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
    const double denom = static_cast<double>(2 * c.tp + c.fp + c.fn);
    const double f1 = denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(c.tp) / denom;
    return {acc, f1};
}

namespace detail {
inline std::vector<std::string> group_categories(
    const std::vector<PredictionRecord>& records, const std::string& attribute) {
    std::set<std::string> cats;
    for (const auto& r : records) {
        auto it = r.groups.find(attribute);
        if (it != r.groups.end()) cats.insert(it->second);
    }
    return {cats.begin(), cats.end()};
}

inline double minmax_gap(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}
} // namespace detail

/// Group-fairness differences at one threshold:
///   dp_diff     = max-min over groups of P(pred = 1 | group)
///   eodd_diff   = max over {TPR, FPR} of the max-min group gap
///   minmax_f1   = max-min over groups of per-group F1
/// Groups whose TPR or FPR is undefined are excluded from that rate's gap
/// and listed in excluded_groups.
inline FairnessMetrics fairness_metrics(const std::vector<PredictionRecord>& records,
                                        double threshold, const std::string& attribute) {
    const auto cats = detail::group_categories(records, attribute);
    if (cats.size() < 2)
        throw evaluation_error("fairness_metrics: attribute '" + attribute +
                               "' has fewer than 2 populated groups");
    FairnessMetrics fm;
    std::vector<double> pos_rates, tprs, fprs, f1s;
    for (const auto& cat : cats) {
        const auto c = confusion_counts(records, threshold, {{attribute, cat}});
        pos_rates.push_back(static_cast<double>(c.tp + c.fp) /
                            static_cast<double>(c.total()));
        if (c.tp + c.fn > 0)
            tprs.push_back(static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn));
        else
            fm.excluded_groups.push_back(cat + ":TPR");
        if (c.fp + c.tn > 0)
            fprs.push_back(static_cast<double>(c.fp) / static_cast<double>(c.fp + c.tn));
        else
            fm.excluded_groups.push_back(cat + ":FPR");
        f1s.push_back(utility_metrics(c).second);
    }
    fm.dp_diff = detail::minmax_gap(pos_rates);
    fm.eodd_diff = std::max(detail::minmax_gap(tprs), detail::minmax_gap(fprs));
    fm.minmax_f1_diff = detail::minmax_gap(f1s);
    return fm;
}

// Objective names understood by the sweep: "acc", "f1", and the
// attribute-qualified fairness metrics "dp:<attr>", "eodd:<attr>",
// "f1gap:<attr>".
inline OperatingPoint compute_operating_point(const std::vector<PredictionRecord>& records,
                                              const std::string& model_id, double threshold,
                                              const ObjectiveSchema& schema) {
    if (records.empty())
        throw evaluation_error("no prediction records for model '" + model_id + "'");
    OperatingPoint op;
    op.model_id = model_id;
    op.threshold = threshold;
    std::map<std::string, FairnessMetrics> fairness_cache;
    const auto counts = confusion_counts(records, threshold);
    const auto [acc, f1] = utility_metrics(counts);
    for (const auto& obj : schema.objectives()) {
        const std::string& name = obj.name;
        if (name == "acc") {
            op.raw_metrics[name] = acc;
        } else if (name == "f1") {
            op.raw_metrics[name] = f1;
        } else {
            const auto colon = name.find(':');
            if (colon == std::string::npos)
                throw config_error("unknown objective metric '" + name +
                                   "' (expected acc, f1, dp:<attr>, eodd:<attr>, f1gap:<attr>)");
            const std::string kind = name.substr(0, colon);
            const std::string attr = name.substr(colon + 1);
            auto it = fairness_cache.find(attr);
            if (it == fairness_cache.end())
                it = fairness_cache.emplace(attr, fairness_metrics(records, threshold, attr)).first;
            if (kind == "dp") op.raw_metrics[name] = it->second.dp_diff;
            else if (kind == "eodd") op.raw_metrics[name] = it->second.eodd_diff;
            else if (kind == "f1gap") op.raw_metrics[name] = it->second.minmax_f1_diff;
            else
                throw config_error("unknown fairness metric kind '" + kind + "' in '" + name + "'");
        }
    }
    return op;
}

inline SolutionSet solution_set_from_ops(const std::vector<OperatingPoint>& ops,
                                         const ObjectiveSchema& schema,
                                         const std::string& system_name) {
    SolutionSet set;
    set.system_name = system_name;
    set.n_objectives = schema.size();
    for (const auto& op : ops) {
        std::vector<double> raw;
        raw.reserve(schema.size());
        for (const auto& obj : schema.objectives()) raw.push_back(op.raw_metrics.at(obj.name));
        set.points.push_back({op.tag(), canonicalize(raw, schema)});
    }
    return set;
}

/// Full sweep: one operating point per (model, threshold), canonicalized
/// and deduplicated.
inline SolutionSet build_solution_set(
    const std::map<std::string, std::vector<PredictionRecord>>& records_per_model,
    const std::vector<double>& thresholds, const ObjectiveSchema& schema,
    const std::string& system_name, double epsilon) {
    if (records_per_model.empty())
        throw evaluation_error("build_solution_set: no models for system '" + system_name + "'");
    std::vector<OperatingPoint> ops;
    for (const auto& [model_id, records] : records_per_model)
        for (double t : thresholds)
            ops.push_back(compute_operating_point(records, model_id, t, schema));
    return deduplicate(solution_set_from_ops(ops, schema, system_name), epsilon);
}

struct APrioriResult {
    std::vector<std::pair<std::string, double>> selected; // (model_id, threshold)
    SolutionSet test_set;
};

/// A priori protocol: pick the non-dominated (model, threshold) combos on
/// the validation sweep, then re-evaluate exactly those combos on the test
/// records. Test labels never influence the selection.
inline APrioriResult a_priori_select(
    const std::vector<OperatingPoint>& validation_ops, const ObjectiveSchema& schema,
    const std::map<std::string, std::vector<PredictionRecord>>& test_records_per_model,
    const std::string& system_name, double epsilon) {
    const SolutionSet val_set =
        deduplicate(solution_set_from_ops(validation_ops, schema, system_name), epsilon);
    const ParetoPartition part = pareto_partition(val_set);

    std::set<std::string> selected_tags;
    for (const auto& sp : part.non_dominated) selected_tags.insert(sp.id);

    APrioriResult result;
    std::vector<OperatingPoint> test_ops;
    for (const auto& op : validation_ops) {
        if (!selected_tags.count(op.tag())) continue;
        selected_tags.erase(op.tag()); // dedup may leave one tag per cluster
        auto it = test_records_per_model.find(op.model_id);
        if (it == test_records_per_model.end())
            throw protocol_error("a_priori_select: model '" + op.model_id +
                                 "' selected on validation has no test records");
        result.selected.emplace_back(op.model_id, op.threshold);
        test_ops.push_back(compute_operating_point(it->second, op.model_id, op.threshold, schema));
    }
    result.test_set =
        deduplicate(solution_set_from_ops(test_ops, schema, system_name), epsilon);
    return result;
}

/// A posteriori protocol: every operating point goes straight to the
/// indicator pipeline.
inline SolutionSet a_posteriori_evaluate(const SolutionSet& test) { return test; }

/// Reads a prediction CSV: sample_id,score,label,<group attrs...> with an
/// optional model_id column. Returns records keyed by model id.
inline std::map<std::string, std::vector<PredictionRecord>> load_predictions(
    const std::string& path, const std::string& default_model_id = "model") {
    const CsvTable t = read_csv(path);
    const std::size_t id_col = column_index(t, "sample_id", path);
    const std::size_t score_col = column_index(t, "score", path);
    const std::size_t label_col = column_index(t, "label", path);
    std::optional<std::size_t> model_col;
    std::vector<std::size_t> attr_cols;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i == id_col || i == score_col || i == label_col) continue;
        if (t.header[i] == "model_id") model_col = i;
        else attr_cols.push_back(i);
    }
    std::map<std::string, std::vector<PredictionRecord>> out;
    for (std::size_t row = 0; row < t.rows.size(); ++row) {
        const auto& fields = t.rows[row];
        const std::string ctx = path + ":" + std::to_string(t.row_lines[row]);
        PredictionRecord r;
        r.sample_id = fields[id_col];
        r.score = parse_double(fields[score_col], ctx);
        const double label = parse_double(fields[label_col], ctx);
        if (label != 0.0 && label != 1.0)
            throw ingestion_error(ctx + ": label must be 0 or 1, got '" + fields[label_col] + "'");
        if (r.score < 0.0 || r.score > 1.0)
            throw ingestion_error(ctx + ": score must be in [0,1], got '" + fields[score_col] + "'");
        r.label = static_cast<int>(label);
        for (std::size_t a : attr_cols) r.groups[t.header[a]] = fields[a];
        out[model_col ? fields[*model_col] : default_model_id].push_back(std::move(r));
    }
    if (out.empty()) throw ingestion_error(path + ": no prediction rows");
    return out;
}

/// Default threshold grid: 101 evenly spaced values 0.00 ... 1.00.
inline std::vector<double> default_threshold_grid() {
    std::vector<double> grid;
    grid.reserve(101);
    for (int i = 0; i <= 100; ++i) grid.push_back(static_cast<double>(i) / 100.0);
    return grid;
}

} // namespace pareval

#endif

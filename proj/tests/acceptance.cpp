// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "pareval/indicators.hpp"
#include "pareval/radar.hpp"
#include "pareval/rng.hpp"
#include "pareval/synth.hpp"
#include "pareval/tradeoff.hpp"
#include "pareval/csv.hpp"

using namespace pareval;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

AreaScore area_of(double hv, double onvg_hat, double onvgr, double ud, double as) {
    IndicatorReport r;
    r.hv = hv;
    r.onvg_hat = onvg_hat;
    r.onvgr = onvgr;
    r.ud = ud;
    r.as_ = as;
    return surveyor_area(radar_geometry(r));
}

CanonicalPoint pt(std::vector<double> c) { return CanonicalPoint{std::move(c)}; }

// --- criterion 1: radar-area golden suite ---------------------------------

void criterion_1() {
    struct Row {
        const char* table;
        double radii[5]; // HV, ONVG_hat, ONVGR, UD, AS
        double printed;
    };
    const std::vector<Row> rows = {
        {"sample/System1", {0.93, 1.00, 0.90, 0.85, 0.89}, 0.84},
        {"sample/System2", {0.18, 0.50, 0.15, 0.07, 0.14}, 0.04},
        {"UC1/System1", {0.35, 1.00, 0.50, 1.00, 0.00}, 0.27},
        {"UC1/System2", {0.04, 1.00, 0.50, 1.00, 0.00}, 0.21},
        {"UC2/System1", {0.24, 0.12, 0.50, 1.00, 0.00}, 0.12},
        {"UC2/System2", {0.09, 1.00, 0.89, 1.00, 0.26}, 0.43},
        {"UC3/System1", {0.54, 1.00, 0.91, 1.00, 0.46}, 0.61},
        {"UC3/System2", {0.02, 0.60, 0.86, 1.00, 0.18}, 0.31},
        {"mBRSET/System1", {0.64, 0.83, 0.56, 0.65, 0.49}, 0.40},
        {"mBRSET/System2", {0.70, 1.00, 0.43, 1.00, 0.39}, 0.44},
        {"Shenzhen/System1", {0.86, 1.00, 0.15, 0.68, 0.22}, 0.29},
        {"Shenzhen/System2", {0.79, 0.64, 0.10, 0.65, 0.45}, 0.26},
        {"HGF/System1", {0.76, 0.86, 0.35, 0.70, 0.16}, 0.28},
        {"HGF/System2", {0.73, 1.00, 0.46, 0.77, 0.15}, 0.35},
    };
    bool all_ok = true;
    std::string detail;
    for (const auto& row : rows) {
        const double got =
            area_of(row.radii[0], row.radii[1], row.radii[2], row.radii[3], row.radii[4])
                .normalized_area;
        const bool ok = std::abs(got - row.printed) <= 0.005;
        if (!ok) {
            all_ok = false;
            char buf[128];
            std::snprintf(buf, sizeof(buf), "%s: expected %.2f, got %.4f (|diff| > 0.005)",
                          row.table, row.printed, got);
            detail += buf;
        }
    }
    report(1, "radar-area golden suite (14 published table rows, tol 0.005)", all_ok, detail);
}

// --- criterion 2: pentagon bound -------------------------------------------

void criterion_2() {
    const auto score = area_of(1, 1, 1, 1, 1);
    const bool ok = std::abs(score.raw_area - 2.3776) <= 1e-3 &&
                    std::abs(score.normalized_area - 1.0) <= 1e-12;
    report(2, "unit pentagon raw area 2.3776 +/- 1e-3, normalized exactly 1", ok,
           "raw=" + format_double(score.raw_area));
}

// --- criterion 3: hypervolume oracle equivalence ----------------------------

double mc_hypervolume(const std::vector<CanonicalPoint>& front, std::size_t n_samples,
                      SplitMix64& rng, double& stderr_out) {
    const std::size_t dim = front[0].dim();
    std::size_t hits = 0;
    std::vector<double> s(dim);
    for (std::size_t i = 0; i < n_samples; ++i) {
        for (auto& v : s) v = rng.next_double();
        for (const auto& p : front) {
            bool inside = true;
            for (std::size_t k = 0; k < dim; ++k)
                if (s[k] > p.coords[k]) {
                    inside = false;
                    break;
                }
            if (inside) {
                ++hits;
                break;
            }
        }
    }
    const double est = static_cast<double>(hits) / static_cast<double>(n_samples);
    stderr_out = std::sqrt(est * (1.0 - est) / static_cast<double>(n_samples));
    return est;
}

// inclusion-exclusion over up to 3 boxes, 2-D
double hv_incl_excl_2d(const std::vector<CanonicalPoint>& front) {
    auto box = [](const CanonicalPoint& a) { return a.coords[0] * a.coords[1]; };
    auto meet = [](const CanonicalPoint& a, const CanonicalPoint& b) {
        return std::min(a.coords[0], b.coords[0]) * std::min(a.coords[1], b.coords[1]);
    };
    double v = 0.0;
    const std::size_t n = front.size();
    for (std::size_t i = 0; i < n; ++i) v += box(front[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) v -= meet(front[i], front[j]);
    if (n == 3) {
        double x = front[0].coords[0], y = front[0].coords[1];
        for (std::size_t i = 1; i < 3; ++i) {
            x = std::min(x, front[i].coords[0]);
            y = std::min(y, front[i].coords[1]);
        }
        v += x * y;
    }
    return v;
}

void criterion_3() {
    SplitMix64 rng(20260826);
    bool ok = true;
    std::string detail;

    // exact vs inclusion-exclusion on 2-D fronts of up to 3 points
    if (std::abs(hypervolume({pt({0.8, 0.2}), pt({0.2, 0.8})}) - 0.28) > 1e-12) {
        ok = false;
        detail += "2-point front != 0.28; ";
    }
    for (int it = 0; it < 200 && ok; ++it) {
        std::vector<CanonicalPoint> front;
        const std::size_t m = 1 + rng.next_u64() % 3;
        for (std::size_t i = 0; i < m; ++i)
            front.push_back(pt({rng.next_double(), rng.next_double()}));
        if (std::abs(hypervolume(front) - hv_incl_excl_2d(front)) > 1e-12) {
            ok = false;
            detail = "inclusion-exclusion mismatch";
        }
    }

    // exact vs Monte-Carlo on 200 random fronts, N in {2,3,4}
    int mc_failures = 0;
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = 2 + it % 3;
        const std::size_t m = 1 + rng.next_u64() % 12;
        std::vector<CanonicalPoint> front;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<double> c(n);
            for (auto& v : c) v = rng.next_double();
            front.push_back(pt(std::move(c)));
        }
        double se = 0.0;
        const double mc = mc_hypervolume(front, 1000000, rng, se);
        if (std::abs(hypervolume(front) - mc) > 3.0 * se + 1e-9) ++mc_failures;
    }
    // 3 sigma admits ~0.27% statistical misses; allow at most 2 of 200
    if (mc_failures > 2) {
        ok = false;
        detail += "Monte-Carlo disagreements: " + std::to_string(mc_failures) + "/200";
    }
    report(3, "hypervolume vs Monte-Carlo (200 fronts, 1e6 samples) and inclusion-exclusion",
           ok, detail);
}

// --- criterion 4: dominance oracle equivalence ------------------------------

void criterion_4() {
    SplitMix64 rng(41);
    bool ok = true;
    for (int it = 0; it < 1000 && ok; ++it) {
        const std::size_t m = 1 + rng.next_u64() % 100;
        const std::size_t n = 2 + rng.next_u64() % 4;
        SolutionSet s;
        s.system_name = "r";
        s.n_objectives = n;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<double> c(n);
            for (auto& v : c) v = rng.next_double();
            s.points.push_back({"p" + std::to_string(i), pt(std::move(c))});
        }
        const auto part = pareto_partition(s);
        // independent pairwise oracle
        std::size_t oracle_front = 0;
        for (std::size_t i = 0; i < m; ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < m && !dominated; ++j) {
                if (i == j) continue;
                bool ge = true, gt = false;
                for (std::size_t k = 0; k < n; ++k) {
                    if (s.points[j].point.coords[k] < s.points[i].point.coords[k]) ge = false;
                    if (s.points[j].point.coords[k] > s.points[i].point.coords[k]) gt = true;
                }
                dominated = ge && gt;
            }
            if (!dominated) ++oracle_front;
        }
        ok = part.non_dominated.size() == oracle_front &&
             part.non_dominated.size() + part.dominated.size() == m;
    }
    report(4, "pareto_partition matches the pairwise oracle on 1000 random sets", ok);
}

// --- criterion 5: single-point edge behavior --------------------------------

void criterion_5() {
    SolutionSet s;
    s.system_name = "single";
    s.n_objectives = 2;
    s.points.push_back({"only", pt({0.7, 0.7})});
    const auto r = evaluate_system(s, 1e-6, NicheConfig(0.1));
    report(5, "single-solution system yields UD = 1.00 and AS = 0.00",
           r.ud == 1.0 && r.as_ == 0.0);
}

// --- criterion 6: capacity fixtures -----------------------------------------

void criterion_6() {
    bool ok = true;
    std::string detail;
    auto check = [&](UseCase uc, double hat1, double onvgr1, double hat2, double onvgr2,
                     const char* name) {
        const auto [s1, s2] = uc_fixture(uc);
        const auto reports = evaluate_session({s1, s2}, 1e-6, NicheConfig(0.1));
        const bool row_ok = std::abs(*reports[0].onvg_hat - hat1) <= 0.005 &&
                            std::abs(reports[0].onvgr - onvgr1) <= 0.005 &&
                            std::abs(*reports[1].onvg_hat - hat2) <= 0.005 &&
                            std::abs(reports[1].onvgr - onvgr2) <= 0.005;
        if (!row_ok) {
            ok = false;
            detail += std::string(name) + " mismatch; ";
        }
    };
    check(UseCase::UC1, 1.00, 0.50, 1.00, 0.50, "UC1");
    check(UseCase::UC2, 0.125, 0.50, 1.00, 8.0 / 9.0, "UC2");
    check(UseCase::UC3, 1.00, 10.0 / 11.0, 0.60, 6.0 / 7.0, "UC3");
    report(6, "uc_fixture cardinalities reproduce the ONVG_hat/ONVGR columns", ok, detail);
}

// --- criterion 7: deduplication contract ------------------------------------

void criterion_7() {
    SplitMix64 rng(7);
    bool ok = true;
    const double eps = 1e-6;
    for (int it = 0; it < 50 && ok; ++it) {
        SolutionSet s;
        s.system_name = "d";
        s.n_objectives = 2;
        // random points plus planted epsilon-near duplicates
        for (int i = 0; i < 30; ++i) {
            const double x = rng.next_double(), y = rng.next_double();
            s.points.push_back({"p" + std::to_string(i), pt({x, y})});
            if (i % 3 == 0)
                s.points.push_back({"dup" + std::to_string(i),
                                    pt({x + 0.3e-6 * rng.next_double(), y})});
        }
        const auto once = deduplicate(s, eps);
        for (std::size_t i = 0; i < once.points.size() && ok; ++i)
            for (std::size_t j = i + 1; j < once.points.size(); ++j)
                if (euclidean_distance(once.points[i].point, once.points[j].point) <= eps)
                    ok = false;
        const auto twice = deduplicate(once, eps);
        if (twice.points.size() != once.points.size()) ok = false;
    }
    // duplicate-free inputs pass through unchanged
    SolutionSet clean;
    clean.system_name = "c";
    clean.n_objectives = 2;
    for (int i = 0; i < 10; ++i)
        clean.points.push_back({"p" + std::to_string(i), pt({0.1 * i, 1.0 - 0.1 * i})});
    const auto out = deduplicate(clean, eps);
    if (out.points.size() != clean.points.size()) ok = false;
    for (std::size_t i = 0; ok && i < out.points.size(); ++i)
        if (out.points[i].id != clean.points[i].id) ok = false;
    report(7, "dedup retains only pairs > epsilon apart, idempotent, identity on clean input",
           ok);
}

// --- criterion 8: protocol equality ------------------------------------------

std::string report_fingerprint(const IndicatorReport& r) {
    return format_double(r.hv) + "|" + std::to_string(r.onvg) + "|" +
           format_double(r.onvg_hat.value_or(-1.0)) + "|" + format_double(r.onvgr) + "|" +
           format_double(r.ud) + "|" + format_double(r.os) + "|" + format_double(r.as_) + "|" +
           std::to_string(r.n_points) + "|" + std::to_string(r.n_nondominated);
}

void criterion_8() {
    // fixture where validation and test are the same record set
    std::vector<PredictionRecord> records;
    const double scores[] = {0.95, 0.85, 0.7, 0.6, 0.45, 0.4, 0.3, 0.25, 0.15, 0.05};
    const int labels[] = {1, 1, 0, 1, 1, 0, 0, 1, 0, 0};
    for (int i = 0; i < 10; ++i) {
        PredictionRecord r;
        r.sample_id = "s" + std::to_string(i);
        r.score = scores[i];
        r.label = labels[i];
        r.groups["g"] = i % 2 ? "A" : "B";
        records.push_back(std::move(r));
    }
    ObjectiveSchema schema({{"acc", Direction::Maximize, 0.0, 1.0},
                            {"eodd:g", Direction::Minimize, 0.0, 1.0}});
    const std::vector<double> grid = {0.1, 0.2, 0.35, 0.5, 0.65, 0.8, 0.9};
    std::map<std::string, std::vector<PredictionRecord>> per_model{{"m1", records}};

    std::vector<OperatingPoint> val_ops;
    for (double t : grid) val_ops.push_back(compute_operating_point(records, "m1", t, schema));
    const auto apriori = a_priori_select(val_ops, schema, per_model, "sys", 1e-6);

    const auto aposteriori_set =
        a_posteriori_evaluate(build_solution_set(per_model, grid, schema, "sys", 1e-6));
    // the a posteriori pipeline reduces to the same front when val == test;
    // compare reports computed on the fronts of both routes
    const SolutionSet apost_front{
        "sys", 2, pareto_partition(aposteriori_set).non_dominated};
    const auto ra = evaluate_system(apriori.test_set, 1e-6, NicheConfig(0.1));
    const auto rb = evaluate_system(apost_front, 1e-6, NicheConfig(0.1));

    report(8, "a priori == a posteriori indicators when validation equals test",
           report_fingerprint(ra) == report_fingerprint(rb),
           report_fingerprint(ra) == report_fingerprint(rb)
               ? ""
               : report_fingerprint(ra) + " vs " + report_fingerprint(rb));
}

// --- criterion 9: fairness-metric oracle -------------------------------------

void criterion_9() {
    // 10 samples, two groups, threshold 0.5; confusion per group worked by hand:
    //   A: TP 2, FP 1, TN 1, FN 1 -> posrate 3/5, TPR 2/3, FPR 1/2, F1 2/3
    //   B: TP 1, FP 1, TN 2, FN 1 -> posrate 2/5, TPR 1/2, FPR 1/3, F1 1/2
    std::vector<PredictionRecord> records;
    struct Sample {
        double score;
        int label;
        const char* g;
    };
    const Sample samples[] = {
        {0.9, 1, "A"}, {0.8, 1, "A"}, {0.6, 0, "A"}, {0.4, 1, "A"}, {0.2, 0, "A"},
        {0.7, 1, "B"}, {0.55, 0, "B"}, {0.3, 1, "B"}, {0.2, 0, "B"}, {0.1, 0, "B"},
    };
    int i = 0;
    for (const auto& s : samples) {
        PredictionRecord r;
        r.sample_id = "s" + std::to_string(i++);
        r.score = s.score;
        r.label = s.label;
        r.groups["g"] = s.g;
        records.push_back(std::move(r));
    }

    const auto counts = confusion_counts(records, 0.5);
    const auto [acc, f1] = utility_metrics(counts);
    const auto fm = fairness_metrics(records, 0.5, "g");

    bool ok = counts.tp == 3 && counts.fp == 2 && counts.tn == 3 && counts.fn == 2;
    ok = ok && acc == 0.6 && f1 == 6.0 / 10.0;
    ok = ok && std::abs(fm.dp_diff - 0.2) <= 1e-15;
    ok = ok && std::abs(fm.eodd_diff - (2.0 / 3.0 - 0.5)) <= 1e-15;
    ok = ok && std::abs(fm.minmax_f1_diff - (2.0 / 3.0 - 0.5)) <= 1e-15;

    // symmetric two-group fixture: all differences vanish
    std::vector<PredictionRecord> sym = records;
    for (auto& r : sym) r.groups["g"] = "A";
    std::vector<PredictionRecord> mirror = records;
    for (auto& r : mirror) {
        r.groups["g"] = "B";
        r.sample_id += "m";
    }
    sym.insert(sym.end(), mirror.begin(), mirror.end());
    const auto fm_sym = fairness_metrics(sym, 0.5, "g");
    ok = ok && fm_sym.dp_diff == 0.0 && fm_sym.eodd_diff == 0.0 && fm_sym.minmax_f1_diff == 0.0;

    report(9, "Acc/F1/DP/EOdd match hand arithmetic on the 10-sample fixture", ok);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("NOTE  criterion 10: dataset-level indicator values from the trained systems "
                "are excluded by design (unpublished models, splits, and sigma); criteria 1-9 "
                "substitute for them\n");
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ln3113/oracle.hpp"
#include "ln3113/sieve_high.hpp"
#include "ln3113/sieve_n3.hpp"
#include "ln3113/sieve_n4.hpp"

namespace ln3113 {

using ordered_json = nlohmann::ordered_json;

struct SolveConfig {
    Int mordell_height{1'000'000};
    unsigned mordell_denom = 2;
    Int quartic_height{1'000};
    unsigned quartic_denom = 2;
    Int delta_height{20'000};
    unsigned delta_denom3 = 1;
    unsigned sieve_n_max = 97;
    SearchBudget oracle_budget{};
    bool run_n3 = true, run_n4 = true, run_n7 = true, run_oracle = true, run_sieve = true;

    friend bool operator==(const SolveConfig&, const SolveConfig&) = default;
};

enum class SolveStatus { match = 0, mismatch = 1, incomplete = 2 };

inline const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::match: return "match";
        case SolveStatus::mismatch: return "mismatch";
        case SolveStatus::incomplete: return "incomplete";
    }
    throw std::logic_error("status_name: bad status");
}

inline std::optional<SolveStatus> status_from_name(std::string_view name) {
    for (SolveStatus s : {SolveStatus::match, SolveStatus::mismatch, SolveStatus::incomplete})
        if (name == status_name(s)) return s;
    return std::nullopt;
}

struct OracleComparison {
    bool ran = false;
    bool consistent = true;
    std::vector<std::string> notes;
};

struct RunReport {
    SolveConfig config;
    N3Result n3;
    N4Result n4;
    N7Result n7;
    std::vector<SieveOutcome> verdicts;
    std::vector<Solution> oracle_solutions;
    std::vector<Solution> combined;  // union over the algebraic branches and the oracle
    std::vector<Solution> expected;  // the known set restricted to what was selected
    std::vector<Solution> missing, extra;
    OracleComparison oracle_check;
    std::vector<std::string> exclusions;
    std::vector<std::pair<std::string, std::string>> timings;  // phase -> milliseconds
    SolveStatus status = SolveStatus::match;
};

inline int exit_code(const RunReport& r) { return static_cast<int>(r.status); }

inline bool in_oracle_region(const Solution& s, const SearchBudget& b) {
    if (s.y > b.y_max || s.n < b.n_min || s.n > b.n_max) return false;
    return b.power_cap == 0 || pow_int(s.y, s.n) <= b.power_cap;
}

inline bool n3_covers(const Solution& s, const SolveConfig& c) {
    return s.n == 3 && s.y <= c.mordell_height && s.alpha / 6 + s.beta / 6 <= c.mordell_denom;
}

inline bool n4_covers(const Solution& s, const SolveConfig& c) {
    return s.n == 4 && s.y <= c.quartic_height && s.alpha / 4 + s.beta / 4 <= c.quartic_denom;
}

namespace detail {

inline std::string solution_str(const Solution& s) {
    return "(" + s.x.str() + ", " + s.y.str() + ", " + std::to_string(s.n) + ", " +
           std::to_string(s.alpha) + ", " + std::to_string(s.beta) + ")";
}

inline bool contains(const std::vector<Solution>& v, const Solution& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

inline void sort_unique(std::vector<Solution>& v) {
    std::sort(v.begin(), v.end(), solution_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// the oracle and the branch solvers must tell the same story wherever their
// coverage regions overlap
inline OracleComparison compare_with_oracle(const RunReport& r) {
    OracleComparison check;
    check.ran = true;
    const auto& cfg = r.config;
    auto flag = [&](std::string msg) {
        check.consistent = false;
        check.notes.push_back(std::move(msg));
    };
    for (const auto& s : r.oracle_solutions) {
        if (s.n == 3) {
            if (cfg.run_n3 && n3_covers(s, cfg) && !contains(r.n3.solutions, s))
                flag("oracle solution " + solution_str(s) + " missed by the n=3 branch");
            continue;
        }
        if (s.n == 4) {
            if (cfg.run_n4 && n4_covers(s, cfg) && !contains(r.n4.solutions, s))
                flag("oracle solution " + solution_str(s) + " missed by the n=4 branch");
            continue;
        }
        const auto canon = normalize_exponent(s.n);
        if (canon.value == 3 || canon.value == 4) {
            // composite exponent: the reduced tuple must appear in its branch
            const Solution derived{s.x, pow_int(s.y, s.n / canon.value), canon.value, s.alpha,
                                   s.beta};
            if (canon.value == 3 && cfg.run_n3 && n3_covers(derived, cfg) &&
                !contains(r.n3.solutions, derived))
                flag("oracle solution " + solution_str(s) + " has no reduced n=3 counterpart");
            if (canon.value == 4 && cfg.run_n4 && n4_covers(derived, cfg) &&
                !contains(r.n4.solutions, derived))
                flag("oracle solution " + solution_str(s) + " has no reduced n=4 counterpart");
            continue;
        }
        if (canon.excluded19) {
            check.notes.push_back("oracle solution " + solution_str(s) +
                                  " falls in the unresolved 19 | n family");
            continue;
        }
        flag("oracle solution " + solution_str(s) + " contradicts the n>=5 sieve");
    }
    auto branch_side = [&](const std::vector<Solution>& sols, const char* branch) {
        for (const auto& s : sols)
            if (in_oracle_region(s, cfg.oracle_budget) && !contains(r.oracle_solutions, s))
                flag("solution " + solution_str(s) + " from " + branch + " missed by the oracle");
    };
    if (cfg.run_n3) branch_side(r.n3.solutions, "n3");
    if (cfg.run_n4) branch_side(r.n4.solutions, "n4");
    if (cfg.run_n7) branch_side(r.n7.solutions, "n7");
    return check;
}

inline bool bounds_below_default(const SolveConfig& c) {
    const SolveConfig d;
    if (c.run_n3 && (c.mordell_height < d.mordell_height || c.mordell_denom < d.mordell_denom))
        return true;
    if (c.run_n4 && (c.quartic_height < d.quartic_height || c.quartic_denom < d.quartic_denom))
        return true;
    if (c.run_n7 && (c.delta_height < d.delta_height || c.delta_denom3 < d.delta_denom3))
        return true;
    if (c.run_sieve && c.sieve_n_max < d.sieve_n_max) return true;
    return false;
}

}  // namespace detail

// exit 0: reproduction matches; 2: only losses explainable by shrunken
// bounds; 1: anything unexplained in either direction
inline SolveStatus classify_outcome(bool extra_or_inconsistent, bool missing, bool below_default) {
    if (extra_or_inconsistent) return SolveStatus::mismatch;
    if (missing) return below_default ? SolveStatus::incomplete : SolveStatus::mismatch;
    return SolveStatus::match;
}

inline RunReport run_solve(const SolveConfig& config) {
    RunReport report;
    report.config = config;
    using clock = std::chrono::steady_clock;
    auto timed = [&](const char* phase, auto&& fn) {
        const auto start = clock::now();
        fn();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);
        report.timings.emplace_back(phase, std::to_string(ms.count()));
    };
    if (config.run_n3)
        timed("n3", [&] { report.n3 = solve_n3(config.mordell_height, config.mordell_denom); });
    if (config.run_n4)
        timed("n4", [&] { report.n4 = solve_n4(config.quartic_height, config.quartic_denom); });
    if (config.run_sieve)
        timed("sieve", [&] { report.verdicts = sieve_table(config.sieve_n_max); });
    if (config.run_n7)
        timed("n7", [&] { report.n7 = solve_n7(config.delta_height, config.delta_denom3); });
    if (config.run_oracle)
        timed("oracle", [&] { report.oracle_solutions = brute_force(config.oracle_budget); });

    for (const auto& s : report.n3.solutions) report.combined.push_back(s);
    for (const auto& s : report.n4.solutions) report.combined.push_back(s);
    for (const auto& s : report.n7.solutions) report.combined.push_back(s);
    for (const auto& s : report.oracle_solutions) report.combined.push_back(s);
    detail::sort_unique(report.combined);

    if (config.run_n3) report.expected = known_solutions();
    if (config.run_oracle)
        for (const auto& s : known_solutions())
            if (in_oracle_region(s, config.oracle_budget)) report.expected.push_back(s);
    detail::sort_unique(report.expected);

    for (const auto& s : report.expected)
        if (!detail::contains(report.combined, s)) report.missing.push_back(s);
    for (const auto& s : report.combined)
        if (!detail::contains(report.expected, s)) report.extra.push_back(s);

    if (config.run_oracle) report.oracle_check = detail::compare_with_oracle(report);

    if (config.run_sieve) {
        for (const auto& row : report.verdicts)
            if (row.verdict == Verdict::forces_n19_excluded) {
                report.exclusions.push_back(
                    "exponents divisible by 19 with d = " + std::to_string(row.d) +
                    " (alpha odd, beta even) are not settled by the sieve; the "
                    "completeness claim excludes 19 | n");
                break;
            }
    }

    report.status =
        classify_outcome(!report.extra.empty() || !report.oracle_check.consistent,
                         !report.missing.empty(), detail::bounds_below_default(config));
    return report;
}

// ---------------------------------------------------------------------------
// serialization: every numeric field is an exact decimal integer string, and
// every listed point or solution re-verifies its defining identity on the way
// out

namespace detail {

inline ordered_json solution_json(const Solution& s) {
    if (!solution_holds(s)) throw std::logic_error("report: solution failed re-verification");
    return {{"x", s.x.str()},
            {"y", s.y.str()},
            {"n", std::to_string(s.n)},
            {"alpha", std::to_string(s.alpha)},
            {"beta", std::to_string(s.beta)}};
}

inline Solution solution_from_json(const ordered_json& j) {
    return {Int(j.at("x").get<std::string>()), Int(j.at("y").get<std::string>()),
            static_cast<unsigned>(std::stoul(j.at("n").get<std::string>())),
            static_cast<unsigned>(std::stoul(j.at("alpha").get<std::string>())),
            static_cast<unsigned>(std::stoul(j.at("beta").get<std::string>()))};
}

inline ordered_json solutions_json(const std::vector<Solution>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : v) arr.push_back(solution_json(s));
    return arr;
}

inline std::vector<Solution> solutions_from_json(const ordered_json& arr) {
    std::vector<Solution> v;
    for (const auto& j : arr) v.push_back(solution_from_json(j));
    return v;
}

template <typename Curve, typename Checker>
ordered_json point_json(CurveFamily family, const Curve& curve, const SIntegralPoint& p,
                        Checker&& on_curve_fn) {
    if (!on_curve_fn(curve, p)) throw std::logic_error("report: point failed re-verification");
    const auto [xden, yden] = point_denominators(family, p);
    return {{"x", p.xnum.str()},   {"xden", xden.str()}, {"y", p.ynum.str()},
            {"yden", yden.str()},  {"a", std::to_string(p.a)}, {"b", std::to_string(p.b)}};
}

inline SIntegralPoint point_from_json(const ordered_json& j) {
    return {Int(j.at("x").get<std::string>()), Int(j.at("y").get<std::string>()),
            static_cast<unsigned>(std::stoul(j.at("a").get<std::string>())),
            static_cast<unsigned>(std::stoul(j.at("b").get<std::string>()))};
}

}  // namespace detail

inline ordered_json report_to_json(const RunReport& r) {
    ordered_json j;
    ordered_json sols;
    sols["combined"] = detail::solutions_json(r.combined);
    sols["expected"] = detail::solutions_json(r.expected);
    sols["missing"] = detail::solutions_json(r.missing);
    sols["extra"] = detail::solutions_json(r.extra);
    sols["n3"] = detail::solutions_json(r.n3.solutions);
    sols["n4"] = detail::solutions_json(r.n4.solutions);
    sols["n7"] = detail::solutions_json(r.n7.solutions);
    sols["oracle"] = detail::solutions_json(r.oracle_solutions);
    sols["status"] = status_name(r.status);
    sols["oracle_comparison"] = {{"ran", r.oracle_check.ran},
                                 {"consistent", r.oracle_check.consistent},
                                 {"notes", r.oracle_check.notes}};
    j["solutions"] = std::move(sols);

    ordered_json points;
    ordered_json mordell = ordered_json::array();
    for (const auto& run : r.n3.searches) {
        ordered_json pts = ordered_json::array();
        for (const auto& p : run.points)
            pts.push_back(detail::point_json(CurveFamily::mordell, run.curve, p,
                                             [](auto& c, auto& q) { return on_mordell(c, q); }));
        mordell.push_back({{"curve", run.curve.id()}, {"points", std::move(pts)}});
    }
    points["mordell"] = std::move(mordell);
    ordered_json quartic = ordered_json::array();
    for (const auto& run : r.n4.searches) {
        ordered_json pts = ordered_json::array();
        for (const auto& p : run.points)
            pts.push_back(detail::point_json(CurveFamily::quartic, run.curve, p,
                                             [](auto& c, auto& q) { return on_quartic(c, q); }));
        quartic.push_back({{"curve", run.curve.id()}, {"points", std::move(pts)}});
    }
    points["quartic"] = std::move(quartic);
    auto delta_runs = [&](const std::vector<N7Result::CurvePoints>& runs) {
        ordered_json arr = ordered_json::array();
        for (const auto& run : runs) {
            ordered_json pts = ordered_json::array();
            for (const auto& p : run.points)
                pts.push_back(
                    detail::point_json(CurveFamily::delta_cubic, run.curve, p,
                                       [](auto& c, auto& q) { return on_delta_cubic(c, q); }));
            arr.push_back({{"curve", run.curve.id()},
                           {"denom3", std::to_string(run.denom3)},
                           {"points", std::move(pts)}});
        }
        return arr;
    };
    points["delta_integral"] = delta_runs(r.n7.integral_runs);
    points["delta_rational"] = delta_runs(r.n7.rational_runs);
    j["points"] = std::move(points);

    ordered_json verdicts = ordered_json::array();
    for (const auto& row : r.verdicts)
        verdicts.push_back({{"d", std::to_string(row.d)},
                            {"n", std::to_string(row.n)},
                            {"verdict", verdict_name(row.verdict)}});
    j["verdicts"] = std::move(verdicts);

    j["exclusions"] = r.exclusions;

    std::string branches;
    auto add_branch = [&](bool on, const char* name) {
        if (!on) return;
        if (!branches.empty()) branches += ",";
        branches += name;
    };
    add_branch(r.config.run_n3, "n3");
    add_branch(r.config.run_n4, "n4");
    add_branch(r.config.run_n7, "n7");
    add_branch(r.config.run_oracle, "oracle");
    add_branch(r.config.run_sieve, "sieve");
    j["bounds"] = {{"branches", branches},
                   {"mordell_height", r.config.mordell_height.str()},
                   {"mordell_denom", std::to_string(r.config.mordell_denom)},
                   {"quartic_height", r.config.quartic_height.str()},
                   {"quartic_denom", std::to_string(r.config.quartic_denom)},
                   {"delta_height", r.config.delta_height.str()},
                   {"delta_denom3", std::to_string(r.config.delta_denom3)},
                   {"sieve_n_max", std::to_string(r.config.sieve_n_max)},
                   {"oracle_y_max", r.config.oracle_budget.y_max.str()},
                   {"oracle_n_min", std::to_string(r.config.oracle_budget.n_min)},
                   {"oracle_n_max", std::to_string(r.config.oracle_budget.n_max)},
                   {"oracle_power_cap", r.config.oracle_budget.power_cap.str()}};

    ordered_json timings = ordered_json::array();
    for (const auto& [phase, ms] : r.timings) timings.push_back({{"phase", phase}, {"ms", ms}});
    j["timings"] = std::move(timings);
    return j;
}

inline RunReport report_from_json(const ordered_json& j) {
    RunReport r;
    const auto& bounds = j.at("bounds");
    const std::string branches = bounds.at("branches").get<std::string>();
    auto has_branch = [&](const std::string& name) {
        return ("," + branches + ",").find("," + name + ",") != std::string::npos;
    };
    r.config.run_n3 = has_branch("n3");
    r.config.run_n4 = has_branch("n4");
    r.config.run_n7 = has_branch("n7");
    r.config.run_oracle = has_branch("oracle");
    r.config.run_sieve = has_branch("sieve");
    r.config.mordell_height = Int(bounds.at("mordell_height").get<std::string>());
    r.config.mordell_denom = std::stoul(bounds.at("mordell_denom").get<std::string>());
    r.config.quartic_height = Int(bounds.at("quartic_height").get<std::string>());
    r.config.quartic_denom = std::stoul(bounds.at("quartic_denom").get<std::string>());
    r.config.delta_height = Int(bounds.at("delta_height").get<std::string>());
    r.config.delta_denom3 = std::stoul(bounds.at("delta_denom3").get<std::string>());
    r.config.sieve_n_max = std::stoul(bounds.at("sieve_n_max").get<std::string>());
    r.config.oracle_budget.y_max = Int(bounds.at("oracle_y_max").get<std::string>());
    r.config.oracle_budget.n_min = std::stoul(bounds.at("oracle_n_min").get<std::string>());
    r.config.oracle_budget.n_max = std::stoul(bounds.at("oracle_n_max").get<std::string>());
    r.config.oracle_budget.power_cap = Int(bounds.at("oracle_power_cap").get<std::string>());

    r.n3.height_bound = r.config.mordell_height;
    r.n3.denom_bound = r.config.mordell_denom;
    r.n4.height_bound = r.config.quartic_height;
    r.n4.denom_bound = r.config.quartic_denom;
    r.n7.height_bound = r.config.delta_height;
    r.n7.denom3_bound = r.config.delta_denom3;

    const auto& sols = j.at("solutions");
    r.combined = detail::solutions_from_json(sols.at("combined"));
    r.expected = detail::solutions_from_json(sols.at("expected"));
    r.missing = detail::solutions_from_json(sols.at("missing"));
    r.extra = detail::solutions_from_json(sols.at("extra"));
    r.n3.solutions = detail::solutions_from_json(sols.at("n3"));
    r.n4.solutions = detail::solutions_from_json(sols.at("n4"));
    r.n7.solutions = detail::solutions_from_json(sols.at("n7"));
    r.oracle_solutions = detail::solutions_from_json(sols.at("oracle"));
    if (auto s = status_from_name(sols.at("status").get<std::string>()))
        r.status = *s;
    else
        throw std::invalid_argument("report: unknown status");
    const auto& oc = sols.at("oracle_comparison");
    r.oracle_check.ran = oc.at("ran").get<bool>();
    r.oracle_check.consistent = oc.at("consistent").get<bool>();
    r.oracle_check.notes = oc.at("notes").get<std::vector<std::string>>();

    auto parse_curve_tail = [](const std::string& id, const std::string& prefix) {
        return id.substr(prefix.size());
    };
    const auto& points = j.at("points");
    for (const auto& run : points.at("mordell")) {
        const std::string tail = parse_curve_tail(run.at("curve").get<std::string>(), "mordell:");
        const auto colon = tail.find(':');
        N3Result::CurvePoints cp;
        cp.curve.exp3 = std::stoul(tail.substr(0, colon));
        cp.curve.exp113 = std::stoul(tail.substr(colon + 1));
        for (const auto& p : run.at("points")) cp.points.push_back(detail::point_from_json(p));
        r.n3.searches.push_back(std::move(cp));
    }
    for (const auto& run : points.at("quartic")) {
        const std::string tail = parse_curve_tail(run.at("curve").get<std::string>(), "quartic:");
        const auto colon = tail.find(':');
        N4Result::CurvePoints cp;
        cp.curve.exp3 = std::stoul(tail.substr(0, colon));
        cp.curve.exp113 = std::stoul(tail.substr(colon + 1));
        for (const auto& p : run.at("points")) cp.points.push_back(detail::point_from_json(p));
        r.n4.searches.push_back(std::move(cp));
    }
    auto delta_runs = [&](const ordered_json& arr) {
        std::vector<N7Result::CurvePoints> runs;
        for (const auto& run : arr) {
            N7Result::CurvePoints cp;
            cp.curve.delta =
                std::stoll(parse_curve_tail(run.at("curve").get<std::string>(), "delta:"));
            cp.denom3 = std::stoul(run.at("denom3").get<std::string>());
            for (const auto& p : run.at("points")) cp.points.push_back(detail::point_from_json(p));
            runs.push_back(std::move(cp));
        }
        return runs;
    };
    r.n7.integral_runs = delta_runs(points.at("delta_integral"));
    r.n7.rational_runs = delta_runs(points.at("delta_rational"));

    for (const auto& row : j.at("verdicts")) {
        const auto v = verdict_from_name(row.at("verdict").get<std::string>());
        if (!v) throw std::invalid_argument("report: unknown verdict");
        r.verdicts.push_back({static_cast<unsigned>(std::stoul(row.at("d").get<std::string>())),
                              static_cast<unsigned>(std::stoul(row.at("n").get<std::string>())),
                              *v});
    }
    r.exclusions = j.at("exclusions").get<std::vector<std::string>>();
    for (const auto& t : j.at("timings"))
        r.timings.emplace_back(t.at("phase").get<std::string>(), t.at("ms").get<std::string>());
    return r;
}

inline std::string report_to_text(const RunReport& r) {
    std::ostringstream out;
    const auto& c = r.config;
    out << "x^2 + 3^alpha * 113^beta = y^n  (gcd(x, y) = 1, n >= 3)\n";
    out << "bounds:";
    if (c.run_n3)
        out << "  mordell height " << c.mordell_height << ", denom " << c.mordell_denom << ";";
    if (c.run_n4)
        out << "  quartic height " << c.quartic_height << ", denom " << c.quartic_denom << ";";
    if (c.run_n7)
        out << "  delta height " << c.delta_height << ", denom3 " << c.delta_denom3 << ";";
    if (c.run_sieve) out << "  sieve n <= " << c.sieve_n_max << ";";
    if (c.run_oracle)
        out << "  oracle y <= " << c.oracle_budget.y_max << ", " << c.oracle_budget.n_min
            << " <= n <= " << c.oracle_budget.n_max << ";";
    out << "\n\n";

    out << "solutions (x, y, n, alpha, beta): " << r.combined.size() << "\n";
    std::array<std::size_t, 5> width{1, 1, 1, 1, 1};
    auto columns = [](const Solution& s) {
        return std::array<std::string, 5>{s.x.str(), s.y.str(), std::to_string(s.n),
                                          std::to_string(s.alpha), std::to_string(s.beta)};
    };
    for (const auto& s : r.combined)
        for (std::size_t k = 0; k < 5; ++k) width[k] = std::max(width[k], columns(s)[k].size());
    for (const auto& s : r.combined) {
        if (!solution_holds(s)) throw std::logic_error("report: solution failed re-verification");
        const auto cols = columns(s);
        out << " ";
        for (std::size_t k = 0; k < 5; ++k)
            out << " " << std::string(width[k] - cols[k].size(), ' ') << cols[k];
        out << "\n";
    }
    if (!r.missing.empty()) {
        out << "missing from the known set:\n";
        for (const auto& s : r.missing) out << "  " << detail::solution_str(s) << "\n";
    }
    if (!r.extra.empty()) {
        out << "not in the known set:\n";
        for (const auto& s : r.extra) out << "  " << detail::solution_str(s) << "\n";
    }
    out << "status: " << status_name(r.status);
    if (r.status == SolveStatus::incomplete)
        out << " (bounded search below default bounds; completeness not claimed)";
    out << "\n";
    for (const auto& e : r.exclusions) out << "NOTE: " << e << "\n";
    if (r.oracle_check.ran) {
        out << "oracle cross-check: " << (r.oracle_check.consistent ? "consistent" : "INCONSISTENT")
            << "\n";
        for (const auto& note : r.oracle_check.notes) out << "  " << note << "\n";
    }

    auto list_points = [&](CurveFamily family, const std::string& id,
                           const std::vector<SIntegralPoint>& pts) {
        if (pts.empty()) return;
        for (const auto& p : pts) out << "  " << point_line(family, id, p) << "\n";
    };
    if (c.run_n3) {
        out << "\nmordell points (height " << c.mordell_height << ", denom " << c.mordell_denom
            << "):\n";
        for (const auto& run : r.n3.searches)
            list_points(CurveFamily::mordell, run.curve.id(), run.points);
    }
    if (c.run_n4) {
        out << "quartic points (height " << c.quartic_height << ", denom " << c.quartic_denom
            << "):\n";
        for (const auto& run : r.n4.searches)
            list_points(CurveFamily::quartic, run.curve.id(), run.points);
        out << "  (coordinates read as B then A; the transposed reading fails the curve)\n";
    }
    auto list_delta_runs = [&](const std::vector<N7Result::CurvePoints>& runs) {
        // the per-curve emptiness is part of the result here, so print it
        for (const auto& run : runs) {
            if (run.points.empty()) {
                out << "  " << run.curve.id() << " (none within bounds)\n";
                continue;
            }
            list_points(CurveFamily::delta_cubic, run.curve.id(), run.points);
        }
    };
    if (c.run_n7) {
        out << "delta cubic points, integral runs (height " << c.delta_height << "):\n";
        list_delta_runs(r.n7.integral_runs);
        out << "delta cubic points, {3}-denominator runs (height " << c.delta_height
            << ", denom3 " << c.delta_denom3 << "):\n";
        list_delta_runs(r.n7.rational_runs);
    }
    if (c.run_sieve) {
        out << "sieve verdicts (odd primes 5 <= n <= " << c.sieve_n_max << "):\n";
        for (const auto& row : r.verdicts)
            if (row.verdict != Verdict::eliminated_no_candidate)
                out << "  d=" << row.d << " n=" << row.n << "  " << verdict_name(row.verdict)
                    << "\n";
        out << "  (all other cells: eliminated-no-candidate)\n";
    }
    out << "timings:";
    for (const auto& [phase, ms] : r.timings) out << "  " << phase << " " << ms << "ms";
    out << "\n";
    return out.str();
}

}  // namespace ln3113

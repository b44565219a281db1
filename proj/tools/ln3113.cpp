// command line front end: solve / verify / curves / oracle / sieve-table

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ln3113/report.hpp"

namespace {

using namespace ln3113;

Int parse_int(const std::string& text, const char* what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + ": not a decimal integer: " + text);
    }
}

unsigned parse_u32(const std::string& text, const char* what, unsigned cap = 0xffffffffu) {
    const Int v = parse_int(text, what);
    if (v < 0 || v > cap) throw CLI::ValidationError(std::string(what) + ": out of range");
    return v.convert_to<unsigned>();
}

void write_out(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(path);
    if (!f) throw CLI::ValidationError("--output: cannot open " + path);
    f << body;
}

struct CommonOpts {
    std::string format = "text";
    std::string output;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", output, "write the report to a file instead of stdout");
    }
};

int run_solve_cmd(const CommonOpts& common, SolveConfig config, const std::string& branches) {
    if (!branches.empty()) {
        config.run_n3 = config.run_n4 = config.run_n7 = false;
        config.run_oracle = config.run_sieve = false;
        std::string rest = branches;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string token = rest.substr(0, comma);
            rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
            if (token == "n3")
                config.run_n3 = true;
            else if (token == "n4")
                config.run_n4 = true;
            else if (token == "n7" || token == "high")
                config.run_n7 = true;
            else if (token == "oracle")
                config.run_oracle = true;
            else if (token == "sieve")
                config.run_sieve = true;
            else
                throw CLI::ValidationError("--branch: unknown branch " + token);
        }
    }
    const RunReport report = run_solve(config);
    write_out(common.output, common.format == "json" ? report_to_json(report).dump(2) + "\n"
                                                     : report_to_text(report));
    return exit_code(report);
}

int run_verify_cmd(const CommonOpts& common, const std::vector<std::string>& tuple) {
    constexpr unsigned exp_cap = 1'000'000;  // keeps 3^alpha and y^n computable
    Solution s{parse_int(tuple[0], "x"), parse_int(tuple[1], "y"),
               parse_u32(tuple[2], "n", exp_cap), parse_u32(tuple[3], "alpha", exp_cap),
               parse_u32(tuple[4], "beta", exp_cap)};
    const bool ok = solution_holds(s);
    if (common.format == "json") {
        ordered_json j{{"x", s.x.str()},
                       {"y", s.y.str()},
                       {"n", std::to_string(s.n)},
                       {"alpha", std::to_string(s.alpha)},
                       {"beta", std::to_string(s.beta)},
                       {"verdict", ok ? "pass" : "fail"}};
        write_out(common.output, j.dump(2) + "\n");
    } else {
        std::string line = s.x.str() + "^2 + 3^" + std::to_string(s.alpha) + " * 113^" +
                           std::to_string(s.beta) + " = " + s.y.str() + "^" + std::to_string(s.n) +
                           " with gcd(x, y) = 1: ";
        write_out(common.output, line + (ok ? "pass\n" : "fail\n"));
    }
    return ok ? 0 : 1;
}

int run_curves_cmd(const CommonOpts& common, const std::string& family, unsigned i, unsigned j,
                   long long delta, const std::string& height, unsigned denom) {
    CurveFamily fam;
    std::string id;
    std::vector<SIntegralPoint> points;
    Int h;
    if (family == "mordell") {
        if (i > 5 || j > 5) throw CLI::ValidationError("mordell wants i, j in [0, 5]");
        MordellCurve curve{i, j};
        h = height.empty() ? Int(1'000'000) : parse_int(height, "--height-bound");
        points = mordell_points(curve, h, denom);
        fam = CurveFamily::mordell;
        id = curve.id();
    } else if (family == "quartic") {
        if (i > 3 || j > 3) throw CLI::ValidationError("quartic wants i, j in [0, 3]");
        QuarticCurve curve{i, j};
        h = height.empty() ? Int(1'000) : parse_int(height, "--height-bound");
        points = quartic_points(curve, h, denom);
        fam = CurveFamily::quartic;
        id = curve.id();
    } else {
        const long long allowed[] = {1, -1, 3, -3, 113, -113, 339, -339};
        if (std::find(std::begin(allowed), std::end(allowed), delta) == std::end(allowed))
            throw CLI::ValidationError("--delta must be one of +-1, +-3, +-113, +-339");
        DeltaCubic curve{delta};
        h = height.empty() ? Int(20'000) : parse_int(height, "--height-bound");
        points = delta_cubic_points(curve, h, denom);
        fam = CurveFamily::delta_cubic;
        id = curve.id();
    }
    if (common.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& p : points) {
            const auto [xden, yden] = point_denominators(fam, p);
            arr.push_back({{"x", p.xnum.str()},
                           {"xden", xden.str()},
                           {"y", p.ynum.str()},
                           {"yden", yden.str()},
                           {"a", std::to_string(p.a)},
                           {"b", std::to_string(p.b)}});
        }
        ordered_json out{{"curve", id},
                         {"height_bound", h.str()},
                         {"denom_bound", std::to_string(denom)},
                         {"points", std::move(arr)}};
        write_out(common.output, out.dump(2) + "\n");
    } else {
        std::string body = "# " + id + "  height " + h.str() + "  denom " + std::to_string(denom) +
                           "  (complete within these bounds only)\n";
        for (const auto& p : points) body += point_line(fam, id, p) + "\n";
        write_out(common.output, body);
    }
    return 0;
}

int run_oracle_cmd(const CommonOpts& common, const SearchBudget& budget, unsigned p, unsigned q) {
    const auto sols = brute_force(budget, p, q);
    if (common.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& s : sols)
            arr.push_back({{"x", s.x.str()},
                           {"y", s.y.str()},
                           {"n", std::to_string(s.n)},
                           {"alpha", std::to_string(s.alpha)},
                           {"beta", std::to_string(s.beta)}});
        ordered_json out{{"y_max", budget.y_max.str()},
                         {"n_min", std::to_string(budget.n_min)},
                         {"n_max", std::to_string(budget.n_max)},
                         {"primes", std::to_string(p) + "," + std::to_string(q)},
                         {"solutions", std::move(arr)}};
        write_out(common.output, out.dump(2) + "\n");
    } else {
        std::string body = "# brute force y <= " + budget.y_max.str() + ", " +
                           std::to_string(budget.n_min) + " <= n <= " +
                           std::to_string(budget.n_max) + ", primes (" + std::to_string(p) + ", " +
                           std::to_string(q) + ")\n";
        for (const auto& s : sols)
            body += s.x.str() + " " + s.y.str() + " " + std::to_string(s.n) + " " +
                    std::to_string(s.alpha) + " " + std::to_string(s.beta) + "\n";
        write_out(common.output, body);
    }
    return 0;
}

int run_sieve_cmd(const CommonOpts& common, unsigned n_max) {
    const auto rows = sieve_table(n_max);
    if (common.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows)
            arr.push_back({{"d", std::to_string(row.d)},
                           {"n", std::to_string(row.n)},
                           {"verdict", verdict_name(row.verdict)}});
        write_out(common.output, ordered_json{{"n_max", std::to_string(n_max)},
                                              {"verdicts", std::move(arr)}}
                                     .dump(2) +
                                     "\n");
    } else {
        std::string body = "# primitive divisor sieve verdicts, odd primes 5 <= n <= " +
                           std::to_string(n_max) + "\n";
        for (const auto& row : rows)
            body += "d=" + std::to_string(row.d) + " n=" + std::to_string(row.n) + " " +
                    verdict_name(row.verdict) + "\n";
        write_out(common.output, body);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coprime solutions of x^2 + 3^alpha * 113^beta = y^n (n >= 3)"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a config file ([subcommand] sections); flags win");

    // solve
    auto* solve = app.add_subcommand("solve", "run every branch and compare with the known set");
    solve->fallthrough();
    CommonOpts solve_common;
    solve_common.attach(solve);
    std::string mordell_height, quartic_height, delta_height, branches;
    SolveConfig config;
    std::string oracle_y_max, oracle_cap;
    solve->add_option("--height-bound", mordell_height, "mordell numerator bound (default 10^6)");
    solve->add_option("--denom-bound", config.mordell_denom,
                      "mordell denominator exponent bound (default 2)");
    solve->add_option("--quartic-height", quartic_height, "quartic numerator bound (default 10^3)");
    solve->add_option("--quartic-denom", config.quartic_denom, "quartic denominator bound");
    solve->add_option("--delta-height", delta_height, "delta cubic numerator bound (default 2*10^4)");
    solve->add_option("--delta-denom", config.delta_denom3, "delta cubic 3-denominator bound");
    solve->add_option("--sieve-max", config.sieve_n_max, "largest sieve prime (default 97)");
    solve->add_option("--y-max", oracle_y_max, "oracle y bound (default 500)");
    solve->add_option("--n-min", config.oracle_budget.n_min, "oracle smallest exponent");
    solve->add_option("--n-max", config.oracle_budget.n_max, "oracle largest exponent (default 11)");
    solve->add_option("--power-cap", oracle_cap, "oracle cap on y^n (default none)");
    solve->add_option("--branch", branches, "comma list from n3,n4,n7,oracle,sieve (default all)");

    // verify
    auto* verify = app.add_subcommand("verify", "check one claimed tuple x y n alpha beta");
    verify->fallthrough();
    CommonOpts verify_common;
    verify_common.attach(verify);
    std::vector<std::string> tuple;
    verify->add_option("tuple", tuple, "x y n alpha beta")->expected(5);

    // curves
    auto* curves = app.add_subcommand("curves", "list points on one reduction curve");
    curves->fallthrough();
    CommonOpts curves_common;
    curves_common.attach(curves);
    std::string family, curve_height;
    unsigned ci = 0, cj = 0, cdenom_default = 0;
    long long cdelta = 1;
    curves->add_option("--family", family, "mordell, quartic or delta")
        ->required()
        ->check(CLI::IsMember({"mordell", "quartic", "delta"}));
    curves->add_option("--i", ci, "exponent of 3 in the curve coefficient");
    curves->add_option("--j", cj, "exponent of 113 in the curve coefficient");
    curves->add_option("--delta", cdelta, "delta cubic twist, one of +-1, +-3, +-113, +-339");
    auto* cdenom_opt = curves->add_option("--denom-bound", cdenom_default,
                                          "denominator exponent bound (family default if absent)");
    curves->add_option("--height-bound", curve_height, "numerator bound (family default if absent)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute force the equation over a finite budget");
    oracle->fallthrough();
    CommonOpts oracle_common;
    oracle_common.attach(oracle);
    SearchBudget budget;
    std::string by_max, bcap;
    unsigned op = 3, oq = 113;
    oracle->add_option("--y-max", by_max, "largest y (default 500)");
    oracle->add_option("--n-min", budget.n_min, "smallest exponent (default 3)");
    oracle->add_option("--n-max", budget.n_max, "largest exponent (default 11)");
    oracle->add_option("--power-cap", bcap, "skip y^n above this");
    oracle->add_option("--prime-p", op, "first prime (default 3)");
    oracle->add_option("--prime-q", oq, "second prime (default 113)");

    // sieve-table
    auto* sieve = app.add_subcommand("sieve-table", "print the n >= 5 verdict table");
    sieve->fallthrough();
    CommonOpts sieve_common;
    sieve_common.attach(sieve);
    unsigned sieve_n_max = 97;
    sieve->add_option("--n-max", sieve_n_max, "largest prime exponent (default 97)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            if (!mordell_height.empty())
                config.mordell_height = parse_int(mordell_height, "--height-bound");
            if (!quartic_height.empty())
                config.quartic_height = parse_int(quartic_height, "--quartic-height");
            if (!delta_height.empty())
                config.delta_height = parse_int(delta_height, "--delta-height");
            if (!oracle_y_max.empty())
                config.oracle_budget.y_max = parse_int(oracle_y_max, "--y-max");
            if (!oracle_cap.empty())
                config.oracle_budget.power_cap = parse_int(oracle_cap, "--power-cap");
            return run_solve_cmd(solve_common, config, branches);
        }
        if (verify->parsed()) return run_verify_cmd(verify_common, tuple);
        if (curves->parsed()) {
            unsigned denom = cdenom_opt->count() ? cdenom_default : (family == "delta" ? 1u : 2u);
            return run_curves_cmd(curves_common, family, ci, cj, cdelta, curve_height, denom);
        }
        if (oracle->parsed()) {
            if (!by_max.empty()) budget.y_max = parse_int(by_max, "--y-max");
            if (!bcap.empty()) budget.power_cap = parse_int(bcap, "--power-cap");
            return run_oracle_cmd(oracle_common, budget, op, oq);
        }
        if (sieve->parsed()) return run_sieve_cmd(sieve_common, sieve_n_max);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

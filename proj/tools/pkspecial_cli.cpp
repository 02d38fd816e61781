// Command-line front end: single evaluations, parameter sweeps, single
// theorem checks, and full verification runs with CSV/JSON export.
//
// Exit codes: 0 success (including PASS_WITH_NOTE), 1 check failure,
// 2 usage error, 3 domain error, 4 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pkspecial/pkspecial.hpp"

namespace {

using namespace pkspecial;

struct CliConfig {
    numerics::QuadratureSettings quad;
    std::string format = "text";
    std::optional<std::string> out_path;
    unsigned long long seed = 42;
};

struct EvalOutput {
    double value = 0.0;
    double error_estimate = 0.0;
    std::string path;
};

class usage_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v, const char* spec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}
std::string human(double v) { return fmt(v, "%.10g"); }
std::string machine(double v) { return fmt(v, "%.17g"); }

class NamedArgs {
  public:
    explicit NamedArgs(const std::vector<std::string>& tokens) {
        for (const auto& tok : tokens) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                throw usage_error("arguments must be name=value, got '" + tok + "'");
            values_[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
    }
    double require(const std::string& name) {
        auto it = values_.find(name);
        if (it == values_.end())
            throw usage_error("missing required argument " + name);
        used_.insert(name);
        return parse_double(name, it->second);
    }
    double get(const std::string& name, double fallback) {
        auto it = values_.find(name);
        if (it == values_.end()) return fallback;
        used_.insert(name);
        return parse_double(name, it->second);
    }
    long get_int(const std::string& name, std::optional<long> fallback = {}) {
        auto it = values_.find(name);
        if (it == values_.end()) {
            if (fallback) return *fallback;
            throw usage_error("missing required argument " + name);
        }
        used_.insert(name);
        try {
            size_t pos = 0;
            long v = std::stol(it->second, &pos);
            if (pos != it->second.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw usage_error("argument " + name + " must be an integer");
        }
    }
    std::string get_string(const std::string& name, std::string fallback) {
        auto it = values_.find(name);
        if (it == values_.end()) return fallback;
        used_.insert(name);
        return it->second;
    }
    void reject_unused() const {
        for (const auto& [name, value] : values_)
            if (!used_.count(name))
                throw usage_error("unknown argument " + name + "=" + value);
    }

  private:
    static double parse_double(const std::string& name, const std::string& text) {
        try {
            size_t pos = 0;
            double v = std::stod(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw usage_error("argument " + name + " must be a real number");
        }
    }
    std::map<std::string, std::string> values_;
    std::set<std::string> used_;
};

double rounding_estimate(double value) {
    return 8.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
}

EvalOutput evaluate_function(const std::string& name, NamedArgs& args,
                             const CliConfig& cfg) {
    auto pk_params = [&] {
        return PKParams{args.get("p", 1.0), args.get("k", 1.0)};
    };
    if (name == "log_gamma") {
        const double v = numerics::log_gamma_classic(args.require("x"));
        return {v, rounding_estimate(v) + 1e-14 * std::abs(v),
                "Stirling series with recurrence shift"};
    }
    if (name == "pk_gamma") {
        const double v = pk_gamma(args.require("x"), pk_params());
        return {v, rounding_estimate(v) + 1e-13 * std::abs(v),
                "closed form via classic log-gamma"};
    }
    if (name == "pk_gamma_quadrature") {
        auto r = pk_gamma_quadrature(args.require("x"), pk_params(), cfg.quad);
        return {r.value, r.error_estimate, "adaptive quadrature, semi-infinite"};
    }
    if (name == "pk_digamma") {
        const double v = pk_digamma(args.require("x"), pk_params());
        return {v, rounding_estimate(v) + 1e-13,
                "partial-fraction series, extrapolated tail"};
    }
    if (name == "pk_polygamma") {
        const double v = pk_polygamma(static_cast<int>(args.get_int("n")),
                                      args.require("x"), pk_params());
        return {v, rounding_estimate(v) + 1e-13 * std::abs(v),
                "differentiated series, extrapolated tail"};
    }
    if (name == "pk_beta") {
        const std::string repr = args.get_string("repr", "series");
        BetaRepresentation r;
        std::string path;
        if (repr == "series") {
            r = BetaRepresentation::PairedSeries;
            path = "paired series, extrapolated tail";
        } else if (repr == "digamma") {
            r = BetaRepresentation::DigammaForm;
            path = "digamma difference form";
        } else if (repr == "semi") {
            r = BetaRepresentation::SemiInfiniteIntegral;
            path = "adaptive quadrature, semi-infinite";
        } else if (repr == "finite") {
            r = BetaRepresentation::FiniteIntegral;
            path = "adaptive quadrature on (0,1)";
        } else {
            throw usage_error("repr must be series|digamma|semi|finite");
        }
        const double v = pk_beta(args.require("x"), pk_params(), r);
        return {v, rounding_estimate(v) + 1e-12, path};
    }
    if (name == "pk_beta_deriv" || name == "pk_beta_abs") {
        const int n = static_cast<int>(args.get_int("n"));
        const double x = args.require("x");
        const double v = name == "pk_beta_deriv" ? pk_beta_deriv(n, x, pk_params())
                                                 : pk_beta_abs(n, x, pk_params());
        return {v, rounding_estimate(v) + 1e-12,
                "differentiated paired series, extrapolated tail"};
    }
    if (name == "delta_n") {
        const double v = delta_n(static_cast<int>(args.get_int("n")),
                                 args.require("x"), pk_params());
        return {v, rounding_estimate(v) + 1e-12, "x^{n+1}/n! |beta^(n)(x)|"};
    }
    if (name == "cz_gamma") {
        const double v = cz_gamma(args.require("x"), args.get("c", 0.0), cfg.quad);
        return {v, cfg.quad.rel_tol * std::abs(v) + cfg.quad.abs_tol,
                "adaptive quadrature, semi-infinite"};
    }
    if (name == "cz_gamma_deriv") {
        const double v = cz_gamma_deriv(static_cast<int>(args.get_int("n")),
                                        args.require("x"), args.get("c", 0.0),
                                        cfg.quad);
        return {v, cfg.quad.rel_tol * std::abs(v) + 2.0 * cfg.quad.abs_tol,
                "adaptive quadrature, split at t = 1"};
    }
    if (name == "ext_cz_gamma" || name == "ext_cz_gamma_deriv") {
        const CZParams prm{args.get("c", 0.0), pk_params()};
        const int n = name == "ext_cz_gamma"
                          ? 0
                          : static_cast<int>(args.get_int("n"));
        const double v = ext_cz_gamma_deriv(n, args.require("x"), prm, cfg.quad);
        return {v, cfg.quad.rel_tol * std::abs(v) + 2.0 * cfg.quad.abs_tol,
                "adaptive quadrature, split at t = 1"};
    }
    if (name == "v_ext_cz_gamma" || name == "v_ext_cz_gamma_deriv") {
        const VExtParams prm{args.get("b", 0.0), args.get("v", 1.0)};
        const int n = name == "v_ext_cz_gamma"
                          ? 0
                          : static_cast<int>(args.get_int("n"));
        const double v = v_ext_cz_gamma_deriv(n, args.require("z"), prm, cfg.quad);
        return {v, cfg.quad.rel_tol * std::abs(v) + 2.0 * cfg.quad.abs_tol,
                "adaptive quadrature, split at t = 1"};
    }
    throw usage_error("unknown function: " + name);
}

verifier::GridSpec parse_grid(const std::vector<std::string>& tokens,
                              long samples, unsigned long long seed) {
    verifier::GridSpec grid;
    grid.sample_count = samples;
    grid.seed = seed;
    const std::set<std::string> real_keys = {"x", "y", "z", "a", "p",
                                             "k", "c", "b", "v"};
    const std::set<std::string> int_keys = {"n", "m", "N"};
    for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw usage_error("grid entries must be key=v1,v2,...  got '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        std::string rest = tok.substr(eq + 1);
        if (!real_keys.count(key) && !int_keys.count(key))
            throw usage_error("unknown grid key " + key);
        size_t pos = 0;
        while (pos <= rest.size()) {
            const auto comma = rest.find(',', pos);
            const std::string item =
                rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                            : comma - pos);
            if (item.empty()) throw usage_error("empty grid value for " + key);
            try {
                if (int_keys.count(key))
                    grid.ints[key].push_back(std::stol(item));
                else
                    grid.reals[key].push_back(std::stod(item));
            } catch (...) {
                throw usage_error("bad grid value '" + item + "' for " + key);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return grid;
}

int write_output(const CliConfig& cfg, const std::string& payload) {
    if (!cfg.out_path) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(*cfg.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << *cfg.out_path << " for writing\n";
        return 4;
    }
    out << payload;
    if (!out.flush()) {
        std::cerr << "error: failed writing " << *cfg.out_path << "\n";
        return 4;
    }
    return 0;
}

void print_report(const verifier::CheckReport& r) {
    std::cout << r.check_id << ": " << verifier::to_string(r.verdict)
              << "  (samples " << r.samples << ", worst margin "
              << human(r.worst_margin) << ")\n";
    if (!r.note.empty()) std::cout << "  NOTE: " << r.note << "\n";
    const size_t show = std::min<size_t>(r.violations.size(), 10);
    for (size_t i = 0; i < show; ++i)
        std::cout << "  violation: " << r.violations[i].point << "  margin "
                  << human(r.violations[i].margin) << "\n";
    if (r.violations.size() > show)
        std::cout << "  ... and " << r.violations.size() - show
                  << " more violations\n";
}

std::string report_text(const verifier::RunAllResult& all) {
    std::string out;
    char line[512];
    std::snprintf(line, sizeof line, "%-36s %-16s %12s %9s\n", "check_id",
                  "verdict", "worst_margin", "samples");
    out += line;
    for (const auto& r : all.reports) {
        std::snprintf(line, sizeof line, "%-36s %-16s %12.4g %9ld\n",
                      r.check_id.c_str(), verifier::to_string(r.verdict),
                      r.worst_margin, r.samples);
        out += line;
    }
    std::snprintf(line, sizeof line,
                  "total %ld: %ld PASS, %ld PASS_WITH_NOTE, %ld FAIL\n",
                  all.summary.total, all.summary.pass,
                  all.summary.pass_with_note, all.summary.fail);
    out += line;
    return out;
}

struct SweepRange {
    std::string key;
    double start, stop;
    long count;
};

int run_sweep(const std::string& function, std::vector<std::string> tokens,
              const CliConfig& cfg) {
    std::optional<SweepRange> range;
    std::vector<std::string> fixed;
    for (const auto& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos &&
            std::count(tok.begin() + static_cast<long>(eq), tok.end(), ':') == 2) {
            if (range) throw usage_error("only one parameter may carry a range");
            SweepRange r;
            r.key = tok.substr(0, eq);
            const std::string spec = tok.substr(eq + 1);
            const auto c1 = spec.find(':');
            const auto c2 = spec.find(':', c1 + 1);
            try {
                r.start = std::stod(spec.substr(0, c1));
                r.stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
                r.count = std::stol(spec.substr(c2 + 1));
            } catch (...) {
                throw usage_error("malformed range '" + tok + "'");
            }
            if (!(r.start < r.stop) || r.count < 2)
                throw usage_error("range must satisfy start < stop and count >= 2");
            range = r;
        } else {
            fixed.push_back(tok);
        }
    }
    if (!range) throw usage_error("sweep needs one parameter as start:stop:count");

    std::string payload;
    std::vector<std::pair<double, double>> rows;
    for (long i = 0; i < range->count; ++i) {
        const double t = range->start + (range->stop - range->start) *
                                            static_cast<double>(i) /
                                            static_cast<double>(range->count - 1);
        std::vector<std::string> all = fixed;
        all.push_back(range->key + "=" + machine(t));
        NamedArgs args(all);
        rows.emplace_back(t, evaluate_function(function, args, cfg).value);
        args.reject_unused();
    }
    if (cfg.format == "csv") {
        payload = range->key + ",value\n";
        for (auto [t, v] : rows)
            payload += machine(t) + "," + machine(v) + "\n";
    } else if (cfg.format == "json") {
        payload = "[\n";
        for (size_t i = 0; i < rows.size(); ++i)
            payload += "  {\"" + range->key + "\": " + machine(rows[i].first) +
                       ", \"value\": " + machine(rows[i].second) + "}" +
                       (i + 1 < rows.size() ? ",\n" : "\n");
        payload += "]\n";
    } else {
        for (auto [t, v] : rows)
            payload += range->key + " = " + human(t) + "  ->  " + human(v) + "\n";
    }
    return write_output(cfg, payload);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-k special functions: evaluation and theorem verification"};
    app.require_subcommand(1);

    CliConfig cfg;
    if (const char* env = std::getenv("PKSPECIAL_TOL")) {
        try {
            cfg.quad.rel_tol = std::stod(env);
        } catch (...) {
            std::cerr << "error: PKSPECIAL_TOL is not a number\n";
            return 2;
        }
    }
    double flag_rel_tol = -1.0, flag_abs_tol = -1.0;
    app.add_option("--rel-tol", flag_rel_tol, "relative tolerance override");
    app.add_option("--abs-tol", flag_abs_tol, "absolute tolerance override");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one function");
    std::string eval_function;
    std::vector<std::string> eval_args;
    eval_cmd->add_option("function", eval_function)->required();
    eval_cmd->add_option("args", eval_args, "name=value arguments");

    auto* check_cmd = app.add_subcommand("check", "run one theorem check");
    std::string check_id;
    std::vector<std::string> grid_tokens;
    double tol = 1e-9;
    long samples = 50;
    unsigned long long seed = 42;
    check_cmd->add_option("check_id", check_id)->required();
    check_cmd->add_option("--grid", grid_tokens, "grid overrides key=v1,v2,...")
        ->expected(-1);
    check_cmd->add_option("--tol", tol, "margin tolerance");
    check_cmd->add_option("--samples", samples, "random sample count");
    check_cmd->add_option("--seed", seed, "random seed");

    auto* verify_cmd = app.add_subcommand("verify-all", "run the full registry");
    std::vector<std::string> verify_grid_tokens;
    verify_cmd->add_option("--grid", verify_grid_tokens, "grid overrides")
        ->expected(-1);
    verify_cmd->add_option("--tol", tol, "margin tolerance");
    verify_cmd->add_option("--samples", samples, "random sample count");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--format", cfg.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    std::string out_path;
    verify_cmd->add_option("--out", out_path, "output file");

    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate one function");
    std::string sweep_function;
    std::vector<std::string> sweep_args;
    sweep_cmd->add_option("function", sweep_function)->required();
    sweep_cmd->add_option("args", sweep_args,
                          "one range start:stop:count plus fixed name=value");
    sweep_cmd->add_option("--format", cfg.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sweep_cmd->add_option("--out", out_path, "output file");

    auto* list_cmd = app.add_subcommand("list-checks", "list registry entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (flag_rel_tol > 0) cfg.quad.rel_tol = flag_rel_tol;
    if (flag_abs_tol > 0) cfg.quad.abs_tol = flag_abs_tol;
    if (!out_path.empty()) cfg.out_path = out_path;
    cfg.seed = seed;

    try {
        if (*eval_cmd) {
            NamedArgs args(eval_args);
            const EvalOutput out = evaluate_function(eval_function, args, cfg);
            args.reject_unused();
            std::cout << eval_function << " = " << human(out.value) << "\n"
                      << "  error estimate <= " << fmt(out.error_estimate, "%.3g")
                      << "\n  path: " << out.path << "\n";
            return 0;
        }
        if (*check_cmd) {
            const auto grid = parse_grid(grid_tokens, samples, seed);
            verifier::CheckReport report;
            try {
                report = verifier::run_check(check_id, grid, tol);
            } catch (const std::out_of_range& e) {
                std::cerr << "usage error: " << e.what() << "\n";
                return 2;
            }
            print_report(report);
            return report.verdict == verifier::Verdict::FAIL ? 1 : 0;
        }
        if (*verify_cmd) {
            const auto grid = parse_grid(verify_grid_tokens, samples, seed);
            const auto all = verifier::run_all(grid, tol);
            std::string payload;
            if (cfg.format == "json")
                payload = verifier::to_json(all);
            else if (cfg.format == "csv")
                payload = verifier::to_csv(all.reports);
            else
                payload = report_text(all);
            const int rc = write_output(cfg, payload);
            if (rc != 0) return rc;
            if (cfg.out_path) std::cout << report_text(all);
            return all.summary.fail > 0 ? 1 : 0;
        }
        if (*sweep_cmd) return run_sweep(sweep_function, sweep_args, cfg);
        if (*list_cmd) {
            for (const auto& info : verifier::list_checks())
                std::cout << info.check_id << "  [" << info.anchor << "]  "
                          << info.description << "\n";
            return 0;
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

// Acceptance suite: one line per criterion, PASS/FAIL, with the failing
// sub-conditions spelled out.  Exit code is the number of failed criteria.
//
// Two sub-conditions are expected to fail by measurement, not by defect of
// this library: the U_50 proximity band (the sequence converges like
// Var(ln a)/(2m), which is ~1e-2 at m = 50) and the inequality-suite clause
// that every registry entry passes (the registry honestly reports two of the
// source claims as numerically false).  Both are spelled out in the output.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pkspecial/pkspecial.hpp"

using namespace pkspecial;

namespace {

int failures = 0;
std::vector<std::string> notes;

void criterion(int number, const char* label, bool ok) {
    std::printf("CRITERION %d [%s]: %s\n", number, label, ok ? "PASS" : "FAIL");
    for (const auto& n : notes) std::printf("    %s\n", n.c_str());
    notes.clear();
    if (!ok) ++failures;
}

void note(const std::string& text) { notes.push_back(text); }

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// --- criterion bodies -------------------------------------------------------

bool representation_agreement() {
    bool ok = true;
    for (double p : {0.5, 1.0, 2.0, 3.0})
        for (double k : {0.5, 1.0, 2.0, 3.0}) {
            const PKParams prm{p, k};
            for (double x : {0.2, 0.5, 1.0, 2.0, 5.0}) {
                const double s = pk_beta(x, prm, BetaRepresentation::PairedSeries);
                for (auto repr : {BetaRepresentation::DigammaForm,
                                  BetaRepresentation::SemiInfiniteIntegral,
                                  BetaRepresentation::FiniteIntegral}) {
                    const double gap = std::abs(pk_beta(x, prm, repr) - s);
                    if (gap > 1e-9) {
                        ok = false;
                        note("beta representations differ by " +
                             std::to_string(gap));
                    }
                }
            }
            for (double x : {0.3, 1.0, 2.5, 7.0}) {
                const double closed = pk_gamma(x, prm);
                const double quad = pk_gamma_quadrature(x, prm).value;
                if (std::abs(closed - quad) / closed > 1e-8) {
                    ok = false;
                    note("gamma closed/quadrature mismatch at x=" +
                         std::to_string(x));
                }
            }
        }
    return ok;
}

bool identity_residuals() {
    bool ok = true;
    auto expect = [&ok](double residual, double bound, const char* which) {
        if (!(residual < bound)) {
            ok = false;
            note(std::string(which) + " residual " + std::to_string(residual));
        }
    };
    for (double p : {0.5, 1.0, 2.0, 3.0})
        for (double k : {0.5, 1.0, 2.0, 3.0}) {
            const PKParams prm{p, k};
            expect(check_identity_1_3(prm), 1e-10, "identity-1.3");
            for (int i = 1; i <= 10; ++i)
                expect(check_identity_1_5(k * i / 11.0, prm), 1e-9,
                       "identity-1.5");
            for (double x : {0.5, 1.0, 2.0}) {
                expect(check_identity_1_6(2, x, prm), 1e-7, "identity-1.6(m=2)");
                expect(check_identity_1_6(3, x, prm), 1e-7, "identity-1.6(m=3)");
            }
            for (double x : {0.2, 0.5, 1.0, 2.0, 5.0})
                expect(std::abs(pk_beta(x + k, prm) + pk_beta(x, prm) - p / x),
                       1e-10, "functional-4.12");
            for (int n : {1, 2, 3})
                for (double x : {0.3, 1.0, 5.0}) {
                    double factorial = 1.0;
                    for (int i = 2; i <= n; ++i) factorial *= i;
                    const double lhs = pk_beta_deriv(n, x + k, prm);
                    const double rhs = (n % 2 == 0 ? 1.0 : -1.0) * factorial * p /
                                           std::pow(x, n + 1.0) -
                                       pk_beta_deriv(n, x, prm);
                    expect(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)),
                           1e-9, "recurrence-4.26");
                }
        }
    for (double x : {1.2, 2.0, 3.5})
        for (double c : {0.0, 0.5, 1.0, 4.0})
            expect(check_recurrence_5_2(x, c), 1e-8, "recurrence-5.2");
    for (double c : {0.5, 1.0, 2.0})
        for (double x : {0.3, 1.0, 2.0})
            expect(check_reflection_5_3(x, c), 1e-8, "reflection-5.3");
    return ok;
}

bool multinomial_reconstruction() {
    bool ok = true;
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 5);
        std::vector<double> nu(static_cast<size_t>(n)), a(static_cast<size_t>(n));
        double mean = 0.0;
        for (int j = 0; j < n; ++j) {
            nu[static_cast<size_t>(j)] = uniform(rng, 0.1, 1.0);
            a[static_cast<size_t>(j)] = uniform(rng, 0.0, 3.0);
            mean += nu[static_cast<size_t>(j)] * a[static_cast<size_t>(j)];
        }
        const double res = holder::check_multinomial_2_2(n, m, nu, a);
        if (res > 1e-12 * std::max(1.0, std::pow(mean, m))) {
            ok = false;
            note("multinomial residual " + std::to_string(res));
        }
    }
    return ok;
}

bool refined_amgm() {
    bool ok = true;
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 6);
        std::vector<double> a(static_cast<size_t>(n)), w(static_cast<size_t>(n));
        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            a[static_cast<size_t>(j)] = uniform(rng, 0.0, 4.0);
            w[static_cast<size_t>(j)] = uniform(rng, 0.05, 1.0);
            total += w[static_cast<size_t>(j)];
        }
        for (auto& v : w) v /= total;
        const auto r = holder::refined_amgm_chain(a, w, m);
        if (r.chain.margin_lower < -1e-12 || r.chain.margin_upper < -1e-12) {
            ok = false;
            note("chain ordering violated at instance " + std::to_string(i));
        }
        for (size_t j = 1; j < r.u_sequence.size(); ++j)
            if (r.u_sequence[j] > r.u_sequence[j - 1] + 1e-12) {
                ok = false;
                note("U_j increased at instance " + std::to_string(i));
            }
    }
    const double a14[] = {1.0, 4.0};
    const double half[] = {0.5, 0.5};
    const auto two = holder::refined_amgm_chain(a14, half, 2);
    if (!close(two.chain.middle, 2.25, 1e-14)) {
        ok = false;
        note("U_2 != 2.25");
    }
    const auto fifty = holder::refined_amgm_chain(a14, half, 50);
    const double u50 = fifty.u_sequence.back();
    if (!(std::abs(u50 - 2.0) <= 1e-4)) {
        ok = false;
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "U_50 = %.16g, |U_50 - 2| = %.3g exceeds the stated 1e-4 "
                      "band: U_m - G ~ G Var(ln a)/(2m) = 0.48/m, so 1e-4 "
                      "needs m ~ 4800; the limit claim itself holds",
                      u50, std::abs(u50 - 2.0));
        note(buf);
    }
    return ok;
}

bool refinement_chains() {
    bool ok = true;
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i)
        for (int n : {2, 3}) {
            std::vector<double> w(static_cast<size_t>(n)), g(static_cast<size_t>(n));
            double total = 0.0;
            for (auto& v : w) {
                v = uniform(rng, 0.3, 1.0);
                total += v;
            }
            std::vector<double> exps;
            for (double v : w) exps.push_back(total / v);
            holder::WeightedExponents weights{std::move(exps)};
            for (auto& v : g) v = uniform(rng, 0.3, 2.5);
            holder::MomentOracle oracle = [&g](std::span<const double> e) {
                double s = 0.0;
                for (size_t j = 0; j < g.size(); ++j) s += e[j] * g[j];
                return pk_beta(s, PKParams{1.0, 1.0});
            };
            const int rows = 3 + static_cast<int>(rng() % 10);
            std::vector<std::vector<double>> Q(static_cast<size_t>(rows),
                                               std::vector<double>(static_cast<size_t>(n)));
            for (auto& row : Q)
                for (auto& v : row) v = uniform(rng, -2.0, 2.0);
            double prev_int = 0.0, prev_sum = 0.0;
            for (int m = 2; m <= 4; ++m) {
                const auto ci = holder::holder_chain_integral(weights, m, oracle);
                const auto cs = holder::holder_chain_sum(weights, m, Q);
                if (ci.margin_lower < -1e-10 || ci.margin_upper < -1e-10 ||
                    cs.margin_lower < -1e-10 || cs.margin_upper < -1e-10) {
                    ok = false;
                    note("chain margin violation, instance " + std::to_string(i));
                }
                if (m > 2 && (ci.middle > prev_int + 1e-10 ||
                              cs.middle > prev_sum + 1e-10)) {
                    ok = false;
                    note("middle member increased in m, instance " +
                         std::to_string(i));
                }
                prev_int = ci.middle;
                prev_sum = cs.middle;
            }
        }
    for (const char* id : {"thm_6_1_chain", "thm_6_2_chain_nth", "thm_7_1_chain",
                           "thm_7_3_chain", "thm_7_5_chain"}) {
        const auto report = verifier::run_check(id);
        if (report.verdict == verifier::Verdict::FAIL) {
            ok = false;
            note(std::string(id) + " failed (oracle/reduced paths or ordering)");
        }
    }
    return ok;
}

bool derivative_correctness() {
    bool ok = true;
    auto expect_rel = [&ok](double got, double want, double bound,
                            const char* which) {
        const double rel = std::abs(got - want) / std::max(1.0, std::abs(want));
        if (!(rel < bound)) {
            ok = false;
            note(std::string(which) + " relative gap " + std::to_string(rel));
        }
    };
    for (double p : {1.0, 2.0})
        for (double k : {0.5, 2.0})
            for (double x : {1.0, 2.0, 4.0}) {
                const PKParams prm{p, k};
                for (int n : {1, 2}) {
                    const double fd = numerics::finite_difference(
                        [&](double t) { return pk_beta(t, prm); }, x, n,
                        n == 1 ? 1e-4 : 1e-3);
                    expect_rel(pk_beta_deriv(n, x, prm), fd, 1e-5, "beta-deriv");
                }
            }
    const numerics::QuadratureSettings tight{1e-13, 1e-12, 4000};
    for (double c : {0.5, 1.0})
        for (double x : {1.0, 2.0}) {
            const CZParams prm{c, {2.0, 1.5}};
            for (int n : {1, 2}) {
                const double h = n == 1 ? 1e-4 : 2e-3;
                const double fd = numerics::finite_difference(
                    [&](double t) { return ext_cz_gamma(t, prm, tight); }, x, n,
                    h);
                expect_rel(ext_cz_gamma_deriv(n, x, prm, tight), fd, 1e-5,
                           "ext-cz-deriv");
            }
            const VExtParams vprm{c, 1.5};
            for (int n : {1, 2}) {
                const double h = n == 1 ? 1e-4 : 2e-3;
                const double fd = numerics::finite_difference(
                    [&](double t) { return v_ext_cz_gamma(t, vprm, tight); }, x,
                    n, h);
                expect_rel(v_ext_cz_gamma_deriv(n, x, vprm, tight), fd, 1e-5,
                           "v-ext-deriv");
            }
        }
    return ok;
}

bool delta_limits() {
    bool ok = true;
    for (int n : {1, 2})
        for (double p : {0.5, 2.0}) {
            const PKParams prm{p, 1.0};
            const double d1 = delta_n(n, 1e-3, prm);
            const double d2 = delta_n(n, 2e-3, prm);
            if (!(std::abs(d1 - p) <= 0.01 * p)) {
                ok = false;
                note("Delta_n proximity failed at n=" + std::to_string(n));
            }
            if (!(std::abs(d2 - d1) / 1e-3 <= 0.1)) {
                ok = false;
                note("Delta_n slope failed at n=" + std::to_string(n));
            }
        }
    return ok;
}

bool inequality_suite() {
    bool ok = true;
    const auto all = verifier::run_all({}, 1e-9);
    for (const auto& r : all.reports) {
        if (r.verdict == verifier::Verdict::FAIL) {
            ok = false;
            char buf[512];
            std::snprintf(buf, sizeof buf,
                          "%s FAIL (worst margin %.4g): the claim is "
                          "numerically false as displayed; see the check note",
                          r.check_id.c_str(), r.worst_margin);
            note(buf);
            if (!r.note.empty()) note("  " + r.note);
        }
    }
    for (const char* id :
         {"eq_4_13_reflection_dual", "eq_4_37_scaling_dual", "thm_6_1_chain",
          "eq_5_26_minkowski"}) {
        const auto it = std::find_if(
            all.reports.begin(), all.reports.end(),
            [&](const verifier::CheckReport& r) { return r.check_id == id; });
        if (it == all.reports.end() ||
            it->verdict != verifier::Verdict::PASS_WITH_NOTE ||
            it->note.empty()) {
            ok = false;
            note(std::string(id) +
                 " did not report PASS_WITH_NOTE with a recorded discrepancy");
        }
    }
    return ok;
}

std::string run_cli(const std::string& args, int& exit_code) {
    const char* cli = std::getenv("PKSPECIAL_CLI");
    if (!cli) {
        exit_code = -1;
        return "";
    }
    const std::string cmd = std::string(cli) + " " + args + " 2>&1";
    std::string output;
    char buf[4096];
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    while (fgets(buf, sizeof buf, pipe)) output += buf;
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool determinism_and_interface() {
    bool ok = true;
    if (!std::getenv("PKSPECIAL_CLI")) {
        note("PKSPECIAL_CLI not set; run through ctest or export the CLI path");
        return false;
    }
    int rc = 0;
    run_cli("verify-all --seed 42 --format json --out /tmp/pkspecial_acc1.json",
            rc);
    const int rc1 = rc;
    run_cli("verify-all --seed 42 --format json --out /tmp/pkspecial_acc2.json",
            rc);
    if (rc1 != rc) {
        ok = false;
        note("verify-all exit codes differ between runs");
    }
    const std::string a = slurp("/tmp/pkspecial_acc1.json");
    const std::string b = slurp("/tmp/pkspecial_acc2.json");
    std::remove("/tmp/pkspecial_acc1.json");
    std::remove("/tmp/pkspecial_acc2.json");
    if (a.empty() || a != b) {
        ok = false;
        note("verify-all JSON is not byte-identical across seeded runs");
    }

    auto expect_exit = [&ok](const std::string& args, int want) {
        int got = 0;
        run_cli(args, got);
        if (got != want) {
            ok = false;
            note("exit code for '" + args + "' was " + std::to_string(got) +
                 ", wanted " + std::to_string(want));
        }
    };
    expect_exit("eval pk_beta x=1 p=1 k=1", 0);
    expect_exit("eval pk_beta x=-1 p=1 k=1", 3);
    expect_exit("eval no_such_function x=1", 2);
    expect_exit("check no_such_id", 2);
    expect_exit("check eq_4_12_functional", 0);
    expect_exit("check eq_4_79_mult_convex_triple", 1);
    expect_exit("verify-all --format csv --out /nonexistent_dir/x.csv", 4);
    return ok;
}

}  // namespace

int main() {
    criterion(1, "representation agreement", representation_agreement());
    criterion(2, "exact-identity residuals", identity_residuals());
    criterion(3, "multinomial identity", multinomial_reconstruction());
    criterion(4, "refined AM-GM", refined_amgm());
    criterion(5, "refinement chains", refinement_chains());
    criterion(6, "derivative correctness", derivative_correctness());
    criterion(7, "limit claims", delta_limits());
    criterion(8, "inequality suite", inequality_suite());
    criterion(9, "determinism and interface", determinism_and_interface());
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

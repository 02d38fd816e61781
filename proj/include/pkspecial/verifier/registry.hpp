#pragma once

// The named theorem-check registry: every identity and inequality of the
// claim catalog's sections 4-7 (plus the supporting sections 1-3 facts and the
// appendices) as a runnable check over parameter grids.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pkspecial/verifier/checks_chains.hpp"
#include "pkspecial/verifier/checks_core.hpp"
#include "pkspecial/verifier/checks_cz.hpp"
#include "pkspecial/verifier/grid.hpp"
#include "pkspecial/verifier/report.hpp"

namespace pkspecial::verifier {

struct CheckDef {
    std::string id;
    std::string anchor;       // source-claim anchor
    std::string description;  // predicate, margin convention
    std::function<void(CheckContext&)> run;
};

inline const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = [] {
        using namespace checks;
        std::vector<CheckDef> v;
        auto add = [&v](std::string id, std::string anchor, std::string desc,
                        std::function<void(CheckContext&)> fn) {
            v.push_back({std::move(id), std::move(anchor), std::move(desc),
                         std::move(fn)});
        };
        add("eq_1_3_value", "Eq 1.3",
            "pGamma_k(p) integral path vs p^{p/k} Gamma(p/k)/k; margin = -residual",
            eq_1_3_value);
        add("eq_1_4_continuation_probe", "Eq 1.4",
            "pGamma_k(x) pGamma_k(-x) continuation probe; the product equals "
            "-pi/(xk sin) (ratio to the displayed +form recorded, not asserted)",
            eq_1_4_continuation_probe);
        add("eq_1_5_reflection", "Eq 1.5",
            "pGamma_k(x) pGamma_k(k-x) = (p/k^2) pi/sin(pi x/k); margin = -residual",
            eq_1_5_reflection);
        add("eq_1_6_multiplication", "Eq 1.6",
            "Gauss multiplication, m = 2, 3; margin = -relative residual",
            eq_1_6_multiplication);
        add("eq_1_7_consistency", "Eq 1.7 vs Eq 1.1",
            "closed form against direct quadrature; margin = -relative difference",
            eq_1_7_consistency);
        add("eq_4_4_weierstrass", "Eq 4.4",
            "1e5-term Weierstrass product vs 1/pGamma_k; margin = 1e-3 - residual",
            eq_4_4_weierstrass);
        add("eq_4_5_6_digamma_forms", "Eqs 4.5-4.6",
            "the two digamma series forms agree; margin = -difference",
            eq_4_5_6_digamma_forms);
        add("eq_4_7_p_invariance", "Eq 4.7",
            "digamma differences are p-independent; margin = -spread",
            eq_4_7_p_invariance);
        add("eq_4_8_11_representations", "Eqs 4.8-4.11",
            "four beta representations agree; margin = -worst absolute gap",
            eq_4_8_11_representations);
        add("eq_4_12_functional", "Eq 4.12",
            "beta(x+k) + beta(x) = p/x; margin = -residual", eq_4_12_functional);
        add("eq_4_13_reflection_dual", "Eq 4.13",
            "reflection formula dual-form comparison; asserts the (p/k) scaled "
            "form, notes the displayed p^2/k^2 deviation",
            eq_4_13_reflection_dual);
        add("eq_4_17_digamma_reflection_probe", "Eq 4.17",
            "digamma reflection: the difference identity holds, the displayed "
            "sum does not; margin on the difference form",
            eq_4_17_digamma_reflection_probe);
        add("eq_4_23_25_deriv_representations", "Eqs 4.23-4.25",
            "derivative series vs both integral forms; margin = -relative gap",
            eq_4_23_25_deriv_representations);
        add("eq_4_26_deriv_recurrence", "Eq 4.26",
            "derivative recurrence residual, n = 1..3", eq_4_26_deriv_recurrence);
        add("thm_4_5_sign_monotone", "Thm 4.5",
            "(-1)^n beta^(n) > 0 and |beta^(n)| strictly decreasing (strict margins)",
            thm_4_5_sign_monotone);
        add("eq_4_30_logconvex", "Thm 4.6 (Eq 4.30)",
            "Hölder midpoint log-convexity, (r,s) in {(2,2),(3,1.5)}",
            eq_4_30_logconvex);
        add("eq_4_35_36_gradient_forms", "Thm 4.7 (Eqs 4.35-4.36)",
            "supporting-line form for x > y and the same-point second form",
            eq_4_35_36_gradient_forms);
        add("eq_4_37_scaling_dual", "Prop 4.1 (Eq 4.37) / Prop 4.3 (Eq 4.64)",
            "first equality ratio = p/k exact; second equality probe records "
            "the factor-k discrepancy",
            eq_4_37_scaling_dual);
        add("eq_4_40_subadditive", "Thm 4.8 (Eq 4.40)",
            "beta(x+k)beta(y+k) <= (p ln2/k) beta(x+y+k)", eq_4_40_subadditive);
        add("eq_4_43_total_positivity", "Thm 4.9 (Eq 4.43)",
            "beta(x)beta(x+y+z) - beta(x+y)beta(x+z) > 0 (strict)",
            eq_4_43_total_positivity);
        add("eq_4_44_power_ratio", "Thm 4.10 (Eq 4.44)",
            "two-sided power-ratio bound, a in {1.5,3}, reversed for a in {0.3,0.8}",
            eq_4_44_power_ratio);
        add("eq_4_46_abs_recurrence", "Eq 4.46",
            "|beta^(n)(x+k)| = n!p/x^{n+1} - |beta^(n)(x)|; margin = -residual",
            eq_4_46_abs_recurrence);
        add("eq_4_48_49_delta_limits", "Prop 4.2 (Eqs 4.48-4.49)",
            "Delta_n(1e-3) within 1% of p and small discrete slope",
            eq_4_48_49_delta_limits);
        add("eq_4_57_logconvex_nth", "Thm 4.11 (Eq 4.57)",
            "log-convexity of |beta^(n)|, n = 1..3", eq_4_57_logconvex_nth);
        add("eq_4_62_63_nth_logconvex_forms", "Thm 4.13 (Eqs 4.62-4.63)",
            "gradient form (sign-corrected exponent, x > y) and the "
            "second-difference form",
            eq_4_62_63_nth_logconvex_forms);
        add("eq_4_70_superadditive", "Thm 4.14 (Eq 4.70)",
            "|beta^(n)(x+y)| < |beta^(n)(x)| + |beta^(n)(y)| (strict)",
            eq_4_70_superadditive);
        add("eq_4_71_72_scaling", "Eqs 4.71-4.72",
            "|beta^(n)(ax)| vs a|beta^(n)(x)|, both regimes", eq_4_71_72_scaling);
        add("eq_4_73_product_arg", "Eq 4.73",
            "|beta^(n)(xy)| <= |beta^(n)(x)| + |beta^(n)(y)| for y >= 1",
            [](CheckContext& c) { eq_4_73_product_arg(c, {0, 1, 2}); });
        add("eq_4_79_mult_convex_triple", "Thm 4.16 (Eqs 4.78-4.79)",
            "log-log determinant on grid triples, n odd; the claim fails "
            "numerically (see note)",
            eq_4_79_mult_convex_triple);
        add("eq_4_80_majorization", "Thm 4.17 (Eq 4.80)",
            "product ordering under multiplicative majorization; fails for "
            "wide families (see note)",
            eq_4_80_majorization);
        add("eq_4_82_F_monotonicity", "Thm 4.19 (Eqs 4.82-4.83)",
            "sign of F' for x^a |beta^(n)|: k-free thresholds a <= n+1 / "
            "a >= n+1+1/e; the displayed a/k normalization noted",
            eq_4_82_F_monotonicity);
        add("eq_4_91_product_arg_repeat", "Thm 4.20 (Eq 4.91)",
            "same predicate as Eq 4.73 at m >= 1",
            [](CheckContext& c) { eq_4_73_product_arg(c, {1, 2}); });
        add("eq_4_96_H_complete_monotone", "Thm 4.21 (Eqs 4.96-4.100)",
            "(-1)^m H^(m) > 0 via the closed form, m = 0..3 (strict)",
            eq_4_96_H_complete_monotone);
        add("eq_5_2_recurrence", "Eq 5.2",
            "Gamma_c(x+1) = x Gamma_c(x) + c Gamma_c(x-1); margin = -residual",
            eq_5_2_recurrence);
        add("eq_5_3_reflection", "Eq 5.3",
            "Gamma_c(-x) = c^{-x} Gamma_c(x); margin = -residual",
            eq_5_3_reflection);
        add("eq_5_7_deriv_logconvex", "Thm 5.1 (Eq 5.7)",
            "mixed-order Hölder inequality, even orders; margin = 1 - LHS/RHS",
            eq_5_7_deriv_logconvex);
        add("eq_5_15_same_order_logconvex", "Cor 5.1.1 (Eq 5.15)",
            "same-order log-convexity", eq_5_15_same_order_logconvex);
        add("eq_5_16_midpoint", "Cor 5.1.2 (Eq 5.16)",
            "midpoint form with mixed orders", eq_5_16_midpoint);
        add("eq_5_17_base_logconvex", "Cor 5.1.3 (Eq 5.17)",
            "log-convexity of the base function", eq_5_17_base_logconvex);
        add("eq_5_18_splitting", "Thm 5.2 (Eq 5.18)",
            "Gamma(x+y) <= Gamma(x/a)^a Gamma(y/b)^b", eq_5_18_splitting);
        add("eq_5_25_young_consequence", "Cor 5.1.5 (Eq 5.25)",
            "Young split (with the evident y/beta in the second term)",
            eq_5_25_young_consequence);
        add("eq_5_26_minkowski", "Thm 5.3 (Eq 5.26)",
            "tested as <= (the proof's direction); the displayed '=' fails",
            eq_5_26_minkowski);
        add("eq_5_32_exp_convexity", "Thm 5.4 (Eq 5.32)",
            "Gamma^(m-r) + Gamma^(m+r) >= 2 Gamma^(m), even orders",
            eq_5_32_exp_convexity);
        add("eq_5_40_mult_convex_triple", "Thm 5.5 (Eqs 5.39-5.40)",
            "log-log determinant gated on the increasing premise of Cor 5.1.4; "
            "ungated failures recorded in the note",
            eq_5_40_mult_convex_triple);
        add("eq_5_41_majorization", "Thm 5.6 (Eq 5.41)",
            "product ordering for the explicit majorizing families",
            eq_5_41_majorization);
        add("eq_2_2_multinomial_random", "Thm 2.2 (Eq 2.2)",
            "lattice reconstruction of (sum nu a)^m, random instances; margin "
            "= 1e-12 - relative residual",
            eq_2_2_multinomial_random);
        add("eq_2_3_refined_amgm_random", "Thm 2.3 (Eq 2.3)",
            "refined AM-GM chain ordering and U_j monotonicity, random instances",
            eq_2_3_refined_amgm_random);
        add("thm_3_1_type1_random", "Thm 3.1 (Eq 3.1)",
            "type-I chains over random power-family oracles",
            thm_3_1_type1_random);
        add("thm_3_2_type2_random", "Thm 3.2 (Eq 3.2)",
            "type-II chains over random matrices", thm_3_2_type2_random);
        add("thm_6_1_chain", "Thm 6.1 (Eqs 6.3-6.6)",
            "beta chains; oracle vs closed form; displayed-form constants recorded",
            thm_6_1_chain);
        add("thm_6_2_chain_nth", "Thm 6.2 (Eqs 6.7-6.8)",
            "derivative beta chains, N = 1, 2", thm_6_2_chain_nth);
        add("thm_7_1_chain", "Thm 7.1 (Eq 7.3)",
            "extended CZ gamma chains; oracle vs reduced path", thm_7_1_chain);
        add("thm_7_2_chain_nth", "Thm 7.2 (Eq 7.4)",
            "extended CZ derivative chains (even order)", thm_7_2_chain_nth);
        add("thm_7_3_chain", "Thm 7.3 (Eq 7.6)",
            "ordinary CZ gamma chains (u = v)", thm_7_3_chain);
        add("thm_7_4_chain_nth", "Thm 7.4 (Eq 7.7)",
            "ordinary CZ derivative chains (even order)", thm_7_4_chain_nth);
        add("thm_7_5_chain", "Thm 7.5 (Eq 7.10)",
            "v-extended CZ gamma chains", thm_7_5_chain);
        add("thm_7_6_chain_nth", "Thm 7.6 (Eq 7.11)",
            "v-extended CZ derivative chains (even order)", thm_7_6_chain_nth);
        add("appendix_A1_k_beta", "A.1.1-A.1.11",
            "k-beta facts as the p = k specialization", appendix_A1_k_beta);
        add("appendix_A2_young_minkowski", "A.2.1-A.2.2",
            "Young and Minkowski margins", appendix_A2_young_minkowski);
        return v;
    }();
    return defs;
}

struct CheckInfo {
    std::string check_id;
    std::string anchor;
    std::string description;
};

inline std::vector<CheckInfo> list_checks() {
    std::vector<CheckInfo> out;
    for (const auto& def : registry())
        out.push_back({def.id, def.anchor, def.description});
    return out;
}

inline CheckReport run_check(const std::string& check_id,
                             const GridSpec& grid = {}, double tol = 1e-9) {
    for (const auto& def : registry()) {
        if (def.id != check_id) continue;
        CheckContext ctx(def.id, grid, tol);
        try {
            def.run(ctx);
        } catch (const std::exception& e) {
            ctx.record_error("(check aborted)", e.what());
        }
        return ctx.finish();
    }
    throw std::out_of_range("unknown check id: " + check_id);
}

inline RunAllResult run_all(const GridSpec& grid = {}, double tol = 1e-9) {
    RunAllResult result;
    result.tol = tol;
    result.seed = grid.seed;
    for (const auto& def : registry()) {
        result.reports.push_back(run_check(def.id, grid, tol));
        ++result.summary.total;
        switch (result.reports.back().verdict) {
            case Verdict::PASS: ++result.summary.pass; break;
            case Verdict::PASS_WITH_NOTE: ++result.summary.pass_with_note; break;
            case Verdict::FAIL: ++result.summary.fail; break;
        }
    }
    return result;
}

}  // namespace pkspecial::verifier

#pragma once

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hgspec/alpha_normal.hpp"
#include "hgspec/extremal.hpp"
#include "hgspec/families.hpp"
#include "hgspec/hypergraph.hpp"
#include "hgspec/mobius.hpp"
#include "hgspec/spectral.hpp"
#include "hgspec/transforms.hpp"

namespace hgspec {

inline std::string format_g12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    int checks = 0;
    std::string detail;
};

namespace acceptance_detail {

struct Checker {
    bool ok = true;
    int checks = 0;
    std::string first_failure;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

inline CriterionResult finish(int index, const std::string& name, const Checker& c,
                              const std::string& summary) {
    CriterionResult r;
    r.index = index;
    r.name = name;
    r.passed = c.ok;
    r.checks = c.checks;
    r.detail = c.ok ? summary : c.first_failure;
    return r;
}

inline EdgeIndex branch_edge_at(const Hypergraph& H, VertexId v) {
    for (EdgeIndex e : H.incident_edges(v))
        if (classify_edge(H, e) == EdgeClass::branch) return e;
    throw std::invalid_argument("branch_edge_at: no branch edge is incident to the vertex");
}

/// Named instances spanning all the construction families; the certificate
/// round trip must hold on every one of them.
inline std::vector<std::pair<std::string, Hypergraph>> certificate_corpus() {
    std::vector<std::pair<std::string, Hypergraph>> corpus;
    auto add = [&corpus](const std::string& name, const FamilySpec& spec, int k) {
        corpus.emplace_back(name + "-k" + std::to_string(k), build(spec, k));
    };
    add("path-1", FamilySpec::loose_path(1), 3);
    add("path-2", FamilySpec::loose_path(2), 3);
    add("path-3", FamilySpec::loose_path(3), 4);
    add("path-5", FamilySpec::loose_path(5), 3);
    add("cycle-2", FamilySpec::loose_cycle(2), 3);
    add("cycle-3", FamilySpec::loose_cycle(3), 3);
    add("cycle-4", FamilySpec::loose_cycle(4), 4);
    add("cycle-5", FamilySpec::loose_cycle(5), 3);
    add("cycle-3", FamilySpec::loose_cycle(3), 5);
    add("cycle_star-2", FamilySpec::cycle_star(2), 3);
    add("cycle_star-3", FamilySpec::cycle_star(3), 4);
    add("cycle_star-4", FamilySpec::cycle_star(4), 3);
    add("cycle_pendant-2", FamilySpec::cycle_pendant_joint(2), 3);
    add("cycle_pendant-3", FamilySpec::cycle_pendant_joint(3), 3);
    add("cycle_pendant-4", FamilySpec::cycle_pendant_joint(4), 4);
    add("C1-1,1,1", FamilySpec::c1(1, 1, 1), 3);
    add("C1-2,1,1", FamilySpec::c1(2, 1, 1), 3);
    add("C1-2,2,2", FamilySpec::c1(2, 2, 2), 4);
    add("C2-1,1,1", FamilySpec::c2(1, 1, 1), 3);
    add("C2-2,1,1", FamilySpec::c2(2, 1, 1), 4);
    add("C2-2,2,1", FamilySpec::c2(2, 2, 1), 3);
    add("C3-1,1", FamilySpec::c3(1, 1), 4);
    add("C3-2,1", FamilySpec::c3(2, 1), 4);
    add("C3-2,2", FamilySpec::c3(2, 2), 5);
    return corpus;
}

}  // namespace acceptance_detail

/// Criterion 1: the m = 14, k = 3 worked example hits the published
/// theta0, alpha and rho.
inline CriterionResult criterion_worked_example() {
    using namespace acceptance_detail;
    Checker c;
    ExtremalSolution sol = min_rho_bicyclic(14, 3);
    c.expect(std::fabs(sol.theta0 - 0.35581) <= 5e-5,
             "theta0 = " + format_g12(sol.theta0) + ", expected 0.35581 +- 5e-5");
    c.expect(std::fabs(sol.alpha - 0.22084) <= 5e-5,
             "alpha = " + format_g12(sol.alpha) + ", expected 0.22084 +- 5e-5");
    c.expect(std::fabs(sol.rho - 1.654396) <= 5e-6,
             "rho = " + format_g12(sol.rho) + ", expected 1.654396 +- 5e-6");
    return finish(1, "worked-example-m14", c,
                  "theta0=" + format_g12(sol.theta0) + " alpha=" + format_g12(sol.alpha) +
                      " rho=" + format_g12(sol.rho));
}

/// Criterion 2: loose cycles have spectral radius 4^{1/k}.
inline CriterionResult criterion_loose_cycle_baseline() {
    using namespace acceptance_detail;
    Checker c;
    for (int k : {3, 4, 5}) {
        double expected = std::pow(4.0, 1.0 / k);
        for (int n = 2; n <= 10; ++n) {
            double rho = spectral_radius(build(FamilySpec::loose_cycle(n), k)).rho;
            c.expect(std::fabs(rho - expected) <= 1e-6,
                     "cycle n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         ": rho = " + format_g12(rho) + ", expected " + format_g12(expected));
        }
    }
    return finish(2, "loose-cycle-baseline", c, "27 cycles at 4^{1/k} within 1e-6");
}

/// Criterion 3: the closed-form minimum matches power iteration on the
/// balanced witness across m = 6..14, k = 3..4.
inline CriterionResult criterion_closed_form_vs_iteration() {
    using namespace acceptance_detail;
    Checker c;
    for (int m = 6; m <= 14; ++m)
        for (int k : {3, 4}) {
            ExtremalSolution sol = min_rho_bicyclic(m, k);
            auto [p, q] = detail::balanced_pq(m);
            double rho = spectral_radius(build(FamilySpec::c1(p, p, q), k)).rho;
            c.expect(std::fabs(sol.rho - rho) <= 2e-6,
                     "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": closed form " +
                         format_g12(sol.rho) + " vs iterated " + format_g12(rho));
        }
    return finish(3, "closed-form-vs-iteration", c, "18 (m,k) pairs within 2e-6");
}

/// Criterion 4: the two-loop and three-path families agree at (p, p, q).
inline CriterionResult criterion_family_equality() {
    using namespace acceptance_detail;
    Checker c;
    const std::pair<int, int> pairs[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 4}};
    for (auto [p, q] : pairs)
        for (int k : {3, 4}) {
            double r1 = spectral_radius(build(FamilySpec::c1(p, p, q), k)).rho;
            double r2 = spectral_radius(build(FamilySpec::c2(p, p, q), k)).rho;
            c.expect(std::fabs(r1 - r2) <= 2e-6,
                     "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                         " k=" + std::to_string(k) + ": C1 " + format_g12(r1) + " vs C2 " +
                         format_g12(r2));
        }
    return finish(4, "two-loop-three-path-equality", c, "10 (p,q,k) triples within 2e-6");
}

/// Criterion 5: sweeps bottom out at balanced parameters and the third
/// family stays above, for m = 6..11, k = 3..4.
inline CriterionResult criterion_sweep_minimality() {
    using namespace acceptance_detail;
    Checker c;
    for (int m = 6; m <= 11; ++m)
        for (int k : {3, 4}) {
            MainTheoremReport rep = verify_main_theorem(m, k);
            c.expect(rep.passed, "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " +
                                     (rep.failures.empty() ? "?" : rep.failures.front()));
        }
    return finish(5, "sweep-minimality", c, "12 (m,k) sweeps minimized at balanced parameters");
}

/// Criterion 6: eigenvector certificates classify alpha-normal and
/// consistent on the whole corpus.
inline CriterionResult criterion_certificate_round_trip() {
    using namespace acceptance_detail;
    Checker c;
    for (const auto& [name, H] : certificate_corpus()) {
        SpectralResult r = spectral_radius(H);
        WeightedIncidence B = certificate_from_eigenvector(H, r);
        NormalityReport rep = classify(H, B, std::pow(r.rho, -H.k()), 1e-8);
        c.expect(rep.classification == Normality::alpha_normal,
                 name + ": classified " + normality_name(rep.classification));
        c.expect(rep.consistency, name + ": certificate inconsistent along a cycle");
    }
    return finish(6, "certificate-round-trip", c, "24 instances alpha-normal and consistent");
}

/// Criterion 7: the analytic layer — closed form vs iteration, orbit
/// symmetry, convexity/log-concavity, and the product inequalities.
inline CriterionResult criterion_mobius_suite() {
    using namespace acceptance_detail;
    Checker c;
    std::mt19937 rng(20260819);

    std::uniform_real_distribution<double> alpha_dist(0.02, 0.2499);
    std::uniform_real_distribution<double> band(0.05, 0.95);
    std::uniform_int_distribution<int> steps(0, 50);
    for (int i = 0; i < 200; ++i) {
        double alpha = alpha_dist(rng);
        MobiusParams p(alpha);
        double x0 = p.r2 + band(rng) * (p.r1 - p.r2);
        long n = steps(rng);
        MobiusValue direct = iterate_direct(alpha, x0, n).back();
        MobiusValue closed = closed_form(alpha, x0, n);
        c.expect(!direct.pole && !closed.pole &&
                     std::fabs(direct.value - closed.value) <=
                         1e-10 * std::max(1.0, std::fabs(direct.value)),
                 "orbit mismatch at alpha=" + format_g12(alpha) + " x0=" + format_g12(x0) +
                     " n=" + std::to_string(n));
    }

    for (double alpha : {0.05, 0.15, 0.22, 0.24})
        for (long l : {0L, 1L, 2L, 5L, 9L}) {
            double y0 = symmetric_y0(alpha, l);
            for (long s = -20; s <= 20; ++s) {
                MobiusValue a = closed_form(alpha, y0, l + s);
                MobiusValue b = closed_form(alpha, y0, -s);
                c.expect(!a.pole && !b.pole && std::fabs(a.value + b.value - 1.0) <= 1e-10,
                         "symmetry broken at alpha=" + format_g12(alpha) +
                             " l=" + std::to_string(l) + " s=" + std::to_string(s));
            }
        }

    for (double alpha : {0.05, 0.15, 0.23}) {
        // Past x*theta ~ 28 the tanh in F0 saturates and adjacent grid
        // values collide in double precision, so cap the grid there.
        double x_max = std::min(30.0, 28.0 / theta_of_alpha(alpha));
        for (double x = 0.2; x <= x_max; x += 0.2) {
            double h = 0.2;
            double second = f0(alpha, x + h) - 2.0 * f0(alpha, x) + f0(alpha, x - h);
            c.expect(f0(alpha, x + h) < f0(alpha, x),
                     "F0 not decreasing at x=" + format_g12(x));
            c.expect(second >= 0.0, "F0 not convex at x=" + format_g12(x));
        }
        for (double x = -1.0; x <= 20.0; x += 0.2) {
            double h = 0.2;
            double second = std::log(f0_star(alpha, x + h)) - 2.0 * std::log(f0_star(alpha, x)) +
                            std::log(f0_star(alpha, x - h));
            c.expect(second <= 1e-12, "F0* not log-concave at x=" + format_g12(x));
        }
    }

    std::uniform_real_distribution<double> base(-1.0, 10.0);
    std::uniform_real_distribution<double> gap(0.1, 5.0);
    std::uniform_real_distribution<double> slack(0.0, 5.0);
    const double alphas[] = {0.1, 0.2, 0.24};
    for (int i = 0; i < 500; ++i) {
        double alpha = alphas[i % 3];
        double a = base(rng);
        double b = a + gap(rng);
        double cc = b + slack(rng);
        double d = b + cc - a;
        c.expect(f0_star(alpha, a) * f0_star(alpha, d) < f0_star(alpha, b) * f0_star(alpha, cc),
                 "product inequality failed at a=" + format_g12(a) + " b=" + format_g12(b) +
                     " c=" + format_g12(cc));
    }
    std::uniform_real_distribution<double> lo(0.0, 8.0);
    for (int i = 0; i < 500; ++i) {
        double alpha = alphas[i % 3];
        double a = lo(rng);
        double b = a + gap(rng);
        c.expect(f0_star(alpha, b) * f0_star(alpha, -a) <
                     f0_star(alpha, 0.0) * f0_star(alpha, b - a),
                 "shifted product inequality failed at a=" + format_g12(a) +
                     " b=" + format_g12(b));
    }
    return finish(7, "mobius-analytic-suite", c, "orbits, symmetry, curvature and products clean");
}

/// Criterion 8: releasing lowers rho, splitting on eligible joints lowers
/// rho, cyclic non-loose-cycle graphs sit below alpha*, and the pendant
/// cycle chain is ordered.
inline CriterionResult criterion_operation_monotonicity() {
    using namespace acceptance_detail;
    Checker c;

    struct ReleaseCase {
        FamilySpec spec;
        int k;
        VertexId anchor;
        VertexId victim;
    };
    const ReleaseCase releases[] = {
        {FamilySpec::c3(1, 1), 4, 0, 0},
        {FamilySpec::c3(2, 2), 4, 0, 0},
        {FamilySpec::c3(2, 1), 4, 2, 2},
        {FamilySpec::c2(1, 1, 1), 3, 0, 0},
        {FamilySpec::c2(2, 1, 1), 3, 3, 3},
        {FamilySpec::c2(2, 2, 2), 4, 0, 0},
        {FamilySpec::c1(1, 1, 1), 3, 0, 0},
        {FamilySpec::c1(2, 2, 2), 3, 0, 0},
        {FamilySpec::cycle_star(3), 3, 0, 0},
        {FamilySpec::cycle_pendant_joint(4), 3, 0, 1},
    };
    for (const ReleaseCase& rc : releases) {
        Hypergraph H = build(rc.spec, rc.k);
        std::string label = family_name(rc.spec.family) + "(" + rc.spec.params_string() +
                            ")-k" + std::to_string(rc.k);
        Hypergraph H2 = release_vertices(H, {branch_edge_at(H, rc.anchor), {rc.victim}}).graph;
        c.expect(H2.is_connected(), label + ": release disconnected the instance");
        if (!H2.is_connected()) continue;
        double before = spectral_radius(H).rho;
        double after = spectral_radius(H2).rho;
        c.expect(after < before - 1e-7, label + ": release rho " + format_g12(before) + " -> " +
                                            format_g12(after) + " did not decrease");
    }

    const std::pair<FamilySpec, int> splits[] = {
        {FamilySpec::c1(1, 1, 1), 3}, {FamilySpec::c1(2, 1, 1), 3},
        {FamilySpec::c1(2, 2, 2), 4}, {FamilySpec::c1(3, 2, 1), 3},
        {FamilySpec::c2(1, 1, 1), 3}, {FamilySpec::c2(2, 1, 1), 3},
        {FamilySpec::c2(2, 2, 2), 4}, {FamilySpec::c2(3, 1, 1), 5},
        {FamilySpec::c3(1, 1), 4},    {FamilySpec::c3(2, 2), 4},
    };
    for (const auto& [spec, k] : splits) {
        Hypergraph H = build(spec, k);
        std::string label =
            family_name(spec.family) + "(" + spec.params_string() + ")-k" + std::to_string(k);
        std::vector<VertexId> joints = eligible_split_joints(H);
        c.expect(!joints.empty(), label + ": no eligible split joints found");
        if (joints.empty()) continue;
        c.expect(splitting_is_rho_decreasing(H, split_at(H, joints.front()), 1e-7),
                 label + ": splitting did not decrease rho");
    }

    const std::pair<FamilySpec, int> cyclic[] = {
        {FamilySpec::cycle_star(2), 3},          {FamilySpec::cycle_star(3), 3},
        {FamilySpec::cycle_star(5), 3},          {FamilySpec::cycle_pendant_joint(2), 3},
        {FamilySpec::cycle_pendant_joint(3), 3}, {FamilySpec::cycle_pendant_joint(4), 4},
        {FamilySpec::c1(1, 1, 1), 3},            {FamilySpec::c2(1, 1, 1), 4},
        {FamilySpec::c3(1, 1), 4},               {FamilySpec::c3(2, 2), 5},
    };
    for (const auto& [spec, k] : cyclic) {
        Hypergraph H = build(spec, k);
        std::string label =
            family_name(spec.family) + "(" + spec.params_string() + ")-k" + std::to_string(k);
        c.expect(alpha_of(H) < alpha_star() - 1e-7, label + ": alpha not below alpha*");
    }

    for (int k : {3, 4})
        for (int n = 2; n <= 8; ++n) {
            double a_joint = alpha_of(build(FamilySpec::cycle_pendant_joint(n), k));
            double a_star_n = alpha_of(build(FamilySpec::cycle_star(n), k));
            c.expect(a_joint < a_star_n - 1e-7 && a_star_n < alpha_star() - 1e-7,
                     "pendant chain n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " out of order: " + format_g12(a_joint) + ", " + format_g12(a_star_n) +
                         ", " + format_g12(alpha_star()));
        }
    return finish(8, "operation-monotonicity", c,
                  "releases, splits, alpha* gaps and the pendant chain all strict");
}

/// Criterion 9: proper connected subgraphs have strictly smaller rho.
inline CriterionResult criterion_subgraph_monotonicity() {
    using namespace acceptance_detail;
    Checker c;
    struct Pair {
        FamilySpec sub;
        FamilySpec host;
        int k;
    };
    const Pair pairs[] = {
        {FamilySpec::loose_path(2), FamilySpec::loose_path(3), 3},
        {FamilySpec::loose_path(3), FamilySpec::loose_path(5), 3},
        {FamilySpec::loose_path(4), FamilySpec::loose_cycle(5), 3},
        {FamilySpec::loose_cycle(3), FamilySpec::cycle_star(3), 3},
        {FamilySpec::loose_cycle(4), FamilySpec::cycle_pendant_joint(4), 3},
        {FamilySpec::loose_cycle(3), FamilySpec::cycle_star(3), 4},
        {FamilySpec::loose_cycle(2), FamilySpec::c1(1, 1, 1), 3},
        {FamilySpec::cycle_star(2), FamilySpec::c1(1, 1, 1), 3},
        {FamilySpec::loose_path(1), FamilySpec::loose_path(2), 4},
        {FamilySpec::loose_cycle(2), FamilySpec::cycle_star(2), 4},
    };
    for (const Pair& p : pairs) {
        double sub = spectral_radius(build(p.sub, p.k)).rho;
        double host = spectral_radius(build(p.host, p.k)).rho;
        c.expect(sub < host - 1e-8,
                 family_name(p.sub.family) + "(" + p.sub.params_string() + ") vs " +
                     family_name(p.host.family) + "(" + p.host.params_string() + ") k=" +
                     std::to_string(p.k) + ": " + format_g12(sub) + " !< " + format_g12(host));
    }
    return finish(9, "subgraph-monotonicity", c, "10 proper subgraph pairs strictly below host");
}

/// Runs the named suite: "paper" is all nine criteria, "quick" the fast
/// subset that still touches every module.
inline std::vector<CriterionResult> run_acceptance(const std::string& suite) {
    bool quick = suite == "quick";
    if (!quick && suite != "paper")
        throw std::invalid_argument("run_acceptance: suite must be 'paper' or 'quick'");
    std::vector<CriterionResult> results;
    results.push_back(criterion_worked_example());
    results.push_back(criterion_loose_cycle_baseline());
    if (!quick) results.push_back(criterion_closed_form_vs_iteration());
    results.push_back(criterion_family_equality());
    if (!quick) results.push_back(criterion_sweep_minimality());
    results.push_back(criterion_certificate_round_trip());
    results.push_back(criterion_mobius_suite());
    if (!quick) {
        results.push_back(criterion_operation_monotonicity());
        results.push_back(criterion_subgraph_monotonicity());
    }
    return results;
}

}  // namespace hgspec

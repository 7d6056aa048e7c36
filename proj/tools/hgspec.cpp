#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hgspec/hgspec.hpp"

namespace {

hgspec::FamilySpec parse_family(const std::string& name, const std::vector<int>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("family " + name + " takes " + std::to_string(n) +
                                        " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "path") { need(1); return hgspec::FamilySpec::loose_path(params[0]); }
    if (name == "cycle") { need(1); return hgspec::FamilySpec::loose_cycle(params[0]); }
    if (name == "cycle_star") { need(1); return hgspec::FamilySpec::cycle_star(params[0]); }
    if (name == "cycle_pendant") {
        need(1);
        return hgspec::FamilySpec::cycle_pendant_joint(params[0]);
    }
    if (name == "C1") { need(3); return hgspec::FamilySpec::c1(params[0], params[1], params[2]); }
    if (name == "C2") { need(3); return hgspec::FamilySpec::c2(params[0], params[1], params[2]); }
    if (name == "C3") { need(2); return hgspec::FamilySpec::c3(params[0], params[1]); }
    throw std::invalid_argument("unknown family: " + name);
}

hgspec::Hypergraph load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return hgspec::read_hypergraph(in);
}

int run_construct(const std::string& family, const std::vector<int>& params, int k,
                  const std::string& out) {
    hgspec::Hypergraph H = hgspec::build(parse_family(family, params), k);
    if (out.empty()) {
        hgspec::write_hypergraph(std::cout, H);
    } else {
        std::ofstream os(out);
        if (!os) throw std::runtime_error("cannot open " + out + " for writing");
        hgspec::write_hypergraph(os, H);
    }
    return 0;
}

int run_rho(const std::string& file, double tol) {
    hgspec::SpectralResult r = hgspec::spectral_radius(load(file), tol);
    std::cout << "rho=" << hgspec::format_g12(r.rho) << "\n"
              << "lower_bound=" << hgspec::format_g12(r.lower_bound) << "\n"
              << "upper_bound=" << hgspec::format_g12(r.upper_bound) << "\n"
              << "iterations=" << r.iterations << "\n";
    return 0;
}

int run_certificate(const std::string& file) {
    hgspec::Hypergraph H = load(file);
    hgspec::SpectralResult r = hgspec::spectral_radius(H);
    double alpha = std::pow(r.rho, -H.k());
    hgspec::WeightedIncidence B = hgspec::certificate_from_eigenvector(H, r);
    hgspec::NormalityReport rep = hgspec::classify(H, B, alpha);
    std::cout << "alpha=" << hgspec::format_g12(alpha) << "\n"
              << "classification=" << hgspec::normality_name(rep.classification) << "\n"
              << "consistency=" << (rep.consistency ? "true" : "false") << "\n";
    for (std::size_t v = 0; v < rep.vertex_sums.size(); ++v)
        std::cout << "vertex_sum[" << v << "]=" << hgspec::format_g12(rep.vertex_sums[v]) << "\n";
    for (std::size_t e = 0; e < rep.edge_products.size(); ++e)
        std::cout << "edge_product[" << e << "]=" << hgspec::format_g12(rep.edge_products[e])
                  << "\n";
    return 0;
}

int run_mobius_orbit(double alpha, double x0, long n) {
    hgspec::MobiusParams p(alpha);
    std::cout << "alpha=" << hgspec::format_g12(alpha) << "\n"
              << "r1=" << hgspec::format_g12(p.r1) << "\n"
              << "r2=" << hgspec::format_g12(p.r2) << "\n";
    std::vector<hgspec::MobiusValue> orbit = hgspec::iterate_direct(alpha, x0, n);
    for (std::size_t j = 0; j < orbit.size(); ++j) {
        long idx = n >= 0 ? static_cast<long>(j) : -static_cast<long>(j);
        std::cout << "x[" << idx << "]="
                  << (orbit[j].pole ? "pole" : hgspec::format_g12(orbit[j].value)) << "\n";
    }
    return 0;
}

int run_mobius_table(double alpha, const std::string& range) {
    std::size_t dots = range.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like LO..HI, got " + range);
    long lo = std::stol(range.substr(0, dots));
    long hi = std::stol(range.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("range must satisfy LO <= HI");
    std::cout << "alpha=" << hgspec::format_g12(alpha) << "\n";
    for (long x = lo; x <= hi; ++x)
        std::cout << "f0star[" << x
                  << "]=" << hgspec::format_g12(hgspec::f0_star(alpha, static_cast<double>(x)))
                  << "\n";
    return 0;
}

int run_sweep(int m, int k, const std::string& family, bool as_json) {
    hgspec::Family fam = family == "C1"   ? hgspec::Family::c1
                         : family == "C2" ? hgspec::Family::c2
                                          : hgspec::Family::c3;
    std::vector<hgspec::SweepRow> rows = hgspec::family_sweep(m, k, fam);
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const hgspec::SweepRow& row : rows)
            arr.push_back({{"family", hgspec::family_name(row.spec.family)},
                           {"params", row.spec.lengths},
                           {"rho", row.rho},
                           {"alpha", row.alpha},
                           {"converged", row.converged}});
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const hgspec::SweepRow& row : rows)
            std::cout << "family=" << hgspec::family_name(row.spec.family)
                      << " params=" << row.spec.params_string()
                      << " rho=" << hgspec::format_g12(row.rho)
                      << " alpha=" << hgspec::format_g12(row.alpha)
                      << " converged=" << (row.converged ? "true" : "false") << "\n";
    }
    return 0;
}

int run_extremal(int m, int k) {
    hgspec::ExtremalSolution sol = hgspec::min_rho_bicyclic(m, k);
    std::cout << "m=" << sol.m << "\n"
              << "k=" << sol.k << "\n"
              << "q=" << sol.q << "\n"
              << "theta0=" << hgspec::format_g12(sol.theta0) << "\n"
              << "alpha=" << hgspec::format_g12(sol.alpha) << "\n"
              << "rho=" << hgspec::format_g12(sol.rho) << "\n";
    for (std::size_t i = 0; i < sol.witnesses.size(); ++i)
        std::cout << "witness[" << i << "]=" << hgspec::family_name(sol.witnesses[i].family)
                  << "(" << sol.witnesses[i].params_string() << ")\n";
    return 0;
}

int run_verify(const std::string& suite) {
    bool all_passed = true;
    for (const hgspec::CriterionResult& r : hgspec::run_acceptance(suite)) {
        std::cout << "criterion=" << r.index << " name=" << r.name
                  << " status=" << (r.passed ? "PASS" : "FAIL") << " checks=" << r.checks
                  << " detail=" << r.detail << "\n";
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral radii of uniform hypergraphs, weighted-incidence "
                 "certificates, and the bicyclic minimizers"};
    app.require_subcommand(1);

    std::string family, out_file;
    std::vector<int> params;
    int k = 3;
    CLI::App* construct = app.add_subcommand("construct", "build a family member, text format");
    construct->add_option("--family", family, "family name")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "cycle_star", "cycle_pendant", "C1", "C2", "C3"}));
    construct->add_option("--params", params, "comma-separated path lengths")
        ->required()
        ->delimiter(',');
    construct->add_option("--k", k, "edge size")->required()->check(CLI::Range(3, 64));
    construct->add_option("--out", out_file, "output file (default stdout)");

    std::string in_file;
    double tol = 1e-10;
    CLI::App* rho = app.add_subcommand("rho", "spectral radius of a hypergraph file");
    rho->add_option("file", in_file, "hypergraph text file")->required();
    rho->add_option("--tol", tol, "bound-gap tolerance")->check(CLI::PositiveNumber);

    std::string cert_file;
    CLI::App* certificate =
        app.add_subcommand("certificate", "eigenvector certificate report for a hypergraph file");
    certificate->add_option("file", cert_file, "hypergraph text file")->required();

    double alpha = 0.2, x0 = 0.5;
    long n = 10;
    std::string table, range;
    CLI::App* mobius = app.add_subcommand("mobius", "orbits and F0* tables of x -> 1 - alpha/x");
    mobius->add_option("--alpha", alpha, "alpha in (0, 1/4]")->required();
    CLI::Option* ox0 = mobius->add_option("--x0", x0, "orbit start");
    CLI::Option* on = mobius->add_option("--n", n, "orbit length (negative iterates backwards)");
    CLI::Option* otable =
        mobius->add_option("--table", table, "table name")->check(CLI::IsMember({"f0star"}));
    CLI::Option* orange = mobius->add_option("--range", range, "integer range LO..HI");
    otable->needs(orange);
    orange->needs(otable);
    otable->excludes(ox0);
    otable->excludes(on);

    int sweep_m = 0, sweep_k = 0;
    std::string sweep_family;
    bool as_json = false;
    CLI::App* sweep = app.add_subcommand("sweep", "spectral radii over one family's parameters");
    sweep->add_option("--m", sweep_m, "edge count")->required()->check(CLI::Range(3, 1000000));
    sweep->add_option("--k", sweep_k, "edge size")->required()->check(CLI::Range(3, 64));
    sweep->add_option("--family", sweep_family, "family name")
        ->required()
        ->check(CLI::IsMember({"C1", "C2", "C3"}));
    sweep->add_flag("--json", as_json, "emit a JSON array instead of text rows");

    int ext_m = 0, ext_k = 0;
    CLI::App* extremal = app.add_subcommand("extremal", "minimum bicyclic spectral radius report");
    extremal->add_option("--m", ext_m, "edge count")->required()->check(CLI::Range(5, 1000000));
    extremal->add_option("--k", ext_k, "edge size")->required()->check(CLI::Range(3, 64));

    std::string suite = "paper";
    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--suite", suite, "paper (full) or quick")
        ->check(CLI::IsMember({"paper", "quick"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(family, params, k, out_file);
        if (rho->parsed()) return run_rho(in_file, tol);
        if (certificate->parsed()) return run_certificate(cert_file);
        if (mobius->parsed()) {
            if (otable->count() > 0) return run_mobius_table(alpha, range);
            if (ox0->count() == 0 || on->count() == 0) {
                std::cerr << "mobius: either --table with --range, or --x0 with --n, is required"
                          << std::endl;
                return 2;
            }
            return run_mobius_orbit(alpha, x0, n);
        }
        if (sweep->parsed()) return run_sweep(sweep_m, sweep_k, sweep_family, as_json);
        if (extremal->parsed()) return run_extremal(ext_m, ext_k);
        if (verify->parsed()) return run_verify(suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}

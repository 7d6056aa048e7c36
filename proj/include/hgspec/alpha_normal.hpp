#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hgspec/hypergraph.hpp"
#include "hgspec/spectral.hpp"

namespace hgspec {

/// Positive weights on the incident (vertex, edge) pairs of a hypergraph.
class WeightedIncidence {
public:
    void set(VertexId v, EdgeIndex e, double weight) { weights_[{v, e}] = weight; }

    bool has(VertexId v, EdgeIndex e) const { return weights_.count({v, e}) > 0; }

    double get(VertexId v, EdgeIndex e) const {
        auto it = weights_.find({v, e});
        if (it == weights_.end())
            throw std::invalid_argument("WeightedIncidence: missing weight for incidence");
        return it->second;
    }

    const std::map<std::pair<VertexId, EdgeIndex>, double>& entries() const { return weights_; }

private:
    std::map<std::pair<VertexId, EdgeIndex>, double> weights_;
};

enum class Normality {
    alpha_normal,
    strictly_subnormal,
    subnormal,
    strictly_supernormal,
    supernormal,
    none,
};

inline std::string normality_name(Normality c) {
    switch (c) {
        case Normality::alpha_normal: return "alpha_normal";
        case Normality::strictly_subnormal: return "strictly_subnormal";
        case Normality::subnormal: return "subnormal";
        case Normality::strictly_supernormal: return "strictly_supernormal";
        case Normality::supernormal: return "supernormal";
        case Normality::none: return "none";
    }
    return "?";
}

struct NormalityReport {
    std::vector<double> vertex_sums;    // indexed by vertex id
    std::vector<double> edge_products;  // indexed by edge index
    Normality classification = Normality::none;
    bool consistency = false;
};

/// B(v,e) = (prod_{u in e} x_u) / (x_v^k * rho) for the principal
/// eigenvector x: vertex sums telescope to (Ax)_v / (rho x_v^{k-1}) = 1 and
/// edge products to rho^{-k}.
inline WeightedIncidence certificate_from_eigenvector(const Hypergraph& H,
                                                      const SpectralResult& result) {
    const std::vector<double>& x = result.eigenvector;
    if (x.size() != H.vertex_count())
        throw std::invalid_argument(
            "certificate_from_eigenvector: eigenvector length differs from vertex count");
    for (double xv : x)
        if (!(xv > 0.0))
            throw std::invalid_argument(
                "certificate_from_eigenvector: eigenvector must be strictly positive");

    WeightedIncidence B;
    for (EdgeIndex e = 0; e < H.edge_count(); ++e) {
        double prod = 1.0;
        for (VertexId u : H.edge(e)) prod *= x[u];
        for (VertexId v : H.edge(e))
            B.set(v, e, prod / (std::pow(x[v], H.k()) * result.rho));
    }
    return B;
}

/// Along every cycle of a fundamental basis of the incidence bipartite
/// graph, the alternating ratio product of weights must be 1; basis
/// consistency extends to all Berge cycles by multiplicativity.
inline bool check_consistency(const Hypergraph& H, const WeightedIncidence& B,
                              double tol = 1e-8) {
    for (const BergeCycle& cycle : cycle_basis(H)) {
        double prod = 1.0;
        std::size_t M = cycle.edges.size();
        for (std::size_t i = 0; i < M; ++i)
            prod *= B.get(cycle.vertices[(i + 1) % M], cycle.edges[i]) /
                    B.get(cycle.vertices[i], cycle.edges[i]);
        if (std::fabs(prod - 1.0) > tol) return false;
    }
    return true;
}

/// Compares all vertex sums against 1 and all edge products against alpha.
/// alpha-normal requires equality throughout (within tol); otherwise the
/// sub/supernormal direction must hold weakly everywhere, and is strict
/// only when some inequality clears tol.
inline NormalityReport classify(const Hypergraph& H, const WeightedIncidence& B, double alpha,
                                double tol = 1e-8) {
    for (const auto& [key, w] : B.entries()) {
        auto [v, e] = key;
        if (e >= H.edge_count() || !std::binary_search(H.edge(e).begin(), H.edge(e).end(), v))
            throw std::invalid_argument("classify: weight on a non-incident pair");
        if (!(w > 0.0)) throw std::invalid_argument("classify: weights must be positive");
    }

    NormalityReport report;
    report.vertex_sums.assign(H.vertex_count(), 0.0);
    for (VertexId v = 0; v < H.vertex_count(); ++v)
        for (EdgeIndex e : H.incident_edges(v)) report.vertex_sums[v] += B.get(v, e);
    report.edge_products.assign(H.edge_count(), 1.0);
    for (EdgeIndex e = 0; e < H.edge_count(); ++e)
        for (VertexId v : H.edge(e)) report.edge_products[e] *= B.get(v, e);

    bool sums_equal = true, sums_below = true, sums_above = true;
    bool sums_strictly_below = false, sums_strictly_above = false;
    for (double s : report.vertex_sums) {
        if (std::fabs(s - 1.0) > tol) sums_equal = false;
        if (s > 1.0 + tol) { sums_below = false; sums_strictly_above = true; }
        if (s < 1.0 - tol) { sums_above = false; sums_strictly_below = true; }
    }
    bool prods_equal = true, prods_below = true, prods_above = true;
    bool prods_strictly_below = false, prods_strictly_above = false;
    for (double p : report.edge_products) {
        if (std::fabs(p - alpha) > tol) prods_equal = false;
        if (p > alpha + tol) { prods_below = false; prods_strictly_above = true; }
        if (p < alpha - tol) { prods_above = false; prods_strictly_below = true; }
    }

    if (sums_equal && prods_equal) {
        report.classification = Normality::alpha_normal;
    } else if (sums_below && prods_above) {
        // subnormal: sums <= 1, products >= alpha
        report.classification = (sums_strictly_below || prods_strictly_above)
                                    ? Normality::strictly_subnormal
                                    : Normality::subnormal;
    } else if (sums_above && prods_below) {
        // supernormal: sums >= 1, products <= alpha
        report.classification = (sums_strictly_above || prods_strictly_below)
                                    ? Normality::strictly_supernormal
                                    : Normality::supernormal;
    } else {
        report.classification = Normality::none;
    }
    report.consistency = check_consistency(H, B, tol);
    return report;
}

}  // namespace hgspec

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgspec/hypergraph.hpp"

namespace hgspec {

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(double lower, double upper, long iterations)
        : std::runtime_error(format(lower, upper, iterations)),
          lower_bound(lower),
          upper_bound(upper),
          iterations(iterations) {}

    double lower_bound;
    double upper_bound;
    long iterations;

private:
    static std::string format(double lower, double upper, long iterations) {
        std::ostringstream os;
        os << "spectral_radius: bounds [" << lower << ", " << upper
           << "] did not close after " << iterations << " iterations";
        return os.str();
    }
};

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> eigenvector;  // normalized so sum_i x_i^k = 1
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    long iterations = 0;
};

/// Component v of the adjacency action: sum over edges containing v of the
/// product of the other k-1 coordinates.
inline std::vector<double> apply_adjacency(const Hypergraph& H, const std::vector<double>& x) {
    if (x.size() != H.vertex_count())
        throw std::invalid_argument("apply_adjacency: vector length differs from vertex count");
    std::vector<double> y(x.size(), 0.0);
    for (const Edge& e : H.edges())
        for (VertexId v : e) {
            double prod = 1.0;
            for (VertexId u : e)
                if (u != v) prod *= x[u];
            y[v] += prod;
        }
    return y;
}

/// k times the sum of edge products of x; equals rho at the principal
/// eigenvector. Requires the k-norm normalization sum x_i^k = 1.
inline double rayleigh(const Hypergraph& H, const std::vector<double>& x) {
    if (x.size() != H.vertex_count())
        throw std::invalid_argument("rayleigh: vector length differs from vertex count");
    double norm = 0.0;
    for (double xi : x) norm += std::pow(xi, H.k());
    if (std::fabs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("rayleigh: input must satisfy sum x_i^k = 1");
    double total = 0.0;
    for (const Edge& e : H.edges()) {
        double prod = 1.0;
        for (VertexId v : e) prod *= x[v];
        total += prod;
    }
    return H.k() * total;
}

/// Power iteration with ratio bounds: x <- normalize((Ax)^[1/(k-1)]),
/// min_v (Ax)_v / x_v^{k-1} <= rho <= max_v. The best bounds seen so far
/// are kept, the gap is the certified error, and rho is their midpoint.
inline SpectralResult spectral_radius(const Hypergraph& H, double tol = 1e-10,
                                      long max_iter = 200000) {
    if (!H.is_connected())
        throw std::invalid_argument("spectral_radius: hypergraph must be connected");
    if (!(tol > 0.0)) throw std::invalid_argument("spectral_radius: tol must be positive");

    const int k = H.k();
    const double n = static_cast<double>(H.vertex_count());
    std::vector<double> x(H.vertex_count(), std::pow(n, -1.0 / k));

    double best_lower = 0.0;
    double best_upper = std::numeric_limits<double>::infinity();
    for (long it = 1; it <= max_iter; ++it) {
        std::vector<double> y = apply_adjacency(H, x);
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (std::size_t v = 0; v < x.size(); ++v) {
            double ratio = y[v] / std::pow(x[v], k - 1);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        best_lower = std::max(best_lower, lo);
        best_upper = std::min(best_upper, hi);
        if (best_upper - best_lower <= tol) {
            SpectralResult r;
            r.rho = 0.5 * (best_lower + best_upper);
            r.eigenvector = std::move(x);
            r.lower_bound = best_lower;
            r.upper_bound = best_upper;
            r.iterations = it;
            return r;
        }
        double norm = 0.0;
        for (std::size_t v = 0; v < x.size(); ++v) {
            x[v] = std::pow(y[v], 1.0 / (k - 1));
            norm += std::pow(x[v], k);
        }
        norm = std::pow(norm, 1.0 / k);
        for (double& xv : x) xv /= norm;
    }
    throw ConvergenceError(best_lower, best_upper, max_iter);
}

/// alpha(H) = rho(H)^{-k}.
inline double alpha_of(const Hypergraph& H, double tol = 1e-10) {
    return std::pow(spectral_radius(H, tol).rho, -H.k());
}

}  // namespace hgspec

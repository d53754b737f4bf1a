#pragma once

#include <cspace/newton.hpp>

#include <vector>

namespace cspace {

struct RootSearchOptions {
    double eps = 0.05, L = 10; // log-uniform start grid covers [eps, L]^2
    int grid = 0;              // points per axis; 0 picks 8 per decade (at least 24)
    double dedup_rel = 1e-6;
    NewtonOptions newton{};
    unsigned threads = 0;      // 0 = hardware concurrency
};

int grid_points(const RootSearchOptions& o);

/// Zeros of the homotopy system at parameter t with T1 = T2 = T3 > 0, found by damped Newton
/// in log coordinates from every grid start. Deduplicated and sorted by (x1, x2). Roots may
/// lie outside the start box.
std::vector<NewtonResult> find_roots(const SpaceParams& p, double t, const RootSearchOptions& o);

/// Relative max-abs distance used for deduplication.
double rel_distance(double a1, double a2, double b1, double b2);

} // namespace cspace

#pragma once

#include <cspace/solver.hpp>

#include <array>
#include <utility>
#include <vector>

namespace cspace {

/// Solution rescaled so that the Einstein constant is 1 (c is scale invariant).
struct NormalizedSolution {
    double x1n = 0, x2n = 0, x3n = 0, v4n = 0, v5n = 0, c = 0;
    std::array<double, 2> rho0_eigs{}; // descending
};

NormalizedSolution normalize(const EinsteinSolution& sol);

/// Eigenvalues of [[v4 + c^2 v5, c v5], [c v5, v5]], descending.
std::array<double, 2> rho0_eigenvalues(double v4, double v5, double c);

/// Sorted (dimension, normalised coefficient) pairs of f1, f2, f3 plus the fiber eigenvalues.
struct IsometrySignature {
    std::array<std::pair<long long, double>, 3> diagonal{};
    std::array<double, 2> eigs{};
};

IsometrySignature signature(const SpaceParams& p, const EinsteinSolution& sol);
bool same_signature(const IsometrySignature& a, const IsometrySignature& b, double rel = 1e-6);

/// Partition of solutions of one space; each class lists indices in ascending order.
std::vector<std::vector<int>> isometry_classes(const SpaceParams& p, const std::vector<EinsteinSolution>& sols,
                                               double rel = 1e-6);

struct SolutionRef {
    int report = 0;
    int solution = 0;
    bool operator==(const SolutionRef&) const = default;
};

/// Partition across reports whose parameters are permutations of one multiset {l, m, n}.
/// Throws std::invalid_argument("inconsistent parameter multisets") otherwise.
std::vector<std::vector<SolutionRef>> isometry_classes(const std::vector<SolveReport>& reports, double rel = 1e-6);

/// Relabels the three blocks by perm (block b goes to position perm[b]); the module of
/// dimension 2ab follows its pair of blocks. Returns the permuted space and the induced
/// solution, renormalised to x3 = 1 with v4, v5, c recomputed on the new space.
std::pair<SpaceParams, EinsteinSolution> permute_blocks(const SpaceParams& p, const EinsteinSolution& sol,
                                                        std::array<int, 3> perm);

} // namespace cspace

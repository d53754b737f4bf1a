#include <cspace/isometry.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cspace {

std::array<double, 2> rho0_eigenvalues(double v4, double v5, double c)
{
    const double a = v4 + c * c * v5, b = c * v5, d = v5;
    const double mean = (a + d) / 2, rad = std::hypot((a - d) / 2, b);
    // the smaller root via the determinant avoids cancellation
    const double big = mean + rad;
    return {big, (a * d - b * b) / big};
}

NormalizedSolution normalize(const EinsteinSolution& sol)
{
    const double k = sol.lambda;
    const auto& g = sol.metric;
    NormalizedSolution n{g.x1 * k, g.x2 * k, g.x3 * k, g.v4 * k, g.v5 * k, g.c, {}};
    n.rho0_eigs = rho0_eigenvalues(n.v4n, n.v5n, n.c);
    return n;
}

IsometrySignature signature(const SpaceParams& p, const EinsteinSolution& sol)
{
    const auto n = normalize(sol);
    IsometrySignature s;
    s.diagonal = {{{p.d1, n.x1n}, {p.d2, n.x2n}, {p.d3, n.x3n}}};
    std::sort(s.diagonal.begin(), s.diagonal.end());
    s.eigs = n.rho0_eigs;
    return s;
}

namespace {

bool close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

} // namespace

bool same_signature(const IsometrySignature& a, const IsometrySignature& b, double rel)
{
    for (int i = 0; i < 3; ++i)
        if (a.diagonal[i].first != b.diagonal[i].first || !close(a.diagonal[i].second, b.diagonal[i].second, rel))
            return false;
    return close(a.eigs[0], b.eigs[0], rel) && close(a.eigs[1], b.eigs[1], rel);
}

std::vector<std::vector<int>> isometry_classes(const SpaceParams& p, const std::vector<EinsteinSolution>& sols,
                                               double rel)
{
    std::vector<std::vector<int>> classes;
    std::vector<IsometrySignature> reps;
    for (int i = 0; i < int(sols.size()); ++i) {
        const auto s = signature(p, sols[i]);
        auto it = std::find_if(reps.begin(), reps.end(), [&](const IsometrySignature& r) {
            return same_signature(r, s, rel);
        });
        if (it == reps.end()) {
            reps.push_back(s);
            classes.push_back({i});
        } else {
            classes[it - reps.begin()].push_back(i);
        }
    }
    return classes;
}

std::vector<std::vector<SolutionRef>> isometry_classes(const std::vector<SolveReport>& reports, double rel)
{
    auto key = [](const SpaceParams& p) {
        std::array<long long, 3> k{p.l, p.m, p.n};
        std::sort(k.begin(), k.end());
        return k;
    };
    std::vector<std::vector<SolutionRef>> classes;
    std::vector<IsometrySignature> reps;
    for (int r = 0; r < int(reports.size()); ++r) {
        if (key(reports[r].params) != key(reports.front().params))
            throw std::invalid_argument("inconsistent parameter multisets");
        for (int i = 0; i < int(reports[r].solutions.size()); ++i) {
            const auto s = signature(reports[r].params, reports[r].solutions[i]);
            auto it = std::find_if(reps.begin(), reps.end(), [&](const IsometrySignature& q) {
                return same_signature(q, s, rel);
            });
            if (it == reps.end()) {
                reps.push_back(s);
                classes.push_back({{r, i}});
            } else {
                classes[it - reps.begin()].push_back({r, i});
            }
        }
    }
    return classes;
}

std::pair<SpaceParams, EinsteinSolution> permute_blocks(const SpaceParams& p, const EinsteinSolution& sol,
                                                        std::array<int, 3> perm)
{
    {
        auto chk = perm;
        std::sort(chk.begin(), chk.end());
        if (chk != std::array<int, 3>{0, 1, 2})
            throw std::invalid_argument("perm must be a permutation of 0, 1, 2");
    }
    const std::array<long long, 3> blocks{p.l, p.m, p.n};
    std::array<long long, 3> nb{};
    for (int b = 0; b < 3; ++b)
        nb[perm[b]] = blocks[b];
    const SpaceParams q = make_params(nb[0], nb[1], nb[2]);

    // module index of an unordered block pair: {0,1} -> f1, {0,2} -> f2, {1,2} -> f3
    auto module = [](int a, int b) { return a + b - 1; };
    const std::array<double, 3> x{sol.metric.x1, sol.metric.x2, sol.metric.x3};
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    std::array<double, 3> y{};
    for (int k = 0; k < 3; ++k)
        y[module(perm[pairs[k].first], perm[pairs[k].second])] = x[k];

    const double s = y[2];
    EinsteinSolution out = sol;
    out.lambda = sol.lambda * s;
    out.metric = complete_metric<double>(q, y[0] / s, y[1] / s, 1.0, out.lambda);
    out.residual = residual(q, out.metric, out.lambda);
    return {q, out};
}

} // namespace cspace

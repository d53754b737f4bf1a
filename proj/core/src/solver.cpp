#include <cspace/isometry.hpp>
#include <cspace/newton.hpp>
#include <cspace/roots.hpp>
#include <cspace/solver.hpp>

#include <algorithm>
#include <cmath>

namespace cspace {

const char* to_string(Method m)
{
    switch (m) {
    case Method::Continuation: return "continuation";
    case Method::Multistart: return "multistart";
    case Method::CubicClosedForm: return "cubic-closed-form";
    case Method::PairClosedForm: return "pair-closed-form";
    }
    return "?";
}

std::pair<double, double> auto_box(const SpaceParams& p)
{
    double lo = 0.05, hi = 10;
    for (const auto& f : flag_einstein_metrics(p)) {
        lo = std::min({lo, f.x1 / 4, f.x2 / 4});
        hi = std::max({hi, f.x1 * 4, f.x2 * 4});
    }
    return {lo, hi};
}

bool wants_extended(const SpaceParams& p, Precision requested)
{
    return requested == Precision::Extended || p.max_block() > 500;
}

namespace {

template <class Real>
EinsteinSolution refine_as(const SpaceParams& p, std::pair<double, double> x, const Real& target, Method method,
                           Precision precision)
{
    const auto nr = newton_refine<Real>(p, Real(1), Real(x.first), Real(x.second), target);
    const Real one(1);
    const Real lambda = t_polys<Real>(p, nr.x1, nr.x2, one).a;
    if (!(lambda > 0))
        throw SolverError("non-positive Einstein constant");
    const auto g = complete_metric<Real>(p, nr.x1, nr.x2, one, lambda);
    const auto e = einstein_residual<Real>(p, g, lambda);
    auto d = [](const Real& v) { return static_cast<double>(v); };
    EinsteinSolution s;
    s.metric = {d(g.x1), d(g.x2), d(g.x3), d(g.v4), d(g.v5), d(g.c)};
    s.lambda = d(lambda);
    s.residual = {d(e.e1), d(e.e2), d(e.e3), d(e.e4), d(e.e5), d(e.e0), d(e.norm)};
    s.method = method;
    s.condition = nr.condition;
    s.precision = precision;
    return s;
}

bool before(const EinsteinSolution& a, const EinsteinSolution& b)
{
    return a.metric.x1 != b.metric.x1 ? a.metric.x1 < b.metric.x1 : a.metric.x2 < b.metric.x2;
}

int priority(Method m)
{
    switch (m) {
    case Method::CubicClosedForm:
    case Method::PairClosedForm: return 2;
    case Method::Continuation: return 1;
    case Method::Multistart: return 0;
    }
    return 0;
}

/// Inserts s unless a solution within dedup_rel exists; a duplicate found by a more
/// direct method takes over the method tag.
void merge(std::vector<EinsteinSolution>& acc, const EinsteinSolution& s, double dedup_rel)
{
    for (auto& q : acc) {
        if (rel_distance(q.metric.x1, q.metric.x2, s.metric.x1, s.metric.x2) < dedup_rel) {
            if (priority(s.method) > priority(q.method))
                q.method = s.method;
            return;
        }
    }
    acc.push_back(s);
}

} // namespace

EinsteinSolution refine(const SpaceParams& p, std::pair<double, double> approx, Precision precision, Method method)
{
    if (!(approx.first > 0) || !(approx.second > 0))
        throw SolverError("left positive orthant");
    if (precision == Precision::Extended)
        return refine_as<Extended>(p, approx, Extended("1e-25"), method, precision);
    return refine_as<double>(p, approx, 1e-12, method, precision);
}

std::vector<EinsteinSolution> multistart(const SpaceParams& p, std::pair<double, double> box, int grid_density,
                                         const SolveOptions& o)
{
    RootSearchOptions so;
    so.eps = box.first;
    so.L = box.second;
    so.grid = grid_density;
    so.dedup_rel = o.dedup_rel;
    so.threads = o.threads;
    const bool ext = wants_extended(p, o.precision);
    std::vector<EinsteinSolution> out;
    for (const auto& r : find_roots(p, 1.0, so)) {
        try {
            auto s = refine(p, {r.x1, r.x2}, ext ? Precision::Extended : Precision::Double, Method::Multistart);
            if (!ext && s.condition > 1e10)
                s = refine(p, {r.x1, r.x2}, Precision::Extended, Method::Multistart);
            if (s.residual.norm <= o.tol)
                merge(out, s, o.dedup_rel);
        } catch (const SolverError&) {
            // a start that converged in double but cannot be polished is not reported
        }
    }
    std::sort(out.begin(), out.end(), before);
    return out;
}

SolveReport solve(const SpaceParams& p, const SolveOptions& o)
{
    SolveReport rep;
    rep.params = p;
    rep.family_complete = !p.degenerate_flag;
    rep.box = o.box.value_or(auto_box(p));
    const bool ext = wants_extended(p, o.precision);
    rep.precision_used = ext ? Precision::Extended : Precision::Double;
    if (p.degenerate_flag)
        rep.diagnostics.push_back("family-incomplete: degenerate case");

    SolveOptions so = o;
    so.precision = rep.precision_used;
    so.box = rep.box;

    std::vector<EinsteinSolution> acc;
    const bool all_equal = p.l == p.m && p.m == p.n;
    const bool pair_equal = p.l == p.m && p.m != p.n;

    if (o.strategy == Strategy::ClosedForm || o.strategy == Strategy::Auto) {
        if (all_equal) {
            for (const auto& s : solve_equal_all(p.n, rep.precision_used))
                merge(acc, s, o.dedup_rel);
        } else if (pair_equal) {
            SolveOptions po = so;
            po.strategy = Strategy::ClosedForm;
            for (const auto& s : solve_equal_pair(p.m, p.n, po))
                merge(acc, s, o.dedup_rel);
        } else if (o.strategy == Strategy::ClosedForm) {
            rep.diagnostics.push_back("no closed form for distinct l, m, n");
        }
    }

    std::vector<EinsteinSolution> from_paths;
    if (o.strategy == Strategy::Continuation || o.strategy == Strategy::Auto) {
        auto cr = continue_from_flag(p, so);
        rep.paths = cr.paths;
        for (const auto& path : cr.paths)
            if (!path.reached_end || path.singular_end)
                rep.diagnostics.push_back("path from (" + std::to_string(path.start.x1) + ", "
                                          + std::to_string(path.start.x2) + "): " + path.message);
        from_paths = cr.solutions;
        for (const auto& s : cr.solutions)
            merge(acc, s, o.dedup_rel);
    }

    if (o.strategy == Strategy::Multistart || o.strategy == Strategy::Auto) {
        const auto ms = multistart(p, rep.box, o.grid, so);
        for (const auto& s : from_paths) {
            const bool seen = std::any_of(ms.begin(), ms.end(), [&](const EinsteinSolution& q) {
                return rel_distance(q.metric.x1, q.metric.x2, s.metric.x1, s.metric.x2) < o.dedup_rel;
            });
            if (!seen)
                rep.diagnostics.push_back("continuation endpoint missed by multistart grid");
        }
        for (const auto& s : ms)
            merge(acc, s, o.dedup_rel);
    }

    std::sort(acc.begin(), acc.end(), before);
    rep.solutions = std::move(acc);
    rep.isometry_classes = isometry_classes(p, rep.solutions);
    return rep;
}

} // namespace cspace

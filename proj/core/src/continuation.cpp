#include <cspace/newton.hpp>
#include <cspace/solver.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cspace {

namespace {

struct LogSystem {
    std::array<double, 2> f;
    double a, b, c, d; // Jacobian in log coordinates
    std::array<double, 2> ft;
    double det() const { return a * d - b * c; }
    std::array<double, 2> solve(std::array<double, 2> r) const
    {
        const double D = det();
        return {(d * r[0] - b * r[1]) / D, (-c * r[0] + a * r[1]) / D};
    }
};

LogSystem eval(const SpaceParams& p, double t, double u1, double u2)
{
    const double x1 = std::exp(u1), x2 = std::exp(u2);
    const auto e = homotopy_poly<double>(p, t, x1, x2);
    return {e.f, e.J[0][0] * x1, e.J[0][1] * x2, e.J[1][0] * x1, e.J[1][1] * x2, e.ft};
}

constexpr double kDtMin = 1e-4, kDtMax = 0.05;

PathReport track(const SpaceParams& p, const FlagMetric& s)
{
    PathReport r;
    r.start = s;
    double t = 0, u1 = std::log(s.x1), u2 = std::log(s.x2), dt = 0.01;
    double det_sign = eval(p, 0, u1, u2).det() > 0 ? 1 : -1;
    while (t < 1) {
        const double h = std::min(dt, 1 - t);
        // tangent predictor: J du/dt = -f_t
        const auto e0 = eval(p, t, u1, u2);
        const auto tan = e0.solve(e0.ft);
        const double p1 = u1 - h * tan[0], p2 = u2 - h * tan[1];
        // Newton corrector at t + h
        double v1 = p1, v2 = p2;
        bool ok = false;
        int iters = 0;
        for (; iters < 10; ++iters) {
            const auto e = eval(p, t + h, v1, v2);
            if (!std::isfinite(e.det()) || e.det() == 0)
                break;
            const auto st = e.solve(e.f);
            v1 -= st[0];
            v2 -= st[1];
            if (!std::isfinite(v1) || !std::isfinite(v2))
                break;
            if (std::max(std::abs(st[0]), std::abs(st[1])) < 1e-12) {
                ok = true;
                break;
            }
        }
        if (ok) {
            const double moved = std::max(std::abs(v1 - p1), std::abs(v2 - p2));
            const auto e1 = eval(p, t + h, v1, v2);
            const double sgn = e1.det() > 0 ? 1 : -1;
            ok = moved < 0.1 && sgn == det_sign
                && relative_reduced_residual<double>(p, t + h, std::exp(v1), std::exp(v2)) < 1e-10;
        }
        if (ok) {
            t = (h == 1 - t) ? 1.0 : t + h;
            u1 = v1;
            u2 = v2;
            ++r.steps;
            if (iters <= 3)
                dt = std::min(2 * dt, kDtMax);
        } else {
            dt /= 2;
            if (dt < kDtMin) {
                std::ostringstream msg;
                msg << "path lost at t=" << t << " near (" << std::exp(u1) << ", " << std::exp(u2) << ")";
                r.message = msg.str();
                break;
            }
        }
    }
    r.t_end = t;
    r.x1 = std::exp(u1);
    r.x2 = std::exp(u2);
    r.reached_end = t >= 1;
    if (r.reached_end) {
        r.singular_end = jacobian_sign(p, 1.0, r.x1, r.x2).singular;
        r.message = r.singular_end ? "singular endpoint" : "reached t=1";
    }
    return r;
}

} // namespace

ContinuationResult continue_from_flag(const SpaceParams& p, const SolveOptions& o)
{
    ContinuationResult out;
    const Precision prec = wants_extended(p, o.precision) ? Precision::Extended : Precision::Double;
    for (const auto& s : flag_einstein_metrics(p)) {
        auto path = track(p, s);
        if (path.reached_end && !path.singular_end) {
            try {
                auto sol = refine(p, {path.x1, path.x2}, prec, Method::Continuation);
                const bool dup = std::any_of(out.solutions.begin(), out.solutions.end(), [&](const EinsteinSolution& q) {
                    return rel_distance(q.metric.x1, q.metric.x2, sol.metric.x1, sol.metric.x2) < o.dedup_rel;
                });
                if (sol.residual.norm > o.tol)
                    path.message += "; endpoint residual above tolerance";
                else if (!dup)
                    out.solutions.push_back(sol);
            } catch (const SolverError& e) {
                path.message += std::string("; refinement failed: ") + e.what();
            }
        }
        out.paths.push_back(path);
    }
    return out;
}

} // namespace cspace

#pragma once

#include <cspace/params.hpp>
#include <cspace/structure.hpp>

#include <algorithm>
#include <array>
#include <cassert>

namespace cspace {

/// Ricci components in a g-orthonormal adapted basis. r0 is the mixed fiber term Ric(U4, U5).
template <class Real>
struct BasicRicci {
    Real r1{}, r2{}, r3{}, r4{}, r5{}, r0{};
};
using RicciComponents = BasicRicci<double>;

/// e_i = r_i - lambda (i = 1..5), e0 = r0, norm = max-abs over all six.
template <class Real>
struct BasicResidual {
    Real e1{}, e2{}, e3{}, e4{}, e5{}, e0{};
    Real norm{};
};
using EinsteinResidual = BasicResidual<double>;

template <class Real>
struct Triple3 {
    Real a{}, b{}, c{};
};

/// Fiber part (r4, r5, r0); c is arbitrary.
template <class Real>
Triple3<Real> ricci_abelian(const SpaceParams& p, const BasicMetric<Real>& g)
{
    using std::sqrt;
    const RealParams<Real> r(p);
    const Real lm = r.l + r.m;
    const auto [k522, k533] = adapted_522_533<Real>(p, g.c);
    const Real x1s = g.x1 * g.x1, x2s = g.x2 * g.x2, x3s = g.x3 * g.x3;
    const Real r4 = g.v4 / 4 * ((r.l / lm) / x2s + (r.m / lm) / x3s);
    const Real r5 = g.v5 / 4 * ((lm / r.N) / x1s + k522 / x2s + k533 / x3s);
    const Real q = sqrt(r.l * r.m * r.n / r.N);
    const Real r0 = sqrt(g.v4 * g.v5) / 4
        * ((r.l * g.c + q) / (x2s * lm) + (r.m * g.c - q) / (x3s * lm));
    return {r4, r5, r0};
}

/// Diagonal part (r1, r2, r3) on f1, f2, f3; c is arbitrary.
template <class Real>
Triple3<Real> ricci_diagonal(const SpaceParams& p, const BasicMetric<Real>& g)
{
    using std::sqrt;
    const RealParams<Real> r(p);
    const Real lm = r.l + r.m;
    const Real x1 = g.x1, x2 = g.x2, x3 = g.x3;
    const Real x1s = x1 * x1, x2s = x2 * x2, x3s = x3 * x3, xyz = x1 * x2 * x3;
    const Real s = sqrt(r.l * r.m * r.n) * sqrt(r.N);
    const Real c = g.c;
    const Real r1 = 1 / (2 * x1) + r.n / (4 * r.N) * (x1s - x2s - x3s) / xyz
        - lm * g.v5 / (4 * r.l * r.m * r.N * x1s);
    const Real r2 = 1 / (2 * x2) + r.m / (4 * r.N) * (x2s - x1s - x3s) / xyz
        - (r.l * r.N * g.v4 + (c * c * r.l * r.N + r.m * r.n + 2 * c * s) * g.v5)
            / (4 * r.l * r.n * r.N * lm * x2s);
    const Real r3 = 1 / (2 * x3) + r.l / (4 * r.N) * (x3s - x1s - x2s) / xyz
        - (r.m * r.N * g.v4 + (c * c * r.m * r.N + r.l * r.n - 2 * c * s) * g.v5)
            / (4 * r.m * r.n * r.N * lm * x3s);
    return {r1, r2, r3};
}

template <class Real>
BasicRicci<Real> ricci(const SpaceParams& p, const BasicMetric<Real>& g)
{
    const auto d = ricci_diagonal(p, g);
    const auto a = ricci_abelian(p, g);
    return {d.a, d.b, d.c, a.a, a.b, a.c};
}

template <class Real>
BasicResidual<Real> einstein_residual(const SpaceParams& p, const BasicMetric<Real>& g, const Real& lambda)
{
    using std::abs;
    const auto r = ricci(p, g);
    BasicResidual<Real> e{r.r1 - lambda, r.r2 - lambda, r.r3 - lambda, r.r4 - lambda, r.r5 - lambda, r.r0, Real(0)};
    Real nrm = abs(e.e1);
    for (const Real* v : {&e.e2, &e.e3, &e.e4, &e.e5, &e.e0})
        if (abs(*v) > nrm) nrm = abs(*v);
    e.norm = nrm;
    return e;
}

/// Ricci of the base flag manifold with metric x1 B|f1 + x2 B|f2 + x3 B|f3.
template <class Real>
Triple3<Real> flag_ricci(const SpaceParams& p, const Real& x1, const Real& x2, const Real& x3)
{
    const RealParams<Real> r(p);
    const Real x1s = x1 * x1, x2s = x2 * x2, x3s = x3 * x3, xyz = x1 * x2 * x3;
    return {1 / (2 * x1) + r.n / (4 * r.N) * (x1s - x2s - x3s) / xyz,
            1 / (2 * x2) + r.m / (4 * r.N) * (x2s - x1s - x3s) / xyz,
            1 / (2 * x3) + r.l / (4 * r.N) * (x3s - x1s - x2s) / xyz};
}

/// The q_i with t_i = Ric_i^flag / (1 + q_i).
template <class Real>
Triple3<Real> q_terms(const SpaceParams& p, const Real& x1, const Real& x2, const Real& x3)
{
    const RealParams<Real> r(p);
    const Real x1s = x1 * x1, x2s = x2 * x2, x3s = x3 * x3;
    const Real S = r.n * x1s + r.m * x2s + r.l * x3s;
    return {(r.m * x2s + r.l * x3s) / (r.l * r.m * S),
            (r.n * x1s + r.l * x3s) / (r.l * r.n * S),
            (r.n * x1s + r.m * x2s) / (r.m * r.n * S)};
}

/// Einstein constant candidates: at an Einstein metric all three agree with lambda.
template <class Real>
Triple3<Real> t_polys(const SpaceParams& p, const Real& x1, const Real& x2, const Real& x3)
{
    const auto f = flag_ricci(p, x1, x2, x3);
    const auto q = q_terms(p, x1, x2, x3);
    assert(q.a > 0 && q.b > 0 && q.c > 0);
    return {f.a / (1 + q.a), f.b / (1 + q.b), f.c / (1 + q.c)};
}

template <class Real>
Real v4_of(const SpaceParams& p, const Real& x1, const Real& x2, const Real& x3, const Real& lambda)
{
    (void)x1;
    const RealParams<Real> r(p);
    const Real x2s = x2 * x2, x3s = x3 * x3;
    return 4 * lambda * (r.l + r.m) * x2s * x3s / (r.l * x3s + r.m * x2s);
}

template <class Real>
Real v5_of(const SpaceParams& p, const Real& x1, const Real& x2, const Real& x3, const Real& lambda)
{
    const RealParams<Real> r(p);
    const Real x1s = x1 * x1, x2s = x2 * x2, x3s = x3 * x3;
    return 4 * lambda * r.N * x1s * (r.l * x3s + r.m * x2s)
        / ((r.l + r.m) * (r.n * x1s + r.m * x2s + r.l * x3s));
}

/// Metric determined by (x1, x2, x3) and lambda through v4_of, v5_of, c_from_x.
template <class Real>
BasicMetric<Real> complete_metric(const SpaceParams& p, const Real& x1, const Real& x2, const Real& x3,
                                  const Real& lambda)
{
    return {x1, x2, x3, v4_of(p, x1, x2, x3, lambda), v5_of(p, x1, x2, x3, lambda), c_from_x(p, x2, x3)};
}

// Non-template conveniences for double callers.
RicciComponents ricci_components(const SpaceParams& p, const InvariantMetric& g);
EinsteinResidual residual(const SpaceParams& p, const InvariantMetric& g, double lambda);

} // namespace cspace

#pragma once

#include <cspace/params.hpp>
#include <cspace/ricci.hpp>

#include <array>

namespace cspace {

/// Value and derivatives of the denominator-free homotopy system at x3 = 1:
///   P12 = m A1 D2 - n A2 D1,  P23 = l A2 D3 - m A3 D2,
/// where Ric_i^flag = A_i / (4 N x1 x2 x3) and 1 + t q_i = D_i(t) / (pair product * S).
/// For positive x its zero set is exactly {T1 = T2 = T3}.
template <class Real>
struct PolyEval {
    std::array<Real, 2> f{};
    std::array<std::array<Real, 2>, 2> J{}; // d f_i / d x_j
    std::array<Real, 2> ft{};               // d f / d t
    std::array<Real, 2> scale{};            // size of the two products in each row
};

template <class Real>
PolyEval<Real> homotopy_poly(const SpaceParams& p, const Real& t, const Real& x1, const Real& x2)
{
    const RealParams<Real> r(p);
    const Real &l = r.l, &m = r.m, &n = r.n, &N = r.N;
    const Real x3 = 1;
    const Real x1s = x1 * x1, x2s = x2 * x2, x3s = x3 * x3;

    const Real S = n * x1s + m * x2s + l * x3s;
    const Real S1 = 2 * n * x1, S2 = 2 * m * x2;

    const Real A1 = 2 * N * x2 * x3 + n * (x1s - x2s - x3s);
    const Real A2 = 2 * N * x1 * x3 + m * (x2s - x1s - x3s);
    const Real A3 = 2 * N * x1 * x2 + l * (x3s - x1s - x2s);
    const Real A1_1 = 2 * n * x1, A1_2 = 2 * N * x3 - 2 * n * x2;
    const Real A2_1 = 2 * N * x3 - 2 * m * x1, A2_2 = 2 * m * x2;
    const Real A3_1 = 2 * N * x2 - 2 * l * x1, A3_2 = 2 * N * x1 - 2 * l * x2;

    const Real E1 = m * x2s + l * x3s, E2 = n * x1s + l * x3s, E3 = n * x1s + m * x2s;
    const Real D1 = l * m * S + t * E1, D2 = l * n * S + t * E2, D3 = m * n * S + t * E3;
    const Real D1_1 = l * m * S1, D1_2 = l * m * S2 + t * 2 * m * x2;
    const Real D2_1 = l * n * S1 + t * 2 * n * x1, D2_2 = l * n * S2;
    const Real D3_1 = m * n * S1 + t * 2 * n * x1, D3_2 = m * n * S2 + t * 2 * m * x2;

    PolyEval<Real> e;
    e.f[0] = m * A1 * D2 - n * A2 * D1;
    e.f[1] = l * A2 * D3 - m * A3 * D2;
    using std::abs;
    const Real p1 = abs(m * A1 * D2), p2 = abs(n * A2 * D1), p3 = abs(l * A2 * D3), p4 = abs(m * A3 * D2);
    e.scale = {p1 > p2 ? p1 : p2, p3 > p4 ? p3 : p4};
    e.J[0][0] = m * (A1_1 * D2 + A1 * D2_1) - n * (A2_1 * D1 + A2 * D1_1);
    e.J[0][1] = m * (A1_2 * D2 + A1 * D2_2) - n * (A2_2 * D1 + A2 * D1_2);
    e.J[1][0] = l * (A2_1 * D3 + A2 * D3_1) - m * (A3_1 * D2 + A3 * D2_1);
    e.J[1][1] = l * (A2_2 * D3 + A2 * D3_2) - m * (A3_2 * D2 + A3 * D2_2);
    e.ft[0] = m * A1 * E2 - n * A2 * E1;
    e.ft[1] = l * A2 * E3 - m * A3 * E2;
    return e;
}

/// Homotopy T_i(t, x) = Ric_i^flag / (1 + t q_i).
template <class Real>
Triple3<Real> homotopy_T_eval(const SpaceParams& p, const Real& t, const Real& x1, const Real& x2, const Real& x3)
{
    const auto f = flag_ricci(p, x1, x2, x3);
    const auto q = q_terms(p, x1, x2, x3);
    return {f.a / (1 + t * q.a), f.b / (1 + t * q.b), f.c / (1 + t * q.c)};
}

/// Scale-free size of the reduced residual: max(|T1-T2|, |T2-T3|) / max|T_i| at x3 = 1.
template <class Real>
Real relative_reduced_residual(const SpaceParams& p, const Real& t, const Real& x1, const Real& x2)
{
    using std::abs;
    const auto T = homotopy_T_eval<Real>(p, t, x1, x2, Real(1));
    Real scale = abs(T.a);
    if (abs(T.b) > scale) scale = abs(T.b);
    if (abs(T.c) > scale) scale = abs(T.c);
    Real d = abs(T.a - T.b);
    if (abs(T.b - T.c) > d) d = abs(T.b - T.c);
    return scale > 0 ? Real(d / scale) : d;
}

/// (T1 - T2, T2 - T3) at t = 1 and x3 = 1.
std::array<double, 2> reduced_system(const SpaceParams& p, double x1, double x2);

} // namespace cspace

#pragma once

#include <cspace/reduced.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace cspace {

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NewtonOptions {
    int max_iter = 100;
    double step_tol = 1e-14;   // relative step size that counts as converged
    double accept_tol = 1e-10; // relative reduced residual required on exit
    double max_log_step = 1.0; // damping in log coordinates
};

template <class Real>
struct BasicNewtonResult {
    bool converged = false;
    Real x1{}, x2{};
    int iterations = 0;
    Real rel_residual{};
    double condition = 0;
};
using NewtonResult = BasicNewtonResult<double>;

/// 2-norm condition number of a 2x2 matrix after scaling each row to unit max-abs.
template <class Real>
double row_scaled_condition(std::array<std::array<Real, 2>, 2> J)
{
    using std::abs;
    using std::sqrt;
    for (auto& row : J) {
        Real s = abs(row[0]) > abs(row[1]) ? abs(row[0]) : abs(row[1]);
        if (s > 0) {
            row[0] /= s;
            row[1] /= s;
        }
    }
    const double a = static_cast<double>(J[0][0]), b = static_cast<double>(J[0][1]);
    const double c = static_cast<double>(J[1][0]), d = static_cast<double>(J[1][1]);
    const double fro2 = a * a + b * b + c * c + d * d;
    const double det = std::abs(a * d - b * c);
    if (det == 0)
        return INFINITY;
    const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4 * det * det));
    const double smax = std::sqrt((fro2 + disc) / 2), smin = det / smax;
    return smax / smin;
}

/// Newton in u = log x on the homotopy system at fixed t. Positivity is automatic.
template <class Real>
BasicNewtonResult<Real> newton_log(const SpaceParams& p, const Real& t, Real x1, Real x2,
                                   const NewtonOptions& o = {})
{
    using std::abs;
    using std::exp;
    BasicNewtonResult<Real> res;
    for (int it = 1; it <= o.max_iter; ++it) {
        res.iterations = it;
        const auto e = homotopy_poly<Real>(p, t, x1, x2);
        const Real a = e.J[0][0] * x1, b = e.J[0][1] * x2;
        const Real c = e.J[1][0] * x1, d = e.J[1][1] * x2;
        const Real det = a * d - b * c;
        if (det == 0 || !(abs(det) < Real(INFINITY)))
            break;
        Real du1 = -(d * e.f[0] - b * e.f[1]) / det;
        Real du2 = -(-c * e.f[0] + a * e.f[1]) / det;
        const Real big = abs(du1) > abs(du2) ? abs(du1) : abs(du2);
        if (!(big < Real(INFINITY)))
            break;
        if (big > o.max_log_step) {
            du1 *= o.max_log_step / big;
            du2 *= o.max_log_step / big;
        }
        x1 *= exp(du1);
        x2 *= exp(du2);
        if (!(x1 > Real(1e-300)) || !(x2 > Real(1e-300)) || x1 > Real(1e300) || x2 > Real(1e300))
            break;
        if (big < o.step_tol)
            break;
    }
    res.x1 = x1;
    res.x2 = x2;
    if (x1 > 0 && x2 > 0 && x1 < Real(1e300) && x2 < Real(1e300)) {
        res.rel_residual = relative_reduced_residual<Real>(p, t, x1, x2);
        const auto e = homotopy_poly<Real>(p, t, x1, x2);
        std::array<std::array<Real, 2>, 2> Ju{{{e.J[0][0] * x1, e.J[0][1] * x2}, {e.J[1][0] * x1, e.J[1][1] * x2}}};
        res.condition = row_scaled_condition<Real>(Ju);
        res.converged = res.rel_residual < Real(o.accept_tol);
    }
    return res;
}

/// Plain Newton in x coordinates; throws SolverError on failure. After the relative reduced
/// residual first drops below target one extra step is taken to polish the last digits.
template <class Real>
BasicNewtonResult<Real> newton_refine(const SpaceParams& p, const Real& t, Real x1, Real x2, const Real& target,
                                      int max_iter = 100)
{
    BasicNewtonResult<Real> res;
    int below = 0;
    for (int it = 0; it < max_iter; ++it) {
        res.iterations = it;
        const bool small = relative_reduced_residual<Real>(p, t, x1, x2) < target;
        if (small && ++below > 1)
            break;
        const auto e = homotopy_poly<Real>(p, t, x1, x2);
        const Real det = e.J[0][0] * e.J[1][1] - e.J[0][1] * e.J[1][0];
        if (det == 0) {
            if (small) // exact singular root, e.g. the bi-invariant metric of SU(3)
                break;
            throw SolverError("singular Jacobian during refinement");
        }
        const Real n1 = x1 - (e.J[1][1] * e.f[0] - e.J[0][1] * e.f[1]) / det;
        const Real n2 = x2 - (-e.J[1][0] * e.f[0] + e.J[0][0] * e.f[1]) / det;
        if (!(n1 > 0) || !(n2 > 0))
            throw SolverError("left positive orthant");
        x1 = n1;
        x2 = n2;
    }
    res.x1 = x1;
    res.x2 = x2;
    res.rel_residual = relative_reduced_residual<Real>(p, t, x1, x2);
    if (!(res.rel_residual < target))
        throw SolverError("no convergence in " + std::to_string(max_iter) + " iterations");
    const auto e = homotopy_poly<Real>(p, t, x1, x2);
    std::array<std::array<Real, 2>, 2> Ju{{{e.J[0][0] * x1, e.J[0][1] * x2}, {e.J[1][0] * x1, e.J[1][1] * x2}}};
    res.condition = row_scaled_condition<Real>(Ju);
    res.converged = true;
    return res;
}

} // namespace cspace

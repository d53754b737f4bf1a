#include <cspace/flag.hpp>
#include <cspace/reduced.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cspace {

std::array<FlagMetric, 4> flag_einstein_metrics(const SpaceParams& p)
{
    const double l = double(p.l), m = double(p.m), n = double(p.n), N = double(p.N);
    const double nk = (m * l * l + n * l * l + m * m * l + n * n * l + 4 * m * n * l + m * n * n + m * m * n)
        / (2 * (l + m) * (l + n) * N);
    return {{
        {(l + m) / (m + n), (l + n) / (m + n), 1.0, nk},
        {(l + m) / (m + n), (l + 2 * m + n) / (m + n), 1.0, (m + n) / (2 * N)},
        {(l + m + 2 * n) / (m + n), (l + n) / (m + n), 1.0, (m + n) / (2 * N)},
        {(l + m) / (2 * l + m + n), (l + n) / (2 * l + m + n), 1.0, (2 * l + m + n) / (2 * N)},
    }};
}

std::array<double, 3> homotopy_T(const SpaceParams& p, double t, double x1, double x2, double x3)
{
    const auto T = homotopy_T_eval<double>(p, t, x1, x2, x3);
    return {T.a, T.b, T.c};
}

const std::array<std::array<double, 3>, 3>& rotation_P()
{
    static const std::array<std::array<double, 3>, 3> P = [] {
        const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0), s3 = std::sqrt(3.0);
        return std::array<std::array<double, 3>, 3>{{
            {1 / s2, -1 / s2, 0.0},
            {1 / s6, 1 / s6, -2 / s6},
            {1 / s3, 1 / s3, 1 / s3},
        }};
    }();
    return P;
}

std::array<double, 2> f_t_map(const SpaceParams& p, double t, double x1, double x2)
{
    const auto T = homotopy_T(p, t, x1, x2, 1.0);
    const double nrm = std::hypot(T[0], T[1], T[2]);
    if (!(nrm > 0))
        throw std::logic_error("f_t: T vanishes");
    const auto& P = rotation_P();
    std::array<double, 3> y{};
    for (int i = 0; i < 3; ++i)
        y[i] = (P[i][0] * T[0] + P[i][1] * T[1] + P[i][2] * T[2]) / nrm;
    if (1 + y[2] < 1e-14)
        throw std::logic_error("f_t: image at the south pole");
    return {y[0] / (1 + y[2]), y[1] / (1 + y[2])};
}

JacobianInfo jacobian_sign(const SpaceParams& p, double t, double x1, double x2, double singular_tol)
{
    const double h1 = 1e-6 * x1, h2 = 1e-6 * x2;
    const auto a = f_t_map(p, t, x1 + h1, x2), b = f_t_map(p, t, x1 - h1, x2);
    const auto c = f_t_map(p, t, x1, x2 + h2), d = f_t_map(p, t, x1, x2 - h2);
    const double j11 = (a[0] - b[0]) / (2 * h1), j21 = (a[1] - b[1]) / (2 * h1);
    const double j12 = (c[0] - d[0]) / (2 * h2), j22 = (c[1] - d[1]) / (2 * h2);
    JacobianInfo info;
    info.jacobian = j11 * j22 - j12 * j21;
    const double scale = std::hypot(j11, j21) * std::hypot(j12, j22);
    info.normalized = scale > 0 ? std::abs(info.jacobian) / scale : 0.0;
    const auto e = homotopy_poly<double>(p, t, x1, x2);
    const double dlog = (e.J[0][0] * e.J[1][1] - e.J[0][1] * e.J[1][0]) * x1 * x2;
    const double rows = e.scale[0] * e.scale[1];
    info.magnitude = rows > 0 ? std::abs(dlog) / rows : 0.0;
    info.singular = info.normalized < singular_tol || info.magnitude < singular_tol;
    info.sign = info.singular ? 0 : (info.jacobian > 0 ? 1 : -1);
    return info;
}

std::array<double, 4> flag_jacobians_closed_form(const SpaceParams& p)
{
    const double l = double(p.l), m = double(p.m), n = double(p.n);
    const double k = 6 * std::sqrt(3.0);
    const double q = l * l * (m + n) + l * (m * m + 4 * m * n + n * n) + m * n * (m + n);
    return {
        l * m * n * std::pow(m + n, 3) / (k * q * q),
        -m * (m + n) * (m + n) / (k * (l + m) * std::pow(l + 2 * m + n, 2)),
        -n * (m + n) * (m + n) / (k * (l + n) * std::pow(l + m + 2 * n, 2)),
        -l * (2 * l + m + n) / (k * (l + m) * (l + n)),
    };
}

namespace {

bool near_boundary(double x, double eps, double L)
{
    return x < eps * 1.05 || x > L * 0.95;
}

double boundary_min(const SpaceParams& p, double t, double eps, double L, int samples)
{
    double best = INFINITY;
    const double a = std::log(eps), b = std::log(L);
    for (int i = 0; i <= samples; ++i) {
        const double s = std::exp(a + (b - a) * i / samples);
        for (auto [x1, x2] : {std::pair{s, eps}, std::pair{s, L}, std::pair{eps, s}, std::pair{L, s}}) {
            const auto f = f_t_map(p, t, x1, x2);
            best = std::min(best, std::hypot(f[0], f[1]));
        }
    }
    return best;
}

} // namespace

DegreeCertificate mapping_degree(const SpaceParams& p, double t, const DegreeOptions& o)
{
    if (t < 0 || t > 1)
        throw std::invalid_argument("homotopy parameter must lie in [0, 1]");
    DegreeCertificate cert;
    cert.t = t;
    double eps = o.eps, L = o.L;
    if (o.auto_expand) {
        // start from a box that holds the flag Einstein points with a factor 4 to spare
        for (const auto& f : flag_einstein_metrics(p)) {
            eps = std::min({eps, f.x1 / 4, f.x2 / 4});
            L = std::max({L, f.x1 * 4, f.x2 * 4});
        }
    }
    std::vector<NewtonResult> inside;
    for (;;) {
        RootSearchOptions so = o.search;
        so.eps = eps;
        so.L = L;
        inside.clear();
        bool crowded = false;
        for (const auto& r : find_roots(p, t, so)) {
            if (r.x1 > eps && r.x1 < L && r.x2 > eps && r.x2 < L)
                inside.push_back(r);
            if (near_boundary(r.x1, eps, L) || near_boundary(r.x2, eps, L))
                crowded = true;
        }
        if (!crowded || !o.auto_expand || cert.expansions >= o.max_expansions)
            break;
        eps /= 2;
        L *= 2;
        ++cert.expansions;
    }
    cert.eps = eps;
    cert.L = L;
    cert.verified = true;

    cert.boundary_min = boundary_min(p, t, eps, L, o.boundary_samples);
    if (cert.boundary_min < o.boundary_threshold) {
        cert.verified = false;
        cert.diagnostics.push_back("boundary root suspected");
    }

    for (const auto& r : inside) {
        DegreeRoot dr;
        dr.x1 = r.x1;
        dr.x2 = r.x2;
        const auto j = jacobian_sign(p, t, r.x1, r.x2);
        dr.jacobian = j.jacobian;
        dr.sign = j.sign;
        dr.singular = j.singular;
        // basin check: 8 starts on a small circle in log coordinates must come back
        dr.basin_confirmed = true;
        for (int k = 0; k < 8; ++k) {
            const double ang = k * std::numbers::pi / 4;
            const auto back = newton_log<double>(p, t, r.x1 * std::exp(0.02 * std::cos(ang)),
                                                 r.x2 * std::exp(0.02 * std::sin(ang)), o.search.newton);
            if (!back.converged || rel_distance(back.x1, back.x2, r.x1, r.x2) > 1e-5)
                dr.basin_confirmed = false;
        }
        std::ostringstream where;
        where << "(" << r.x1 << ", " << r.x2 << ")";
        if (dr.singular) {
            cert.verified = false;
            cert.diagnostics.push_back("singular root at " + where.str());
        } else {
            cert.degree += dr.sign;
        }
        if (!dr.basin_confirmed) {
            cert.verified = false;
            cert.diagnostics.push_back("basin not confirmed at " + where.str());
        }
        cert.roots.push_back(dr);
    }
    return cert;
}

} // namespace cspace

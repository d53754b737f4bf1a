#include <cspace/solver.hpp>

#include <Eigen/Eigenvalues>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace cspace {

double pair_H1(long long mi, long long ni, double x)
{
    const double m = double(mi), n = double(ni);
    return (((-n * n * (m * m + m * n + 1) * x + 2 * m * n * n * (2 * m + n)) * x
             - m * n * (2 * m * m + 6 * m * n + 7)) * x
            + 4 * (m * m + 1) * n * (2 * m + n)) * x
        - 4 * m * m * (2 * m * n + 1);
}

double cubic_h1(long long ni, double x)
{
    const double n = double(ni);
    return (((2 * n * n + 1) * x - (2 * n - 1) * (2 * n + 1)) * x + 4 * (n * n + 2)) * x - 4 * (2 * n * n + 1);
}

double cubic_h2(long long ni, double x)
{
    const double n = double(ni);
    return ((4 * (2 * n * n + 1) * x - 4 * (n * n + 2)) * x + (2 * n - 1) * (2 * n + 1)) * x - (2 * n * n + 1);
}

double cubic_alpha(long long n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    if (n == 1)
        return 1.0; // h1 = 3 (x - 1)(x^2 + 4)
    // h1(1) = -6(n^2 - 1) < 0 and h1(2) = 24 > 0 bracket the root
    boost::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve([n](double x) { return cubic_h1(n, x); }, 1.0, 2.0,
                                                     boost::math::tools::eps_tolerance<double>(), iters);
    double a = (r.first + r.second) / 2;
    // final Newton polish to the last ulp
    for (int k = 0; k < 3; ++k) {
        const double nn = double(n);
        const double d = (3 * (2 * nn * nn + 1) * a - 2 * (2 * nn - 1) * (2 * nn + 1)) * a + 4 * (nn * nn + 2);
        a -= cubic_h1(n, a) / d;
    }
    return a;
}

namespace {

/// Real positive roots of a polynomial given by ascending coefficients.
std::vector<double> positive_real_roots(const std::vector<double>& coef, const std::function<double(double)>& f)
{
    const int deg = int(coef.size()) - 1;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i)
        C(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i)
        C(i, deg - 1) = -coef[i] / coef[deg];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    std::vector<double> out;
    for (const auto& z : es.eigenvalues()) {
        if (z.real() <= 0 || std::abs(z.imag()) > 1e-7 * std::abs(z))
            continue;
        // secant polish; the companion eigenvalues are only accurate to ~1e-12
        double a = z.real(), b = a * (1 + 1e-7);
        double fa = f(a), fb = f(b);
        for (int k = 0; k < 50 && fb != fa && std::abs(b - a) > 1e-16 * std::abs(b); ++k) {
            const double c = b - fb * (b - a) / (fb - fa);
            a = b;
            fa = fb;
            b = c;
            fb = f(b);
        }
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<EinsteinSolution> solve_equal_all(long long n, Precision precision)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    const SpaceParams p = make_params(n, n, n);
    std::vector<std::pair<double, double>> xs{{1.0, 1.0}};
    if (n > 1) {
        // the Groebner factor (n - 1)(x1 - 1) leaves only the bi-invariant metric when n = 1
        const double a = cubic_alpha(n);
        xs = {{1 / a, 1 / a}, {1.0, 1.0}, {1.0, a}, {a, 1.0}};
    }
    std::vector<EinsteinSolution> out;
    for (const auto& x : xs)
        out.push_back(refine(p, x, precision, Method::CubicClosedForm));
    return out;
}

std::vector<double> pair_H1_roots(long long m, long long n)
{
    const double md = double(m), nd = double(n);
    const std::vector<double> coef{
        -4 * md * md * (2 * md * nd + 1),
        4 * (md * md + 1) * nd * (2 * md + nd),
        -md * nd * (2 * md * md + 6 * md * nd + 7),
        2 * md * nd * nd * (2 * md + nd),
        -nd * nd * (md * md + md * nd + 1),
    };
    return positive_real_roots(coef, [m, n](double x) { return pair_H1(m, n, x); });
}

std::vector<EinsteinSolution> solve_equal_pair(long long m, long long n, const SolveOptions& o)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("m, n must be positive");
    if (m == n)
        return solve_equal_all(n, o.precision);
    const SpaceParams p = make_params(m, m, n);
    const Precision prec = wants_extended(p, o.precision) ? Precision::Extended : Precision::Double;
    std::vector<EinsteinSolution> out;
    for (double x1 : pair_H1_roots(m, n)) {
        try {
            auto s = refine(p, {x1, 1.0}, prec, Method::PairClosedForm);
            if (s.residual.norm <= o.tol)
                out.push_back(s);
        } catch (const SolverError&) {
            // a root of H1 with t-values of the wrong sign is not a metric
        }
    }
    if (o.strategy != Strategy::ClosedForm) {
        for (auto& s : multistart(p, o.box.value_or(auto_box(p)), o.grid, o)) {
            const bool dup = std::any_of(out.begin(), out.end(), [&](const EinsteinSolution& q) {
                return std::abs(q.metric.x1 - s.metric.x1) <= o.dedup_rel * q.metric.x1
                    && std::abs(q.metric.x2 - s.metric.x2) <= o.dedup_rel * q.metric.x2;
            });
            if (!dup)
                out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const EinsteinSolution& a, const EinsteinSolution& b) {
        return a.metric.x1 != b.metric.x1 ? a.metric.x1 < b.metric.x1 : a.metric.x2 < b.metric.x2;
    });
    return out;
}

} // namespace cspace

#include <cspace/roots.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

namespace cspace {

int grid_points(const RootSearchOptions& o)
{
    if (o.grid > 0)
        return o.grid;
    const double decades = std::log10(o.L / o.eps);
    return std::max(24, static_cast<int>(std::ceil(8 * decades)));
}

double rel_distance(double a1, double a2, double b1, double b2)
{
    return std::max(std::abs(a1 - b1) / std::max(std::abs(a1), std::abs(b1)),
                    std::abs(a2 - b2) / std::max(std::abs(a2), std::abs(b2)));
}

std::vector<NewtonResult> find_roots(const SpaceParams& p, double t, const RootSearchOptions& o)
{
    if (!(o.eps > 0) || !(o.L > o.eps))
        throw std::invalid_argument("root search box needs 0 < eps < L");
    const int k = grid_points(o);
    const double a = std::log(o.eps), b = std::log(o.L);
    std::vector<double> axis(k);
    for (int i = 0; i < k; ++i)
        axis[i] = std::exp(a + (b - a) * (i + 0.5) / k);

    const std::size_t total = std::size_t(k) * k;
    std::vector<NewtonResult> out(total);
    unsigned nthreads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(total));
    auto work = [&](unsigned id) {
        for (std::size_t s = id; s < total; s += nthreads)
            out[s] = newton_log<double>(p, t, axis[s / k], axis[s % k], o.newton);
    };
    if (nthreads <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < nthreads; ++id)
            pool.emplace_back(work, id);
        for (auto& th : pool)
            th.join();
    }

    std::vector<NewtonResult> roots;
    for (const auto& r : out) {
        if (!r.converged)
            continue;
        const auto T = homotopy_T_eval<double>(p, t, r.x1, r.x2, 1.0);
        if (!(T.a > 0))
            continue;
        auto dup = std::find_if(roots.begin(), roots.end(), [&](const NewtonResult& q) {
            return rel_distance(q.x1, q.x2, r.x1, r.x2) < o.dedup_rel;
        });
        if (dup == roots.end())
            roots.push_back(r);
        else if (r.rel_residual < dup->rel_residual)
            *dup = r;
    }
    std::sort(roots.begin(), roots.end(), [](const NewtonResult& u, const NewtonResult& v) {
        return u.x1 != v.x1 ? u.x1 < v.x1 : u.x2 < v.x2;
    });
    return roots;
}

} // namespace cspace

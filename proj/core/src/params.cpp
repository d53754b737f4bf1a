#include <cspace/params.hpp>
#include <cspace/real.hpp>

#include <algorithm>
#include <stdexcept>

namespace cspace {

const char* to_string(Precision p)
{
    return p == Precision::Extended ? "extended" : "double";
}

long long SpaceParams::max_block() const
{
    return std::max({l, m, n});
}

std::string SpaceParams::label() const
{
    return "M_{" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + "}";
}

SpaceParams make_params(long long l, long long m, long long n)
{
    if (l < 1 || m < 1 || n < 1)
        throw std::invalid_argument("l, m, n must be positive integers");
    SpaceParams p;
    p.l = l;
    p.m = m;
    p.n = n;
    p.N = l + m + n;
    p.d1 = 2 * l * m;
    p.d2 = 2 * l * n;
    p.d3 = 2 * m * n;
    p.degenerate_flag = (l * m == 1) || (l * n == 1) || (m * n == 1);
    return p;
}

std::array<double, 3> fiber_gram(const InvariantMetric& g)
{
    return {g.v4 + g.c * g.c * g.v5, g.c * g.v5, g.v5};
}

bool is_valid(const InvariantMetric& g)
{
    if (!(g.x1 > 0 && g.x2 > 0 && g.x3 > 0 && g.v4 > 0 && g.v5 > 0))
        return false;
    const auto [a, b, d] = fiber_gram(g);
    // 2x2 symmetric: positive definite iff leading entry and determinant are positive
    return a > 0 && a * d - b * b > 0;
}

NormConstants norm_constants(const SpaceParams& p)
{
    const double l = double(p.l), m = double(p.m), n = double(p.n), N = double(p.N);
    return {std::sqrt((l + m) * n) / (N * std::sqrt(2.0)),
            std::sqrt(l * m) / (std::sqrt(2.0 * N) * std::sqrt(l + m))};
}

} // namespace cspace

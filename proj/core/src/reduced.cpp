#include <cspace/reduced.hpp>

namespace cspace {

std::array<double, 2> reduced_system(const SpaceParams& p, double x1, double x2)
{
    const auto T = homotopy_T_eval<double>(p, 1.0, x1, x2, 1.0);
    return {T.a - T.b, T.b - T.c};
}

} // namespace cspace

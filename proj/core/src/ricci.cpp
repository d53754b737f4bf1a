#include <cspace/ricci.hpp>

namespace cspace {

RicciComponents ricci_components(const SpaceParams& p, const InvariantMetric& g)
{
    return ricci<double>(p, g);
}

EinsteinResidual residual(const SpaceParams& p, const InvariantMetric& g, double lambda)
{
    return einstein_residual<double>(p, g, lambda);
}

} // namespace cspace

#pragma once

#include <cspace/params.hpp>
#include <cspace/roots.hpp>

#include <array>
#include <string>
#include <vector>

namespace cspace {

/// Invariant metric x1 B|f1 + x2 B|f2 + x3 B|f3 on the base flag manifold.
struct FlagMetric {
    double x1 = 1, x2 = 1, x3 = 1;
    double lambda = 0;
};

/// The four closed-form Einstein metrics (x3 = 1), in a fixed order: the non-Kahler one
/// first, then the three Kahler-Einstein metrics (x2 = x1 + x3, x1 = x2 + x3, x3 = x1 + x2).
std::array<FlagMetric, 4> flag_einstein_metrics(const SpaceParams& p);

/// T_i(t, x) = Ric_i^flag(x) / (1 + t q_i(x)).
std::array<double, 3> homotopy_T(const SpaceParams& p, double t, double x1, double x2, double x3);

/// Rotation taking (1,1,1)/sqrt(3) to the north pole.
const std::array<std::array<double, 3>, 3>& rotation_P();

/// f_t = psi o P o (T / |T|) at (x1, x2, 1). Throws std::logic_error at the south pole.
std::array<double, 2> f_t_map(const SpaceParams& p, double t, double x1, double x2);

struct JacobianInfo {
    double jacobian = 0;   // det of the 2x2 central-difference Jacobian of f_t
    int sign = 0;          // 0 when singular
    bool singular = false;
    double normalized = 0; // |det| / (|col1| |col2|), in [0, 1]
    double magnitude = 0;  // |det| of the polynomial system in log coordinates over its row scales
};

/// Central differences with h = 1e-6 * x_i. Singular when normalized or magnitude is below
/// singular_tol; the second test catches roots where the Jacobian vanishes in every direction.
JacobianInfo jacobian_sign(const SpaceParams& p, double t, double x1, double x2, double singular_tol = 1e-6);

/// Closed-form Jacobian determinants of f_0 at the four flag Einstein points, aligned with
/// flag_einstein_metrics().
std::array<double, 4> flag_jacobians_closed_form(const SpaceParams& p);

struct DegreeRoot {
    double x1 = 0, x2 = 0;
    double jacobian = 0;
    int sign = 0;
    bool singular = false;
    bool basin_confirmed = false;
};

struct DegreeOptions {
    double eps = 0.05, L = 10;
    bool auto_expand = true;
    int max_expansions = 4;
    double boundary_threshold = 1e-6;
    int boundary_samples = 256; // per edge
    RootSearchOptions search{};
};

struct DegreeCertificate {
    double t = 0;
    double eps = 0, L = 0;
    int expansions = 0;
    std::vector<DegreeRoot> roots;
    int degree = 0;
    bool verified = false;
    double boundary_min = 0; // min |f_t| over the sampled boundary
    std::vector<std::string> diagnostics;
};

/// Brouwer degree of f_t on the box [eps, L]^2 at (0, 0).
DegreeCertificate mapping_degree(const SpaceParams& p, double t, const DegreeOptions& o = {});

} // namespace cspace

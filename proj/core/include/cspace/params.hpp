#pragma once

#include <array>
#include <cmath>
#include <string>

namespace cspace {

/// The triple (l, m, n) of M_{l,m,n} = SU(l+m+n)/SU(l) x SU(m) x SU(n) and its derived sizes.
struct SpaceParams {
    long long l = 1, m = 1, n = 1;
    long long N = 3;
    long long d1 = 2, d2 = 2, d3 = 2; // dims of f1, f2, f3
    bool degenerate_flag = true;      // some f_i is 2-dimensional; the 6-parameter family is incomplete

    long long dim_m() const { return d1 + d2 + d3 + 2; }
    long long max_block() const;
    std::string label() const; // "M_{l,m,n}"
    bool operator==(const SpaceParams&) const = default;
};

/// Throws std::invalid_argument unless l, m, n >= 1.
SpaceParams make_params(long long l, long long m, long long n);

/// Invariant metric x1 B|f1 + x2 B|f2 + x3 B|f3 + rho0 on the torus fiber, where rho0 has
/// Gram matrix [[v4 + c^2 v5, c v5], [c v5, v5]] in the B-orthonormal basis (Z4~, Z5~).
template <class Real>
struct BasicMetric {
    Real x1{1}, x2{1}, x3{1}, v4{1}, v5{1}, c{0};
};
using InvariantMetric = BasicMetric<double>;

/// Gram matrix entries (g44, g45, g55) of the fiber part.
std::array<double, 3> fiber_gram(const InvariantMetric& g);

/// Both eigenvalues of the fiber Gram matrix are positive and x_i, v_j > 0.
bool is_valid(const InvariantMetric& g);

/// Normalising constants of Z4, Z5 in the fiber (B-unit length).
struct NormConstants {
    double c4 = 0, c5 = 0;
};
NormConstants norm_constants(const SpaceParams& p);

/// Parameters of p converted to Real, in the order l, m, n, N.
template <class Real>
struct RealParams {
    Real l, m, n, N;
    explicit RealParams(const SpaceParams& p)
        : l(static_cast<Real>(p.l)), m(static_cast<Real>(p.m)), n(static_cast<Real>(p.n)),
          N(static_cast<Real>(p.N)) {}
};

} // namespace cspace

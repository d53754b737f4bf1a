#pragma once

#include <cspace/params.hpp>

#include <compare>
#include <map>
#include <vector>

namespace cspace {

/// Index triple (k; i, j) with modules numbered 1..5 (f1, f2, f3, then the two fiber lines).
struct Triple {
    int k = 0, i = 0, j = 0;
    auto operator<=>(const Triple&) const = default;
};

enum class TableKind { Killing, MetricAdapted };

/// Sparse table of nonzero structure constants. Lookups canonicalise the index order
/// according to the symmetry of the kind.
class StructureTable {
public:
    explicit StructureTable(TableKind kind) : kind_(kind) {}

    TableKind kind() const { return kind_; }
    void set(Triple t, double value);
    double get(Triple t) const; // 0 for absent triples
    double operator()(int k, int i, int j) const { return get({k, i, j}); }

    /// Stored entries in canonical order (duplicates under symmetry are not repeated).
    const std::map<Triple, double>& entries() const { return entries_; }
    std::vector<Triple> orbit(Triple t) const; // all index orders sharing the value of t

private:
    Triple canonical(Triple t) const;
    TableKind kind_;
    std::map<Triple, double> entries_;
};

StructureTable b_structure_constants(const SpaceParams& p);
StructureTable metric_structure_constants(const SpaceParams& p, const InvariantMetric& g);

/// The value of c that makes the mixed fiber Ricci term vanish for given x2, x3.
template <class Real>
Real c_from_x(const SpaceParams& p, const Real& x2, const Real& x3)
{
    using std::sqrt;
    const RealParams<Real> r(p);
    return sqrt(r.l * r.m * r.n / r.N) * (x2 * x2 - x3 * x3) / (r.l * x3 * x3 + r.m * x2 * x2);
}

/// {5;2,2} and {5;3,3} for arbitrary c.
template <class Real>
std::pair<Real, Real> adapted_522_533(const SpaceParams& p, const Real& c)
{
    using std::sqrt;
    const RealParams<Real> r(p);
    const Real lm = r.l + r.m;
    const Real mix = 2 * c * sqrt(r.l * r.m * r.n) / (lm * sqrt(r.N));
    return {c * c * r.l / lm + r.m * r.n / (r.N * lm) + mix,
            c * c * r.m / lm + r.l * r.n / (r.N * lm) - mix};
}

/// {5;2,2} and {5;3,3} after eliminating c through c_from_x.
template <class Real>
std::pair<Real, Real> adapted_522_533_eliminated(const SpaceParams& p, const Real& x2, const Real& x3)
{
    const RealParams<Real> r(p);
    const Real den = r.l * x3 * x3 + r.m * x2 * x2;
    const Real d2 = r.N * den * den;
    const Real x2sq = x2 * x2, x3sq = x3 * x3;
    return {r.m * (r.l + r.m) * r.n * x2sq * x2sq / d2, r.l * (r.l + r.m) * r.n * x3sq * x3sq / d2};
}

} // namespace cspace

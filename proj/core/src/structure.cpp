#include <cspace/structure.hpp>

#include <algorithm>
#include <stdexcept>

namespace cspace {

Triple StructureTable::canonical(Triple t) const
{
    if (t.k < 1 || t.k > 5 || t.i < 1 || t.i > 5 || t.j < 1 || t.j > 5)
        throw std::out_of_range("structure constant index outside 1..5");
    if (kind_ == TableKind::Killing) {
        std::array<int, 3> a{t.k, t.i, t.j};
        std::sort(a.begin(), a.end());
        return {a[2], a[0], a[1]};
    }
    if (t.i > t.j)
        std::swap(t.i, t.j);
    return t;
}

void StructureTable::set(Triple t, double value)
{
    entries_[canonical(t)] = value;
}

double StructureTable::get(Triple t) const
{
    auto it = entries_.find(canonical(t));
    return it == entries_.end() ? 0.0 : it->second;
}

std::vector<Triple> StructureTable::orbit(Triple t) const
{
    std::vector<Triple> out;
    if (kind_ == TableKind::Killing) {
        std::array<int, 3> a{t.k, t.i, t.j};
        std::sort(a.begin(), a.end());
        do {
            out.push_back({a[0], a[1], a[2]});
        } while (std::next_permutation(a.begin(), a.end()));
    } else {
        out.push_back({t.k, t.i, t.j});
        if (t.i != t.j)
            out.push_back({t.k, t.j, t.i});
    }
    return out;
}

StructureTable b_structure_constants(const SpaceParams& p)
{
    const double l = double(p.l), m = double(p.m), n = double(p.n), N = double(p.N);
    StructureTable t(TableKind::Killing);
    t.set({3, 1, 2}, l * m * n / N);
    t.set({4, 1, 1}, 0.0);
    t.set({4, 2, 2}, l / (l + m));
    t.set({4, 3, 3}, m / (l + m));
    t.set({5, 1, 1}, (l + m) / N);
    t.set({5, 2, 2}, m * n / (N * (l + m)));
    t.set({5, 3, 3}, l * n / (N * (l + m)));
    return t;
}

StructureTable metric_structure_constants(const SpaceParams& p, const InvariantMetric& g)
{
    const double l = double(p.l), m = double(p.m), n = double(p.n), N = double(p.N);
    const auto [k522, k533] = adapted_522_533<double>(p, g.c);
    StructureTable t(TableKind::MetricAdapted);
    t.set({3, 1, 2}, l * m * n / N);
    t.set({4, 1, 1}, 0.0);
    t.set({4, 2, 2}, l / (l + m));
    t.set({4, 3, 3}, m / (l + m));
    t.set({5, 1, 1}, (l + m) / N);
    t.set({5, 2, 2}, k522);
    t.set({5, 3, 3}, k533);
    return t;
}

} // namespace cspace

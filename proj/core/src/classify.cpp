#include <cspace/classify.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cspace {

const char* to_string(GroupFamily g)
{
    switch (g) {
    case GroupFamily::A: return "A";
    case GroupFamily::B: return "B";
    case GroupFamily::C: return "C";
    case GroupFamily::D: return "D";
    case GroupFamily::G2: return "G2";
    case GroupFamily::F4: return "F4";
    case GroupFamily::E6: return "E6";
    case GroupFamily::E7: return "E7";
    case GroupFamily::E8: return "E8";
    }
    return "?";
}

const char* to_string(CType t)
{
    switch (t) {
    case CType::Semistrict: return "semistrict";
    case CType::Strict: return "strict";
    case CType::Abelian: return "abelian";
    }
    return "?";
}

const char* short_name(CType t)
{
    switch (t) {
    case CType::Semistrict: return "ss";
    case CType::Strict: return "s";
    case CType::Abelian: return "a";
    }
    return "?";
}

void validate(const CSpaceRecord& r)
{
    auto fail = [&](const std::string& why) { throw std::runtime_error("invalid record " + r.name + ": " + why); };
    if (r.fiber_rank < 2 || r.fiber_rank % 2 != 0)
        fail("fiber rank must be even and at least 2");
    if (r.b2M != r.b2F - r.fiber_rank)
        fail("b2(M) != b2(F) - fiber rank");
    if (r.b2M < 0)
        fail("negative b2(M)");
    if (r.ctype == CType::Semistrict && r.b2M != 0)
        fail("semistrict type with nonzero b2(M)");
    if (r.ctype != CType::Semistrict && r.b2M == 0)
        fail("strict or abelian type with trivial torus in H");
    if (r.ctype == CType::Abelian && r.b2F != r.rank)
        fail("abelian type over a flag that is not full");
    if (r.stabilizer.torus != r.b2M)
        fail("torus rank of H differs from b2(M)");
}

namespace {

/// Non-increasing partitions of total.
void partitions(int total, int max_part, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f)
{
    if (total == 0) {
        f(cur);
        return;
    }
    for (int k = std::min(total, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions(total - k, k, cur, f);
        cur.pop_back();
    }
}

std::string join_su(const std::vector<int>& parts)
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "xSU(" : "SU(") + std::to_string(parts[i]) + ")";
    return s;
}

std::string torus_prefix(int t)
{
    return t == 0 ? "" : "U(1)^" + std::to_string(t) + ".";
}

void enumerate_A(int rank_max, std::vector<CSpaceRecord>& out)
{
    for (int l = 2; l - 1 <= rank_max; ++l) {
        std::vector<int> cur;
        partitions(l, l, cur, [&](const std::vector<int>& parts) {
            const int p = int(parts.size());
            const bool full = p == l;
            const std::string G = "SU(" + std::to_string(l) + ")";
            std::string flag = "A(";
            for (int i = 0; i < p; ++i)
                flag += (i ? "," : "") + std::to_string(parts[i]);
            flag += ")";
            auto add = [&](CType type, int t) {
                CSpaceRecord r;
                r.group = GroupFamily::A;
                r.rank = l - 1;
                r.stabilizer = {parts, 0, t, {}};
                r.ctype = type;
                r.fiber_rank = p - 1 - t;
                r.b2F = p - 1;
                r.b2M = t;
                r.stabilizer.label = type == CType::Abelian ? "U(1)^" + std::to_string(t)
                                                              : torus_prefix(t) + "(" + join_su(parts) + ")";
                r.name = G + "/" + r.stabilizer.label;
                r.flag = flag;
                out.push_back(r);
            };
            if (p >= 3 && p % 2 == 1)
                add(CType::Semistrict, 0);
            for (int t = 1; t < p - 1; ++t) {
                if ((p - t) % 2 != 1)
                    continue;
                if (full && l >= 4)
                    add(CType::Abelian, t);
                else if (!full && p >= 4)
                    add(CType::Strict, t);
            }
        });
    }
}

void enumerate_BCD(GroupFamily fam, int rank_max, std::vector<CSpaceRecord>& out)
{
    const int min_rank = fam == GroupFamily::B ? 2 : fam == GroupFamily::C ? 3 : 4;
    for (int l = min_rank; l <= rank_max; ++l) {
        const std::string G = fam == GroupFamily::B ? "SO(" + std::to_string(2 * l + 1) + ")"
            : fam == GroupFamily::C                 ? "Sp(" + std::to_string(l) + ")"
                                                    : "SO(" + std::to_string(2 * l) + ")";
        for (int m = 0; m <= l; ++m) {
            // SO(2) is a circle: D(..., m = 1) is the flag D(..., 1, m = 0)
            if (fam == GroupFamily::D && m == 1)
                continue;
            std::vector<int> cur;
            partitions(l - m, l - m, cur, [&](const std::vector<int>& parts) {
                const int q = int(parts.size());
                const bool torus_only = m == 0 && std::all_of(parts.begin(), parts.end(), [](int x) { return x == 1; });
                std::string extra;
                if (m > 0)
                    extra = fam == GroupFamily::B ? "SO(" + std::to_string(2 * m + 1) + ")"
                        : fam == GroupFamily::C   ? "Sp(" + std::to_string(m) + ")"
                                                  : "SO(" + std::to_string(2 * m) + ")";
                std::string flag = std::string(to_string(fam)) + "(";
                for (int i = 0; i < q; ++i)
                    flag += (i ? "," : "") + std::to_string(parts[i]);
                flag += ";" + std::to_string(m) + ")";
                auto add = [&](CType type, int t) {
                    CSpaceRecord r;
                    r.group = fam;
                    r.rank = l;
                    r.stabilizer = {parts, m, t, {}};
                    r.ctype = type;
                    r.fiber_rank = q - t;
                    r.b2F = q;
                    r.b2M = t;
                    std::string semi = join_su(parts);
                    if (!extra.empty())
                        semi += (semi.empty() ? "" : "x") + extra;
                    r.stabilizer.label = type == CType::Abelian ? "U(1)^" + std::to_string(t)
                                                                  : torus_prefix(t) + "(" + semi + ")";
                    r.name = G + "/" + r.stabilizer.label;
                    r.flag = flag;
                    out.push_back(r);
                };
                if (q >= 2 && q % 2 == 0)
                    add(CType::Semistrict, 0);
                for (int t = 1; t < q; ++t) {
                    if ((q - t) % 2 != 0)
                        continue;
                    if (torus_only && l >= 3)
                        add(CType::Abelian, t);
                    else if (!torus_only && q >= 3)
                        add(CType::Strict, t);
                }
            });
        }
    }
}

} // namespace

std::vector<CSpaceRecord> enumerate_classical(GroupFamily family, int rank_max)
{
    if (rank_max < 2)
        throw std::invalid_argument("rank_max must be at least 2");
    std::vector<CSpaceRecord> out;
    switch (family) {
    case GroupFamily::A: enumerate_A(rank_max, out); break;
    case GroupFamily::B:
    case GroupFamily::C:
    case GroupFamily::D: enumerate_BCD(family, rank_max, out); break;
    default: throw std::invalid_argument("enumerate_classical takes A, B, C or D");
    }
    for (const auto& r : out)
        validate(r);
    return out;
}

} // namespace cspace

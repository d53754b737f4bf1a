#include <cspace/classify.hpp>

namespace cspace {

namespace {

struct Row {
    GroupFamily g;
    const char* name;
    CType type;
    const char* flag;
    int fiber, b2F, b2M;
};

constexpr CType ss = CType::Semistrict, s = CType::Strict, a = CType::Abelian;
using enum GroupFamily;

// Indecomposable non-Kahler C-spaces of the exceptional groups. The flag column names the
// painted Dynkin diagram by its black nodes ("(0)" is the full flag manifold).
constexpr Row kRows[] = {
    {G2, "G2", ss, "G2(0)", 2, 2, 0},

    {F4, "F4", ss, "F4(0)", 4, 4, 0},
    {F4, "F4/T^2", a, "F4(0)", 2, 4, 2},
    {F4, "F4/A1^l.T^1", s, "F4(1)", 2, 3, 1},
    {F4, "F4/A1^s.T^1", s, "F4(4)", 2, 3, 1},
    {F4, "F4/A2^l", ss, "F4(1,2)", 2, 2, 0},
    {F4, "F4/A2^s", ss, "F4(3,4)", 2, 2, 0},
    {F4, "F4/A1xA1", ss, "F4(1,4)", 2, 2, 0},
    {F4, "F4/B2", ss, "F4(2,3)", 2, 2, 0},

    {E6, "E6", ss, "E6(0)", 6, 6, 0},
    {E6, "E6/T^2", a, "E6(0)", 4, 6, 2},
    {E6, "E6/T^4", a, "E6(0)", 2, 6, 4},
    {E6, "E6/A1.T^1", s, "E6(1)", 4, 5, 1},
    {E6, "E6/A1.T^3", s, "E6(1)", 2, 5, 3},
    {E6, "E6/(A1)^2", ss, "E6(3,5)", 4, 4, 0},
    {E6, "E6/(A1)^2.T^2", s, "E6(3,5)", 2, 4, 2},
    {E6, "E6/A2", ss, "E6(4,5)", 4, 4, 0},
    {E6, "E6/A2.T^2", s, "E6(4,5)", 2, 4, 2},
    {E6, "E6/(A1)^3.T^1", s, "E6(1,3,5)", 2, 3, 1},
    {E6, "E6/(A2xA1).T^1", s, "E6(2,4,5)", 2, 3, 1},
    {E6, "E6/A3.T^1", s, "E6(3,4,5)", 2, 3, 1},
    {E6, "E6/A4", ss, "E6(2,3,4,5)", 2, 2, 0},
    {E6, "E6/A3xA1", ss, "E6(1,3,4,5)", 2, 2, 0},
    {E6, "E6/A2xA2", ss, "E6(1,2,4,5)", 2, 2, 0},
    {E6, "E6/A2x(A1)^2", ss, "E6(2,4,5,6)", 2, 2, 0},
    {E6, "E6/D4", ss, "E6(2,3,4,6)", 2, 2, 0},

    {E7, "E7/T^1", a, "E7(0)", 6, 7, 1},
    {E7, "E7/T^3", a, "E7(0)", 4, 7, 3},
    {E7, "E7/T^5", a, "E7(0)", 2, 7, 5},
    {E7, "E7/A1", ss, "E7(1)", 6, 6, 0},
    {E7, "E7/A1.T^2", s, "E7(1)", 4, 6, 2},
    {E7, "E7/A1.T^4", s, "E7(1)", 2, 6, 4},
    {E7, "E7/(A1)^2.T^1", s, "E7(4,6)", 4, 5, 1},
    {E7, "E7/(A1)^2.T^3", s, "E7(4,6)", 2, 5, 3},
    {E7, "E7/A2.T^1", s, "E7(5,6)", 4, 5, 1},
    {E7, "E7/A2.T^3", s, "E7(5,6)", 2, 5, 3},
    {E7, "E7/(A1)^3 (type A)", ss, "E7(1,3,5)", 4, 4, 0},
    {E7, "E7/(A1)^3.T^2 (type A)", s, "E7(1,3,5)", 2, 4, 2},
    {E7, "E7/(A1)^3 (type B)", ss, "E7(1,3,7)", 4, 4, 0},
    {E7, "E7/(A1)^3.T^2 (type B)", s, "E7(1,3,7)", 2, 4, 2},
    {E7, "E7/A2xA1", ss, "E7(3,5,6)", 4, 4, 0},
    {E7, "E7/(A2xA1).T^2", s, "E7(3,5,6)", 2, 4, 2},
    {E7, "E7/A3", ss, "E7(4,5,6)", 4, 4, 0},
    {E7, "E7/A3.T^2", s, "E7(4,5,6)", 2, 4, 2},
    {E7, "E7/A4.T^1", s, "E7(1,2,3,4)", 2, 3, 1},
    {E7, "E7/(A3xA1).T^1 (type A)", s, "E7(1,2,3,5)", 2, 3, 1},
    {E7, "E7/(A3xA1).T^1 (type B)", s, "E7(1,2,3,7)", 2, 3, 1},
    {E7, "E7/(A2)^2.T^1", s, "E7(1,2,4,5)", 2, 3, 1},
    {E7, "E7/(A2x(A1)^2).T^1", s, "E7(1,2,4,6)", 2, 3, 1},
    {E7, "E7/(A1)^4.T^1", s, "E7(1,3,5,7)", 2, 3, 1},
    {E7, "E7/D4.T^1", s, "E7(3,4,5,7)", 2, 3, 1},
    {E7, "E7/A5 (type A)", ss, "E7(1,2,3,4,5)", 2, 2, 0},
    {E7, "E7/A5 (type B)", ss, "E7(1,2,3,4,7)", 2, 2, 0},
    {E7, "E7/A4xA1", ss, "E7(1,2,3,4,6)", 2, 2, 0},
    {E7, "E7/A3xA2", ss, "E7(1,2,3,5,6)", 2, 2, 0},
    {E7, "E7/A3x(A1)^2", ss, "E7(1,2,3,5,7)", 2, 2, 0},
    {E7, "E7/D4xA1", ss, "E7(1,3,4,5,7)", 2, 2, 0},
    {E7, "E7/(A2)^2xA1", ss, "E7(1,2,5,6,7)", 2, 2, 0},
    {E7, "E7/A2x(A1)^3", ss, "E7(1,3,5,6,7)", 2, 2, 0},
    {E7, "E7/D5", ss, "E7(3,4,5,6,7)", 2, 2, 0},

    {E8, "E8", ss, "E8(0)", 8, 8, 0},
    {E8, "E8/T^2", a, "E8(0)", 6, 8, 2},
    {E8, "E8/T^4", a, "E8(0)", 4, 8, 4},
    {E8, "E8/T^6", a, "E8(0)", 2, 8, 6},
    {E8, "E8/A1.T^1", s, "E8(1)", 6, 7, 1},
    {E8, "E8/A1.T^3", s, "E8(1)", 4, 7, 3},
    {E8, "E8/A1.T^5", s, "E8(1)", 2, 7, 5},
    {E8, "E8/A2", ss, "E8(1,2)", 6, 6, 0},
    {E8, "E8/A2.T^2", s, "E8(1,2)", 4, 6, 2},
    {E8, "E8/A2.T^4", s, "E8(1,2)", 2, 6, 4},
    {E8, "E8/A1xA1", ss, "E8(1,3)", 6, 6, 0},
    {E8, "E8/(A1xA1).T^2", s, "E8(1,3)", 4, 6, 2},
    {E8, "E8/(A1xA1).T^4", s, "E8(1,3)", 2, 6, 4},
    {E8, "E8/A3.T^1", s, "E8(1,2,3)", 4, 5, 1},
    {E8, "E8/A3.T^3", s, "E8(1,2,3)", 2, 5, 3},
    {E8, "E8/(A2xA1).T^1", s, "E8(1,2,4)", 4, 5, 1},
    {E8, "E8/(A2xA1).T^3", s, "E8(1,2,4)", 2, 5, 3},
    {E8, "E8/(A1)^3.T^1", s, "E8(1,3,5)", 4, 5, 1},
    {E8, "E8/(A1)^3.T^3", s, "E8(1,3,5)", 2, 5, 3},
    {E8, "E8/A4", ss, "E8(1,2,3,4)", 4, 4, 0},
    {E8, "E8/A4.T^2", s, "E8(1,2,3,4)", 2, 4, 2},
    {E8, "E8/A3xA1", ss, "E8(1,2,3,5)", 4, 4, 0},
    {E8, "E8/(A3xA1).T^2", s, "E8(1,2,3,5)", 2, 4, 2},
    {E8, "E8/A2xA2", ss, "E8(1,2,4,5)", 4, 4, 0},
    {E8, "E8/(A2xA2).T^2", s, "E8(1,2,4,5)", 2, 4, 2},
    {E8, "E8/A2x(A1)^2", ss, "E8(1,2,4,6)", 4, 4, 0},
    {E8, "E8/(A2x(A1)^2).T^2", s, "E8(1,2,4,6)", 2, 4, 2},
    {E8, "E8/(A1)^4", ss, "E8(1,3,5,7)", 4, 4, 0},
    {E8, "E8/(A1)^4.T^2", s, "E8(1,3,5,7)", 2, 4, 2},
    {E8, "E8/D4", ss, "E8(4,5,6,8)", 4, 4, 0},
    {E8, "E8/D4.T^2", s, "E8(4,5,6,8)", 2, 4, 2},
    {E8, "E8/A5.T^1", s, "E8(1,2,3,4,5)", 2, 3, 1},
    {E8, "E8/(A4xA1).T^1", s, "E8(1,2,3,4,6)", 2, 3, 1},
    {E8, "E8/(A3xA2).T^1", s, "E8(1,2,3,5,6)", 2, 3, 1},
    {E8, "E8/(A3x(A1)^2).T^1", s, "E8(1,2,3,5,7)", 2, 3, 1},
    {E8, "E8/((A2)^2xA1).T^1", s, "E8(1,2,4,5,7)", 2, 3, 1},
    {E8, "E8/(A2x(A1)^3).T^1", s, "E8(1,2,4,6,8)", 2, 3, 1},
    {E8, "E8/(D4xA1).T^1", s, "E8(1,4,5,6,8)", 2, 3, 1},
    {E8, "E8/D5.T^1", s, "E8(4,5,6,7,8)", 2, 3, 1},
    {E8, "E8/A6", ss, "E8(1,2,3,4,5,6)", 2, 2, 0},
    {E8, "E8/A5xA1", ss, "E8(1,2,3,4,5,7)", 2, 2, 0},
    {E8, "E8/A4xA2", ss, "E8(1,2,3,4,6,7)", 2, 2, 0},
    {E8, "E8/A3xA3", ss, "E8(1,2,3,5,6,7)", 2, 2, 0},
    {E8, "E8/A4x(A1)^2", ss, "E8(1,2,3,4,6,8)", 2, 2, 0},
    {E8, "E8/D4xA2", ss, "E8(1,2,4,5,6,8)", 2, 2, 0},
    {E8, "E8/D5xA1", ss, "E8(1,4,5,6,7,8)", 2, 2, 0},
    {E8, "E8/D6", ss, "E8(2,3,4,5,6,8)", 2, 2, 0},
    {E8, "E8/A3xA2xA1", ss, "E8(1,2,3,6,7,8)", 2, 2, 0},
    {E8, "E8/(A2)^2x(A1)^2", ss, "E8(1,2,4,6,7,8)", 2, 2, 0},
    {E8, "E8/E6", ss, "E8(3,4,5,6,7,8)", 2, 2, 0},
};

int rank_of(GroupFamily g)
{
    switch (g) {
    case G2: return 2;
    case F4: return 4;
    case E6: return 6;
    case E7: return 7;
    case E8: return 8;
    default: return 0;
    }
}

std::vector<CSpaceRecord> build()
{
    std::vector<CSpaceRecord> out;
    for (const auto& row : kRows) {
        CSpaceRecord r;
        r.group = row.g;
        r.rank = rank_of(row.g);
        r.ctype = row.type;
        r.fiber_rank = row.fiber;
        r.b2F = row.b2F;
        r.b2M = row.b2M;
        r.name = row.name;
        r.flag = row.flag;
        r.stabilizer.torus = row.b2M;
        const std::string n = row.name;
        const auto slash = n.find('/');
        r.stabilizer.label = slash == std::string::npos ? "{e}" : n.substr(slash + 1);
        validate(r);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

const std::vector<CSpaceRecord>& exceptional_catalog()
{
    static const std::vector<CSpaceRecord> rows = build();
    return rows;
}

} // namespace cspace

#pragma once

#include <string>
#include <vector>

namespace cspace {

enum class GroupFamily { A, B, C, D, G2, F4, E6, E7, E8 };
enum class CType { Semistrict, Strict, Abelian };

const char* to_string(GroupFamily g);
const char* to_string(CType t);
/// "ss", "s", "a"
const char* short_name(CType t);

/// H = U(1)^torus . (SU(parts_1) x ... x SU(parts_p) x extra), where extra is SO(2m+1), Sp(m)
/// or SO(2m) for families B, C, D. For exceptional rows only the label is meaningful.
struct Stabilizer {
    std::vector<int> parts; // non-increasing
    int m = 0;
    int torus = 0;
    std::string label;
};

struct CSpaceRecord {
    GroupFamily group = GroupFamily::A;
    int rank = 0;
    Stabilizer stabilizer;
    CType ctype = CType::Semistrict;
    int fiber_rank = 0; // 2s
    int b2F = 0;
    int b2M = 0;
    std::string name;   // M = G/H
    std::string flag;   // base flag manifold
};

/// All records of a classical family with group rank 1..rank_max (A: SU(l) has rank l - 1).
/// B is taken from rank 2, C from rank 3 and D from rank 4 so that no group is listed twice.
std::vector<CSpaceRecord> enumerate_classical(GroupFamily family, int rank_max);

/// The exceptional catalog; validated on first use (throws std::runtime_error naming the row).
const std::vector<CSpaceRecord>& exceptional_catalog();

/// Structural invariants of a record; throws std::runtime_error with the offending name.
void validate(const CSpaceRecord& r);

} // namespace cspace

#pragma once

#include <cspace/flag.hpp>
#include <cspace/params.hpp>
#include <cspace/real.hpp>
#include <cspace/ricci.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cspace {

enum class Method { Continuation, Multistart, CubicClosedForm, PairClosedForm };
const char* to_string(Method m);

/// A verified Einstein metric, normalised to x3 = 1.
struct EinsteinSolution {
    InvariantMetric metric;
    double lambda = 0;
    EinsteinResidual residual;
    Method method = Method::Multistart;
    double condition = 0; // row-scaled condition number of the reduced Jacobian (log coordinates)
    Precision precision = Precision::Double;
};

enum class Strategy { Auto, Continuation, Multistart, ClosedForm };

struct SolveOptions {
    Strategy strategy = Strategy::Auto;
    Precision precision = Precision::Double; // extended is also switched on automatically
    std::optional<std::pair<double, double>> box; // multistart box (eps, L); automatic if unset
    double tol = 1e-10;                           // accepted full-system residual (max-abs)
    int grid = 0;                                 // multistart points per axis, 0 = automatic
    double dedup_rel = 1e-6;
    unsigned threads = 0;
};

/// One homotopy path started at a flag Einstein metric.
struct PathReport {
    FlagMetric start;
    bool reached_end = false;   // tracked up to t = 1
    bool singular_end = false;  // endpoint Jacobian singular
    double t_end = 0;           // last accepted t
    double x1 = 0, x2 = 0;      // last accepted point
    int steps = 0;
    std::string message;
};

struct ContinuationResult {
    std::vector<EinsteinSolution> solutions; // distinct nonsingular endpoints
    std::vector<PathReport> paths;           // always four entries
};

struct SolveReport {
    SpaceParams params;
    std::vector<EinsteinSolution> solutions;     // sorted by (x1, x2)
    std::vector<std::vector<int>> isometry_classes;
    bool family_complete = true;
    Precision precision_used = Precision::Double;
    std::pair<double, double> box{0.05, 10};
    std::vector<PathReport> paths;
    std::vector<std::string> diagnostics;
};

/// Search box that contains the four flag Einstein points with room to spare.
std::pair<double, double> auto_box(const SpaceParams& p);

/// Uses extended precision when asked to, or when max(l, m, n) > 500.
bool wants_extended(const SpaceParams& p, Precision requested);

ContinuationResult continue_from_flag(const SpaceParams& p, const SolveOptions& o = {});

std::vector<EinsteinSolution> multistart(const SpaceParams& p, std::pair<double, double> box, int grid_density,
                                         const SolveOptions& o = {});

/// Polynomials of the equal-parameter cases.
double pair_H1(long long m, long long n, double x1);  // l = m, branch x2 = x3
double cubic_h1(long long n, double x);               // l = m = n
double cubic_h2(long long n, double x);
double cubic_alpha(long long n);                      // root of cubic_h1 in (1, 2); 1 for n = 1
std::vector<double> pair_H1_roots(long long m, long long n); // positive real roots, ascending

std::vector<EinsteinSolution> solve_equal_all(long long n, Precision precision = Precision::Double);
std::vector<EinsteinSolution> solve_equal_pair(long long m, long long n, const SolveOptions& o = {});

/// Newton polish on the reduced system, then back-substitution of lambda, v4, v5, c.
/// Throws SolverError when Newton fails.
EinsteinSolution refine(const SpaceParams& p, std::pair<double, double> approx, Precision precision,
                        Method method = Method::Multistart);

/// Full pipeline: closed forms where available, continuation, multistart, refine, verify, dedup.
SolveReport solve(const SpaceParams& p, const SolveOptions& o = {});

} // namespace cspace

#include <einstein/app.hpp>
#include <einstein/cache.hpp>
#include <einstein/json_io.hpp>
#include <einstein/reference.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace einstein {

using namespace cspace;

namespace {

/// Raised for bad input detected after parsing (maps to exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpaceArgs {
    long long l = 0, m = 0, n = 0;
};

void add_space(CLI::App* app, SpaceArgs& s)
{
    app->add_option("-l", s.l, "first block size")->required();
    app->add_option("-m", s.m, "second block size")->required();
    app->add_option("-n", s.n, "third block size")->required();
}

SpaceParams to_params(const SpaceArgs& s)
{
    try {
        return make_params(s.l, s.m, s.n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

struct RunConfig {
    SpaceArgs space;
    std::string method = "auto";
    std::string precision = "double";
    std::vector<double> box;
    double tol = 1e-10;
    std::string json_path, csv_path, cache_dir;
    bool no_cache = false;
    double t = 1.0;
    std::string target;
    std::string family = "all";
    int rank_max = 6;
};

SolveOptions solve_options(const RunConfig& c)
{
    static const std::map<std::string, Strategy> methods{{"auto", Strategy::Auto},
                                                         {"continuation", Strategy::Continuation},
                                                         {"multistart", Strategy::Multistart},
                                                         {"closed-form", Strategy::ClosedForm}};
    SolveOptions o;
    o.strategy = methods.at(c.method);
    o.precision = precision_from_string(c.precision);
    if (!(c.tol > 0))
        throw UsageError("--tol must be positive");
    o.tol = c.tol;
    if (!c.box.empty()) {
        if (!(c.box[0] > 0 && c.box[0] < c.box[1]))
            throw UsageError("--box needs 0 < EPS < L");
        o.box = std::pair{c.box[0], c.box[1]};
    }
    return o;
}

/// Solve through the cache unless disabled.
SolveReport cached_solve(const SpaceParams& p, const SolveOptions& o, const RunConfig& c, std::ostream& err)
{
    std::optional<ResultCache> cache;
    if (!c.no_cache)
        cache.emplace(c.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(c.cache_dir));
    if (cache)
        if (auto hit = cache->load(p, o))
            return *hit;
    auto r = solve(p, o);
    if (cache) {
        try {
            cache->store(r, o);
        } catch (const std::exception& e) {
            err << "warning: " << e.what() << '\n';
        }
    }
    return r;
}

void emit(const Json& j, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(path, std::ios::trunc);
    if (!f || !(f << j.dump(2) << '\n'))
        throw UsageError("cannot write " + path);
}

int cmd_solve(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const auto p = to_params(c.space);
    const auto o = solve_options(c);
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = cached_solve(p, o, c, err);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& d : r.diagnostics)
        err << "warning: " << d << '\n';
    auto j = to_json(r);
    j["wall_time_s"] = wall;
    emit(j, c.json_path, out);
    if (!c.csv_path.empty()) {
        std::ofstream f(c.csv_path, std::ios::trunc);
        if (!f)
            throw UsageError("cannot write " + c.csv_path);
        write_csv(f, r);
    }
    if (!c.json_path.empty())
        out << p.label() << ": " << r.solutions.size() << " solution(s), " << r.isometry_classes.size()
            << " isometry class(es)\n";
    return kOk;
}

int cmd_flag(const RunConfig& c, std::ostream& out)
{
    const auto p = to_params(c.space);
    const auto fm = flag_einstein_metrics(p);
    const auto jc = flag_jacobians_closed_form(p);
    Json j;
    j["params"] = to_json(p);
    j["metrics"] = Json::array();
    for (int k = 0; k < 4; ++k) {
        const auto jac = jacobian_sign(p, 0.0, fm[k].x1, fm[k].x2);
        Json m;
        m["kind"] = k == 0 ? "non-kahler" : "kahler-einstein";
        m["x1"] = fm[k].x1;
        m["x2"] = fm[k].x2;
        m["x3"] = fm[k].x3;
        m["lambda"] = fm[k].lambda;
        m["jacobian"] = jac.jacobian;
        m["jacobian_closed_form"] = jc[k];
        m["sign"] = jac.sign;
        j["metrics"].push_back(m);
    }
    emit(j, c.json_path, out);
    return kOk;
}

int cmd_degree(const RunConfig& c, std::ostream& out)
{
    const auto p = to_params(c.space);
    if (!(c.t >= 0 && c.t <= 1))
        throw UsageError("--t must lie in [0, 1]");
    DegreeOptions o;
    if (!c.box.empty()) {
        if (!(c.box[0] > 0 && c.box[0] < c.box[1]))
            throw UsageError("--box needs 0 < EPS < L");
        o.eps = c.box[0];
        o.L = c.box[1];
    }
    auto j = to_json(mapping_degree(p, c.t, o));
    Json full;
    full["params"] = to_json(p);
    for (auto& [k, v] : j.items())
        full[k] = v;
    emit(full, c.json_path, out);
    return kOk;
}

int cmd_classify(const RunConfig& c, std::ostream& out)
{
    if (c.rank_max < 2)
        throw UsageError("--rank-max must be at least 2");
    using enum GroupFamily;
    static const std::map<std::string, GroupFamily> classical{{"A", A}, {"B", B}, {"C", C}, {"D", D}};
    Json j = Json::array();
    auto add = [&](const std::vector<CSpaceRecord>& rs) {
        for (const auto& r : rs)
            j.push_back(to_json(r));
    };
    if (c.family == "all") {
        for (auto f : {A, B, C, D})
            add(enumerate_classical(f, c.rank_max));
        add(exceptional_catalog());
    } else if (c.family == "exceptional") {
        add(exceptional_catalog());
    } else {
        add(enumerate_classical(classical.at(c.family), c.rank_max));
    }
    emit(j, c.json_path, out);
    return kOk;
}

// --- reproduce ---------------------------------------------------------------------------

std::string fmt_row(const std::vector<double>& v, int digits)
{
    std::ostringstream s;
    s.precision(digits);
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        s << (i ? ", " : "") << v[i];
    s << ')';
    return s.str();
}

std::vector<double> project(const EinsteinSolution& s, const RefRow& row)
{
    const auto& g = s.metric;
    const double k = row.x1_scaled ? g.x1 : 1.0;
    std::vector<double> v{g.x1 / k, g.x2 / k, g.x3 / k, g.v4 / k, g.v5 / k};
    v.resize(row.values.size());
    return v;
}

double deviation(const std::vector<double>& a, const std::vector<double>& ref, bool relative)
{
    double d = 0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const double e = std::abs(a[i] - ref[i]);
        d = std::max(d, relative ? e / std::abs(ref[i]) : e);
    }
    return d;
}

int reproduce_table(const RefTable& t, const RunConfig& c, std::ostream& out, std::ostream& err, Json& j)
{
    out << t.target << ": " << t.title << " (tolerance " << t.tol << (t.relative ? " relative" : "") << ")\n";
    bool ok = true;
    double worst = 0;
    j["target"] = t.target;
    j["tolerance"] = t.tol;
    j["relative"] = t.relative;
    j["spaces"] = Json::array();
    for (const auto& s : t.spaces) {
        const auto p = make_params(s.l, s.m, s.n);
        auto o = solve_options(c);
        if (t.extended)
            o.precision = Precision::Extended;
        const auto r = cached_solve(p, o, c, err);
        const int digits = t.relative ? 17 : 7;
        Json js;
        js["params"] = to_json(p);
        js["solutions"] = r.solutions.size();
        js["expected_solutions"] = s.solutions;
        js["isometry_classes"] = r.isometry_classes.size();
        js["rows"] = Json::array();
        out << "  " << p.label() << ": " << r.solutions.size() << " solution(s) (expected " << s.solutions << ")";
        if (s.classes)
            out << ", " << r.isometry_classes.size() << " class(es) (expected " << s.classes << ")";
        out << '\n';
        if (int(r.solutions.size()) != s.solutions || (s.classes && int(r.isometry_classes.size()) != s.classes))
            ok = false;
        for (const auto& row : s.rows) {
            double best = INFINITY;
            std::vector<double> match;
            for (const auto& sol : r.solutions) {
                const auto v = project(sol, row);
                const double d = deviation(v, row.values, t.relative);
                if (d < best) {
                    best = d;
                    match = v;
                }
            }
            worst = std::max(worst, best);
            ok = ok && best <= t.tol;
            out << "    expected " << fmt_row(row.values, digits) << (row.x1_scaled ? "  [x1 = 1]" : "") << '\n'
                << "    computed " << (match.empty() ? std::string("-") : fmt_row(match, digits)) << "  dev "
                << best << (best <= t.tol ? "" : "  MISMATCH") << '\n';
            js["rows"].push_back(Json{{"expected", row.values},
                                      {"computed", match},
                                      {"x1_scaled", row.x1_scaled},
                                      {"deviation", std::isfinite(best) ? Json(best) : Json(nullptr)}});
        }
        j["spaces"].push_back(js);
    }
    out << "  max deviation " << worst << (ok ? "  OK" : "  FAILED") << '\n';
    j["max_deviation"] = std::isfinite(worst) ? Json(worst) : Json(nullptr);
    j["ok"] = ok;
    return ok ? kOk : kMismatch;
}

int reproduce_flag(std::ostream& out, Json& j)
{
    double ricci_dev = 0, jac_dev = 0;
    int sign_errors = 0;
    const int expect[4] = {1, -1, -1, -1};
    for (int l = 1; l <= 8; ++l)
        for (int m = 1; m <= 8; ++m)
            for (int n = 1; n <= 8; ++n) {
                const auto p = make_params(l, m, n);
                const auto fm = flag_einstein_metrics(p);
                const auto jc = flag_jacobians_closed_form(p);
                for (int k = 0; k < 4; ++k) {
                    const auto r = flag_ricci<double>(p, fm[k].x1, fm[k].x2, fm[k].x3);
                    for (double v : {r.a, r.b, r.c})
                        ricci_dev = std::max(ricci_dev, std::abs(v - fm[k].lambda));
                    const auto js = jacobian_sign(p, 0.0, fm[k].x1, fm[k].x2);
                    jac_dev = std::max(jac_dev, std::abs(js.jacobian - jc[k]) / std::abs(jc[k]));
                    sign_errors += js.sign != expect[k];
                }
            }
    const bool ok = ricci_dev <= 1e-12 && jac_dev <= 1e-8 && sign_errors == 0;
    out << "flag: closed-form Einstein metrics of the base, l, m, n in 1..8\n"
        << "  max |Ric_i - lambda|            " << ricci_dev << " (tolerance 1e-12)\n"
        << "  max rel. Jacobian deviation     " << jac_dev << " (tolerance 1e-08)\n"
        << "  sign pattern (+, -, -, -) errors " << sign_errors << '\n';
    const auto p = make_params(1, 2, 3);
    out << "  " << p.label() << ":\n";
    for (const auto& f : flag_einstein_metrics(p))
        out << "    (" << f.x1 << ", " << f.x2 << ", " << f.x3 << ")  lambda " << f.lambda << '\n';
    out << (ok ? "  OK" : "  FAILED") << '\n';
    j = Json{{"target", "flag"},
             {"ricci_deviation", ricci_dev},
             {"jacobian_relative_deviation", jac_dev},
             {"sign_errors", sign_errors},
             {"ok", ok}};
    return ok ? kOk : kMismatch;
}

int cmd_reproduce(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    Json j;
    int code;
    if (c.target == "flag") {
        code = reproduce_flag(out, j);
    } else if (const auto* t = find_table(c.target)) {
        code = reproduce_table(*t, c, out, err, j);
    } else {
        throw UsageError("unknown target '" + c.target + "'");
    }
    if (!c.json_path.empty())
        emit(j, c.json_path, out);
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Invariant Einstein metrics on M_{l,m,n} = SU(l+m+n)/SU(l)xSU(m)xSU(n)", "einstein"};
    app.require_subcommand(1);
    RunConfig c;
    const std::vector<std::string> methods{"auto", "continuation", "multistart", "closed-form"};
    const std::vector<std::string> precisions{"double", "extended"};

    auto* solve_cmd = app.add_subcommand("solve", "find all Einstein metrics of one space");
    add_space(solve_cmd, c.space);
    solve_cmd->add_option("--method", c.method, "solver strategy")->check(CLI::IsMember(methods));
    solve_cmd->add_option("--precision", c.precision, "arithmetic")->check(CLI::IsMember(precisions));
    solve_cmd->add_option("--box", c.box, "multistart box EPS L")->expected(2);
    solve_cmd->add_option("--tol", c.tol, "accepted residual (max-abs)");
    solve_cmd->add_option("--json", c.json_path, "write the report here instead of stdout");
    solve_cmd->add_option("--csv", c.csv_path, "also write the solutions as CSV");
    solve_cmd->add_option("--cache-dir", c.cache_dir, "result cache directory")->envname("EINSTEIN_CACHE_DIR");
    solve_cmd->add_flag("--no-cache", c.no_cache, "neither read nor write the cache");

    auto* flag_cmd = app.add_subcommand("flag", "closed-form Einstein metrics of the base flag manifold");
    add_space(flag_cmd, c.space);
    flag_cmd->add_option("--json", c.json_path, "output file");

    auto* degree_cmd = app.add_subcommand("degree", "mapping degree certificate of f_t");
    add_space(degree_cmd, c.space);
    degree_cmd->add_option("--t", c.t, "homotopy parameter in [0, 1]");
    degree_cmd->add_option("--box", c.box, "initial box EPS L")->expected(2);
    degree_cmd->add_option("--json", c.json_path, "output file");

    auto* classify_cmd = app.add_subcommand("classify", "list indecomposable non-Kahler C-spaces");
    classify_cmd->add_option("--family", c.family, "A, B, C, D, exceptional or all")
        ->check(CLI::IsMember({"A", "B", "C", "D", "exceptional", "all"}));
    classify_cmd->add_option("--rank-max", c.rank_max, "largest rank for classical families");
    classify_cmd->add_option("--json", c.json_path, "output file");

    auto* repro_cmd = app.add_subcommand("reproduce", "compare computed values with a reference table");
    repro_cmd->add_option("--target", c.target, "table1, table2, table3, table3prime, table4, intro or flag")
        ->required();
    repro_cmd->add_option("--json", c.json_path, "also write the comparison as JSON");
    repro_cmd->add_option("--cache-dir", c.cache_dir, "result cache directory")->envname("EINSTEIN_CACHE_DIR");
    repro_cmd->add_flag("--no-cache", c.no_cache, "neither read nor write the cache");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd)
            return cmd_solve(c, out, err);
        if (*flag_cmd)
            return cmd_flag(c, out);
        if (*degree_cmd)
            return cmd_degree(c, out);
        if (*classify_cmd)
            return cmd_classify(c, out);
        return cmd_reproduce(c, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
}

} // namespace einstein

#include <einstein/json_io.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace einstein {

using namespace cspace;

namespace {

Json num(double v)
{
    if (!std::isfinite(v))
        return nullptr;
    return v;
}

double get_num(const Json& j)
{
    if (j.is_null())
        return std::numeric_limits<double>::infinity();
    return j.get<double>();
}

Json to_json(const FlagMetric& f)
{
    return Json{{"x1", f.x1}, {"x2", f.x2}, {"x3", f.x3}, {"lambda", f.lambda}};
}

FlagMetric flag_from_json(const Json& j)
{
    return {j.at("x1").get<double>(), j.at("x2").get<double>(), j.at("x3").get<double>(),
            j.at("lambda").get<double>()};
}

Json to_json(const PathReport& p)
{
    Json j;
    j["start"] = to_json(p.start);
    j["reached_end"] = p.reached_end;
    j["singular_end"] = p.singular_end;
    j["t_end"] = p.t_end;
    j["x1"] = p.x1;
    j["x2"] = p.x2;
    j["steps"] = p.steps;
    j["message"] = p.message;
    return j;
}

PathReport path_from_json(const Json& j)
{
    PathReport p;
    p.start = flag_from_json(j.at("start"));
    p.reached_end = j.at("reached_end").get<bool>();
    p.singular_end = j.at("singular_end").get<bool>();
    p.t_end = j.at("t_end").get<double>();
    p.x1 = j.at("x1").get<double>();
    p.x2 = j.at("x2").get<double>();
    p.steps = j.at("steps").get<int>();
    p.message = j.at("message").get<std::string>();
    return p;
}

EinsteinSolution solution_from_json(const Json& j)
{
    EinsteinSolution s;
    s.metric = {j.at("x1").get<double>(), j.at("x2").get<double>(), j.at("x3").get<double>(),
                j.at("v4").get<double>(),  j.at("v5").get<double>(), j.at("c").get<double>()};
    s.lambda = j.at("lambda").get<double>();
    const auto& e = j.at("residual_components");
    if (!e.is_array() || e.size() != 6)
        throw std::runtime_error("residual_components must hold six numbers");
    s.residual = {e[0].get<double>(), e[1].get<double>(), e[2].get<double>(),
                  e[3].get<double>(), e[4].get<double>(), e[5].get<double>(), j.at("residual").get<double>()};
    s.method = method_from_string(j.at("method").get<std::string>());
    s.condition = get_num(j.at("condition"));
    s.precision = precision_from_string(j.at("precision").get<std::string>());
    return s;
}

} // namespace

Method method_from_string(const std::string& s)
{
    for (Method m : {Method::Continuation, Method::Multistart, Method::CubicClosedForm, Method::PairClosedForm})
        if (s == to_string(m))
            return m;
    throw std::runtime_error("unknown method '" + s + "'");
}

Precision precision_from_string(const std::string& s)
{
    for (Precision p : {Precision::Double, Precision::Extended})
        if (s == to_string(p))
            return p;
    throw std::runtime_error("unknown precision '" + s + "'");
}

Json to_json(const SpaceParams& p)
{
    return Json{{"l", p.l}, {"m", p.m}, {"n", p.n}, {"N", p.N}, {"dim", p.dim_m()}};
}

Json to_json(const EinsteinSolution& s)
{
    const auto& g = s.metric;
    const auto& e = s.residual;
    Json j;
    j["x1"] = g.x1;
    j["x2"] = g.x2;
    j["x3"] = g.x3;
    j["v4"] = g.v4;
    j["v5"] = g.v5;
    j["c"] = g.c;
    j["lambda"] = s.lambda;
    j["residual"] = e.norm;
    j["residual_components"] = Json::array({e.e1, e.e2, e.e3, e.e4, e.e5, e.e0});
    j["method"] = to_string(s.method);
    j["condition"] = num(s.condition);
    j["precision"] = to_string(s.precision);
    return j;
}

Json to_json(const SolveReport& r)
{
    Json j;
    j["params"] = to_json(r.params);
    j["precision"] = to_string(r.precision_used);
    j["family_complete"] = r.family_complete;
    j["box"] = Json::array({r.box.first, r.box.second});
    j["solutions"] = Json::array();
    for (const auto& s : r.solutions)
        j["solutions"].push_back(to_json(s));
    j["isometry_classes"] = r.isometry_classes;
    j["paths"] = Json::array();
    for (const auto& p : r.paths)
        j["paths"].push_back(to_json(p));
    j["diagnostics"] = r.diagnostics;
    return j;
}

SolveReport report_from_json(const Json& j)
{
    try {
        SolveReport r;
        const auto& p = j.at("params");
        r.params = make_params(p.at("l").get<long long>(), p.at("m").get<long long>(), p.at("n").get<long long>());
        r.precision_used = precision_from_string(j.at("precision").get<std::string>());
        r.family_complete = j.at("family_complete").get<bool>();
        const auto& box = j.at("box");
        r.box = {box.at(0).get<double>(), box.at(1).get<double>()};
        for (const auto& s : j.at("solutions"))
            r.solutions.push_back(solution_from_json(s));
        r.isometry_classes = j.at("isometry_classes").get<std::vector<std::vector<int>>>();
        for (const auto& path : j.at("paths"))
            r.paths.push_back(path_from_json(path));
        r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("malformed report: ") + e.what());
    }
}

Json to_json(const DegreeCertificate& c)
{
    Json j;
    j["t"] = c.t;
    j["box"] = Json::array({c.eps, c.L});
    j["expansions"] = c.expansions;
    j["degree"] = c.degree;
    j["verified"] = c.verified;
    j["boundary_min"] = c.boundary_min;
    j["roots"] = Json::array();
    for (const auto& r : c.roots)
        j["roots"].push_back(Json{{"x1", r.x1},
                                  {"x2", r.x2},
                                  {"jacobian", r.jacobian},
                                  {"sign", r.sign},
                                  {"singular", r.singular},
                                  {"basin_confirmed", r.basin_confirmed}});
    j["diagnostics"] = c.diagnostics;
    return j;
}

Json to_json(const CSpaceRecord& r)
{
    Json j;
    j["group"] = to_string(r.group);
    j["rank"] = r.rank;
    j["name"] = r.name;
    j["type"] = to_string(r.ctype);
    j["stabilizer"] = r.stabilizer.label;
    j["flag"] = r.flag;
    j["fiber_rank"] = r.fiber_rank;
    j["b2F"] = r.b2F;
    j["b2M"] = r.b2M;
    return j;
}

void write_csv(std::ostream& out, const SolveReport& r)
{
    out << "l,m,n,index,x1,x2,x3,v4,v5,c,lambda,residual,method,condition\n";
    char buf[64];
    auto g17 = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
        const auto& s = r.solutions[i];
        const auto& g = s.metric;
        out << r.params.l << ',' << r.params.m << ',' << r.params.n << ',' << i << ',' << g17(g.x1) << ','
            << g17(g.x2) << ',' << g17(g.x3) << ',' << g17(g.v4) << ',' << g17(g.v5) << ',' << g17(g.c) << ','
            << g17(s.lambda) << ',' << g17(s.residual.norm) << ',' << to_string(s.method) << ','
            << g17(s.condition) << '\n';
    }
}

} // namespace einstein

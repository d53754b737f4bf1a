#include <einstein/cache.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

namespace einstein {

namespace fs = std::filesystem;
using namespace cspace;

namespace {

constexpr int kFormat = 1;

const char* strategy_name(Strategy s)
{
    switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Continuation: return "continuation";
    case Strategy::Multistart: return "multistart";
    case Strategy::ClosedForm: return "closed-form";
    }
    return "?";
}

} // namespace

Json options_key(const SolveOptions& o)
{
    Json j;
    j["method"] = strategy_name(o.strategy);
    j["precision"] = to_string(o.precision);
    j["box"] = o.box ? Json::array({o.box->first, o.box->second}) : Json(nullptr);
    j["tol"] = o.tol;
    j["grid"] = o.grid;
    j["dedup_rel"] = o.dedup_rel;
    return j;
}

fs::path ResultCache::default_dir()
{
    if (const char* d = std::getenv("EINSTEIN_CACHE_DIR"); d && *d)
        return d;
    if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d)
        return fs::path(d) / "einstein";
    if (const char* h = std::getenv("HOME"); h && *h)
        return fs::path(h) / ".cache" / "einstein";
    return ".einstein-cache";
}

fs::path ResultCache::file_for(const SpaceParams& p, Precision precision) const
{
    std::ostringstream name;
    name << "M_" << p.l << '_' << p.m << '_' << p.n << '_' << to_string(precision) << ".json";
    return dir_ / name.str();
}

std::optional<SolveReport> ResultCache::load(const SpaceParams& p, const SolveOptions& o) const
{
    std::ifstream in(file_for(p, o.precision));
    if (!in)
        return std::nullopt;
    try {
        const auto j = Json::parse(in);
        if (j.at("format").get<int>() != kFormat || j.at("options") != options_key(o))
            return std::nullopt;
        auto r = report_from_json(j.at("report"));
        if (!(r.params == p))
            return std::nullopt;
        return r;
    } catch (const std::exception&) {
        return std::nullopt; // corrupt or foreign file: recompute
    }
}

void ResultCache::store(const SolveReport& r, const SolveOptions& o) const
{
    fs::create_directories(dir_);
    const auto target = file_for(r.params, o.precision);
    std::random_device rd;
    const auto tmp = target.string() + ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp);
        Json j;
        j["format"] = kFormat;
        j["options"] = options_key(o);
        j["report"] = to_json(r);
        out << j.dump(1) << '\n';
        if (!out.flush())
            throw std::runtime_error("cannot write cache file " + tmp);
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot move cache file into place: " + target.string());
    }
}

} // namespace einstein

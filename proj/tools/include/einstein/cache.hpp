#pragma once

#include <einstein/json_io.hpp>

#include <filesystem>
#include <optional>

namespace einstein {

/// One JSON file per (l, m, n, precision) under a directory. A stored report is reused only
/// if the solver options it was computed with match; anything unreadable counts as a miss.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// $EINSTEIN_CACHE_DIR, else $XDG_CACHE_HOME/einstein, else ~/.cache/einstein, else ./.einstein-cache.
    static std::filesystem::path default_dir();

    std::filesystem::path file_for(const cspace::SpaceParams& p, cspace::Precision precision) const;

    std::optional<cspace::SolveReport> load(const cspace::SpaceParams& p, const cspace::SolveOptions& o) const;

    /// Writes to a temporary file in the same directory and renames it into place.
    void store(const cspace::SolveReport& r, const cspace::SolveOptions& o) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

/// The option fields that change the result; stored alongside a cached report.
Json options_key(const cspace::SolveOptions& o);

} // namespace einstein

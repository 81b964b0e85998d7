#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "qx/qengine/pipeline.hpp"

namespace qx::qengine {

struct RunConfig {
    std::string category;
    std::string functor = "zfree";
    int max_n = 2;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
};

/// Writes config.json, bases/, complexes/, maps/, homology.csv and
/// reconciliation.json under dir. Each file is written to a temporary name
/// and renamed into place. Output depends only on the pipeline and config.
void write_archive(const QPipeline& p, const Linearization& F, const RunConfig& config,
                   const std::filesystem::path& dir);

struct ArchiveContents {
    nlohmann::json config;
    Complex qprime;
    Complex q;
};

/// Throws Format for missing or malformed files. The complexes are not
/// checked for d^2 = 0 here.
ArchiveContents read_archive(const std::filesystem::path& dir);

}  // namespace qx::qengine

#include "qx/qengine/archive.hpp"

#include <fstream>

#include "qx/error.hpp"
#include "qx/linalg/json.hpp"

namespace qx::qengine {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content)
{
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(Errc::InvalidInput, "cannot write " + tmp.string());
        out << content;
        if (!out.flush())
            throw Error(Errc::InvalidInput, "cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

void write_json(const fs::path& path, const nlohmann::json& j)
{
    write_file(path, j.dump(1) + "\n");
}

nlohmann::json map_json(const ChainMap& f, const std::string& src, const std::string& dst)
{
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& m : f.components)
        comps.push_back(linalg::to_json(m));
    return {{"src", src}, {"dst", dst}, {"components", std::move(comps)}};
}

nlohmann::json read_json(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::Format, "archive file " + path.string() + " is missing");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Format, "archive file " + path.string() + ": " + e.what());
    }
}

}  // namespace

nlohmann::json RunConfig::to_json() const
{
    return {{"category", category}, {"functor", functor}, {"max_n", max_n}, {"seed", seed}, {"reduced", true}};
}

void write_archive(const QPipeline& p, const Linearization& F, const RunConfig& config, const fs::path& dir)
{
    fs::create_directories(dir);
    write_json(dir / "config.json", config.to_json());
    for (int n = 0; n <= p.N; ++n) {
        nlohmann::json basis = nlohmann::json::array();
        for (std::size_t i = 0; i < F.rank(n); ++i)
            basis.push_back(F.skeleton().label(n, i));
        write_json(dir / "bases" / ("degree_" + std::to_string(n) + ".json"), basis);
    }
    write_json(dir / "complexes" / "qprime.json", chain::to_json(p.qprime));
    write_json(dir / "complexes" / "sigma_qprime.json", chain::to_json(p.sigma_qprime));
    write_json(dir / "complexes" / "sigma_sum.json", chain::to_json(p.sigma_sum));
    write_json(dir / "complexes" / "q.json", chain::to_json(p.q));
    write_json(dir / "maps" / "s_hat0.json", map_json(p.s_hat0, "sigma_qprime", "qprime"));
    write_json(dir / "maps" / "s_hat1.json", map_json(p.s_hat1, "sigma_qprime", "qprime"));
    write_json(dir / "maps" / "s_pair.json", map_json(p.s_pair, "sigma_sum", "qprime"));
    write_json(dir / "maps" / "inclusion.json", map_json(p.inclusion, "qprime", "q"));
    write_file(dir / "homology.csv", homology_report(p, p.N).to_csv());
    write_json(dir / "reconciliation.json", p.reconciliation.to_json());
}

ArchiveContents read_archive(const fs::path& dir)
{
    if (!fs::is_directory(dir))
        throw Error(Errc::Format, "archive " + dir.string() + " is not a directory");
    ArchiveContents a;
    a.config = read_json(dir / "config.json");
    a.qprime = chain::complex_from_json(read_json(dir / "complexes" / "qprime.json"));
    a.q = chain::complex_from_json(read_json(dir / "complexes" / "q.json"));
    return a;
}

}  // namespace qx::qengine

#include "qx/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>

#include "qx/cube/skeleton.hpp"
#include "qx/error.hpp"
#include "qx/exact/audit.hpp"
#include "qx/qengine/archive.hpp"

namespace qx::cli {

namespace {

using nlohmann::json;

struct VerifyOptions {
    std::string scope = "all";
    std::string category = "vect:q=2,D=2";
    int nmax = -1;
    std::size_t samples = 200;
    std::uint64_t seed = 0;
    bool json = false;
    std::string fixture;
};

struct BuildOptions {
    qengine::RunConfig run;
    std::string out;
};

struct HomologyOptions {
    std::string archive;
    int up_to = 1 << 20;
    std::string out;
};

int exit_for(Errc code)
{
    switch (code) {
    case Errc::UniverseTooLarge: return ResourceCap;
    case Errc::Format:
    case Errc::InvalidInput:
    case Errc::OutOfRange: return Usage;
    default: return CheckFailed;
    }
}

json check_entry(const std::string& name, bool passed, json detail)
{
    detail["check"] = name;
    detail["passed"] = passed;
    return detail;
}

json verify_index(int nmax)
{
    auto rep = cube::verify_face_relations(nmax < 0 ? 4 : nmax);
    return check_entry("index-relations", rep.passed, rep.to_json());
}

json verify_fixture(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::Format, "cannot open fixture " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::Format, "fixture " + path + ": " + e.what());
    }
    auto rep = cube::validate(cube::cube_from_json(j));
    return check_entry("fixture", rep.valid(), rep.to_json());
}

json verify_diagrams(const exact::Category& cat, int nmax, std::size_t samples, std::uint64_t seed)
{
    const int top = nmax >= 0 ? nmax : cat.is_vect() ? 3 : 2;
    json checks = json::array();
    auto rel = cube::verify_diagram_relations(cat, top);
    checks.push_back(check_entry("diagram-relations", rel.passed, rel.to_json()));

    // Random cubes: valid, and the iteration repack round-trips.
    std::mt19937_64 rng(seed);
    std::size_t checked = 0, failures = 0;
    std::string first;
    for (int n = 1; n <= std::min(top, cat.is_vect() ? top : 2); ++n) {
        std::unique_ptr<cube::FinAbSkeleton> sk;
        if (cat.is_finab())
            sk = std::make_unique<cube::FinAbSkeleton>(cat, n);
        for (std::size_t s = 0; s < samples; ++s) {
            auto c = sk ? cube::random_cube(*sk, rng) : cube::random_cube(cat, n, rng);
            ++checked;
            auto v = cube::validate(c);
            bool ok = v.valid() && cube::iteration_unpack(cube::iteration_repack(c)) == c;
            if (!ok && failures++ == 0)
                first = cube::to_json(c).dump();
        }
    }
    checks.push_back(check_entry("random-cubes", failures == 0,
                                 {{"checked", checked}, {"failures", failures}, {"first_counterexample", first}}));
    return checks;
}

json verify_axioms(const exact::Category& cat, std::size_t samples, std::uint64_t seed)
{
    auto rep = exact::audit_exactness_axioms(cat, samples, seed);
    return check_entry("exactness-axioms", rep.passed(), rep.to_json());
}

int cmd_verify(const VerifyOptions& o, std::ostream& out)
{
    json report{{"scope", o.scope}, {"seed", o.seed}};
    json checks = json::array();
    if (!o.fixture.empty()) {
        checks.push_back(verify_fixture(o.fixture));
    } else {
        auto cat = exact::Category::parse(o.category);
        report["category"] = cat.to_string();
        if (o.scope == "index" || o.scope == "all")
            checks.push_back(verify_index(o.nmax));
        if (o.scope == "diagram" || o.scope == "all")
            for (auto& c : verify_diagrams(cat, o.nmax, o.samples, o.seed))
                checks.push_back(std::move(c));
        if (o.scope == "axioms" || o.scope == "all")
            checks.push_back(verify_axioms(cat, o.samples, o.seed));
    }
    bool passed = std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["passed"].get<bool>(); });
    report["checks"] = checks;
    report["passed"] = passed;
    if (o.json) {
        out << report.dump(1) << '\n';
    } else {
        for (const auto& c : checks) {
            out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["check"].get<std::string>();
            for (const char* key : {"first_counterexample", "counterexample"})
                if (c.contains(key) && !c[key].get<std::string>().empty())
                    out << "  " << c[key].get<std::string>();
            if (c.contains("violations") && !c["violations"].empty())
                out << "  " << c["violations"][0].dump();
            out << '\n';
        }
    }
    return passed ? Ok : CheckFailed;
}

int cmd_build(BuildOptions o, std::ostream& out)
{
    if (o.run.max_n < 0)
        throw Error(Errc::Format, "--max-n must be non-negative");
    auto cat = exact::Category::parse(o.run.category);
    o.run.category = cat.to_string();
    auto F = qengine::make_linearization(o.run.functor, qengine::make_skeleton(cat, o.run.max_n));
    auto p = qengine::build_q(*F, o.run.max_n);
    qengine::write_archive(p, *F, o.run, o.out);
    out << "Qprime ranks:";
    for (auto r : p.qprime.ranks)
        out << ' ' << r;
    out << "\nQ ranks:";
    for (auto r : p.q.ranks)
        out << ' ' << r;
    out << "\narchive: " << o.out << '\n';
    return Ok;
}

int cmd_homology(const HomologyOptions& o, std::ostream& out)
{
    auto a = qengine::read_archive(o.archive);
    auto csv = qengine::homology_report(a.qprime, a.q, o.up_to).to_csv();
    if (o.out.empty()) {
        out << csv;
    } else {
        std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
        if (!(f << csv))
            throw Error(Errc::InvalidInput, "cannot write " + o.out);
    }
    return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Q-construction toolkit for bounded exact categories", "qx"};
    app.require_subcommand(1);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "check index relations, cube diagrams and exactness axioms");
    verify->add_option("scope", vo.scope, "index, diagram, axioms or all")
        ->check(CLI::IsMember({"index", "diagram", "axioms", "all"}));
    verify->add_option("--category", vo.category, "vect:q=..,D=.. or finab:p=..,maxOrder=..[,maxExp=..]");
    verify->add_option("--nmax", vo.nmax, "largest cube dimension checked");
    verify->add_option("--samples", vo.samples, "random samples per check");
    verify->add_option("--seed", vo.seed);
    verify->add_flag("--json", vo.json, "print the report as JSON");
    verify->add_option("--fixture", vo.fixture, "validate a cube diagram given as JSON instead");

    BuildOptions bo;
    auto* build = app.add_subcommand("build", "build Q' and Q and write an archive");
    build->add_option("--category", bo.run.category)->required();
    build->add_option("--functor", bo.run.functor)->check(CLI::IsMember({"zfree"}));
    build->add_option("--max-n", bo.run.max_n, "top degree N");
    build->add_option("--out", bo.out, "archive directory")->required();
    build->add_option("--seed", bo.run.seed, "recorded in the archive");

    HomologyOptions ho;
    auto* homology = app.add_subcommand("homology", "homology table of an archive as CSV");
    homology->add_option("--archive", ho.archive)->required();
    homology->add_option("--up-to", ho.up_to, "highest degree reported");
    homology->add_option("--out", ho.out, "write the CSV here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }
    try {
        if (verify->parsed())
            return cmd_verify(vo, out);
        if (build->parsed())
            return cmd_build(bo, out);
        return cmd_homology(ho, out);
    } catch (const Error& e) {
        err << "qx: " << e.what() << '\n';
        return exit_for(e.code());
    } catch (const std::filesystem::filesystem_error& e) {
        err << "qx: " << e.what() << '\n';
        return Usage;
    }
}

}  // namespace qx::cli

#include "qx/cube/skeleton.hpp"

namespace qx::cube {

SkeletonList enumerate_skeleton(const Category& cat, int n, bool reduced)
{
    SkeletonList out;
    if (cat.is_vect()) {
        out.corner_forms = enumerate_corner_forms(n, cat.vect_params().max_dim, reduced);
        return out;
    }
    FinAbSkeleton sk(cat, n);
    for (std::size_t i = reduced ? 1 : 0; i < sk.size(); ++i)
        out.representatives.push_back(sk.representative(i));
    return out;
}

RelationReport verify_diagram_relations(const Category& cat, int nmax)
{
    std::vector<std::vector<CubeDiagram>> cubes;
    for (int n = 0; n <= nmax; ++n) {
        auto sk = enumerate_skeleton(cat, n, false);
        if (sk.corner_forms.empty()) {
            cubes.push_back(std::move(sk.representatives));
            continue;
        }
        cubes.emplace_back();
        for (const auto& m : sk.corner_forms)
            cubes.back().push_back(split_cube(cat, m));
    }
    RelationReport rep;
    for (const auto& rel : face_relations(nmax)) {
        ++rep.relations;
        for (const auto& c : cubes[static_cast<std::size_t>(rel.src_dim)]) {
            ++rep.checks;
            CubeDiagram left = apply_word(c, rel.lhs);
            CubeDiagram right = rel.rhs_kind == Relation::Rhs::Word       ? apply_word(c, rel.rhs)
                                : rel.rhs_kind == Relation::Rhs::Identity ? c
                                                                          : CubeDiagram(cat, rel.dst_dim);
            if (left == right)
                continue;
            ++rep.failures;
            if (rep.passed) {
                rep.passed = false;
                rep.first_counterexample = rel.family + ": " + to_string(rel.lhs) + " on " + to_json(c).dump();
            }
        }
    }
    return rep;
}

CubeDiagram random_cube(const Category& cat, int n, std::mt19937_64& rng)
{
    CubeDiagram c = split_cube(cat, random_corner_form(n, cat.vect_params().max_dim, rng));
    return transport(c, random_automorphisms(c, rng));
}

CubeDiagram random_cube(const FinAbSkeleton& skeleton, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, skeleton.size() - 1);
    const CubeDiagram& c = skeleton.representative(pick(rng));
    return transport(c, random_automorphisms(c, rng));
}

}  // namespace qx::cube

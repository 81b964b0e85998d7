#include "qx/exact/audit.hpp"

#include "qx/exact/group.hpp"
#include "qx/exact/sample.hpp"
#include "qx/exact/ses.hpp"

namespace qx::exact {

namespace {

void fail(AxiomResult& r, const std::string& what)
{
    if (r.passed) {
        r.passed = false;
        r.counterexample = what;
    }
}

}  // namespace

bool AuditReport::passed() const
{
    for (const auto& a : axioms)
        if (!a.passed)
            return false;
    return true;
}

nlohmann::json AuditReport::to_json() const
{
    nlohmann::json j;
    j["category"] = category;
    j["seed"] = seed;
    j["samples"] = samples;
    j["passed"] = passed();
    j["axioms"] = nlohmann::json::array();
    for (const auto& a : axioms) {
        nlohmann::json e{{"axiom", a.axiom}, {"passed", a.passed}, {"checked", a.checked},
                         {"out_of_universe", a.out_of_universe}};
        if (!a.passed)
            e["counterexample"] = a.counterexample;
        j["axioms"].push_back(e);
    }
    return j;
}

AuditReport audit_exactness_axioms(const Category& cat, std::size_t samples, std::uint64_t seed)
{
    Rng rng(seed);
    AuditReport rep;
    rep.category = cat.to_string();
    rep.seed = seed;
    rep.samples = samples;

    AxiomResult e1;
    e1.axiom = "E1 isomorphisms are cofibrations and fibrations";
    AxiomResult e2i;
    e2i.axiom = "E2 pushout of a cofibration is a cofibration";
    AxiomResult e2ii;
    e2ii.axiom = "E2 pullback of a fibration is a fibration";
    AxiomResult e3i;
    e3i.axiom = "E3 a cofibration is the kernel of its cokernel";
    AxiomResult e3ii;
    e3ii.axiom = "E3 a fibration is the cokernel of its kernel";

    for (std::size_t s = 0; s < samples; ++s) {
        {
            Obj x = random_obj(cat, rng);
            Mor a = random_automorphism(x, rng);
            ++e1.checked;
            if (!is_mono(a) || !is_epi(a) || !is_mono(Mor::identity(x)) || !is_epi(Mor::identity(x)))
                fail(e1, a.to_string());
        }
        {
            Mor f = random_mono(cat, rng);
            Mor g = random_mor(f.src(), random_obj(cat, rng), rng);
            auto po = pushout(f, g);
            if (!cat.in_universe(po.P)) {
                ++e2i.out_of_universe;
            } else {
                ++e2i.checked;
                std::string ctx = "f = " + f.to_string() + ", g = " + g.to_string();
                Matrix joint = Matrix::hstack(po.inj_Y.matrix(), po.inj_W.matrix());
                Matrix rel = Matrix::vstack(f.matrix(), -g.matrix());
                Moduli yw = concat(f.dst().moduli(), g.dst().moduli());
                if (compose(po.inj_Y, f) != compose(po.inj_W, g))
                    fail(e2i, "square does not commute: " + ctx);
                else if (!is_mono(po.inj_W))
                    fail(e2i, "pushed-out map is not mono: " + ctx);
                else if (subgroup(po.P.moduli(), joint).obj != po.P)
                    fail(e2i, "pushout corner not covered: " + ctx);
                else if (subgroup(yw, rel).obj.order() * po.P.order() != group_order(yw))
                    fail(e2i, "square is not cartesian: " + ctx);
                else {
                    // The induced map on cokernels coker f -> coker inj_W is an iso.
                    Quotient cf = cokernel(f);
                    Quotient cw = cokernel(po.inj_W);
                    Mor ind = induced(cf, cw, po.inj_Y.matrix());
                    if (!is_mono(ind) || !is_epi(ind))
                        fail(e2i, "cokernels do not match: " + ctx);
                }
            }
        }
        {
            Mor f = random_epi(cat, rng);
            Mor h = random_mor(random_obj(cat, rng), f.dst(), rng);
            auto pb = pullback(f, h);
            if (!cat.in_universe(pb.P)) {
                ++e2ii.out_of_universe;
            } else {
                ++e2ii.checked;
                std::string ctx = "f = " + f.to_string() + ", h = " + h.to_string();
                Matrix pair = Matrix::vstack(pb.pr_Y.matrix(), -pb.pr_W.matrix());
                Moduli yw = concat(f.src().moduli(), h.src().moduli());
                if (compose(f, pb.pr_Y) != compose(h, pb.pr_W))
                    fail(e2ii, "square does not commute: " + ctx);
                else if (!is_epi(pb.pr_W))
                    fail(e2ii, "pulled-back map is not epi: " + ctx);
                else if (subgroup(yw, pair).obj.order() != pb.P.order())
                    fail(e2ii, "pullback corner does not embed: " + ctx);
                else if (group_order(yw) != pb.P.order() * f.dst().order())
                    fail(e2ii, "square is not cocartesian: " + ctx);
            }
        }
        {
            Mor f = random_mono(cat, rng);
            Quotient q = cokernel(f);
            ++e3i.checked;
            Mor proj(f.dst(), q.obj, q.proj);
            auto why = ses_defect({f, proj});
            if (!why.empty())
                fail(e3i, f.to_string() + ": " + why);
        }
        {
            Mor g = random_epi(cat, rng);
            Sub k = kernel(g);
            ++e3ii.checked;
            Mor incl(k.obj, g.src(), k.incl);
            auto why = ses_defect({incl, g});
            if (!why.empty())
                fail(e3ii, g.to_string() + ": " + why);
        }
    }
    rep.axioms = {e1, e2i, e2ii, e3i, e3ii};
    return rep;
}

}  // namespace qx::exact

#include <doctest.h>

#include <functional>
#include <set>

#include "qx/cube/skeleton.hpp"
#include "qx/error.hpp"
#include "qx/exact/group.hpp"
#include "qx/exact/sample.hpp"

using namespace qx::cube;
using qx::Errc;
using qx::exact::compose;
using qx::linalg::Matrix;
using qx::linalg::Ring;

namespace {

const Ring Z = Ring::integers();

MultiIndex idx(const std::string& s) { return parse_index(s); }

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const qx::Error& e) {
        return e.code();
    }
    FAIL("no exception");
    return Errc::Format;
}

CornerForm cf(int n, std::vector<int> m) { return {n, std::move(m)}; }

CubeDiagram one_cube(const Category& cat, Obj x, Obj y, Obj z, const Matrix& a, const Matrix& b)
{
    CubeDiagram c(cat, 1);
    c.set_object(idx("01"), x);
    c.set_object(idx("02"), y);
    c.set_object(idx("12"), z);
    c.set_edge(1, idx("01"), Mor(x, y, a));
    c.set_edge(1, idx("02"), Mor(y, z, b));
    return c;
}

// Every automorphism of F_2^d for d <= 2.
std::vector<Mor> all_autos(const Obj& x)
{
    std::vector<Mor> out;
    const std::size_t d = x.rank();
    for (unsigned bits = 0; bits < (1u << (d * d)); ++bits) {
        Matrix m(Z, d, d);
        for (std::size_t i = 0; i < d * d; ++i)
            m.set(i / d, i % d, (bits >> i) & 1);
        Mor f(x, x, m);
        if (qx::exact::is_iso(f))
            out.push_back(f);
    }
    return out;
}

// Backtracking search for componentwise isomorphisms commuting with all edges.
bool isomorphic(const CubeDiagram& a, const CubeDiagram& b)
{
    const int n = a.dim();
    auto all = nondegenerate_indices(n);
    for (const auto& x : all)
        if (a.at(x) != b.at(x))
            return false;
    std::vector<Mor> phi(all.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == all.size())
            return true;
        for (const auto& f : all_autos(a.at(all[i]))) {
            phi[i] = f;
            bool ok = true;
            // Check edges into all[i] from already assigned indices.
            for (int axis = 1; axis <= n && ok; ++axis) {
                const auto& x = all[i];
                IndexPair p = x[static_cast<std::size_t>(axis - 1)];
                if (p == k01)
                    continue;
                MultiIndex w = with(x, axis, p == k02 ? k01 : k02);
                std::size_t wi = encode(w);
                if (wi < i)
                    ok = compose(b.edge(axis, w), phi[wi]) == compose(f, a.edge(axis, w));
            }
            if (ok && rec(i + 1))
                return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("validation")
{
    auto cat = Category::vect(2, 3);
    CHECK(validate(CubeDiagram(cat, 2)).valid());
    auto good = one_cube(cat, cat.space(1), cat.space(2), cat.space(1), Matrix(Z, 2, 1, {1, 0}), Matrix(Z, 1, 2, {0, 1}));
    CHECK(validate(good).valid());
    auto bad = one_cube(cat, cat.space(1), cat.space(2), cat.space(1), Matrix(Z, 2, 1, {1, 0}), Matrix(Z, 1, 2, {0, 0}));
    auto rep = validate(bad);
    CHECK_FALSE(rep.valid());
    CHECK(rep.has("exactness"));
    auto big = CubeDiagram(cat, 1);
    big.set_object(idx("02"), cat.space(4));
    CHECK(validate(big).has("universe"));

    // A non-commuting square in a 2-cube.
    auto sq = split_cube(cat, cf(2, {1, 0, 0, 0}));
    CHECK(validate(sq).valid());
    Obj f1 = cat.space(1);
    sq.set_edge(1, idx("01.01"), Mor::zero(f1, f1));
    auto broken = validate(sq);
    CHECK_FALSE(broken.valid());
    CHECK(broken.has("commutativity"));
}

TEST_CASE("faces")
{
    auto cat = Category::vect(2, 3);
    auto c = split_cube(cat, cf(1, {1, 2}));
    CHECK(apply_face(c, {1, 1}).at({}) == cat.space(3));
    CHECK(apply_face(c, {0, 1}).at({}) == cat.space(2));
    CHECK(apply_face(c, {2, 1}).at({}) == cat.space(1));
    std::mt19937_64 rng(1);
    auto sq = random_cube(cat, 2, rng);
    auto col = apply_face(sq, {0, 1});
    for (IndexPair p : {k01, k02, k12})
        CHECK(col.at({p}) == sq.at({k12, p}));
    CHECK(col.edge(1, idx("01")) == sq.edge(2, idx("12.01")));
    CHECK(code_of([&] { apply_face(c, {0, 2}); }) == Errc::OutOfRange);
}

TEST_CASE("degeneracies")
{
    auto cat = Category::vect(2, 3);
    CubeDiagram point(cat, 0);
    point.set_object({}, cat.space(2));
    auto s0 = apply_degeneracy(point, {0, 1});
    CHECK(s0.at(idx("01")) == cat.space(2));
    CHECK(s0.at(idx("02")) == cat.space(2));
    CHECK(s0.at(idx("12")).is_zero());
    CHECK(s0.edge(1, idx("01")) == Mor::identity(cat.space(2)));
    auto s1 = apply_degeneracy(point, {1, 1});
    CHECK(s1.at(idx("01")).is_zero());
    CHECK(s1.edge(1, idx("02")) == Mor::identity(cat.space(2)));
    CHECK(validate(s0).valid());
    CHECK(validate(s1).valid());

    // s_1(2) of an S_2 object: zero where slot 2 is 01, copies of F elsewhere.
    auto f = split_cube(cat, cf(1, {1, 1}));
    auto g = apply_degeneracy(f, {1, 2});
    for (IndexPair p : {k01, k02, k12}) {
        CHECK(g.at({p, k01}).is_zero());
        CHECK(g.at({p, k02}) == f.at({p}));
        CHECK(g.at({p, k12}) == f.at({p}));
        CHECK(g.edge(2, {p, k02}) == Mor::identity(f.at({p})));
    }
    CHECK(g.edge(1, idx("01.12")) == f.edge(1, idx("01")));
    CHECK(validate(g).valid());
}

TEST_CASE("corner forms")
{
    auto cat = Category::vect(2, 3);
    auto c = split_cube(cat, cf(1, {1, 1}));
    CHECK(c.at(idx("01")) == cat.space(1));
    CHECK(c.at(idx("02")) == cat.space(2));
    CHECK(canonical_corner_form(c) == cf(1, {1, 1}));
    CHECK(canonical_corner_form(CubeDiagram(cat, 2)).is_zero());
    CHECK(code_of([] { canonical_corner_form(CubeDiagram(Category::finab(2, 8, 4), 1)); }) ==
          Errc::NotSplitInstance);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + static_cast<int>(rng() % 3);
        auto m = random_corner_form(n, 3, rng);
        auto cube = transport(split_cube(cat, m), random_automorphisms(split_cube(cat, m), rng));
        CHECK(validate(cube).valid());
        CHECK(canonical_corner_form(cube) == m);
        for (int k = 0; k <= 2; ++k)
            for (int l = 1; l <= n; ++l) {
                auto face = apply_face(cube, {k, l});
                CHECK(canonical_corner_form(face) == corner_face(m, {k, l}));
                CHECK(corner_face(m, {k, l}).mass() <= m.mass());
                if (k == 1)
                    CHECK(corner_face(m, {k, l}).mass() == m.mass());
            }
        for (int k = 0; k <= 1; ++k)
            for (int l = 1; l <= n + 1; ++l) {
                auto deg = apply_degeneracy(cube, {k, l});
                CHECK(validate(deg).valid());
                CHECK(canonical_corner_form(deg) == corner_degeneracy(m, {k, l}));
                CHECK(corner_degeneracy(m, {k, l}).mass() == m.mass());
            }
    }
}

TEST_CASE("corner form is a complete invariant at small scale")
{
    auto cat = Category::vect(2, 2);
    std::mt19937_64 rng(5);
    int same = 0, different = 0;
    for (int t = 0; t < 60; ++t) {
        int n = 1 + static_cast<int>(rng() % 2);
        auto m1 = random_corner_form(n, 2, rng);
        auto m2 = t % 2 ? m1 : random_corner_form(n, 2, rng);
        auto a = transport(split_cube(cat, m1), random_automorphisms(split_cube(cat, m1), rng));
        auto b = transport(split_cube(cat, m2), random_automorphisms(split_cube(cat, m2), rng));
        bool iso = isomorphic(a, b);
        CHECK(iso == (canonical_corner_form(a) == canonical_corner_form(b)));
        (iso ? same : different) += 1;
    }
    CHECK(same > 20);
    CHECK(different > 5);
}

TEST_CASE("corner form enumeration")
{
    CHECK(enumerate_corner_forms(0, 2, true).size() == 2);
    auto one = enumerate_corner_forms(1, 2, true);
    std::set<std::vector<int>> got;
    for (const auto& m : one)
        got.insert(m.m);
    CHECK(got == std::set<std::vector<int>>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
    for (std::size_t i = 1; i < one.size(); ++i)
        CHECK(one[i - 1] < one[i]);
    // Stars and bars: C(2^n + D, D) - 1.
    CHECK(enumerate_corner_forms(2, 2, true).size() == 14);
    CHECK(enumerate_corner_forms(3, 2, true).size() == 44);
    CHECK(enumerate_corner_forms(4, 3, true).size() == 968);
    CHECK(code_of([] { enumerate_corner_forms(4, 3, true, 100); }) == Errc::UniverseTooLarge);
}

TEST_CASE("short exact sequences of F_2-spaces up to iso are the corner forms")
{
    // Brute force over all matrix pairs a: F^x -> F^y, b: F^y -> F^z with y <= 2.
    auto cat = Category::vect(2, 2);
    std::set<std::vector<int>> classes;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y)
            for (int z = 0; z <= 2; ++z) {
                unsigned na = static_cast<unsigned>(x * y), nb = static_cast<unsigned>(y * z);
                for (unsigned ba = 0; ba < (1u << na); ++ba)
                    for (unsigned bb = 0; bb < (1u << nb); ++bb) {
                        Matrix a(Z, y, x), b(Z, z, y);
                        for (unsigned i = 0; i < na; ++i)
                            a.set(i / x, i % x, (ba >> i) & 1);
                        for (unsigned i = 0; i < nb; ++i)
                            b.set(i / y, i % y, (bb >> i) & 1);
                        auto c = one_cube(cat, cat.space(x), cat.space(y), cat.space(z), a, b);
                        if (validate(c).valid())
                            classes.insert(canonical_corner_form(c).m);
                    }
            }
    CHECK(classes.size() == 6);  // five reduced classes plus zero
}

TEST_CASE("finite abelian skeleton")
{
    // n = 0: the objects 0, Z/2, Z/2^2, Z/4.
    auto small = Category::finab(2, 4, 4);
    CHECK(FinAbSkeleton(small, 0).size() == 4);
    // n = 1: pairs (V, A <= V) up to Aut(V): 1 + 2 + 3 + 3.
    FinAbSkeleton one(small, 1);
    CHECK(one.size() == 9);
    Obj two{{2}}, four{{4}}, twotwo{{2, 2}};
    auto nonsplit = one_cube(small, two, four, two, Matrix(Z, 1, 1, {2}), Matrix(Z, 1, 1, {1}));
    auto split = one_cube(small, two, twotwo, two, Matrix(Z, 2, 1, {1, 0}), Matrix(Z, 1, 2, {0, 1}));
    CHECK(validate(nonsplit).valid());
    CHECK(validate(split).valid());
    CHECK(one.classify(nonsplit) != one.classify(split));

    auto cat = Category::finab(2, 8, 4);
    std::mt19937_64 rng(2);
    for (int n = 0; n <= 2; ++n) {
        FinAbSkeleton sk(cat, n);
        CHECK(sk.representative(sk.zero_class()).is_zero());
        for (std::size_t i = 0; i < sk.size(); ++i) {
            const auto& rep = sk.representative(i);
            CHECK(validate(rep).valid());
            CHECK(sk.classify(rep) == i);
        }
        for (int t = 0; t < 30; ++t) {
            std::size_t i = rng() % sk.size();
            const auto& rep = sk.representative(i);
            CHECK(sk.classify(transport(rep, random_automorphisms(rep, rng))) == i);
        }
    }
    CHECK(code_of([&] { FinAbSkeleton(cat, 3); }) == Errc::UniverseTooLarge);
    CHECK(code_of([] { FinAbSkeleton(Category::finab(2, 16, 4), 1); }) == Errc::UniverseTooLarge);
}

TEST_CASE("finite abelian classes agree with an exhaustive isomorphism search for n = 1")
{
    // Two SES are isomorphic iff there are isos on all three terms commuting with both maps.
    auto cat = Category::finab(2, 8, 4);
    FinAbSkeleton sk(cat, 1);
    auto autos = [](const Obj& x) {
        std::vector<Mor> out;
        std::vector<std::vector<long>> elems = qx::exact::elements(x);
        std::function<void(std::size_t, Matrix&)> rec = [&](std::size_t g, Matrix& m) {
            if (g == x.rank()) {
                try {
                    Mor f(x, x, m);
                    if (qx::exact::is_iso(f))
                        out.push_back(f);
                } catch (const qx::Error&) {
                }
                return;
            }
            for (const auto& e : elems) {
                for (std::size_t r = 0; r < x.rank(); ++r)
                    m.set(r, g, e[r]);
                rec(g + 1, m);
            }
        };
        Matrix m(Z, x.rank(), x.rank());
        rec(0, m);
        return out;
    };
    for (std::size_t i = 0; i < sk.size(); ++i)
        for (std::size_t j = i + 1; j < sk.size(); ++j) {
            const auto& a = sk.representative(i);
            const auto& b = sk.representative(j);
            bool iso = false;
            if (a.at(idx("01")) == b.at(idx("01")) && a.at(idx("02")) == b.at(idx("02")) &&
                a.at(idx("12")) == b.at(idx("12")))
                for (const auto& py : autos(a.at(idx("02")))) {
                    // With a mono and b its cokernel, the sequences are isomorphic iff some
                    // automorphism of the middle term carries one image onto the other.
                    auto img_a = qx::exact::image(compose(py, a.edge(1, idx("01"))));
                    auto img_b = qx::exact::image(b.edge(1, idx("01")));
                    bool contained = true;
                    for (std::size_t c = 0; c < img_a.obj.rank(); ++c)
                        contained = contained && qx::exact::solve_in(img_b, b.at(idx("02")).moduli(),
                                                                     img_a.incl.submatrix(0, c, img_a.incl.rows(), 1))
                                                     .has_value();
                    if (contained && img_a.obj.order() == img_b.obj.order()) {
                        iso = true;
                        break;
                    }
                }
            CHECK_FALSE(iso);
        }
}

TEST_CASE("iteration repack")
{
    auto cat = Category::vect(2, 3);
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t < 20; ++t) {
            auto c = random_cube(cat, n, rng);
            auto s = iteration_repack(c);
            CHECK(s.f.commutes());
            CHECK(s.g.commutes());
            CHECK(s.f.is_cofibration());
            CHECK(s.g.is_fibration());
            CHECK(iteration_unpack(s) == c);
            if (n == 2)
                CHECK(qx::exact::nine_lemma_check(grid_from_cube(c), qx::exact::NineMode::OuterRowsPlusZero));
        }
    CubeDiagram point(cat, 0);
    CHECK(code_of([&] { iteration_repack(point); }) == Errc::InvalidInput);
}

TEST_CASE("cube pushouts")
{
    auto cat = Category::vect(2, 3);
    std::mt19937_64 rng(4);
    // F -> F (+) G along F -> 0 gives G.
    auto F = cf(1, {1, 0});
    auto G = cf(1, {0, 1});
    auto alpha = random_split_mono(cat, F, G, rng);
    CubeMorphism beta{alpha.src, CubeDiagram(cat, 1), {}};
    for (const auto& x : nondegenerate_indices(1))
        beta.components.push_back(Mor::zero(alpha.src.at(x), Obj::zero()));
    auto po = cube_pushout(alpha, beta);
    CHECK(validate(po.P).valid());
    CHECK(canonical_corner_form(po.P) == G);

    // Along the identity the pushout is the target.
    auto id = identity_morphism(alpha.src);
    auto po2 = cube_pushout(alpha, id);
    CHECK(canonical_corner_form(po2.P) == canonical_corner_form(alpha.dst));
    for (const auto& m : po2.inj_Y.components)
        CHECK(qx::exact::is_iso(m));

    for (int t = 0; t < 50; ++t) {
        auto x = random_corner_form(1, 1, rng);
        auto extra = random_corner_form(1, 1, rng);
        auto w = random_corner_form(1, 1, rng);
        auto a = random_split_mono(cat, x, extra, rng);
        auto b = random_split_morphism(cat, x, w, rng);
        REQUIRE(a.commutes());
        REQUIRE(b.commutes());
        auto p = cube_pushout(a, b);
        CHECK(validate(p.P).valid());
        CHECK(p.inj_Y.commutes());
        CHECK(p.inj_W.commutes());
        CHECK(p.inj_W.is_cofibration());
    }
    CHECK(code_of([&] { cube_pushout(beta, alpha); }) == Errc::NotCofibration);
    auto tiny = Category::vect(2, 1);
    auto zero1 = CubeDiagram(tiny, 1);
    auto e = split_cube(tiny, F);
    CubeMorphism into{zero1, e, {}};
    for (const auto& x : nondegenerate_indices(1))
        into.components.push_back(Mor::zero(Obj::zero(), e.at(x)));
    CHECK(code_of([&] { cube_pushout(into, into); }) == Errc::OutOfUniverse);
}

TEST_CASE("relations hold on diagrams")
{
    auto rep = verify_diagram_relations(Category::vect(2, 2), 2);
    CHECK(rep.passed);
    CHECK(rep.checks > 0);
    auto fin = verify_diagram_relations(Category::finab(2, 4, 4), 1);
    CHECK(fin.passed);
    INFO(rep.first_counterexample, fin.first_counterexample);
}

TEST_CASE("json round trips")
{
    auto cat = Category::vect(2, 3);
    std::mt19937_64 rng(6);
    auto c = random_cube(cat, 2, rng);
    CHECK(cube_from_json(to_json(c)) == c);
    FinAbSkeleton sk(Category::finab(2, 8, 4), 2);
    auto d = random_cube(sk, rng);
    CHECK(cube_from_json(to_json(d)) == d);
    auto m = cf(2, {0, 2, 1, 0});
    CHECK(corner_form_from_json(to_json(m)) == m);
    CHECK(to_json(m).dump() == R"({"m":{"01.12":2,"12.01":1},"n":2})");
    CHECK(code_of([] { cube_from_json(nlohmann::json{{"n", 1}}); }) == Errc::Format);
}

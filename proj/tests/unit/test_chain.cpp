#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qx/chain/complex.hpp"
#include "qx/error.hpp"
#include "qx/linalg/smith.hpp"

using namespace qx::chain;
using qx::Errc;
using qx::linalg::Int;
using qx::linalg::Ring;

namespace {

const Ring Z = Ring::integers();

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    Matrix m(Z, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, d(rng));
    return m;
}

// Each differential lands in the kernel of the previous one.
Complex random_complex(std::mt19937_64& rng, int length)
{
    Complex c;
    c.ranks.push_back(1 + rng() % 3);
    for (int n = 0; n + 1 < length; ++n) {
        std::size_t next = rng() % 4;
        Matrix ker = n == 0 ? Matrix::identity(Z, c.ranks[0])
                            : qx::linalg::integer_kernel(c.diffs.back());
        c.ranks.push_back(next);
        c.diffs.push_back(ker * random_matrix(rng, ker.cols(), next, -2, 2));
    }
    return c;
}

Complex two()
{
    return Complex{{1, 1}, {Matrix(Z, 1, 1, {2})}};
}

// A unimodular matrix as a product of elementary operations.
Matrix random_unimodular(std::mt19937_64& rng, std::size_t n)
{
    Matrix u = Matrix::identity(Z, n);
    for (int t = 0; n > 1 && t < 6; ++t) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j)
            continue;
        Matrix e = Matrix::identity(Z, n);
        e.set(i, j, static_cast<long>(rng() % 5) - 2);
        u = e * u;
    }
    return u;
}

Matrix inverse_unimodular(const Matrix& u)
{
    auto x = qx::linalg::solve_integer(u, Matrix::identity(Z, u.rows()));
    REQUIRE(x);
    return *x;
}

long euler_rank(const Complex& c, int n)
{
    return static_cast<long>(c.rank(n));
}

}  // namespace

TEST_CASE("complex checks")
{
    CHECK(check_complex(Complex{}));
    CHECK(check_complex(two()));
    Complex bad{{1, 1, 1}, {Matrix(Z, 1, 1, {2}), Matrix(Z, 1, 1, {3})}};
    CHECK_FALSE(check_complex(bad));
    Complex misshapen{{1, 2}, {Matrix(Z, 1, 1, {2})}};
    CHECK_FALSE(check_complex(misshapen));
    CHECK(misshapen.rank(7) == 0);
    CHECK(misshapen.diff(5).rows() == 0);
}

TEST_CASE("shift")
{
    CHECK(shift(Complex{}).ranks == std::vector<std::size_t>{0});
    auto s = shift(two());
    CHECK(s.ranks == std::vector<std::size_t>{0, 1, 1});
    CHECK(s.diffs[0].rows() == 0);
    CHECK(s.diffs[0].cols() == 1);
    CHECK(s.diffs[1] == Matrix(Z, 1, 1, {-2}));
    CHECK(check_complex(s));
    CHECK(shift(s).ranks == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("direct sum")
{
    CHECK(direct_sum(two(), Complex{}) == two());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto a = random_complex(rng, 1 + static_cast<int>(rng() % 5));
        auto b = random_complex(rng, 1 + static_cast<int>(rng() % 5));
        REQUIRE(check_complex(a));
        REQUIRE(check_complex(b));
        auto s = direct_sum(a, b);
        CHECK(check_complex(s));
        for (int n = 0; n < 6; ++n)
            CHECK(s.rank(n) == a.rank(n) + b.rank(n));
    }
}

TEST_CASE("homology")
{
    for (const auto& h : homology_table(Complex{}, 3))
        CHECK(h.is_trivial());
    auto h = homology_table(two(), 2);
    CHECK(h[0].betti == 0);
    CHECK(h[0].torsion == std::vector<Int>{2});
    CHECK(h[1].is_trivial());
    CHECK(h[2].is_trivial());
    Complex bad{{1, 1, 1}, {Matrix(Z, 1, 1, {2}), Matrix(Z, 1, 1, {3})}};
    try {
        homology_table(bad, 1);
        FAIL("expected an error");
    } catch (const qx::Error& e) {
        CHECK(e.code() == Errc::CompositionNonzero);
    }
    // H_0 is the cokernel of the first differential; compare with determinantal divisors.
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        auto c = random_complex(rng, 3);
        auto h0 = homology_table(c, 0)[0];
        auto f = oracle::naive_invariant_factors(c.diff(0));
        std::vector<Int> torsion;
        for (const auto& x : f)
            if (x > 1)
                torsion.push_back(x);
        CHECK(h0.betti == c.rank(0) - f.size());
        CHECK(h0.torsion == torsion);
    }
}

TEST_CASE("homology survives a change of basis")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
        auto c = random_complex(rng, 4);
        std::size_t k = 1 + rng() % 2;
        if (c.rank(static_cast<int>(k)) == 0)
            continue;
        Matrix u = random_unimodular(rng, c.rank(static_cast<int>(k)));
        Matrix ui = inverse_unimodular(u);
        Complex d = c;
        d.diffs[k - 1] = c.diffs[k - 1] * ui;
        if (k < c.diffs.size())
            d.diffs[k] = u * c.diffs[k];
        REQUIRE(check_complex(d));
        CHECK(homology_table(c, 3) == homology_table(d, 3));
    }
}

TEST_CASE("mapping cone")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        auto a = random_complex(rng, 4);
        ChainMap id{a, a, {}};
        for (int n = 0; n < a.length(); ++n)
            id.components.push_back(Matrix::identity(Z, a.rank(n)));
        REQUIRE(check_chain_map(id));
        auto cone = mapping_cone(id);
        CHECK(check_complex(cone.complex));
        for (const auto& h : homology_table(cone.complex, cone.complex.length()))
            CHECK(h.is_trivial());
    }

    // Cone of a zero map: b (+) shift(a).
    auto a = two();
    Complex b{{2}, {}};
    ChainMap zero{a, b, {}};
    auto cone = mapping_cone(zero);
    CHECK(cone.complex.ranks == std::vector<std::size_t>{2, 1, 1});
    CHECK(cone.complex.diffs[0] == Matrix(Z, 2, 1));
    CHECK(cone.complex.diffs[1] == Matrix(Z, 1, 1, {-2}));

    // A chain map from a complex into a sum with itself, and the cone sequence.
    for (int t = 0; t < 30; ++t) {
        auto x = random_complex(rng, 4);
        auto y = random_complex(rng, 4);
        auto sum = direct_sum(x, y);
        ChainMap incl{x, sum, {}};
        for (int n = 0; n < sum.length(); ++n)
            incl.components.push_back(
                Matrix::vstack(Matrix::identity(Z, x.rank(n)), Matrix(Z, y.rank(n), x.rank(n))));
        REQUIRE(check_chain_map(incl));
        auto c = mapping_cone(incl);
        CHECK(check_complex(c.complex));
        CHECK(check_chain_map(c.inclusion));
        CHECK(check_chain_map(c.projection));
        for (int n = 0; n < c.complex.length(); ++n) {
            CHECK((c.projection.component(n) * c.inclusion.component(n)).is_zero());
            CHECK(euler_rank(c.complex, n) == euler_rank(sum, n) + euler_rank(x, n - 1));
        }
        // The cone of an inclusion of a summand has the homology of the other summand.
        CHECK(homology_table(c.complex, 2) == homology_table(y, 2));
    }

    ChainMap broken{two(), two(), {Matrix(Z, 1, 1, {1}), Matrix(Z, 1, 1, {0})}};
    CHECK_FALSE(check_chain_map(broken));
    try {
        mapping_cone(broken);
        FAIL("expected an error");
    } catch (const qx::Error& e) {
        CHECK(e.code() == Errc::InvalidChainMap);
    }
}

TEST_CASE("truncation")
{
    std::mt19937_64 rng(1);
    auto c = random_complex(rng, 5);
    auto t = truncate(c, 2);
    CHECK(t.ranks.size() == 3);
    CHECK(t.diffs.size() == 2);
    CHECK(homology_table(t, 1) == homology_table(c, 1));
}

TEST_CASE("serialization")
{
    std::mt19937_64 rng(5);
    auto c = random_complex(rng, 4);
    CHECK(complex_from_json(to_json(c)) == c);
    CHECK(to_json(two()).dump() ==
          R"({"diffs":[{"cols":1,"entries":[[2]],"ring":"Z","rows":1}],"ranks":[1,1]})");
    auto j = to_json(two());
    j["ranks"] = {1, 2};
    try {
        complex_from_json(j);
        FAIL("expected an error");
    } catch (const qx::Error& e) {
        CHECK(e.code() == Errc::Format);
    }
    qx::linalg::PresentedAbGroup g{1, {2, 4}};
    CHECK(homology_csv({g, {}}) == "degree,betti,torsion\n0,1,2;4\n1,0,\n");
}

#include "qx/cube/corner.hpp"

#include "qx/error.hpp"

namespace qx::cube {

using linalg::Matrix;
using linalg::Ring;

namespace {

std::size_t pow2(int n)
{
    return std::size_t{1} << n;
}

// Position of each (corner, copy) in the basis of F(x), or -1 when absent.
std::vector<long> offsets(const CornerForm& m, const MultiIndex& x)
{
    std::vector<long> off(m.m.size(), -1);
    long pos = 0;
    for (std::size_t c = 0; c < m.m.size(); ++c) {
        MultiIndex ci = corner_index(c, m.n);
        bool ok = true;
        for (int r = 0; r < m.n; ++r)
            ok = ok && compatible(ci[static_cast<std::size_t>(r)], x[static_cast<std::size_t>(r)]);
        if (ok) {
            off[c] = pos;
            pos += m.m[c];
        }
    }
    return off;
}

int dim_at(const CornerForm& m, const MultiIndex& x)
{
    auto off = offsets(m, x);
    int d = 0;
    for (std::size_t c = 0; c < off.size(); ++c)
        if (off[c] >= 0)
            d += m.m[c];
    return d;
}

// c' <= c in every coordinate, with 01 < 12.
bool below(std::size_t lower, std::size_t upper)
{
    return (lower & ~upper) == 0;
}

void require_vect(const Category& cat, const char* op)
{
    if (!cat.is_vect())
        throw Error(Errc::NotSplitInstance, std::string(op) + " is only defined for vector-space instances");
}

// Builds the morphism whose component at x applies block(c', c) on the
// (c -> c') part whenever both corners are present at x.
CubeMorphism split_with_blocks(const Category& cat, const CornerForm& src, const CornerForm& dst,
                               const std::vector<std::vector<Matrix>>& block)
{
    CubeMorphism f{split_cube(cat, src), split_cube(cat, dst), {}};
    for (const auto& x : nondegenerate_indices(src.n)) {
        auto so = offsets(src, x);
        auto dof = offsets(dst, x);
        Matrix m(Ring::integers(), static_cast<std::size_t>(dim_at(dst, x)), static_cast<std::size_t>(dim_at(src, x)));
        for (std::size_t c = 0; c < so.size(); ++c)
            for (std::size_t d = 0; d < dof.size(); ++d) {
                if (so[c] < 0 || dof[d] < 0 || !below(d, c))
                    continue;
                const Matrix& b = block[d][c];
                for (std::size_t i = 0; i < b.rows(); ++i)
                    for (std::size_t j = 0; j < b.cols(); ++j)
                        m.set(static_cast<std::size_t>(dof[d]) + i, static_cast<std::size_t>(so[c]) + j, b(i, j));
            }
        f.components.push_back(Mor(f.src.at(x), f.dst.at(x), m));
    }
    return f;
}

Matrix random_block(std::size_t r, std::size_t c, long q, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> d(0, q - 1);
    Matrix b(Ring::integers(), r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            b.set(i, j, d(rng));
    return b;
}

}  // namespace

CornerForm CornerForm::zero(int n)
{
    return {n, std::vector<int>(pow2(n), 0)};
}

int CornerForm::mass() const
{
    int s = 0;
    for (int v : m)
        s += v;
    return s;
}

bool CornerForm::is_zero() const
{
    return mass() == 0;
}

MultiIndex corner_index(std::size_t code, int n)
{
    MultiIndex idx(static_cast<std::size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        idx[static_cast<std::size_t>(r)] = (code & 1) ? k12 : k01;
        code >>= 1;
    }
    return idx;
}

bool compatible(IndexPair c, IndexPair p)
{
    return p == k02 || p == c;
}

CubeDiagram split_cube(const Category& cat, const CornerForm& m)
{
    require_vect(cat, "split_cube");
    if (m.m.size() != pow2(m.n))
        throw Error(Errc::ShapeMismatch, "corner form has " + std::to_string(m.m.size()) + " entries for n=" +
                                             std::to_string(m.n));
    const int n = m.n;
    CubeDiagram c(cat, n);
    for (const auto& x : nondegenerate_indices(n))
        c.set_object(x, cat.space(dim_at(m, x)));
    for (int axis = 1; axis <= n; ++axis)
        for (const auto& x : nondegenerate_indices(n)) {
            if (x[static_cast<std::size_t>(axis - 1)] == k12)
                continue;
            MultiIndex y = next_along(x, axis);
            auto ox = offsets(m, x);
            auto oy = offsets(m, y);
            Matrix e(Ring::integers(), c.at(y).rank(), c.at(x).rank());
            for (std::size_t k = 0; k < ox.size(); ++k)
                if (ox[k] >= 0 && oy[k] >= 0)
                    for (int i = 0; i < m.m[k]; ++i)
                        e.set(static_cast<std::size_t>(oy[k] + i), static_cast<std::size_t>(ox[k] + i), 1);
            c.set_edge(axis, x, Mor(c.at(x), c.at(y), e));
        }
    return c;
}

CornerForm canonical_corner_form(const CubeDiagram& c)
{
    require_vect(c.category(), "canonical_corner_form");
    const int n = c.dim();
    CornerForm m = CornerForm::zero(n);
    // Each corner index sees only its own corner, so the inversion is the identity there.
    for (std::size_t k = 0; k < m.m.size(); ++k)
        m.m[k] = static_cast<int>(c.at(corner_index(k, n)).rank());
    for (const auto& x : nondegenerate_indices(n))
        if (dim_at(m, x) != static_cast<int>(c.at(x).rank()))
            throw Error(Errc::InvalidInput, "dimension at (" + to_string(x) + ") is " +
                                                std::to_string(c.at(x).rank()) + " but corners give " +
                                                std::to_string(dim_at(m, x)));
    return m;
}

CornerForm corner_face(const CornerForm& m, FaceSpec spec)
{
    if (spec.k < 0 || spec.k > 2 || spec.l < 1 || spec.l > m.n)
        throw Error(Errc::OutOfRange, "corner face out of range");
    CornerForm out = CornerForm::zero(m.n - 1);
    for (std::size_t c = 0; c < out.m.size(); ++c) {
        MultiIndex ci = corner_index(c, out.n);
        auto at = [&](IndexPair p) {
            MultiIndex full = ci;
            full.insert(full.begin() + (spec.l - 1), p);
            std::size_t code = 0;
            for (const auto& q : full)
                code = code * 2 + (q == k12 ? 1 : 0);
            return m.m[code];
        };
        if (spec.k == 0)
            out.m[c] = at(k12);
        else if (spec.k == 2)
            out.m[c] = at(k01);
        else
            out.m[c] = at(k01) + at(k12);
    }
    return out;
}

CornerForm corner_degeneracy(const CornerForm& m, DegenSpec spec)
{
    const int n = m.n + 1;
    if (spec.k < 0 || spec.k > 1 || spec.l < 1 || spec.l > n)
        throw Error(Errc::OutOfRange, "corner degeneracy out of range");
    CornerForm out = CornerForm::zero(n);
    const IndexPair kept = spec.k == 0 ? k01 : k12;
    for (std::size_t c = 0; c < out.m.size(); ++c) {
        MultiIndex ci = corner_index(c, n);
        if (ci[static_cast<std::size_t>(spec.l - 1)] != kept)
            continue;
        ci.erase(ci.begin() + (spec.l - 1));
        std::size_t code = 0;
        for (const auto& q : ci)
            code = code * 2 + (q == k12 ? 1 : 0);
        out.m[c] = m.m[code];
    }
    return out;
}

std::vector<CornerForm> enumerate_corner_forms(int n, int max_mass, bool reduced, std::size_t cap)
{
    if (n < 0 || n > 16 || max_mass < 0)
        throw Error(Errc::UniverseTooLarge, "corner forms for n=" + std::to_string(n));
    std::vector<CornerForm> out;
    CornerForm cur = CornerForm::zero(n);
    // Depth-first with ascending values gives lexicographic order.
    auto rec = [&](auto&& self, std::size_t cell, int left) -> void {
        if (cell == cur.m.size()) {
            if (!(reduced && cur.is_zero())) {
                if (out.size() >= cap)
                    throw Error(Errc::UniverseTooLarge, "more than " + std::to_string(cap) + " corner forms at n=" +
                                                           std::to_string(n) + ", D=" + std::to_string(max_mass));
                out.push_back(cur);
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur.m[cell] = v;
            self(self, cell + 1, left - v);
        }
        cur.m[cell] = 0;
    };
    rec(rec, 0, max_mass);
    return out;
}

nlohmann::json to_json(const CornerForm& m)
{
    nlohmann::json j{{"n", m.n}, {"m", nlohmann::json::object()}};
    for (std::size_t c = 0; c < m.m.size(); ++c)
        if (m.m[c] != 0)
            j["m"][to_string(corner_index(c, m.n))] = m.m[c];
    return j;
}

CornerForm corner_form_from_json(const nlohmann::json& j)
{
    try {
        CornerForm m = CornerForm::zero(j.at("n").get<int>());
        for (auto it = j.at("m").begin(); it != j.at("m").end(); ++it) {
            MultiIndex idx = parse_index(it.key());
            if (static_cast<int>(idx.size()) != m.n)
                throw Error(Errc::Format, "corner '" + it.key() + "' has the wrong length");
            std::size_t code = 0;
            for (const auto& p : idx) {
                if (p != k01 && p != k12)
                    throw Error(Errc::Format, "corner '" + it.key() + "' is not in {01,12}^n");
                code = code * 2 + (p == k12 ? 1 : 0);
            }
            int v = it.value().get<int>();
            if (v < 0)
                throw Error(Errc::Format, "negative multiplicity at '" + it.key() + "'");
            m.m[code] = v;
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Format, std::string("corner form json: ") + e.what());
    }
}

CubeMorphism random_split_morphism(const Category& cat, const CornerForm& src, const CornerForm& dst,
                                   std::mt19937_64& rng)
{
    require_vect(cat, "random_split_morphism");
    const long q = cat.vect_params().q;
    std::vector<std::vector<Matrix>> block(dst.m.size(), std::vector<Matrix>(src.m.size()));
    for (std::size_t d = 0; d < dst.m.size(); ++d)
        for (std::size_t c = 0; c < src.m.size(); ++c)
            block[d][c] = random_block(static_cast<std::size_t>(dst.m[d]), static_cast<std::size_t>(src.m[c]), q, rng);
    return split_with_blocks(cat, src, dst, block);
}

CubeMorphism random_split_mono(const Category& cat, const CornerForm& src, const CornerForm& extra,
                               std::mt19937_64& rng)
{
    require_vect(cat, "random_split_mono");
    const long q = cat.vect_params().q;
    CornerForm dst = src;
    for (std::size_t c = 0; c < dst.m.size(); ++c)
        dst.m[c] += extra.m[c];
    std::vector<std::vector<Matrix>> block(dst.m.size(), std::vector<Matrix>(src.m.size()));
    for (std::size_t d = 0; d < dst.m.size(); ++d)
        for (std::size_t c = 0; c < src.m.size(); ++c) {
            auto rows = static_cast<std::size_t>(dst.m[d]), cols = static_cast<std::size_t>(src.m[c]);
            if (d == c) {
                // Identity on top: injective, and lower blocks keep it triangular.
                block[d][c] = Matrix(Ring::integers(), rows, cols);
                for (std::size_t i = 0; i < cols; ++i)
                    block[d][c].set(i, i, 1);
            } else {
                block[d][c] = random_block(rows, cols, q, rng);
            }
        }
    return split_with_blocks(cat, src, dst, block);
}

CornerForm random_corner_form(int n, int max_mass, std::mt19937_64& rng)
{
    CornerForm m = CornerForm::zero(n);
    std::uniform_int_distribution<int> total(0, max_mass);
    std::uniform_int_distribution<std::size_t> cell(0, m.m.size() - 1);
    for (int left = total(rng); left > 0; --left)
        ++m.m[cell(rng)];
    return m;
}

}  // namespace qx::cube

#include "qx/cube/finab.hpp"

#include <functional>
#include <set>

#include "qx/error.hpp"
#include "qx/exact/group.hpp"

namespace qx::cube {

using linalg::Matrix;
using linalg::Ring;

namespace {

constexpr long kMaxAmbient = 8;

std::size_t element_index(const Obj& v, const std::vector<long>& e)
{
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.rank(); ++i)
        idx = idx * static_cast<std::size_t>(v.orders[i]) + static_cast<std::size_t>(e[i]);
    return idx;
}

std::uint32_t image_mask(const Obj& v, const Mor& f)
{
    std::uint32_t mask = 0;
    for (const auto& x : exact::elements(f.src()))
        mask |= std::uint32_t{1} << element_index(v, exact::apply(f, x));
    return mask;
}

Matrix generators(const Obj& v, const std::vector<std::vector<long>>& elems, std::uint32_t mask)
{
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (mask >> i & 1)
            cols.push_back(i);
    Matrix g(Ring::integers(), v.rank(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < v.rank(); ++r)
            g.set(r, c, elems[cols[c]][r]);
    return g;
}

}  // namespace

FinAbSkeleton::FinAbSkeleton(const Category& cat, int n) : cat_(cat), n_(n)
{
    if (!cat.is_finab())
        throw Error(Errc::InvalidInput, "FinAbSkeleton needs a finite abelian group instance");
    if (n < 0 || n > 2)
        throw Error(Errc::UniverseTooLarge, "finite abelian cube enumeration is capped at n <= 2, got n=" +
                                                std::to_string(n));
    if (cat.finab_params().max_order > kMaxAmbient)
        throw Error(Errc::UniverseTooLarge, "finite abelian cube enumeration is capped at maxOrder <= 8, got " +
                                                std::to_string(cat.finab_params().max_order));

    for (const auto& v : cat.universe()) {
        Ambient a;
        a.V = v;
        a.elements = exact::elements(v);
        const std::size_t size = a.elements.size();
        // Automorphisms: every assignment of generators to elements of dividing order.
        std::vector<std::vector<long>> choices(v.rank());
        std::vector<Mor> gens_images;
        std::vector<std::size_t> pick(v.rank(), 0);
        for (std::size_t g = 0; g < v.rank(); ++g)
            for (std::size_t e = 0; e < size; ++e) {
                bool ok = true;
                for (std::size_t r = 0; r < v.rank(); ++r)
                    ok = ok && (a.elements[e][r] * v.orders[g]) % v.orders[r] == 0;
                if (ok)
                    choices[g].push_back(static_cast<long>(e));
            }
        std::function<void(std::size_t)> rec = [&](std::size_t g) {
            if (g == v.rank()) {
                Matrix m(Ring::integers(), v.rank(), v.rank());
                for (std::size_t c = 0; c < v.rank(); ++c)
                    for (std::size_t r = 0; r < v.rank(); ++r)
                        m.set(r, c, a.elements[static_cast<std::size_t>(choices[c][pick[c]])][r]);
                Mor f(v, v, m);
                std::vector<int> perm(size);
                std::vector<bool> hit(size, false);
                for (std::size_t e = 0; e < size; ++e) {
                    std::size_t img = element_index(v, exact::apply(f, a.elements[e]));
                    if (hit[img])
                        return;
                    hit[img] = true;
                    perm[e] = static_cast<int>(img);
                }
                a.automorphisms.push_back(std::move(perm));
                return;
            }
            for (pick[g] = 0; pick[g] < choices[g].size(); ++pick[g])
                rec(g + 1);
        };
        rec(0);
        // Subgroups: subsets containing 0 and closed under addition.
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size); mask += 2) {
            bool closed = true;
            for (std::size_t i = 0; i < size && closed; ++i)
                for (std::size_t j = 0; j < size && closed; ++j) {
                    if (!(mask >> i & 1) || !(mask >> j & 1))
                        continue;
                    std::vector<long> s(v.rank());
                    for (std::size_t r = 0; r < v.rank(); ++r)
                        s[r] = (a.elements[i][r] + a.elements[j][r]) % v.orders[r];
                    closed = mask >> element_index(v, s) & 1;
                }
            if (closed)
                a.subgroups.push_back(mask);
        }
        ambient_index_[v] = ambients_.size();
        ambients_.push_back(std::move(a));
    }

    std::set<Key> found;
    for (std::size_t ai = 0; ai < ambients_.size(); ++ai) {
        const Ambient& a = ambients_[ai];
        std::vector<std::uint32_t> tuple(static_cast<std::size_t>(n));
        std::function<void(std::size_t)> rec = [&](std::size_t r) {
            if (r == tuple.size()) {
                found.insert({ai, canonical(a, tuple)});
                return;
            }
            for (auto s : a.subgroups) {
                tuple[r] = s;
                rec(r + 1);
            }
        };
        rec(0);
    }
    for (const auto& key : found) {
        index_[key] = keys_.size();
        keys_.push_back(key);
        reps_.push_back(build(ambients_[key.first], key.second));
    }
}

std::vector<std::uint32_t> FinAbSkeleton::canonical(const Ambient& a, const std::vector<std::uint32_t>& masks) const
{
    std::vector<std::uint32_t> best;
    for (const auto& perm : a.automorphisms) {
        std::vector<std::uint32_t> img(masks.size(), 0);
        for (std::size_t r = 0; r < masks.size(); ++r)
            for (std::size_t e = 0; e < perm.size(); ++e)
                if (masks[r] >> e & 1)
                    img[r] |= std::uint32_t{1} << perm[e];
        if (best.empty() || img < best)
            best = std::move(img);
    }
    return best;
}

CubeDiagram FinAbSkeleton::build(const Ambient& a, const std::vector<std::uint32_t>& masks) const
{
    // F(x) is the image of S_x = meet of A_r over x_r = 01 in V / T_x, T_x = sum of A_r over x_r = 12.
    const Obj& v = a.V;
    const std::uint32_t all = (std::uint32_t{1} << a.elements.size()) - 1;
    std::vector<exact::Quotient> quo;
    std::vector<exact::Sub> sub;
    CubeDiagram c(cat_, n_);
    for (const auto& x : nondegenerate_indices(n_)) {
        std::uint32_t s = all, t = 1;
        for (int r = 0; r < n_; ++r) {
            if (x[static_cast<std::size_t>(r)] == k01)
                s &= masks[static_cast<std::size_t>(r)];
            if (x[static_cast<std::size_t>(r)] == k12)
                t |= masks[static_cast<std::size_t>(r)];
        }
        quo.push_back(exact::cokernel(v.moduli(), generators(v, a.elements, t)));
        const auto& q = quo.back();
        sub.push_back(exact::subgroup(q.obj.moduli(), q.proj * generators(v, a.elements, s)));
        c.set_object(x, sub.back().obj);
    }
    for (int axis = 1; axis <= n_; ++axis)
        for (const auto& x : nondegenerate_indices(n_)) {
            if (x[static_cast<std::size_t>(axis - 1)] == k12)
                continue;
            MultiIndex y = next_along(x, axis);
            const std::size_t cx = encode(x), cy = encode(y);
            Matrix through = quo[cy].proj * quo[cx].lift * sub[cx].incl;
            auto coords = exact::solve_in(sub[cy], quo[cy].obj.moduli(), through);
            if (!coords)
                throw Error(Errc::InvalidInput, "subquotient arrow does not land in its target");
            c.set_edge(axis, x, Mor(c.at(x), c.at(y), *coords));
        }
    return c;
}

std::size_t FinAbSkeleton::classify(const CubeDiagram& c) const
{
    if (c.dim() != n_)
        throw Error(Errc::InvalidInput, "cube dimension " + std::to_string(c.dim()) + " does not match skeleton " +
                                            std::to_string(n_));
    const MultiIndex top(static_cast<std::size_t>(n_), k02);
    auto it = ambient_index_.find(c.at(top));
    if (it == ambient_index_.end())
        throw Error(Errc::InvalidInput, "object " + c.at(top).to_string() + " is outside the universe");
    const Ambient& a = ambients_[it->second];
    std::vector<std::uint32_t> masks;
    for (int axis = 1; axis <= n_; ++axis)
        masks.push_back(image_mask(a.V, c.edge(axis, with(top, axis, k01))));
    auto found = index_.find({it->second, canonical(a, masks)});
    if (found == index_.end())
        throw Error(Errc::InvalidInput, "cube has no class in the skeleton");
    return found->second;
}

}  // namespace qx::cube

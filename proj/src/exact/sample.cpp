#include "qx/exact/sample.hpp"

#include <numeric>

#include "qx/error.hpp"
#include "qx/exact/group.hpp"

namespace qx::exact {

namespace {

constexpr int kMaxTries = 10000;

long pick(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace

Obj random_obj(const Category& cat, Rng& rng)
{
    auto u = cat.universe();
    return u[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(u.size()) - 1))];
}

Mor random_mor(const Obj& src, const Obj& dst, Rng& rng)
{
    Matrix m(Ring::integers(), dst.rank(), src.rank());
    for (std::size_t r = 0; r < dst.rank(); ++r)
        for (std::size_t c = 0; c < src.rank(); ++c) {
            long step = dst.orders[r] / std::gcd(dst.orders[r], src.orders[c]);
            m.set(r, c, pick(rng, 0, dst.orders[r] / step - 1) * step);
        }
    return Mor(src, dst, m);
}

Mor random_mono_from(const Category& cat, const Obj& src, Rng& rng)
{
    auto u = cat.universe();
    std::vector<Obj> targets;
    for (const auto& y : u)
        if (y.order() >= src.order())
            targets.push_back(y);
    for (int t = 0; t < kMaxTries; ++t) {
        const Obj& y = targets[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(targets.size()) - 1))];
        Mor f = random_mor(src, y, rng);
        if (is_mono(f))
            return f;
    }
    throw Error(Errc::InvalidInput, "no mono found out of " + src.to_string());
}

Mor random_mono(const Category& cat, Rng& rng)
{
    for (int t = 0; t < kMaxTries; ++t) {
        Obj x = random_obj(cat, rng);
        Obj y = random_obj(cat, rng);
        if (x.order() > y.order())
            std::swap(x, y);
        Mor f = random_mor(x, y, rng);
        if (is_mono(f))
            return f;
    }
    throw Error(Errc::InvalidInput, "mono sampling did not converge");
}

Mor random_epi(const Category& cat, Rng& rng)
{
    for (int t = 0; t < kMaxTries; ++t) {
        Obj y = random_obj(cat, rng);
        Obj z = random_obj(cat, rng);
        if (y.order() < z.order())
            std::swap(y, z);
        Mor f = random_mor(y, z, rng);
        if (is_epi(f))
            return f;
    }
    throw Error(Errc::InvalidInput, "epi sampling did not converge");
}

Mor random_automorphism(const Obj& x, Rng& rng)
{
    for (int t = 0; t < kMaxTries; ++t) {
        Mor f = random_mor(x, x, rng);
        if (is_epi(f))
            return f;
    }
    throw Error(Errc::InvalidInput, "automorphism sampling did not converge");
}

}  // namespace qx::exact

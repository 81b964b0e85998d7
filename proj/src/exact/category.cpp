#include "qx/exact/category.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "qx/error.hpp"

namespace qx::exact {

namespace {

bool is_power_of(long n, long p)
{
    if (n < 1)
        return false;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

// All ascending sequences of p-powers (each in (1, max_exp]) with product <= max_order.
void partitions(long p, long max_order, long max_exp, long min_factor, std::vector<long>& cur,
                std::vector<Obj>& out)
{
    out.push_back(Obj{cur});
    long product = 1;
    for (long f : cur)
        product *= f;
    for (long f = min_factor; f <= max_exp && product * f <= max_order; f *= p) {
        cur.push_back(f);
        partitions(p, max_order, max_exp, f, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Obj Obj::canonical(std::vector<long> orders)
{
    std::erase_if(orders, [](long o) { return o == 1; });
    std::sort(orders.begin(), orders.end());
    return Obj{std::move(orders)};
}

Int Obj::order() const
{
    Int n = 1;
    for (long o : orders)
        n *= o;
    return n;
}

std::vector<Int> Obj::moduli() const
{
    return {orders.begin(), orders.end()};
}

std::string Obj::to_string() const
{
    if (orders.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < orders.size(); ++i)
        os << (i ? "+" : "") << "Z/" << orders[i];
    return os.str();
}

Category Category::vect(long q, int max_dim)
{
    if (!linalg::is_prime(q))
        throw Error(Errc::Format, "vect: q=" + std::to_string(q) + " must be prime");
    if (max_dim < 0)
        throw Error(Errc::Format, "vect: D must be non-negative");
    return Category(VectParams{q, max_dim});
}

Category Category::finab(long p, long max_order, long max_exp)
{
    if (!linalg::is_prime(p))
        throw Error(Errc::Format, "finab: p=" + std::to_string(p) + " must be prime");
    if (!is_power_of(max_order, p) || !is_power_of(max_exp, p))
        throw Error(Errc::Format, "finab: maxOrder and maxExp must be powers of p");
    if (max_exp > max_order)
        throw Error(Errc::Format, "finab: maxExp exceeds maxOrder");
    return Category(FinAbParams{p, max_order, max_exp});
}

Category Category::parse(std::string_view config)
{
    auto colon = config.find(':');
    if (colon == std::string_view::npos)
        throw Error(Errc::Format, "category config '" + std::string(config) + "' has no ':'");
    std::string kind(config.substr(0, colon));
    std::map<std::string, long> kv;
    std::string rest(config.substr(colon + 1));
    std::istringstream is(rest);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error(Errc::Format, "category config item '" + item + "' is not key=value");
        try {
            std::size_t used = 0;
            long v = std::stol(item.substr(eq + 1), &used);
            if (used + eq + 1 != item.size())
                throw std::invalid_argument(item);
            kv[item.substr(0, eq)] = v;
        } catch (const std::logic_error&) {
            throw Error(Errc::Format, "category config value in '" + item + "' is not an integer");
        }
    }
    auto take = [&](const std::string& key) -> std::optional<long> {
        auto it = kv.find(key);
        if (it == kv.end())
            return std::nullopt;
        long v = it->second;
        kv.erase(it);
        return v;
    };
    Category result = [&] {
        if (kind == "vect") {
            auto q = take("q");
            auto d = take("D");
            if (!q || !d)
                throw Error(Errc::Format, "vect config needs q and D");
            return vect(*q, static_cast<int>(*d));
        }
        if (kind == "finab") {
            auto p = take("p");
            auto order = take("maxOrder");
            if (!p || !order)
                throw Error(Errc::Format, "finab config needs p and maxOrder");
            auto exp = take("maxExp");
            return finab(*p, *order, exp.value_or(*order));
        }
        throw Error(Errc::Format, "unknown category kind '" + kind + "'");
    }();
    if (!kv.empty())
        throw Error(Errc::Format, "unknown category config key '" + kv.begin()->first + "'");
    return result;
}

Ring Category::ring() const
{
    return is_vect() ? Ring::prime_field(vect_params().q) : Ring::integers();
}

std::string Category::to_string() const
{
    if (is_vect())
        return "vect:q=" + std::to_string(vect_params().q) + ",D=" + std::to_string(vect_params().max_dim);
    const auto& f = finab_params();
    return "finab:p=" + std::to_string(f.p) + ",maxOrder=" + std::to_string(f.max_order) +
           ",maxExp=" + std::to_string(f.max_exp);
}

Obj Category::space(int dim) const
{
    if (!is_vect())
        throw Error(Errc::InvalidInput, "space() is only defined for vector-space instances");
    return Obj{std::vector<long>(static_cast<std::size_t>(dim), vect_params().q)};
}

bool Category::in_universe(const Obj& x) const
{
    if (is_vect()) {
        const auto& v = vect_params();
        return x.rank() <= static_cast<std::size_t>(v.max_dim) &&
               std::all_of(x.orders.begin(), x.orders.end(), [&](long o) { return o == v.q; });
    }
    const auto& f = finab_params();
    long product = 1;
    for (long o : x.orders) {
        if (o > f.max_exp || !is_power_of(o, f.p))
            return false;
        product *= o;
        if (product > f.max_order)
            return false;
    }
    return std::is_sorted(x.orders.begin(), x.orders.end());
}

std::vector<Obj> Category::universe() const
{
    std::vector<Obj> out;
    if (is_vect()) {
        for (int d = 0; d <= vect_params().max_dim; ++d)
            out.push_back(space(d));
        return out;
    }
    const auto& f = finab_params();
    std::vector<long> cur;
    partitions(f.p, f.max_order, f.max_exp, f.p, cur, out);
    std::sort(out.begin(), out.end(), [](const Obj& a, const Obj& b) {
        Int oa = a.order(), ob = b.order();
        if (oa != ob)
            return oa < ob;
        return a.orders < b.orders;
    });
    return out;
}

bool is_well_defined(const Obj& src, const Obj& dst, const Matrix& m)
{
    if (m.rows() != dst.rank() || m.cols() != src.rank())
        return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Int v = m(r, c) * src.orders[c];
            if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(dst.orders[r])))
                return false;
        }
    return true;
}

Mor::Mor(Obj src, Obj dst, const Matrix& m) : src_(std::move(src)), dst_(std::move(dst))
{
    if (m.rows() != dst_.rank() || m.cols() != src_.rank())
        throw Error(Errc::ShapeMismatch, "morphism " + src_.to_string() + " -> " + dst_.to_string() +
                                             " given a " + std::to_string(m.rows()) + "x" +
                                             std::to_string(m.cols()) + " matrix");
    m_ = m.over(Ring::integers()).reduce_rows(dst_.moduli());
    if (!is_well_defined(src_, dst_, m_))
        throw Error(Errc::InvalidInput, "matrix " + m_.to_string() + " is not a homomorphism " + src_.to_string() +
                                            " -> " + dst_.to_string());
}

Mor Mor::zero(const Obj& src, const Obj& dst)
{
    return Mor(src, dst, Matrix(Ring::integers(), dst.rank(), src.rank()));
}

Mor Mor::identity(const Obj& x)
{
    return Mor(x, x, Matrix::identity(Ring::integers(), x.rank()));
}

std::string Mor::to_string() const
{
    return src_.to_string() + " -> " + dst_.to_string() + " " + m_.to_string();
}

Mor compose(const Mor& g, const Mor& f)
{
    if (f.dst() != g.src())
        throw Error(Errc::ShapeMismatch, "cannot compose " + g.to_string() + " after " + f.to_string());
    return Mor(f.src(), g.dst(), g.matrix() * f.matrix());
}

Mor add_morphisms(const Mor& f, const Mor& g)
{
    if (f.src() != g.src() || f.dst() != g.dst())
        throw Error(Errc::ShapeMismatch, "cannot add " + f.to_string() + " and " + g.to_string());
    return Mor(f.src(), f.dst(), f.matrix() + g.matrix());
}

Mor negate(const Mor& f)
{
    return Mor(f.src(), f.dst(), -f.matrix());
}

}  // namespace qx::exact

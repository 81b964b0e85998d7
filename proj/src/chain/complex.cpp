#include "qx/chain/complex.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "qx/error.hpp"
#include "qx/linalg/json.hpp"

namespace qx::chain {

namespace {

const linalg::Ring kZ = linalg::Ring::integers();

std::string shape(const Matrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

struct Defect {
    Errc code;
    std::string what;
};

std::optional<Defect> find_defect(const Complex& c)
{
    for (std::size_t n = 0; n < c.diffs.size(); ++n) {
        const Matrix& d = c.diffs[n];
        const int k = static_cast<int>(n);
        if (d.rows() != c.rank(k) || d.cols() != c.rank(k + 1))
            return Defect{Errc::ShapeMismatch, "diffs[" + std::to_string(n) + "] is " + shape(d) + ", expected " +
                                                   std::to_string(c.rank(k)) + "x" + std::to_string(c.rank(k + 1))};
    }
    for (std::size_t n = 1; n < c.diffs.size(); ++n)
        if (!(c.diffs[n - 1] * c.diffs[n]).is_zero())
            return Defect{Errc::CompositionNonzero,
                          "diffs[" + std::to_string(n - 1) + "] * diffs[" + std::to_string(n) + "] != 0"};
    return std::nullopt;
}

}  // namespace

std::size_t Complex::rank(int n) const
{
    return n >= 0 && static_cast<std::size_t>(n) < ranks.size() ? ranks[static_cast<std::size_t>(n)] : 0;
}

Matrix Complex::diff(int n) const
{
    if (n >= 0 && static_cast<std::size_t>(n) < diffs.size())
        return diffs[static_cast<std::size_t>(n)];
    return Matrix(kZ, rank(n), rank(n + 1));
}

int Complex::length() const
{
    return static_cast<int>(std::max(ranks.size(), diffs.size() + 1));
}

Matrix ChainMap::component(int n) const
{
    if (n >= 0 && static_cast<std::size_t>(n) < components.size())
        return components[static_cast<std::size_t>(n)];
    return Matrix(kZ, dst.rank(n), src.rank(n));
}

std::string complex_defect(const Complex& c)
{
    auto d = find_defect(c);
    return d ? d->what : std::string();
}

bool check_complex(const Complex& c)
{
    return complex_defect(c).empty();
}

std::string chain_map_defect(const ChainMap& f)
{
    if (auto d = complex_defect(f.src); !d.empty())
        return "source: " + d;
    if (auto d = complex_defect(f.dst); !d.empty())
        return "target: " + d;
    const int top = std::max({f.src.length(), f.dst.length(), static_cast<int>(f.components.size())});
    for (int n = 0; n < top; ++n) {
        Matrix m = f.component(n);
        if (m.rows() != f.dst.rank(n) || m.cols() != f.src.rank(n))
            return "component " + std::to_string(n) + " is " + shape(m) + ", expected " +
                   std::to_string(f.dst.rank(n)) + "x" + std::to_string(f.src.rank(n));
    }
    for (int n = 0; n + 1 < top; ++n)
        if (!(f.dst.diff(n) * f.component(n + 1) == f.component(n) * f.src.diff(n)))
            return "square at degree " + std::to_string(n) + " does not commute";
    return {};
}

bool check_chain_map(const ChainMap& f)
{
    return chain_map_defect(f).empty();
}

Complex shift(const Complex& c)
{
    Complex out;
    out.ranks.push_back(0);
    out.ranks.insert(out.ranks.end(), c.ranks.begin(), c.ranks.end());
    out.diffs.push_back(Matrix(kZ, 0, c.rank(0)));
    for (const auto& d : c.diffs)
        out.diffs.push_back(-d);
    return out;
}

Complex direct_sum(const Complex& a, const Complex& b)
{
    Complex out;
    const int top = std::max(a.length(), b.length());
    for (int n = 0; n < top; ++n)
        out.ranks.push_back(a.rank(n) + b.rank(n));
    for (int n = 0; n + 1 < top; ++n)
        out.diffs.push_back(Matrix::block_diag(a.diff(n), b.diff(n)));
    return out;
}

Complex truncate(const Complex& c, int top)
{
    Complex out;
    for (int n = 0; n <= top; ++n)
        out.ranks.push_back(c.rank(n));
    for (int n = 0; n < top; ++n)
        out.diffs.push_back(c.diff(n));
    return out;
}

ChainMap truncate(const ChainMap& f, int top)
{
    ChainMap out{truncate(f.src, top), truncate(f.dst, top), {}};
    for (int n = 0; n <= top; ++n)
        out.components.push_back(f.component(n));
    return out;
}

Cone mapping_cone(const ChainMap& f)
{
    if (auto d = chain_map_defect(f); !d.empty())
        throw Error(Errc::InvalidChainMap, "mapping_cone: " + d);
    const Complex& a = f.src;
    const Complex& b = f.dst;
    const int top = std::max(b.length(), a.length() + 1);
    Cone cone;
    Complex& c = cone.complex;
    for (int n = 0; n < top; ++n)
        c.ranks.push_back(b.rank(n) + a.rank(n - 1));
    for (int n = 0; n + 1 < top; ++n) {
        // cone_{n+1} = b_{n+1} (+) a_n  ->  cone_n = b_n (+) a_{n-1}
        Matrix upper = Matrix::hstack(b.diff(n), f.component(n));
        Matrix lower = Matrix::hstack(Matrix(kZ, a.rank(n - 1), b.rank(n + 1)),
                                      n >= 1 ? -a.diff(n - 1) : Matrix(kZ, 0, a.rank(n)));
        c.diffs.push_back(Matrix::vstack(upper, lower));
    }
    cone.inclusion = ChainMap{b, c, {}};
    cone.projection = ChainMap{c, shift(a), {}};
    for (int n = 0; n < top; ++n) {
        const std::size_t rb = b.rank(n), ra = a.rank(n - 1);
        cone.inclusion.components.push_back(
            Matrix::vstack(Matrix::identity(kZ, rb), Matrix(kZ, ra, rb)));
        cone.projection.components.push_back(
            Matrix::hstack(Matrix(kZ, ra, rb), Matrix::identity(kZ, ra)));
    }
    return cone;
}

std::vector<PresentedAbGroup> homology_table(const Complex& c, int up_to)
{
    if (auto d = find_defect(c))
        throw Error(d->code, "homology_table: " + d->what);
    std::vector<PresentedAbGroup> out;
    for (int n = 0; n <= up_to; ++n) {
        Matrix d_out = n == 0 ? Matrix(kZ, 0, c.rank(0)) : c.diff(n - 1);
        out.push_back(linalg::homology_at(d_out, c.diff(n)));
    }
    return out;
}

nlohmann::json to_json(const Complex& c)
{
    nlohmann::json diffs = nlohmann::json::array();
    for (const auto& d : c.diffs)
        diffs.push_back(linalg::to_json(d));
    return {{"ranks", c.ranks}, {"diffs", std::move(diffs)}};
}

Complex complex_from_json(const nlohmann::json& j)
{
    Complex c;
    try {
        c.ranks = j.at("ranks").get<std::vector<std::size_t>>();
        for (const auto& d : j.at("diffs"))
            c.diffs.push_back(linalg::matrix_from_json(d).over(kZ));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Format, std::string("malformed complex JSON: ") + e.what());
    }
    for (std::size_t n = 0; n < c.diffs.size(); ++n) {
        const int k = static_cast<int>(n);
        if (c.diffs[n].rows() != c.rank(k) || c.diffs[n].cols() != c.rank(k + 1))
            throw Error(Errc::Format, "complex JSON: diffs[" + std::to_string(n) + "] has shape " +
                                          shape(c.diffs[n]) + " but ranks say " + std::to_string(c.rank(k)) +
                                          "x" + std::to_string(c.rank(k + 1)));
    }
    return c;
}

std::string homology_csv(const std::vector<PresentedAbGroup>& table)
{
    std::ostringstream os;
    os << "degree,betti,torsion\n";
    for (std::size_t n = 0; n < table.size(); ++n) {
        os << n << ',' << table[n].betti << ',';
        for (std::size_t i = 0; i < table[n].torsion.size(); ++i)
            os << (i ? ";" : "") << table[n].torsion[i].get_str();
        os << '\n';
    }
    return os.str();
}

}  // namespace qx::chain

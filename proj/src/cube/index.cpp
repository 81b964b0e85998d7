#include "qx/cube/index.hpp"

#include <sstream>

#include "qx/error.hpp"

namespace qx::cube {

IndexPair IndexPair::parse(const std::string& s)
{
    if (s.size() != 2 || s[0] < '0' || s[0] > '2' || s[1] < '0' || s[1] > '2' || s[0] > s[1])
        throw Error(Errc::Format, "bad index pair '" + s + "'");
    return {s[0] - '0', s[1] - '0'};
}

std::string IndexPair::to_string() const
{
    return {static_cast<char>('0' + i), static_cast<char>('0' + j)};
}

std::string to_string(const MultiIndex& idx)
{
    std::string out;
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (r)
            out += '.';
        out += idx[r].to_string();
    }
    return out;
}

MultiIndex parse_index(const std::string& s)
{
    MultiIndex idx;
    if (s.empty())
        return idx;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, '.'))
        idx.push_back(IndexPair::parse(part));
    if (s.back() == '.')
        throw Error(Errc::Format, "bad multi-index '" + s + "'");
    return idx;
}

bool is_nondegenerate(const MultiIndex& idx)
{
    for (const auto& p : idx)
        if (p.degenerate())
            return false;
    return true;
}

std::vector<MultiIndex> nondegenerate_indices(int n)
{
    std::vector<MultiIndex> out{{}};
    for (int r = 0; r < n; ++r) {
        std::vector<MultiIndex> next;
        for (const auto& prefix : out)
            for (IndexPair p : {k01, k02, k12}) {
                next.push_back(prefix);
                next.back().push_back(p);
            }
        out = std::move(next);
    }
    return out;
}

namespace {

int digit(IndexPair p)
{
    if (p == k01)
        return 0;
    if (p == k02)
        return 1;
    if (p == k12)
        return 2;
    throw Error(Errc::InvalidInput, "degenerate pair " + p.to_string() + " has no code");
}

}  // namespace

std::size_t pow3(int n)
{
    std::size_t r = 1;
    for (int i = 0; i < n; ++i)
        r *= 3;
    return r;
}

std::size_t encode(const MultiIndex& idx)
{
    std::size_t code = 0;
    for (const auto& p : idx)
        code = code * 3 + static_cast<std::size_t>(digit(p));
    return code;
}

MultiIndex decode(std::size_t code, int n)
{
    static constexpr IndexPair pairs[3] = {k01, k02, k12};
    MultiIndex idx(static_cast<std::size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        idx[static_cast<std::size_t>(r)] = pairs[code % 3];
        code /= 3;
    }
    return idx;
}

IndexPair face_pair(int k)
{
    switch (k) {
    case 0: return k12;
    case 1: return k02;
    case 2: return k01;
    }
    throw Error(Errc::OutOfRange, "face index k=" + std::to_string(k));
}

MultiIndex face_insert(const MultiIndex& idx, FaceSpec spec)
{
    const int n = static_cast<int>(idx.size()) + 1;
    if (spec.l < 1 || spec.l > n)
        throw Error(Errc::OutOfRange, "face slot l=" + std::to_string(spec.l) + " outside 1.." + std::to_string(n));
    MultiIndex out(idx);
    out.insert(out.begin() + (spec.l - 1), face_pair(spec.k));
    return out;
}

DegenEval degen_eval(const MultiIndex& idx, DegenSpec spec)
{
    const int n = static_cast<int>(idx.size());
    if (spec.k < 0 || spec.k > 1)
        throw Error(Errc::OutOfRange, "degeneracy index k=" + std::to_string(spec.k));
    if (spec.l < 1 || spec.l > n)
        throw Error(Errc::OutOfRange, "degeneracy slot l=" + std::to_string(spec.l) + " outside 1.." +
                                          std::to_string(n));
    const IndexPair p = idx[static_cast<std::size_t>(spec.l - 1)];
    const bool keep = spec.k == 0 ? (p == k01 || p == k02) : (p == k02 || p == k12);
    if (!keep)
        return {DegenEval::Kind::Zero, 0, {}};
    MultiIndex out(idx);
    out.erase(out.begin() + (spec.l - 1));
    return {DegenEval::Kind::Delete, static_cast<std::size_t>(spec.l), out};
}

std::string Op::to_string() const
{
    return (kind == Kind::Face ? "d" : "s") + std::to_string(k) + "(" + std::to_string(l) + ")";
}

std::optional<MultiIndex> pull_back(const Op& op, const MultiIndex& x)
{
    if (op.kind == Op::Kind::Face)
        return face_insert(x, {op.k, op.l});
    auto e = degen_eval(x, {op.k, op.l});
    if (e.kind == DegenEval::Kind::Zero)
        return std::nullopt;
    return e.result;
}

std::optional<MultiIndex> pull_back(const Word& w, const MultiIndex& x)
{
    std::optional<MultiIndex> cur = x;
    for (const auto& op : w) {
        cur = pull_back(op, *cur);
        if (!cur)
            return std::nullopt;
    }
    return cur;
}

std::string to_string(const Word& w)
{
    if (w.empty())
        return "id";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? " o " : "") + w[i].to_string();
    return out;
}

std::vector<Relation> face_relations(int nmax)
{
    std::vector<Relation> out;
    // d_k(l) o d_p(q) = d_p(q-1) o d_k(l) on S^(n), l < q <= n.
    for (int n = 2; n <= nmax; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int p = 0; p <= 2; ++p)
                for (int q = 2; q <= n; ++q)
                    for (int l = 1; l < q; ++l)
                        out.push_back({"face-face", n, n - 2, {Op::face(k, l), Op::face(p, q)},
                                       Relation::Rhs::Word, {Op::face(p, q - 1), Op::face(k, l)}});
    // d_k(l) o s_m(t) on S^(n), through S^(n+1).
    for (int n = 0; n + 1 <= nmax; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int m = 0; m <= 1; ++m)
                for (int l = 1; l <= n + 1; ++l)
                    for (int t = 1; t <= n + 1; ++t) {
                        Word lhs{Op::face(k, l), Op::degen(m, t)};
                        if (l > t) {
                            out.push_back({"face-degeneracy", n, n, lhs, Relation::Rhs::Word,
                                           {Op::degen(m, t), Op::face(k, l - 1)}});
                        } else if (l < t) {
                            out.push_back({"face-degeneracy", n, n, lhs, Relation::Rhs::Word,
                                           {Op::degen(m, t - 1), Op::face(k, l)}});
                        } else {
                            // The inserted pair is killed exactly when s_m discards it:
                            // 12 for m = 0, 01 for m = 1.
                            bool zero = (m == 0 && k == 0) || (m == 1 && k == 2);
                            out.push_back({"table", n, n, lhs,
                                           zero ? Relation::Rhs::Zero : Relation::Rhs::Identity, {}});
                        }
                    }
    return out;
}

nlohmann::json RelationReport::to_json() const
{
    nlohmann::json j{{"passed", passed}, {"relations", relations}, {"checks", checks}, {"failures", failures}};
    if (!passed)
        j["counterexample"] = first_counterexample;
    return j;
}

RelationReport verify_face_relations(int nmax)
{
    RelationReport rep;
    auto show = [](const std::optional<MultiIndex>& x) { return x ? "(" + to_string(*x) + ")" : std::string("*"); };
    for (const auto& rel : face_relations(nmax)) {
        ++rep.relations;
        for (const auto& x : nondegenerate_indices(rel.dst_dim)) {
            ++rep.checks;
            auto left = pull_back(rel.lhs, x);
            std::optional<MultiIndex> right;
            switch (rel.rhs_kind) {
            case Relation::Rhs::Word: right = pull_back(rel.rhs, x); break;
            case Relation::Rhs::Identity: right = x; break;
            case Relation::Rhs::Zero: right = std::nullopt; break;
            }
            if (left != right) {
                ++rep.failures;
                if (rep.passed) {
                    rep.passed = false;
                    rep.first_counterexample = rel.family + ": " + to_string(rel.lhs) + " at (" + to_string(x) +
                                               ") gives " + show(left) + ", expected " + show(right);
                }
            }
        }
    }
    return rep;
}

}  // namespace qx::cube

#include "qx/cube/diagram.hpp"

#include "qx/error.hpp"
#include "qx/exact/group.hpp"
#include "qx/exact/sample.hpp"
#include "qx/linalg/json.hpp"

namespace qx::cube {

using exact::compose;
using linalg::Matrix;

namespace {

std::string line_key(int axis, const MultiIndex& x)
{
    std::string out = std::to_string(axis) + ":";
    for (std::size_t r = 0; r < x.size(); ++r) {
        if (r)
            out += '.';
        out += static_cast<int>(r) + 1 == axis ? "*" : x[r].to_string();
    }
    return out;
}

bool steps(IndexPair p)
{
    return p == k01 || p == k02;
}

// Every (axis, source index) pair that carries a generating arrow.
template <class F>
void for_each_edge(int n, F&& f)
{
    for (int axis = 1; axis <= n; ++axis)
        for (const auto& x : nondegenerate_indices(n))
            if (steps(x[static_cast<std::size_t>(axis - 1)]))
                f(axis, x);
}

void require_shapes(const CubeDiagram& c, const char* op)
{
    for_each_edge(c.dim(), [&](int axis, const MultiIndex& x) {
        const Mor& e = c.edge(axis, x);
        if (e.src() != c.at(x) || e.dst() != c.at(next_along(x, axis)))
            throw Error(Errc::InvalidInput, std::string(op) + ": edge " + line_key(axis, x) + " from (" +
                                                to_string(x) + ") does not match the objects");
    });
}

}  // namespace

MultiIndex with(const MultiIndex& x, int axis, IndexPair p)
{
    MultiIndex y(x);
    y.at(static_cast<std::size_t>(axis - 1)) = p;
    return y;
}

MultiIndex next_along(const MultiIndex& x, int axis)
{
    IndexPair p = x.at(static_cast<std::size_t>(axis - 1));
    if (p == k01)
        return with(x, axis, k02);
    if (p == k02)
        return with(x, axis, k12);
    throw Error(Errc::OutOfRange, "no arrow out of (" + to_string(x) + ") along axis " + std::to_string(axis));
}

CubeDiagram::CubeDiagram(Category cat, int n)
    : cat_(std::move(cat)), n_(n), obj_(pow3(n)),
      edges_(static_cast<std::size_t>(n) * pow3(n), Mor::zero(Obj::zero(), Obj::zero()))
{
    if (n < 0)
        throw Error(Errc::OutOfRange, "negative cube dimension");
}

std::size_t CubeDiagram::edge_slot(int axis, const MultiIndex& x) const
{
    if (axis < 1 || axis > n_ || x.size() != static_cast<std::size_t>(n_))
        throw Error(Errc::OutOfRange, "edge axis " + std::to_string(axis) + " at (" + to_string(x) + ")");
    if (!steps(x[static_cast<std::size_t>(axis - 1)]))
        throw Error(Errc::OutOfRange, "no arrow out of (" + to_string(x) + ") along axis " + std::to_string(axis));
    return static_cast<std::size_t>(axis - 1) * pow3(n_) + encode(x);
}

void CubeDiagram::set_object(const MultiIndex& x, Obj o)
{
    obj_[encode(x)] = std::move(o);
    for (int axis = 1; axis <= n_; ++axis) {
        IndexPair p = x[static_cast<std::size_t>(axis - 1)];
        if (steps(p)) {
            MultiIndex y = next_along(x, axis);
            edges_[edge_slot(axis, x)] = Mor::zero(at(x), at(y));
        }
        if (p != k01) {
            MultiIndex w = with(x, axis, p == k02 ? k01 : k02);
            edges_[edge_slot(axis, w)] = Mor::zero(at(w), at(x));
        }
    }
}

const Mor& CubeDiagram::edge(int axis, const MultiIndex& x) const
{
    return edges_[edge_slot(axis, x)];
}

void CubeDiagram::set_edge(int axis, const MultiIndex& x, Mor f)
{
    std::size_t slot = edge_slot(axis, x);
    if (f.src() != at(x) || f.dst() != at(next_along(x, axis)))
        throw Error(Errc::ShapeMismatch, "edge " + line_key(axis, x) + " must run " + at(x).to_string() + " -> " +
                                             at(next_along(x, axis)).to_string() + ", got " + f.to_string());
    edges_[slot] = std::move(f);
}

Mor CubeDiagram::map(const MultiIndex& x, const MultiIndex& y) const
{
    Mor result = Mor::identity(at(x));
    MultiIndex cur = x;
    for (int axis = 1; axis <= n_; ++axis) {
        const auto r = static_cast<std::size_t>(axis - 1);
        if (y[r] < cur[r])
            throw Error(Errc::InvalidInput, "no arrow (" + to_string(x) + ") -> (" + to_string(y) + ")");
        while (cur[r] != y[r]) {
            result = compose(edge(axis, cur), result);
            cur = next_along(cur, axis);
        }
    }
    return result;
}

bool CubeDiagram::is_zero() const
{
    for (const auto& o : obj_)
        if (!o.is_zero())
            return false;
    return true;
}

bool ValidationReport::has(const std::string& kind) const
{
    for (const auto& v : violations)
        if (v.kind == kind)
            return true;
    return false;
}

nlohmann::json ValidationReport::to_json() const
{
    nlohmann::json j{{"valid", valid()}, {"violations", nlohmann::json::array()}};
    for (const auto& v : violations)
        j["violations"].push_back({{"kind", v.kind}, {"where", v.where}, {"detail", v.detail}});
    return j;
}

ValidationReport validate(const CubeDiagram& c)
{
    ValidationReport rep;
    const int n = c.dim();
    for (const auto& x : nondegenerate_indices(n))
        if (!c.category().in_universe(c.at(x)))
            rep.violations.push_back({"universe", "(" + to_string(x) + ")", c.at(x).to_string() + " is out of bounds"});
    for_each_edge(n, [&](int axis, const MultiIndex& x) {
        const Mor& e = c.edge(axis, x);
        MultiIndex y = next_along(x, axis);
        if (e.src() != c.at(x) || e.dst() != c.at(y))
            rep.violations.push_back({"shape", line_key(axis, x) + " (" + to_string(x) + ")",
                                      "edge " + e.to_string() + " does not run " + c.at(x).to_string() + " -> " +
                                          c.at(y).to_string()});
    });
    if (rep.has("shape"))
        return rep;
    for_each_edge(n, [&](int axis, const MultiIndex& x) {
        if (x[static_cast<std::size_t>(axis - 1)] != k01)
            return;
        MultiIndex mid = next_along(x, axis);
        auto why = exact::ses_defect({c.edge(axis, x), c.edge(axis, mid)});
        if (!why.empty())
            rep.violations.push_back({"exactness", line_key(axis, x), why});
    });
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
            for (const auto& x : nondegenerate_indices(n)) {
                if (!steps(x[static_cast<std::size_t>(r - 1)]) || !steps(x[static_cast<std::size_t>(s - 1)]))
                    continue;
                Mor first_r = compose(c.edge(s, next_along(x, r)), c.edge(r, x));
                Mor first_s = compose(c.edge(r, next_along(x, s)), c.edge(s, x));
                if (first_r != first_s)
                    rep.violations.push_back({"commutativity",
                                              "axes " + std::to_string(r) + "," + std::to_string(s) + " at (" +
                                                  to_string(x) + ")",
                                              "square does not commute"});
            }
    return rep;
}

CubeDiagram apply_face(const CubeDiagram& c, FaceSpec spec)
{
    const int n = c.dim();
    if (spec.k < 0 || spec.k > 2 || spec.l < 1 || spec.l > n)
        throw Error(Errc::OutOfRange, "face d" + std::to_string(spec.k) + "(" + std::to_string(spec.l) +
                                          ") on a " + std::to_string(n) + "-cube");
    require_shapes(c, "apply_face");
    CubeDiagram out(c.category(), n - 1);
    for (const auto& x : nondegenerate_indices(n - 1))
        out.set_object(x, c.at(face_insert(x, spec)));
    for_each_edge(n - 1, [&](int axis, const MultiIndex& x) {
        int old_axis = axis < spec.l ? axis : axis + 1;
        out.set_edge(axis, x, c.edge(old_axis, face_insert(x, spec)));
    });
    return out;
}

CubeDiagram apply_degeneracy(const CubeDiagram& c, DegenSpec spec)
{
    const int n = c.dim() + 1;
    if (spec.k < 0 || spec.k > 1 || spec.l < 1 || spec.l > n)
        throw Error(Errc::OutOfRange, "degeneracy s" + std::to_string(spec.k) + "(" + std::to_string(spec.l) +
                                          ") into a " + std::to_string(n) + "-cube");
    require_shapes(c, "apply_degeneracy");
    CubeDiagram out(c.category(), n);
    for (const auto& x : nondegenerate_indices(n)) {
        auto e = degen_eval(x, spec);
        if (e.kind == DegenEval::Kind::Delete)
            out.set_object(x, c.at(e.result));
    }
    for_each_edge(n, [&](int axis, const MultiIndex& x) {
        MultiIndex y = next_along(x, axis);
        auto ex = degen_eval(x, spec);
        auto ey = degen_eval(y, spec);
        if (ex.kind != DegenEval::Kind::Delete || ey.kind != DegenEval::Kind::Delete)
            return;  // stays the zero map
        if (axis == spec.l)
            out.set_edge(axis, x, Mor::identity(out.at(x)));
        else
            out.set_edge(axis, x, c.edge(axis < spec.l ? axis : axis - 1, ex.result));
    });
    return out;
}

CubeDiagram apply_word(const CubeDiagram& c, const Word& w)
{
    CubeDiagram cur = c;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        cur = it->kind == Op::Kind::Face ? apply_face(cur, {it->k, it->l}) : apply_degeneracy(cur, {it->k, it->l});
    return cur;
}

bool CubeMorphism::commutes() const
{
    if (src.dim() != dst.dim() || components.size() != pow3(src.dim()))
        return false;
    const int n = src.dim();
    for (const auto& x : nondegenerate_indices(n)) {
        const Mor& m = at(x);
        if (m.src() != src.at(x) || m.dst() != dst.at(x))
            return false;
    }
    bool ok = true;
    for_each_edge(n, [&](int axis, const MultiIndex& x) {
        if (!ok)
            return;
        MultiIndex y = next_along(x, axis);
        ok = compose(dst.edge(axis, x), at(x)) == compose(at(y), src.edge(axis, x));
    });
    return ok;
}

bool CubeMorphism::is_cofibration() const
{
    for (const auto& m : components)
        if (!exact::is_mono(m))
            return false;
    return true;
}

bool CubeMorphism::is_fibration() const
{
    for (const auto& m : components)
        if (!exact::is_epi(m))
            return false;
    return true;
}

CubeMorphism identity_morphism(const CubeDiagram& c)
{
    CubeMorphism m{c, c, {}};
    for (const auto& x : nondegenerate_indices(c.dim()))
        m.components.push_back(Mor::identity(c.at(x)));
    return m;
}

CubeSES iteration_repack(const CubeDiagram& c)
{
    if (c.dim() < 1)
        throw Error(Errc::InvalidInput, "iteration_repack needs a cube of dimension >= 1");
    CubeDiagram X = apply_face(c, {2, 1}), Y = apply_face(c, {1, 1}), Z = apply_face(c, {0, 1});
    CubeSES s{X, Y, Z, {X, Y, {}}, {Y, Z, {}}};
    for (const auto& x : nondegenerate_indices(c.dim() - 1)) {
        s.f.components.push_back(c.edge(1, face_insert(x, {2, 1})));
        s.g.components.push_back(c.edge(1, face_insert(x, {1, 1})));
    }
    return s;
}

CubeDiagram iteration_unpack(const CubeSES& s)
{
    const int m = s.X.dim();
    if (s.Y.dim() != m || s.Z.dim() != m)
        throw Error(Errc::InvalidInput, "iteration_unpack: cubes of different dimensions");
    if (!(s.f.src == s.X) || !(s.f.dst == s.Y) || !(s.g.src == s.Y) || !(s.g.dst == s.Z))
        throw Error(Errc::InvalidInput, "iteration_unpack: morphisms do not match the cubes");
    CubeDiagram out(s.X.category(), m + 1);
    const CubeDiagram* part[3] = {&s.X, &s.Y, &s.Z};
    for (const auto& x : nondegenerate_indices(m + 1)) {
        MultiIndex tail(x.begin() + 1, x.end());
        out.set_object(x, part[encode({x[0]})]->at(tail));
    }
    for_each_edge(m + 1, [&](int axis, const MultiIndex& x) {
        MultiIndex tail(x.begin() + 1, x.end());
        if (axis == 1)
            out.set_edge(1, x, x[0] == k01 ? s.f.at(tail) : s.g.at(tail));
        else
            out.set_edge(axis, x, part[encode({x[0]})]->edge(axis - 1, tail));
    });
    return out;
}

CubePushout cube_pushout(const CubeMorphism& alpha, const CubeMorphism& beta)
{
    if (!(alpha.src == beta.src))
        throw Error(Errc::ShapeMismatch, "cube_pushout: alpha and beta must share their source");
    if (!alpha.is_cofibration())
        throw Error(Errc::NotCofibration, "cube_pushout: alpha is not componentwise mono");
    const CubeDiagram& Y = alpha.dst;
    const CubeDiagram& W = beta.dst;
    const int n = Y.dim();
    std::vector<exact::Quotient> q;
    CubePushout po{CubeDiagram(Y.category(), n), {Y, Y, {}}, {W, W, {}}};
    for (const auto& x : nondegenerate_indices(n)) {
        exact::Moduli yw = exact::concat(Y.at(x).moduli(), W.at(x).moduli());
        q.push_back(exact::cokernel(yw, Matrix::vstack(alpha.at(x).matrix(), -beta.at(x).matrix())));
        const Obj& p = q.back().obj;
        if (!Y.category().in_universe(p))
            throw Error(Errc::OutOfUniverse, "cube_pushout: " + p.to_string() + " at (" + to_string(x) +
                                                 ") exceeds " + Y.category().to_string());
        po.P.set_object(x, p);
    }
    for_each_edge(n, [&](int axis, const MultiIndex& x) {
        MultiIndex y = next_along(x, axis);
        Matrix h = Matrix::block_diag(Y.edge(axis, x).matrix(), W.edge(axis, x).matrix());
        po.P.set_edge(axis, x, exact::induced(q[encode(x)], q[encode(y)], h));
    });
    po.inj_Y.dst = po.P;
    po.inj_W.dst = po.P;
    for (const auto& x : nondegenerate_indices(n)) {
        const auto& qx = q[encode(x)];
        const std::size_t ny = Y.at(x).rank(), nw = W.at(x).rank();
        po.inj_Y.components.push_back(Mor(Y.at(x), qx.obj, qx.proj.submatrix(0, 0, qx.obj.rank(), ny)));
        po.inj_W.components.push_back(Mor(W.at(x), qx.obj, qx.proj.submatrix(0, ny, qx.obj.rank(), nw)));
    }
    return po;
}

exact::NineGrid grid_from_cube(const CubeDiagram& c)
{
    if (c.dim() != 2)
        throw Error(Errc::InvalidInput, "grid_from_cube needs a 2-cube");
    static constexpr IndexPair p[3] = {k01, k02, k12};
    exact::NineGrid g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            g.obj[i][j] = c.at({p[i], p[j]});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            g.row[i][j] = c.edge(2, {p[i], p[j]});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            g.col[i][j] = c.edge(1, {p[i], p[j]});
    return g;
}

CubeDiagram transport(const CubeDiagram& c, const std::vector<Mor>& iso)
{
    const int n = c.dim();
    std::vector<Mor> inv;
    CubeDiagram out(c.category(), n);
    for (const auto& x : nondegenerate_indices(n)) {
        inv.push_back(exact::inverse(iso[encode(x)]));
        out.set_object(x, iso[encode(x)].dst());
    }
    for_each_edge(n, [&](int axis, const MultiIndex& x) {
        MultiIndex y = next_along(x, axis);
        out.set_edge(axis, x, compose(iso[encode(y)], compose(c.edge(axis, x), inv[encode(x)])));
    });
    return out;
}

CubeMorphism transport(const CubeMorphism& f, const std::vector<Mor>& src_iso, const std::vector<Mor>& dst_iso)
{
    CubeMorphism out{transport(f.src, src_iso), transport(f.dst, dst_iso), {}};
    for (std::size_t i = 0; i < f.components.size(); ++i)
        out.components.push_back(compose(dst_iso[i], compose(f.components[i], exact::inverse(src_iso[i]))));
    return out;
}

std::vector<Mor> random_automorphisms(const CubeDiagram& c, std::mt19937_64& rng)
{
    std::vector<Mor> out;
    for (const auto& x : nondegenerate_indices(c.dim()))
        out.push_back(exact::random_automorphism(c.at(x), rng));
    return out;
}

nlohmann::json to_json(const CubeDiagram& c)
{
    const bool vect = c.category().is_vect();
    nlohmann::json j{{"category", c.category().to_string()}, {"n", c.dim()}};
    j["objects"] = nlohmann::json::object();
    for (const auto& x : nondegenerate_indices(c.dim())) {
        const Obj& o = c.at(x);
        j["objects"][to_string(x)] = vect ? nlohmann::json(o.rank()) : nlohmann::json(o.orders);
    }
    j["edges"] = nlohmann::json::object();
    for (int axis = 1; axis <= c.dim(); ++axis)
        for (const auto& x : nondegenerate_indices(c.dim()))
            if (x[static_cast<std::size_t>(axis - 1)] == k01)
                j["edges"][line_key(axis, x)] = {{"a", linalg::to_json(c.edge(axis, x).matrix())},
                                                 {"b", linalg::to_json(c.edge(axis, next_along(x, axis)).matrix())}};
    return j;
}

CubeDiagram cube_from_json(const nlohmann::json& j)
{
    try {
        Category cat = Category::parse(j.at("category").get<std::string>());
        const int n = j.at("n").get<int>();
        if (n < 0 || n > 6)
            throw Error(Errc::Format, "cube dimension " + std::to_string(n) + " out of range");
        CubeDiagram c(cat, n);
        const auto& objs = j.at("objects");
        for (const auto& x : nondegenerate_indices(n)) {
            auto key = to_string(x);
            if (!objs.contains(key))
                continue;  // absent objects are zero
            const auto& v = objs.at(key);
            Obj o = v.is_number_integer() ? cat.space(v.get<int>()) : Obj::canonical(v.get<std::vector<long>>());
            c.set_object(x, o);
        }
        for (auto it = objs.begin(); it != objs.end(); ++it) {
            auto idx = parse_index(it.key());
            if (static_cast<int>(idx.size()) != n || !is_nondegenerate(idx))
                throw Error(Errc::Format, "object key '" + it.key() + "' is not a nondegenerate " +
                                              std::to_string(n) + "-index");
        }
        const auto& edges = j.at("edges");
        for (auto it = edges.begin(); it != edges.end(); ++it) {
            const std::string& key = it.key();
            auto colon = key.find(':');
            if (colon == std::string::npos)
                throw Error(Errc::Format, "edge key '" + key + "' has no axis");
            int axis = std::stoi(key.substr(0, colon));
            std::string rest = key.substr(colon + 1);
            auto star = rest.find('*');
            if (axis < 1 || axis > n || star == std::string::npos)
                throw Error(Errc::Format, "bad edge key '" + key + "'");
            rest.replace(star, 1, "01");
            MultiIndex x = parse_index(rest);
            if (static_cast<int>(x.size()) != n || x[static_cast<std::size_t>(axis - 1)] != k01)
                throw Error(Errc::Format, "bad edge key '" + key + "'");
            MultiIndex mid = next_along(x, axis);
            c.set_edge(axis, x, Mor(c.at(x), c.at(mid), linalg::matrix_from_json(it.value().at("a"))));
            c.set_edge(axis, mid, Mor(c.at(mid), c.at(next_along(mid, axis)),
                                      linalg::matrix_from_json(it.value().at("b"))));
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Format, std::string("cube json: ") + e.what());
    } catch (const std::logic_error& e) {
        throw Error(Errc::Format, std::string("cube json: ") + e.what());
    }
}

}  // namespace qx::cube

#include "qx/exact/group.hpp"

#include "qx/error.hpp"
#include "qx/linalg/smith.hpp"

namespace qx::exact {

namespace {

const Ring kZ = Ring::integers();

Matrix diag(const Moduli& m)
{
    return Matrix::diagonal(kZ, m, m.size(), m.size());
}

}  // namespace

Moduli concat(const Moduli& a, const Moduli& b)
{
    Moduli out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Int group_order(const Moduli& m)
{
    Int n = 1;
    for (const auto& x : m)
        n *= x;
    return n;
}

Quotient cokernel(const Moduli& target, const Matrix& relations)
{
    const std::size_t k = target.size();
    if (relations.rows() != k)
        throw Error(Errc::ShapeMismatch, "cokernel: relations have wrong row count");
    auto snf = linalg::smith_normal_form(Matrix::hstack(relations.over(kZ), diag(target)));
    // The moduli give full rank, so every coordinate is torsion.
    std::vector<std::size_t> keep;
    std::vector<long> orders;
    for (std::size_t i = 0; i < snf.rank(); ++i)
        if (snf.factors[i] > 1) {
            keep.push_back(i);
            orders.push_back(snf.factors[i].get_si());
        }
    Quotient q;
    q.obj = Obj{orders};
    q.proj = Matrix(kZ, keep.size(), k);
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < k; ++c)
            q.proj.set(r, c, snf.U(keep[r], c));
    q.proj = q.proj.reduce_rows(q.obj.moduli());
    q.lift = snf.U_inv.columns(keep).reduce_rows(target);
    return q;
}

Sub subgroup(const Moduli& ambient, const Matrix& generators)
{
    const std::size_t k = ambient.size();
    const std::size_t m = generators.cols();
    if (generators.rows() != k)
        throw Error(Errc::ShapeMismatch, "subgroup: generators have wrong row count");
    Sub s;
    if (m == 0) {
        s.incl = Matrix(kZ, k, 0);
        return s;
    }
    // Relation lattice {c : G c in im diag(ambient)} from the integer kernel of [G | diag].
    Matrix ker = linalg::integer_kernel(Matrix::hstack(generators.over(kZ), diag(ambient)));
    Matrix lattice = ker.submatrix(0, 0, m, ker.cols());
    auto snf = linalg::smith_normal_form(lattice);
    std::vector<std::size_t> keep;
    std::vector<long> orders;
    for (std::size_t i = 0; i < snf.rank(); ++i)
        if (snf.factors[i] > 1) {
            keep.push_back(i);
            orders.push_back(snf.factors[i].get_si());
        }
    if (snf.rank() != m)
        throw Error(Errc::InvalidInput, "subgroup: ambient group is not finite");
    s.obj = Obj{orders};
    s.incl = (generators.over(kZ) * snf.U_inv.columns(keep)).reduce_rows(ambient);
    return s;
}

Sub kernel(const Moduli& src, const Moduli& dst, const Matrix& m)
{
    if (m.rows() != dst.size() || m.cols() != src.size())
        throw Error(Errc::ShapeMismatch, "kernel: matrix shape does not match groups");
    const std::size_t k = src.size();
    if (k == 0)
        return Sub{Obj::zero(), Matrix(kZ, 0, 0)};
    // {x : m x in im diag(dst)} projected to x, then viewed inside src.
    Matrix ker = linalg::integer_kernel(Matrix::hstack(m.over(kZ), diag(dst)));
    Matrix gens = ker.submatrix(0, 0, k, ker.cols());
    return subgroup(src, gens);
}

Quotient cokernel(const Mor& f)
{
    return cokernel(f.dst().moduli(), f.matrix());
}

Sub kernel(const Mor& f)
{
    return kernel(f.src().moduli(), f.dst().moduli(), f.matrix());
}

Sub image(const Mor& f)
{
    return subgroup(f.dst().moduli(), f.matrix());
}

std::optional<Matrix> solve_in(const Sub& s, const Moduli& ambient, const Matrix& v)
{
    const std::size_t r = s.obj.rank();
    if (v.rows() != ambient.size())
        throw Error(Errc::ShapeMismatch, "solve_in: vector has wrong length");
    Matrix system = Matrix::hstack(s.incl, diag(ambient));
    auto x = linalg::solve_integer(system, v.over(kZ));
    if (!x)
        return std::nullopt;
    return x->submatrix(0, 0, r, v.cols()).reduce_rows(s.obj.moduli());
}

bool is_mono(const Mor& f)
{
    return image(f).obj.order() == f.src().order();
}

bool is_epi(const Mor& f)
{
    return image(f).obj == f.dst();
}

bool is_iso(const Mor& f)
{
    return f.src() == f.dst() && is_epi(f);
}

Mor inverse(const Mor& f)
{
    if (!is_iso(f))
        throw Error(Errc::InvalidInput, "inverse: " + f.to_string() + " is not an isomorphism");
    const Moduli m = f.dst().moduli();
    auto x = linalg::solve_integer(Matrix::hstack(f.matrix(), diag(m)), Matrix::identity(kZ, m.size()));
    if (!x)
        throw Error(Errc::InvalidInput, "inverse: " + f.to_string() + " is not an isomorphism");
    return Mor(f.dst(), f.src(), x->submatrix(0, 0, f.src().rank(), m.size()));
}

std::vector<std::vector<long>> elements(const Obj& x)
{
    std::vector<std::vector<long>> out{{}};
    for (long o : x.orders) {
        std::vector<std::vector<long>> next;
        next.reserve(out.size() * static_cast<std::size_t>(o));
        for (const auto& prefix : out)
            for (long v = 0; v < o; ++v) {
                auto e = prefix;
                e.push_back(v);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<long> apply(const Mor& f, const std::vector<long>& element)
{
    const Matrix& m = f.matrix();
    std::vector<long> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            acc += m(r, c) * element[c];
        mpz_fdiv_r_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(f.dst().orders[r]));
        out[r] = acc.get_si();
    }
    return out;
}

PushoutSquare pushout(const Mor& f, const Mor& g)
{
    if (f.src() != g.src())
        throw Error(Errc::ShapeMismatch, "pushout: f and g must share their source");
    if (!is_mono(f))
        throw Error(Errc::NotMono, "pushout: " + f.to_string() + " is not a monomorphism");
    const std::size_t ny = f.dst().rank();
    const std::size_t nw = g.dst().rank();
    Moduli sum = concat(f.dst().moduli(), g.dst().moduli());
    Quotient q = cokernel(sum, Matrix::vstack(f.matrix(), -g.matrix()));
    PushoutSquare po;
    po.P = q.obj;
    po.inj_Y = Mor(f.dst(), q.obj, q.proj.submatrix(0, 0, q.obj.rank(), ny));
    po.inj_W = Mor(g.dst(), q.obj, q.proj.submatrix(0, ny, q.obj.rank(), nw));
    return po;
}

PullbackSquare pullback(const Mor& f, const Mor& h)
{
    if (f.dst() != h.dst())
        throw Error(Errc::ShapeMismatch, "pullback: f and h must share their target");
    if (!is_epi(f))
        throw Error(Errc::PreconditionViolated, "pullback: " + f.to_string() + " is not an epimorphism");
    const std::size_t ny = f.src().rank();
    const std::size_t nw = h.src().rank();
    Moduli sum = concat(f.src().moduli(), h.src().moduli());
    Sub k = kernel(sum, f.dst().moduli(), Matrix::hstack(f.matrix(), -h.matrix()));
    PullbackSquare pb;
    pb.P = k.obj;
    pb.pr_Y = Mor(k.obj, f.src(), k.incl.submatrix(0, 0, ny, k.obj.rank()));
    pb.pr_W = Mor(k.obj, h.src(), k.incl.submatrix(ny, 0, nw, k.obj.rank()));
    return pb;
}

Mor induced(const Quotient& from, const Quotient& to, const Matrix& h)
{
    return Mor(from.obj, to.obj, to.proj * h.over(kZ) * from.lift);
}

}  // namespace qx::exact

#include "qx/linalg/smith.hpp"

#include <sstream>

#include "qx/error.hpp"

namespace qx::linalg {

namespace {

// Row/column reduction to Smith form, over Z or F_p. The transform matrices
// are only maintained when `track` is set.
class Reducer {
public:
    Reducer(const Matrix& m, bool track)
        : ring_(m.ring()), rows_(m.rows()), cols_(m.cols()), track_(track), a_(rows_, std::vector<Int>(cols_))
    {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                a_[r][c] = m(r, c);
        if (track_) {
            u_ = identity(rows_);
            u_inv_ = identity(rows_);
            v_ = identity(cols_);
            v_inv_ = identity(cols_);
        }
    }

    std::vector<Int> run()
    {
        std::vector<Int> factors;
        const std::size_t diag = std::min(rows_, cols_);
        for (std::size_t t = 0; t < diag; ++t) {
            auto pivot = min_abs(t, t, rows_, cols_);
            if (!pivot)
                break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            for (;;) {
                if (!clear_cross(t)) {
                    auto best = min_abs_cross(t);
                    swap_rows(t, best.first);
                    swap_cols(t, best.second);
                    continue;
                }
                auto bad = non_multiple(t);
                if (!bad)
                    break;
                add_row_into(t, *bad);
            }
            normalize_pivot(t);
            factors.push_back(a_[t][t]);
        }
        return factors;
    }

    Matrix u() const { return to_matrix(u_); }
    Matrix u_inv() const { return to_matrix(u_inv_); }
    Matrix v() const { return to_matrix(v_); }
    Matrix v_inv() const { return to_matrix(v_inv_); }

private:
    using Dense = std::vector<std::vector<Int>>;

    static Dense identity(std::size_t n)
    {
        Dense d(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            d[i][i] = 1;
        return d;
    }

    Matrix to_matrix(const Dense& d) const
    {
        std::size_t nc = d.empty() ? 0 : d.front().size();
        Matrix m(ring_, d.size(), nc);
        for (std::size_t r = 0; r < d.size(); ++r)
            for (std::size_t c = 0; c < nc; ++c)
                m.set(r, c, d[r][c]);
        return m;
    }

    Int norm(const Int& x) const { return ring_.normalize(x); }

    // Absolute value used for pivot comparison; over F_p the canonical
    // representative is compared instead.
    Int size_of(const Int& x) const { return ring_.is_field() ? x : Int(abs(x)); }

    Int quotient(const Int& x, const Int& pivot) const
    {
        if (!ring_.is_field()) {
            Int q;
            mpz_tdiv_q(q.get_mpz_t(), x.get_mpz_t(), pivot.get_mpz_t());
            return q;
        }
        Int inv, p = ring_.characteristic();
        mpz_invert(inv.get_mpz_t(), pivot.get_mpz_t(), p.get_mpz_t());
        return norm(x * inv);
    }

    std::optional<std::pair<std::size_t, std::size_t>> min_abs(std::size_t r0, std::size_t c0, std::size_t r1,
                                                               std::size_t c1) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Int best_size;
        for (std::size_t r = r0; r < r1; ++r)
            for (std::size_t c = c0; c < c1; ++c) {
                if (sgn(a_[r][c]) == 0)
                    continue;
                Int s = size_of(a_[r][c]);
                if (!best || s < best_size) {
                    best = {r, c};
                    best_size = s;
                }
            }
        return best;
    }

    std::pair<std::size_t, std::size_t> min_abs_cross(std::size_t t) const
    {
        std::pair<std::size_t, std::size_t> best{t, t};
        Int best_size = size_of(a_[t][t]);
        auto consider = [&](std::size_t r, std::size_t c) {
            if (sgn(a_[r][c]) == 0)
                return;
            Int s = size_of(a_[r][c]);
            if (sgn(best_size) == 0 || s < best_size ||
                (s == best_size && std::pair{r, c} < best)) {
                best = {r, c};
                best_size = s;
            }
        };
        for (std::size_t c = t + 1; c < cols_; ++c)
            consider(t, c);
        for (std::size_t r = t + 1; r < rows_; ++r)
            consider(r, t);
        return best;
    }

    // Eliminates row t and column t against the pivot; returns true when both
    // are fully cleared.
    bool clear_cross(std::size_t t)
    {
        bool clean = true;
        const Int pivot = a_[t][t];
        for (std::size_t r = t + 1; r < rows_; ++r) {
            if (sgn(a_[r][t]) == 0)
                continue;
            row_axpy(r, t, quotient(a_[r][t], pivot));
            if (sgn(a_[r][t]) != 0)
                clean = false;
        }
        for (std::size_t c = t + 1; c < cols_; ++c) {
            if (sgn(a_[t][c]) == 0)
                continue;
            col_axpy(c, t, quotient(a_[t][c], pivot));
            if (sgn(a_[t][c]) != 0)
                clean = false;
        }
        return clean;
    }

    std::optional<std::size_t> non_multiple(std::size_t t) const
    {
        if (ring_.is_field())
            return std::nullopt;
        for (std::size_t r = t + 1; r < rows_; ++r)
            for (std::size_t c = t + 1; c < cols_; ++c)
                if (sgn(a_[r][c]) != 0 && !mpz_divisible_p(a_[r][c].get_mpz_t(), a_[t][t].get_mpz_t()))
                    return r;
        return std::nullopt;
    }

    // row_r -= q * row_t
    void row_axpy(std::size_t r, std::size_t t, const Int& q)
    {
        if (sgn(q) == 0)
            return;
        for (std::size_t c = t; c < cols_; ++c)
            if (sgn(a_[t][c]) != 0)
                a_[r][c] = norm(a_[r][c] - q * a_[t][c]);
        if (!track_)
            return;
        for (std::size_t c = 0; c < rows_; ++c)
            if (sgn(u_[t][c]) != 0)
                u_[r][c] = norm(u_[r][c] - q * u_[t][c]);
        for (std::size_t k = 0; k < rows_; ++k)
            if (sgn(u_inv_[k][r]) != 0)
                u_inv_[k][t] = norm(u_inv_[k][t] + q * u_inv_[k][r]);
    }

    // col_c -= q * col_t
    void col_axpy(std::size_t c, std::size_t t, const Int& q)
    {
        if (sgn(q) == 0)
            return;
        for (std::size_t r = t; r < rows_; ++r)
            if (sgn(a_[r][t]) != 0)
                a_[r][c] = norm(a_[r][c] - q * a_[r][t]);
        if (!track_)
            return;
        for (std::size_t r = 0; r < cols_; ++r)
            if (sgn(v_[r][t]) != 0)
                v_[r][c] = norm(v_[r][c] - q * v_[r][t]);
        for (std::size_t k = 0; k < cols_; ++k)
            if (sgn(v_inv_[c][k]) != 0)
                v_inv_[t][k] = norm(v_inv_[t][k] + q * v_inv_[c][k]);
    }

    // row_t += row_r
    void add_row_into(std::size_t t, std::size_t r)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            a_[t][c] = norm(a_[t][c] + a_[r][c]);
        if (!track_)
            return;
        for (std::size_t c = 0; c < rows_; ++c)
            u_[t][c] = norm(u_[t][c] + u_[r][c]);
        for (std::size_t k = 0; k < rows_; ++k)
            u_inv_[k][r] = norm(u_inv_[k][r] - u_inv_[k][t]);
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        std::swap(a_[i], a_[j]);
        if (!track_)
            return;
        std::swap(u_[i], u_[j]);
        for (auto& row : u_inv_)
            std::swap(row[i], row[j]);
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (auto& row : a_)
            std::swap(row[i], row[j]);
        if (!track_)
            return;
        for (auto& row : v_)
            std::swap(row[i], row[j]);
        std::swap(v_inv_[i], v_inv_[j]);
    }

    // Scales row t by a unit so the pivot is positive (Z) or 1 (F_p).
    void normalize_pivot(std::size_t t)
    {
        Int unit;
        Int unit_inv;
        if (ring_.is_field()) {
            unit = quotient(Int(1), a_[t][t]);
            unit_inv = a_[t][t];
        } else if (sgn(a_[t][t]) < 0) {
            unit = -1;
            unit_inv = -1;
        } else {
            return;
        }
        for (auto& e : a_[t])
            e = norm(e * unit);
        if (!track_)
            return;
        for (auto& e : u_[t])
            e = norm(e * unit);
        for (auto& row : u_inv_)
            row[t] = norm(row[t] * unit_inv);
    }

    Ring ring_;
    std::size_t rows_, cols_;
    bool track_;
    Dense a_, u_, u_inv_, v_, v_inv_;
};

Matrix require_integers(const Matrix& m, const char* op)
{
    if (m.ring().kind() != Ring::Kind::Integers)
        throw Error(Errc::InvalidInput, std::string(op) + " requires an integer matrix");
    return m;
}

}  // namespace

Matrix SmithForm::diagonal() const
{
    return Matrix::diagonal(source.ring(), factors, source.rows(), source.cols());
}

SmithForm smith_normal_form(const Matrix& m)
{
    Reducer red(m, true);
    SmithForm snf;
    snf.source = m;
    snf.factors = red.run();
    snf.U = red.u();
    snf.U_inv = red.u_inv();
    snf.V = red.v();
    snf.V_inv = red.v_inv();
    return snf;
}

std::vector<Int> invariant_factors(const Matrix& m)
{
    Reducer red(m, false);
    return red.run();
}

std::size_t rank(const Matrix& m)
{
    return invariant_factors(m).size();
}

std::string PresentedAbGroup::to_string() const
{
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << "Z";
        if (betti > 1)
            os << "^" << betti;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

PresentedAbGroup cokernel_group(const Matrix& m)
{
    require_integers(m, "cokernel_group");
    auto factors = invariant_factors(m);
    PresentedAbGroup g;
    g.betti = m.rows() - factors.size();
    for (const auto& f : factors)
        if (f > 1)
            g.torsion.push_back(f);
    return g;
}

PresentedAbGroup homology_at(const Matrix& d_out, const Matrix& d_in)
{
    if (d_out.cols() != d_in.rows())
        throw Error(Errc::ShapeMismatch, "homology_at: cols(d_out)=" + std::to_string(d_out.cols()) +
                                             " but rows(d_in)=" + std::to_string(d_in.rows()));
    if (!(d_out * d_in).is_zero())
        throw Error(Errc::CompositionNonzero, "homology_at: d_out * d_in != 0");
    const std::size_t mid = d_out.cols();
    if (d_out.ring().is_field()) {
        PresentedAbGroup g;
        g.betti = mid - rank(d_out) - rank(d_in);
        return g;
    }
    SmithForm out = smith_normal_form(d_out);
    const std::size_t r = out.rank();
    // Coordinates of im(d_in) in the kernel basis (columns r.. of V).
    Matrix coords = out.V_inv * d_in;
    Matrix restricted = coords.submatrix(r, 0, mid - r, d_in.cols());
    auto factors = invariant_factors(restricted);
    PresentedAbGroup g;
    g.betti = (mid - r) - factors.size();
    for (const auto& f : factors)
        if (f > 1)
            g.torsion.push_back(f);
    return g;
}

MonoEpi mono_epi_flags(const Matrix& m)
{
    auto factors = invariant_factors(m);
    bool units = true;
    for (const auto& f : factors)
        if (f != 1)
            units = false;
    return {factors.size() == m.cols(), factors.size() == m.rows() && units};
}

Matrix integer_kernel(const Matrix& m)
{
    SmithForm snf = smith_normal_form(m);
    return snf.V.submatrix(0, snf.rank(), m.cols(), m.cols() - snf.rank());
}

std::optional<Matrix> solve_integer(const Matrix& m, const Matrix& b)
{
    if (b.rows() != m.rows())
        throw Error(Errc::ShapeMismatch, "solve_integer: right-hand side has wrong row count");
    SmithForm snf = smith_normal_form(m);
    Matrix c = snf.U * b;
    Matrix y(m.ring(), m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i < snf.rank()) {
                const Int& s = snf.factors[i];
                if (m.ring().is_field()) {
                    y.set(i, j, c(i, j));  // pivots are 1
                    continue;
                }
                if (!mpz_divisible_p(c(i, j).get_mpz_t(), s.get_mpz_t()))
                    return std::nullopt;
                y.set(i, j, Int(c(i, j) / s));
            } else if (sgn(c(i, j)) != 0) {
                return std::nullopt;
            }
        }
    return snf.V * y;
}

Pushout pushout_along_mono(const Matrix& f, const Matrix& g)
{
    if (f.cols() != g.cols() || f.ring() != g.ring())
        throw Error(Errc::ShapeMismatch, "pushout_along_mono: f and g must share their source");
    if (!mono_epi_flags(f).is_mono)
        throw Error(Errc::NotMono, "pushout_along_mono: f is not injective");
    const std::size_t ny = f.rows();
    const std::size_t nw = g.rows();
    Matrix rel = Matrix::vstack(f, -g);
    SmithForm snf = smith_normal_form(rel);

    Pushout po;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < ny + nw; ++i) {
        if (i < snf.rank()) {
            if (snf.factors[i] == 1)
                continue;
            po.group.torsion.push_back(snf.factors[i]);
        } else {
            ++po.group.betti;
        }
        keep.push_back(i);
    }
    Matrix proj(f.ring(), keep.size(), ny + nw);
    for (std::size_t k = 0; k < keep.size(); ++k)
        for (std::size_t c = 0; c < ny + nw; ++c) {
            Int v = snf.U(keep[k], c);
            if (k < po.group.torsion.size())
                mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), po.group.torsion[k].get_mpz_t());
            proj.set(k, c, v);
        }
    po.inj_Y = proj.submatrix(0, 0, keep.size(), ny);
    po.inj_W = proj.submatrix(0, ny, keep.size(), nw);
    return po;
}

}  // namespace qx::linalg

#include "qx/linalg/matrix.hpp"

#include <sstream>

#include "qx/error.hpp"

namespace qx::linalg {

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Ring Ring::prime_field(long p)
{
    if (!is_prime(p))
        throw Error(Errc::InvalidInput, "field characteristic " + std::to_string(p) + " is not prime");
    return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(const std::string& s)
{
    if (s == "Z")
        return integers();
    if (s.size() >= 2 && s[0] == 'F') {
        try {
            std::size_t used = 0;
            long p = std::stol(s.substr(1), &used);
            if (used + 1 == s.size())
                return prime_field(p);
        } catch (const std::logic_error&) {
        }
    }
    throw Error(Errc::Format, "unknown ring '" + s + "'");
}

std::string Ring::name() const
{
    return kind_ == Kind::Integers ? "Z" : "F" + std::to_string(p_);
}

Int Ring::normalize(const Int& x) const
{
    if (kind_ == Kind::Integers)
        return x;
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p_));
    return r;
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols)
{
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::initializer_list<long> entries)
    : Matrix(ring, rows, cols)
{
    if (entries.size() != rows * cols)
        throw Error(Errc::ShapeMismatch, "initializer has wrong entry count");
    std::size_t i = 0;
    for (long v : entries)
        a_[i++] = ring_.normalize(Int(v));
}

Matrix Matrix::identity(Ring ring, std::size_t n)
{
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.a_[i * n + i] = 1;
    return m;
}

Matrix Matrix::diagonal(Ring ring, const std::vector<Int>& diag, std::size_t rows, std::size_t cols)
{
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i)
        m.set(i, i, diag[i]);
    return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<long>>& rows)
{
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(ring, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw Error(Errc::ShapeMismatch, "ragged rows");
        for (std::size_t c = 0; c < nc; ++c)
            m.set(r, c, Int(rows[r][c]));
    }
    return m;
}

void Matrix::add_to(std::size_t r, std::size_t c, const Int& v)
{
    Int& e = a_[r * cols_ + c];
    e += v;
    if (ring_.is_field())
        e = ring_.normalize(e);
}

bool Matrix::is_zero() const
{
    for (const auto& e : a_)
        if (sgn(e) != 0)
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.a_[c * rows_ + r] = a_[r * cols_ + c];
    return t;
}

Matrix Matrix::column(std::size_t c) const
{
    return submatrix(0, c, rows_, 1);
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw Error(Errc::ShapeMismatch, "submatrix out of bounds");
    Matrix s(ring_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            s.a_[r * nc + c] = a_[(r0 + r) * cols_ + c0 + c];
    return s;
}

Matrix Matrix::columns(const std::vector<std::size_t>& which) const
{
    Matrix s(ring_, rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < which.size(); ++j)
            s.a_[r * which.size() + j] = a_[r * cols_ + which[j]];
    return s;
}

Matrix Matrix::over(Ring ring) const
{
    Matrix m(ring, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = ring.normalize(a_[i]);
    return m;
}

Matrix Matrix::reduce_rows(const std::vector<Int>& moduli) const
{
    if (moduli.size() != rows_)
        throw Error(Errc::ShapeMismatch, "moduli count differs from row count");
    Matrix m(*this);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            Int& e = m.a_[r * cols_ + c];
            mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), moduli[r].get_mpz_t());
        }
    return m;
}

Matrix Matrix::operator-() const
{
    Matrix m(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = ring_.normalize(-a_[i]);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || ring_ != rhs.ring_)
        throw Error(Errc::ShapeMismatch, "matrix sum of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                             " and " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    for (std::size_t i = 0; i < a_.size(); ++i)
        a_[i] = ring_.normalize(a_[i] + rhs.a_[i]);
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs)
{
    return *this += -rhs;
}

Matrix Matrix::scaled(const Int& k) const
{
    Matrix m(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = ring_.normalize(a_[i] * k);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_ || a.ring_ != b.ring_)
        throw Error(Errc::ShapeMismatch, "matrix product of " + std::to_string(a.rows_) + "x" +
                                             std::to_string(a.cols_) + " and " + std::to_string(b.rows_) + "x" +
                                             std::to_string(b.cols_));
    Matrix p(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int& x = a.a_[i * a.cols_ + k];
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Int& y = b.a_[k * b.cols_ + j];
                if (sgn(y) != 0)
                    p.a_[i * b.cols_ + j] += x * y;
            }
        }
    if (p.ring_.is_field())
        for (auto& e : p.a_)
            e = p.ring_.normalize(e);
    return p;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right)
{
    if (left.rows_ != right.rows_ || left.ring_ != right.ring_)
        throw Error(Errc::ShapeMismatch, "hstack row counts differ");
    Matrix m(left.ring_, left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < left.cols_; ++c)
            m.a_[r * m.cols_ + c] = left(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c)
            m.a_[r * m.cols_ + left.cols_ + c] = right(r, c);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom)
{
    if (top.cols_ != bottom.cols_ || top.ring_ != bottom.ring_)
        throw Error(Errc::ShapeMismatch, "vstack column counts differ");
    Matrix m(top.ring_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.a_.begin(), top.a_.end(), m.a_.begin());
    std::copy(bottom.a_.begin(), bottom.a_.end(), m.a_.begin() + static_cast<std::ptrdiff_t>(top.a_.size()));
    return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b)
{
    if (a.ring_ != b.ring_)
        throw Error(Errc::ShapeMismatch, "block_diag rings differ");
    Matrix m(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t c = 0; c < a.cols_; ++c)
            m.a_[r * m.cols_ + c] = a(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t c = 0; c < b.cols_; ++c)
            m.a_[(a.rows_ + r) * m.cols_ + a.cols_ + c] = b(r, c);
    return m;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? " " : "") << a_[r * cols_ + c];
    }
    os << "] (" << rows_ << "x" << cols_ << " over " << ring_.name() << ")";
    return os.str();
}

}  // namespace qx::linalg

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qx::linalg {

using Int = mpz_class;

/// Coefficient ring of a matrix: the integers or a prime field F_p.
class Ring {
public:
    enum class Kind { Integers, PrimeField };

    static Ring integers() { return Ring(Kind::Integers, 0); }
    /// Throws InvalidInput unless p is prime.
    static Ring prime_field(long p);
    /// Parses "Z" or "F<p>".
    static Ring parse(const std::string& s);

    Kind kind() const { return kind_; }
    bool is_field() const { return kind_ == Kind::PrimeField; }
    long characteristic() const { return p_; }
    std::string name() const;

    /// Canonical representative: identity over Z, [0, p) over F_p.
    Int normalize(const Int& x) const;

    bool operator==(const Ring&) const = default;

private:
    Ring(Kind k, long p) : kind_(k), p_(p) {}
    Kind kind_;
    long p_;
};

bool is_prime(long n);

/// Dense row-major matrix with exact entries. Entries are kept normalized for
/// the matrix's ring.
class Matrix {
public:
    Matrix() : Matrix(Ring::integers(), 0, 0) {}
    Matrix(Ring ring, std::size_t rows, std::size_t cols);
    Matrix(Ring ring, std::size_t rows, std::size_t cols, std::initializer_list<long> entries);

    static Matrix zero(Ring ring, std::size_t rows, std::size_t cols) { return {ring, rows, cols}; }
    static Matrix identity(Ring ring, std::size_t n);
    static Matrix diagonal(Ring ring, const std::vector<Int>& diag, std::size_t rows, std::size_t cols);
    static Matrix from_rows(Ring ring, const std::vector<std::vector<long>>& rows);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Int& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Int& v) { a_[r * cols_ + c] = ring_.normalize(v); }
    void add_to(std::size_t r, std::size_t c, const Int& v);

    bool is_zero() const;
    Matrix transpose() const;
    Matrix column(std::size_t c) const;
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix columns(const std::vector<std::size_t>& which) const;
    /// Same entries reinterpreted (and normalized) over another ring.
    Matrix over(Ring ring) const;
    /// Row i reduced modulo moduli[i] into [0, moduli[i]).
    Matrix reduce_rows(const std::vector<Int>& moduli) const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix scaled(const Int& k) const;

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    static Matrix hstack(const Matrix& left, const Matrix& right);
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> a_;
};

}  // namespace qx::linalg

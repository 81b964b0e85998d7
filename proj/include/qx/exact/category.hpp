#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qx/linalg/matrix.hpp"

namespace qx::exact {

using linalg::Int;
using linalg::Matrix;
using linalg::Ring;

/// A finite abelian group in invariant-factor form: Z/orders[0] (+) ... with
/// orders ascending and each order > 1. An F_q-vector space of dimension d is
/// the group with d factors of order q. The zero object has no factors.
struct Obj {
    std::vector<long> orders;

    static Obj zero() { return {}; }
    /// Sorts and drops trivial factors.
    static Obj canonical(std::vector<long> orders);

    std::size_t rank() const { return orders.size(); }
    bool is_zero() const { return orders.empty(); }
    Int order() const;
    std::vector<Int> moduli() const;
    std::string to_string() const;

    auto operator<=>(const Obj&) const = default;
};

struct VectParams {
    long q;
    int max_dim;
    bool operator==(const VectParams&) const = default;
};

struct FinAbParams {
    long p;
    long max_order;
    long max_exp;
    bool operator==(const FinAbParams&) const = default;
};

/// One of the two concrete exact categories, with a finite object universe.
/// Cofibrations are monomorphisms and fibrations are epimorphisms.
class Category {
public:
    static Category vect(long q, int max_dim);
    static Category finab(long p, long max_order, long max_exp);
    /// "vect:q=2,D=3" or "finab:p=2,maxOrder=8,maxExp=4". Throws Format.
    static Category parse(std::string_view config);

    bool is_vect() const { return std::holds_alternative<VectParams>(params_); }
    bool is_finab() const { return std::holds_alternative<FinAbParams>(params_); }
    const VectParams& vect_params() const { return std::get<VectParams>(params_); }
    const FinAbParams& finab_params() const { return std::get<FinAbParams>(params_); }

    /// F_q for vector spaces, Z for abelian groups.
    Ring ring() const;
    /// Canonical config string; parse(to_string()) round-trips.
    std::string to_string() const;

    /// The vector space of the given dimension (vect only).
    Obj space(int dim) const;
    bool in_universe(const Obj& x) const;
    /// Every object within the bounds, zero first, ordered by (order, factors).
    std::vector<Obj> universe() const;

    bool operator==(const Category&) const = default;

private:
    explicit Category(std::variant<VectParams, FinAbParams> p) : params_(p) {}
    std::variant<VectParams, FinAbParams> params_;
};

/// A homomorphism given by an integer matrix on the invariant-factor
/// generators, row i reduced modulo dst.orders[i]. Equality of morphisms is
/// equality of these reduced forms.
class Mor {
public:
    Mor() = default;
    /// Reduces m and checks it is well defined on the presentation; throws
    /// ShapeMismatch or InvalidInput.
    Mor(Obj src, Obj dst, const Matrix& m);

    static Mor zero(const Obj& src, const Obj& dst);
    static Mor identity(const Obj& x);

    const Obj& src() const { return src_; }
    const Obj& dst() const { return dst_; }
    const Matrix& matrix() const { return m_; }

    bool is_zero() const { return m_.is_zero(); }
    std::string to_string() const;

    bool operator==(const Mor&) const = default;

private:
    Obj src_;
    Obj dst_;
    Matrix m_;
};

/// g after f. Throws ShapeMismatch unless f.dst() == g.src().
Mor compose(const Mor& g, const Mor& f);
/// Pointwise sum in the abelian group Hom(src, dst). Throws ShapeMismatch.
Mor add_morphisms(const Mor& f, const Mor& g);
Mor negate(const Mor& f);

/// True iff column j of m, scaled by src order j, vanishes in dst.
bool is_well_defined(const Obj& src, const Obj& dst, const Matrix& m);

}  // namespace qx::exact

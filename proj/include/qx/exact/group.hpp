#pragma once

#include <optional>
#include <vector>

#include "qx/exact/category.hpp"

// Finite abelian group toolkit. Groups are presented as Z^k / diag(moduli);
// every construction returns its result in canonical invariant-factor form
// together with the structure maps.
namespace qx::exact {

using Moduli = std::vector<Int>;

/// target / <relations>: proj maps target -> obj, lift sends each generator of
/// obj to a preimage in target.
struct Quotient {
    Obj obj;
    Matrix proj;  // obj.rank() x target rank
    Matrix lift;  // target rank x obj.rank()
};

/// The subgroup generated by some elements, with its inclusion.
struct Sub {
    Obj obj;
    Matrix incl;  // ambient rank x obj.rank()
};

Quotient cokernel(const Moduli& target, const Matrix& relations);
Sub subgroup(const Moduli& ambient, const Matrix& generators);
Sub kernel(const Moduli& src, const Moduli& dst, const Matrix& m);

Quotient cokernel(const Mor& f);
Sub kernel(const Mor& f);
Sub image(const Mor& f);

/// Coordinates c with s.incl * c == v modulo the ambient moduli, or nullopt
/// when some column of v is not in the subgroup.
std::optional<Matrix> solve_in(const Sub& s, const Moduli& ambient, const Matrix& v);

Moduli concat(const Moduli& a, const Moduli& b);
Int group_order(const Moduli& m);

bool is_mono(const Mor& f);
bool is_epi(const Mor& f);
bool is_iso(const Mor& f);

/// Inverse of an isomorphism. Throws InvalidInput if f is not invertible.
Mor inverse(const Mor& f);

/// Every element of x as a column vector, in mixed-radix order (generator 0
/// varies slowest).
std::vector<std::vector<long>> elements(const Obj& x);
std::vector<long> apply(const Mor& f, const std::vector<long>& element);

/// The pushout P = (Y (+) W) / <(f x, -g x)> of a mono f: X -> Y along g: X -> W.
struct PushoutSquare {
    Obj P;
    Mor inj_Y;
    Mor inj_W;
};
/// Throws NotMono. P may lie outside any bounded universe; callers check.
PushoutSquare pushout(const Mor& f, const Mor& g);

/// The pullback P = ker(Y (+) W -> Z, (y, w) -> f y - h w) of an epi f: Y -> Z along h: W -> Z.
struct PullbackSquare {
    Obj P;
    Mor pr_Y;
    Mor pr_W;
};
/// Throws PreconditionViolated if f is not epi.
PullbackSquare pullback(const Mor& f, const Mor& h);

/// Morphism Q1 -> Q2 induced on quotients by h: T1 -> T2, given as matrices:
/// proj2 * h * lift1, reduced into Q2.
Mor induced(const Quotient& from, const Quotient& to, const Matrix& h);

}  // namespace qx::exact

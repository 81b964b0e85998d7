#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qx/linalg/matrix.hpp"

namespace qx::linalg {

/// U * source * V == diag(factors) with factors[i] | factors[i+1]; U and V
/// are unimodular and their inverses are tracked alongside them.
struct SmithForm {
    Matrix source;
    std::vector<Int> factors;  // nonzero invariant factors, positive, length == rank
    Matrix U, U_inv;
    Matrix V, V_inv;

    std::size_t rank() const { return factors.size(); }
    Matrix diagonal() const;
};

/// Full Smith normal form over the integers. Pivots are chosen by minimal
/// absolute value, ties broken by lowest (row, col), so output is deterministic.
SmithForm smith_normal_form(const Matrix& m);

/// Invariant factors only (no change-of-basis bookkeeping). Same pivot rule.
std::vector<Int> invariant_factors(const Matrix& m);

/// Rank over Z (via invariant factors) or over F_p (Gaussian elimination).
std::size_t rank(const Matrix& m);

/// A finitely generated abelian group Z^betti (+) Z/t_1 (+) ... with t_i | t_{i+1}.
struct PresentedAbGroup {
    std::size_t betti = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return betti == 0 && torsion.empty(); }
    std::string to_string() const;
    bool operator==(const PresentedAbGroup&) const = default;
};

/// Cokernel of an integer matrix, Z^rows / im(m).
PresentedAbGroup cokernel_group(const Matrix& m);

/// ker(d_out) / im(d_in). Throws ShapeMismatch or CompositionNonzero.
PresentedAbGroup homology_at(const Matrix& d_out, const Matrix& d_in);

struct MonoEpi {
    bool is_mono;
    bool is_epi;
};

/// Injectivity / surjectivity of the linear map x -> m x over m's ring.
MonoEpi mono_epi_flags(const Matrix& m);

/// Basis of the integer kernel {x : m x = 0}, as columns.
Matrix integer_kernel(const Matrix& m);

/// Some integer x with m x == b, or nullopt.
std::optional<Matrix> solve_integer(const Matrix& m, const Matrix& b);

/// Pushout of free modules Y <-f- X -g-> W along a mono f. The pushout object
/// is (Y (+) W) / <(f x, -g x)>, given in SNF coordinates: coordinate i has
/// modulus group.torsion[i] for the torsion part and is free afterwards.
struct Pushout {
    PresentedAbGroup group;
    Matrix inj_Y;  // coords(P) x rows(f)
    Matrix inj_W;  // coords(P) x rows(g)
};

/// Throws NotMono if f is not injective.
Pushout pushout_along_mono(const Matrix& f, const Matrix& g);

}  // namespace qx::linalg

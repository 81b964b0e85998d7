#pragma once

#include <array>
#include <string>

#include "qx/exact/category.hpp"

namespace qx::exact {

/// X -f-> Y -g-> Z.
struct SESTriple {
    Mor f;
    Mor g;
};

/// f mono, g epi, g f = 0 and |X| |Z| = |Y| (so im f = ker g).
/// Throws ShapeMismatch if f and g do not compose.
bool is_ses(const SESTriple& t);

/// Why a composable pair fails to be short exact, or empty if it is.
std::string ses_defect(const SESTriple& t);

/// obj[i][j] is row i, column j. row[i][0]: obj[i][0] -> obj[i][1],
/// row[i][1]: obj[i][1] -> obj[i][2]; col[0][j]: obj[0][j] -> obj[1][j],
/// col[1][j]: obj[1][j] -> obj[2][j].
struct NineGrid {
    std::array<std::array<Obj, 3>, 3> obj;
    std::array<std::array<Mor, 2>, 3> row;
    std::array<std::array<Mor, 3>, 2> col;

    static NineGrid zero();
    SESTriple row_triple(int i) const { return {row[i][0], row[i][1]}; }
    SESTriple col_triple(int j) const { return {col[0][j], col[1][j]}; }
    /// Commutativity of the square with top-left corner (i, j).
    bool square_commutes(int i, int j) const;
};

enum class NineMode {
    // The middle row and one outer row are short exact; decides the other.
    TwoRowsPlusMiddle,
    // Both outer rows are short exact and the middle composite is zero;
    // decides the middle row.
    OuterRowsPlusZero,
};

/// Whether the remaining row is short exact. Throws PreconditionViolated
/// naming the first failing column, square or row hypothesis.
bool nine_lemma_check(const NineGrid& grid, NineMode mode);

}  // namespace qx::exact

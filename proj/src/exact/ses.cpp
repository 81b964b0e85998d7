#include "qx/exact/ses.hpp"

#include "qx/error.hpp"
#include "qx/exact/group.hpp"

namespace qx::exact {

std::string ses_defect(const SESTriple& t)
{
    if (t.f.dst() != t.g.src())
        throw Error(Errc::ShapeMismatch, "sequence " + t.f.to_string() + " ; " + t.g.to_string() + " does not compose");
    if (!is_mono(t.f))
        return "first map is not mono";
    if (!is_epi(t.g))
        return "second map is not epi";
    if (!compose(t.g, t.f).is_zero())
        return "composite is not zero";
    if (t.f.src().order() * t.g.dst().order() != t.f.dst().order())
        return "image of the first map is smaller than the kernel of the second";
    return {};
}

bool is_ses(const SESTriple& t)
{
    return ses_defect(t).empty();
}

NineGrid NineGrid::zero()
{
    NineGrid g;
    for (auto& r : g.row)
        for (auto& m : r)
            m = Mor::zero(Obj::zero(), Obj::zero());
    for (auto& c : g.col)
        for (auto& m : c)
            m = Mor::zero(Obj::zero(), Obj::zero());
    return g;
}

bool NineGrid::square_commutes(int i, int j) const
{
    return compose(col[i][j + 1], row[i][j]) == compose(row[i + 1][j], col[i][j]);
}

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(Errc::PreconditionViolated, what);
}

void check_shapes(const NineGrid& g)
{
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            require(g.row[i][j].src() == g.obj[i][j] && g.row[i][j].dst() == g.obj[i][j + 1],
                    "row " + std::to_string(i) + " map " + std::to_string(j) + " has wrong endpoints");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            require(g.col[i][j].src() == g.obj[i][j] && g.col[i][j].dst() == g.obj[i + 1][j],
                    "column " + std::to_string(j) + " map " + std::to_string(i) + " has wrong endpoints");
}

}  // namespace

bool nine_lemma_check(const NineGrid& grid, NineMode mode)
{
    check_shapes(grid);
    for (int j = 0; j < 3; ++j) {
        auto why = ses_defect(grid.col_triple(j));
        require(why.empty(), "column " + std::to_string(j) + " is not short exact: " + why);
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            require(grid.square_commutes(i, j),
                    "square at (" + std::to_string(i) + "," + std::to_string(j) + ") does not commute");

    if (mode == NineMode::TwoRowsPlusMiddle) {
        require(is_ses(grid.row_triple(1)), "middle row is not short exact");
        if (is_ses(grid.row_triple(0)))
            return is_ses(grid.row_triple(2));
        require(is_ses(grid.row_triple(2)), "neither outer row is short exact");
        return is_ses(grid.row_triple(0));
    }
    require(is_ses(grid.row_triple(0)), "top row is not short exact");
    require(is_ses(grid.row_triple(2)), "bottom row is not short exact");
    require(compose(grid.row[1][1], grid.row[1][0]).is_zero(), "middle row composite is not zero");
    return is_ses(grid.row_triple(1));
}

}  // namespace qx::exact

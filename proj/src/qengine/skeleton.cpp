#include "qx/qengine/skeleton.hpp"

#include "qx/error.hpp"

namespace qx::qengine {

namespace {

std::size_t checked(const auto& per_degree, int n)
{
    if (n < 0 || static_cast<std::size_t>(n) >= per_degree.size())
        throw Error(Errc::OutOfRange, "degree " + std::to_string(n) + " is outside the skeleton");
    return static_cast<std::size_t>(n);
}

}  // namespace

int target_degree(int n, const Op& op)
{
    if (op.kind == Op::Kind::Face) {
        if (op.k < 0 || op.k > 2 || op.l < 1 || op.l > n)
            throw Error(Errc::OutOfRange, op.to_string() + " does not act on degree " + std::to_string(n));
        return n - 1;
    }
    if (op.k < 0 || op.k > 1 || op.l < 1 || op.l > n + 1)
        throw Error(Errc::OutOfRange, op.to_string() + " does not act on degree " + std::to_string(n));
    return n + 1;
}

CornerSkeleton::CornerSkeleton(const Category& cat, int max_degree) : cat_(cat)
{
    if (!cat.is_vect())
        throw Error(Errc::InvalidInput, "corner forms only classify vector-space cubes");
    for (int n = 0; n <= max_degree; ++n) {
        forms_.push_back(cube::enumerate_corner_forms(n, cat.vect_params().max_dim, true));
        auto& idx = index_.emplace_back();
        for (std::size_t i = 0; i < forms_.back().size(); ++i)
            idx.emplace(forms_.back()[i], i);
    }
}

std::size_t CornerSkeleton::size(int n) const
{
    return forms_[checked(forms_, n)].size();
}

const cube::CornerForm& CornerSkeleton::form(int n, std::size_t i) const
{
    return forms_[checked(forms_, n)].at(i);
}

nlohmann::json CornerSkeleton::label(int n, std::size_t i) const
{
    return cube::to_json(form(n, i));
}

std::optional<std::size_t> CornerSkeleton::act(int n, std::size_t i, const Op& op) const
{
    const int t = target_degree(n, op);
    checked(forms_, t);
    const auto& m = form(n, i);
    auto image = op.kind == Op::Kind::Face ? cube::corner_face(m, cube::FaceSpec{op.k, op.l}) : cube::corner_degeneracy(m, cube::DegenSpec{op.k, op.l});
    if (image.is_zero())
        return std::nullopt;
    return index_[static_cast<std::size_t>(t)].at(image);
}

DiagramSkeleton::DiagramSkeleton(const Category& cat, int max_degree) : cat_(cat)
{
    for (int n = 0; n <= max_degree; ++n) {
        auto& reps = reps_.emplace_back();
        if (cat.is_vect()) {
            auto& idx = corner_index_.emplace_back();
            for (const auto& m : cube::enumerate_corner_forms(n, cat.vect_params().max_dim, true)) {
                idx.emplace(m, reps.size());
                reps.push_back(cube::split_cube(cat, m));
            }
        } else {
            auto& sk = finab_.emplace_back(std::make_unique<cube::FinAbSkeleton>(cat, n));
            for (std::size_t c = 0; c < sk->size(); ++c)
                if (c != sk->zero_class())
                    reps.push_back(sk->representative(c));
        }
    }
}

std::size_t DiagramSkeleton::size(int n) const
{
    return reps_[checked(reps_, n)].size();
}

const cube::CubeDiagram& DiagramSkeleton::representative(int n, std::size_t i) const
{
    return reps_[checked(reps_, n)].at(i);
}

nlohmann::json DiagramSkeleton::label(int n, std::size_t i) const
{
    const auto& c = representative(n, i);
    if (cat_.is_vect())
        return cube::to_json(cube::canonical_corner_form(c));
    return cube::to_json(c);
}

std::optional<std::size_t> DiagramSkeleton::classify(int n, const cube::CubeDiagram& c) const
{
    const auto k = static_cast<std::size_t>(n);
    if (cat_.is_vect()) {
        auto m = cube::canonical_corner_form(c);
        if (m.is_zero())
            return std::nullopt;
        return corner_index_[k].at(m);
    }
    // Reduced index: class 0 is the zero cube and is dropped.
    std::size_t cls = finab_[k]->classify(c);
    if (cls == finab_[k]->zero_class())
        return std::nullopt;
    return cls - 1;
}

std::optional<std::size_t> DiagramSkeleton::act(int n, std::size_t i, const Op& op) const
{
    const int t = target_degree(n, op);
    checked(reps_, t);
    const auto& c = representative(n, i);
    auto image = op.kind == Op::Kind::Face ? cube::apply_face(c, cube::FaceSpec{op.k, op.l}) : cube::apply_degeneracy(c, cube::DegenSpec{op.k, op.l});
    return classify(t, image);
}

std::shared_ptr<const Skeleton> make_skeleton(const Category& cat, int max_degree)
{
    if (cat.is_vect())
        return std::make_shared<CornerSkeleton>(cat, max_degree);
    return std::make_shared<DiagramSkeleton>(cat, max_degree);
}

}  // namespace qx::qengine

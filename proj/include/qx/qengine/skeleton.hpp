#pragma once

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qx/cube/corner.hpp"
#include "qx/cube/finab.hpp"

namespace qx::qengine {

using cube::Op;
using exact::Category;

/// Reduced bases of isomorphism classes of n-cubes for n = 0..max_degree
/// (the zero class is left out), with the action of faces and degeneracies.
class Skeleton {
public:
    virtual ~Skeleton() = default;

    virtual const Category& category() const = 0;
    virtual int max_degree() const = 0;
    virtual std::size_t size(int n) const = 0;
    virtual nlohmann::json label(int n, std::size_t i) const = 0;
    /// Class of op applied to basis element i of degree n, or nullopt for the
    /// zero class. Throws OutOfRange if the result leaves 0..max_degree.
    virtual std::optional<std::size_t> act(int n, std::size_t i, const Op& op) const = 0;
};

/// Degree reached by applying op to an n-cube. Throws OutOfRange.
int target_degree(int n, const Op& op);

/// FdVect classes as corner forms in lexicographic order; faces and
/// degeneracies act by the corner-form formulas.
class CornerSkeleton final : public Skeleton {
public:
    /// Throws InvalidInput for FinAb, UniverseTooLarge past the enumeration cap.
    CornerSkeleton(const Category& cat, int max_degree);

    const Category& category() const override { return cat_; }
    int max_degree() const override { return static_cast<int>(forms_.size()) - 1; }
    std::size_t size(int n) const override;
    nlohmann::json label(int n, std::size_t i) const override;
    std::optional<std::size_t> act(int n, std::size_t i, const Op& op) const override;

    const cube::CornerForm& form(int n, std::size_t i) const;

private:
    Category cat_;
    std::vector<std::vector<cube::CornerForm>> forms_;
    std::vector<std::map<cube::CornerForm, std::size_t>> index_;
};

/// Classes carried by representative diagrams. Faces and degeneracies are
/// applied to the diagrams and the results classified again: by corner form
/// for FdVect (same basis order as CornerSkeleton), by FinAbSkeleton otherwise.
class DiagramSkeleton final : public Skeleton {
public:
    DiagramSkeleton(const Category& cat, int max_degree);

    const Category& category() const override { return cat_; }
    int max_degree() const override { return static_cast<int>(reps_.size()) - 1; }
    std::size_t size(int n) const override;
    nlohmann::json label(int n, std::size_t i) const override;
    std::optional<std::size_t> act(int n, std::size_t i, const Op& op) const override;

    const cube::CubeDiagram& representative(int n, std::size_t i) const;

private:
    std::optional<std::size_t> classify(int n, const cube::CubeDiagram& c) const;

    Category cat_;
    std::vector<std::vector<cube::CubeDiagram>> reps_;
    std::vector<std::map<cube::CornerForm, std::size_t>> corner_index_;
    std::vector<std::unique_ptr<cube::FinAbSkeleton>> finab_;
};

/// CornerSkeleton for FdVect, DiagramSkeleton for FinAb.
std::shared_ptr<const Skeleton> make_skeleton(const Category& cat, int max_degree);

}  // namespace qx::qengine

#pragma once

#include <memory>
#include <string>

#include "qx/linalg/matrix.hpp"
#include "qx/qengine/skeleton.hpp"

namespace qx::qengine {

using linalg::Matrix;

/// A functor from cubes to free abelian groups, evaluated on skeleton bases.
class Linearization {
public:
    virtual ~Linearization() = default;

    virtual std::string name() const = 0;
    virtual const Skeleton& skeleton() const = 0;
    virtual std::size_t rank(int n) const = 0;
    /// F(op) : F(S^(n)) -> F(S^(target)), one column per basis class of degree n.
    virtual Matrix induced(int n, const Op& op) const = 0;
};

/// The reduced free abelian group on isomorphism classes: a class goes to
/// its basis vector, the zero class to 0.
class ZFree final : public Linearization {
public:
    explicit ZFree(std::shared_ptr<const Skeleton> skeleton) : skeleton_(std::move(skeleton)) {}

    std::string name() const override { return "zfree"; }
    const Skeleton& skeleton() const override { return *skeleton_; }
    std::size_t rank(int n) const override { return skeleton_->size(n); }
    Matrix induced(int n, const Op& op) const override;

private:
    std::shared_ptr<const Skeleton> skeleton_;
};

/// "zfree" is the only functor. Throws Format for any other name.
std::unique_ptr<Linearization> make_linearization(const std::string& name, std::shared_ptr<const Skeleton> skeleton);

}  // namespace qx::qengine

#include "qx/qengine/linearization.hpp"

#include "qx/error.hpp"

namespace qx::qengine {

Matrix ZFree::induced(int n, const Op& op) const
{
    const int t = target_degree(n, op);
    Matrix m(linalg::Ring::integers(), skeleton_->size(t), skeleton_->size(n));
    for (std::size_t i = 0; i < m.cols(); ++i)
        if (auto j = skeleton_->act(n, i, op))
            m.set(*j, i, 1);
    return m;
}

std::unique_ptr<Linearization> make_linearization(const std::string& name, std::shared_ptr<const Skeleton> skeleton)
{
    if (name == "zfree")
        return std::make_unique<ZFree>(std::move(skeleton));
    throw Error(Errc::Format, "unknown functor '" + name + "' (available: zfree)");
}

}  // namespace qx::qengine

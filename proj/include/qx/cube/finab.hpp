#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qx/cube/diagram.hpp"

namespace qx::cube {

/// Isomorphism classes of n-cubes (n <= 2) of finite abelian p-groups with
/// order <= 8. A cube is determined up to isomorphism by V = F(02..02) and
/// the images A_r of its a-arrows into V; classes are orbits of such tuples
/// under Aut(V), found by exhaustive search.
class FinAbSkeleton {
public:
    /// Throws UniverseTooLarge for n > 2 or maxOrder > 8, InvalidInput for
    /// vector-space instances.
    FinAbSkeleton(const Category& cat, int n);

    int dim() const { return n_; }
    std::size_t size() const { return reps_.size(); }
    const CubeDiagram& representative(std::size_t i) const { return reps_[i]; }
    /// Index of the zero cube's class (always 0).
    std::size_t zero_class() const { return 0; }
    /// Class of a valid cube. Throws InvalidInput for cubes outside the universe.
    std::size_t classify(const CubeDiagram& c) const;

private:
    struct Ambient {
        Obj V;
        std::vector<std::vector<long>> elements;
        std::vector<std::vector<int>> automorphisms;  // element permutations
        std::vector<std::uint32_t> subgroups;
    };
    using Key = std::pair<std::size_t, std::vector<std::uint32_t>>;

    std::vector<std::uint32_t> canonical(const Ambient& a, const std::vector<std::uint32_t>& masks) const;
    CubeDiagram build(const Ambient& a, const std::vector<std::uint32_t>& masks) const;

    Category cat_;
    int n_;
    std::vector<Ambient> ambients_;
    std::map<Obj, std::size_t> ambient_index_;
    std::vector<Key> keys_;
    std::map<Key, std::size_t> index_;
    std::vector<CubeDiagram> reps_;
};

}  // namespace qx::cube

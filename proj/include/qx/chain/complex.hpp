#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "qx/linalg/matrix.hpp"
#include "qx/linalg/smith.hpp"

namespace qx::chain {

using linalg::Matrix;
using linalg::PresentedAbGroup;

/// A connective complex of free abelian groups with finite support.
/// diffs[n] maps degree n+1 to degree n and has shape ranks[n] x ranks[n+1].
/// Degrees past either list are rank 0 / zero maps.
struct Complex {
    std::vector<std::size_t> ranks;
    std::vector<Matrix> diffs;

    std::size_t rank(int n) const;
    /// diffs[n], or the zero map of the right shape outside the stored range.
    Matrix diff(int n) const;
    /// One past the highest degree carrying data.
    int length() const;

    bool operator==(const Complex&) const = default;
};

struct ChainMap {
    Complex src;
    Complex dst;
    std::vector<Matrix> components;  // components[n] : src_n -> dst_n

    Matrix component(int n) const;
};

/// Empty string when c is a complex, otherwise the first problem found.
std::string complex_defect(const Complex& c);
bool check_complex(const Complex& c);
/// Shape and square checks for f, with src and dst themselves complexes.
std::string chain_map_defect(const ChainMap& f);
bool check_chain_map(const ChainMap& f);

/// (Sc)_0 = 0, (Sc)_n = c_{n-1}, with the differential negated.
Complex shift(const Complex& c);
Complex direct_sum(const Complex& a, const Complex& b);
/// Drops every degree above top.
Complex truncate(const Complex& c, int top);
ChainMap truncate(const ChainMap& f, int top);

struct Cone {
    Complex complex;
    ChainMap inclusion;   // dst -> cone
    ChainMap projection;  // cone -> shift(src)
};

/// cone_n = dst_n (+) src_{n-1}, differential [[d_dst, f], [0, -d_src]].
/// Throws InvalidChainMap.
Cone mapping_cone(const ChainMap& f);

/// H_0 .. H_upTo. Throws CompositionNonzero if c is not a complex.
std::vector<PresentedAbGroup> homology_table(const Complex& c, int up_to);

nlohmann::json to_json(const Complex& c);
/// Throws Format on malformed input. Does not check d^2 = 0.
Complex complex_from_json(const nlohmann::json& j);

/// "degree,betti,torsion" with torsion factors joined by ';'.
std::string homology_csv(const std::vector<PresentedAbGroup>& table);

}  // namespace qx::chain

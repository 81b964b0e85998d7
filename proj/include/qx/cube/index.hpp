#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qx::cube {

/// An arrow ij of [2], 0 <= i <= j <= 2.
struct IndexPair {
    int i = 0;
    int j = 1;

    static IndexPair parse(const std::string& s);
    bool degenerate() const { return i == j; }
    std::string to_string() const;
    auto operator<=>(const IndexPair&) const = default;
};

inline constexpr IndexPair k01{0, 1};
inline constexpr IndexPair k02{0, 2};
inline constexpr IndexPair k12{1, 2};

using MultiIndex = std::vector<IndexPair>;

/// "01.12.02"; the empty index is "".
std::string to_string(const MultiIndex& idx);
/// Throws Format.
MultiIndex parse_index(const std::string& s);
bool is_nondegenerate(const MultiIndex& idx);
/// All of {01,02,12}^n in lexicographic order (01 < 02 < 12, slot 1 most significant).
std::vector<MultiIndex> nondegenerate_indices(int n);

/// Position of a nondegenerate index in nondegenerate_indices(n).
std::size_t encode(const MultiIndex& idx);
MultiIndex decode(std::size_t code, int n);
std::size_t pow3(int n);

/// d_k(l), 1-based slot l. k = 0 inserts 12, k = 1 inserts 02, k = 2 inserts 01.
struct FaceSpec {
    int k;
    int l;
};

/// s_k(l). k = 0 keeps slots 01, 02; k = 1 keeps 02, 12.
struct DegenSpec {
    int k;
    int l;
};

IndexPair face_pair(int k);

/// Inserts the face's pair at slot l of an index of length n - 1.
/// Throws OutOfRange unless 1 <= l <= n and 0 <= k <= 2.
MultiIndex face_insert(const MultiIndex& idx, FaceSpec spec);

struct DegenEval {
    enum class Kind { Delete, Zero } kind;
    std::size_t position;  // 1-based slot removed when kind == Delete
    MultiIndex result;     // idx with the slot removed; empty for Zero
};

/// Throws OutOfRange unless 1 <= l <= len(idx) and 0 <= k <= 1.
DegenEval degen_eval(const MultiIndex& idx, DegenSpec spec);

/// A face or degeneracy functor between cube categories.
struct Op {
    enum class Kind { Face, Degen } kind;
    int k;
    int l;

    static Op face(int k, int l) { return {Kind::Face, k, l}; }
    static Op degen(int k, int l) { return {Kind::Degen, k, l}; }
    std::string to_string() const;
};

/// For the cube G = op(F) and an index x of G, the index of F whose value
/// G(x) is, or nullopt when G(x) is the zero object.
std::optional<MultiIndex> pull_back(const Op& op, const MultiIndex& x);

/// A functor word written as a composite: ops.front() is applied last.
using Word = std::vector<Op>;
std::optional<MultiIndex> pull_back(const Word& w, const MultiIndex& x);
std::string to_string(const Word& w);

/// One instance of a simplicial-style identity between functors
/// S^(src_dim) -> S^(dst_dim).
struct Relation {
    std::string family;  // "face-face", "face-degeneracy", "table"
    int src_dim;
    int dst_dim;
    Word lhs;
    enum class Rhs { Word, Identity, Zero } rhs_kind;
    Word rhs;
};

/// Every face-face relation (l < q) with source cubes of dimension <= nmax,
/// and every face-degeneracy relation (all l, t) whose middle cube has
/// dimension <= nmax, with the l = t cases resolved to identity or zero.
std::vector<Relation> face_relations(int nmax);

struct RelationReport {
    bool passed = true;
    std::size_t relations = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_counterexample;

    nlohmann::json to_json() const;
};

/// Exhaustive check of face_relations(nmax) on every nondegenerate index.
RelationReport verify_face_relations(int nmax);

}  // namespace qx::cube

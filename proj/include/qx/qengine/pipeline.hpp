#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "qx/chain/complex.hpp"
#include "qx/qengine/linearization.hpp"

namespace qx::qengine {

using chain::ChainMap;
using chain::Complex;

/// delta_n : Q'_{n+1} -> Q'_n, the sum over i = 1..n+1 of
/// (-1)^i (F(d_0(i)) - F(d_1(i)) + F(d_2(i))).
Matrix build_delta(const Linearization& F, int n);
/// Degrees 0..N of Q', F(S^(n)) in degree n.
Complex build_qprime(const Linearization& F, int N);
/// s-hat_k : SQ' -> Q', F(s_k(1)) : Q'_{n-1} -> Q'_n in degree n. Both
/// complexes are cut off at the top degree of qprime.
ChainMap build_s_hat(const Linearization& F, const Complex& qprime, int k);
/// (s0, s1) : SQ' (+) SQ' -> Q', the two maps side by side.
ChainMap build_pair(const ChainMap& s0, const ChainMap& s1);

/// How the cone differential compares with the closed form
/// [[a delta_n, b (s0,s1)_n], [0, c (delta_{n-2} (+) delta_{n-2})]].
struct Reconciliation {
    /// Sign triples (a, b, c) that reproduce the cone differential in every degree.
    std::vector<std::array<int, 3>> matching_signs;
    /// Degrees n where delta_{n+1} (rather than delta_n) would even have the
    /// shape of the upper-left block.
    std::vector<int> shifted_index_fits;
    int degrees_compared = 0;

    nlohmann::json to_json() const;
};

struct QPipeline {
    std::string category;
    std::string functor;
    int N = 0;
    Complex qprime;
    Complex sigma_qprime;
    Complex sigma_sum;
    ChainMap s_hat0;
    ChainMap s_hat1;
    ChainMap s_pair;
    Complex q;
    ChainMap inclusion;  // Q' -> Q
    Reconciliation reconciliation;
};

/// Q as the cone of (s0, s1), through degree N. Checks every complex and
/// chain map, and rank Q_n = rank Q'_n + 2 rank Q'_{n-2}; throws
/// PreconditionViolated if any of these fail.
QPipeline build_q(const Linearization& F, int N);

struct HomologyReport {
    std::vector<linalg::PresentedAbGroup> qprime;
    std::vector<linalg::PresentedAbGroup> q;

    /// "complex,degree,betti,torsion" rows for Q' then Q.
    std::string to_csv() const;
};

/// Homology in degrees 0..min(up_to, N - 1): the degrees whose incoming
/// differential was built.
HomologyReport homology_report(const QPipeline& p, int up_to);
HomologyReport homology_report(const Complex& qprime, const Complex& q, int up_to);

}  // namespace qx::qengine

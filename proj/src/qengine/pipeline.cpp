#include "qx/qengine/pipeline.hpp"

#include <sstream>

#include "qx/error.hpp"

namespace qx::qengine {

namespace {

const linalg::Ring kZ = linalg::Ring::integers();

void require(const std::string& defect, const std::string& what)
{
    if (!defect.empty())
        throw Error(Errc::PreconditionViolated, what + ": " + defect);
}

Matrix closed_form(const QPipeline& p, int n, const std::array<int, 3>& s)
{
    const Complex& qp = p.qprime;
    Matrix ul = qp.diff(n).scaled(s[0]);
    Matrix ur = p.s_pair.component(n).scaled(s[1]);
    Matrix lr = Matrix::block_diag(qp.diff(n - 2), qp.diff(n - 2)).scaled(s[2]);
    Matrix ll(kZ, lr.rows(), ul.cols());
    return Matrix::vstack(Matrix::hstack(ul, ur), Matrix::hstack(ll, lr));
}

Reconciliation reconcile(const QPipeline& p)
{
    Reconciliation r;
    r.degrees_compared = p.N;
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1}) {
                std::array<int, 3> s{a, b, c};
                bool all = true;
                for (int n = 0; n < p.N && all; ++n)
                    all = closed_form(p, n, s) == p.q.diff(n);
                if (all)
                    r.matching_signs.push_back(s);
            }
    for (int n = 0; n + 2 <= p.N; ++n)
        if (p.qprime.rank(n + 1) == p.qprime.rank(n) && p.qprime.rank(n + 2) == p.qprime.rank(n + 1))
            r.shifted_index_fits.push_back(n);
    return r;
}

void append_rows(std::ostringstream& os, const std::string& name, const std::vector<linalg::PresentedAbGroup>& t)
{
    for (std::size_t n = 0; n < t.size(); ++n) {
        os << name << ',' << n << ',' << t[n].betti << ',';
        for (std::size_t i = 0; i < t[n].torsion.size(); ++i)
            os << (i ? ";" : "") << t[n].torsion[i].get_str();
        os << '\n';
    }
}

}  // namespace

Matrix build_delta(const Linearization& F, int n)
{
    Matrix d(kZ, F.rank(n), F.rank(n + 1));
    for (int i = 1; i <= n + 1; ++i) {
        Matrix term = F.induced(n + 1, Op::face(0, i)) - F.induced(n + 1, Op::face(1, i)) +
                      F.induced(n + 1, Op::face(2, i));
        d += i % 2 ? -term : term;
    }
    return d;
}

Complex build_qprime(const Linearization& F, int N)
{
    Complex c;
    for (int n = 0; n <= N; ++n)
        c.ranks.push_back(F.rank(n));
    for (int n = 0; n < N; ++n)
        c.diffs.push_back(build_delta(F, n));
    return c;
}

ChainMap build_s_hat(const Linearization& F, const Complex& qprime, int k)
{
    const int N = static_cast<int>(qprime.ranks.size()) - 1;
    ChainMap f{chain::truncate(chain::shift(qprime), N), qprime, {}};
    f.components.push_back(Matrix(kZ, qprime.rank(0), 0));
    for (int n = 1; n <= N; ++n)
        f.components.push_back(F.induced(n - 1, Op::degen(k, 1)));
    return f;
}

ChainMap build_pair(const ChainMap& s0, const ChainMap& s1)
{
    if (s0.dst != s1.dst || s0.src != s1.src)
        throw Error(Errc::ShapeMismatch, "build_pair: maps do not share source and target");
    ChainMap f{chain::direct_sum(s0.src, s1.src), s0.dst, {}};
    const int top = static_cast<int>(s0.components.size());
    for (int n = 0; n < top; ++n)
        f.components.push_back(Matrix::hstack(s0.component(n), s1.component(n)));
    return f;
}

QPipeline build_q(const Linearization& F, int N)
{
    QPipeline p;
    p.category = F.skeleton().category().to_string();
    p.functor = F.name();
    p.N = N;
    p.qprime = build_qprime(F, N);
    require(chain::complex_defect(p.qprime), "Q'");
    p.sigma_qprime = chain::truncate(chain::shift(p.qprime), N);
    p.sigma_sum = chain::direct_sum(p.sigma_qprime, p.sigma_qprime);
    require(chain::complex_defect(p.sigma_sum), "SQ' (+) SQ'");
    p.s_hat0 = build_s_hat(F, p.qprime, 0);
    p.s_hat1 = build_s_hat(F, p.qprime, 1);
    require(chain::chain_map_defect(p.s_hat0), "s-hat_0");
    require(chain::chain_map_defect(p.s_hat1), "s-hat_1");
    p.s_pair = build_pair(p.s_hat0, p.s_hat1);
    require(chain::chain_map_defect(p.s_pair), "(s-hat_0, s-hat_1)");
    auto cone = chain::mapping_cone(p.s_pair);
    p.q = chain::truncate(cone.complex, N);
    p.inclusion = chain::truncate(cone.inclusion, N);
    require(chain::complex_defect(p.q), "Q");
    for (int n = 0; n <= N; ++n)
        if (p.q.rank(n) != p.qprime.rank(n) + 2 * p.qprime.rank(n - 2))
            throw Error(Errc::PreconditionViolated, "rank Q_" + std::to_string(n) + " = " +
                                                        std::to_string(p.q.rank(n)) + " breaks the cone count");
    p.reconciliation = reconcile(p);
    return p;
}

nlohmann::json Reconciliation::to_json() const
{
    nlohmann::json signs = nlohmann::json::array();
    for (const auto& s : matching_signs)
        signs.push_back(s);
    bool standard = false;
    for (const auto& s : matching_signs)
        standard = standard || s == std::array<int, 3>{1, 1, 1};
    return {
        {"cone_differential", "[[delta_n, (s0,s1)_n], [0, -(-delta_{n-2} (+) -delta_{n-2})]]"},
        {"closed_form", "[[a delta_n, b (s0,s1)_n], [0, c (delta_{n-2} (+) delta_{n-2})]]"},
        {"degrees_compared", degrees_compared},
        {"matching_signs", std::move(signs)},
        {"all_plus_matches", standard},
        {"upper_left_delta_n_plus_1_shape_fits_at", shifted_index_fits},
        {"note",
         "The lower-right block of the cone is minus the differential of SQ' (+) SQ', which is itself "
         "-delta (+) -delta, so the two negations cancel and the closed form holds with every block sign +1. "
         "The upper-left block maps Q'_{n+1} to Q'_n and is delta_n; delta_{n+1} has the shape "
         "rank Q'_{n+1} x rank Q'_{n+2} and only fits in the degrees listed, where the ranks coincide."},
    };
}

HomologyReport homology_report(const Complex& qprime, const Complex& q, int up_to)
{
    const int top = std::min(up_to, static_cast<int>(qprime.ranks.size()) - 2);
    HomologyReport r;
    if (top < 0) {
        // Still validate the complexes.
        chain::homology_table(qprime, -1);
        chain::homology_table(q, -1);
        return r;
    }
    r.qprime = chain::homology_table(qprime, top);
    r.q = chain::homology_table(q, top);
    return r;
}

HomologyReport homology_report(const QPipeline& p, int up_to)
{
    return homology_report(p.qprime, p.q, up_to);
}

std::string HomologyReport::to_csv() const
{
    std::ostringstream os;
    os << "complex,degree,betti,torsion\n";
    append_rows(os, "Qprime", qprime);
    append_rows(os, "Q", q);
    return os.str();
}

}  // namespace qx::qengine

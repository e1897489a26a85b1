#include "cycinv/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cycinv {

InvariantSet brute_semigroup(long long p, long long b) {
    Action check(p, 1, b); // validates p prime, b nonzero mod p
    (void)check;
    std::set<std::pair<long long, long long>> members;
    for (long long c = 0; c <= p; ++c)
        for (long long d = 0; d <= p; ++d)
            if ((c || d) && (c + b * d) % p == 0) members.insert({c, d});
    InvariantSet inv;
    inv.p = p;
    inv.b = b;
    for (const auto& [c, d] : members) {
        bool decomposable = false;
        for (const auto& [c1, d1] : members) {
            if (c1 > c || d1 > d) continue;
            if (members.count({c - c1, d - d1})) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) inv.points.push_back({c, d});
    }
    std::sort(inv.points.begin(), inv.points.end(),
              [](const ExponentPair& a, const ExponentPair& b2) { return a.c > b2.c; });
    return inv;
}

bool kernel_membership(const Polynomial& f, const InvariantSet& inv) {
    RingPtr xy = make_ring({"x1", "x2"}, {1, 1});
    Polynomial image(xy);
    for (const auto& [m, coef] : f.terms()) {
        long long e1 = 0, e2 = 0;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            e1 += (long long)m.e[i] * inv.points[i].c;
            e2 += (long long)m.e[i] * inv.points[i].d;
        }
        image.add_term(Monomial{{(int)e1, (int)e2}}, coef);
    }
    return image.is_zero();
}

long long hilbert_count_invariants(long long p, long long b, long long degree) {
    long long count = 0;
    for (long long d = 0; d <= degree; ++d)
        if (((degree - d) + b * d) % p == 0) ++count;
    return count;
}

VerifyReport verify_resolution(const Resolution& res, const Ideal& I, const InvariantSet& inv) {
    VerifyReport rep;
    const RingPtr& R = res.ring;
    if (!(*R == *I.ring)) {
        rep.fail("resolution and ideal live in different rings");
        return rep;
    }

    for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i) {
        const PolyMatrix& A = res.differentials[i];
        const PolyMatrix& B = res.differentials[i + 1];
        for (std::size_t r = 0; r < A.rows(); ++r)
            for (std::size_t c = 0; c < B.cols(); ++c) {
                Polynomial acc(R);
                for (std::size_t k = 0; k < A.cols(); ++k) acc += A.entries[r][k] * B.entries[k][c];
                if (!acc.is_zero()) {
                    std::ostringstream os;
                    os << "d" << i + 1 << " * d" << i + 2 << " nonzero at (" << r << "," << c << ")";
                    rep.fail(os.str());
                }
            }
    }

    for (std::size_t i = 0; i < res.differentials.size(); ++i) {
        const PolyMatrix& D = res.differentials[i];
        for (std::size_t r = 0; r < D.rows(); ++r)
            for (std::size_t c = 0; c < D.cols(); ++c) {
                const Polynomial& f = D.entries[r][c];
                if (f.is_zero()) continue;
                auto deg = f.homogeneous_degree();
                std::ostringstream at;
                at << "d" << i + 1 << " entry (" << r << "," << c << ")";
                if (f.term_count() == 1 && f.terms().begin()->first.is_one())
                    rep.fail(at.str() + " is a unit (resolution not minimal)");
                if (!deg)
                    rep.fail(at.str() + " is not homogeneous");
                else if (*deg != D.col_twists[c] - D.row_twists[r])
                    rep.fail(at.str() + " has degree inconsistent with its twists");
            }
        if (D.rows() != res.modules[i].rank() || D.cols() != res.modules[i + 1].rank() ||
            D.row_twists != res.modules[i].twists || D.col_twists != res.modules[i + 1].twists)
            rep.fail("differential " + std::to_string(i + 1) + " shape disagrees with its modules");
    }

    if (res.length() + 2 != inv.size())
        rep.fail("length " + std::to_string(res.length()) + " != generator count - 2");

    MonomialOrder ord = MonomialOrder::weighted_grevlex(R->degrees);
    if (res.differentials.empty()) {
        if (!I.gens.empty() && !ideal_equal(I, Ideal{R, {}}, ord))
            rep.fail("empty resolution but nonzero ideal");
    } else {
        Ideal J{R, res.differentials[0].entries[0]};
        if (!ideal_equal(I, J, ord)) rep.fail("first differential does not generate the ideal");
    }

    // Graded Euler characteristic: sum_i (-1)^i sum_j t^{twist_ij} over the
    // product (1 - t^{w_k}) must be the Hilbert series of the invariant
    // ring.  Compare coefficients through degree 3p.
    const long long D = 3 * inv.p;
    std::vector<long long> coef(D + 1, 0);
    for (std::size_t i = 0; i < res.modules.size(); ++i)
        for (long long t : res.modules[i].twists)
            if (t <= D) coef[t] += (i % 2 == 0) ? 1 : -1;
    for (long long w : R->degrees)
        for (long long n = w; n <= D; ++n) coef[n] += coef[n - w];
    for (long long n = 0; n <= D; ++n)
        if (coef[n] != hilbert_count_invariants(inv.p, inv.b, n)) {
            rep.fail("Hilbert series mismatch at degree " + std::to_string(n));
            break;
        }

    return rep;
}

} // namespace cycinv

#include "cycinv/semigroup.hpp"

#include <algorithm>

namespace cycinv {

bool InvariantSet::contains(const ExponentPair& e) const {
    return std::find(points.begin(), points.end(), e) != points.end();
}

CanonicalAction normalize(const Action& act) {
    // Rescaling the group generator by a^{-1} turns (a,b) into (1, a^{-1} b).
    long long b1 = residue(mod_inverse(act.a, act.p) * act.b, act.p);
    long long b2 = mod_inverse(b1, act.p);
    if (b1 <= b2) return {act.p, b1, b2, false};
    // Swapping x1 and x2 replaces b by its inverse.
    return {act.p, b2, b1, true};
}

InvariantSet invariant_generators(long long p, long long b) {
    Action act(p, 1, b); // validates p prime, 0 < b < p
    b = act.b;
    // Candidate pool: for each x2-degree d in [0, p] the least c >= 0 with
    // c + b*d = 0 mod p.  Every Hilbert-basis element appears here: any
    // invariant (c,d) with d <= p and c >= p splits off the generator (p,0).
    std::vector<long long> cof(p + 1);
    for (long long d = 0; d <= p; ++d) cof[d] = residue(-b * d, p);
    cof[0] = p;  // (0,0) is trivial; the d = 0 generator is (p,0)
    cof[p] = 0;  // d = p pairs with c = 0
    InvariantSet inv;
    inv.p = p;
    inv.b = b;
    for (long long d = 0; d <= p; ++d) {
        // (cof[d], d) is decomposable iff it is a sum of two candidates;
        // the c-components then sum exactly (cof[d1] + cof[d2] is cof[d] or
        // cof[d] + p, never less).
        bool decomposable = false;
        for (long long d1 = 1; !decomposable && 2 * d1 <= d; ++d1)
            decomposable = cof[d1] + cof[d - d1] == cof[d];
        if (!decomposable) inv.points.push_back({cof[d], d});
    }
    // cof is strictly decreasing on kept points as d grows, so the staircase
    // order (c desc, d asc) is already in place.
    return inv;
}

std::vector<ExponentPair> division_family(long long p, long long b) {
    Action act(p, 1, b);
    b = act.b;
    long long binv = mod_inverse(b, p);
    long long q = p / b, s = p / binv;
    std::set<ExponentPair> fam;
    for (long long k = 0; k <= q; ++k) fam.insert({p - k * b, k});
    for (long long m = 0; m <= s; ++m) fam.insert({m, p - m * binv});
    return {fam.begin(), fam.end()};
}

std::optional<InvariantSet> special_cases(long long p, long long b) {
    Action act(p, 1, b);
    b = act.b;
    InvariantSet inv;
    inv.p = p;
    inv.b = b;
    if (b == 1) {
        for (long long k = 0; k <= p; ++k) inv.points.push_back({p - k, k});
        return inv;
    }
    if (b == p - 1) {
        inv.points = {{p, 0}, {1, 1}, {0, p}};
        return inv;
    }
    return std::nullopt;
}

SlopeSet slopes(const InvariantSet& inv) {
    SlopeSet sl;
    for (std::size_t i = 0; i + 1 < inv.points.size(); ++i) {
        const auto& [c1, d1] = inv.points[i];
        const auto& [c2, d2] = inv.points[i + 1];
        sl.insert(Rational(d2 - d1) / (c2 - c1));
    }
    return sl;
}

std::vector<long long> degrees(const InvariantSet& inv) {
    std::vector<long long> deg;
    deg.reserve(inv.points.size());
    for (const auto& e : inv.points) deg.push_back(e.c + e.d);
    return deg;
}

} // namespace cycinv

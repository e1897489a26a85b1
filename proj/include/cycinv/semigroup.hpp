#pragma once

#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "cycinv/modarith.hpp"
#include "cycinv/rational.hpp"

// The exponent semigroup of an invariant ring: a monomial x1^c x2^d is
// invariant under the canonical weight-(1,b) action iff c + b*d = 0 mod p.
// This module computes the minimal (Hilbert basis) generators and the
// combinatorial data attached to them.

namespace cycinv {

struct ExponentPair {
    long long c, d;
    auto operator<=>(const ExponentPair&) const = default;
};

// Minimal generating exponents of the invariant ring, in staircase order:
// c strictly decreasing, d strictly increasing.  Every generator satisfies
// 0 <= c,d <= p, first point is (p,0), last is (0,p).
struct InvariantSet {
    long long p = 0;
    long long b = 0; // canonical weight, membership test is c + b*d = 0 mod p
    std::vector<ExponentPair> points;

    std::size_t size() const { return points.size(); }
    bool contains(const ExponentPair& e) const;
};

// Negated slopes of consecutive staircase segments, as a set (repeated
// slopes collapse).  All slopes are negative rationals.
using SlopeSet = std::set<Rational>;

// Reduce an arbitrary faithful action to the canonical a = 1, b <= b_inv
// form; the invariant set of the original action equals that of the
// canonical one, up to swapping the two variables when `swapped` is set.
CanonicalAction normalize(const Action& act);

// Hilbert basis of {(c,d) >= 0 : c + b*d = 0 mod p}.  Requires p prime and,
// as with Action, 0 < b < p after reduction.
InvariantSet invariant_generators(long long p, long long b);

// The two division-algorithm families: writing p = b*q + r and
// p = b_inv*s + t, the points {(p - k*b, k) : 0 <= k <= q} and
// {(m, p - m*b_inv) : 0 <= m <= s}.  Returned as a single lex-sorted set;
// always a subset of invariant_generators(p, b).
std::vector<ExponentPair> division_family(long long p, long long b);

// Closed-form invariant sets: b = 1 (Veronese staircase) and b = p-1
// (three generators).  nullopt for any other weight.
std::optional<InvariantSet> special_cases(long long p, long long b);

// Slopes (d2-d1)/(c2-c1) over consecutive staircase points.
SlopeSet slopes(const InvariantSet& inv);

// Internal degrees c + d of the generators, in staircase order.
std::vector<long long> degrees(const InvariantSet& inv);

} // namespace cycinv

#pragma once

#include <string>

#include "cycinv/semigroup.hpp"

// Structural classification of an action from its arithmetic: the product
// invariant (p-b)(p-b_inv), the division data of p by b and b_inv, and the
// slope count together decide which presentation family applies.

namespace cycinv {

enum class ClassKind {
    Veronese,        // b = 1: p+1 generators, determinantal staircase
    ThreeGenerators, // b = p-1: <y1^p - y0*y2>
    Codim2,          // (p-b)(p-b_inv) = p+1: 4 generators, Hilbert-Burch
    FiveGen2p1Lower, // (p-b)(p-b_inv) = 2p+1, b = (p-1)/3 branch
    FiveGen2p1Upper, // (p-b)(p-b_inv) = 2p+1, b > (p-1)/2 branch
    TwoSlope,        // r = s and q = t: exactly two distinct slopes
    General,
};

std::string to_string(ClassKind k);

// Quotients and remainders of p by the canonical weight and its inverse:
// p = b*q + r, p = b_inv*s + t with 0 <= r < b, 0 <= t < b_inv.
struct DivisionData {
    long long q = 0, r = 0, s = 0, t = 0;
};

DivisionData division_data(long long p, long long b);

// (p-b)(p-b_inv); always 1 mod p for a faithful action.
long long product_invariant(long long p, long long b);

struct Classification {
    CanonicalAction action;
    InvariantSet inv;     // for the canonical weight
    ClassKind kind = ClassKind::General;
    long long product = 0; // (p-b)(p-b_inv)
    long long k = 0;       // (product-1)/p
    DivisionData div;
    SlopeSet slope_set;
};

// Classify an action, normalizing it first.  Every classification
// cross-checks the structural facts the label promises (generator counts,
// slope counts, branch arithmetic) against the computed invariant set and
// throws TheoremViolation if any fails.
Classification classify(const Action& act);
Classification classify(long long p, long long b); // weight-(1,b) action

} // namespace cycinv

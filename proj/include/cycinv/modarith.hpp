#pragma once

#include <cstdint>
#include <stdexcept>

// Modular arithmetic over a prime modulus p.  All routines are exact and
// deterministic.  p is limited to fit in int64 with room for products via
// 128-bit intermediates, so any p < 2^62 is safe; the library's own use
// stays far below that.

namespace cycinv {

// Thrown when classification-level consistency checks fail, i.e. a computed
// result contradicts a structure theorem the code relies on.  Distinct from
// invalid_argument (bad parameters) and domain_error (op not applicable).
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Deterministic Miller-Rabin, correct for every value of int64.
bool is_prime(long long p);

// Representative of c mod p in [0, p).  Requires p > 0.
long long residue(long long c, long long p);

// Inverse of c mod p via extended Euclid.  Requires p prime and c not
// divisible by p; result lies in [1, p).
long long mod_inverse(long long c, long long p);

// A weighted action on two variables: generator scales x1 by zeta^a and
// x2 by zeta^b for zeta a primitive p-th root of unity.  Weights are kept
// as residues in [0, p); both must be nonzero mod p (faithful on each axis)
// and p must be prime.
struct Action {
    long long p, a, b;
    Action(long long p_, long long a_, long long b_);
};

// Canonical form of an action: a = 1 and b <= b_inv, where b_inv is the
// inverse of b mod p.  swapped records whether the b <-> b_inv transposition
// was applied on top of the a-normalization.
struct CanonicalAction {
    long long p, b, b_inv;
    bool swapped;
};

} // namespace cycinv

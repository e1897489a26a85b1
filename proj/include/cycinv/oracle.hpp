#pragma once

#include "cycinv/resolution.hpp"

// Independent brute-force checks.  Everything here recomputes from first
// principles (membership sieves, direct substitution, series expansion)
// without sharing code paths with the structured algorithms it validates.

namespace cycinv {

// Minimal generators of {(c,d) >= 0 : c + b*d = 0 mod p} by sieve: collect
// every member in the [0,p]^2 box and keep those that are not a sum of two
// nonzero members.  (Members outside the box split off (p,0) or (0,p), so
// the box contains every minimal generator.)  Returned in staircase order.
InvariantSet brute_semigroup(long long p, long long b);

// Does f vanish under y_i -> x1^{c_i} x2^{d_i}?  Decided by carrying out
// the substitution in C[x1,x2].
bool kernel_membership(const Polynomial& f, const InvariantSet& inv);

// Number of invariant monomials x1^c x2^d of total degree `degree` under
// the weight-(1,b) action: a direct count.
long long hilbert_count_invariants(long long p, long long b, long long degree);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

// Full audit of a claimed minimal graded free resolution of R/I for the
// invariant presentation attached to inv:
//   - consecutive differentials compose to zero,
//   - no differential entry is a nonzero constant (minimality),
//   - every entry is homogeneous of degree col twist - row twist,
//   - the first differential generates exactly I,
//   - the length is (number of invariant generators) - 2,
//   - the alternating twist sum reproduces the invariant-monomial counts
//     through degree 3p (graded Euler characteristic against the Hilbert
//     series of the invariant ring).
VerifyReport verify_resolution(const Resolution& res, const Ideal& I, const InvariantSet& inv);

} // namespace cycinv

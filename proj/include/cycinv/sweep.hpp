#pragma once

#include "cycinv/classify.hpp"

// Classification sweeps over all canonical actions with p <= p_max:
// one row per prime p and weight b with b <= b_inv (transposed actions
// share a row).  Rows are produced in (p, b) order regardless of the
// thread count.

namespace cycinv {

struct SweepRow {
    long long p = 0, b = 0, b_inv = 0;
    long long product = 0, k = 0;
    long long n_invariants = 0, n_slopes = 0;
    long long q = 0, r = 0, s = 0, t = 0;
    std::string label;
};

// Classify every canonical action with p <= p_max.  Each classification
// runs its structural cross-checks (TheoremViolation on failure); with
// use_oracle the invariant set is additionally recomputed by brute sieve
// and compared.  jobs > 1 distributes rows across threads; the result is
// identical for any job count.
std::vector<SweepRow> run_sweep(long long p_max, int jobs = 1, bool use_oracle = false);

// CSV with header p,b,b_inv,product,k,n_invariants,n_slopes,q,r,s,t,label.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

// JSON array of row objects with the same fields.
std::string sweep_to_json(const std::vector<SweepRow>& rows);

} // namespace cycinv

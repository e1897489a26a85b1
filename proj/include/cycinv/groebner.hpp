#pragma once

#include "cycinv/polyalg.hpp"
#include "cycinv/semigroup.hpp"

// Buchberger's algorithm with the normal selection strategy plus the
// coprimality and chain criteria, reduced Groebner bases as canonical ideal
// representatives, and the elimination-order computation of toric
// presentation kernels.

namespace cycinv {

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;
};

// Pair selection for the S-pair queue; reduced output is identical either
// way (reduced GBs are unique), which the tests exercise.
enum class PairStrategy { Normal, Fifo };

// A Groebner basis of <gens> under ord.  Input order independent up to the
// reduction performed afterwards; use reduce_basis for the canonical form.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                   PairStrategy strategy = PairStrategy::Normal);

// Unique reduced form: monic, no leading monomial divides another, no term
// of any element divisible by another's leading monomial; sorted by leading
// monomial ascending.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G, const MonomialOrder& ord);

// Presentation ring C[y0..yn] of an invariant set, graded by internal
// degrees c_i + d_i of the generators (staircase order).
RingPtr presentation_ring(const InvariantSet& inv);

// Ring order mandated for presentation rings: weighted grevlex with the
// internal degrees as weights, y0 > y1 > ... > yn.
MonomialOrder presentation_order(const InvariantSet& inv);

// The 2 x (n+1) matrix of generator exponents; columns are the staircase
// points.  Row 0 holds x1-exponents, row 1 holds x2-exponents.
struct DegreeMatrix {
    std::vector<long long> c_row, d_row;
};
DegreeMatrix degree_matrix(const InvariantSet& inv);

// Kernel of C[y0..yn] -> C[x1,x2], y_i -> x1^{c_i} x2^{d_i}, computed by
// Groebner elimination of x1, x2 from <y_i - x1^{c_i} x2^{d_i}>.  The
// returned generators are the reduced Groebner basis of the kernel under
// presentation_order(inv); all are pure-difference binomials, homogeneous
// in the internal grading.
Ideal toric_kernel(const InvariantSet& inv);

// Ideal equality via equality of reduced Groebner bases under ord.
bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& ord);

// Number of monomials of the given weighted degree not divisible by any
// leading monomial of the reduced basis of I: the Hilbert function of the
// quotient in that degree.
long long standard_monomial_count(const Ideal& I, const MonomialOrder& ord, long long degree);

} // namespace cycinv

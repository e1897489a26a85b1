#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cycinv/rational.hpp"

// Multivariate polynomials with exact rational coefficients over a weighted
// graded ring.  Monomial orders are passed explicitly to every operation
// that needs one; polynomials themselves store terms in a fixed structural
// (lex) order so that equality and iteration are order-independent.

namespace cycinv {

struct Monomial {
    std::vector<int> e; // exponents, one per ring variable

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    bool is_one() const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial operator/(const Monomial& m) const; // requires m.divides(*this)
    auto operator<=>(const Monomial&) const = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Variable names plus their internal degrees (weights).  Rings are compared
// structurally; operations on polynomials from different rings throw.
struct GradedRing {
    std::vector<std::string> vars;
    std::vector<long long> degrees;

    std::size_t nvars() const { return vars.size(); }
    long long weighted_degree(const Monomial& m) const;
    bool operator==(const GradedRing&) const = default;
};

using RingPtr = std::shared_ptr<const GradedRing>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<long long> degrees);

// Total orders on monomials of a fixed ring.  All three kinds are
// multiplicative well-orders refining divisibility.
class MonomialOrder {
public:
    // Graded reverse lex: higher weighted degree wins; on ties the monomial
    // whose last differing exponent is smaller wins.
    static MonomialOrder weighted_grevlex(std::vector<long long> weights);
    // Pure lexicographic, first variable most significant.
    static MonomialOrder lex(std::size_t nvars);
    // Two-block elimination order: the first `split` variables form the
    // front block; blocks are compared by weighted grevlex front-first, so
    // any monomial touching the front block beats any monomial that avoids
    // it.  Eliminates the front block.
    static MonomialOrder block_elimination(std::size_t split,
                                           std::vector<long long> front_weights,
                                           std::vector<long long> back_weights);

    // Negative / zero / positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    std::size_t nvars() const { return nvars_; }

private:
    enum class Kind { Grevlex, Lex, Block };
    Kind kind_ = Kind::Lex;
    std::size_t nvars_ = 0;
    std::size_t split_ = 0;
    std::vector<long long> w1_, w2_;
    MonomialOrder() = default;
    static int grevlex_cmp(const Monomial& a, const Monomial& b,
                           std::size_t lo, std::size_t hi, const std::vector<long long>& w);
};

struct Term {
    Monomial mono;
    Rational coeff;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t i, int power = 1);
    static Polynomial term(RingPtr ring, Monomial m, Rational c);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Leading data under an explicit order; throws on the zero polynomial.
    Term lead_term(const MonomialOrder& ord) const;
    const Monomial& lead_monomial(const MonomialOrder& ord) const;

    // Zero polynomials are homogeneous of any degree; otherwise all terms
    // must share one weighted degree.
    std::optional<long long> homogeneous_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    // Pure-difference binomial m1 - m2 (the shape of all toric relations).
    bool is_binomial_difference() const;

    void add_term(const Monomial& m, const Rational& c); // folds into the map, drops zeros

private:
    RingPtr ring_;
    std::map<Monomial, Rational> terms_;
    void check_same_ring(const Polynomial& g) const;
};

// Remainder of f on division by the list G, taken in list order: the
// greatest reducible term (under ord) is rewritten by the first element of
// G whose leading monomial divides it.  Deterministic; result has no term
// divisible by any leading monomial of G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord);

// S-polynomial (lcm/lt_f) f - (lcm/lt_g) g with both parts made monic.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

// Canonical rendering: terms in decreasing order under ord, `*` products,
// `^` powers, unit coefficients elided.
std::string to_string(const Polynomial& f, const MonomialOrder& ord);
std::string to_string(const Monomial& m, const GradedRing& ring);

} // namespace cycinv

#include "cycinv/polyalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cycinv {

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    if (e.size() != m.e.size()) throw std::invalid_argument("Monomial: variable count mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    if (e.size() != m.e.size()) throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    if (!m.divides(*this)) throw std::invalid_argument("Monomial: quotient is not a monomial");
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw std::invalid_argument("Monomial: variable count mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

long long GradedRing::weighted_degree(const Monomial& m) const {
    long long d = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i) d += degrees[i] * m.e[i];
    return d;
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<long long> degrees) {
    if (vars.size() != degrees.size())
        throw std::invalid_argument("make_ring: one degree per variable required");
    for (long long d : degrees)
        if (d <= 0) throw std::invalid_argument("make_ring: degrees must be positive");
    return std::make_shared<GradedRing>(GradedRing{std::move(vars), std::move(degrees)});
}

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<long long> weights) {
    MonomialOrder o;
    o.kind_ = Kind::Grevlex;
    o.nvars_ = weights.size();
    o.w1_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    o.nvars_ = nvars;
    return o;
}

MonomialOrder MonomialOrder::block_elimination(std::size_t split,
                                               std::vector<long long> front_weights,
                                               std::vector<long long> back_weights) {
    if (front_weights.size() != split)
        throw std::invalid_argument("block_elimination: front weight count must equal split");
    MonomialOrder o;
    o.kind_ = Kind::Block;
    o.split_ = split;
    o.nvars_ = split + back_weights.size();
    o.w1_ = std::move(front_weights);
    o.w2_ = std::move(back_weights);
    return o;
}

int MonomialOrder::grevlex_cmp(const Monomial& a, const Monomial& b,
                               std::size_t lo, std::size_t hi, const std::vector<long long>& w) {
    long long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += w[i - lo] * a.e[i];
        db += w[i - lo] * b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // Tie: the last differing exponent decides, smaller exponent wins.
    for (std::size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.e.size() != nvars_ || b.e.size() != nvars_)
        throw std::invalid_argument("MonomialOrder: variable count mismatch");
    switch (kind_) {
    case Kind::Grevlex:
        return grevlex_cmp(a, b, 0, nvars_, w1_);
    case Kind::Lex:
        for (std::size_t i = 0; i < nvars_; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    case Kind::Block: {
        int front = grevlex_cmp(a, b, 0, split_, w1_);
        if (front != 0) return front;
        return grevlex_cmp(a, b, split_, nvars_, w2_);
    }
    }
    return 0;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial f(std::move(ring));
    f.add_term(Monomial::one(f.ring_->nvars()), c);
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i, int power) {
    Polynomial f(std::move(ring));
    if (i >= f.ring_->nvars()) throw std::invalid_argument("Polynomial: no such variable");
    Monomial m = Monomial::one(f.ring_->nvars());
    m.e[i] = power;
    f.add_term(m, 1);
    return f;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational c) {
    Polynomial f(std::move(ring));
    if (m.e.size() != f.ring_->nvars()) throw std::invalid_argument("Polynomial: monomial size mismatch");
    f.add_term(m, c);
    return f;
}

void Polynomial::check_same_ring(const Polynomial& g) const {
    if (!ring_ || !g.ring_ || !(*ring_ == *g.ring_))
        throw std::invalid_argument("Polynomial: operands from different rings");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Term Polynomial::lead_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("lead_term: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

const Monomial& Polynomial::lead_monomial(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("lead_monomial: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return best->first;
}

std::optional<long long> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    long long d = ring_->weighted_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (ring_->weighted_degree(m) != d) return std::nullopt;
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    check_same_ring(g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    check_same_ring(g);
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    Polynomial r = *this;
    r += g;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    Polynomial r = *this;
    r -= g;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_same_ring(g);
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : g.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    for (const auto& [m1, c1] : terms_) r.terms_.emplace(m1 * m, c1 * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    check_same_ring(g);
    return terms_ == g.terms_;
}

bool Polynomial::is_binomial_difference() const {
    if (terms_.size() != 2) return false;
    auto it = terms_.begin();
    const Rational& c1 = it->second;
    const Rational& c2 = std::next(it)->second;
    return (c1 == 1 && c2 == -1) || (c1 == -1 && c2 == 1);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord) {
    struct Divisor {
        const Polynomial* g;
        Monomial lm;
        Rational lc;
    };
    std::vector<Divisor> divs;
    divs.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        Term lt = g.lead_term(ord);
        divs.push_back({&g, std::move(lt.mono), std::move(lt.coeff)});
    }
    Polynomial r = f;
    while (!r.is_zero()) {
        // Greatest term of r still divisible by some leading monomial.
        const Monomial* target = nullptr;
        const Divisor* chosen = nullptr;
        for (const auto& [m, c] : r.terms()) {
            if (target && !ord.less(*target, m)) continue;
            for (const auto& d : divs) {
                if (d.lm.divides(m)) {
                    target = &m;
                    chosen = &d;
                    break; // first divisor in list order
                }
            }
        }
        if (!target) break;
        Rational coef = r.terms().at(*target) / chosen->lc;
        r -= chosen->g->times_term(*target / chosen->lm, coef);
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("s_polynomial: zero operand");
    Term lf = f.lead_term(ord), lg = g.lead_term(ord);
    Monomial L = lcm(lf.mono, lg.mono);
    return f.times_term(L / lf.mono, 1 / lf.coeff) - g.times_term(L / lg.mono, 1 / lg.coeff);
}

std::string to_string(const Monomial& m, const GradedRing& ring) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << "*";
        os << ring.vars[i];
        if (m.e[i] != 1) os << "^" << m.e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

std::string to_string(const Polynomial& f, const MonomialOrder& ord) {
    if (f.is_zero()) return "0";
    std::vector<const Monomial*> monos;
    for (const auto& [m, c] : f.terms()) monos.push_back(&m);
    std::sort(monos.begin(), monos.end(),
              [&](const Monomial* a, const Monomial* b) { return ord.less(*b, *a); });
    std::ostringstream os;
    bool first = true;
    for (const Monomial* m : monos) {
        Rational c = f.terms().at(*m);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        bool unit = a == 1 && !m->is_one();
        if (!unit) {
            os << a.str();
            if (!m->is_one()) os << "*";
        }
        if (!m->is_one()) os << to_string(*m, *f.ring());
        first = false;
    }
    return os.str();
}

} // namespace cycinv

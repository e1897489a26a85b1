#include "cycinv/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cycinv {

namespace {

struct Pair {
    std::size_t i, j; // i < j
    Monomial lcm;
};

} // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                   PairStrategy strategy) {
    std::vector<Polynomial> G;
    std::vector<Monomial> lm;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        G.push_back(g);
        lm.push_back(g.lead_monomial(ord));
    }
    std::deque<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) queue.push_back({i, j, lcm(lm[i], lm[j])});
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        std::size_t pick = 0;
        if (strategy == PairStrategy::Normal) {
            // Normal strategy: smallest lcm under the working order; ties by
            // generation order (queue position) for determinism.
            for (std::size_t k = 1; k < queue.size(); ++k)
                if (ord.less(queue[k].lcm, queue[pick].lcm)) pick = k;
        }
        Pair pr = queue[pick];
        queue.erase(queue.begin() + (std::ptrdiff_t)pick);
        handled.insert({pr.i, pr.j});

        if (coprime(lm[pr.i], lm[pr.j])) continue;
        // Chain criterion: some k with LT(g_k) | lcm(i,j) and both (i,k),
        // (j,k) already handled makes this pair redundant.
        bool chained = false;
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j || !lm[k].divides(pr.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            chained = handled.count(key(pr.i, k)) && handled.count(key(pr.j, k));
        }
        if (chained) continue;

        Polynomial s = s_polynomial(G[pr.i], G[pr.j], ord);
        Polynomial r = normal_form(s, G, ord);
        if (r.is_zero()) continue;
        G.push_back(r);
        lm.push_back(r.lead_monomial(ord));
        push_pairs_for(G.size() - 1);
    }
    return G;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G, const MonomialOrder& ord) {
    std::erase_if(G, [](const Polynomial& g) { return g.is_zero(); });
    // Minimalize: drop any element whose leading monomial another's divides.
    std::vector<Monomial> lm;
    for (const auto& g : G) lm.push_back(g.lead_monomial(ord));
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (lm[j].divides(lm[i]) && !(lm[i] == lm[j] && j > i)) keep[i] = false;
        }
    std::vector<Polynomial> M;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) M.push_back(G[i].scaled(1 / G[i].lead_term(ord).coeff));
    // Tail-reduce to fixpoint: leading monomials are stable under this.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < M.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < M.size(); ++j)
                if (j != i) others.push_back(M[j]);
            Polynomial r = normal_form(M[i], others, ord);
            if (r != M[i]) {
                if (r.is_zero()) throw std::logic_error("reduce_basis: minimal element reduced to zero");
                M[i] = r.scaled(1 / r.lead_term(ord).coeff);
                changed = true;
            }
        }
    }
    std::sort(M.begin(), M.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.lead_monomial(ord), b.lead_monomial(ord));
    });
    return M;
}

RingPtr presentation_ring(const InvariantSet& inv) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < inv.size(); ++i) names.push_back("y" + std::to_string(i));
    return make_ring(std::move(names), degrees(inv));
}

MonomialOrder presentation_order(const InvariantSet& inv) {
    return MonomialOrder::weighted_grevlex(degrees(inv));
}

DegreeMatrix degree_matrix(const InvariantSet& inv) {
    DegreeMatrix A;
    for (const auto& [c, d] : inv.points) {
        A.c_row.push_back(c);
        A.d_row.push_back(d);
    }
    return A;
}

Ideal toric_kernel(const InvariantSet& inv) {
    const std::size_t n = inv.size();
    if (n == 0) throw std::invalid_argument("toric_kernel: empty invariant set");
    // Extended ring x1, x2, y0..yn with the x-block eliminated first.
    std::vector<std::string> names = {"x1", "x2"};
    std::vector<long long> degs = {1, 1};
    auto ydegs = degrees(inv);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("y" + std::to_string(i));
        degs.push_back(ydegs[i]);
    }
    RingPtr ext = make_ring(names, degs);
    MonomialOrder elim = MonomialOrder::block_elimination(2, {1, 1}, ydegs);

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Monomial mx = Monomial::one(n + 2);
        mx.e[0] = (int)inv.points[i].c;
        mx.e[1] = (int)inv.points[i].d;
        Polynomial g = Polynomial::variable(ext, i + 2);
        g.add_term(mx, -1);
        gens.push_back(std::move(g));
    }
    auto gb = reduce_basis(buchberger(gens, elim), elim);

    // The x-free part of the reduced basis is the reduced basis of the
    // elimination ideal under the order's restriction to the y-block, which
    // is exactly presentation_order(inv).
    RingPtr pres = presentation_ring(inv);
    Ideal K{pres, {}};
    for (const auto& g : gb) {
        bool xfree = true;
        for (const auto& [m, c] : g.terms())
            if (m.e[0] != 0 || m.e[1] != 0) { xfree = false; break; }
        if (!xfree) continue;
        Polynomial h(pres);
        for (const auto& [m, c] : g.terms()) {
            Monomial my{std::vector<int>(m.e.begin() + 2, m.e.end())};
            h.add_term(my, c);
        }
        K.gens.push_back(std::move(h));
    }
    return K;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& ord) {
    if (!(*I.ring == *J.ring)) throw std::invalid_argument("ideal_equal: different rings");
    auto gi = reduce_basis(buchberger(I.gens, ord), ord);
    auto gj = reduce_basis(buchberger(J.gens, ord), ord);
    return gi == gj;
}

namespace {

// Enumerate exponent vectors with prescribed weighted degree, counting those
// no leading monomial divides.
void count_rec(const std::vector<long long>& w, const std::vector<Monomial>& lms,
               Monomial& cur, std::size_t idx, long long remaining, long long& total) {
    if (idx + 1 == w.size()) {
        if (remaining % w[idx] != 0) return;
        cur.e[idx] = (int)(remaining / w[idx]);
        for (const auto& lm : lms)
            if (lm.divides(cur)) { cur.e[idx] = 0; return; }
        ++total;
        cur.e[idx] = 0;
        return;
    }
    for (long long k = 0; k * w[idx] <= remaining; ++k) {
        cur.e[idx] = (int)k;
        // Prune: a leading monomial supported on already-fixed variables
        // cannot be escaped further down.
        bool dead = false;
        for (const auto& lm : lms) {
            bool fits = true;
            for (std::size_t i = 0; i <= idx && fits; ++i) fits = lm.e[i] <= cur.e[i];
            for (std::size_t i = idx + 1; i < w.size() && fits; ++i) fits = lm.e[i] == 0;
            if (fits) { dead = true; break; }
        }
        if (!dead) count_rec(w, lms, cur, idx + 1, remaining - k * w[idx], total);
    }
    cur.e[idx] = 0;
}

} // namespace

long long standard_monomial_count(const Ideal& I, const MonomialOrder& ord, long long degree) {
    if (degree < 0) throw std::invalid_argument("standard_monomial_count: negative degree");
    auto gb = reduce_basis(buchberger(I.gens, ord), ord);
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.lead_monomial(ord));
    Monomial cur = Monomial::one(I.ring->nvars());
    long long total = 0;
    count_rec(I.ring->degrees, lms, cur, 0, degree, total);
    return total;
}

} // namespace cycinv

#include "cycinv/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace cycinv {

namespace {

// ---- module-level Groebner machinery (Schreyer orders) ----
//
// Elements of a free module F over the ring are stored as one Polynomial per
// basis position.  A Schreyer order on F is induced by a chosen Groebner
// basis downstairs: terms compare by their accumulated monomial image in
// F_0 under the composed leading-term maps, with ties broken positionally,
// deepest level first, smaller position greater.

using ModVec = std::vector<Polynomial>;

struct ModLead {
    std::size_t pos;
    Monomial m;
    Rational c;
};

struct ModCtx {
    RingPtr ring;
    const MonomialOrder* ord;
    std::vector<long long> twists;
    std::vector<Monomial> mu;                  // accumulated image in F_0
    std::vector<std::vector<std::size_t>> chain; // positions along the descent, deepest first

    std::size_t rank() const { return twists.size(); }

    int cmp(std::size_t p1, const Monomial& m1, std::size_t p2, const Monomial& m2) const {
        int c = ord->compare(m1 * mu[p1], m2 * mu[p2]);
        if (c != 0) return c;
        const auto& ch1 = chain[p1];
        const auto& ch2 = chain[p2];
        for (std::size_t i = 0; i < ch1.size(); ++i)
            if (ch1[i] != ch2[i]) return ch1[i] < ch2[i] ? 1 : -1;
        if (p1 != p2) return p1 < p2 ? 1 : -1;
        return 0;
    }
};

ModCtx f0_ctx(const RingPtr& ring, const MonomialOrder& ord) {
    ModCtx ctx;
    ctx.ring = ring;
    ctx.ord = &ord;
    ctx.twists = {0};
    ctx.mu = {Monomial::one(ring->nvars())};
    ctx.chain = {{}};
    return ctx;
}

ModVec zero_vec(const RingPtr& ring, std::size_t rank) {
    return ModVec(rank, Polynomial(ring));
}

bool vec_is_zero(const ModVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Polynomial& f) { return f.is_zero(); });
}

std::optional<ModLead> mod_lead(const ModVec& v, const ModCtx& ctx) {
    std::optional<ModLead> best;
    for (std::size_t pos = 0; pos < v.size(); ++pos)
        for (const auto& [m, c] : v[pos].terms())
            if (!best || ctx.cmp(best->pos, best->m, pos, m) < 0) best = ModLead{pos, m, c};
    return best;
}

// Homogeneous internal degree of a module element, if any.
std::optional<long long> vec_degree(const ModVec& v, const ModCtx& ctx) {
    std::optional<long long> deg;
    for (std::size_t pos = 0; pos < v.size(); ++pos)
        for (const auto& [m, c] : v[pos].terms()) {
            long long d = ctx.ring->weighted_degree(m) + ctx.twists[pos];
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
    return deg ? deg : std::optional<long long>(0);
}

// Full normal form of f against G; the greatest reducible term is rewritten
// by the first eligible divisor in list order.  When quot is given it
// accumulates the division coefficients: f = sum quot[l]*G[l] + remainder.
ModVec mod_normal_form(ModVec f, const std::vector<ModVec>& G, const std::vector<ModLead>& lead,
                       const ModCtx& ctx, std::vector<Polynomial>* quot) {
    while (true) {
        bool have = false;
        std::size_t bpos = 0, bdiv = 0;
        Monomial bm;
        for (std::size_t pos = 0; pos < f.size(); ++pos)
            for (const auto& [m, c] : f[pos].terms()) {
                if (have && ctx.cmp(bpos, bm, pos, m) >= 0) continue;
                for (std::size_t l = 0; l < G.size(); ++l)
                    if (lead[l].pos == pos && lead[l].m.divides(m)) {
                        have = true;
                        bpos = pos;
                        bm = m;
                        bdiv = l;
                        break;
                    }
            }
        if (!have) return f;
        Rational coef = f[bpos].terms().at(bm) / lead[bdiv].c;
        Monomial shift = bm / lead[bdiv].m;
        for (std::size_t pos = 0; pos < f.size(); ++pos)
            f[pos] -= G[bdiv][pos].times_term(shift, coef);
        if (quot) (*quot)[bdiv].add_term(shift, coef);
    }
}

std::vector<ModLead> leads_of(const std::vector<ModVec>& G, const ModCtx& ctx) {
    std::vector<ModLead> lead;
    lead.reserve(G.size());
    for (const auto& g : G) {
        auto l = mod_lead(g, ctx);
        if (!l) throw std::logic_error("module basis contains a zero element");
        lead.push_back(*l);
    }
    return lead;
}

// Next Schreyer level: F_new has one basis element per element of G, with
// twists, accumulated monomials and tie chains taken through G's leads.
ModCtx make_next_ctx(const std::vector<ModVec>& G, const std::vector<ModLead>& lead,
                     const ModCtx& prev) {
    ModCtx ctx;
    ctx.ring = prev.ring;
    ctx.ord = prev.ord;
    for (std::size_t j = 0; j < G.size(); ++j) {
        ctx.twists.push_back(prev.ring->weighted_degree(lead[j].m) + prev.twists[lead[j].pos]);
        ctx.mu.push_back(lead[j].m * prev.mu[lead[j].pos]);
        auto ch = prev.chain[lead[j].pos];
        ch.push_back(lead[j].pos);
        ctx.chain.push_back(std::move(ch));
    }
    return ctx;
}

// Schreyer generators of Syz(G): one syzygy per same-position leading pair,
// lifted through the division algorithm.  G must be a Groebner basis of the
// submodule it generates (every S-vector reduces to zero).
std::vector<ModVec> schreyer_syzygies(const std::vector<ModVec>& G, const std::vector<ModLead>& lead,
                                      const ModCtx& prev) {
    std::vector<ModVec> syz;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t k = j + 1; k < G.size(); ++k) {
            if (lead[j].pos != lead[k].pos) continue;
            Monomial L = lcm(lead[j].m, lead[k].m);
            Monomial uj = L / lead[j].m, uk = L / lead[k].m;
            ModVec s = zero_vec(prev.ring, prev.rank());
            for (std::size_t pos = 0; pos < prev.rank(); ++pos)
                s[pos] = G[j][pos].times_term(uj, 1 / lead[j].c) -
                         G[k][pos].times_term(uk, 1 / lead[k].c);
            std::vector<Polynomial> quot(G.size(), Polynomial(prev.ring));
            ModVec rem = mod_normal_form(std::move(s), G, lead, prev, &quot);
            if (!vec_is_zero(rem))
                throw std::logic_error("schreyer_syzygies: input is not a Groebner basis");
            ModVec sigma = zero_vec(prev.ring, G.size());
            sigma[j].add_term(uj, 1 / lead[j].c);
            sigma[k].add_term(uk, -(1 / lead[k].c));
            for (std::size_t l = 0; l < G.size(); ++l) sigma[l] -= quot[l];
            syz.push_back(std::move(sigma));
        }
    return syz;
}

// Reduced module Groebner basis, sorted by (lead position asc, lead monomial
// structurally-lex desc).  The sort both fixes a canonical form and makes
// the next level's syzygy leads drop the earliest variable still in play,
// which bounds the tower length by the variable count.
std::vector<ModVec> mod_reduce_basis(std::vector<ModVec> G, const ModCtx& ctx) {
    std::erase_if(G, vec_is_zero);
    if (G.empty()) return G;
    auto lead = leads_of(G, ctx);
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j] || lead[j].pos != lead[i].pos) continue;
            if (lead[j].m.divides(lead[i].m) && !(lead[i].m == lead[j].m && j > i))
                keep[i] = false;
        }
    std::vector<ModVec> M;
    std::vector<ModLead> mlead;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (!keep[i]) continue;
        ModVec g = G[i];
        for (auto& f : g) f = f.scaled(1 / lead[i].c);
        M.push_back(std::move(g));
        mlead.push_back({lead[i].pos, lead[i].m, 1});
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < M.size(); ++i) {
            std::vector<ModVec> others;
            std::vector<ModLead> olead;
            for (std::size_t j = 0; j < M.size(); ++j)
                if (j != i) {
                    others.push_back(M[j]);
                    olead.push_back(mlead[j]);
                }
            ModVec r = mod_normal_form(M[i], others, olead, ctx, nullptr);
            if (r != M[i]) {
                if (vec_is_zero(r)) throw std::logic_error("mod_reduce_basis: minimal element vanished");
                auto l = mod_lead(r, ctx);
                for (auto& f : r) f = f.scaled(1 / l->c);
                M[i] = std::move(r);
                changed = true;
            }
        }
    }
    std::vector<std::size_t> idx(M.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (mlead[a].pos != mlead[b].pos) return mlead[a].pos < mlead[b].pos;
        return mlead[b].m < mlead[a].m; // structural lex, descending
    });
    std::vector<ModVec> out;
    out.reserve(M.size());
    for (std::size_t i : idx) out.push_back(std::move(M[i]));
    return out;
}

bool is_unit_entry(const Polynomial& f) {
    return f.term_count() == 1 && f.terms().begin()->first.is_one();
}

struct ComplexData {
    std::vector<std::vector<long long>> twists;               // per module
    std::vector<std::vector<std::vector<Polynomial>>> diff;   // diff[i] = d_{i+1} entries
};

// Cancel the unit at entry (r, c) of differential d_i (1-based level i):
// basis element c of F_i and basis element r of F_{i-1} split off as an
// isomorphic direct summand.
void cancel_unit(ComplexData& cx, const RingPtr& ring, std::size_t i, std::size_t r, std::size_t c) {
    auto& D = cx.diff[i - 1];
    if (i == 1) throw std::logic_error("cancel_unit: unit entry in the first differential");
    Rational u = D[r][c].terms().begin()->second;
    std::size_t rows = cx.twists[i - 1].size(), cols = cx.twists[i].size();
    std::vector<Polynomial> lambda(cols, Polynomial(ring));
    for (std::size_t c2 = 0; c2 < cols; ++c2)
        if (c2 != c) lambda[c2] = D[r][c2].scaled(1 / u);
    for (std::size_t c2 = 0; c2 < cols; ++c2) {
        if (c2 == c || lambda[c2].is_zero()) continue;
        for (std::size_t s = 0; s < rows; ++s) D[s][c2] -= lambda[c2] * D[s][c];
    }
    if (i < cx.diff.size()) {
        auto& E = cx.diff[i]; // d_{i+1}: rows indexed by F_i basis
        for (std::size_t c2 = 0; c2 < cols; ++c2) {
            if (c2 == c || lambda[c2].is_zero()) continue;
            for (std::size_t t = 0; t < E[c].size(); ++t) E[c][t] += lambda[c2] * E[c2][t];
        }
        for (const auto& f : E[c])
            if (!f.is_zero()) throw std::logic_error("cancel_unit: split row failed to vanish");
        E.erase(E.begin() + (std::ptrdiff_t)c);
    }
    if (i >= 2) {
        auto& C = cx.diff[i - 2]; // d_{i-1}: columns indexed by F_{i-1} basis
        for (auto& row : C) row.erase(row.begin() + (std::ptrdiff_t)r);
    }
    D.erase(D.begin() + (std::ptrdiff_t)r);
    for (auto& row : D) row.erase(row.begin() + (std::ptrdiff_t)c);
    cx.twists[i].erase(cx.twists[i].begin() + (std::ptrdiff_t)c);
    cx.twists[i - 1].erase(cx.twists[i - 1].begin() + (std::ptrdiff_t)r);
}

void minimize_complex(ComplexData& cx, const RingPtr& ring) {
    for (bool found = true; found;) {
        found = false;
        for (std::size_t i = 1; i <= cx.diff.size() && !found; ++i)
            for (std::size_t r = 0; r < cx.diff[i - 1].size() && !found; ++r)
                for (std::size_t c = 0; c < (cx.diff[i - 1].empty() ? 0 : cx.diff[i - 1][r].size()); ++c)
                    if (is_unit_entry(cx.diff[i - 1][r][c])) {
                        cancel_unit(cx, ring, i, r, c);
                        found = true;
                        break;
                    }
    }
    while (!cx.twists.empty() && cx.twists.back().empty()) {
        cx.twists.pop_back();
        cx.diff.pop_back();
    }
    for (std::size_t i = 0; i + 1 < cx.twists.size(); ++i)
        if (cx.twists[i].empty())
            throw std::logic_error("minimize_complex: interior module vanished");
}

// Sort each module's basis by twist ascending (stable), carrying the
// permutation through adjacent differentials.
void sort_by_twist(ComplexData& cx) {
    for (std::size_t i = 1; i < cx.twists.size(); ++i) {
        std::vector<std::size_t> idx(cx.twists[i].size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return cx.twists[i][a] < cx.twists[i][b]; });
        std::vector<long long> tw;
        for (std::size_t k : idx) tw.push_back(cx.twists[i][k]);
        cx.twists[i] = std::move(tw);
        auto& D = cx.diff[i - 1];
        for (auto& row : D) {
            std::vector<Polynomial> nr;
            nr.reserve(row.size());
            for (std::size_t k : idx) nr.push_back(std::move(row[k]));
            row = std::move(nr);
        }
        if (i < cx.diff.size()) {
            auto& E = cx.diff[i];
            std::vector<std::vector<Polynomial>> ne;
            ne.reserve(E.size());
            for (std::size_t k : idx) ne.push_back(std::move(E[k]));
            E = std::move(ne);
        }
    }
}

Resolution assemble(ComplexData cx, const RingPtr& ring) {
    Resolution res;
    res.ring = ring;
    for (auto& t : cx.twists) res.modules.push_back({std::move(t)});
    for (std::size_t i = 0; i < cx.diff.size(); ++i) {
        PolyMatrix M;
        M.ring = ring;
        M.row_twists = res.modules[i].twists;
        M.col_twists = res.modules[i + 1].twists;
        M.entries = std::move(cx.diff[i]);
        res.differentials.push_back(std::move(M));
    }
    return res;
}

Polynomial mono_poly(const RingPtr& ring, std::vector<int> e, const Rational& c = 1) {
    return Polynomial::term(ring, Monomial{std::move(e)}, c);
}

} // namespace

PolyMatrix PolyMatrix::zero(RingPtr ring, std::vector<long long> row_twists,
                            std::vector<long long> col_twists) {
    PolyMatrix M;
    M.entries.assign(row_twists.size(),
                     std::vector<Polynomial>(col_twists.size(), Polynomial(ring)));
    M.ring = std::move(ring);
    M.row_twists = std::move(row_twists);
    M.col_twists = std::move(col_twists);
    return M;
}

Resolution minimal_free_resolution(const Ideal& I, const MonomialOrder& ord) {
    const RingPtr& ring = I.ring;
    auto G1 = reduce_basis(buchberger(I.gens, ord), ord);
    ComplexData cx;
    cx.twists.push_back({0});
    if (G1.empty()) {
        cx.diff.clear();
        return assemble(std::move(cx), ring);
    }
    for (const auto& g : G1)
        if (!g.homogeneous_degree())
            throw std::invalid_argument("minimal_free_resolution: ideal is not homogeneous");
    // Level-1 sort: descending structural lex on leading monomials.
    std::sort(G1.begin(), G1.end(), [&](const Polynomial& a, const Polynomial& b) {
        return b.lead_monomial(ord) < a.lead_monomial(ord);
    });

    std::vector<ModCtx> ctxs;
    ctxs.push_back(f0_ctx(ring, ord));
    std::vector<std::vector<ModVec>> gbs; // gbs[i] lives inside F_i's predecessor
    gbs.push_back({});                    // level 0 placeholder
    std::vector<ModVec> level1;
    for (const auto& g : G1) level1.push_back(ModVec{g});
    gbs.push_back(std::move(level1));

    const std::size_t cap = ring->nvars() + 3;
    for (std::size_t i = 1;; ++i) {
        if (i > cap) throw std::logic_error("minimal_free_resolution: syzygy tower failed to terminate");
        auto lead = leads_of(gbs[i], ctxs[i - 1]);
        ctxs.push_back(make_next_ctx(gbs[i], lead, ctxs[i - 1]));
        auto syz = schreyer_syzygies(gbs[i], lead, ctxs[i - 1]);
        auto next = mod_reduce_basis(std::move(syz), ctxs[i]);
        for (const auto& s : next)
            if (!vec_degree(s, ctxs[i]))
                throw std::logic_error("minimal_free_resolution: inhomogeneous syzygy");
        if (next.empty()) break;
        gbs.push_back(std::move(next));
    }

    for (std::size_t i = 1; i < gbs.size(); ++i) {
        cx.twists.push_back(ctxs[i].twists);
        std::size_t rows = ctxs[i - 1].rank();
        std::vector<std::vector<Polynomial>> D(rows, std::vector<Polynomial>(gbs[i].size(), Polynomial(ring)));
        for (std::size_t c = 0; c < gbs[i].size(); ++c)
            for (std::size_t r = 0; r < rows; ++r) D[r][c] = gbs[i][c][r];
        cx.diff.push_back(std::move(D));
    }
    minimize_complex(cx, ring);
    sort_by_twist(cx);
    return assemble(std::move(cx), ring);
}

Ideal explicit_kernel_codim2(long long p, long long b) {
    InvariantSet inv = invariant_generators(p, b);
    long long binv = mod_inverse(inv.b, p);
    if ((p - inv.b) * (p - binv) != p + 1)
        throw std::domain_error("explicit_kernel_codim2: (p-b)(p-b_inv) != p+1");
    long long A = p - binv, B = p - inv.b;
    std::vector<ExponentPair> expect = {{p, 0}, {B, 1}, {1, A}, {0, p}};
    if (inv.points != expect)
        throw TheoremViolation("explicit_kernel_codim2: invariant set disagrees with the 4-generator form");
    RingPtr R = presentation_ring(inv);
    Ideal K{R, {}};
    K.gens.push_back(mono_poly(R, {0, (int)A, 0, 0}) - mono_poly(R, {1, 0, 1, 0}));
    K.gens.push_back(mono_poly(R, {0, 0, (int)B, 0}) - mono_poly(R, {0, 1, 0, 1}));
    K.gens.push_back(mono_poly(R, {0, (int)A - 1, (int)B - 1, 0}) - mono_poly(R, {1, 0, 0, 1}));
    return K;
}

HilbertBurchData hilbert_burch(long long p, long long b) {
    Ideal K = explicit_kernel_codim2(p, b);
    long long bc = invariant_generators(p, b).b;
    long long binv = mod_inverse(bc, p);
    long long A = p - binv, B = p - bc;
    const RingPtr& R = K.ring;

    std::vector<long long> f1 = {2 * p - binv + 1, 2 * p - bc + 1, 2 * p};
    std::vector<long long> f2 = {3 * p - binv + 1, 3 * p - bc + 1};
    PolyMatrix M = PolyMatrix::zero(R, f1, f2);
    M.entries[0][0] = mono_poly(R, {0, 0, 0, 1}, -1);            // -y3
    M.entries[0][1] = mono_poly(R, {0, 0, (int)B - 1, 0}, -1);   // -y2^(B-1)
    M.entries[1][0] = mono_poly(R, {0, (int)A - 1, 0, 0}, -1);   // -y1^(A-1)
    M.entries[1][1] = mono_poly(R, {1, 0, 0, 0}, -1);            // -y0
    M.entries[2][0] = mono_poly(R, {0, 0, 1, 0});                // y2
    M.entries[2][1] = mono_poly(R, {0, 1, 0, 0});                // y1

    Resolution res;
    res.ring = R;
    res.modules = {{{0}}, {f1}, {f2}};
    PolyMatrix d1 = PolyMatrix::zero(R, {0}, f1);
    for (std::size_t j = 0; j < 3; ++j) d1.entries[0][j] = K.gens[j];
    res.differentials = {d1, M};
    return {std::move(M), std::move(res)};
}

TwoP1KernelData explicit_kernel_2p1(long long p, long long b) {
    InvariantSet inv = invariant_generators(p, b);
    long long bc = inv.b;
    long long binv = mod_inverse(bc, p);
    if ((p - bc) * (p - binv) != 2 * p + 1)
        throw std::domain_error("explicit_kernel_2p1: (p-b)(p-b_inv) != 2p+1");

    auto y = [&](const RingPtr& R, std::initializer_list<int> e) { return mono_poly(R, e); };

    if (2 * bc < p - 1) {
        // Lower branch: the product condition forces b = (p-1)/3.
        if (3 * bc != p - 1)
            throw TheoremViolation("explicit_kernel_2p1: lower branch weight is not (p-1)/3");
        std::vector<ExponentPair> expect = {{p, 0}, {p - bc, 1}, {p - 2 * bc, 2}, {1, p - binv}, {0, p}};
        if (inv.points != expect)
            throw TheoremViolation("explicit_kernel_2p1: invariant set disagrees with the lower-branch form");
        RingPtr R = presentation_ring(inv);
        int bi = (int)bc;
        Ideal K{R, {}};
        K.gens.push_back(y(R, {0, 0, 2, 0, 0}) - y(R, {0, 1, 0, 1, 0}));          // y2^2 - y1*y3
        K.gens.push_back(y(R, {0, 1, 1, 0, 0}) - y(R, {1, 0, 0, 1, 0}));          // y1*y2 - y0*y3
        Monomial y3b1 = Monomial{{0, 0, 0, bi + 1, 0}};
        K.gens.push_back(Polynomial::term(R, y3b1, 1) - y(R, {0, 0, 1, 0, 1}));   // y3^(b+1) - y2*y4
        K.gens.push_back(y(R, {0, 2, 0, 0, 0}) - y(R, {1, 0, 1, 0, 0}));          // y1^2 - y0*y2
        K.gens.push_back(mono_poly(R, {0, 0, 1, bi, 0}) - y(R, {0, 1, 0, 0, 1})); // y2*y3^b - y1*y4
        K.gens.push_back(mono_poly(R, {0, 1, 0, bi, 0}) - y(R, {1, 0, 0, 0, 1})); // y1*y3^b - y0*y4
        PolyMatrix M = PolyMatrix::zero(R, {}, {});
        M.ring = R;
        long long rho2 = R->degrees[0] - R->degrees[1]; // deg y0 - deg y1
        M.row_twists = {0, rho2};
        M.entries.assign(2, std::vector<Polynomial>(4, Polynomial(R)));
        M.entries[0][0] = y(R, {1, 0, 0, 0, 0});
        M.entries[0][1] = y(R, {0, 1, 0, 0, 0});
        M.entries[0][2] = y(R, {0, 0, 1, 0, 0});
        M.entries[0][3] = mono_poly(R, {0, 0, 0, bi, 0});
        M.entries[1][0] = y(R, {0, 1, 0, 0, 0});
        M.entries[1][1] = y(R, {0, 0, 1, 0, 0});
        M.entries[1][2] = y(R, {0, 0, 0, 1, 0});
        M.entries[1][3] = y(R, {0, 0, 0, 0, 1});
        for (int j = 0; j < 4; ++j)
            M.col_twists.push_back(*M.entries[0][j].homogeneous_degree());
        return {std::move(K), std::move(M)};
    }

    // Upper branch: p - b_inv and p - b are odd, alpha and beta integral.
    if ((p - binv) % 2 == 0 || (p - bc) % 2 == 0)
        throw TheoremViolation("explicit_kernel_2p1: upper branch parities fail");
    long long alpha = (p - binv + 1) / 2, beta = (p - bc + 1) / 2;
    std::vector<ExponentPair> expect = {{p, 0}, {p - bc, 1}, {beta, alpha}, {1, p - binv}, {0, p}};
    if (inv.points != expect)
        throw TheoremViolation("explicit_kernel_2p1: invariant set disagrees with the upper-branch form");
    RingPtr R = presentation_ring(inv);
    int a = (int)alpha, be = (int)beta;
    Ideal K{R, {}};
    K.gens.push_back(y(R, {0, 0, 2, 0, 0}) - y(R, {0, 1, 0, 1, 0}));                 // y2^2 - y1*y3
    K.gens.push_back(mono_poly(R, {0, a - 1, 1, 0, 0}) - y(R, {1, 0, 0, 1, 0}));     // y1^(a-1)*y2 - y0*y3
    K.gens.push_back(mono_poly(R, {0, 0, 0, be, 0}) - y(R, {0, 0, 1, 0, 1}));        // y3^beta - y2*y4
    K.gens.push_back(mono_poly(R, {0, a, 0, 0, 0}) - y(R, {1, 0, 1, 0, 0}));         // y1^alpha - y0*y2
    K.gens.push_back(mono_poly(R, {0, 0, 1, be - 1, 0}) - y(R, {0, 1, 0, 0, 1}));    // y2*y3^(beta-1) - y1*y4
    K.gens.push_back(mono_poly(R, {0, a - 1, 0, be - 1, 0}) - y(R, {1, 0, 0, 0, 1})); // y1^(a-1)*y3^(beta-1) - y0*y4
    PolyMatrix M = PolyMatrix::zero(R, {}, {});
    M.ring = R;
    M.entries.assign(2, std::vector<Polynomial>(4, Polynomial(R)));
    M.entries[0][0] = y(R, {1, 0, 0, 0, 0});
    M.entries[0][1] = y(R, {0, 1, 0, 0, 0});
    M.entries[0][2] = y(R, {0, 0, 1, 0, 0});
    M.entries[0][3] = mono_poly(R, {0, 0, 0, be - 1, 0});
    M.entries[1][0] = mono_poly(R, {0, a - 1, 0, 0, 0});
    M.entries[1][1] = y(R, {0, 0, 1, 0, 0});
    M.entries[1][2] = y(R, {0, 0, 0, 1, 0});
    M.entries[1][3] = y(R, {0, 0, 0, 0, 1});
    long long rho2 = *M.entries[0][0].homogeneous_degree() - *M.entries[1][0].homogeneous_degree();
    M.row_twists = {0, rho2};
    for (int j = 0; j < 4; ++j)
        M.col_twists.push_back(*M.entries[0][j].homogeneous_degree());
    return {std::move(K), std::move(M)};
}

Resolution eagon_northcott(const PolyMatrix& M) {
    if (M.rows() != 2) throw std::invalid_argument("eagon_northcott: matrix must have 2 rows");
    const std::size_t m = M.cols();
    if (m < 2) throw std::invalid_argument("eagon_northcott: need at least 2 columns");
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto d = M.entries[i][j].homogeneous_degree();
            if (!d || (!M.entries[i][j].is_zero() && *d != M.col_twists[j] - M.row_twists[i]))
                throw std::invalid_argument("eagon_northcott: matrix is not homogeneous for its twists");
        }
    const RingPtr& R = M.ring;
    long long rho1 = M.row_twists[0], rho2 = M.row_twists[1];
    const auto& sigma = M.col_twists;

    // Basis bookkeeping: level 1 is Lambda^2 (pairs c < c'); level i >= 2 is
    // (S, a) with |S| = i+1 and a + b = i - 1 the dual Sym exponents.
    auto subsets = [&](std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (cur.size() == k) {
                out.push_back(cur);
                return;
            }
            for (std::size_t c = start; c + (k - cur.size()) <= m; ++c) {
                cur.push_back(c);
                self(self, c + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    auto sum_sigma = [&](const std::vector<std::size_t>& S) {
        long long t = 0;
        for (std::size_t c : S) t += sigma[c];
        return t;
    };

    ComplexData cx;
    cx.twists.push_back({0});
    auto pairs = subsets(2);
    std::map<std::vector<std::size_t>, std::size_t> pair_idx;
    std::vector<long long> tw1;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        pair_idx[pairs[k]] = k;
        tw1.push_back(sum_sigma(pairs[k]) - rho1 - rho2);
    }
    cx.twists.push_back(tw1);
    std::vector<std::vector<Polynomial>> d1(1, std::vector<Polynomial>(pairs.size(), Polynomial(R)));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [c1, c2] = std::pair(pairs[k][0], pairs[k][1]);
        d1[0][k] = M.entries[0][c1] * M.entries[1][c2] - M.entries[0][c2] * M.entries[1][c1];
    }
    cx.diff.push_back(std::move(d1));

    std::map<std::pair<std::vector<std::size_t>, long long>, std::size_t> prev_idx;
    for (const auto& [S, k] : pair_idx) prev_idx[{S, 0}] = k; // level-1 basis has a = b = 0
    for (std::size_t lvl = 2; lvl <= m - 1; ++lvl) {
        auto Ss = subsets(lvl + 1);
        std::map<std::pair<std::vector<std::size_t>, long long>, std::size_t> idx;
        std::vector<long long> tw;
        for (const auto& S : Ss)
            for (long long a = (long long)lvl - 1; a >= 0; --a) {
                long long bb = (long long)lvl - 1 - a;
                idx[{S, a}] = tw.size();
                tw.push_back(sum_sigma(S) - (rho1 + rho2) - a * rho1 - bb * rho2);
            }
        std::vector<std::vector<Polynomial>> D(cx.twists[lvl - 1].size(),
                                               std::vector<Polynomial>(tw.size(), Polynomial(R)));
        for (const auto& [key, col] : idx) {
            const auto& [S, a] = key;
            long long bb = (long long)lvl - 1 - a;
            for (std::size_t l = 0; l < S.size(); ++l) {
                std::vector<std::size_t> T = S;
                T.erase(T.begin() + (std::ptrdiff_t)l);
                Rational sign = (l % 2 == 0) ? 1 : -1;
                if (a >= 1) {
                    std::size_t row = lvl == 2 ? prev_idx.at({T, 0}) : prev_idx.at({T, a - 1});
                    D[row][col] += M.entries[0][S[l]].scaled(sign);
                }
                if (bb >= 1) {
                    std::size_t row = lvl == 2 ? prev_idx.at({T, 0}) : prev_idx.at({T, a});
                    D[row][col] += M.entries[1][S[l]].scaled(sign);
                }
            }
        }
        cx.twists.push_back(std::move(tw));
        cx.diff.push_back(std::move(D));
        prev_idx = std::move(idx);
    }
    sort_by_twist(cx);
    return assemble(std::move(cx), R);
}

BettiTable betti(const Resolution& res) {
    BettiTable bt;
    for (std::size_t i = 0; i < res.modules.size(); ++i)
        for (long long t : res.modules[i].twists) ++bt.entries[{i, t}];
    return bt;
}

std::string betti_table_text(const BettiTable& bt) {
    if (bt.entries.empty()) return "(empty)\n";
    std::size_t maxi = 0;
    long long minrow = 0, maxrow = 0;
    bool first = true;
    for (const auto& [key, v] : bt.entries) {
        auto [i, t] = key;
        maxi = std::max(maxi, i);
        long long row = t - (long long)i;
        if (first) {
            minrow = maxrow = row;
            first = false;
        } else {
            minrow = std::min(minrow, row);
            maxrow = std::max(maxrow, row);
        }
    }
    std::vector<long long> totals(maxi + 1, 0);
    for (const auto& [key, v] : bt.entries) totals[key.first] += v;
    std::ostringstream os;
    auto cell = [&](const std::string& s) {
        os << " ";
        for (std::size_t k = s.size(); k < 6; ++k) os << ' ';
        os << s;
    };
    cell("");
    for (std::size_t i = 0; i <= maxi; ++i) cell(std::to_string(i));
    os << "\n";
    cell("total:");
    for (std::size_t i = 0; i <= maxi; ++i) cell(std::to_string(totals[i]));
    os << "\n";
    for (long long row = minrow; row <= maxrow; ++row) {
        cell(std::to_string(row) + ":");
        for (std::size_t i = 0; i <= maxi; ++i) {
            auto it = bt.entries.find({i, row + (long long)i});
            cell(it == bt.entries.end() ? "." : std::to_string(it->second));
        }
        os << "\n";
    }
    return os.str();
}

std::string resolution_to_json(const Resolution& res) {
    nlohmann::json j;
    j["modules"] = nlohmann::json::array();
    for (const auto& mod : res.modules) j["modules"].push_back(mod.twists);
    j["differentials"] = nlohmann::json::array();
    MonomialOrder ord = MonomialOrder::weighted_grevlex(res.ring->degrees);
    for (const auto& D : res.differentials) {
        nlohmann::json mat = nlohmann::json::array();
        for (const auto& row : D.entries) {
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& f : row) jr.push_back(to_string(f, ord));
            mat.push_back(jr);
        }
        j["differentials"].push_back(mat);
    }
    return j.dump(2);
}

} // namespace cycinv

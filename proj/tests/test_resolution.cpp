#include <doctest.h>

#include <algorithm>

#include "cycinv/resolution.hpp"

using namespace cycinv;

namespace {

Resolution resolve(long long p, long long b) {
    InvariantSet inv = invariant_generators(p, b);
    return minimal_free_resolution(toric_kernel(inv), presentation_order(inv));
}

Polynomial det2(const PolyMatrix& M, std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
    return M.entries[r1][c1] * M.entries[r2][c2] - M.entries[r1][c2] * M.entries[r2][c1];
}

bool composes_to_zero(const PolyMatrix& A, const PolyMatrix& B) {
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < B.cols(); ++c) {
            Polynomial acc(A.ring);
            for (std::size_t k = 0; k < A.cols(); ++k) acc += A.entries[r][k] * B.entries[k][c];
            if (!acc.is_zero()) return false;
        }
    return true;
}

} // namespace

TEST_SUITE("resolution") {

TEST_CASE("codimension-two resolution of (7,3)") {
    Resolution res = resolve(7, 3);
    REQUIRE(res.length() == 2);
    CHECK(res.modules[0].twists == std::vector<long long>{0});
    CHECK(res.modules[1].twists == std::vector<long long>{10, 12, 14});
    CHECK(res.modules[2].twists == std::vector<long long>{17, 19});
    CHECK(composes_to_zero(res.differentials[0], res.differentials[1]));
}

TEST_CASE("principal kernel resolves in one step") {
    Resolution res = resolve(7, 6);
    REQUIRE(res.length() == 1);
    CHECK(res.modules[1].twists == std::vector<long long>{14}); // y1^7 - y0*y2
}

TEST_CASE("zero ideal resolves to the ring itself") {
    RingPtr R = make_ring({"a", "b"}, {1, 1});
    MonomialOrder ord = MonomialOrder::weighted_grevlex(R->degrees);
    Resolution res = minimal_free_resolution(Ideal{R, {}}, ord);
    CHECK(res.length() == 0);
    REQUIRE(res.modules.size() == 1);
    CHECK(res.modules[0].twists == std::vector<long long>{0});
}

TEST_CASE("inhomogeneous input is rejected") {
    RingPtr R = make_ring({"a", "b"}, {1, 1});
    MonomialOrder ord = MonomialOrder::weighted_grevlex(R->degrees);
    Polynomial f = Polynomial::variable(R, 0) * Polynomial::variable(R, 0) + Polynomial::variable(R, 1);
    CHECK_THROWS_AS(minimal_free_resolution(Ideal{R, {f}}, ord), std::invalid_argument);
}

TEST_CASE("explicit codimension-two kernel agrees with elimination") {
    for (auto [p, b] : {std::pair{5LL, 2LL}, {7LL, 3LL}, {11LL, 5LL}, {13LL, 6LL}, {17LL, 8LL}}) {
        InvariantSet inv = invariant_generators(p, b);
        Ideal K = explicit_kernel_codim2(p, b);
        CHECK(ideal_equal(K, toric_kernel(inv), presentation_order(inv)));
    }
    CHECK_THROWS_AS(explicit_kernel_codim2(13, 4), std::domain_error);
    CHECK_THROWS_AS(explicit_kernel_codim2(7, 1), std::domain_error);
}

TEST_CASE("Hilbert-Burch data for (7,3)") {
    HilbertBurchData hb = hilbert_burch(7, 3);
    const PolyMatrix& M = hb.matrix;
    REQUIRE(M.rows() == 3);
    REQUIRE(M.cols() == 2);
    CHECK(hb.resolution.modules[1].twists == std::vector<long long>{10, 12, 14});
    CHECK(hb.resolution.modules[2].twists == std::vector<long long>{17, 19});

    // d1 * M = 0 and the 2x2 minors reproduce the kernel generators up to sign.
    CHECK(composes_to_zero(hb.resolution.differentials[0], M));
    const auto& gens = hb.resolution.differentials[0].entries[0];
    Polynomial m0 = det2(M, 1, 2, 0, 1);
    Polynomial m1 = det2(M, 0, 2, 0, 1);
    Polynomial m2 = det2(M, 0, 1, 0, 1);
    CHECK((gens[0] == m0 || gens[0] == -m0));
    CHECK((gens[1] == m1 || gens[1] == -m1));
    CHECK((gens[2] == m2 || gens[2] == -m2));

    // Entries are homogeneous for the stated twists.
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            CHECK(M.entries[r][c].homogeneous_degree().value() == M.col_twists[c] - M.row_twists[r]);
}

TEST_CASE("Hilbert-Burch twists across the p+1 family") {
    for (auto [p, b] : {std::pair{5LL, 2LL}, {7LL, 3LL}, {11LL, 5LL}, {13LL, 6LL}}) {
        long long binv = mod_inverse(b, p);
        HilbertBurchData hb = hilbert_burch(p, b);
        CHECK(hb.resolution.modules[1].twists ==
              std::vector<long long>{2 * p - binv + 1, 2 * p - b + 1, 2 * p});
        CHECK(hb.resolution.modules[2].twists ==
              std::vector<long long>{3 * p - binv + 1, 3 * p - b + 1});
        Resolution general = resolve(p, b);
        CHECK(betti(general).entries == betti(hb.resolution).entries);
    }
}

TEST_CASE("explicit 2p+1 kernels agree with elimination in both branches") {
    // Lower branch: b = (p-1)/3.
    for (auto [p, b] : {std::pair{7LL, 2LL}, {13LL, 4LL}, {19LL, 6LL}, {31LL, 10LL}}) {
        InvariantSet inv = invariant_generators(p, b);
        TwoP1KernelData data = explicit_kernel_2p1(p, b);
        CHECK(data.kernel.gens.size() == 6);
        CHECK(ideal_equal(data.kernel, toric_kernel(inv), presentation_order(inv)));
    }
    // Upper branch.
    for (auto [p, b] : {std::pair{17LL, 10LL}, {37LL, 22LL}, {47LL, 28LL}}) {
        InvariantSet inv = invariant_generators(p, b);
        TwoP1KernelData data = explicit_kernel_2p1(p, b);
        CHECK(data.kernel.gens.size() == 6);
        CHECK(ideal_equal(data.kernel, toric_kernel(inv), presentation_order(inv)));
    }
    CHECK_THROWS_AS(explicit_kernel_2p1(7, 3), std::domain_error);
}

TEST_CASE("the 2x4 matrix of a 2p+1 action recovers the kernel from its minors") {
    for (auto [p, b] : {std::pair{13LL, 4LL}, {17LL, 10LL}, {19LL, 6LL}}) {
        InvariantSet inv = invariant_generators(p, b);
        TwoP1KernelData data = explicit_kernel_2p1(p, b);
        const PolyMatrix& M = data.matrix;
        REQUIRE(M.rows() == 2);
        REQUIRE(M.cols() == 4);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                CHECK(M.entries[r][c].homogeneous_degree().value() ==
                      M.col_twists[c] - M.row_twists[r]);
        std::vector<Polynomial> minors;
        for (std::size_t c1 = 0; c1 < 4; ++c1)
            for (std::size_t c2 = c1 + 1; c2 < 4; ++c2) minors.push_back(det2(M, 0, 1, c1, c2));
        CHECK(ideal_equal(Ideal{M.ring, minors}, data.kernel, presentation_order(inv)));
    }
}

TEST_CASE("Eagon-Northcott complex of the generic 2x3 matrix") {
    RingPtr R = make_ring({"z0", "z1", "z2", "z3"}, {1, 1, 1, 1});
    PolyMatrix M = PolyMatrix::zero(R, {0, 0}, {1, 1, 1});
    for (std::size_t c = 0; c < 3; ++c) {
        M.entries[0][c] = Polynomial::variable(R, c);
        M.entries[1][c] = Polynomial::variable(R, c + 1);
    }
    Resolution res = eagon_northcott(M);
    REQUIRE(res.length() == 2);
    CHECK(res.modules[1].twists == std::vector<long long>{2, 2, 2});
    CHECK(res.modules[2].twists == std::vector<long long>{3, 3});
    CHECK(composes_to_zero(res.differentials[0], res.differentials[1]));
    // d1 lists the three 2x2 minors.
    const auto& row = res.differentials[0].entries[0];
    CHECK(row[0] == det2(M, 0, 1, 0, 1));
    CHECK(row[1] == det2(M, 0, 1, 0, 2));
    CHECK(row[2] == det2(M, 0, 1, 1, 2));
}

TEST_CASE("Eagon-Northcott resolution of (13,4) has the expected twists") {
    Resolution res = eagon_northcott(explicit_kernel_2p1(13, 4).matrix);
    REQUIRE(res.length() == 3);
    CHECK(res.modules[1].twists == std::vector<long long>{14, 17, 20, 20, 23, 26});
    CHECK(res.modules[2].twists == std::vector<long long>{24, 27, 27, 30, 30, 33, 33, 36});
    CHECK(res.modules[3].twists == std::vector<long long>{37, 40, 43});
    CHECK(composes_to_zero(res.differentials[0], res.differentials[1]));
    CHECK(composes_to_zero(res.differentials[1], res.differentials[2]));
    CHECK(betti(res).entries == betti(resolve(13, 4)).entries);
}

TEST_CASE("Eagon-Northcott ranks follow i * C(m, i+1)") {
    Resolution res = eagon_northcott(explicit_kernel_2p1(17, 10).matrix); // m = 4
    REQUIRE(res.modules.size() == 4);
    CHECK(res.modules[1].rank() == 6);  // C(4,2)
    CHECK(res.modules[2].rank() == 8);  // 2*C(4,3)
    CHECK(res.modules[3].rank() == 3);  // 3*C(4,4)
    CHECK(betti(res).entries == betti(resolve(17, 10)).entries);
}

TEST_CASE("Eagon-Northcott input validation") {
    RingPtr R = make_ring({"z0", "z1"}, {1, 1});
    PolyMatrix tall = PolyMatrix::zero(R, {0, 0, 0}, {1, 1});
    CHECK_THROWS_AS(eagon_northcott(tall), std::invalid_argument);
    PolyMatrix narrow = PolyMatrix::zero(R, {0, 0}, {1});
    CHECK_THROWS_AS(eagon_northcott(narrow), std::invalid_argument);
    PolyMatrix bad = PolyMatrix::zero(R, {0, 0}, {1, 1});
    bad.entries[0][0] = Polynomial::variable(R, 0) * Polynomial::variable(R, 1); // degree 2, twist says 1
    CHECK_THROWS_AS(eagon_northcott(bad), std::invalid_argument);
}

TEST_CASE("general resolutions are minimal and twist-sorted") {
    for (auto [p, b] : {std::pair{11LL, 3LL}, {13LL, 5LL}, {17LL, 5LL}}) {
        Resolution res = resolve(p, b);
        CHECK(res.length() == invariant_generators(p, b).size() - 2);
        for (const auto& mod : res.modules)
            CHECK(std::is_sorted(mod.twists.begin(), mod.twists.end()));
        for (const auto& D : res.differentials)
            for (const auto& r : D.entries)
                for (const auto& f : r) {
                    if (f.is_zero()) continue;
                    CHECK_FALSE(f.terms().begin()->first.is_one());
                }
    }
}

TEST_CASE("betti table accounting and rendering") {
    Resolution res = resolve(7, 3);
    BettiTable bt = betti(res);
    REQUIRE(bt.entries.size() == 6);
    CHECK(bt.entries.at({0, 0}) == 1);
    CHECK(bt.entries.at({1, 10}) == 1);
    CHECK(bt.entries.at({1, 12}) == 1);
    CHECK(bt.entries.at({1, 14}) == 1);
    CHECK(bt.entries.at({2, 17}) == 1);
    CHECK(bt.entries.at({2, 19}) == 1);
    std::string text = betti_table_text(bt);
    CHECK(text.find("total:") != std::string::npos);
    CHECK(text.find("1      3      2") != std::string::npos);

    std::string j = resolution_to_json(res);
    CHECK(j.find("\"modules\"") != std::string::npos);
    CHECK(j.find("y1^2 - y0*y2") != std::string::npos);
}

}

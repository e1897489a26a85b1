#include <doctest.h>

#include <nlohmann/json.hpp>

#include "cycinv/sweep.hpp"

using namespace cycinv;

namespace {

std::size_t canonical_count(long long p_max) {
    std::size_t n = 0;
    for (long long p = 2; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        for (long long b = 1; b < p; ++b)
            if (b <= mod_inverse(b, p)) ++n;
    }
    return n;
}

} // namespace

TEST_SUITE("sweep") {

TEST_CASE("row layout: canonical pairs, ordered by p then b") {
    std::vector<SweepRow> rows = run_sweep(13);
    CHECK(rows.size() == canonical_count(13));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].b <= rows[i].b_inv);
        if (i > 0) {
            bool ordered = rows[i - 1].p < rows[i].p ||
                           (rows[i - 1].p == rows[i].p && rows[i - 1].b < rows[i].b);
            CHECK(ordered);
        }
    }
    CHECK(run_sweep(1).empty());
}

TEST_CASE("frozen rows") {
    std::string csv = sweep_to_csv(run_sweep(13));
    CHECK(csv.find("p,b,b_inv,product,k,n_invariants,n_slopes,q,r,s,t,label") == 0);
    CHECK(csv.find("7,3,5,8,1,4,2,2,1,1,2,Codim2") != std::string::npos);
    CHECK(csv.find("11,3,4,56,5,6,2,3,2,2,3,TwoSlope") != std::string::npos);
    CHECK(csv.find("13,4,10,27,2,5,2,3,1,1,3,FiveGen2p1Lower") != std::string::npos);
    CHECK(csv.find("13,1,1,144,11,14,1,13,0,13,0,Veronese") != std::string::npos);
    CHECK(csv.find("7,6,6,1,0,3,2,1,1,1,1,ThreeGenerators") != std::string::npos);
}

TEST_CASE("parallel run matches the serial run byte for byte") {
    std::vector<SweepRow> serial = run_sweep(31, 1);
    std::vector<SweepRow> parallel = run_sweep(31, 4);
    CHECK(sweep_to_csv(serial) == sweep_to_csv(parallel));
    CHECK(sweep_to_json(serial) == sweep_to_json(parallel));
}

TEST_CASE("json output parses and mirrors the rows") {
    std::vector<SweepRow> rows = run_sweep(7);
    nlohmann::json j = nlohmann::json::parse(sweep_to_json(rows));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(j[i]["p"].get<long long>() == rows[i].p);
        CHECK(j[i]["b"].get<long long>() == rows[i].b);
        CHECK(j[i]["label"].get<std::string>() == rows[i].label);
    }
}

TEST_CASE("oracle mode recomputes every staircase by sieve") {
    std::vector<SweepRow> rows = run_sweep(23, 2, true); // throws on any disagreement
    CHECK(rows.size() == canonical_count(23));
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(run_sweep(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(5, -2), std::invalid_argument);
}

}

#include <doctest.h>

#include <random>

#include "butson/bhcore.hpp"
#include "butson/constructions.hpp"
#include "oracles.hpp"

using namespace butson;

namespace {

InvariantBH cyc(u64 h, std::vector<u64> row)
{
    const u64 n = row.size();
    return InvariantBH{GroupSpec::cyclic(n), h, std::move(row)};
}

std::vector<InvariantBH> fixtures()
{
    std::vector<InvariantBH> f{cyc(2, {0, 0, 0, 1}), zadoff_chu(3), zadoff_chu(5), zadoff_chu(6), zadoff_chu(7)};
    for (auto [n, h] : std::vector<std::pair<u64, u64>>{{8, 4}, {9, 3}, {12, 6}, {16, 4}, {27, 9}, {36, 6}})
        f.push_back(*cyclic_bh(n, h));
    f.push_back(kronecker(zadoff_chu(3), zadoff_chu(3)));
    f.push_back(kronecker(cyc(2, {0, 0, 0, 1}), zadoff_chu(3)));
    return f;
}

}  // namespace

TEST_CASE("group indexing is mixed radix")
{
    const GroupSpec g({4, 3});
    CHECK(g.order() == 12);
    CHECK(g.exponent() == 12);
    CHECK(g.coords(7) == std::vector<u64>{2, 1});
    CHECK(g.index({2, 1}) == 7);
    CHECK(g.add(7, 11) == g.index({1, 0}));
    CHECK(g.sub(0, 7) == g.index({2, 2}));
    CHECK_THROWS_AS(g.coords(12), std::out_of_range);
}

TEST_CASE("autocorrelation examples")
{
    const auto z3 = cyc(3, {0, 1, 0});
    CHECK(autocorrelation(z3, 1).coeffs() == std::vector<std::int64_t>{1, 1, 1});
    CHECK(is_zero(autocorrelation(z3, 1)));
    CHECK(autocorrelation(z3, 0).coeffs() == std::vector<std::int64_t>{3, 0, 0});
    CHECK(autocorrelation(cyc(2, {0, 0}), 1).coeffs() == std::vector<std::int64_t>{2, 0});
    CHECK_THROWS_AS(autocorrelation(z3, 3), std::out_of_range);
}

TEST_CASE("verify examples")
{
    CHECK(verify_bh(cyc(2, {0, 0, 0, 1})));
    CHECK_FALSE(verify_bh(cyc(2, {0, 1})));
    CHECK(verify_bh(cyc(5, {0})));
    CHECK_THROWS_AS(verify_bh(cyc(2, {0, 2})), std::invalid_argument);
}

TEST_CASE("exact verification agrees with the floating oracle")
{
    for (const auto& m : fixtures()) {
        REQUIRE(verify_bh(m));
        REQUIRE(oracle::is_perfect(m.group.moduli(), m.alphabet, m.row));
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const u64 n = 1 + rng() % 9, h = 1 + rng() % 8;
        std::vector<u64> row(n);
        for (auto& e : row) e = rng() % h;
        const auto m = cyc(h, row);
        REQUIRE(verify_bh(m) == oracle::is_perfect({n}, h, row));
    }
}

TEST_CASE("single-entry perturbations break verification")
{
    std::mt19937_64 rng(11);
    int trials = 0;
    for (const auto& m : fixtures()) {
        if (m.alphabet < 2) continue;
        for (int k = 0; k < 20; ++k) {
            auto bad = m;
            const u64 i = rng() % bad.row.size();
            bad.row[i] = (bad.row[i] + 1 + rng() % (bad.alphabet - 1)) % bad.alphabet;
            const bool v = verify_bh(bad);
            REQUIRE(v == oracle::is_perfect(bad.group.moduli(), bad.alphabet, bad.row));
            // length 3 has other perfect rows one step away, e.g. [1,1,0]
            if (bad.group.order() > 3) REQUIRE_FALSE(v);
            ++trials;
        }
    }
    CHECK(trials >= 100);
}

TEST_CASE("materialize")
{
    CHECK(materialize(cyc(2, {0, 1})) == std::vector<std::vector<u64>>{{0, 1}, {1, 0}});
    CHECK(materialize(cyc(3, {0})) == std::vector<std::vector<u64>>{{0}});
    const auto t = materialize(cyc(3, {0, 1, 0}));
    CHECK(t[1] == std::vector<u64>{0, 0, 1});
    CHECK(t[2] == std::vector<u64>{1, 0, 0});

    const auto m = kronecker(cyc(2, {0, 0, 0, 1}), zadoff_chu(3));
    const auto tab = materialize(m);
    CHECK(tab[0] == m.row);
    for (u64 l = 0; l < m.group.order(); l += 5)
        for (u64 g = 0; g < m.group.order(); ++g)
            for (u64 k = 0; k < m.group.order(); ++k)
                REQUIRE(tab[m.group.add(g, l)][m.group.add(k, l)] == tab[g][k]);
}

TEST_CASE("arrays and matrices are interchangeable")
{
    const auto m = kronecker(zadoff_chu(3), zadoff_chu(3));
    const auto a = array_from_matrix(m);
    CHECK(a.dims == std::vector<u64>{3, 3});
    CHECK(a.data == std::vector<u64>{0, 1, 0, 1, 2, 1, 0, 1, 0});
    CHECK(matrix_from_array(a) == m);
    CHECK_THROWS_AS(array_from_matrix(cyc(2, {0, 1})), std::invalid_argument);

    for (const auto& f : fixtures()) {
        REQUIRE(verify_array(array_from_matrix(f)));
        REQUIRE(matrix_from_array(array_from_matrix(f)) == f);
    }
    PerfectArray bad{{2, 2}, 2, {0, 0, 0, 0}};
    CHECK_FALSE(verify_array(bad));
    CHECK(verify_array(bad) == verify_bh(matrix_from_array(bad)));
    CHECK(verify_array(PerfectArray{{5}, 5, zadoff_chu(5).row}));
}

TEST_CASE("json round trip and validation")
{
    const auto m = *cyclic_bh(12, 6);
    CHECK(bh_from_json(to_json(m)) == m);
    CHECK(to_json(cyc(2, {0, 0, 0, 1})) == R"({"kind":"bh","group":[4],"h":2,"row":[0,0,0,1]})");
    const auto a = *perfect_array({3, 3}, 3);
    CHECK(array_from_json(to_json(a)) == a);

    CHECK_THROWS_AS(bh_from_json(R"({"kind":"bh","group":[2],"h":2,"row":[0,2]})"), std::invalid_argument);
    CHECK_THROWS_AS(bh_from_json(R"({"kind":"bh","group":[2],"h":2,"row":[0]})"), std::invalid_argument);
    CHECK_THROWS_AS(bh_from_json(R"({"kind":"perfect-array","dims":[1],"h":1,"data":[0]})"), std::invalid_argument);
    CHECK_THROWS_AS(bh_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(array_from_json(R"({"kind":"perfect-array","dims":[2],"h":2,"data":[0,-1]})"),
                    std::invalid_argument);
}

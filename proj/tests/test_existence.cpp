#include <doctest.h>

#include "butson/constructions.hpp"
#include "butson/existence.hpp"
#include "oracles.hpp"

using namespace butson;

namespace {

bool none(const Verdict& v) { return v.status == Status::NotExists; }
bool open(const Verdict& v) { return v.status == Status::Open; }

u64 upow(u64 b, std::int64_t e)
{
    u64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

u64 pmod(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    while (e--) r = r * b % m;
    return r;
}

// re-derive the verdict from the certificate parameters alone
bool recheck(u64 n, u64 h, const Verdict& v)
{
    auto P = [&](const char* k) { return static_cast<u64>(v.param(k)); };
    const std::string& r = v.rule;
    if (r == rule::trivial) return n >= 2 && h == 1;
    if (r == rule::prime_power) {
        const u64 p = P("p"), a = P("a"), need = P("required");
        return oracle::prime(p) && n == upow(p, a) && h % upow(p, P("nu_p_h")) == 0 &&
               h % upow(p, P("nu_p_h") + 1) != 0 && P("nu_p_h") < need &&
               (need == (a + 1) / 2 || (p == 2 && a == 1 && need == 2));
    }
    if (r == rule::known_2p2) return oracle::prime(P("p")) && P("p") > 2 && n == 2 * P("p") * P("p") && h == 2 * P("p");
    if (r == rule::known_3pq)
        return h == 3 && P("p") != P("q") && P("p") > 3 && P("q") > 3 && oracle::prime(P("p")) &&
               oracle::prime(P("q")) && n == 3 * P("p") * P("q");
    if (r == rule::known_pq)
        return P("p") != P("q") && P("p") > 3 && P("q") > 3 && oracle::prime(P("p")) && oracle::prime(P("q")) &&
               h == P("p") * P("q") && n == P("p") + P("q");
    if (r == rule::sylvester_i) {
        bool sq = false;
        for (u64 s = 0; s * s <= n / 4; ++s) sq |= s * s * 4 == n;
        return h == 2 && n >= 2 && !sq;
    }
    if (r == rule::sylvester_ii) return oracle::prime(P("p")) && P("p") >= 3 && n == P("p") + 2 && P("b") >= 1 && h == 2 * upow(P("p"), P("b"));
    if (r == rule::sylvester_iii)
        return oracle::prime(P("q")) && oracle::prime(P("p")) && P("q") >= 3 && P("p") > P("q") && P("a") >= 1 &&
               P("b") >= 1 && n == 2 * P("q") && h == upow(2, P("a")) * upow(P("p"), P("b"));
    if (r == rule::lam_leung) {
        std::vector<u64> ps;
        for (u64 i = 1; i <= 10; ++i) try {
                ps.push_back(P(("p" + std::to_string(i)).c_str()));
            } catch (const std::out_of_range&) {
                break;
            }
        u64 rest = h;
        for (u64 p : ps)
            while (rest % p == 0) rest /= p;
        return rest == 1 && !oracle::semigroup_enum(n, ps);
    }
    if (r == rule::brock) {
        const u64 p = P("p"), s = P("squarefree_part");
        return s % 2 == 1 && s % p == 0 && n % s == 0 && h % p != 0 && pmod(p, P("j"), h) == (h - 1) % h;
    }
    if (r == rule::main_inequality) return P("gcd") == gcd(n, h) && n > P("gcd_squared") && P("gcd_squared") == P("gcd") * P("gcd");
    if (r == rule::sc_divisor) {
        const u64 p = P("p"), m = P("m");
        if (m != lcm(n, h) || n % p || h % p == 0) return false;
        u64 mp = m;
        while (mp % p == 0) mp /= p;
        if (mp <= 2) return true;
        for (u64 j = 0, x = 1; j < mp; ++j, x = x * p % mp)
            if (x == mp - 1) return true;
        return false;
    }
    if (r == rule::sc_bound) {
        const u64 w = P("w"), k = P("k"), g = P("gcd_h_u");
        const std::int64_t E = v.param("E");
        const bool odd = k % 2;
        const std::int64_t expectE = v.param("t") - v.param("r") - 1 + (odd && v.param("delta") ? 1 : 0);
        u64 lhs = w * w * P("phi_k"), rhs = g * g * (odd ? k : 2 * k);
        (E >= 0 ? rhs : lhs) *= upow(4, E >= 0 ? E : -E);
        return E == expectE && w * w * k == P("u") && n % P("u") == 0 && g == gcd(h, P("u")) && lhs == P("lhs") &&
               rhs == P("rhs") && lhs > rhs;
    }
    if (r == rule::pp_alphabet)
        return h == upow(P("p"), P("b")) && n == upow(P("p"), P("c")) * P("m") && P("b") < P("c") / 2;
    if (r == rule::odd_prime_cor) {
        const u64 p = P("p");
        return p > 2 && (h == upow(p, P("b")) || h == 2 * upow(p, P("b"))) && n == 2 * upow(p, P("c"));
    }
    if (r == rule::odd_prime) {
        const u64 p = P("p"), m = P("m"), f = P("f");
        if (!(p > 2 && (h == upow(p, P("b")) || h == 2 * upow(p, P("b"))) && n == upow(p, P("c")) * m && m % p))
            return false;
        u64 g = 0;
        for (u64 q = 2; q <= m; ++q)
            if (m % q == 0 && oracle::prime(q)) g = gcd(g, oracle::ord_scan(p, q));
        if (g != f) return false;
        switch (v.param("clause")) {
        case 1: return f % 2 == 0;
        case 2: return f > m && p * (f - m) > f * f - m;
        case 3: return p > m * m + m + 1;
        }
        return false;
    }
    return false;
}

}  // namespace

TEST_CASE("trivial")
{
    CHECK(test_trivial(1, 7).status == Status::Exists);
    CHECK(none(test_trivial(5, 1)));
    CHECK(open(test_trivial(6, 6)));
}

TEST_CASE("construction")
{
    CHECK(test_construction(4, 2).status == Status::Exists);
    CHECK(test_construction(9, 3).status == Status::Exists);
    CHECK(open(test_construction(6, 2)));
}

TEST_CASE("prime power necessity")
{
    CHECK(none(test_prime_power_necessity(8, 2)));
    CHECK(none(test_prime_power_necessity(2, 2)));
    CHECK(open(test_prime_power_necessity(4, 2)));
    CHECK(open(test_prime_power_necessity(6, 2)));
}

TEST_CASE("known families")
{
    CHECK(test_known_families(50, 10).param("p") == 5);
    CHECK(test_known_families(105, 3).rule == rule::known_3pq);
    CHECK(test_known_families(12, 35).rule == rule::known_pq);
    CHECK(open(test_known_families(8, 4)));
    CHECK(open(test_known_families(12, 70)));
}

TEST_CASE("sylvester")
{
    CHECK(test_sylvester(8, 2).rule == rule::sylvester_i);
    CHECK(test_sylvester(7, 10).rule == rule::sylvester_ii);
    CHECK(test_sylvester(6, 10).rule == rule::sylvester_iii);
    CHECK(open(test_sylvester(4, 2)));
    CHECK(open(test_sylvester(1, 2)));
    CHECK(open(test_sylvester(16, 2)));
}

TEST_CASE("lam-leung")
{
    CHECK(none(test_lam_leung(5, 8)));
    CHECK(open(test_lam_leung(7, 6)));
    CHECK(open(test_lam_leung(1, 5)));
}

TEST_CASE("brock")
{
    CHECK(test_brock(21, 5).param("p") == 3);
    CHECK(none(test_brock(12, 5)));
    CHECK(open(test_brock(9, 5)));
    CHECK(none(test_brock(3, 2)));
    CHECK(open(test_brock(6, 5)));
}

TEST_CASE("main inequality")
{
    CHECK(none(test_main_inequality(8, 2)));
    CHECK(none(test_main_inequality(27, 3)));
    CHECK(open(test_main_inequality(4, 2)));
    CHECK(open(test_main_inequality(6, 3)));
}

TEST_CASE("self-conjugate divisor")
{
    CHECK(test_selfconjugate_divisor(3, 2).param("p") == 3);
    CHECK(open(test_selfconjugate_divisor(4, 2)));
    // 5 is self-conjugate mod 42 (5^3 = -1 mod 42), 7 is not (no power of 7 is -1 mod 30)
    const auto v = test_selfconjugate_divisor(35, 6);
    CHECK(v.param("p") == 5);
}

TEST_CASE("self-conjugate bound")
{
    const auto v = test_selfconjugate_bound(16, 2);
    REQUIRE(none(v));
    CHECK(v.param("u") == 16);
    CHECK(v.param("w") == 4);
    CHECK(open(test_selfconjugate_bound(4, 2)));
    CHECK(open(test_selfconjugate_bound(8, 2)));
    const auto d = selfconj_decomp(8, 2);
    CHECK(d.k == 2);
    CHECK(d.r == 1);
    CHECK(d.t == 1);
}

TEST_CASE("prime power alphabet")
{
    CHECK(none(test_prime_power_alphabet(162, 3)));
    CHECK(open(test_prime_power_alphabet(54, 3)));
    CHECK(open(test_prime_power_alphabet(9, 2)));
}

TEST_CASE("odd prime alphabet")
{
    CHECK(test_odd_prime_alphabet_conditions(14, 14).rule == rule::odd_prime_cor);
    CHECK(none(test_odd_prime_alphabet_conditions(10, 5)));
    const auto v = test_odd_prime_alphabet_theorem(10, 5);
    CHECK(v.rule == rule::odd_prime);
    CHECK(v.param("f") == 4);
    CHECK(v.param("clause") == 1);
    CHECK(open(test_odd_prime_alphabet_conditions(45, 5)));
    CHECK(open(test_odd_prime_alphabet_conditions(45, 4)));
}

TEST_CASE("classify")
{
    CHECK(classify(4, 2).status == Status::Exists);
    CHECK(none(classify(8, 2)));
    CHECK(none(classify(2, 2)));
    CHECK(classify(1, 1).status == Status::Exists);
    CHECK_THROWS_AS(classify(0, 3), std::invalid_argument);
}

TEST_CASE("grid properties on [1,100]^2")
{
    std::size_t conflicts = 0, certs = 0;
    for (u64 n = 1; n <= 100; ++n)
        for (u64 h = 1; h <= 100; ++h) {
            const auto all = all_verdicts(n, h);
            bool exists = false, nonexists = false;
            for (const auto& v : all) {
                exists |= v.status == Status::Exists;
                nonexists |= v.status == Status::NotExists;
                if (v.status == Status::NotExists) {
                    INFO(n << "," << h << " " << v.rule);
                    REQUIRE(recheck(n, h, v));
                    ++certs;
                }
            }
            conflicts += exists && nonexists;

            const u64 g = gcd(n, h);
            const bool cond = (g * g) % n == 0 && !(n % 4 == 2 && h % 4 == 2);
            REQUIRE(test_construction(n, h).settled() == cond);
            if (is_prime_power(n)) REQUIRE(classify(n, h).settled());
        }
    CHECK(conflicts == 0);
    CHECK(certs > 10000);
}

#include "butson/existence.hpp"

#include <sstream>

#include "butson/constructions.hpp"

namespace butson {

const char* status_name(Status s)
{
    switch (s) {
    case Status::Exists: return "EXISTS";
    case Status::NotExists: return "NONEXISTENT";
    default: return "OPEN";
    }
}

std::int64_t Verdict::param(const std::string& key) const
{
    for (const auto& [k, v] : certificate)
        if (k == key) return v;
    throw std::out_of_range("certificate has no parameter " + key);
}

namespace {

using Cert = std::vector<std::pair<std::string, std::int64_t>>;

Verdict none_(const char* rule, Cert cert, std::string note = {})
{
    return Verdict{Status::NotExists, rule, std::move(cert), std::move(note)};
}

std::int64_t i64(u64 x) { return static_cast<std::int64_t>(x); }

u64 mul(u64 a, u64 b)
{
    u64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("existence: integer overflow");
    return r;
}

// h = p^b with p prime; returns false otherwise
bool as_prime_power(u64 h, u64& p, unsigned& b)
{
    const auto f = factorize(h);
    if (f.size() != 1) return false;
    p = f[0].prime;
    b = f[0].exponent;
    return true;
}

bool two_distinct_primes_above_3(u64 x, u64& p, u64& q)
{
    const auto f = factorize(x);
    if (f.size() != 2 || f[0].exponent != 1 || f[1].exponent != 1) return false;
    p = f[0].prime;
    q = f[1].prime;
    return p > 3;
}

}  // namespace

std::string stage_of(const std::string& r)
{
    if (r == rule::trivial) return "T";
    if (r == rule::construction || r == rule::prime_power) return "B";
    if (r == rule::known_2p2 || r == rule::known_3pq || r == rule::known_pq || r == rule::sylvester_i ||
        r == rule::sylvester_ii || r == rule::sylvester_iii || r == rule::lam_leung || r == rule::brock)
        return "A";
    return "C";
}

Verdict test_trivial(u64 n, u64 h)
{
    if (n == 1) return Verdict{Status::Exists, rule::trivial, {{"n", 1}, {"h", i64(h)}}, {}};
    if (h == 1) return none_(rule::trivial, {{"n", i64(n)}, {"h", 1}}, "constant row");
    return Verdict::open();
}

Verdict test_construction(u64 n, u64 h)
{
    auto m = cyclic_bh(n, h);
    if (!m) return Verdict::open();
    const u64 g = gcd(n, h);
    return Verdict{Status::Exists, rule::construction, {{"n", i64(n)}, {"h", i64(h)}, {"gcd", i64(g)}}, "verified witness"};
}

Verdict test_prime_power_necessity(u64 n, u64 h)
{
    u64 p;
    unsigned a;
    if (!as_prime_power(n, p, a)) return Verdict::open();
    const unsigned v = nu(p, h), need = (a + 1) / 2;
    Cert c{{"p", i64(p)}, {"a", a}, {"nu_p_h", v}};
    if (v < need) {
        c.emplace_back("required", need);
        return none_(rule::prime_power, c);
    }
    if (p == 2 && a == 1 && v < 2) {
        c.emplace_back("required", 2);
        return none_(rule::prime_power, c, "direct factor Z_2");
    }
    return Verdict::open();
}

Verdict test_known_families(u64 n, u64 h)
{
    if (h % 2 == 0) {
        const u64 p = h / 2;
        if (p > 2 && is_prime(p) && n == 2 * p * p) return none_(rule::known_2p2, {{"p", i64(p)}});
    }
    u64 p, q;
    if (h == 3 && n % 3 == 0 && two_distinct_primes_above_3(n / 3, p, q))
        return none_(rule::known_3pq, {{"p", i64(p)}, {"q", i64(q)}});
    if (two_distinct_primes_above_3(h, p, q) && n == p + q)
        return none_(rule::known_pq, {{"p", i64(p)}, {"q", i64(q)}}, "exact alphabet pq only");
    return Verdict::open();
}

Verdict test_sylvester(u64 n, u64 h)
{
    if (n >= 2 && h == 2 && !(n % 4 == 0 && is_square(n / 4))) return none_(rule::sylvester_i, {{"n", i64(n)}});
    if (n >= 5 && is_prime(n - 2) && h % 2 == 0 && h > 2) {
        const u64 p = n - 2;
        u64 x = h / 2;
        unsigned b = 0;
        while (x % p == 0) {
            x /= p;
            ++b;
        }
        if (x == 1) return none_(rule::sylvester_ii, {{"p", i64(p)}, {"b", b}});
    }
    if (n % 2 == 0 && n / 2 >= 3 && is_prime(n / 2)) {
        const u64 q = n / 2;
        const auto f = factorize(h);
        if (f.size() == 2 && f[0].prime == 2 && f[1].prime > q)
            return none_(rule::sylvester_iii,
                         {{"q", i64(q)}, {"a", f[0].exponent}, {"p", i64(f[1].prime)}, {"b", f[1].exponent}});
    }
    return Verdict::open();
}

Verdict test_lam_leung(u64 n, u64 h)
{
    if (n == 1) return Verdict::open();
    const auto ps = prime_divisors(h);
    if (semigroup_member(n, ps)) return Verdict::open();
    Cert c{{"n", i64(n)}};
    for (std::size_t i = 0; i < ps.size(); ++i) c.emplace_back("p" + std::to_string(i + 1), i64(ps[i]));
    return none_(rule::lam_leung, c);
}

Verdict test_brock(u64 n, u64 h)
{
    const u64 s = squarefree_part(n);
    if (s % 2 == 0) return Verdict::open();
    for (u64 p : prime_divisors(s)) {
        if (h % p == 0) continue;
        const u64 period = ord(h, p);
        u64 x = 1 % h;
        for (u64 j = 0; j < period; ++j) {
            if (x == (h - 1) % h) return none_(rule::brock, {{"p", i64(p)}, {"j", i64(j)}, {"squarefree_part", i64(s)}});
            x = static_cast<u64>(static_cast<unsigned __int128>(x) * p % h);
        }
    }
    return Verdict::open();
}

Verdict test_main_inequality(u64 n, u64 h)
{
    const u64 m = lcm(n, h);
    const auto ps = prime_divisors(n);
    for (u64 p : ps) {
        if (h % p) return Verdict::open();
        const unsigned vh = nu(p, h);
        if (vh >= nu(p, n)) continue;
        const u64 mod = ipow(p, vh + 1);
        for (u64 q : ps) {
            if (q == p) continue;
            if (pow_mod(q, ord(m_tilde(q, m), q), mod) == 1) return Verdict::open();
        }
    }
    const u64 g = gcd(n, h);
    if (n > g * g) return none_(rule::main_inequality, {{"n", i64(n)}, {"gcd", i64(g)}, {"gcd_squared", i64(g * g)}});
    return Verdict::open();
}

Verdict test_selfconjugate_divisor(u64 n, u64 h)
{
    const u64 m = lcm(n, h);
    for (u64 p : prime_divisors(n))
        if (h % p && is_self_conjugate(p, m)) return none_(rule::sc_divisor, {{"p", i64(p)}, {"m", i64(m)}});
    return Verdict::open();
}

SelfConjDecomp selfconj_decomp(u64 n, u64 h)
{
    SelfConjDecomp d{n, h, lcm(n, h), 1, 1, 1, 0, 0, false};
    for (const auto& [p, e] : factorize(n))
        if (is_self_conjugate(p, d.m)) d.u *= ipow(p, e);
    d.k = squarefree_part(d.u);
    d.w = 1;
    while (d.w * d.w * d.k < d.u) ++d.w;
    d.t = static_cast<unsigned>(factorize(h).size());
    d.r = static_cast<unsigned>(factorize(d.k).size());
    d.delta = d.r == d.t;
    return d;
}

Verdict test_selfconjugate_bound(u64 n, u64 h)
{
    const auto d = selfconj_decomp(n, h);
    const u64 g = gcd(h, d.u), phi = totient(d.k);
    const bool odd = d.k % 2 == 1;
    const int E = static_cast<int>(d.t) - static_cast<int>(d.r) - 1 + (odd && d.delta ? 1 : 0);
    u64 lhs = mul(mul(d.w, d.w), phi);
    u64 rhs = mul(mul(g, g), odd ? d.k : 2 * d.k);
    if (E >= 0)
        rhs = mul(rhs, ipow(4, static_cast<unsigned>(E)));
    else
        lhs = mul(lhs, ipow(4, static_cast<unsigned>(-E)));
    if (lhs <= rhs) return Verdict::open();
    return none_(rule::sc_bound, {{"m", i64(d.m)},
                                  {"u", i64(d.u)},
                                  {"w", i64(d.w)},
                                  {"k", i64(d.k)},
                                  {"t", d.t},
                                  {"r", d.r},
                                  {"delta", d.delta},
                                  {"gcd_h_u", i64(g)},
                                  {"phi_k", i64(phi)},
                                  {"E", E},
                                  {"lhs", i64(lhs)},
                                  {"rhs", i64(rhs)}},
                 odd ? "k odd" : "k even");
}

Verdict test_prime_power_alphabet(u64 n, u64 h)
{
    u64 p;
    unsigned b;
    if (!as_prime_power(h, p, b)) return Verdict::open();
    const unsigned c = nu(p, n);
    if (c == 0) return Verdict::open();
    const u64 m = n / ipow(p, c);
    if (is_self_conjugate(p, m) && b < c / 2)
        return none_(rule::pp_alphabet, {{"p", i64(p)}, {"b", b}, {"c", c}, {"m", i64(m)}});
    return Verdict::open();
}

namespace {

// h = p^b or 2 p^b with p odd
bool odd_prime_alphabet(u64 h, u64& p, unsigned& b)
{
    const auto f = factorize(h);
    if (f.size() == 1 && f[0].prime > 2) {
        p = f[0].prime;
        b = f[0].exponent;
        return true;
    }
    if (f.size() == 2 && f[0].prime == 2 && f[0].exponent == 1) {
        p = f[1].prime;
        b = f[1].exponent;
        return true;
    }
    return false;
}

}  // namespace

Verdict test_odd_prime_alphabet_corollary(u64 n, u64 h)
{
    u64 p;
    unsigned b;
    if (!odd_prime_alphabet(h, p, b)) return Verdict::open();
    const unsigned c = nu(p, n);
    if (n / ipow(p, c) != 2) return Verdict::open();
    return none_(rule::odd_prime_cor, {{"p", i64(p)}, {"b", b}, {"c", c}});
}

Verdict test_odd_prime_alphabet_theorem(u64 n, u64 h)
{
    u64 p;
    unsigned b;
    if (!odd_prime_alphabet(h, p, b)) return Verdict::open();
    PrimePowerSplit s{p, b, nu(p, n), 0, {}, 0};
    s.m = n / ipow(p, s.c);
    if (s.m < 2 || is_square(s.m)) return Verdict::open();
    s.qs = prime_divisors(s.m);
    for (u64 q : s.qs) s.f = gcd(s.f, ord(p, q));
    int clause = 0;
    if (s.f % 2 == 0)
        clause = 1;
    else if (s.f > s.m && mul(p, s.f - s.m) > s.f * s.f - s.m)
        clause = 2;
    else if (p > s.m * s.m + s.m + 1)
        clause = 3;
    if (!clause) return Verdict::open();
    return none_(rule::odd_prime,
                 {{"p", i64(p)}, {"b", b}, {"c", s.c}, {"m", i64(s.m)}, {"f", i64(s.f)}, {"clause", clause}});
}

Verdict test_odd_prime_alphabet_conditions(u64 n, u64 h)
{
    auto v = test_odd_prime_alphabet_corollary(n, h);
    if (v.settled()) return v;
    return test_odd_prime_alphabet_theorem(n, h);
}

const std::vector<NamedTest>& pipeline()
{
    static const std::vector<NamedTest> tests{
        {"trivial", test_trivial},
        {"construction", test_construction},
        {"prime_power_necessity", test_prime_power_necessity},
        {"known_families", test_known_families},
        {"sylvester", test_sylvester},
        {"lam_leung", test_lam_leung},
        {"brock", test_brock},
        {"main_inequality", test_main_inequality},
        {"selfconjugate_divisor", test_selfconjugate_divisor},
        {"selfconjugate_bound", test_selfconjugate_bound},
        {"prime_power_alphabet", test_prime_power_alphabet},
        {"odd_prime_alphabet_conditions", test_odd_prime_alphabet_conditions},
    };
    return tests;
}

const std::vector<NamedTest>& atomic_tests()
{
    static const std::vector<NamedTest> tests{
        {"trivial", test_trivial},
        {"construction", test_construction},
        {"prime_power_necessity", test_prime_power_necessity},
        {"known_families", test_known_families},
        {"sylvester", test_sylvester},
        {"lam_leung", test_lam_leung},
        {"brock", test_brock},
        {"main_inequality", test_main_inequality},
        {"selfconjugate_divisor", test_selfconjugate_divisor},
        {"selfconjugate_bound", test_selfconjugate_bound},
        {"prime_power_alphabet", test_prime_power_alphabet},
        {"odd_prime_alphabet", test_odd_prime_alphabet_theorem},
        {"odd_prime_alphabet_corollary", test_odd_prime_alphabet_corollary},
    };
    return tests;
}

Verdict classify(u64 n, u64 h)
{
    if (n == 0 || h == 0) throw std::invalid_argument("classify: n and h must be positive");
    const auto& tests = pipeline();
    for (std::size_t i = 0; i < tests.size(); ++i) {
        Verdict v = tests[i].fn(n, h);
        if (!v.settled()) continue;
        if (v.status == Status::Exists)
            for (std::size_t j = i + 1; j < tests.size(); ++j) {
                const Verdict w = tests[j].fn(n, h);
                if (w.status == Status::NotExists) {
                    std::ostringstream os;
                    os << "conflict at (" << n << "," << h << "): " << v.rule << " vs " << w.rule;
                    throw ConflictError(os.str());
                }
            }
        return v;
    }
    return Verdict::open();
}

std::vector<Verdict> all_verdicts(u64 n, u64 h)
{
    std::vector<Verdict> out;
    for (const auto& t : atomic_tests()) {
        Verdict v = t.fn(n, h);
        if (v.settled()) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace butson

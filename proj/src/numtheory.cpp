#include "butson/numtheory.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace butson {

Factorization factorize(u64 n)
{
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::vector<u64> prime_divisors(u64 n)
{
    std::vector<u64> ps;
    for (const auto& pp : factorize(n)) ps.push_back(pp.prime);
    return ps;
}

bool is_prime(u64 n)
{
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_square(u64 n)
{
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

bool is_prime_power(u64 n) { return n > 1 && factorize(n).size() == 1; }

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm(u64 a, u64 b)
{
    if (a == 0 || b == 0) return 0;
    u64 r;
    if (__builtin_mul_overflow(a / gcd(a, b), b, &r)) throw std::overflow_error("lcm overflow");
    return r;
}

u64 ipow(u64 base, unsigned e)
{
    u64 r = 1;
    while (e--)
        if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("ipow overflow");
    return r;
}

u64 pow_mod(u64 base, u64 e, u64 mod)
{
    if (mod == 1) return 0;
    unsigned __int128 r = 1, b = base % mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return static_cast<u64>(r);
}

u64 totient(u64 n)
{
    u64 r = n;
    for (const auto& pp : factorize(n)) r = r / pp.prime * (pp.prime - 1);
    return r;
}

u64 radical(u64 n)
{
    u64 r = 1;
    for (const auto& pp : factorize(n)) r *= pp.prime;
    return r;
}

unsigned nu(u64 p, u64 n)
{
    if (!is_prime(p)) throw std::invalid_argument("nu: " + std::to_string(p) + " is not prime");
    if (n == 0) throw std::invalid_argument("nu: n must be positive");
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

u64 ord(u64 modulus, u64 base)
{
    if (modulus == 0) throw std::invalid_argument("ord: modulus must be positive");
    if (modulus == 1) return 1;
    if (gcd(base % modulus, modulus) != 1)
        throw std::invalid_argument("ord: base not coprime to modulus");
    unsigned __int128 x = base % modulus;
    u64 j = 1;
    while (x != 1) {
        x = x * (base % modulus) % modulus;
        ++j;
    }
    return j;
}

u64 squarefree_part(u64 n)
{
    u64 r = 1;
    for (const auto& pp : factorize(n))
        if (pp.exponent % 2) r *= pp.prime;
    return r;
}

bool is_self_conjugate(u64 p, u64 n)
{
    if (!is_prime(p)) throw std::invalid_argument("is_self_conjugate: p must be prime");
    if (n == 0) throw std::invalid_argument("is_self_conjugate: n must be positive");
    while (n % p == 0) n /= p;
    if (n <= 2) return true;
    const u64 period = ord(n, p);
    unsigned __int128 x = 1;
    for (u64 j = 0; j < period; ++j) {
        if (x == n - 1) return true;
        x = x * p % n;
    }
    return false;
}

bool is_self_conjugate_composite(u64 m, u64 n)
{
    for (u64 p : prime_divisors(m))
        if (!is_self_conjugate(p, n)) return false;
    return true;
}

u64 m_tilde(u64 q, u64 m)
{
    const auto ps = prime_divisors(m);
    u64 r = 1;
    if (m % 2 == 1 || q == 2) {
        for (u64 p : ps)
            if (p != q) r *= p;
        return r;
    }
    r = 4;
    for (u64 p : ps)
        if (p != 2 && p != q) r *= p;
    return r;
}

u64 field_descent_F(u64 m, u64 n)
{
    if (m < 2) throw std::invalid_argument("field_descent_F: m must be at least 2");
    const auto qs = prime_divisors(n);
    u64 F = 1;
    for (const auto& [p, c] : factorize(m)) {
        unsigned b = 1;
        for (; b <= c; ++b) {
            bool ok = true;
            for (u64 q : qs) {
                if (q == p && !(p == 2 && b == 1)) continue;  // (a)
                if (b == c) continue;                         // (b)
                if (q != p) {                                 // (c)
                    const u64 mt = m_tilde(q, m);
                    if (pow_mod(q, ord(mt, q), ipow(p, b + 1)) != 1) continue;
                }
                ok = false;
                break;
            }
            if (ok) break;
        }
        F *= ipow(p, b);
    }
    return F;
}

bool semigroup_member(u64 n, const std::vector<u64>& generators)
{
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (u64 i = 1; i <= n; ++i)
        for (u64 g : generators)
            if (g >= 1 && g <= i && reach[i - g]) {
                reach[i] = 1;
                break;
            }
    return reach[n];
}

}  // namespace butson

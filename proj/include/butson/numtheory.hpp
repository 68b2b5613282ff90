#pragma once

#include <cstdint>
#include <vector>

namespace butson {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

Factorization factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);
bool is_prime(u64 n);
bool is_square(u64 n);
bool is_prime_power(u64 n);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
u64 ipow(u64 base, unsigned e);  // throws on overflow
u64 pow_mod(u64 base, u64 e, u64 mod);
u64 totient(u64 n);
u64 radical(u64 n);

unsigned nu(u64 p, u64 n);
u64 ord(u64 modulus, u64 base);
u64 squarefree_part(u64 n);

// n' = n with all factors p removed; self-conjugate iff p^j = -1 mod n'
bool is_self_conjugate(u64 p, u64 n);
bool is_self_conjugate_composite(u64 m, u64 n);

u64 m_tilde(u64 q, u64 m);
u64 field_descent_F(u64 m, u64 n);

bool semigroup_member(u64 n, const std::vector<u64>& generators);

}  // namespace butson

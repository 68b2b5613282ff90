#include "butson/constructions.hpp"

#include <stdexcept>
#include <string>

#include "butson/numtheory.hpp"

namespace butson {

namespace {

InvariantBH checked(InvariantBH m, const char* what)
{
    if (!verify_bh(m)) throw std::logic_error(std::string(what) + ": construction failed verification");
    return m;
}

void require_verified(const InvariantBH& m, const char* what)
{
    if (!verify_bh(m)) throw std::invalid_argument(std::string(what) + ": input does not verify");
}

}  // namespace

BaseSequence BaseSequence::from(const InvariantBH& m)
{
    if (m.group.moduli().size() != 1) throw std::invalid_argument("BaseSequence: cyclic group expected");
    m.validate();
    return BaseSequence{m.alphabet, m.row};
}

InvariantBH zadoff_chu(u64 n)
{
    if (n == 0) throw std::invalid_argument("zadoff_chu: n must be positive");
    InvariantBH m{GroupSpec::cyclic(n), n % 2 ? n : 2 * n, std::vector<u64>(n)};
    for (u64 i = 0; i < n; ++i) {
        if (n % 2)
            m.row[i] = (i * (i + 1) / 2) % n;
        else
            m.row[i] = (i * i) % (2 * n);
    }
    return checked(std::move(m), "zadoff_chu");
}

InvariantBH milewski(const BaseSequence& base, u64 q)
{
    if (q == 0) throw std::invalid_argument("milewski: q must be positive");
    if (base.length() == 0) throw std::invalid_argument("milewski: empty base");
    InvariantBH b{GroupSpec::cyclic(base.length()), base.alphabet, base.exponents};
    require_verified(b, "milewski");

    const u64 m = base.length(), mq = m * q, N = m * q * q;
    const u64 L = lcm(base.alphabet, mq);
    InvariantBH out{GroupSpec::cyclic(N), L, std::vector<u64>(N)};
    for (u64 y = 0; y < mq; ++y)
        for (u64 x = 0; x < q; ++x) {
            const u64 e = (L / base.alphabet) * base.exponents[y % m] + (L / mq) * ((x * y) % mq);
            out.row[x + q * y] = e % L;
        }
    return checked(std::move(out), "milewski");
}

InvariantBH prime_power_bh(u64 p, unsigned a)
{
    if (!is_prime(p)) throw std::invalid_argument("prime_power_bh: p must be prime");
    if (a == 0) throw std::invalid_argument("prime_power_bh: a must be positive");
    const u64 q = ipow(p, a / 2);
    if (a % 2 == 0) return milewski(BaseSequence{}, q);
    return milewski(BaseSequence::from(zadoff_chu(p)), q);
}

InvariantBH kronecker(const InvariantBH& a, const InvariantBH& b)
{
    require_verified(a, "kronecker");
    require_verified(b, "kronecker");
    std::vector<u64> mods = a.group.moduli();
    mods.insert(mods.end(), b.group.moduli().begin(), b.group.moduli().end());
    const u64 L = lcm(a.alphabet, b.alphabet);
    InvariantBH out{GroupSpec(mods), L, {}};
    out.row.reserve(out.group.order());
    for (u64 ea : a.row)
        for (u64 eb : b.row) out.row.push_back(((L / a.alphabet) * ea + (L / b.alphabet) * eb) % L);
    return checked(std::move(out), "kronecker");
}

InvariantBH crt_flatten(const InvariantBH& m)
{
    const auto& mods = m.group.moduli();
    if (mods.size() != 2) throw std::invalid_argument("crt_flatten: two moduli expected");
    const u64 m1 = mods[0], m2 = mods[1];
    if (gcd(m1, m2) != 1) throw std::invalid_argument("crt_flatten: moduli must be coprime");
    m.validate();
    InvariantBH out{GroupSpec::cyclic(m1 * m2), m.alphabet, std::vector<u64>(m1 * m2)};
    for (u64 i = 0; i < m1 * m2; ++i) out.row[i] = m.row[(i % m1) * m2 + i % m2];
    return out;
}

InvariantBH lift_alphabet(const InvariantBH& m, u64 h)
{
    m.validate();
    if (h == 0 || h % m.alphabet) throw std::invalid_argument("lift_alphabet: target must be a multiple of the alphabet");
    InvariantBH out = m;
    out.alphabet = h;
    for (auto& e : out.row) e *= h / m.alphabet;
    return out;
}

bool cyclic_condition(u64 n, u64 h)
{
    if (n == 0 || h == 0) return false;
    const u64 g = gcd(n, h);
    return (g * g) % n == 0 && !(nu(2, n) == 1 && nu(2, h) == 1);
}

std::optional<InvariantBH> cyclic_bh(u64 n, u64 h)
{
    if (!cyclic_condition(n, h)) return std::nullopt;
    InvariantBH acc{GroupSpec::cyclic(1), 1, {0}};
    for (const auto& [p, a] : factorize(n)) acc = crt_flatten(kronecker(acc, prime_power_bh(p, a)));
    if (h % acc.alphabet) throw std::logic_error("cyclic_bh: alphabet does not divide h");
    return checked(lift_alphabet(acc, h), "cyclic_bh");
}

std::optional<PerfectArray> perfect_array(const std::vector<u64>& dims, u64 h)
{
    if (dims.empty()) throw std::invalid_argument("perfect_array: at least one dimension required");
    std::vector<InvariantBH> parts;
    for (u64 n : dims) {
        auto c = cyclic_bh(n, h);
        if (!c) return std::nullopt;
        parts.push_back(std::move(*c));
    }
    InvariantBH acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = kronecker(acc, parts[i]);
    acc = lift_alphabet(acc, h);
    PerfectArray arr = array_from_matrix(acc);
    if (!verify_array(arr)) throw std::logic_error("perfect_array: construction failed verification");
    return arr;
}

}  // namespace butson

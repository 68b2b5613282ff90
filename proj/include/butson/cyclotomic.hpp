#pragma once

#include <cstdint>
#include <vector>

namespace butson {

using Poly = std::vector<std::int64_t>;  // coefficient i multiplies x^i

// Coefficients of the m-th cyclotomic polynomial. Cached, thread-safe.
const Poly& cyclotomic_polynomial(std::uint64_t m);

// Element of Z[zeta_m], stored as coefficients of 1, zeta, ..., zeta^(m-1).
class CycInt {
public:
    explicit CycInt(std::uint64_t order);
    CycInt(std::uint64_t order, std::vector<std::int64_t> coeffs);

    static CycInt root(std::uint64_t order, std::uint64_t k);

    std::uint64_t order() const { return order_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t operator[](std::size_t i) const { return c_[i]; }

    void add_term(std::uint64_t k, std::int64_t c);

    CycInt conj() const;
    CycInt embed(std::uint64_t new_order) const;

    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend CycInt operator*(std::int64_t s, const CycInt& a);

private:
    std::uint64_t order_;
    std::vector<std::int64_t> c_;
};

inline CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt sub(const CycInt& a, const CycInt& b) { return a - b; }
inline CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt conj(const CycInt& a) { return a.conj(); }

// Remainder of p modulo the monic polynomial d.
Poly poly_rem(Poly p, const Poly& d);
Poly poly_mul(const Poly& a, const Poly& b);

bool is_zero(const CycInt& x);

}  // namespace butson

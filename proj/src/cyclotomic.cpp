#include "butson/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace butson {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
}

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division by a monic divisor
Poly poly_div_exact(Poly p, const Poly& d)
{
    const std::size_t dd = d.size() - 1;
    Poly q(p.size() - dd, 0);
    for (std::size_t i = p.size(); i-- > dd;) {
        const std::int64_t c = p[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j)
            p[i - dd + j] = checked_add(p[i - dd + j], -checked_mul(c, d[j]));
    }
    trim(p);
    if (!p.empty()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    return q;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
    return r;
}

Poly poly_rem(Poly p, const Poly& d)
{
    if (d.empty() || d.back() != 1) throw std::invalid_argument("poly_rem: divisor must be monic");
    const std::size_t dd = d.size() - 1;
    trim(p);
    for (std::size_t i = p.size(); i-- > dd;) {
        const std::int64_t c = p[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j)
            p[i - dd + j] = checked_add(p[i - dd + j], -checked_mul(c, d[j]));
    }
    if (p.size() > dd) p.resize(dd);
    trim(p);
    return p;
}

const Poly& cyclotomic_polynomial(std::uint64_t m)
{
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    static std::mutex mu;
    static std::map<std::uint64_t, std::unique_ptr<Poly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return *it->second;
    }
    Poly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (std::uint64_t d = 1; d < m; ++d)
        if (m % d == 0) p = poly_div_exact(std::move(p), cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<Poly>(std::move(p));
    return *slot;
}

CycInt::CycInt(std::uint64_t order) : order_(order), c_(order, 0)
{
    if (order == 0) throw std::invalid_argument("CycInt: order must be positive");
}

CycInt::CycInt(std::uint64_t order, std::vector<std::int64_t> coeffs) : order_(order), c_(std::move(coeffs))
{
    if (order == 0) throw std::invalid_argument("CycInt: order must be positive");
    if (c_.size() != order) throw std::invalid_argument("CycInt: coefficient vector length must equal order");
}

CycInt CycInt::root(std::uint64_t order, std::uint64_t k)
{
    CycInt r(order);
    r.c_[k % order] = 1;
    return r;
}

void CycInt::add_term(std::uint64_t k, std::int64_t c)
{
    auto& slot = c_[k % order_];
    slot = checked_add(slot, c);
}

CycInt CycInt::conj() const
{
    CycInt r(order_);
    for (std::uint64_t i = 0; i < order_; ++i) r.c_[(order_ - i) % order_] = c_[i];
    return r;
}

CycInt CycInt::embed(std::uint64_t new_order) const
{
    if (new_order % order_) throw std::invalid_argument("CycInt::embed: order must divide the new order");
    CycInt r(new_order);
    const std::uint64_t s = new_order / order_;
    for (std::uint64_t i = 0; i < order_; ++i) r.c_[i * s] = c_[i];
    return r;
}

static void require_same_order(const CycInt& a, const CycInt& b)
{
    if (a.order() != b.order()) throw std::invalid_argument("CycInt: order mismatch");
}

CycInt operator+(const CycInt& a, const CycInt& b)
{
    require_same_order(a, b);
    CycInt r(a.order_);
    for (std::uint64_t i = 0; i < a.order_; ++i) r.c_[i] = checked_add(a.c_[i], b.c_[i]);
    return r;
}

CycInt operator-(const CycInt& a, const CycInt& b)
{
    require_same_order(a, b);
    CycInt r(a.order_);
    for (std::uint64_t i = 0; i < a.order_; ++i) r.c_[i] = checked_add(a.c_[i], -b.c_[i]);
    return r;
}

CycInt operator*(const CycInt& a, const CycInt& b)
{
    require_same_order(a, b);
    const std::uint64_t m = a.order_;
    CycInt r(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::uint64_t j = 0; j < m; ++j) {
            if (b.c_[j] == 0) continue;
            auto& slot = r.c_[(i + j) % m];
            slot = checked_add(slot, checked_mul(a.c_[i], b.c_[j]));
        }
    }
    return r;
}

CycInt operator*(std::int64_t s, const CycInt& a)
{
    CycInt r(a.order_);
    for (std::uint64_t i = 0; i < a.order_; ++i) r.c_[i] = checked_mul(s, a.c_[i]);
    return r;
}

bool is_zero(const CycInt& x)
{
    return poly_rem(x.coeffs(), cyclotomic_polynomial(x.order())).empty();
}

}  // namespace butson

#include "butson/bhcore.hpp"

#include <json.hpp>
#include <algorithm>
#include <stdexcept>

#include "butson/numtheory.hpp"

namespace butson {

GroupSpec::GroupSpec(std::vector<u64> moduli) : moduli_(std::move(moduli))
{
    if (moduli_.empty()) moduli_ = {1};
    order_ = 1;
    for (u64 n : moduli_) {
        if (n == 0) throw std::invalid_argument("GroupSpec: moduli must be positive");
        if (__builtin_mul_overflow(order_, n, &order_)) throw std::overflow_error("GroupSpec: order overflow");
    }
}

u64 GroupSpec::exponent() const
{
    u64 e = 1;
    for (u64 n : moduli_) e = lcm(e, n);
    return e;
}

std::vector<u64> GroupSpec::coords(u64 index) const
{
    if (index >= order_) throw std::out_of_range("GroupSpec: element index out of range");
    std::vector<u64> c(moduli_.size());
    for (std::size_t j = moduli_.size(); j-- > 0;) {
        c[j] = index % moduli_[j];
        index /= moduli_[j];
    }
    return c;
}

u64 GroupSpec::index(const std::vector<u64>& c) const
{
    if (c.size() != moduli_.size()) throw std::invalid_argument("GroupSpec: coordinate arity mismatch");
    u64 i = 0;
    for (std::size_t j = 0; j < c.size(); ++j) i = i * moduli_[j] + c[j] % moduli_[j];
    return i;
}

u64 GroupSpec::add(u64 a, u64 b) const
{
    auto ca = coords(a), cb = coords(b);
    for (std::size_t j = 0; j < ca.size(); ++j) ca[j] = (ca[j] + cb[j]) % moduli_[j];
    return index(ca);
}

u64 GroupSpec::sub(u64 a, u64 b) const
{
    auto ca = coords(a), cb = coords(b);
    for (std::size_t j = 0; j < ca.size(); ++j) ca[j] = (ca[j] + moduli_[j] - cb[j]) % moduli_[j];
    return index(ca);
}

void InvariantBH::validate() const
{
    if (alphabet == 0) throw std::invalid_argument("InvariantBH: alphabet must be positive");
    if (row.size() != group.order()) throw std::invalid_argument("InvariantBH: row length must equal group order");
    for (u64 e : row)
        if (e >= alphabet) throw std::invalid_argument("InvariantBH: exponent out of range");
}

void PerfectArray::validate() const
{
    if (alphabet == 0) throw std::invalid_argument("PerfectArray: alphabet must be positive");
    const GroupSpec g(dims);
    if (data.size() != g.order()) throw std::invalid_argument("PerfectArray: data length must equal product of dims");
    for (u64 e : data)
        if (e >= alphabet) throw std::invalid_argument("PerfectArray: exponent out of range");
}

namespace {

// translation table: shift_table[g] = g + s
std::vector<u64> translate(const GroupSpec& g, u64 s)
{
    const auto cs = g.coords(s);
    const auto& mod = g.moduli();
    std::vector<u64> out(g.order());
    std::vector<u64> c(mod.size(), 0);
    for (u64 i = 0; i < g.order(); ++i) {
        u64 idx = 0;
        for (std::size_t j = 0; j < mod.size(); ++j) idx = idx * mod[j] + (c[j] + cs[j]) % mod[j];
        out[i] = idx;
        for (std::size_t j = mod.size(); j-- > 0;) {
            if (++c[j] < mod[j]) break;
            c[j] = 0;
        }
    }
    return out;
}

CycInt correlate(const std::vector<u64>& row, u64 h, const std::vector<u64>& shifted)
{
    CycInt r(h);
    for (u64 i = 0; i < row.size(); ++i) r.add_term((row[shifted[i]] + h - row[i]) % h, 1);
    return r;
}

}  // namespace

CycInt autocorrelation(const InvariantBH& m, u64 shift)
{
    m.validate();
    if (shift >= m.group.order()) throw std::out_of_range("autocorrelation: shift out of range");
    return correlate(m.row, m.alphabet, translate(m.group, shift));
}

bool verify_bh(const InvariantBH& m)
{
    m.validate();
    for (u64 s = 1; s < m.group.order(); ++s)
        if (!is_zero(correlate(m.row, m.alphabet, translate(m.group, s)))) return false;
    return true;
}

std::vector<std::vector<u64>> materialize(const InvariantBH& m)
{
    m.validate();
    const u64 n = m.group.order();
    std::vector<std::vector<u64>> t(n, std::vector<u64>(n));
    for (u64 g = 0; g < n; ++g)
        for (u64 k = 0; k < n; ++k) t[g][k] = m.row[m.group.sub(k, g)];
    return t;
}

PerfectArray array_from_matrix(const InvariantBH& m)
{
    if (!verify_bh(m)) throw std::invalid_argument("array_from_matrix: matrix does not verify");
    return PerfectArray{m.group.moduli(), m.alphabet, m.row};
}

InvariantBH matrix_from_array(const PerfectArray& a)
{
    a.validate();
    return InvariantBH{GroupSpec(a.dims), a.alphabet, a.data};
}

bool verify_array(const PerfectArray& a)
{
    a.validate();
    const auto& d = a.dims;
    const std::size_t k = d.size();
    const u64 h = a.alphabet;
    std::vector<u64> stride(k, 1);
    for (std::size_t j = k; j-- > 1;) stride[j - 1] = stride[j] * d[j];
    std::vector<u64> s(k, 0), x(k);
    const u64 total = a.data.size();
    for (u64 si = 1; si < total; ++si) {
        for (std::size_t j = k; j-- > 0;) {
            if (++s[j] < d[j]) break;
            s[j] = 0;
        }
        CycInt r(h);
        std::fill(x.begin(), x.end(), 0);
        for (u64 i = 0; i < total; ++i) {
            u64 t = 0;
            for (std::size_t j = 0; j < k; ++j) t += ((x[j] + s[j]) % d[j]) * stride[j];
            r.add_term((a.data[t] + h - a.data[i]) % h, 1);
            for (std::size_t j = k; j-- > 0;) {
                if (++x[j] < d[j]) break;
                x[j] = 0;
            }
        }
        if (!is_zero(r)) return false;
    }
    return true;
}

std::string to_json(const InvariantBH& m)
{
    m.validate();
    nlohmann::ordered_json j;
    j["kind"] = "bh";
    j["group"] = m.group.moduli();
    j["h"] = m.alphabet;
    j["row"] = m.row;
    return j.dump();
}

std::string to_json(const PerfectArray& a)
{
    a.validate();
    nlohmann::ordered_json j;
    j["kind"] = "perfect-array";
    j["dims"] = a.dims;
    j["h"] = a.alphabet;
    j["data"] = a.data;
    return j.dump();
}

namespace {

nlohmann::json parse_kind(const std::string& text, const char* kind)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("kind", "") != kind)
        throw std::invalid_argument(std::string("expected an object with kind \"") + kind + "\"");
    return j;
}

std::vector<u64> uint_list(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_array()) throw std::invalid_argument(std::string("missing array field ") + key);
    std::vector<u64> v;
    for (const auto& e : j[key]) {
        if (!e.is_number_unsigned()) throw std::invalid_argument(std::string("non-negative integers expected in ") + key);
        v.push_back(e.get<u64>());
    }
    return v;
}

u64 alphabet_field(const nlohmann::json& j)
{
    if (!j.contains("h") || !j["h"].is_number_unsigned()) throw std::invalid_argument("missing integer field h");
    return j["h"].get<u64>();
}

}  // namespace

InvariantBH bh_from_json(const std::string& text)
{
    const auto j = parse_kind(text, "bh");
    InvariantBH m{GroupSpec(uint_list(j, "group")), alphabet_field(j), uint_list(j, "row")};
    m.validate();
    return m;
}

PerfectArray array_from_json(const std::string& text)
{
    const auto j = parse_kind(text, "perfect-array");
    PerfectArray a{uint_list(j, "dims"), alphabet_field(j), uint_list(j, "data")};
    a.validate();
    return a;
}

}  // namespace butson

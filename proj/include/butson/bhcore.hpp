#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "butson/cyclotomic.hpp"

namespace butson {

using u64 = std::uint64_t;

class GroupSpec {
public:
    GroupSpec() : moduli_{1} {}
    explicit GroupSpec(std::vector<u64> moduli);
    static GroupSpec cyclic(u64 n) { return GroupSpec({n}); }

    const std::vector<u64>& moduli() const { return moduli_; }
    u64 order() const { return order_; }
    u64 exponent() const;

    // mixed radix, first modulus most significant
    std::vector<u64> coords(u64 index) const;
    u64 index(const std::vector<u64>& coords) const;
    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;

    bool operator==(const GroupSpec& o) const { return moduli_ == o.moduli_; }

private:
    std::vector<u64> moduli_;
    u64 order_ = 1;
};

struct InvariantBH {
    GroupSpec group;
    u64 alphabet = 1;
    std::vector<u64> row;

    void validate() const;
    bool operator==(const InvariantBH&) const = default;
};

struct PerfectArray {
    std::vector<u64> dims;
    u64 alphabet = 1;
    std::vector<u64> data;

    void validate() const;
    bool operator==(const PerfectArray&) const = default;
};

CycInt autocorrelation(const InvariantBH& m, u64 shift);
bool verify_bh(const InvariantBH& m);
std::vector<std::vector<u64>> materialize(const InvariantBH& m);

PerfectArray array_from_matrix(const InvariantBH& m);
InvariantBH matrix_from_array(const PerfectArray& a);
bool verify_array(const PerfectArray& a);

std::string to_json(const InvariantBH& m);
std::string to_json(const PerfectArray& a);
InvariantBH bh_from_json(const std::string& text);
PerfectArray array_from_json(const std::string& text);

}  // namespace butson

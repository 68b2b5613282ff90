#pragma once

#include <optional>
#include <vector>

#include "butson/bhcore.hpp"

namespace butson {

struct BaseSequence {
    u64 alphabet = 1;
    std::vector<u64> exponents{0};

    u64 length() const { return exponents.size(); }
    static BaseSequence from(const InvariantBH& m);
};

InvariantBH zadoff_chu(u64 n);
InvariantBH milewski(const BaseSequence& base, u64 q);
InvariantBH prime_power_bh(u64 p, unsigned a);
InvariantBH kronecker(const InvariantBH& a, const InvariantBH& b);
InvariantBH crt_flatten(const InvariantBH& m);
InvariantBH lift_alphabet(const InvariantBH& m, u64 h);

bool cyclic_condition(u64 n, u64 h);
std::optional<InvariantBH> cyclic_bh(u64 n, u64 h);
std::optional<PerfectArray> perfect_array(const std::vector<u64>& dims, u64 h);

}  // namespace butson

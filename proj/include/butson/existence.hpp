#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "butson/numtheory.hpp"

namespace butson {

enum class Status { Exists, NotExists, Open };

const char* status_name(Status s);  // EXISTS / NONEXISTENT / OPEN

struct Verdict {
    Status status = Status::Open;
    std::string rule;  // rule or construction identifier, empty when open
    std::vector<std::pair<std::string, std::int64_t>> certificate;
    std::string note;

    static Verdict open() { return {}; }
    bool settled() const { return status != Status::Open; }
    std::int64_t param(const std::string& key) const;  // throws if absent
};

struct SelfConjDecomp {
    u64 n, h, m, u, w, k;
    unsigned t, r;
    bool delta;
};

struct PrimePowerSplit {
    u64 p;
    unsigned b, c;
    u64 m;
    std::vector<u64> qs;
    u64 f;
};

SelfConjDecomp selfconj_decomp(u64 n, u64 h);

// rule identifiers
namespace rule {
inline constexpr const char* trivial = "trivial";
inline constexpr const char* construction = "construction";
inline constexpr const char* prime_power = "prime_power";
inline constexpr const char* known_2p2 = "known_2p2_2p";
inline constexpr const char* known_3pq = "known_3pq_3";
inline constexpr const char* known_pq = "known_p_plus_q";
inline constexpr const char* sylvester_i = "sylvester_i";
inline constexpr const char* sylvester_ii = "sylvester_ii";
inline constexpr const char* sylvester_iii = "sylvester_iii";
inline constexpr const char* lam_leung = "lam_leung";
inline constexpr const char* brock = "brock";
inline constexpr const char* main_inequality = "main_inequality";
inline constexpr const char* sc_divisor = "selfconjugate_divisor";
inline constexpr const char* sc_bound = "selfconjugate_bound";
inline constexpr const char* pp_alphabet = "prime_power_alphabet";
inline constexpr const char* odd_prime = "odd_prime_alphabet";
inline constexpr const char* odd_prime_cor = "odd_prime_alphabet_corollary";
}  // namespace rule

// "T", "A", "B" or "C"
std::string stage_of(const std::string& rule_id);

Verdict test_trivial(u64 n, u64 h);
Verdict test_construction(u64 n, u64 h);  // builds and verifies the witness
Verdict test_prime_power_necessity(u64 n, u64 h);
Verdict test_known_families(u64 n, u64 h);
Verdict test_sylvester(u64 n, u64 h);
Verdict test_lam_leung(u64 n, u64 h);
Verdict test_brock(u64 n, u64 h);
Verdict test_main_inequality(u64 n, u64 h);
Verdict test_selfconjugate_divisor(u64 n, u64 h);
Verdict test_selfconjugate_bound(u64 n, u64 h);
Verdict test_prime_power_alphabet(u64 n, u64 h);
Verdict test_odd_prime_alphabet_theorem(u64 n, u64 h);
Verdict test_odd_prime_alphabet_corollary(u64 n, u64 h);
Verdict test_odd_prime_alphabet_conditions(u64 n, u64 h);

using TestFn = Verdict (*)(u64, u64);

struct NamedTest {
    const char* name;
    TestFn fn;
};

// classify order
const std::vector<NamedTest>& pipeline();
// every atomic test, used for independent accounting
const std::vector<NamedTest>& atomic_tests();

struct ConflictError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First settled verdict in pipeline order. Throws ConflictError if an
// Exists verdict is contradicted by any later test.
Verdict classify(u64 n, u64 h);

// Every atomic test that settles (n, h), in atomic order.
std::vector<Verdict> all_verdicts(u64 n, u64 h);

}  // namespace butson

#pragma once

#include <map>
#include <string>
#include <vector>

#include "butson/existence.hpp"

namespace butson {

enum class Attribution { Staged, Independent };

struct CensusBounds {
    u64 n_min = 1, n_max = 100, h_min = 1, h_max = 100;
    u64 size() const { return (n_max - n_min + 1) * (h_max - h_min + 1); }
};

struct CensusOptions {
    CensusBounds bounds;
    Attribution mode = Attribution::Staged;
    unsigned jobs = 1;
    // staged only: a nonexistence verdict at (n, h') also settles (n, h) for every h | h' in range
    bool propagate_divisors = false;
};

struct CensusRecord {
    u64 n, h;
    Status status;
    std::string rule;   // "-" when open; '|'-joined firing rules in independent mode
    std::string stage;  // T, A, B, C or "-"
};

struct StagedFigures {
    u64 open_after_a = 0;         // excludes n = 1 and h = 1 (stage T)
    u64 settled_b = 0;            // construction + prime-power necessity
    u64 settled_b_exists = 0;     // construction only
    u64 settled_b_nonexists = 0;  // prime-power necessity only
    u64 remaining_after_b = 0;
    u64 removed_c = 0;
    u64 open_total = 0;
};

struct CensusReport {
    CensusOptions options;
    std::vector<CensusRecord> records;  // sorted by (n, h)
    std::map<std::string, u64> by_rule;
    std::map<std::string, u64> by_stage;
    std::map<std::string, u64> by_status;
    StagedFigures staged;  // filled in staged mode
};

CensusReport run_census(const CensusOptions& opts);

std::string census_csv(const CensusReport& r);
std::string census_json(const CensusReport& r, bool with_records);
void export_csv(const CensusReport& r, const std::string& path);
void export_json(const CensusReport& r, const std::string& path, bool with_records = true);

}  // namespace butson

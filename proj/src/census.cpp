#include "butson/census.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

namespace butson {

namespace {

const std::vector<TestFn> stage_a{test_known_families, test_sylvester, test_lam_leung, test_brock};
const std::vector<TestFn> stage_b{test_construction, test_prime_power_necessity};
const std::vector<TestFn> stage_c{test_main_inequality, test_selfconjugate_divisor, test_selfconjugate_bound,
                                  test_prime_power_alphabet, test_odd_prime_alphabet_conditions};

struct PairResult {
    CensusRecord rec;
    std::vector<std::string> fired;  // independent mode
    std::string conflict;
};

Verdict first_of(const std::vector<TestFn>& tests, u64 n, u64 h)
{
    for (TestFn t : tests) {
        Verdict v = t(n, h);
        if (v.settled()) return v;
    }
    return Verdict::open();
}

std::string conflict_of(u64 n, u64 h, const std::vector<Verdict>& all)
{
    std::string ex, no;
    for (const auto& v : all) {
        auto& s = v.status == Status::Exists ? ex : no;
        s += (s.empty() ? "" : "|") + v.rule;
    }
    if (ex.empty() || no.empty()) return {};
    std::ostringstream os;
    os << n << "," << h << ": exists by " << ex << ", nonexistent by " << no;
    return os.str();
}

PairResult evaluate(u64 n, u64 h, Attribution mode)
{
    PairResult r{{n, h, Status::Open, "-", "-"}, {}, {}};
    const auto all = all_verdicts(n, h);
    r.conflict = conflict_of(n, h, all);
    if (mode == Attribution::Independent) {
        std::string joined;
        for (const auto& v : all) {
            r.fired.push_back(v.rule);
            joined += (joined.empty() ? "" : "|") + v.rule;
        }
        if (!all.empty()) {
            bool exists = false;
            for (const auto& v : all) exists |= v.status == Status::Exists;
            r.rec.status = exists ? Status::Exists : Status::NotExists;
            r.rec.rule = joined;
            r.rec.stage = stage_of(all.front().rule);
        }
        return r;
    }
    Verdict v = test_trivial(n, h);
    if (!v.settled()) v = first_of(stage_a, n, h);
    if (!v.settled()) v = first_of(stage_b, n, h);
    if (!v.settled()) v = first_of(stage_c, n, h);
    if (v.settled()) r.rec = {n, h, v.status, v.rule, stage_of(v.rule)};
    return r;
}

constexpr const char* closure_rule = "divisor_closure";

int rank(const std::string& stage)
{
    static const std::string order = "TABC";
    const auto i = order.find(stage);
    return i == std::string::npos ? 4 : static_cast<int>(i);
}

// settle (n, h) at `stage` when some multiple of h in range is already nonexistent by then
void close_downward(std::vector<PairResult>& res, const CensusBounds& b, const std::string& stage)
{
    const u64 H = b.h_max - b.h_min + 1;
    const int s = rank(stage);
    auto at = [&](u64 n, u64 h) -> CensusRecord& { return res[(n - b.n_min) * H + (h - b.h_min)].rec; };
    for (u64 n = b.n_min; n <= b.n_max; ++n)
        for (u64 h = b.h_min; h <= b.h_max; ++h) {
            auto& r = at(n, h);
            if (rank(r.stage) <= s) continue;
            for (u64 k = 2 * h; k <= b.h_max; k += h) {
                const auto& m = at(n, k);
                if (k >= b.h_min && m.status == Status::NotExists && rank(m.stage) <= s) {
                    r = {n, h, Status::NotExists, closure_rule, stage};
                    break;
                }
            }
        }
}

}  // namespace

CensusReport run_census(const CensusOptions& opts)
{
    const auto& b = opts.bounds;
    if (b.n_min < 1 || b.h_min < 1 || b.n_max > 10000 || b.h_max > 10000 || b.n_min > b.n_max || b.h_min > b.h_max)
        throw std::invalid_argument("census bounds must satisfy 1 <= min <= max <= 10000");

    const u64 H = b.h_max - b.h_min + 1, total = b.size();
    std::vector<PairResult> res(total);
    std::atomic<u64> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (u64 i; (i = next++) < total;) {
            try {
                res[i] = evaluate(b.n_min + i / H, b.h_min + i % H, opts.mode);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                next = total;
            }
        }
    };
    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);

    std::string diff;
    for (const auto& r : res)
        if (!r.conflict.empty()) diff += r.conflict + "\n";
    if (!diff.empty()) throw ConflictError("census conflicts:\n" + diff);

    if (opts.mode == Attribution::Staged && opts.propagate_divisors) {
        close_downward(res, b, "A");
        close_downward(res, b, "C");
    }

    CensusReport rep;
    rep.options = opts;
    rep.records.reserve(total);
    for (auto& r : res) {
        rep.records.push_back(r.rec);
        ++rep.by_status[status_name(r.rec.status)];
        if (r.rec.status == Status::Open) continue;
        ++rep.by_stage[r.rec.stage];
        if (opts.mode == Attribution::Independent)
            for (const auto& f : r.fired) ++rep.by_rule[f];
        else
            ++rep.by_rule[r.rec.rule];
    }

    if (opts.mode == Attribution::Staged) {
        auto& s = rep.staged;
        for (const auto& r : rep.records) {
            if (r.stage == "T") continue;
            if (r.stage == "A") continue;
            ++s.open_after_a;
            if (r.stage == "B") {
                ++s.settled_b;
                ++(r.status == Status::Exists ? s.settled_b_exists : s.settled_b_nonexists);
                continue;
            }
            ++s.remaining_after_b;
            if (r.stage == "C") ++s.removed_c;
        }
        s.open_total = s.remaining_after_b - s.removed_c;
    }
    return rep;
}

std::string census_csv(const CensusReport& r)
{
    std::ostringstream os;
    os << "n,h,verdict,rule,stage\n";
    for (const auto& x : r.records)
        os << x.n << ',' << x.h << ',' << status_name(x.status) << ',' << x.rule << ',' << x.stage << '\n';
    return os.str();
}

std::string census_json(const CensusReport& r, bool with_records)
{
    nlohmann::ordered_json j;
    const auto& b = r.options.bounds;
    j["attribution"] = r.options.mode == Attribution::Staged ? "staged" : "independent";
    j["propagate_divisors"] = r.options.propagate_divisors;
    j["bounds"] = {{"n_min", b.n_min}, {"n_max", b.n_max}, {"h_min", b.h_min}, {"h_max", b.h_max}};
    j["grid_size"] = b.size();
    j["open_total"] = r.by_status.count("OPEN") ? r.by_status.at("OPEN") : 0;
    j["by_status"] = r.by_status;
    j["by_stage"] = r.by_stage;
    j["by_rule"] = r.by_rule;
    if (r.options.mode == Attribution::Staged) {
        const auto& s = r.staged;
        j["staged"] = {{"open_after_a", s.open_after_a},
                       {"settled_b", s.settled_b},
                       {"settled_b_construction", s.settled_b_exists},
                       {"settled_b_prime_power", s.settled_b_nonexists},
                       {"remaining_after_b", s.remaining_after_b},
                       {"removed_c", s.removed_c},
                       {"open_total", s.open_total}};
    }
    if (with_records) {
        auto& rows = j["records"] = nlohmann::ordered_json::array();
        for (const auto& x : r.records) rows.push_back({x.n, x.h, status_name(x.status), x.rule, x.stage});
    }
    return j.dump(2) + "\n";
}

namespace {

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

void export_csv(const CensusReport& r, const std::string& path) { write_file(path, census_csv(r)); }

void export_json(const CensusReport& r, const std::string& path, bool with_records)
{
    write_file(path, census_json(r, with_records));
}

}  // namespace butson

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "butson/census.hpp"
#include "butson/constructions.hpp"
#include "butson/existence.hpp"
#include "butson/numtheory.hpp"

using namespace butson;

namespace {

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out || !(out << text << "\n")) throw std::runtime_error("cannot write " + path);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code(Status s) { return s == Status::Exists ? 0 : s == Status::NotExists ? 1 : 2; }

int cmd_classify(u64 n, u64 h, bool json)
{
    const Verdict v = classify(n, h);
    if (json) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["h"] = h;
        j["verdict"] = status_name(v.status);
        j["rule"] = v.rule;
        j["stage"] = v.settled() ? stage_of(v.rule) : "-";
        auto& c = j["certificate"] = nlohmann::ordered_json::object();
        for (const auto& [k, x] : v.certificate) c[k] = x;
        if (!v.note.empty()) j["note"] = v.note;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << status_name(v.status);
        if (v.settled()) std::cout << " " << v.rule;
        for (const auto& [k, x] : v.certificate) std::cout << " " << k << "=" << x;
        if (!v.note.empty()) std::cout << " (" << v.note << ")";
        std::cout << "\n";
    }
    return exit_code(v.status);
}

int cmd_verify(const std::string& path)
{
    const auto text = slurp(path);
    bool ok;
    try {
        const auto kind = nlohmann::json::parse(text).value("kind", "");
        ok = kind == "perfect-array" ? verify_array(array_from_json(text)) : verify_bh(bh_from_json(text));
    } catch (const std::exception& e) {
        std::cerr << "bh verify: " << path << ": " << e.what() << "\n";
        return 1;
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Group-invariant Butson Hadamard matrices: classify, construct, verify, census"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    u64 n = 0, h = 0;
    bool json = false;
    auto* classify_cmd = app.add_subcommand("classify", "Classify existence of BH(Z_n, h)");
    classify_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    classify_cmd->add_option("h", h)->required()->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--json", json, "Machine-readable output");

    CensusOptions copt;
    std::string mode = "staged", csv_out, summary_out;
    auto* census_cmd = app.add_subcommand("census", "Sweep an (n, h) grid");
    census_cmd->add_option("--n-min", copt.bounds.n_min);
    census_cmd->add_option("--n-max", copt.bounds.n_max);
    census_cmd->add_option("--h-min", copt.bounds.h_min);
    census_cmd->add_option("--h-max", copt.bounds.h_max);
    census_cmd->add_option("--attribution", mode)->check(CLI::IsMember({"staged", "independent"}));
    census_cmd->add_option("--out", csv_out, "CSV report path");
    census_cmd->add_option("--summary", summary_out, "JSON summary path");
    census_cmd->add_option("--jobs", copt.jobs)->check(CLI::PositiveNumber);
    census_cmd->add_flag("--propagate-divisors", copt.propagate_divisors,
                         "Staged mode: settle (n, h) when (n, kh) is nonexistent");

    std::string out;
    auto* construct_cmd = app.add_subcommand("construct", "Build a verified BH(Z_n, h)");
    construct_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    construct_cmd->add_option("--h", h)->required()->check(CLI::PositiveNumber);
    construct_cmd->add_option("--out", out);

    std::string file;
    auto* verify_cmd = app.add_subcommand("verify", "Verify a matrix or array file");
    verify_cmd->add_option("file", file)->required();

    std::vector<u64> dims;
    auto* array_cmd = app.add_subcommand("array", "Build a verified perfect h-phase array");
    array_cmd->add_option("--dims", dims)->required()->delimiter(',')->check(CLI::PositiveNumber);
    array_cmd->add_option("--h", h)->required()->check(CLI::PositiveNumber);
    array_cmd->add_option("--out", out);

    u64 fm = 0, fn = 0;
    auto* tools_cmd = app.add_subcommand("tools", "Number-theory diagnostics");
    tools_cmd->require_subcommand(1);
    auto* fvalue_cmd = tools_cmd->add_subcommand("f-value", "Print F(m, n)");
    fvalue_cmd->add_option("m", fm)->required();
    fvalue_cmd->add_option("n", fn)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify_cmd) return cmd_classify(n, h, json);
        if (*census_cmd) {
            copt.mode = mode == "staged" ? Attribution::Staged : Attribution::Independent;
            const auto rep = run_census(copt);
            if (!csv_out.empty()) export_csv(rep, csv_out);
            if (!summary_out.empty()) export_json(rep, summary_out, false);
            if (summary_out.empty()) std::cout << census_json(rep, false);
            return 0;
        }
        if (*construct_cmd) {
            const auto m = cyclic_bh(n, h);
            if (!m) {
                std::cerr << "bh construct: no construction for (" << n << ", " << h << ")\n";
                return 2;
            }
            emit(to_json(*m), out);
            return 0;
        }
        if (*verify_cmd) return cmd_verify(file);
        if (*array_cmd) {
            const auto a = perfect_array(dims, h);
            if (!a) {
                std::cerr << "bh array: some dimension fails n | gcd(n,h)^2 with (v2(n),v2(h)) != (1,1)\n";
                return 2;
            }
            emit(to_json(*a), out);
            return 0;
        }
        if (*fvalue_cmd) {
            std::cout << field_descent_F(fm, fn) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "bh: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

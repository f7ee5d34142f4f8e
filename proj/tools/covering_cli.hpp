#pragma once

// Command-line front end. Kept header-only so the test suite can drive the
// exact same code path as the binary through run().

#include "covering/covering.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace covering::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 1,
    exit_invalid = 2,
    exit_resource = 3,
};

inline int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ProductTooLarge:
    case ErrorCode::TooManyAssignments:
    case ErrorCode::KTooLarge:
        return exit_resource;
    default:
        return exit_invalid;
    }
}

/// Comma-separated decimal moduli, no whitespace, each fitting in 64 bits.
inline std::vector<std::uint64_t> parse_moduli(const std::string& text)
{
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto value = parse_decimal(token);
        if (!value)
            throw Error(ErrorCode::InvalidArgument, "modulus '" + token + "' is not a decimal integer");
        if (*value < 2)
            throw Error(ErrorCode::TooSmall, "modulus " + token + " is below 2");
        const auto narrow = to_u64(*value);
        if (!narrow)
            throw Error(ErrorCode::TooLarge, "modulus " + token + " does not fit in 64 bits");
        out.push_back(*narrow);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

struct ModuliOptions {
    std::string primes;
    std::size_t first_k = 0;
    bool coprime = false;

    void attach(CLI::App& cmd)
    {
        auto* p = cmd.add_option("--primes,--moduli", primes, "comma-separated moduli, e.g. 2,3,5");
        auto* f = cmd.add_option("--first-k", first_k, "use the first N primes")->check(CLI::PositiveNumber);
        p->excludes(f);
        cmd.add_flag("--coprime", coprime, "accept pairwise-coprime composite moduli");
    }

    ModulusSystem system() const
    {
        if (first_k > 0) {
            const auto ps = first_primes(first_k);
            return validate_modulus_system(ps, false);
        }
        if (primes.empty())
            throw Error(ErrorCode::Empty, "one of --primes or --first-k is required");
        const auto moduli = parse_moduli(primes);
        return validate_modulus_system(moduli, coprime);
    }
};

inline Json decimal_array(const std::vector<BigInt>& values)
{
    Json arr = Json::array();
    for (const auto& v : values)
        arr.push_back(to_decimal(v));
    return arr;
}

inline Json moduli_json(const ModulusSystem& system)
{
    Json arr = Json::array();
    for (auto p : system.moduli())
        arr.push_back(std::to_string(p));
    return arr;
}

inline Json counts_json(const CoverageCounts& c)
{
    return Json{{"product", to_decimal(c.product)},
                {"available", to_decimal(c.available)},
                {"free", to_decimal(c.free)},
                {"occupied", to_decimal(c.occupied)}};
}

inline std::string format_ms(double ms)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << ms;
    return s.str();
}

inline std::string join(const std::vector<std::string>& parts, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string moduli_field(const ModulusSystem& system)
{
    std::vector<std::string> parts;
    for (auto p : system.moduli())
        parts.push_back(std::to_string(p));
    return join(parts, ';');
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(std::vector<std::string> args)
    {
        CLI::App app{"Exact coverage counts for residue classes of distinct prime moduli", "covering"};
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--format", format_, "output format")->check(CLI::IsMember({"json", "csv"}));
        app.add_flag("--timing", timing_, "report wall time in timing_ms (otherwise null)");

        auto* count = app.add_subcommand("count", "available/free/occupied counts and the full histogram");
        moduli_.attach(*count);

        auto* det = app.add_subcommand("det", "evaluate one determinant family");
        moduli_.attach(*det);
        det->add_option("--method", method_, "recurrence, bareiss or laplace")
            ->check(CLI::IsMember({"recurrence", "bareiss", "laplace"}));
        det->add_option("--which", which_, "available or free")->check(CLI::IsMember({"available", "free"}));

        auto* verify = app.add_subcommand("verify", "sieve residue assignments against the recurrences");
        moduli_.attach(*verify);
        verify->add_option("--trials", trials_, "random assignments to test")->check(CLI::PositiveNumber);
        verify->add_option("--seed", seed_, "generator seed");
        verify->add_flag("--exhaustive", exhaustive_, "test every assignment");
        verify->add_option("--limit", limit_, "largest product the sieve accepts (decimal)");
        verify->add_option("--threads", threads_, "sieve threads, 0 = auto");
        verify->add_option("--chunk-size", chunk_size_, "sieve window length")->check(CLI::PositiveNumber);

        auto* oeis = app.add_subcommand("oeis", "emit A067549 or A005867");
        oeis->add_option("--sequence", sequence_, "A067549 or A005867")
            ->required()
            ->check(CLI::IsMember({std::string(a067549_name), std::string(a005867_name)}));
        oeis->add_option("--terms", terms_, "number of terms")->check(CLI::PositiveNumber);
        oeis->add_flag("--bfile", bfile_, "plain 'index value' lines");
        oeis->add_option("--check", check_path_, "compare against a local b-file");

        auto* bench = app.add_subcommand("bench", "recurrence vs Bareiss timing on the first k primes");
        bench->add_option("--kmax", kmax_, "largest k")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
        bench->add_option("--repeat", repeat_, "repeats per case")->check(CLI::PositiveNumber);
        bench->add_option("--timeout-ms", bareiss_timeout_ms_, "per-case Bareiss budget")
            ->check(CLI::PositiveNumber);

        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp& e) {
            out_ << app.help();
            return exit_ok;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << '\n';
            return exit_invalid;
        }

        const auto start = std::chrono::steady_clock::now();
        try {
            int code = exit_ok;
            if (*count)
                code = cmd_count();
            else if (*det)
                code = cmd_det();
            else if (*verify)
                code = cmd_verify();
            else if (*oeis)
                code = cmd_oeis();
            else if (*bench)
                code = cmd_bench();
            if (record_) {
                const double ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                emit(ms);
            }
            return code;
        } catch (const Error& e) {
            err_ << "error: " << e.what() << '\n';
            return exit_code_for(e.code());
        }
    }

private:
    struct Record {
        Json json;
        std::vector<std::string> csv_header;
        std::vector<std::vector<std::string>> csv_rows;
        bool always_time = false;
    };

    void emit(double ms)
    {
        if (format_ == "csv") {
            out_ << join(record_->csv_header, ',') << '\n';
            for (const auto& row : record_->csv_rows)
                out_ << join(row, ',') << '\n';
            return;
        }
        if (timing_ || record_->always_time)
            record_->json["timing_ms"] = format_ms(ms);
        out_ << record_->json.dump(2) << '\n';
    }

    static Json envelope(const std::string& command, Json inputs, Json results)
    {
        return Json{{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)},
                    {"timing_ms", nullptr}};
    }

    int cmd_count()
    {
        const auto system = moduli_.system();
        const auto counts = coverage_counts(system);
        const auto hist = exact_coverage_histogram(system);
        Record rec;
        rec.json = envelope("count", Json{{"moduli", moduli_json(system)}, {"coprime", system.coprime_mode()}},
                            [&] {
                                Json r = counts_json(counts);
                                r["histogram"] = decimal_array(hist.counts);
                                return r;
                            }());
        rec.csv_header = {"command", "moduli", "product", "available", "free", "occupied"};
        std::vector<std::string> row{"count", moduli_field(system), to_decimal(counts.product),
                                     to_decimal(counts.available), to_decimal(counts.free),
                                     to_decimal(counts.occupied)};
        for (std::size_t j = 0; j < hist.counts.size(); ++j) {
            rec.csv_header.push_back("j" + std::to_string(j));
            row.push_back(to_decimal(hist.counts[j]));
        }
        rec.csv_rows.push_back(std::move(row));
        record_ = std::move(rec);
        return exit_ok;
    }

    int cmd_det()
    {
        const auto system = moduli_.system();
        const bool available = which_ == "available";
        BigInt value;
        std::size_t dimension = available ? system.size() : system.size() + 1;
        if (method_ == "recurrence") {
            value = available ? available_det(system) : free_det(system);
        } else {
            const auto matrix = available ? build_available_matrix(system) : build_free_matrix(system);
            const BigInt raw = method_ == "bareiss" ? det_bareiss(matrix) : det_laplace(matrix);
            value = available ? raw : free_from_raw(raw, system.size());
        }
        Record rec;
        rec.json = envelope("det",
                            Json{{"moduli", moduli_json(system)},
                                 {"which", which_},
                                 {"method", method_},
                                 {"coprime", system.coprime_mode()}},
                            Json{{"value", to_decimal(value)},
                                 {"method", method_},
                                 {"dimension", std::to_string(dimension)}});
        rec.csv_header = {"command", "moduli", "which", "method", "dimension", "value"};
        rec.csv_rows.push_back(
            {"det", moduli_field(system), which_, method_, std::to_string(dimension), to_decimal(value)});
        record_ = std::move(rec);
        return exit_ok;
    }

    int cmd_verify()
    {
        const auto system = moduli_.system();
        SieveConfig config;
        config.threads = threads_;
        config.chunk_size = chunk_size_;
        if (!limit_.empty()) {
            const auto limit = parse_decimal(limit_);
            if (!limit || *limit < 1)
                throw Error(ErrorCode::InvalidArgument, "--limit must be a positive decimal integer");
            config.product_limit = *limit;
        }
        const auto report = residue_independence_check(system, trials_, seed_, config, exhaustive_);

        Json mismatch = nullptr;
        if (report.first_mismatch) {
            std::vector<std::string> residues;
            for (auto r : report.first_mismatch->assignment.residues())
                residues.push_back(std::to_string(r));
            mismatch = Json{{"residues", residues}, {"observed", counts_json(report.first_mismatch->observed)}};
        }
        Record rec;
        // threads and chunk size do not change the result, so they are not echoed
        rec.json = envelope("verify",
                            Json{{"moduli", moduli_json(system)},
                                 {"trials", exhaustive_ ? Json(nullptr) : Json(std::to_string(trials_))},
                                 {"seed", exhaustive_ ? Json(nullptr) : Json(std::to_string(seed_))},
                                 {"exhaustive", exhaustive_},
                                 {"limit", to_decimal(config.product_limit)},
                                 {"coprime", system.coprime_mode()}},
                            Json{{"expected", counts_json(report.expected)},
                                 {"tested", std::to_string(report.tested)},
                                 {"agreed", std::to_string(report.agreed)},
                                 {"verified", report.all_agree()},
                                 {"first_mismatch", mismatch}});
        rec.csv_header = {"command", "moduli", "tested", "agreed", "available", "free", "occupied", "verified"};
        rec.csv_rows.push_back({"verify", moduli_field(system), std::to_string(report.tested),
                                std::to_string(report.agreed), to_decimal(report.expected.available),
                                to_decimal(report.expected.free), to_decimal(report.expected.occupied),
                                report.all_agree() ? "true" : "false"});
        record_ = std::move(rec);
        return report.all_agree() ? exit_ok : exit_mismatch;
    }

    int cmd_oeis()
    {
        const auto table = sequence_ == a067549_name ? oeis_a067549(terms_) : oeis_a005867(terms_);
        std::optional<BfileComparison> cmp;
        if (!check_path_.empty()) {
            std::ifstream in(check_path_);
            if (!in)
                throw Error(ErrorCode::InvalidArgument, "cannot open b-file " + check_path_);
            cmp = compare_bfile(table, read_bfile(in));
        }
        const int code = cmp && !cmp->mismatched_indices.empty() ? exit_mismatch : exit_ok;

        if (bfile_) {
            write_bfile(out_, table);
            if (cmp) {
                err_ << "compared " << cmp->compared << " terms, " << cmp->mismatched_indices.size()
                     << " mismatched\n";
            }
            return code;
        }
        Json terms = Json::array();
        for (const auto& [index, value] : table.terms)
            terms.push_back(Json{{"index", std::to_string(index)}, {"value", to_decimal(value)}});
        Json results{{"name", table.name}, {"terms", std::move(terms)}};
        if (cmp) {
            std::vector<std::string> bad;
            for (auto i : cmp->mismatched_indices)
                bad.push_back(std::to_string(i));
            results["comparison"] = Json{{"path", check_path_},
                                         {"compared", std::to_string(cmp->compared)},
                                         {"mismatched_indices", bad}};
        }
        Record rec;
        rec.json = envelope("oeis", Json{{"sequence", sequence_}, {"terms", std::to_string(terms_)}},
                            std::move(results));
        rec.csv_header = {"index", "value"};
        for (const auto& [index, value] : table.terms)
            rec.csv_rows.push_back({std::to_string(index), to_decimal(value)});
        record_ = std::move(rec);
        return code;
    }

    int cmd_bench()
    {
        const auto rows = run_benchmark({kmax_, repeat_, bareiss_timeout_ms_});
        bool all_agree = true;
        Json arr = Json::array();
        Record rec;
        rec.always_time = true;
        rec.csv_header = {"k", "value", "recurrence_ms", "bareiss_ms", "status"};
        for (const auto& row : rows) {
            std::string status = !row.agree ? "skipped (timeout)" : (*row.agree ? "ok" : "MISMATCH");
            if (row.agree && !*row.agree)
                all_agree = false;
            arr.push_back(Json{{"k", std::to_string(row.k)},
                               {"value", to_decimal(row.value)},
                               {"recurrence_ms", format_ms(row.recurrence_ms)},
                               {"bareiss_ms", row.bareiss_ms ? Json(format_ms(*row.bareiss_ms)) : Json(nullptr)},
                               {"status", status}});
            rec.csv_rows.push_back({std::to_string(row.k), to_decimal(row.value), format_ms(row.recurrence_ms),
                                    row.bareiss_ms ? format_ms(*row.bareiss_ms) : "", status});
        }
        rec.json = envelope("bench",
                            Json{{"kmax", std::to_string(kmax_)},
                                 {"repeat", std::to_string(repeat_)},
                                 {"timeout_ms", format_ms(bareiss_timeout_ms_)}},
                            Json{{"rows", std::move(arr)}, {"all_agree", all_agree}});
        record_ = std::move(rec);
        return all_agree ? exit_ok : exit_mismatch;
    }

    std::ostream& out_;
    std::ostream& err_;
    std::optional<Record> record_;

    std::string format_ = "json";
    bool timing_ = false;
    ModuliOptions moduli_;
    std::string method_ = "recurrence";
    std::string which_ = "available";
    std::uint64_t trials_ = 20;
    std::uint64_t seed_ = 0;
    bool exhaustive_ = false;
    std::string limit_;
    unsigned threads_ = 0;
    std::uint64_t chunk_size_ = std::uint64_t{1} << 20;
    std::string sequence_;
    std::size_t terms_ = 10;
    bool bfile_ = false;
    std::string check_path_;
    std::size_t kmax_ = 12;
    std::size_t repeat_ = 10;
    double bareiss_timeout_ms_ = 250;
};

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    return Runner(out, err).run(args);
}

} // namespace covering::cli

// Command-line surface over the C API. Subcommands: count, maximize,
// density-table, verify, enumerate. The cache is a consistency log: every
// full-space maximize recomputes, cross-checks any stored record with the
// same identity, and appends when none exists, so hits never change printed
// bytes relative to a cold run.

#include "partpack.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void check(pp_status st) {
    if (st != PP_OK) throw std::runtime_error(pp_last_error());
}

struct OwnedString {
    char* text = nullptr;
    OwnedString() = default;
    OwnedString(const OwnedString&) = delete;
    OwnedString& operator=(const OwnedString&) = delete;
    ~OwnedString() { pp_string_free(text); }
    std::string str() const { return text == nullptr ? std::string() : text; }
};

template <typename T, void (*FreeFn)(T*)>
struct Owned {
    T* ptr = nullptr;
    Owned() = default;
    Owned(Owned&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    Owned& operator=(Owned&& other) noexcept {
        std::swap(ptr, other.ptr);
        return *this;
    }
    Owned(const Owned&) = delete;
    Owned& operator=(const Owned&) = delete;
    ~Owned() {
        if (ptr != nullptr) FreeFn(ptr);
    }
    T* get() const { return ptr; }
    T** out() { return &ptr; }
};

using WordPtr = Owned<pp_word, pp_word_free>;
using PatternsPtr = Owned<pp_patterns, pp_patterns_free>;
using ResultPtr = Owned<pp_result, pp_result_free>;
using TablePtr = Owned<pp_table, pp_table_free>;
using ReportPtr = Owned<pp_report, pp_report_free>;
using StreamPtr = Owned<pp_stream, pp_enum_close>;

int default_threads() {
    const char* env = std::getenv("PARTPACK_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    int parsed = 0;
    bool ok = false;
    try {
        parsed = std::stoi(env);
        ok = parsed >= 1;
    } catch (const std::exception&) {
    }
    if (ok) return parsed;
    std::cerr << "warning: PARTPACK_THREADS ignored: not a positive integer\n";
    return 1;
}

std::string default_cache() {
    const char* env = std::getenv("PARTPACK_CACHE");
    return env == nullptr ? std::string() : std::string(env);
}

// One value is a single pattern when the whole text reads as a canonical
// word; this keeps the comma form of a wide pattern intact. Anything else
// splits on commas into one pattern per piece.
std::vector<std::string> split_pattern_arg(const std::string& value) {
    {
        WordPtr probe;
        if (pp_word_parse(value.c_str(), probe.out()) == PP_OK &&
            pp_word_is_canonical(probe.get()))
            return {value};
    }
    std::vector<std::string> parts;
    std::stringstream ss(value);
    std::string piece;
    while (std::getline(ss, piece, ',')) parts.push_back(piece);
    if (parts.empty()) parts.push_back(value);
    return parts;
}

PatternsPtr build_patterns(const std::string& mode,
                           const std::vector<std::string>& args) {
    if (args.empty()) throw std::runtime_error("no pattern given");
    PatternsPtr set;
    check(pp_patterns_create(mode == "restricted" ? PP_MODE_RESTRICTED
                                                  : PP_MODE_UNRESTRICTED,
                             set.out()));
    for (const std::string& arg : args)
        for (const std::string& text : split_pattern_arg(arg))
            check(pp_patterns_add(set.get(), text.c_str()));
    return set;
}

std::string patterns_key(const pp_patterns* set) {
    OwnedString key;
    check(pp_patterns_key(set, &key.text));
    return key.str();
}

std::string rational_text(std::int64_t num, std::int64_t den) {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string decimal_text(std::int64_t num, std::int64_t den) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g",
                  static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

std::string timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Reads the line-delimited log, skipping corrupted lines with a warning.
// A record with the same identity must agree on mu; absence appends.
void cache_record(const std::string& path, const std::string& mode,
                  const std::string& key, std::int64_t n, std::int64_t k,
                  std::int64_t mu, const std::string& witness) {
    const std::string engine = pp_version();
    bool found = false;
    std::ifstream in(path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        bool matches = false;
        std::int64_t stored_mu = 0;
        try {
            const json rec = json::parse(line);
            matches = rec.at("mode").get<std::string>() == mode &&
                      rec.at("key").get<std::string>() == key &&
                      rec.at("n").get<std::int64_t>() == n &&
                      rec.at("k").get<std::int64_t>() == k &&
                      rec.at("engine").get<std::string>() == engine;
            if (matches) stored_mu = rec.at("mu").get<std::int64_t>();
        } catch (const std::exception&) {
            std::cerr << "warning: cache line " << lineno
                      << " is corrupted, skipping\n";
            continue;
        }
        if (!matches) continue;
        if (stored_mu != mu)
            throw std::runtime_error(
                "cache mismatch for " + key + " n=" + std::to_string(n) +
                " k=" + std::to_string(k) + ": stored mu " +
                std::to_string(stored_mu) + ", computed " + std::to_string(mu));
        found = true;
        break;
    }
    in.close();
    if (found) return;
    ordered_json rec;
    rec["mode"] = mode;
    rec["key"] = key;
    rec["n"] = n;
    rec["k"] = k;
    rec["mu"] = mu;
    rec["witness"] = witness;
    rec["engine"] = engine;
    rec["timestamp"] = timestamp_utc();
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path);
    out << rec.dump() << "\n";
}

struct CountArgs {
    std::vector<std::string> patterns;
    std::string target;
    std::string mode = "unrestricted";
    std::string format = "text";
    bool witnesses = false;
};

int run_count(const CountArgs& a) {
    PatternsPtr set = build_patterns(a.mode, a.patterns);
    WordPtr target;
    check(pp_word_parse(a.target.c_str(), target.out()));
    std::int64_t n = 0;
    check(pp_count(set.get(), target.get(), &n));

    int32_t* flat = nullptr;
    std::size_t tuples = 0;
    std::size_t m = 0;
    if (a.witnesses)
        check(pp_occurrences(set.get(), target.get(), &flat, &tuples, &m));

    if (a.format == "json") {
        OwnedString target_text;
        check(pp_word_format(target.get(), &target_text.text));
        ordered_json doc;
        doc["patterns"] = patterns_key(set.get());
        doc["mode"] = a.mode;
        doc["target"] = target_text.str();
        doc["count"] = n;
        if (a.witnesses) {
            json occ = json::array();
            for (std::size_t t = 0; t < tuples; ++t) {
                json row = json::array();
                for (std::size_t i = 0; i < m; ++i) row.push_back(flat[t * m + i]);
                occ.push_back(std::move(row));
            }
            doc["occurrences"] = std::move(occ);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "count " << n << "\n";
        if (a.witnesses) {
            for (std::size_t t = 0; t < tuples; ++t) {
                std::cout << "occurrence ";
                for (std::size_t i = 0; i < m; ++i) {
                    if (i > 0) std::cout << ',';
                    std::cout << flat[t * m + i];
                }
                std::cout << "\n";
            }
        }
    }
    pp_indices_free(flat);
    return 0;
}

pp_space parse_space(const std::string& name) {
    if (name == "all") return PP_SPACE_PARTITIONS;
    if (name == "words") return PP_SPACE_WORDS;
    if (name == "layered") return PP_SPACE_LAYERED;
    if (name == "two-block") return PP_SPACE_TWO_BLOCK;
    throw std::runtime_error("unknown space " + name);
}

struct MaximizeArgs {
    std::vector<std::string> patterns;
    std::string mode = "unrestricted";
    std::string space = "all";
    std::string format = "text";
    std::string cache = default_cache();
    std::int32_t n = 0;
    std::int32_t k = 0; // 0 means k = n
    int threads = default_threads();
    bool unsafe_large = false;
    bool witnesses = false;
};

int run_maximize(const MaximizeArgs& a) {
    PatternsPtr set = build_patterns(a.mode, a.patterns);
    pp_search_options opts;
    pp_search_options_init(&opts);
    opts.threads = a.threads;
    opts.unsafe_large = a.unsafe_large ? 1 : 0;
    const std::int32_t k = a.k == 0 ? a.n : a.k;

    ResultPtr r;
    check(pp_maximize(set.get(), a.n, k, parse_space(a.space), &opts, r.out()));

    const std::int64_t mu = pp_result_mu(r.get());
    std::int64_t num = 0;
    std::int64_t den = 1;
    check(pp_result_density(r.get(), &num, &den));
    const std::size_t shown = pp_result_witness_count(r.get());
    const std::int64_t total = pp_result_witness_total(r.get());
    const int agreement = pp_result_exhaustive_agreement(r.get());

    std::vector<std::string> witness_texts;
    witness_texts.reserve(shown);
    for (std::size_t i = 0; i < shown; ++i) {
        OwnedString w;
        check(pp_result_witness(r.get(), i, &w.text));
        witness_texts.push_back(w.str());
    }

    if (a.format == "json") {
        ordered_json doc;
        doc["patterns"] = patterns_key(set.get());
        doc["mode"] = a.mode;
        doc["n"] = a.n;
        doc["k"] = k;
        doc["space"] = pp_result_space(r.get());
        doc["mu"] = mu;
        doc["density"] = rational_text(num, den);
        doc["density_decimal"] = decimal_text(num, den);
        doc["examined"] = pp_result_examined(r.get());
        doc["witness_total"] = total;
        doc["witnesses"] = witness_texts;
        if (agreement != -1) doc["exhaustive_agreement"] = agreement == 1;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "mu " << mu << "\n";
        std::cout << "density " << rational_text(num, den) << " ("
                  << decimal_text(num, den) << ")\n";
        std::cout << "space " << pp_result_space(r.get()) << ", examined "
                  << pp_result_examined(r.get()) << "\n";
        if (total != static_cast<std::int64_t>(shown))
            std::cout << "witnesses " << total << " (showing " << shown << ")\n";
        else
            std::cout << "witnesses " << total << "\n";
        if (a.witnesses) {
            for (const std::string& w : witness_texts)
                std::cout << "witness " << w << "\n";
        } else if (!witness_texts.empty()) {
            std::cout << "witness " << witness_texts.front() << "\n";
        }
        if (agreement != -1)
            std::cout << "exhaustive cross-check "
                      << (agreement == 1 ? "agreed" : "DISAGREED") << "\n";
    }

    // Only the full space lands in the log: the record identity carries no
    // space field, and family maxima would collide with the true maximum.
    if (!a.cache.empty() && a.space == "all")
        cache_record(a.cache, a.mode, patterns_key(set.get()), a.n, k, mu,
                     witness_texts.empty() ? std::string() : witness_texts.front());
    return 0;
}

struct TableArgs {
    std::vector<std::string> patterns;
    std::string mode = "unrestricted";
    std::string format = "text";
    std::int32_t n_max = 8;
    std::int32_t k = 0; // 0 means k = n row by row
    int threads = default_threads();
    bool unsafe_large = false;
};

int run_density_table(const TableArgs& a) {
    PatternsPtr set = build_patterns(a.mode, a.patterns);
    pp_search_options opts;
    pp_search_options_init(&opts);
    opts.threads = a.threads;
    opts.unsafe_large = a.unsafe_large ? 1 : 0;
    opts.witness_limit = 1;

    TablePtr t;
    check(pp_density_table(set.get(), a.n_max, a.k, &opts, t.out()));

    pp_format fmt = PP_FORMAT_TEXT;
    if (a.format == "json") fmt = PP_FORMAT_JSON;
    if (a.format == "csv") fmt = PP_FORMAT_CSV;
    OwnedString doc;
    check(pp_table_render(t.get(), fmt, &doc.text));
    std::cout << doc.str();

    // Text and json renders carry the note themselves; csv keeps data rows
    // clean, so the note goes to stderr.
    const std::string note = pp_table_truncation_note(t.get());
    if (!note.empty() && a.format == "csv") std::cerr << note << "\n";
    return 0;
}

struct VerifyArgs {
    std::string format = "text";
    std::string report;
    std::int32_t n_cap = 8;
    std::int32_t k_cap = 4;
    int threads = default_threads();
    bool no_runtime = false;
};

int run_verify(const VerifyArgs& a) {
    ReportPtr rep;
    check(pp_verify(a.n_cap, a.k_cap, a.threads, rep.out()));
    OwnedString doc;
    check(pp_report_render(rep.get(),
                           a.format == "text" ? PP_FORMAT_TEXT : PP_FORMAT_JSON,
                           a.no_runtime ? 0 : 1, &doc.text));
    if (a.report.empty()) {
        std::cout << doc.str();
    } else {
        std::ofstream out(a.report, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open report file " + a.report);
        out << doc.str();
        if (!out) throw std::runtime_error("cannot write report file " + a.report);
        const std::size_t count = pp_report_count(rep.get());
        for (std::size_t i = 0; i < count; ++i)
            std::cout << pp_report_claim_id(rep.get(), i) << " "
                      << pp_report_claim_status(rep.get(), i) << "\n";
        std::cout << "report written to " << a.report << "\n";
    }
    return pp_report_exit_code(rep.get());
}

struct EnumArgs {
    std::int32_t n = 0;
    std::int32_t k = 0; // 0 means k = n
};

int run_enumerate(const EnumArgs& a) {
    StreamPtr s;
    check(pp_enum_open(a.n, a.k == 0 ? a.n : a.k, s.out()));
    for (;;) {
        pp_word* raw = nullptr;
        const int rc = pp_enum_next(s.get(), &raw);
        if (rc == 0) break;
        if (rc < 0) throw std::runtime_error(pp_last_error());
        WordPtr w;
        w.ptr = raw;
        OwnedString text;
        check(pp_word_format(w.get(), &text.text));
        std::cout << text.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern packing in set partitions"};
    app.require_subcommand(1);

    CountArgs count_args;
    CLI::App* cmd_count = app.add_subcommand("count", "count pattern copies in a target word");
    cmd_count->add_option("--patterns,--pattern", count_args.patterns,
                          "pattern, or comma-separated patterns; repeatable")
        ->required();
    cmd_count->add_option("--target", count_args.target, "target word")->required();
    cmd_count->add_option("--mode", count_args.mode, "counting mode")
        ->check(CLI::IsMember({"restricted", "unrestricted"}));
    cmd_count->add_option("--format", count_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_count->add_flag("--witnesses", count_args.witnesses,
                        "also print every matching index tuple");

    MaximizeArgs max_args;
    CLI::App* cmd_maximize = app.add_subcommand("maximize", "maximum copy count over a search family");
    cmd_maximize->add_option("--patterns,--pattern", max_args.patterns,
                             "pattern, or comma-separated patterns; repeatable")
        ->required();
    cmd_maximize->add_option("--n", max_args.n, "word length")->required();
    cmd_maximize->add_option("--k", max_args.k, "block budget, default n");
    cmd_maximize->add_option("--mode", max_args.mode, "counting mode")
        ->check(CLI::IsMember({"restricted", "unrestricted"}));
    cmd_maximize->add_option("--space", max_args.space, "search family")
        ->check(CLI::IsMember({"all", "words", "layered", "two-block"}));
    cmd_maximize->add_option("--format", max_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_maximize->add_option("--threads", max_args.threads,
                             "worker threads, default PARTPACK_THREADS or 1");
    cmd_maximize->add_option("--cache", max_args.cache,
                             "consistency log path, default PARTPACK_CACHE");
    cmd_maximize->add_flag("--unsafe-large", max_args.unsafe_large,
                           "lift the candidate-space safety cap");
    cmd_maximize->add_flag("--witnesses", max_args.witnesses,
                           "print every stored argmax word");

    TableArgs table_args;
    CLI::App* cmd_table = app.add_subcommand("density-table", "density row per word length");
    cmd_table->add_option("--patterns,--pattern", table_args.patterns,
                          "pattern, or comma-separated patterns; repeatable")
        ->required();
    cmd_table->add_option("--n-max", table_args.n_max, "last word length, default 8");
    cmd_table->add_option("--k", table_args.k, "fixed block budget; default k = n");
    cmd_table->add_option("--mode", table_args.mode, "counting mode")
        ->check(CLI::IsMember({"restricted", "unrestricted"}));
    cmd_table->add_option("--format", table_args.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_table->add_option("--threads", table_args.threads,
                          "worker threads, default PARTPACK_THREADS or 1");
    cmd_table->add_flag("--unsafe-large", table_args.unsafe_large,
                        "lift the candidate-space safety cap");

    VerifyArgs verify_args;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run every claim check and report");
    cmd_verify->add_option("--n-cap", verify_args.n_cap, "word-length cap, default 8");
    cmd_verify->add_option("--k-cap", verify_args.k_cap, "block-budget cap, default 4");
    cmd_verify->add_option("--threads", verify_args.threads,
                           "worker threads, default PARTPACK_THREADS or 1");
    cmd_verify->add_option("--report", verify_args.report,
                           "write the report here instead of stdout");
    cmd_verify->add_option("--format", verify_args.format, "report format, default text")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_flag("--no-runtime", verify_args.no_runtime,
                         "drop per-claim runtimes, the only run-to-run varying field");

    EnumArgs enum_args;
    CLI::App* cmd_enum = app.add_subcommand("enumerate", "stream canonical words, one per line");
    cmd_enum->add_option("--n", enum_args.n, "word length")->required();
    cmd_enum->add_option("--k", enum_args.k, "block budget, default n");

    try {
        app.parse(argc, argv);
        if (cmd_count->parsed()) return run_count(count_args);
        if (cmd_maximize->parsed()) return run_maximize(max_args);
        if (cmd_table->parsed()) return run_density_table(table_args);
        if (cmd_verify->parsed()) return run_verify(verify_args);
        if (cmd_enum->parsed()) return run_enumerate(enum_args);
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

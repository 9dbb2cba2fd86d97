// C surface. Opaque handles wrap the C++ values directly; every fallible
// entry point funnels through guarded(), which maps the exception hierarchy
// onto pp_status codes and parks the message in thread-local storage.

#include "partpack.h"

#include "count.hpp"
#include "enumerate.hpp"
#include "search.hpp"
#include "verify.hpp"
#include "word.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <utility>
#include <vector>

struct pp_word {
    partpack::Word value;
};

// Patterns accumulate here and validate at add time; each operation builds
// the real pattern set, which re-checks the whole-set invariants.
struct pp_patterns {
    partpack::Mode mode = partpack::Mode::unrestricted;
    std::vector<partpack::CanonicalWord> patterns;
};

struct pp_result {
    partpack::SearchResult value;
};

struct pp_table {
    partpack::DensityTable value;
};

struct pp_report {
    std::vector<partpack::ClaimReport> claims;
};

struct pp_stream {
    partpack::PartitionStream stream;
};

namespace {

thread_local std::string t_last_error;

pp_status fail(pp_status code, const std::string& message) {
    t_last_error = message;
    return code;
}

// ParseError precedes invalid_argument and CapExceeded precedes the generic
// handler because each derives from the later catch's type.
template <typename Fn>
pp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const partpack::ParseError& e) {
        return fail(PP_ERR_PARSE, e.what());
    } catch (const partpack::CapExceeded& e) {
        return fail(PP_ERR_CAP, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PP_ERR_NOMEM, "out of memory");
    } catch (const std::invalid_argument& e) {
        return fail(PP_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(PP_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

partpack::PatternSet build_set(const pp_patterns* set) {
    return partpack::PatternSet(set->patterns, set->mode);
}

partpack::SearchOptions build_options(const pp_search_options* opts) {
    partpack::SearchOptions o;
    if (opts != nullptr) {
        o.candidate_cap = opts->candidate_cap;
        o.unsafe_large = opts->unsafe_large != 0;
        o.threads = std::max(1, opts->threads);
        o.witness_limit = opts->witness_limit;
    }
    return o;
}

// The unrestricted count is defined on canonical targets only; rebuilding
// through the validating constructor turns a violation into PP_ERR_INVALID.
partpack::CanonicalWord require_canonical(const partpack::Word& w) {
    return partpack::CanonicalWord(
        partpack::Letters(w.letters().begin(), w.letters().end()));
}

bool fits_int64(const partpack::BigInt& v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

} // namespace

extern "C" {

const char* pp_version(void) { return "0.1.0"; }

const char* pp_last_error(void) { return t_last_error.c_str(); }

void pp_string_free(char* text) { delete[] text; }

void pp_indices_free(int32_t* indices) { delete[] indices; }

pp_status pp_word_parse(const char* text, pp_word** out) {
    if (text == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new pp_word{partpack::Word::parse(text)};
        return PP_OK;
    });
}

pp_status pp_word_from_letters(const int32_t* letters, size_t count, pp_word** out) {
    if (out == nullptr) return fail(PP_ERR_INVALID, "null argument");
    if (count == 0) return fail(PP_ERR_INVALID, "empty word");
    if (letters == nullptr) return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new pp_word{partpack::Word(partpack::Letters(letters, letters + count))};
        return PP_OK;
    });
}

void pp_word_free(pp_word* w) { delete w; }

size_t pp_word_length(const pp_word* w) {
    return w == nullptr ? 0 : w->value.size();
}

int32_t pp_word_max_letter(const pp_word* w) {
    return w == nullptr ? 0 : w->value.max_letter();
}

int pp_word_is_canonical(const pp_word* w) {
    return w != nullptr && partpack::validate_canonical(w->value.letters()) ? 1 : 0;
}

pp_status pp_word_format(const pp_word* w, char** out) {
    if (w == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = copy_string(w->value.str());
        return PP_OK;
    });
}

pp_status pp_word_letters(const pp_word* w, int32_t* buffer, size_t capacity,
                          size_t* written) {
    if (w == nullptr || written == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    const auto letters = w->value.letters();
    *written = letters.size();
    if (capacity < letters.size())
        return fail(PP_ERR_INVALID, "buffer too small: need " +
                                        std::to_string(letters.size()) + " slots");
    if (letters.size() > 0 && buffer == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    std::copy(letters.begin(), letters.end(), buffer);
    return PP_OK;
}

pp_status pp_word_canonize(const pp_word* w, pp_word** out) {
    if (w == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new pp_word{partpack::canonize(w->value).as_word()};
        return PP_OK;
    });
}

pp_status pp_word_alternating(int32_t n, pp_word** out) {
    if (out == nullptr) return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new pp_word{partpack::alternating(n).as_word()};
        return PP_OK;
    });
}

pp_status pp_patterns_create(pp_mode mode, pp_patterns** out) {
    if (out == nullptr) return fail(PP_ERR_INVALID, "null argument");
    if (mode != PP_MODE_RESTRICTED && mode != PP_MODE_UNRESTRICTED)
        return fail(PP_ERR_INVALID, "unknown counting mode");
    auto* set = new pp_patterns;
    set->mode = mode == PP_MODE_RESTRICTED ? partpack::Mode::restricted
                                           : partpack::Mode::unrestricted;
    *out = set;
    return PP_OK;
}

pp_status pp_patterns_add(pp_patterns* set, const char* pattern) {
    if (set == nullptr || pattern == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        partpack::CanonicalWord parsed = partpack::CanonicalWord::parse(pattern);
        if (parsed.size() == 0)
            throw std::invalid_argument("empty pattern");
        if (parsed.size() > 16)
            throw std::invalid_argument("pattern longer than 16 letters");
        if (!set->patterns.empty() &&
            parsed.size() != set->patterns.front().size())
            throw std::invalid_argument(
                "pattern length mismatch: set holds length " +
                std::to_string(set->patterns.front().size()));
        if (std::find(set->patterns.begin(), set->patterns.end(), parsed) !=
            set->patterns.end())
            throw std::invalid_argument("duplicate pattern " + parsed.str());
        set->patterns.push_back(std::move(parsed));
        return PP_OK;
    });
}

pp_status pp_patterns_key(const pp_patterns* set, char** out) {
    if (set == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = copy_string(build_set(set).str());
        return PP_OK;
    });
}

void pp_patterns_free(pp_patterns* set) { delete set; }

pp_status pp_count(const pp_patterns* set, const pp_word* target, int64_t* out) {
    if (set == nullptr || target == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        partpack::PatternSet s = build_set(set);
        if (s.mode() == partpack::Mode::unrestricted)
            *out = partpack::count_unrestricted(s, require_canonical(target->value));
        else
            *out = partpack::count_restricted(s, target->value);
        return PP_OK;
    });
}

pp_status pp_occurrences(const pp_patterns* set, const pp_word* target,
                         int32_t** indices, size_t* tuple_count,
                         size_t* tuple_length) {
    if (set == nullptr || target == nullptr || indices == nullptr ||
        tuple_count == nullptr || tuple_length == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        partpack::PatternSet s = build_set(set);
        if (s.mode() == partpack::Mode::unrestricted)
            require_canonical(target->value);
        std::vector<partpack::Occurrence> occs =
            partpack::occurrences(s, target->value.letters());
        const size_t m = static_cast<size_t>(s.pattern_length());
        *tuple_length = m;
        *tuple_count = occs.size();
        if (occs.empty()) {
            *indices = nullptr;
            return PP_OK;
        }
        int32_t* flat = new int32_t[occs.size() * m];
        for (size_t t = 0; t < occs.size(); ++t)
            std::copy(occs[t].begin(), occs[t].end(), flat + t * m);
        *indices = flat;
        return PP_OK;
    });
}

void pp_search_options_init(pp_search_options* opts) {
    if (opts == nullptr) return;
    opts->candidate_cap = 5'000'000;
    opts->unsafe_large = 0;
    opts->threads = 1;
    opts->witness_limit = 100;
}

pp_status pp_maximize(const pp_patterns* set, int32_t n, int32_t k, pp_space space,
                      const pp_search_options* opts, pp_result** out) {
    if (set == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        partpack::PatternSet s = build_set(set);
        partpack::SearchOptions o = build_options(opts);
        partpack::SearchResult r;
        switch (space) {
        case PP_SPACE_PARTITIONS:
            r = partpack::max_over_partitions(s, n, k, o);
            break;
        case PP_SPACE_WORDS:
            r = partpack::max_over_words(s, n, k, o);
            break;
        case PP_SPACE_LAYERED:
            r = partpack::max_layered(s, n, k, o);
            break;
        case PP_SPACE_TWO_BLOCK: {
            const bool lone_121 = s.mode() == partpack::Mode::unrestricted &&
                                  s.patterns().size() == 1 &&
                                  s.patterns().front().str() == "121";
            if (!lone_121)
                throw std::invalid_argument(
                    "two-block search applies to the single unrestricted pattern 121");
            r = partpack::max_two_block(n, o);
            break;
        }
        default:
            throw std::invalid_argument("unknown search space");
        }
        *out = new pp_result{std::move(r)};
        return PP_OK;
    });
}

int64_t pp_result_mu(const pp_result* r) {
    return r == nullptr ? 0 : r->value.mu;
}

pp_status pp_result_density(const pp_result* r, int64_t* numerator,
                            int64_t* denominator) {
    if (r == nullptr || numerator == nullptr || denominator == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    const partpack::BigInt num = boost::multiprecision::numerator(r->value.density);
    const partpack::BigInt den = boost::multiprecision::denominator(r->value.density);
    if (!fits_int64(num) || !fits_int64(den))
        return fail(PP_ERR_INVALID, "density does not fit int64");
    *numerator = num.convert_to<std::int64_t>();
    *denominator = den.convert_to<std::int64_t>();
    return PP_OK;
}

int64_t pp_result_examined(const pp_result* r) {
    return r == nullptr ? 0 : r->value.examined;
}

int64_t pp_result_witness_total(const pp_result* r) {
    return r == nullptr ? 0 : r->value.witness_total;
}

size_t pp_result_witness_count(const pp_result* r) {
    return r == nullptr ? 0 : r->value.witnesses.size();
}

pp_status pp_result_witness(const pp_result* r, size_t index, char** out) {
    if (r == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    if (index >= r->value.witnesses.size())
        return fail(PP_ERR_INVALID, "witness index out of range");
    return guarded([&] {
        *out = copy_string(r->value.witnesses[index].str());
        return PP_OK;
    });
}

const char* pp_result_space(const pp_result* r) {
    return r == nullptr ? "" : r->value.space.c_str();
}

int pp_result_exhaustive_agreement(const pp_result* r) {
    if (r == nullptr || !r->value.exhaustive_agreement.has_value()) return -1;
    return *r->value.exhaustive_agreement ? 1 : 0;
}

void pp_result_free(pp_result* r) { delete r; }

pp_status pp_density_table(const pp_patterns* set, int32_t n_max, int32_t fixed_k,
                           const pp_search_options* opts, pp_table** out) {
    if (set == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    if (fixed_k < 0)
        return fail(PP_ERR_INVALID, "fixed_k must be nonnegative");
    return guarded([&] {
        partpack::PatternSet s = build_set(set);
        partpack::SearchOptions o = build_options(opts);
        const partpack::KPolicy policy = fixed_k == 0 ? partpack::KPolicy::k_equals_n
                                                      : partpack::KPolicy::fixed_k;
        partpack::DensityTable t =
            partpack::density_sequence(s, n_max, policy, fixed_k, o);
        *out = new pp_table{std::move(t)};
        return PP_OK;
    });
}

size_t pp_table_rows(const pp_table* t) {
    return t == nullptr ? 0 : t->value.rows.size();
}

const char* pp_table_truncation_note(const pp_table* t) {
    return t == nullptr ? "" : t->value.truncation_note.c_str();
}

pp_status pp_table_render(const pp_table* t, pp_format format, char** out) {
    if (t == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        const char* name = nullptr;
        switch (format) {
        case PP_FORMAT_TEXT: name = "text"; break;
        case PP_FORMAT_JSON: name = "json"; break;
        case PP_FORMAT_CSV: name = "csv"; break;
        default: throw std::invalid_argument("unknown render format");
        }
        *out = copy_string(partpack::table_render(t->value, name));
        return PP_OK;
    });
}

void pp_table_free(pp_table* t) { delete t; }

pp_status pp_verify(int32_t n_cap, int32_t k_cap, int threads, pp_report** out) {
    if (out == nullptr) return fail(PP_ERR_INVALID, "null argument");
    if (n_cap < 0) return fail(PP_ERR_INVALID, "n_cap must be nonnegative");
    if (k_cap < 1) return fail(PP_ERR_INVALID, "k_cap must be at least 1");
    return guarded([&] {
        partpack::VerifyOptions o;
        o.n_cap = n_cap;
        o.k_cap = k_cap;
        o.threads = std::max(1, threads);
        *out = new pp_report{partpack::run_claims(o)};
        return PP_OK;
    });
}

size_t pp_report_count(const pp_report* rep) {
    return rep == nullptr ? 0 : rep->claims.size();
}

const char* pp_report_claim_id(const pp_report* rep, size_t index) {
    if (rep == nullptr || index >= rep->claims.size()) return "";
    return rep->claims[index].id.c_str();
}

const char* pp_report_claim_status(const pp_report* rep, size_t index) {
    if (rep == nullptr || index >= rep->claims.size()) return "";
    return partpack::claim_status_name(rep->claims[index].status);
}

pp_status pp_report_render(const pp_report* rep, pp_format format,
                           int include_runtime, char** out) {
    if (rep == nullptr || out == nullptr)
        return fail(PP_ERR_INVALID, "null argument");
    if (format != PP_FORMAT_TEXT && format != PP_FORMAT_JSON)
        return fail(PP_ERR_INVALID, "claims reports render as text or json");
    return guarded([&] {
        const partpack::ReportFormat f = format == PP_FORMAT_JSON
                                             ? partpack::ReportFormat::json
                                             : partpack::ReportFormat::text;
        *out = copy_string(
            partpack::report_render(rep->claims, f, include_runtime != 0));
        return PP_OK;
    });
}

int pp_report_exit_code(const pp_report* rep) {
    return rep == nullptr ? 1 : partpack::report_exit_code(rep->claims);
}

void pp_report_free(pp_report* rep) { delete rep; }

pp_status pp_enum_open(int32_t n, int32_t k_max, pp_stream** out) {
    if (out == nullptr) return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new pp_stream{partpack::PartitionStream(n, k_max)};
        return PP_OK;
    });
}

int pp_enum_next(pp_stream* s, pp_word** out) {
    if (s == nullptr || out == nullptr) {
        fail(PP_ERR_INVALID, "null argument");
        return -1;
    }
    try {
        if (!s->stream.next()) return 0;
        const auto letters = s->stream.letters();
        *out = new pp_word{
            partpack::Word(partpack::Letters(letters.begin(), letters.end()))};
        return 1;
    } catch (const std::exception& e) {
        fail(PP_ERR_INTERNAL, e.what());
        return -1;
    }
}

void pp_enum_close(pp_stream* s) { delete s; }

pp_status pp_space_size(int32_t n, int32_t k_max, int64_t* out) {
    if (out == nullptr) return fail(PP_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = partpack::space_size(n, k_max);
        return PP_OK;
    });
}

} // extern "C"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enumerate.hpp"
#include "oracle.hpp"
#include "search.hpp"

#include "json.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace partpack;

namespace {
PatternSet make_set(std::initializer_list<const char*> pats, Mode mode) {
    std::vector<CanonicalWord> v;
    for (const char* p : pats) v.push_back(CanonicalWord::parse(p));
    return PatternSet(std::move(v), mode);
}

std::vector<std::string> witness_strings(const SearchResult& r) {
    std::vector<std::string> out;
    for (const Word& w : r.witnesses) out.push_back(w.str());
    return out;
}
} // namespace

TEST_CASE("exhaustive maxima for the alternating-pattern landmark") {
    const std::int64_t expect[] = {1, 2, 5, 8, 14};
    const PatternSet s = make_set({"121"}, Mode::unrestricted);
    for (int n = 3; n <= 7; ++n) {
        const SearchResult r = max_over_partitions(s, n, n);
        CHECK(r.mu == expect[n - 3]);
        CHECK(r.examined == space_size(n, n));
        CHECK(r.space == "partitions");
        CHECK(r.density == BigRational(r.mu, binomial(n, 3)));
    }
}

TEST_CASE("the full argmax set is reported, sorted, at n=4") {
    const SearchResult r = max_over_partitions(make_set({"121"}, Mode::unrestricted), 4, 4);
    CHECK(r.mu == 2);
    CHECK(r.witness_total == 5);
    CHECK(witness_strings(r) ==
          std::vector<std::string>{"1121", "1211", "1212", "1221", "1231"});
}

TEST_CASE("witness truncation keeps the exact total and the lex-first words") {
    SearchOptions opts;
    opts.witness_limit = 2;
    const SearchResult r =
        max_over_partitions(make_set({"121"}, Mode::unrestricted), 4, 4, opts);
    CHECK(r.witness_total == 5);
    CHECK(witness_strings(r) == std::vector<std::string>{"1121", "1211"});
}

TEST_CASE("thread count never changes any reported field") {
    const PatternSet s = make_set({"121"}, Mode::unrestricted);
    SearchOptions one;
    one.threads = 1;
    SearchOptions five;
    five.threads = 5;
    const SearchResult a = max_over_partitions(s, 8, 8, one);
    const SearchResult b = max_over_partitions(s, 8, 8, five);
    CHECK(a.mu == b.mu);
    CHECK(a.witness_total == b.witness_total);
    CHECK(a.examined == b.examined);
    CHECK(witness_strings(a) == witness_strings(b));
    CHECK(a.density == b.density);
}

TEST_CASE("the candidate cap refuses large spaces unless lifted") {
    SearchOptions tiny;
    tiny.candidate_cap = 10;
    const PatternSet s = make_set({"121"}, Mode::unrestricted);
    CHECK_THROWS_AS(max_over_partitions(s, 6, 6, tiny), CapExceeded);
    tiny.unsafe_large = true;
    CHECK(max_over_partitions(s, 6, 6, tiny).mu == 8);
}

TEST_CASE("word search maximizes over the full alphabet box, restricted only") {
    const SearchResult r = max_over_words(make_set({"112"}, Mode::restricted), 6, 2);
    CHECK(r.mu == 12);
    CHECK(r.space == "words");
    CHECK(r.examined == 64);
    REQUIRE(!r.witnesses.empty());
    CHECK(r.witnesses.front().str() == "111122");
    CHECK_THROWS_AS(max_over_words(make_set({"112"}, Mode::unrestricted), 4, 2),
                    std::invalid_argument);
}

TEST_CASE("word maxima equal partition maxima in restricted mode") {
    // One grid point of the equality the verifier sweeps.
    const PatternSet s = make_set({"121"}, Mode::restricted);
    CHECK(max_over_words(s, 5, 2).mu == max_over_partitions(s, 5, 2).mu);
    CHECK(max_over_partitions(s, 5, 2).mu == 4);
}

TEST_CASE("word_to_partition lands on a canonical word that counts at least as much") {
    const PatternSet s = make_set({"121"}, Mode::restricted);
    CHECK(word_to_partition(Word::parse("2231"), s).str() == "1223");
    CHECK(word_to_partition(Word::parse("333"), s).str() == "111");
    for (const auto& w : oracle::words_over(4, 3)) {
        const Word word{Letters(w.begin(), w.end())};
        const CanonicalWord mapped = word_to_partition(word, s);
        CHECK(count_restricted(s, mapped.as_word()) >=
              count_restricted(s, word));
    }
}

TEST_CASE("layered search with the exhaustive cross-check") {
    const SearchResult decr = max_layered(make_set({"112"}, Mode::unrestricted), 6, 6);
    CHECK(decr.mu == 12);
    REQUIRE(!decr.witnesses.empty());
    CHECK(decr.witnesses.front().str() == "111122");
    REQUIRE(decr.exhaustive_agreement.has_value());
    CHECK(*decr.exhaustive_agreement);

    const SearchResult incr = max_layered(make_set({"1122"}, Mode::unrestricted), 5, 5);
    CHECK(incr.mu == 3);
    REQUIRE(incr.exhaustive_agreement.has_value());
    CHECK(*incr.exhaustive_agreement);

    CHECK_THROWS_AS(max_layered(make_set({"112"}, Mode::restricted), 5, 5),
                    std::invalid_argument);
}

TEST_CASE("two-block family maxima at the landmarks") {
    CHECK(max_two_block(3).mu == 1);
    const SearchResult six = max_two_block(6);
    CHECK(six.mu == 8);
    CHECK(six.space == "two-block");
    const auto ws = witness_strings(six);
    CHECK(std::find(ws.begin(), ws.end(), "121212") != ws.end());
    CHECK(max_two_block(9).mu == 30);
}

TEST_CASE("swap delta formula against recount") {
    const SwapDelta a = swap_adjacent_delta(CanonicalWord::parse("121"), 2);
    CHECK(a.predicted == -1);
    CHECK(a.actual == -1);
    CHECK(a.swapped == CanonicalWord::parse("112"));

    const SwapDelta b = swap_adjacent_delta(CanonicalWord::parse("1221"), 3);
    CHECK(b.predicted == 0);
    CHECK(b.actual == 0);
    CHECK(b.swapped == CanonicalWord::parse("1212"));

    // Every adjacent "21" in every short two-block word.
    for (int n = 3; n <= 7; ++n) {
        for (const auto& w : oracle::canonical_words(n)) {
            if (oracle::distinct_letters(w) != 2) continue;
            for (int i = 0; i + 1 < n; ++i) {
                if (!(w[i] == 2 && w[i + 1] == 1)) continue;
                const SwapDelta d = swap_adjacent_delta(
                    CanonicalWord(Letters(w.begin(), w.end())), i + 1);
                CHECK(d.predicted == d.actual);
            }
        }
    }

    CHECK_THROWS_AS(swap_adjacent_delta(CanonicalWord::parse("123"), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(swap_adjacent_delta(CanonicalWord::parse("1212"), 1),
                    std::invalid_argument); // letters there are "12"
}

TEST_CASE("diagonal density table for the alternating pattern") {
    const DensityTable t = density_sequence(make_set({"121"}, Mode::unrestricted), 6,
                                            KPolicy::k_equals_n);
    REQUIRE(t.rows.size() == 4);
    const char* deltas[] = {"1", "1/2", "1/2", "2/5"};
    const char* trends[] = {"start", "down", "flat", "down"};
    const std::int64_t mus[] = {1, 2, 5, 8};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rational_str(t.rows[i].delta) == deltas[i]);
        CHECK(t.rows[i].trend == trends[i]);
        CHECK(t.rows[i].mu == mus[i]);
        CHECK(t.rows[i].engine == "two-block");
    }
    CHECK(t.truncation_note.empty());
}

TEST_CASE("restricted diagonal goes through the exhaustive engine") {
    const DensityTable t = density_sequence(make_set({"112"}, Mode::restricted), 6,
                                            KPolicy::k_equals_n);
    REQUIRE(t.rows.size() == 4);
    const char* deltas[] = {"1", "3/4", "3/5", "3/5"};
    const char* trends[] = {"start", "down", "down", "flat"};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rational_str(t.rows[i].delta) == deltas[i]);
        CHECK(t.rows[i].trend == trends[i]);
        CHECK(t.rows[i].engine == "exhaustive");
    }
}

TEST_CASE("the cap truncates a table with a notice instead of failing") {
    SearchOptions tiny;
    tiny.candidate_cap = 10;
    const DensityTable t = density_sequence(make_set({"121"}, Mode::restricted), 8,
                                            KPolicy::k_equals_n, 0, tiny);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].n == 3);
    CHECK(!t.truncation_note.empty());
    CHECK(t.truncation_note.find("n=4") != std::string::npos);
}

TEST_CASE("csv render is byte-stable") {
    const DensityTable t = density_sequence(make_set({"121"}, Mode::unrestricted), 5,
                                            KPolicy::k_equals_n);
    const std::string expect =
        "n,k,mu,delta,delta_decimal,witness,trend,engine\n"
        "3,3,1,1,1,121,start,two-block\n"
        "4,4,2,1/2,0.5,1121,down,two-block\n"
        "5,5,5,1/2,0.5,12121,flat,two-block\n";
    CHECK(table_render(t, "csv") == expect);
}

TEST_CASE("json render carries the same rows") {
    const DensityTable t = density_sequence(make_set({"121"}, Mode::unrestricted), 5,
                                            KPolicy::k_equals_n);
    const auto doc = nlohmann::ordered_json::parse(table_render(t, "json"));
    CHECK(doc["patterns"] == "121");
    CHECK(doc["mode"] == "unrestricted");
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][2]["mu"] == 5);
    CHECK(doc["rows"][2]["delta"] == "1/2");
    CHECK(doc["rows"][2]["witness"] == "12121");
    CHECK(!doc.contains("truncation_note"));
}

TEST_CASE("text render and format validation") {
    const DensityTable t = density_sequence(make_set({"121"}, Mode::unrestricted), 4,
                                            KPolicy::k_equals_n);
    const std::string text = table_render(t, "text");
    CHECK(text.find("pattern 121, unrestricted mode") != std::string::npos);
    CHECK(text.find("two-block") != std::string::npos);
    CHECK_THROWS_AS(table_render(t, "yaml"), std::invalid_argument);
}

TEST_CASE("fixed-k table keeps k constant") {
    const DensityTable t = density_sequence(make_set({"121"}, Mode::restricted), 6,
                                            KPolicy::fixed_k, 2);
    for (const auto& row : t.rows) CHECK(row.k == 2);
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[2].mu == 4); // mu_r(121,5,2)
}

TEST_CASE("parallel scan folds in prefix order for any thread count") {
    auto visit = [](std::string& acc, std::span<const Letter> w) {
        if (acc.size() < 60) acc += format_letters(w) + ";";
    };
    auto merge = [](std::string& into, std::string&& part) {
        if (into.size() < 600) into += part;
    };
    const std::string one = parallel_partition_scan<std::string>(
        7, 7, 1, std::string(), visit, merge);
    const std::string four = parallel_partition_scan<std::string>(
        7, 7, 4, std::string(), visit, merge);
    CHECK(one == four);
    CHECK(one.substr(0, 8) == "1111111;");

    // Counting through the scan reproduces the space size.
    auto count_visit = [](std::int64_t& acc, std::span<const Letter>) { ++acc; };
    auto count_merge = [](std::int64_t& into, std::int64_t&& part) { into += part; };
    CHECK(parallel_partition_scan<std::int64_t>(7, 7, 3, 0, count_visit,
                                                count_merge) == 877);
}

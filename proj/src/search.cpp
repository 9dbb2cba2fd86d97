#include "search.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

namespace partpack {

namespace detail {

std::vector<CanonicalWord> scan_prefixes(std::int32_t n, std::int32_t k) {
    // Length-3 canonical prefixes partition Pi_{n,k}; below length 4 a single
    // full stream is cheaper than task bookkeeping.
    if (n < 4) return {CanonicalWord()};
    std::vector<CanonicalWord> out;
    PartitionStream stream(3, std::min(k, 3));
    while (stream.next()) out.push_back(stream.current());
    return out;
}

void run_tasks(std::size_t task_count, int threads,
               const std::function<void(std::size_t)>& run) {
    if (threads <= 1 || task_count <= 1) {
        for (std::size_t t = 0; t < task_count; ++t) run(t);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        while (true) {
            std::size_t t = cursor.fetch_add(1);
            if (t >= task_count) break;
            run(t);
        }
    };
    std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(threads), task_count);
    std::vector<std::thread> workers;
    workers.reserve(pool);
    for (std::size_t w = 0; w < pool; ++w) workers.emplace_back(worker);
    for (auto& w : workers) w.join();
}

} // namespace detail

namespace {

// Shared accumulator for maximum searches. Witness lists stay sorted because
// every stream yields in lexicographic order and tasks merge in prefix order.
struct MaxState {
    std::int64_t mu = -1;
    std::vector<Word> witnesses;
    std::int64_t witness_total = 0;
    std::int64_t examined = 0;
    std::size_t limit = 100;

    void offer(std::int64_t value, std::span<const Letter> letters) {
        ++examined;
        if (value < mu) return;
        if (value > mu) {
            mu = value;
            witnesses.clear();
            witness_total = 0;
        }
        ++witness_total;
        if (witnesses.size() < limit)
            witnesses.emplace_back(Letters(letters.begin(), letters.end()));
    }

    void merge(MaxState&& other) {
        examined += other.examined;
        if (other.mu < mu) return;
        if (other.mu > mu) {
            mu = other.mu;
            witnesses = std::move(other.witnesses);
            witness_total = other.witness_total;
            return;
        }
        witness_total += other.witness_total;
        for (auto& w : other.witnesses) {
            if (witnesses.size() >= limit) break;
            witnesses.push_back(std::move(w));
        }
    }
};

SearchResult finish(MaxState&& st, const PatternSet& s, std::int32_t n,
                    std::string space) {
    SearchResult r;
    r.mu = std::max<std::int64_t>(st.mu, 0);
    r.density = BigRational(r.mu, binomial(n, s.pattern_length()));
    r.witnesses = std::move(st.witnesses);
    r.witness_total = st.witness_total;
    r.space = std::move(space);
    r.examined = st.examined;
    return r;
}

void check_target_length(const PatternSet& s, std::int32_t n) {
    if (s.pattern_length() > n)
        throw std::invalid_argument("search: pattern length " +
                                    std::to_string(s.pattern_length()) +
                                    " exceeds target length " + std::to_string(n));
}

} // namespace

SearchResult max_over_partitions(const PatternSet& s, std::int32_t n, std::int32_t k,
                                 const SearchOptions& opts) {
    check_target_length(s, n);
    if (k < 1) throw std::invalid_argument("search: k must be >= 1");
    if (!opts.unsafe_large) {
        if (n > 20)
            throw CapExceeded("partition search: n > 20 requires the long-runtime override",
                              n, 20);
        std::int64_t size = space_size(n, k);
        if (size > opts.candidate_cap)
            throw CapExceeded("partition search: " + std::to_string(size) +
                                  " candidates exceed the cap of " +
                                  std::to_string(opts.candidate_cap),
                              size, opts.candidate_cap);
    }
    MaxState init;
    init.limit = opts.witness_limit;
    MaxState merged = parallel_partition_scan<MaxState>(
        n, k, opts.threads, std::move(init),
        [&s](MaxState& st, std::span<const Letter> letters) {
            st.offer(count_matching(s, letters), letters);
        },
        [](MaxState& into, MaxState&& from) { into.merge(std::move(from)); });
    return finish(std::move(merged), s, n, "partitions");
}

SearchResult max_over_words(const PatternSet& s, std::int32_t n, std::int32_t k,
                            const SearchOptions& opts) {
    if (s.mode() != Mode::restricted)
        throw std::invalid_argument(
            "word search is defined for restricted counting only");
    check_target_length(s, n);
    if (k < 1) throw std::invalid_argument("search: k must be >= 1");
    if (!opts.unsafe_large) {
        std::int64_t size = 1;
        for (std::int32_t i = 0; i < n; ++i) {
            size *= k;
            if (size > opts.candidate_cap)
                throw CapExceeded("word search: " + std::to_string(k) + "^" +
                                      std::to_string(n) + " candidates exceed the cap of " +
                                      std::to_string(opts.candidate_cap),
                                  size, opts.candidate_cap);
        }
    }
    MaxState st;
    st.limit = opts.witness_limit;
    WordStream stream(n, k);
    while (stream.next()) st.offer(count_matching(s, stream.letters()), stream.letters());
    return finish(std::move(st), s, n, "words");
}

CanonicalWord word_to_partition(const Word& w, const PatternSet& s) {
    if (s.mode() != Mode::restricted)
        throw std::invalid_argument("word_to_partition applies to restricted counting");
    Letters cur = flatten_letters(w.letters()); // smallest alphabet, order kept
    const std::size_t n = cur.size();
    while (true) {
        // First position whose letter overshoots the restricted-growth bound.
        Letter running_max = 0;
        std::size_t violation = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (cur[i] > running_max + 1) { violation = i; break; }
            running_max = std::max(running_max, cur[i]);
        }
        if (violation == n) break;
        // running_max now reflects the prefix before the violation. The
        // missing letter running_max+1 occurs later: letters form 1..max
        // after flattening and the overshoot is above running_max+1.
        Letter missing = running_max + 1;
        std::size_t src = violation;
        while (cur[src] != missing) ++src;
        std::rotate(cur.begin() + static_cast<std::ptrdiff_t>(violation),
                    cur.begin() + static_cast<std::ptrdiff_t>(src),
                    cur.begin() + static_cast<std::ptrdiff_t>(src) + 1);
    }
    return CanonicalWord(std::move(cur));
}

namespace {

SearchResult layered_search_incr(const PatternSet& s, std::int32_t n, std::int32_t k,
                                 const SearchOptions& opts) {
    MaxState st;
    st.limit = opts.witness_limit;
    for (const auto& w : layered_partitions(n, k))
        st.offer(count_matching(s, w.letters()), w.letters());
    return finish(std::move(st), s, n, "layered");
}

void mirror_result(SearchResult& r) {
    for (auto& w : r.witnesses) {
        CanonicalWord cw(Letters(w.letters().begin(), w.letters().end()));
        w = reverse_canonize(cw).as_word();
    }
    std::sort(r.witnesses.begin(), r.witnesses.end());
}

} // namespace

SearchResult max_layered(const PatternSet& s, std::int32_t n, std::int32_t k,
                         const SearchOptions& opts) {
    check_target_length(s, n);
    if (k < 1) throw std::invalid_argument("search: k must be >= 1");
    if (s.mode() != Mode::unrestricted)
        throw std::invalid_argument("layered search applies to unrestricted counting");
    if (s.patterns().size() != 1)
        throw std::invalid_argument("layered search applies to a single pattern");
    Layering cls = classify_layering(s.patterns().front());
    SearchResult r;
    if (cls == Layering::monotone_layered_incr) {
        r = layered_search_incr(s, n, k, opts);
    } else if (cls == Layering::monotone_layered_decr) {
        // nu(p, w) = nu(reverse(p), reverse(w)) under relabeling, so the
        // decreasing case is the increasing search on the mirrored pattern.
        PatternSet mirrored({reverse_canonize(s.patterns().front())}, Mode::unrestricted);
        r = layered_search_incr(mirrored, n, k, opts);
        mirror_result(r);
    } else {
        throw std::invalid_argument("layered search requires a monotone layered pattern, got " +
                                    std::string(layering_name(cls)));
    }
    if (n <= 20 && space_size(n, k) <= opts.layered_verify_cap) {
        SearchOptions verify_opts = opts;
        verify_opts.witness_limit = 1;
        SearchResult full = max_over_partitions(s, n, k, verify_opts);
        r.exhaustive_agreement = (full.mu == r.mu);
    }
    return r;
}

SearchResult max_two_block(std::int32_t n, const SearchOptions& opts) {
    if (n < 3) throw std::invalid_argument("two-block search requires n >= 3");
    PatternSet s({CanonicalWord::parse("121")}, Mode::unrestricted);
    MaxState st;
    st.limit = opts.witness_limit;
    for (const auto& w : two_block_candidates(n))
        st.offer(count_matching(s, w.letters()), w.letters());
    return finish(std::move(st), s, n, "two-block");
}

SwapDelta swap_adjacent_delta(const CanonicalWord& p, std::int32_t i) {
    auto letters = p.letters();
    const std::int32_t n = static_cast<std::int32_t>(letters.size());
    if (p.block_count() != 2)
        throw std::invalid_argument("swap delta applies to two-block words");
    if (i < 1 || i + 1 > n)
        throw std::invalid_argument("swap position out of range");
    if (letters[i - 1] != 2 || letters[i] != 1)
        throw std::invalid_argument("positions i, i+1 must hold letters 2, 1");
    std::int64_t a = 0, b = 0, c = 0, d = 0;
    for (std::int32_t j = 0; j < i - 1; ++j) (letters[j] == 1 ? a : b)++;
    for (std::int32_t j = i + 1; j < n; ++j) (letters[j] == 1 ? c : d)++;
    SwapDelta out;
    out.predicted = (b + c) - (a + d);
    Letters swapped(letters.begin(), letters.end());
    std::swap(swapped[i - 1], swapped[i]);
    out.swapped = canonize(swapped);
    PatternSet s({CanonicalWord::parse("121")}, Mode::unrestricted);
    out.actual = count_unrestricted(s, out.swapped) - count_unrestricted(s, p);
    return out;
}

namespace {

enum class Engine { exhaustive, layered, two_block };

Engine pick_engine(const PatternSet& s) {
    if (s.mode() != Mode::unrestricted || s.patterns().size() != 1)
        return Engine::exhaustive;
    const CanonicalWord& p = s.patterns().front();
    if (p == CanonicalWord::parse("121")) return Engine::two_block;
    Layering cls = classify_layering(p);
    if (cls == Layering::monotone_layered_incr || cls == Layering::monotone_layered_decr)
        return Engine::layered;
    return Engine::exhaustive;
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::exhaustive: return "exhaustive";
        case Engine::layered: return "layered";
        case Engine::two_block: return "two-block";
    }
    return "?";
}

} // namespace

DensityTable density_sequence(const PatternSet& s, std::int32_t n_max, KPolicy policy,
                              std::int32_t fixed_k, const SearchOptions& opts) {
    const std::int32_t m = s.pattern_length();
    if (n_max < m)
        throw std::invalid_argument("density sequence: n_max below the pattern length");
    if (policy == KPolicy::fixed_k && fixed_k < 1)
        throw std::invalid_argument("density sequence: fixed k must be >= 1");
    DensityTable table;
    table.patterns = s.str();
    table.mode = s.mode();
    Engine engine = pick_engine(s);
    BigRational prev;
    for (std::int32_t n = m; n <= n_max; ++n) {
        std::int32_t k = (policy == KPolicy::k_equals_n) ? n : fixed_k;
        SearchResult r;
        Engine row_engine = engine;
        // The structure-guided families assume enough block freedom; fall
        // back to the exhaustive scan when k pins the space below that.
        if (engine == Engine::two_block && k < 2) row_engine = Engine::exhaustive;
        try {
            switch (row_engine) {
                case Engine::two_block: r = max_two_block(n, opts); break;
                case Engine::layered: r = max_layered(s, n, k, opts); break;
                case Engine::exhaustive: r = max_over_partitions(s, n, k, opts); break;
            }
        } catch (const CapExceeded& e) {
            table.truncation_note = "stopped before n=" + std::to_string(n) + ": " + e.what();
            break;
        }
        DensityRow row;
        row.n = n;
        row.k = k;
        row.mu = r.mu;
        row.delta = r.density;
        if (!r.witnesses.empty()) row.witness = r.witnesses.front();
        row.engine = engine_name(row_engine);
        if (table.rows.empty()) row.trend = "start";
        else if (row.delta < prev) row.trend = "down";
        else if (row.delta > prev) row.trend = "up";
        else row.trend = "flat";
        prev = row.delta;
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

// CSV fields never contain quotes or newlines; only a comma (wide-alphabet
// witness rendering) forces quoting.
std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

std::string render_json(const DensityTable& t) {
    nlohmann::ordered_json doc;
    doc["patterns"] = t.patterns;
    doc["mode"] = mode_name(t.mode);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const DensityRow& row : t.rows) {
        nlohmann::ordered_json r;
        r["n"] = row.n;
        r["k"] = row.k;
        r["mu"] = row.mu;
        r["delta"] = rational_str(row.delta);
        r["delta_decimal"] = decimal_str(row.delta);
        r["witness"] = row.witness.str();
        r["trend"] = row.trend;
        r["engine"] = row.engine;
        doc["rows"].push_back(std::move(r));
    }
    if (!t.truncation_note.empty()) doc["truncation_note"] = t.truncation_note;
    return doc.dump(2) + "\n";
}

std::string render_csv(const DensityTable& t) {
    std::ostringstream out;
    out << "n,k,mu,delta,delta_decimal,witness,trend,engine\n";
    for (const DensityRow& row : t.rows) {
        out << row.n << ',' << row.k << ',' << row.mu << ','
            << rational_str(row.delta) << ',' << decimal_str(row.delta) << ','
            << csv_field(row.witness.str()) << ',' << row.trend << ','
            << row.engine << '\n';
    }
    return out.str();
}

std::string render_text(const DensityTable& t) {
    std::ostringstream out;
    out << "pattern " << t.patterns << ", " << mode_name(t.mode) << " mode\n";
    const std::array<const char*, 8> head = {"n", "k", "mu", "delta", "decimal",
                                             "witness", "trend", "engine"};
    std::vector<std::array<std::string, 8>> cells;
    cells.reserve(t.rows.size());
    for (const DensityRow& row : t.rows) {
        cells.push_back({std::to_string(row.n), std::to_string(row.k),
                         std::to_string(row.mu), rational_str(row.delta),
                         decimal_str(row.delta), row.witness.str(), row.trend,
                         row.engine});
    }
    std::array<std::size_t, 8> width{};
    for (std::size_t c = 0; c < 8; ++c) {
        width[c] = std::string(head[c]).size();
        for (const auto& r : cells) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::array<std::string, 8>& r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if (c > 0) out << "  ";
            if (c + 1 == 8) {
                out << r[c]; // last column carries no padding
            } else {
                out << std::setw(static_cast<int>(width[c])) << std::left << r[c];
            }
        }
        out << '\n';
    };
    std::array<std::string, 8> header;
    for (std::size_t c = 0; c < 8; ++c) header[c] = head[c];
    line(header);
    for (const auto& r : cells) line(r);
    if (!t.truncation_note.empty()) out << t.truncation_note << '\n';
    return out.str();
}

} // namespace

std::string table_render(const DensityTable& t, const std::string& format) {
    if (format == "json") return render_json(t);
    if (format == "csv") return render_csv(t);
    if (format == "text") return render_text(t);
    throw std::invalid_argument("unknown table format: " + format);
}

} // namespace partpack

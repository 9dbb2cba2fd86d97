#include "word.hpp"

#include <algorithm>
#include <charconv>

namespace partpack {

bool validate_canonical(std::span<const Letter> letters) {
    Letter running_max = 0;
    for (Letter x : letters) {
        if (x < 1 || x > running_max + 1) return false;
        running_max = std::max(running_max, x);
    }
    return true;
}

Letters canonize_letters(std::span<const Letter> letters) {
    Letters out;
    out.reserve(letters.size());
    std::vector<std::pair<Letter, Letter>> seen; // (original, relabeled), in first-appearance order
    for (Letter x : letters) {
        Letter mapped = 0;
        for (auto& [orig, lab] : seen) {
            if (orig == x) { mapped = lab; break; }
        }
        if (mapped == 0) {
            mapped = static_cast<Letter>(seen.size()) + 1;
            seen.emplace_back(x, mapped);
        }
        out.push_back(mapped);
    }
    return out;
}

Letters flatten_letters(std::span<const Letter> letters) {
    Letters values(letters.begin(), letters.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Letters out;
    out.reserve(letters.size());
    for (Letter x : letters) {
        auto it = std::lower_bound(values.begin(), values.end(), x);
        out.push_back(static_cast<Letter>(it - values.begin()) + 1);
    }
    return out;
}

bool is_order_isomorphic(std::span<const Letter> u, std::span<const Letter> w) {
    if (u.size() != w.size())
        throw std::invalid_argument("is_order_isomorphic: length mismatch");
    for (std::size_t j = 1; j < u.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto cu = u[i] <=> u[j];
            auto cw = w[i] <=> w[j];
            if (cu != cw) return false;
        }
    }
    return true;
}

std::string format_letters(std::span<const Letter> letters) {
    Letter mx = 0;
    for (Letter x : letters) mx = std::max(mx, x);
    std::string out;
    if (mx <= 9) {
        for (Letter x : letters) out += static_cast<char>('0' + x);
    } else {
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(letters[i]);
        }
    }
    return out;
}

Letters parse_letters(std::string_view text) {
    Letters out;
    if (text.empty()) return out;
    const bool comma_form = text.find(',') != std::string_view::npos;
    if (comma_form) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view tok = text.substr(pos, end - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 1)
                throw ParseError("expected a positive integer at position " +
                                     std::to_string(pos + 1),
                                 pos + 1);
            out.push_back(value);
            if (end == text.size()) break;
            pos = end + 1;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c < '1' || c > '9')
                throw ParseError(std::string("expected a digit 1-9, got '") + c +
                                     "' at position " + std::to_string(i + 1),
                                 i + 1);
            out.push_back(c - '0');
        }
    }
    return out;
}

Word::Word(Letters letters) : letters_(std::move(letters)) {
    for (Letter x : letters_)
        if (x < 1) throw std::invalid_argument("Word: letters must be >= 1");
}

Word Word::parse(std::string_view text) { return Word(parse_letters(text)); }

Letter Word::max_letter() const {
    Letter mx = 0;
    for (Letter x : letters_) mx = std::max(mx, x);
    return mx;
}

CanonicalWord::CanonicalWord(Letters letters) : letters_(std::move(letters)) {
    if (!validate_canonical(letters_))
        throw std::invalid_argument("not a canonical word: " + format_letters(letters_));
}

CanonicalWord CanonicalWord::parse(std::string_view text) {
    return CanonicalWord(parse_letters(text));
}

CanonicalWord CanonicalWord::unchecked(Letters letters) {
    CanonicalWord w;
    w.letters_ = std::move(letters);
    return w;
}

Letter CanonicalWord::block_count() const {
    // Canonical words attain their max at a first appearance, so the max is
    // the number of blocks.
    Letter mx = 0;
    for (Letter x : letters_) mx = std::max(mx, x);
    return mx;
}

CanonicalWord canonize(std::span<const Letter> letters) {
    return CanonicalWord::unchecked(canonize_letters(letters));
}

CanonicalWord canonize(const Word& w) { return canonize(w.letters()); }

CanonicalWord from_blocks(const Blocks& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("from_blocks: empty block");
        n += b.size();
    }
    Letters word(n, 0);
    Letter prev_min = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& b = blocks[bi];
        std::int32_t mn = *std::min_element(b.begin(), b.end());
        if (mn <= prev_min)
            throw std::invalid_argument("from_blocks: blocks not ordered by minima");
        prev_min = mn;
        for (std::int32_t pos : b) {
            if (pos < 1 || static_cast<std::size_t>(pos) > n)
                throw std::invalid_argument("from_blocks: element out of range");
            if (word[pos - 1] != 0)
                throw std::invalid_argument("from_blocks: element appears twice");
            word[pos - 1] = static_cast<Letter>(bi) + 1;
        }
    }
    // Every position covered and minima-ordered blocks give restricted growth
    // by construction, but validate anyway: this is a cold path.
    return CanonicalWord(std::move(word));
}

Blocks to_blocks(const CanonicalWord& w) {
    Blocks out(static_cast<std::size_t>(w.block_count()));
    auto letters = w.letters();
    for (std::size_t i = 0; i < letters.size(); ++i)
        out[letters[i] - 1].push_back(static_cast<std::int32_t>(i) + 1);
    return out;
}

CanonicalWord reverse_canonize(const CanonicalWord& w) {
    Letters rev(w.letters().rbegin(), w.letters().rend());
    return canonize(rev);
}

BlockStructure block_structure(const CanonicalWord& w) {
    BlockStructure sizes(static_cast<std::size_t>(w.block_count()), 0);
    for (Letter x : w.letters()) ++sizes[x - 1];
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

Layering classify_layering(const CanonicalWord& w) {
    auto letters = w.letters();
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letters[i] < letters[i - 1]) return Layering::not_layered;
    // Weakly increasing: block i occupies a contiguous run; sizes in block order.
    std::vector<std::int32_t> sizes(static_cast<std::size_t>(w.block_count()), 0);
    for (Letter x : letters) ++sizes[x - 1];
    bool incr = true, decr = true;
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] < sizes[i - 1]) incr = false;
        if (sizes[i] > sizes[i - 1]) decr = false;
    }
    if (incr) return Layering::monotone_layered_incr; // ties resolve to incr
    if (decr) return Layering::monotone_layered_decr;
    return Layering::layered_only;
}

const char* layering_name(Layering c) {
    switch (c) {
        case Layering::not_layered: return "not_layered";
        case Layering::layered_only: return "layered_only";
        case Layering::monotone_layered_incr: return "monotone_layered_incr";
        case Layering::monotone_layered_decr: return "monotone_layered_decr";
    }
    return "?";
}

CanonicalWord alternating(std::int32_t n) {
    if (n < 1) throw std::invalid_argument("alternating: n must be >= 1");
    Letters letters(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) letters[i] = (i % 2 == 0) ? 1 : 2;
    return CanonicalWord::unchecked(std::move(letters));
}

} // namespace partpack

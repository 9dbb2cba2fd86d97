#include "enumerate.hpp"

#include <algorithm>
#include <set>

namespace partpack {

PartitionStream::PartitionStream(std::int32_t n, std::int32_t k_max)
    : PartitionStream(n, k_max, CanonicalWord()) {}

PartitionStream::PartitionStream(std::int32_t n, std::int32_t k_max,
                                 const CanonicalWord& prefix)
    : n_(n), k_max_(k_max), prefix_len_(prefix.size()) {
    if (n < 0) throw std::invalid_argument("PartitionStream: n must be >= 0");
    if (k_max < 1) throw std::invalid_argument("PartitionStream: k_max must be >= 1");
    if (prefix_len_ > static_cast<std::size_t>(n))
        throw std::invalid_argument("PartitionStream: prefix longer than n");
    letters_.assign(prefix.letters().begin(), prefix.letters().end());
    for (Letter x : letters_)
        if (x > k_max) throw std::invalid_argument("PartitionStream: prefix exceeds k_max");
    letters_.resize(static_cast<std::size_t>(n));
    maxima_.resize(static_cast<std::size_t>(n));
    reset();
}

void PartitionStream::fill_suffix(std::size_t from) {
    for (std::size_t i = from; i < letters_.size(); ++i) {
        letters_[i] = 1;
        maxima_[i] = (i == 0) ? 1 : std::max(maxima_[i - 1], Letter(1));
    }
}

void PartitionStream::reset() {
    fresh_ = true;
    done_ = false;
    for (std::size_t i = 0; i < prefix_len_; ++i)
        maxima_[i] = (i == 0) ? letters_[i] : std::max(maxima_[i - 1], letters_[i]);
    fill_suffix(prefix_len_);
}

bool PartitionStream::next() {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        return true; // n == 0 yields exactly the empty word
    }
    // Rightmost free position that can still grow; positions inside the
    // prefix are pinned. Position 0 can never grow (its bound is 1).
    std::size_t i = letters_.size();
    while (i > prefix_len_) {
        --i;
        Letter bound = std::min<Letter>((i == 0 ? 0 : maxima_[i - 1]) + 1, k_max_);
        if (letters_[i] < bound) {
            ++letters_[i];
            maxima_[i] = (i == 0) ? letters_[i] : std::max(maxima_[i - 1], letters_[i]);
            fill_suffix(i + 1);
            return true;
        }
    }
    done_ = true;
    return false;
}

WordStream::WordStream(std::int32_t n, std::int32_t k) : n_(n), k_(k) {
    if (n < 0) throw std::invalid_argument("WordStream: n must be >= 0");
    if (k < 1) throw std::invalid_argument("WordStream: k must be >= 1");
    letters_.resize(static_cast<std::size_t>(n));
    reset();
}

void WordStream::reset() {
    fresh_ = true;
    done_ = false;
    std::fill(letters_.begin(), letters_.end(), 1);
}

bool WordStream::next() {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        return true;
    }
    std::size_t i = letters_.size();
    while (i > 0) {
        --i;
        if (letters_[i] < k_) {
            ++letters_[i];
            std::fill(letters_.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                      letters_.end(), 1);
            return true;
        }
    }
    done_ = true;
    return false;
}

CanonicalWord layered_from_structure(const BlockStructure& sizes, Direction dir) {
    BlockStructure s = sizes;
    for (std::int32_t x : s)
        if (x < 1) throw std::invalid_argument("layered_from_structure: sizes must be >= 1");
    std::sort(s.begin(), s.end());
    if (dir == Direction::decr) std::reverse(s.begin(), s.end());
    Letters letters;
    for (std::size_t b = 0; b < s.size(); ++b)
        letters.insert(letters.end(), static_cast<std::size_t>(s[b]),
                       static_cast<Letter>(b) + 1);
    return CanonicalWord::unchecked(std::move(letters));
}

namespace {

void integer_partitions_rec(std::int32_t remaining, std::int32_t max_part,
                            std::int32_t parts_left, std::vector<std::int32_t>& acc,
                            std::vector<std::vector<std::int32_t>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    if (parts_left == 0) return;
    for (std::int32_t p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        integer_partitions_rec(remaining - p, p, parts_left - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<CanonicalWord> layered_partitions(std::int32_t n, std::int32_t k_max) {
    if (n < 1) throw std::invalid_argument("layered_partitions: n must be >= 1");
    if (k_max < 1) throw std::invalid_argument("layered_partitions: k_max must be >= 1");
    std::vector<std::vector<std::int32_t>> parts;
    std::vector<std::int32_t> acc;
    integer_partitions_rec(n, n, k_max, acc, parts); // descending-lex order
    std::vector<CanonicalWord> out;
    out.reserve(parts.size());
    for (auto& p : parts) out.push_back(layered_from_structure(p, Direction::incr));
    return out;
}

CanonicalWord TwoBlockShape::realize() const {
    Letters letters;
    letters.reserve(static_cast<std::size_t>(length()));
    letters.insert(letters.end(), static_cast<std::size_t>(front_ones), 1);
    for (std::int32_t j = 0; j < alt_pairs; ++j) {
        letters.push_back(1);
        letters.push_back(2);
    }
    if (!alt_ends_in_two) letters.push_back(1);
    letters.insert(letters.end(), static_cast<std::size_t>(back_ones), 1);
    // A nonempty realization starts with 1 and uses letters {1,2}, so it is
    // already canonical; canonize anyway to honor the contract.
    return canonize(letters);
}

std::vector<CanonicalWord> two_block_candidates(std::int32_t n) {
    if (n < 1) throw std::invalid_argument("two_block_candidates: n must be >= 1");
    std::set<CanonicalWord> seen;
    for (std::int32_t j = 0; 2 * j <= n; ++j) {
        // Closing-1 variants: front + 2j + 1 + back = n.
        std::int32_t rem = n - 2 * j - 1;
        for (std::int32_t front = 0; front <= rem; ++front) {
            TwoBlockShape s{front, j, false, rem - front};
            seen.insert(s.realize());
        }
        // Ends-in-two variant: only with no trailing 1s.
        if (2 * j <= n) {
            TwoBlockShape s{n - 2 * j, j, true, 0};
            seen.insert(s.realize());
        }
    }
    return std::vector<CanonicalWord>(seen.begin(), seen.end());
}

std::int64_t space_size(std::int32_t n, std::int32_t k_max) {
    if (n < 0) throw std::invalid_argument("space_size: n must be >= 0");
    if (k_max < 1) throw std::invalid_argument("space_size: k_max must be >= 1");
    if (n > 20)
        throw CapExceeded("space_size: n > 20 exceeds the fixed-width range", n, 20);
    // ways[j] = completions when j blocks are in use; a next letter reuses one
    // of the j blocks or opens block j+1 while j < k_max.
    std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 2, 0);
    std::vector<std::int64_t> next(static_cast<std::size_t>(n) + 2, 0);
    std::fill(ways.begin(), ways.end(), 1); // zero letters remaining
    for (std::int32_t r = 1; r <= n; ++r) {
        for (std::int32_t j = 0; j <= n; ++j) {
            std::int64_t total = static_cast<std::int64_t>(j) * ways[static_cast<std::size_t>(j)];
            if (j < k_max) total += ways[static_cast<std::size_t>(j) + 1];
            next[static_cast<std::size_t>(j)] = total;
        }
        std::swap(ways, next);
    }
    return ways[0];
}

} // namespace partpack

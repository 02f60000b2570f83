#include "flagdress/subset.hpp"

#include "flagdress/errors.hpp"

#include <array>
#include <cctype>

namespace flagdress {

namespace {

constexpr auto kBinomials = [] {
    std::array<std::array<std::uint64_t, kMaxGroundSet + 2>, kMaxGroundSet + 2> c{};
    for (int n = 0; n <= kMaxGroundSet + 1; ++n) {
        c[n][0] = 1;
        for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
    return c;
}();

void check_ground(int n) {
    if (n < 0 || n > kMaxGroundSet)
        throw DomainError("ground set size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxGroundSet));
}

std::uint64_t full_mask(int n) { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }

} // namespace

Subset::Subset(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    check_ground(n);
    if ((mask & ~full_mask(n)) != 0) throw DomainError("subset mask has elements outside [" + std::to_string(n) + "]");
}

Subset Subset::of(int n, std::span<const int> elements) {
    check_ground(n);
    std::uint64_t mask = 0;
    for (int e : elements) {
        if (e < 1 || e > n) throw DomainError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
        std::uint64_t bit = 1ULL << (e - 1);
        if (mask & bit) throw DomainError("duplicate element " + std::to_string(e));
        mask |= bit;
    }
    return Subset(n, mask);
}

Subset Subset::full(int n) {
    check_ground(n);
    return Subset(n, full_mask(n));
}

std::vector<int> Subset::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
    return out;
}

Subset Subset::with(int e) const {
    if (e < 1 || e > n_) throw DomainError("element " + std::to_string(e) + " outside [" + std::to_string(n_) + "]");
    return Subset(n_, mask_ | (1ULL << (e - 1)));
}

Subset Subset::without(int e) const {
    if (e < 1 || e > n_) throw DomainError("element " + std::to_string(e) + " outside [" + std::to_string(n_) + "]");
    return Subset(n_, mask_ & ~(1ULL << (e - 1)));
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept {
    // The first differing element decides; the set holding the smaller one
    // comes first. If one set runs out, it is a prefix and comes first.
    std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return a.n_ <=> b.n_;
    std::uint64_t low = diff & (~diff + 1);
    bool a_has = (a.mask_ & low) != 0;
    // The set lacking `low` continues with a larger element, or ends. Ending
    // (no members above `low`) makes it a prefix of the other.
    const Subset& lacking = a_has ? b : a;
    bool lacking_ends = (lacking.mask_ & ~((low << 1) - 1)) == 0;
    bool a_first = a_has ? !lacking_ends : lacking_ends;
    return a_first ? std::strong_ordering::less : std::strong_ordering::greater;
}

Subset complement(const Subset& s) { return Subset(s.n(), ~s.mask() & full_mask(s.n())); }

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > kMaxGroundSet + 1) throw DomainError("binomial argument too large");
    return kBinomials[n][k];
}

std::vector<Subset> enumerate_subsets(int n, int d) {
    check_ground(n);
    if (d < 0 || d > n)
        throw DomainError("subset size " + std::to_string(d) + " outside 0.." + std::to_string(n));
    std::vector<Subset> out;
    out.reserve(binomial(n, d));
    std::vector<int> combo(d);
    for (int i = 0; i < d; ++i) combo[i] = i + 1;
    while (true) {
        out.push_back(Subset::of(n, std::span<const int>(combo)));
        int i = d - 1;
        while (i >= 0 && combo[i] == n - d + i + 1) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < d; ++j) combo[j] = combo[j - 1] + 1;
    }
    return out;
}

std::size_t lex_rank(const Subset& s) {
    const int n = s.n();
    const int d = s.size();
    std::size_t rank = 0;
    int prev = 0;
    int i = 1;
    for (int c : s.members()) {
        for (int j = prev + 1; j < c; ++j) rank += binomial(n - j, d - i);
        prev = c;
        ++i;
    }
    return rank;
}

Subset parse_subset(std::string_view text, int n) {
    check_ground(n);
    std::uint64_t mask = 0;
    auto add = [&](long value, std::size_t pos) {
        if (value < 1 || value > n)
            throw ParseError("element " + std::to_string(value) + " outside [" + std::to_string(n) + "] in subset '" +
                                 std::string(text) + "'",
                             static_cast<long>(pos));
        std::uint64_t bit = 1ULL << (value - 1);
        if (mask & bit)
            throw ParseError("duplicate element " + std::to_string(value) + " in subset '" + std::string(text) + "'",
                             static_cast<long>(pos));
        mask |= bit;
    };

    bool comma_form = text.find(',') != std::string_view::npos || n > 9;
    if (!comma_form) {
        for (std::size_t pos = 0; pos < text.size(); ++pos) {
            char ch = text[pos];
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError("unexpected character '" + std::string(1, ch) + "' in subset '" + std::string(text) + "'",
                                 static_cast<long>(pos));
            add(ch - '0', pos);
        }
        return Subset(n, mask);
    }

    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        std::size_t start = pos;
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000) break;
            ++pos;
        }
        if (pos == start)
            throw ParseError("expected element in subset '" + std::string(text) + "'", static_cast<long>(pos));
        add(value, start);
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw ParseError("expected ',' in subset '" + std::string(text) + "'", static_cast<long>(pos));
        ++pos;
        if (pos == text.size()) throw ParseError("trailing ',' in subset '" + std::string(text) + "'", static_cast<long>(pos));
    }
    return Subset(n, mask);
}

std::string format_subset(const Subset& s) {
    std::string out;
    bool digits = s.n() <= 9;
    for (int e : s.members()) {
        if (!digits && !out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

} // namespace flagdress

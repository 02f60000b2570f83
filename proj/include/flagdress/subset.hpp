#pragma once

// Subsets of the ground set [n] = {1,...,n}, stored as an n-bit mask
// (bit e-1 set iff e is a member). n is capped at 63.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagdress {

inline constexpr int kMaxGroundSet = 63;

class Subset {
public:
    Subset() = default;
    // Throws DomainError if n is out of range or mask has bits above n.
    Subset(int n, std::uint64_t mask);

    // Elements are 1-based; throws DomainError on duplicates or out-of-range.
    static Subset of(int n, std::span<const int> elements);
    static Subset of(int n, std::initializer_list<int> elements) {
        return of(n, std::span<const int>(elements.begin(), elements.size()));
    }
    static Subset full(int n);
    static Subset empty(int n) { return Subset(n, 0); }

    int n() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }
    int size() const noexcept { return __builtin_popcountll(mask_); }
    bool empty() const noexcept { return mask_ == 0; }
    bool contains(int e) const noexcept { return e >= 1 && e <= n_ && ((mask_ >> (e - 1)) & 1U); }

    // Sorted 1-based members.
    std::vector<int> members() const;

    Subset with(int e) const;
    Subset without(int e) const;
    bool is_subset_of(const Subset& other) const noexcept { return (mask_ & ~other.mask_) == 0; }

    friend Subset operator|(const Subset& a, const Subset& b) { return Subset(a.n_, a.mask_ | b.mask_); }
    friend Subset operator&(const Subset& a, const Subset& b) { return Subset(a.n_, a.mask_ & b.mask_); }
    // Set difference.
    friend Subset operator-(const Subset& a, const Subset& b) { return Subset(a.n_, a.mask_ & ~b.mask_); }

    friend bool operator==(const Subset& a, const Subset& b) noexcept = default;
    // Lexicographic order of the sorted member lists (a proper prefix sorts
    // first); ground-set size breaks ties.
    friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) noexcept;

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
};

// [n] \ S on the same ground set.
Subset complement(const Subset& s);

std::uint64_t binomial(int n, int k);

// All d-subsets of [n] in lexicographic order of their sorted member lists.
// Throws DomainError unless 0 <= d <= n.
std::vector<Subset> enumerate_subsets(int n, int d);

// Position of s in enumerate_subsets(s.n(), s.size()).
std::size_t lex_rank(const Subset& s);

// Digits ("134") when n <= 9, comma-separated ("1,10,12") otherwise. Comma
// form is also accepted for n <= 9. Throws ParseError carrying the offset of
// the offending character on malformed text, duplicates or out-of-range
// elements.
Subset parse_subset(std::string_view text, int n);
std::string format_subset(const Subset& s);

} // namespace flagdress

#include <doctest.h>

#include "flagdress/errors.hpp"
#include "flagdress/subset.hpp"

#include <set>
#include <string>

using namespace flagdress;

namespace {

std::string joined(const std::vector<Subset>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : " ") + format_subset(s);
    return out;
}

} // namespace

TEST_CASE("lexicographic enumeration") {
    CHECK(joined(enumerate_subsets(4, 2)) == "12 13 14 23 24 34");
    CHECK(joined(enumerate_subsets(3, 3)) == "123");
    const auto empty = enumerate_subsets(4, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
    CHECK_THROWS_AS(enumerate_subsets(4, 5), DomainError);
    CHECK_THROWS_AS(enumerate_subsets(4, -1), DomainError);
}

TEST_CASE("enumeration sizes, order and ranks for n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        for (int d = 0; d <= n; ++d) {
            const auto all = enumerate_subsets(n, d);
            REQUIRE(all.size() == binomial(n, d));
            std::set<std::uint64_t> masks;
            for (std::size_t i = 0; i < all.size(); ++i) {
                CHECK(all[i].size() == d);
                CHECK(lex_rank(all[i]) == i);
                masks.insert(all[i].mask());
                if (i > 0) CHECK(all[i - 1] < all[i]);
            }
            CHECK(masks.size() == all.size());
        }
    }
}

TEST_CASE("complement") {
    CHECK(format_subset(complement(Subset::of(4, {1, 2}))) == "34");
    CHECK(format_subset(complement(Subset::empty(3))) == "123");
    for (int n = 1; n <= 7; ++n)
        for (int d = 0; d <= n; ++d)
            for (const Subset& s : enumerate_subsets(n, d)) {
                CHECK(complement(complement(s)) == s);
                CHECK(s.size() + complement(s).size() == n);
            }
}

TEST_CASE("subset text format") {
    CHECK(parse_subset("24", 4) == Subset::of(4, {2, 4}));
    CHECK(parse_subset("1,10", 12) == Subset::of(12, {1, 10}));
    CHECK(parse_subset("3,1", 4) == Subset::of(4, {1, 3}));
    CHECK(format_subset(Subset::of(12, {1, 10, 12})) == "1,10,12");
    try {
        parse_subset("44", 4);
        FAIL("duplicate accepted");
    } catch (const ParseError& e) {
        CHECK(e.position() == 1);
    }
    CHECK_THROWS_AS(parse_subset("15", 4), ParseError);
    CHECK_THROWS_AS(parse_subset("1,,2", 12), ParseError);
    CHECK_THROWS_AS(parse_subset("0", 4), ParseError);
    CHECK_THROWS_AS(parse_subset("1a", 4), ParseError);
    for (int n : {4, 9, 10, 15})
        for (const Subset& s : enumerate_subsets(n, 3)) CHECK(parse_subset(format_subset(s), n) == s);
}

TEST_CASE("set operations") {
    const Subset a = Subset::of(5, {1, 2, 3});
    const Subset b = Subset::of(5, {2, 4});
    CHECK(format_subset(a | b) == "1234");
    CHECK(format_subset(a & b) == "2");
    CHECK(format_subset(a - b) == "13");
    CHECK(a.with(5).members() == std::vector<int>{1, 2, 3, 5});
    CHECK(a.without(2) == Subset::of(5, {1, 3}));
    CHECK(Subset::of(5, {2}).is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(Subset::of(5, {1, 2}) < Subset::of(5, {1, 2, 3})); // prefix first
    CHECK(Subset::of(5, {1, 3}) > Subset::of(5, {1, 2, 5}));
}

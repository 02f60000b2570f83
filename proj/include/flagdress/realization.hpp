#pragma once

// Realizable instances: matrices over Q[t, 1/t] whose maximal minors
// tropicalize (via the t-adic valuation) to tropical Plücker vectors, with
// nested row prefixes realizing flags V_1 ⊂ V_2 ⊂ ... .

#include "flagdress/errors.hpp"
#include "flagdress/rational.hpp"
#include "flagdress/subset.hpp"
#include "flagdress/tropical.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace flagdress {

// Laurent polynomial in t with exact rational coefficients. No zero
// coefficient is ever stored; the empty term map is the zero polynomial.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Rational constant); // NOLINT(google-explicit-constructor)
    template <std::integral I>
    LaurentPoly(I constant) : LaurentPoly(Rational(constant)) {} // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(Rational coeff, int exponent);
    // Grammar: signed sum of `c`, `c*t^k`, `t^k` or `t` terms with integer or
    // a/b coefficients and integer exponents, e.g. "1/2 - 3*t^-1 + t^2".
    // Whitespace is insignificant. Like exponents are combined.
    static LaurentPoly parse(std::string_view text);

    // Canonical text form, increasing exponents ("3*t^-1 + 1", "1 - t").
    std::string str() const;

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    Rational coeff(int exponent) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(int exponent, const Rational& coeff);
    std::map<int, Rational> terms_;
};

// Smallest exponent with a nonzero coefficient; +inf for zero.
ExtRational valuation(const LaurentPoly& f);

// a / b, which must divide exactly in Q[t, 1/t]. Throws DomainError on a
// zero divisor or a nonzero remainder.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);
    PolyMatrix(std::vector<std::vector<LaurentPoly>> rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    LaurentPoly& operator()(int r, int c) { return entries_.at(static_cast<std::size_t>(r) * cols_ + c); }
    const LaurentPoly& operator()(int r, int c) const { return entries_.at(static_cast<std::size_t>(r) * cols_ + c); }

    // Rows [0, rows) and the given 1-based columns, in order.
    PolyMatrix submatrix(int rows, const std::vector<int>& columns) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<LaurentPoly> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination over Q[t, 1/t].
LaurentPoly determinant(const PolyMatrix& m);

// Thrown when a maximal minor vanishes; `zero_minors` lists the column sets.
class ZeroMinorError : public PreconditionError {
public:
    explicit ZeroMinorError(std::vector<Subset> zero_minors);
    const std::vector<Subset>& zero_minors() const noexcept { return zero_minors_; }

private:
    std::vector<Subset> zero_minors_;
};

// w(J) = valuation of the minor on column set J for the first `rows` rows
// (all rows when rows < 0). Throws ZeroMinorError if any minor vanishes.
PluckerVector tropicalize_minors(const PolyMatrix& m, int rows = -1);

struct FlagMatrix {
    int n = 0;
    std::vector<int> dims;  // strictly increasing; the first dims[i] rows span layer i
    PolyMatrix matrix;      // dims.back() x n
    int resamples = 0;      // generator attempts rejected before this one

    // Throws DomainError on inconsistent sizes.
    void validate() const;
};

// Tropicalizes every prefix block.
FlagInstance tropicalize_flag(const FlagMatrix& fm);

// Seeded random flag matrix: every entry is sum_{e=0..2} c_e t^e with c_e
// uniform in [-coeff_bound, coeff_bound]. Resamples the whole matrix until
// every prefix block has only nonzero maximal minors.
FlagMatrix random_flag_matrix(int n, const std::vector<int>& dims, std::uint64_t seed, int coeff_bound = 3,
                              int budget = 1000);

// Tropical minors of a real matrix: w(J) = min over bijections rows -> J of
// the summed entries, for each prefix block. These are the valuations of
// the minors of (c_ij t^{a_ij}) for generic coefficients c_ij, so the
// resulting flag is realizable.
FlagInstance tropical_minor_flag(const QMatrix& entries, const std::vector<int>& dims);

} // namespace flagdress

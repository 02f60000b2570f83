#pragma once

// Exact rationals and the extended value set Q ∪ {+inf}.
//
// Rational keeps a reduced int64 fraction while the value fits and falls back
// to a GMP mpq when it does not, so the common small-entry case used by the
// LP and elimination kernels never touches the heap.

#include <Eigen/Core>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>

namespace flagdress {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline int ctz128(u128 x) {
    auto lo = static_cast<std::uint64_t>(x);
    return lo ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

inline u128 gcd128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0)
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    int shift = ctz128(a | b);
    a >>= ctz128(a);
    do {
        b >>= ctz128(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

} // namespace detail

class Rational {
public:
    Rational() noexcept = default;

    template <std::integral I>
    Rational(I value) { // NOLINT(google-explicit-constructor): integers are rationals
        if constexpr (std::is_signed_v<I>) {
            if (static_cast<long long>(value) == std::numeric_limits<std::int64_t>::min())
                big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(value)));
            else
                num_ = static_cast<std::int64_t>(value);
        } else {
            if (static_cast<unsigned long long>(value) > static_cast<unsigned long long>(detail::kSmallMax))
                big_ = std::make_unique<mpq_class>(mpz_class(static_cast<unsigned long>(value)));
            else
                num_ = static_cast<std::int64_t>(value);
        }
    }

    // num/den, reduced on construction. den == 0 throws DomainError.
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other)
        : num_(other.num_), den_(other.den_),
          big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other) {
        if (this != &other) {
            num_ = other.num_;
            den_ = other.den_;
            big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Accepts "[-+]digits" or "[-+]digits/digits"; surrounding whitespace is
    // ignored. Throws ParseError with the offending offset.
    static Rational parse(std::string_view text);

    // Reduced "a/b", or bare "a" for integers.
    std::string str() const;
    mpq_class to_mpq() const;
    double to_double() const;

    int sign() const noexcept {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }
    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_integer() const noexcept {
        return big_ ? big_->get_den() == 1 : den_ == 1;
    }
    bool is_small() const noexcept { return !big_; }

    Rational operator-() const {
        if (!big_) {
            Rational r;
            r.num_ = -num_;
            r.den_ = den_;
            return r;
        }
        return Rational(mpq_class(-*big_));
    }

    Rational& operator+=(const Rational& o) {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t r;
                if (!__builtin_add_overflow(num_, o.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
                    num_ = r;
                    return *this;
                }
            }
            assign_reduced(static_cast<detail::i128>(num_) * o.den_ + static_cast<detail::i128>(o.num_) * den_,
                           static_cast<detail::i128>(den_) * o.den_);
            return *this;
        }
        assign_big(to_mpq() + o.to_mpq());
        return *this;
    }

    Rational& operator-=(const Rational& o) {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t r;
                if (!__builtin_sub_overflow(num_, o.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
                    num_ = r;
                    return *this;
                }
            }
            assign_reduced(static_cast<detail::i128>(num_) * o.den_ - static_cast<detail::i128>(o.num_) * den_,
                           static_cast<detail::i128>(den_) * o.den_);
            return *this;
        }
        assign_big(to_mpq() - o.to_mpq());
        return *this;
    }

    Rational& operator*=(const Rational& o) {
        if (!big_ && !o.big_) {
            if (den_ == 1 && o.den_ == 1) {
                std::int64_t r;
                if (!__builtin_mul_overflow(num_, o.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
                    num_ = r;
                    return *this;
                }
            }
            assign_reduced(static_cast<detail::i128>(num_) * o.num_, static_cast<detail::i128>(den_) * o.den_);
            return *this;
        }
        assign_big(to_mpq() * o.to_mpq());
        return *this;
    }

    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false; // big values never fit the small form
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == b.den_) return a.num_ <=> b.num_;
            auto lhs = static_cast<detail::i128>(a.num_) * b.den_;
            auto rhs = static_cast<detail::i128>(b.num_) * a.den_;
            return lhs < rhs ? std::strong_ordering::less
                 : lhs > rhs ? std::strong_ordering::greater
                             : std::strong_ordering::equal;
        }
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    void assign_reduced(detail::i128 num, detail::i128 den);
    void assign_big(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// A Rational or +inf. +inf absorbs addition and compares above every Rational.
class ExtRational {
public:
    ExtRational() = default;
    ExtRational(Rational value) : value_(std::move(value)) {} // NOLINT(google-explicit-constructor)
    template <std::integral I>
    ExtRational(I value) : value_(value) {} // NOLINT(google-explicit-constructor)

    static ExtRational infinity() {
        ExtRational e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    // Throws DomainError on +inf.
    const Rational& value() const;

    // "inf" or the rational's text form.
    std::string str() const { return infinite_ ? "inf" : value_.str(); }
    // Inverse of str().
    static ExtRational parse(std::string_view text);

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtRational(a.value_ + b.value_);
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

private:
    Rational value_;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

inline const ExtRational& min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

} // namespace flagdress

namespace Eigen {

template <>
struct NumTraits<flagdress::Rational> : GenericNumTraits<flagdress::Rational> {
    using Real = flagdress::Rational;
    using NonInteger = flagdress::Rational;
    using Nested = flagdress::Rational;
    using Literal = flagdress::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 16
    };

    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

} // namespace Eigen

namespace flagdress {

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVector = Vec<Rational>;
using QMatrix = Mat<Rational>;

} // namespace flagdress

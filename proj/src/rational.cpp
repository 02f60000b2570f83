#include "flagdress/rational.hpp"

#include "flagdress/errors.hpp"

#include <cctype>
#include <ostream>

namespace flagdress {

namespace {

mpz_class to_mpz(detail::i128 v) {
    bool negative = v < 0;
    detail::u128 mag = negative ? -static_cast<detail::u128>(v) : static_cast<detail::u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class r = (hi << 64) + lo;
    return negative ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z) {
    return z.fits_slong_p() && z != mpz_class(std::numeric_limits<long>::min());
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    assign_reduced(num, den);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
}

void Rational::assign_reduced(detail::i128 num, detail::i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        big_.reset();
        num_ = 0;
        den_ = 1;
        return;
    }
    detail::u128 mag = num < 0 ? -static_cast<detail::u128>(num) : static_cast<detail::u128>(num);
    detail::u128 g = detail::gcd128(mag, static_cast<detail::u128>(den));
    if (g > 1) {
        num /= static_cast<detail::i128>(g);
        den /= static_cast<detail::i128>(g);
    }
    if (num <= detail::kSmallMax && num >= -detail::kSmallMax && den <= detail::kSmallMax) {
        big_.reset();
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

void Rational::assign_big(mpq_class q) {
    if (fits_small(q.get_num()) && q.get_den().fits_slong_p()) {
        big_.reset();
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        return;
    }
    if (big_)
        *big_ = std::move(q);
    else
        big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (!big_ && !o.big_) {
        assign_reduced(static_cast<detail::i128>(num_) * o.den_, static_cast<detail::i128>(den_) * o.num_);
        return *this;
    }
    assign_big(to_mpq() / o.to_mpq());
    return *this;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
        if (pos == start) throw ParseError("expected digits in rational '" + std::string(text) + "'", static_cast<long>(pos));
    };

    skip_ws();
    std::string num;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') num += '-';
        ++pos;
    }
    read_digits(num);
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den.clear();
        read_digits(den);
    }
    skip_ws();
    if (pos != text.size())
        throw ParseError("unexpected character in rational '" + std::string(text) + "'", static_cast<long>(pos));

    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'", static_cast<long>(pos));
    mpq_class q{mpz_class(num), d};
    q.canonicalize();
    Rational r;
    r.assign_big(std::move(q));
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& ExtRational::value() const {
    if (infinite_) throw DomainError("value() of +inf");
    return value_;
}

ExtRational ExtRational::parse(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first != std::string_view::npos) {
        auto core = text.substr(first, last - first + 1);
        if (core == "inf" || core == "+inf") return infinity();
    }
    return ExtRational(Rational::parse(text));
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

} // namespace flagdress

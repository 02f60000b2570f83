#include "flagdress/realization.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace flagdress {

LaurentPoly::LaurentPoly(Rational constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Rational coeff, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

ExtRational valuation(const LaurentPoly& f) {
    if (f.is_zero()) return ExtRational::infinity();
    return ExtRational(Rational(f.terms().begin()->first));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return {};
    // Shift both to ordinary polynomials with nonzero constant term and do
    // long division in Q[t].
    const int va = a.terms().begin()->first;
    const int vb = b.terms().begin()->first;
    const int da = a.terms().rbegin()->first - va;
    const int db = b.terms().rbegin()->first - vb;
    if (da < db) throw DomainError("inexact polynomial division");
    std::vector<Rational> rem(da + 1), den(db + 1);
    for (const auto& [e, c] : a.terms()) rem[e - va] = c;
    for (const auto& [e, c] : b.terms()) den[e - vb] = c;
    LaurentPoly q;
    for (int k = da - db; k >= 0; --k) {
        const Rational& top = rem[k + db];
        if (top.is_zero()) continue;
        Rational f = top / den[db];
        for (int j = 0; j <= db; ++j) rem[k + j] -= f * den[j];
        q = q + LaurentPoly::monomial(f, k + va - vb);
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    // Work on the whitespace-free text but report positions in the original.
    std::string s;
    std::vector<long> where;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
        s += text[i];
        where.push_back(static_cast<long>(i));
    }
    auto fail = [&](const std::string& msg, std::size_t pos) -> ParseError {
        long at = pos < where.size() ? where[pos] : static_cast<long>(text.size());
        return ParseError(msg + " in polynomial '" + std::string(text) + "'", at);
    };
    if (s.empty()) throw fail("empty polynomial", 0);

    std::size_t pos = 0;
    auto read_uint = [&](std::string& out) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out += s[pos++];
        return pos > start;
    };

    LaurentPoly result;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw fail("expected '+' or '-'", pos);
        }
        first = false;

        Rational coeff(1);
        int exponent = 0;
        bool has_coeff = false;
        std::string num;
        if (read_uint(num)) {
            has_coeff = true;
            std::string den = "1";
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den.clear();
                if (!read_uint(den)) throw fail("expected denominator", pos);
            }
            coeff = Rational::parse(num + "/" + den);
        }
        bool has_t = false;
        if (has_coeff && pos < s.size() && s[pos] == '*') {
            ++pos;
            if (pos >= s.size() || s[pos] != 't') throw fail("expected 't' after '*'", pos);
        }
        if (pos < s.size() && s[pos] == 't') {
            has_t = true;
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                bool neg_exp = false;
                if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                    neg_exp = s[pos] == '-';
                    ++pos;
                }
                std::string digits;
                std::size_t exp_pos = pos;
                if (!read_uint(digits)) throw fail("expected integer exponent", pos);
                if (digits.size() > 6) throw fail("exponent out of range", exp_pos);
                exponent = std::stoi(digits) * (neg_exp ? -1 : 1);
            }
        }
        if (!has_coeff && !has_t) throw fail("expected a term", pos);
        if (negative) coeff = -coeff;
        result.add_term(exponent, coeff);
    }
    return result;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) out << "-";
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            out << mag.str();
            continue;
        }
        if (mag != Rational(1)) out << mag.str() << "*";
        out << "t";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    entries_.resize(static_cast<std::size_t>(rows) * cols);
}

PolyMatrix::PolyMatrix(std::vector<std::vector<LaurentPoly>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw DomainError("ragged polynomial matrix");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

PolyMatrix PolyMatrix::submatrix(int rows, const std::vector<int>& columns) const {
    if (rows > rows_) throw DomainError("submatrix row count exceeds matrix");
    PolyMatrix out(rows, static_cast<int>(columns.size()));
    for (int r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c] < 1 || columns[c] > cols_) throw DomainError("submatrix column out of range");
            out(r, static_cast<int>(c)) = (*this)(r, columns[c] - 1);
        }
    return out;
}

LaurentPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return LaurentPoly(1);
    PolyMatrix a = m;
    LaurentPoly previous(1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k).is_zero()) {
            int swap_row = k + 1;
            while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return {};
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = divide_exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), previous);
            a(i, k) = LaurentPoly();
        }
        previous = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

ZeroMinorError::ZeroMinorError(std::vector<Subset> zero_minors)
    : PreconditionError([&] {
          std::string msg = "zero maximal minor(s) on column set(s)";
          for (const auto& s : zero_minors) msg += " {" + format_subset(s) + "}";
          return msg;
      }()),
      zero_minors_(std::move(zero_minors)) {}

PluckerVector tropicalize_minors(const PolyMatrix& m, int rows) {
    const int d = rows < 0 ? m.rows() : rows;
    const int n = m.cols();
    if (d < 1 || d > m.rows() || d > n)
        throw DomainError("cannot take " + std::to_string(d) + "x" + std::to_string(d) + " minors of a " +
                          std::to_string(m.rows()) + "x" + std::to_string(n) + " matrix");
    std::vector<Subset> zeros;
    std::vector<Rational> weights;
    for (const Subset& j : enumerate_subsets(n, d)) {
        LaurentPoly minor = determinant(m.submatrix(d, j.members()));
        if (minor.is_zero()) {
            zeros.push_back(j);
            weights.emplace_back(0);
        } else {
            weights.push_back(valuation(minor).value());
        }
    }
    if (!zeros.empty()) throw ZeroMinorError(std::move(zeros));
    return PluckerVector(n, d, std::move(weights));
}

void FlagMatrix::validate() const {
    if (dims.empty()) throw DomainError("flag matrix has no dims");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1) throw DomainError("flag dims must be positive");
        if (i > 0 && dims[i] <= dims[i - 1]) throw DomainError("flag dims must increase strictly");
    }
    if (dims.back() > n) throw DomainError("flag dim " + std::to_string(dims.back()) + " exceeds n=" + std::to_string(n));
    if (matrix.rows() != dims.back() || matrix.cols() != n)
        throw DomainError("flag matrix must be " + std::to_string(dims.back()) + "x" + std::to_string(n) + ", got " +
                          std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()));
}

FlagInstance tropicalize_flag(const FlagMatrix& fm) {
    fm.validate();
    FlagInstance flag;
    flag.n = fm.n;
    for (int d : fm.dims) flag.layers.push_back(tropicalize_minors(fm.matrix, d));
    return flag;
}

FlagMatrix random_flag_matrix(int n, const std::vector<int>& dims, std::uint64_t seed, int coeff_bound, int budget) {
    FlagMatrix fm;
    fm.n = n;
    fm.dims = dims;
    if (n < 2 || n > kMaxGroundSet) throw DomainError("n=" + std::to_string(n) + " out of range");
    if (coeff_bound < 1) throw DomainError("coefficient bound must be positive");
    if (dims.empty()) throw DomainError("flag matrix has no dims");
    fm.matrix = PolyMatrix(std::max(dims.back(), 0), n);
    fm.validate();
    for (int d : dims)
        if (d > n - 1) throw DomainError("flag dim " + std::to_string(d) + " must be at most n-1=" + std::to_string(n - 1));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    for (int attempt = 0; attempt < budget; ++attempt) {
        for (int r = 0; r < fm.matrix.rows(); ++r)
            for (int c = 0; c < n; ++c) {
                LaurentPoly entry;
                for (int e = 0; e <= 2; ++e) entry = entry + LaurentPoly::monomial(Rational(coeff(rng)), e);
                fm.matrix(r, c) = std::move(entry);
            }
        bool ok = true;
        for (int d : dims) {
            for (const Subset& j : enumerate_subsets(n, d)) {
                if (determinant(fm.matrix.submatrix(d, j.members())).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) {
            fm.resamples = attempt;
            return fm;
        }
    }
    throw GenerationError("no flag matrix with nonzero minors after " + std::to_string(budget) + " attempts");
}

FlagInstance tropical_minor_flag(const QMatrix& entries, const std::vector<int>& dims) {
    const int n = static_cast<int>(entries.cols());
    FlagInstance flag;
    flag.n = n;
    for (int d : dims) {
        if (d < 1 || d > entries.rows()) throw DomainError("tropical minor dim out of range");
        std::vector<Rational> weights;
        for (const Subset& j : enumerate_subsets(n, d)) {
            // best[mask] = min weight of matching rows 0..|mask|-1 to the
            // columns in mask (a subset of J's members).
            const std::vector<int> cols = j.members();
            std::vector<ExtRational> best(std::size_t{1} << d, ExtRational::infinity());
            best[0] = Rational(0);
            for (std::size_t mask = 0; mask + 1 < best.size(); ++mask) {
                if (best[mask].is_infinite()) continue;
                const int row = __builtin_popcountll(mask);
                for (int c = 0; c < d; ++c) {
                    if (mask & (std::size_t{1} << c)) continue;
                    ExtRational cand = best[mask] + ExtRational(entries(row, cols[c] - 1));
                    auto& slot = best[mask | (std::size_t{1} << c)];
                    if (cand < slot) slot = cand;
                }
            }
            weights.push_back(best.back().value());
        }
        flag.layers.emplace_back(n, d, std::move(weights));
    }
    flag.validate();
    return flag;
}

} // namespace flagdress

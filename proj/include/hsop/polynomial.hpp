#pragma once

// Dense univariate polynomials and truncated power series in t over the
// integers.

#include "hsop/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hsop {

/// Polynomial with arbitrary-precision integer coefficients, index = exponent.
/// Always canonical: the highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static IntPolynomial constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

    static IntPolynomial monomial(const Integer& c, std::size_t exponent) {
        std::vector<Integer> v(exponent + 1, Integer(0));
        v[exponent] = c;
        return IntPolynomial(std::move(v));
    }

    /// 1 - t^k (k >= 1).
    static IntPolynomial one_minus_power(std::size_t k) {
        std::vector<Integer> v(k + 1, Integer(0));
        v[0] = 1;
        v[k] -= 1;
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    /// Coefficient of t^k; zero past the degree.
    Integer operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

    const std::vector<Integer>& coefficients() const { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPolynomial(std::move(out));
    }

    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder over the integers. Each step requires the
    /// divisor's leading coefficient to divide exactly; otherwise the
    /// remainder returned is the partial dividend at the point of failure.
    friend std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& a, const IntPolynomial& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        std::vector<Integer> rem = a.coeffs_;
        const std::size_t db = b.coeffs_.size() - 1;
        const Integer& lead = b.coeffs_.back();
        if (rem.size() <= db) return {IntPolynomial{}, a};
        std::vector<Integer> quot(rem.size() - db, Integer(0));
        for (std::size_t k = rem.size(); k-- > db;) {
            if (rem[k] == 0) continue;
            if (rem[k] % lead != 0) {
                return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
            }
            const Integer q = rem[k] / lead;
            quot[k - db] = q;
            for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * b.coeffs_[i];
        }
        return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
    }

    /// Exact quotient; throws NotPolynomial when b does not divide a.
    friend IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw NotPolynomial("exact polynomial division left a nonzero remainder");
        return q;
    }

    /// Smallest exponent carrying a negative coefficient, if any.
    std::optional<std::size_t> first_negative() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] < 0) return i;
        return std::nullopt;
    }

    /// c_k == c_{deg-k} for all k.
    bool is_palindromic() const {
        if (is_zero()) return true;
        // A palindrome of t^s * p(t) is tested on p itself, so skip leading zeros.
        std::size_t lo = 0;
        while (coeffs_[lo] == 0) ++lo;
        for (std::size_t i = lo, j = coeffs_.size() - 1; i < j; ++i, --j)
            if (coeffs_[i] != coeffs_[j]) return false;
        return true;
    }

    Integer evaluate(const Integer& t) const {
        Integer acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
        return acc;
    }

    /// Human-readable: `1 + 2*t^4 - t^5`, zero terms suppressed; "0" for zero.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Integer& c = coeffs_[k];
            if (c == 0) continue;
            const bool neg = c < 0;
            const Integer mag = neg ? Integer(-c) : c;
            if (first) {
                if (neg) out << '-';
            } else {
                out << (neg ? " - " : " + ");
            }
            first = false;
            if (k == 0) {
                out << mag.str();
                continue;
            }
            if (mag != 1) out << mag.str() << '*';
            out << 't';
            if (k > 1) out << '^' << k;
        }
        return out.str();
    }

    /// Machine-readable `exponent:coefficient` pairs, comma separated, ascending.
    std::string to_pairs() const {
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            if (!first) out << ',';
            first = false;
            out << k << ':' << coeffs_[k].str();
        }
        return out.str();
    }

    /// Inverse of to_pairs; an empty string is the zero polynomial.
    static IntPolynomial from_pairs(const std::string& text) {
        std::vector<Integer> v;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) throw DomainError("malformed term: '" + item + "'");
            std::size_t e = 0;
            try {
                e = std::stoul(item.substr(0, colon));
            } catch (const std::exception&) {
                throw DomainError("malformed exponent: '" + item + "'");
            }
            if (v.size() <= e) v.resize(e + 1, Integer(0));
            try {
                v[e] += Integer(item.substr(colon + 1));
            } catch (const std::exception&) {
                throw DomainError("malformed coefficient: '" + item + "'");
            }
        }
        return IntPolynomial(std::move(v));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

/// Power series sum c_k t^k known through t^order inclusive.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Integer> coeffs, std::size_t order) : order_(order), coeffs_(std::move(coeffs)) {
        coeffs_.resize(order_ + 1, Integer(0));
    }

    static TruncatedSeries from_polynomial(const IntPolynomial& p, std::size_t order) {
        std::vector<Integer> v(order + 1, Integer(0));
        for (std::size_t k = 0; k <= order; ++k) v[k] = p[k];
        return TruncatedSeries(std::move(v), order);
    }

    std::size_t order() const { return order_; }

    const Integer& operator[](std::size_t k) const {
        if (k > order_) throw DomainError("coefficient t^" + std::to_string(k) + " is beyond truncation order " +
                                          std::to_string(order_));
        return coeffs_[k];
    }

    const std::vector<Integer>& coefficients() const { return coeffs_; }

    /// Product with a polynomial, kept to the same order.
    TruncatedSeries times(const IntPolynomial& p) const {
        std::vector<Integer> out(order_ + 1, Integer(0));
        const auto& pc = p.coefficients();
        for (std::size_t i = 0; i < pc.size() && i <= order_; ++i) {
            if (pc[i] == 0) continue;
            for (std::size_t j = 0; i + j <= order_; ++j) out[i + j] += pc[i] * coeffs_[j];
        }
        return TruncatedSeries(std::move(out), order_);
    }

    /// Quotient by a polynomial with constant term +-1, kept to the same order.
    TruncatedSeries divided_by(const IntPolynomial& p) const {
        const Integer c0 = p[0];
        if (c0 != 1 && c0 != -1) throw DomainError("series division needs a unit constant term");
        std::vector<Integer> out(order_ + 1, Integer(0));
        const auto& pc = p.coefficients();
        for (std::size_t k = 0; k <= order_; ++k) {
            Integer acc = coeffs_[k];
            for (std::size_t i = 1; i < pc.size() && i <= k; ++i) acc -= pc[i] * out[k - i];
            out[k] = acc * c0;
        }
        return TruncatedSeries(std::move(out), order_);
    }

    /// Polynomial obtained by dropping terms beyond `degree`.
    IntPolynomial truncate_to(std::size_t degree) const {
        if (degree > order_) throw DomainError("cannot read past truncation order");
        return IntPolynomial(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + degree + 1));
    }

    IntPolynomial as_polynomial() const { return IntPolynomial(coeffs_); }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::size_t order_;
    std::vector<Integer> coeffs_;
};

}  // namespace hsop

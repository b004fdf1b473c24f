#pragma once

// Exact integer and rational types shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace hsop {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's domain (n < 3, t <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A sequence or coefficient list has the wrong number of entries.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// The classifier has no predicate for this form degree.
class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

/// An operation's stated precondition does not hold for its input.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// A quotient that must be exact left a remainder.
class NotPolynomial : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug, never bad input.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

/// Parses `p` or `p/q` into a rational; throws DomainError on malformed text.
inline Rational parse_rational(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return s;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!valid_int(num)) throw DomainError("malformed rational: '" + text + "'");
    if (slash == std::string::npos) return Rational(Integer(strip_plus(num)));
    const std::string den = text.substr(slash + 1);
    if (!valid_int(den)) throw DomainError("malformed rational: '" + text + "'");
    Integer d(strip_plus(den));
    if (d == 0) throw DomainError("zero denominator: '" + text + "'");
    return Rational(Integer(strip_plus(num)), d);
}

}  // namespace hsop

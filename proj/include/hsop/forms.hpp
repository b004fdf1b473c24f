#pragma once

// Binary forms with exact rational coefficients: transvectants, linear
// substitutions, root multiplicities and the nullcone test.

#include "hsop/numeric.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hsop {

class OrderTooHigh : public DomainError {
public:
    using DomainError::DomainError;
};

class NotUnimodular : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroForm : public DomainError {
public:
    using DomainError::DomainError;
};

class IndexMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

enum class Convention {
    plain,     // f = sum a_i x^(n-i) y^i
    binomial,  // f = sum C(n,i) a_i x^(n-i) y^i
};

namespace detail {

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return Integer(0);
    Integer r(1);
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Integer factorial(int n) {
    Integer r(1);
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// p (p-1) ... (p-q+1); zero when q > p.
inline Integer falling(int p, int q) {
    if (q > p) return Integer(0);
    Integer r(1);
    for (int i = 0; i < q; ++i) r *= p - i;
    return r;
}

}  // namespace detail

/// Homogeneous form sum a_i x^(n-i) y^i of degree n, stored in the plain
/// convention.
class BinaryForm {
public:
    BinaryForm() : coeffs_(1, Rational(0)) {}

    /// Form of degree coeffs.size() - 1 with plain coefficients a_0..a_n.
    explicit BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw LengthMismatch("a binary form needs at least one coefficient");
    }

    static BinaryForm zero(int n) { return BinaryForm(std::vector<Rational>(static_cast<std::size_t>(n) + 1)); }

    /// x^(n-i) y^i with coefficient c.
    static BinaryForm monomial(int n, int i, const Rational& c = Rational(1)) {
        BinaryForm f = zero(n);
        f.coeffs_.at(static_cast<std::size_t>(i)) = c;
        return f;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    /// Scalar value of a degree-0 form.
    const Rational& scalar() const {
        if (degree() != 0) throw DomainError("form of degree " + std::to_string(degree()) + " is not a scalar");
        return coeffs_[0];
    }

    friend BinaryForm operator*(const BinaryForm& g, const BinaryForm& h) {
        std::vector<Rational> out(static_cast<std::size_t>(g.degree() + h.degree()) + 1);
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
            if (g.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < h.coeffs_.size(); ++j) out[i + j] += g.coeffs_[i] * h.coeffs_[j];
        }
        return BinaryForm(std::move(out));
    }

    friend BinaryForm operator*(const Rational& c, BinaryForm f) {
        for (auto& a : f.coeffs_) a *= c;
        return f;
    }

    friend BinaryForm operator+(BinaryForm g, const BinaryForm& h) {
        if (g.degree() != h.degree()) throw DomainError("cannot add forms of different degree");
        for (std::size_t i = 0; i < g.coeffs_.size(); ++i) g.coeffs_[i] += h.coeffs_[i];
        return g;
    }

    friend bool operator==(const BinaryForm& g, const BinaryForm& h) { return g.coeffs_ == h.coeffs_; }

    /// Value at the point (x, y).
    Rational evaluate(const Rational& x, const Rational& y) const {
        Rational acc(0);
        const int n = degree();
        for (int i = 0; i <= n; ++i) {
            Rational term = coeffs_[i];
            if (term == 0) continue;
            for (int p = 0; p < n - i; ++p) term *= x;
            for (int p = 0; p < i; ++p) term *= y;
            acc += term;
        }
        return acc;
    }

    /// `n: c0,c1,...,cn` with plain coefficients.
    std::string to_string() const {
        std::string s = std::to_string(degree()) + ":";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            s += i ? "," : " ";
            s += hsop::to_string(coeffs_[i]);
        }
        return s;
    }

    /// Human-readable polynomial in x and y, e.g. `x^2 - y^2`.
    std::string to_polynomial_string() const {
        const int n = degree();
        std::ostringstream out;
        bool first = true;
        for (int i = 0; i <= n; ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            std::string mono;
            if (n - i > 0) mono += "x" + (n - i > 1 ? "^" + std::to_string(n - i) : std::string());
            if (i > 0) mono += std::string(mono.empty() ? "" : "*") + "y" + (i > 1 ? "^" + std::to_string(i) : std::string());
            if (mono.empty()) out << hsop::to_string(mag);
            else if (mag == 1) out << mono;
            else out << hsop::to_string(mag) << '*' << mono;
        }
        return first ? "0" : out.str();
    }

    /// Parses `n: c0,c1,...,cn` (rationals as p/q).
    static BinaryForm parse(const std::string& text, Convention convention = Convention::plain);

private:
    std::vector<Rational> coeffs_;
};

/// Builds a form of degree n. With the binomial convention the i-th input is
/// multiplied by C(n, i) before storing.
inline BinaryForm make_form(int n, std::vector<Rational> coeffs, Convention convention = Convention::plain) {
    if (n < 0) throw DomainError("form degree must be non-negative");
    if (coeffs.size() != static_cast<std::size_t>(n) + 1) {
        throw LengthMismatch("degree " + std::to_string(n) + " form needs " + std::to_string(n + 1) +
                             " coefficients, got " + std::to_string(coeffs.size()));
    }
    if (convention == Convention::binomial)
        for (int i = 0; i <= n; ++i) coeffs[i] *= Rational(detail::binomial(n, i));
    return BinaryForm(std::move(coeffs));
}

inline BinaryForm BinaryForm::parse(const std::string& text, Convention convention) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("form must look like 'n: c0,c1,...,cn'");
    int n = 0;
    try {
        std::size_t used = 0;
        const std::string head = text.substr(0, colon);
        n = std::stoi(head, &used);
        if (head.find_first_not_of(" \t", used) != std::string::npos) throw DomainError("bad degree");
    } catch (const std::exception&) {
        throw DomainError("malformed form degree in '" + text + "'");
    }
    std::vector<Rational> coeffs;
    std::istringstream in(text.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t\r\n");
        if (b == std::string::npos) throw DomainError("empty coefficient in '" + text + "'");
        coeffs.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    return make_form(n, std::move(coeffs), convention);
}

/// Coefficients of d^(p+q) g / dx^p dy^q, a form of degree deg g - p - q.
inline BinaryForm partial(const BinaryForm& g, int p, int q) {
    const int m = g.degree();
    if (p + q > m) return BinaryForm::zero(0);
    std::vector<Rational> out(static_cast<std::size_t>(m - p - q) + 1);
    for (int a = q; a <= m - p; ++a) {
        const Rational& c = g[a];
        if (c == 0) continue;
        out[a - q] = c * Rational(detail::falling(m - a, p) * detail::falling(a, q));
    }
    return BinaryForm(std::move(out));
}

/// The k-th transvectant
///   (g,h)_k = (m-k)!(n-k)!/(m!n!) sum_i (-1)^i C(k,i) g_{x^(k-i) y^i} h_{x^i y^(k-i)},
/// with m = deg g, n = deg h. (g,h)_0 is the product g h.
inline BinaryForm transvectant(const BinaryForm& g, const BinaryForm& h, int k) {
    const int m = g.degree();
    const int n = h.degree();
    if (k < 0) throw DomainError("transvectant index must be non-negative");
    if (k > m || k > n) {
        throw OrderTooHigh("transvectant index " + std::to_string(k) + " exceeds an order (" + std::to_string(m) +
                           ", " + std::to_string(n) + ")");
    }
    BinaryForm sum = BinaryForm::zero(m + n - 2 * k);
    for (int i = 0; i <= k; ++i) {
        const BinaryForm term = partial(g, k - i, i) * partial(h, i, k - i);
        Rational c(detail::binomial(k, i));
        if (i % 2) c = -c;
        sum = sum + c * term;
    }
    const Rational scale(detail::factorial(m - k) * detail::factorial(n - k), detail::factorial(m) * detail::factorial(n));
    return scale * sum;
}

/// A 2x2 matrix [[a, b], [c, d]] acting by f(x, y) -> f(ax + by, cx + dy).
struct Substitution {
    Rational a{1}, b{0}, c{0}, d{1};

    Rational determinant() const { return a * d - b * c; }
};

/// f(ax + by, cx + dy) for a matrix of determinant 1.
inline BinaryForm apply_substitution(const BinaryForm& f, const Substitution& m) {
    if (m.determinant() != 1) throw NotUnimodular("substitution matrix has determinant " + to_string(m.determinant()));
    const int n = f.degree();
    const BinaryForm u(std::vector<Rational>{m.a, m.b});  // a x + b y
    const BinaryForm v(std::vector<Rational>{m.c, m.d});  // c x + d y
    std::vector<BinaryForm> upow{BinaryForm(std::vector<Rational>{Rational(1)})};
    std::vector<BinaryForm> vpow{BinaryForm(std::vector<Rational>{Rational(1)})};
    for (int i = 1; i <= n; ++i) {
        upow.push_back(upow.back() * u);
        vpow.push_back(vpow.back() * v);
    }
    BinaryForm out = BinaryForm::zero(n);
    for (int i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        out = out + f[i] * (upow[n - i] * vpow[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Root multiplicities
// ---------------------------------------------------------------------------

namespace detail {

/// Dense univariate polynomial over Q, index = exponent, trimmed.
using RatPoly = std::vector<Rational>;

inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long deg(const RatPoly& p) { return static_cast<long>(p.size()) - 1; }

inline RatPoly derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
    trim(out);
    return out;
}

inline RatPoly sub(RatPoly a, const RatPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

/// Quotient and remainder of a / b over Q.
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    if (b.empty()) throw DomainError("division by the zero polynomial");
    trim(a);
    if (deg(a) < deg(b)) return {RatPoly{}, a};
    RatPoly q(static_cast<std::size_t>(deg(a) - deg(b)) + 1);
    while (!a.empty() && deg(a) >= deg(b)) {
        const std::size_t shift = static_cast<std::size_t>(deg(a) - deg(b));
        const Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline RatPoly monic(RatPoly p) {
    trim(p);
    if (p.empty()) return p;
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

inline RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.empty()) throw InternalInconsistency("non-exact polynomial quotient in squarefree decomposition");
    return q;
}

/// Yun's squarefree decomposition: factors[i] is the product of the
/// irreducible factors of multiplicity i + 1 (monic; 1 if none).
inline std::vector<RatPoly> squarefree_decomposition(const RatPoly& p_in) {
    RatPoly p = p_in;
    trim(p);
    if (p.empty()) throw DomainError("squarefree decomposition of zero");
    std::vector<RatPoly> factors;
    if (deg(p) == 0) return factors;
    const RatPoly dp = derivative(p);
    const RatPoly a0 = gcd(p, dp);
    RatPoly b = exact_quotient(p, a0);
    RatPoly c = exact_quotient(dp, a0);
    RatPoly d = sub(c, derivative(b));
    while (deg(b) > 0) {
        RatPoly a = gcd(b, d);
        factors.push_back(a);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = sub(c, derivative(b));
    }
    return factors;
}

}  // namespace detail

/// Largest multiplicity of a projective root of f over the algebraic closure.
inline int max_root_multiplicity(const BinaryForm& f) {
    if (f.is_zero()) throw ZeroForm("root multiplicity of the zero form is undefined");
    const int n = f.degree();
    // Dehomogenize at y = 1: p(x) = sum a_i x^(n-i). The root (1:0) has
    // multiplicity n - deg p; finite roots, x = 0 included, come from p.
    detail::RatPoly p(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) p[n - i] = f[i];
    detail::trim(p);
    int best = n - static_cast<int>(detail::deg(p));
    const auto factors = detail::squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (detail::deg(factors[i]) > 0) best = std::max(best, static_cast<int>(i) + 1);
    return best;
}

/// Nullcone membership: some root has multiplicity strictly above n/2.
inline bool is_nullform(const BinaryForm& f) { return 2 * max_root_multiplicity(f) > f.degree(); }

/// Form whose only nonzero coefficients are at the indices i == j (mod t),
/// 0 <= i <= n, filled from `values` in increasing i.
inline BinaryForm lacunary_form(int n, int j, int t, const std::vector<Rational>& values) {
    if (t <= 0) throw DomainError("lacunary_form needs t > 0");
    if (n < 0 || j < 0 || j > n) throw DomainError("lacunary_form needs 0 <= j <= n");
    BinaryForm f = BinaryForm::zero(n);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    std::size_t used = 0;
    for (int i = j % t; i <= n; i += t) {
        if (used >= values.size()) {
            throw IndexMismatch("lacunary_form: too few values for indices == " + std::to_string(j) + " mod " +
                                std::to_string(t));
        }
        coeffs[i] = values[used++];
    }
    if (used != values.size()) {
        throw IndexMismatch("lacunary_form: expected " + std::to_string(used) + " values, got " +
                            std::to_string(values.size()));
    }
    return BinaryForm(std::move(coeffs));
}

/// Number of coefficient slots lacunary_form(n, j, t, .) fills.
inline std::size_t lacunary_slots(int n, int j, int t) {
    if (t <= 0 || j < 0 || j > n) throw DomainError("lacunary_slots needs t > 0 and 0 <= j <= n");
    return static_cast<std::size_t>((n - j % t) / t + 1);
}

}  // namespace hsop

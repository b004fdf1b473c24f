#pragma once

// Poincare series of the invariant ring of the binary n-ic, the universal
// denominator B(t), and numerators P(t) * prod(1 - t^d) for candidate hsop
// degree sequences.

#include "hsop/cache.hpp"
#include "hsop/combinatorics.hpp"
#include "hsop/conditions.hpp"
#include "hsop/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hsop {

/// P(t) = sum_m h^n_m t^m through t^order.
///
/// One sweep of the box-partition recurrence at fixed width n yields every
/// row N(n, m, .) for m = 0..order in turn.
inline TruncatedSeries poincare_series(int n, std::size_t order) {
    if (n < 1) throw DomainError("poincare_series needs n >= 1");
    std::vector<Integer> h(order + 1, Integer(0));
    h[0] = 1;
    // prev[a]: coefficient row of an a x (m-1) box, a = 0..n.
    std::vector<std::vector<Integer>> prev(n + 1, std::vector<Integer>{Integer(1)});
    for (std::size_t m = 1; m <= order; ++m) {
        std::vector<std::vector<Integer>> cur(n + 1);
        cur[0] = {Integer(1)};
        for (int a = 1; a <= n; ++a) {
            std::vector<Integer> row(static_cast<std::size_t>(a) * m + 1, Integer(0));
            const auto& fewer = prev[a];
            for (std::size_t t = 0; t < fewer.size(); ++t) row[t] += fewer[t];
            const auto& shifted = cur[a - 1];
            for (std::size_t t = 0; t < shifted.size(); ++t) row[t + m] += shifted[t];
            cur[a] = std::move(row);
        }
        const std::size_t area = static_cast<std::size_t>(n) * m;
        if (area % 2 == 0) {
            const std::size_t t = area / 2;
            h[m] = cur[n][t] - (t > 0 ? cur[n][t - 1] : Integer(0));
        }
        prev = std::move(cur);
    }
    return TruncatedSeries(std::move(h), order);
}

/// The factors of Dixmier's denominator: exponents e of the (1 - t^e)
/// factors, and whether a (1 + t) factor is present.
struct DixmierFactors {
    std::vector<std::size_t> one_minus;
    bool one_plus_t = false;
};

inline DixmierFactors dixmier_factors(int n) {
    if (n < 3) throw DomainError("dixmier_B needs n >= 3, got " + std::to_string(n));
    DixmierFactors f;
    auto add = [&](int e) { f.one_minus.push_back(static_cast<std::size_t>(e)); };
    if (n % 2 == 1) {
        for (int i = 2; i <= n - 1; ++i) add(2 * i);
    } else if (n % 4 == 2) {
        for (int i = 2; i <= n - 1; ++i) add(i);
        f.one_plus_t = true;
    } else {
        for (int i = 2; i <= n - 3; ++i) add(i);
        f.one_plus_t = true;
        add((n - 2) / 2);
        add(n - 1);
    }
    return f;
}

/// Dixmier's denominator B(t), for which P(t) B(t) is a polynomial.
inline IntPolynomial dixmier_B(int n) {
    const DixmierFactors f = dixmier_factors(n);
    IntPolynomial b = IntPolynomial::constant(Integer(1));
    for (std::size_t e : f.one_minus) b *= IntPolynomial::one_minus_power(e);
    if (f.one_plus_t) b *= IntPolynomial{1, 1};
    return b;
}

/// Extra series terms past deg B that must vanish in P(t) B(t).
inline std::size_t pb_window(int n) { return static_cast<std::size_t>(dixmier_B(n).degree()) + 16; }

namespace detail {

inline IntPolynomial compute_pb(int n) {
    const IntPolynomial b = dixmier_B(n);
    const std::size_t deg_b = static_cast<std::size_t>(b.degree());
    const std::size_t order = deg_b + pb_window(n);
    const TruncatedSeries product = poincare_series(n, order).times(b);
    for (std::size_t k = deg_b + 1; k <= order; ++k) {
        if (product[k] != 0) {
            throw InternalInconsistency("P(t)B(t) has nonzero coefficient at t^" + std::to_string(k) + " for n=" +
                                        std::to_string(n));
        }
    }
    return product.truncate_to(deg_b);
}

inline MemoTable<int, IntPolynomial>& pb_cache() {
    static MemoTable<int, IntPolynomial> table;
    return table;
}

}  // namespace detail

/// The polynomial P(t) B(t); verified against a window of deg B + 16 further
/// series coefficients, all of which must vanish.
inline IntPolynomial pb_polynomial(int n) {
    if (n < 3) throw DomainError("pb_polynomial needs n >= 3, got " + std::to_string(n));
    return *detail::pb_cache().get_or_compute(n, [n] {
        auto& store = PersistentStore::instance();
        const std::string key = "pb_" + std::to_string(n);
        if (auto payload = store.load(key)) {
            try {
                IntPolynomial p = IntPolynomial::from_pairs(*payload);
                // A cached value must still reproduce the low-order series.
                const IntPolynomial b = dixmier_B(n);
                const auto check = poincare_series(n, 24).times(b);
                bool ok = true;
                for (std::size_t k = 0; k <= 24 && ok; ++k) ok = check[k] == p[k];
                if (ok) return p;
            } catch (const Error&) {
            }
        }
        IntPolynomial p = detail::compute_pb(n);
        store.store(key, p.to_pairs());
        return p;
    });
}

/// P(t) * prod(1 - t^d) for a degree sequence meeting the divisibility
/// conditions. The constant term is +1. Throws NotPolynomial if the exact
/// division by B(t) fails.
inline IntPolynomial hsop_numerator(int n, const DegreeSequence& seq) {
    if (n < 3) throw DomainError("hsop_numerator needs n >= 3");
    if (seq.size() != static_cast<std::size_t>(n - 2)) {
        throw LengthMismatch("expected " + std::to_string(n - 2) + " degrees for n=" + std::to_string(n) + ", got " +
                             std::to_string(seq.size()));
    }
    if (!theorem1_check(n, seq)) {
        throw PreconditionFailed("sequence " + seq.to_string() + " fails the divisibility conditions for n=" +
                                 std::to_string(n));
    }
    // Multiply by each (1 - t^d), then divide out B(t) one factor at a time;
    // every division is a single pass and must leave a zero remainder.
    std::vector<Integer> c = pb_polynomial(n).coefficients();
    std::size_t total = 0;
    for (int d : seq) total += static_cast<std::size_t>(d);
    c.resize(c.size() + total, Integer(0));
    for (int d : seq) {
        const auto e = static_cast<std::size_t>(d);
        for (std::size_t k = c.size(); k-- > e;) c[k] -= c[k - e];
    }
    auto remainder_fail = [&] {
        throw NotPolynomial("P(t) * prod(1 - t^d) is not a polynomial for " + seq.to_string() + ", n=" +
                            std::to_string(n));
    };
    const DixmierFactors b = dixmier_factors(n);
    std::size_t len = c.size();
    for (std::size_t e : b.one_minus) {
        if (len <= e) remainder_fail();
        for (std::size_t k = e; k < len; ++k) c[k] += c[k - e];
        for (std::size_t k = len - e; k < len; ++k)
            if (c[k] != 0) remainder_fail();
        len -= e;
    }
    if (b.one_plus_t) {
        for (std::size_t k = 1; k < len; ++k) c[k] -= c[k - 1];
        if (c[len - 1] != 0) remainder_fail();
        --len;
    }
    c.resize(len);
    return IntPolynomial(std::move(c));
}

inline std::optional<std::size_t> first_negative(const IntPolynomial& p) { return p.first_negative(); }

}  // namespace hsop

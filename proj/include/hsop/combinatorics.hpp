#pragma once

// Dimensions of spaces of invariants and covariants of binary forms
// (Cayley-Sylvester), built on counts of partitions fitting in a box.

#include "hsop/cache.hpp"
#include "hsop/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hsop {

/// A request for the dimension of degree-m, order-a covariants of a binary
/// n-ic. Order 0 asks for invariants.
struct DimensionQuery {
    int n = 1;
    int m = 0;
    int a = 0;

    void validate() const {
        if (n < 1) throw DomainError("form degree n must be >= 1, got " + std::to_string(n));
        if (m < 0) throw DomainError("degree m must be >= 0, got " + std::to_string(m));
        if (a < 0) throw DomainError("order a must be >= 0, got " + std::to_string(a));
    }
};

namespace detail {

/// Lower half (t <= w*h/2) of the Gaussian binomial coefficient row for a
/// w x h box: entry t counts partitions of t into at most h parts, each at
/// most w. Uses N(w,h,t) = N(w,h-1,t) + N(w-1,h,t-h).
inline std::vector<Integer> ferrers_half_row(int w, int h) {
    // rows[a] holds the full row for an a x b box, b advancing in the outer loop.
    std::vector<std::vector<Integer>> prev(w + 1, std::vector<Integer>{Integer(1)});
    for (int b = 1; b <= h; ++b) {
        std::vector<std::vector<Integer>> cur(w + 1);
        cur[0] = {Integer(1)};
        for (int a = 1; a <= w; ++a) {
            std::vector<Integer> row(static_cast<std::size_t>(a) * b + 1, Integer(0));
            const auto& fewer_parts = prev[a];
            for (std::size_t t = 0; t < fewer_parts.size(); ++t) row[t] += fewer_parts[t];
            const auto& shifted = cur[a - 1];
            for (std::size_t t = 0; t < shifted.size(); ++t) row[t + b] += shifted[t];
            cur[a] = std::move(row);
        }
        prev = std::move(cur);
    }
    std::vector<Integer> full = std::move(prev[w]);
    full.resize(static_cast<std::size_t>(w) * h / 2 + 1);
    return full;
}

inline std::string serialize_row(const std::vector<Integer>& row) {
    std::ostringstream out;
    for (const auto& v : row) out << v.str() << '\n';
    return out.str();
}

inline std::optional<std::vector<Integer>> parse_row(const std::string& payload, std::size_t expected) {
    std::istringstream in(payload);
    std::vector<Integer> row;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) return std::nullopt;
        try {
            row.emplace_back(line);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (row.size() != expected) return std::nullopt;
    return row;
}

inline MemoTable<std::pair<int, int>, std::vector<Integer>>& ferrers_cache() {
    static MemoTable<std::pair<int, int>, std::vector<Integer>> table;
    return table;
}

/// Cached half row for the box, keyed on (min side, max side).
inline std::shared_ptr<const std::vector<Integer>> ferrers_row(int n, int m) {
    const int lo = std::min(n, m);
    const int hi = std::max(n, m);
    return ferrers_cache().get_or_compute({lo, hi}, [lo, hi] {
        auto& store = PersistentStore::instance();
        const std::string key = "ferrers_" + std::to_string(lo) + "_" + std::to_string(hi);
        const std::size_t expected = static_cast<std::size_t>(lo) * hi / 2 + 1;
        if (auto payload = store.load(key)) {
            if (auto row = parse_row(*payload, expected)) return std::move(*row);
        }
        auto row = ferrers_half_row(lo, hi);
        store.store(key, serialize_row(row));
        return row;
    });
}

}  // namespace detail

/// Number of partitions of t into at most m parts, each at most n; that is,
/// Ferrers diagrams of size t inside an m x n rectangle. Zero outside 0..nm.
inline Integer ferrers_count(int n, int m, long long t) {
    if (n < 0 || m < 0) throw DomainError("box sides must be non-negative");
    const long long area = static_cast<long long>(n) * m;
    if (t < 0 || t > area) return Integer(0);
    if (n == 0 || m == 0) return Integer(1);
    const long long folded = std::min(t, area - t);
    return (*detail::ferrers_row(n, m))[static_cast<std::size_t>(folded)];
}

/// Cayley-Sylvester: dimension of covariants of degree m and order a.
inline Integer covariant_dim(int n, int m, int a) {
    DimensionQuery{n, m, a}.validate();
    const long long excess = static_cast<long long>(n) * m - a;
    if (excess < 0 || excess % 2 != 0) return Integer(0);
    const long long t = excess / 2;
    Integer d = ferrers_count(n, m, t) - ferrers_count(n, m, t - 1);
    if (d < 0) throw InternalInconsistency("negative covariant dimension");
    return d;
}

/// h^n_m, the dimension of the degree-m invariants of the binary n-ic.
inline Integer invariant_dim(int n, int m) { return covariant_dim(n, m, 0); }

/// True exactly for the (n, m) pairs with no nonzero invariant of degree m,
/// as listed by the closed-form vanishing classification.
inline bool vanishing_classified(int n, int m) {
    if (n < 1 || m < 1) throw DomainError("vanishing_classified needs n, m >= 1");
    auto one_way = [](int p, int q) {
        if (p == 1) return true;
        if (p == 2 && q % 2 == 1) return true;
        if (p == 3 && q % 4 == 2) return true;
        if (p == 5 && (q == 6 || q == 10 || q == 14)) return true;
        if (p == 6 && (q == 7 || q == 9 || q == 11 || q == 13)) return true;
        if (p == 7 && q == 10) return true;
        return false;
    };
    if ((static_cast<long long>(m) * n) % 2 == 1) return true;
    return one_way(m, n) || one_way(n, m);
}

/// Table of h^n_m as TSV: a header line, then rows m = 1..m_max with columns
/// n = 1..n_max; zero entries are printed as ".".
inline std::string invariant_table_tsv(int n_max, int m_max) {
    if (n_max < 1 || m_max < 1) throw DomainError("table bounds must be >= 1");
    std::ostringstream out;
    out << "m\\n";
    for (int n = 1; n <= n_max; ++n) out << '\t' << n;
    out << '\n';
    for (int m = 1; m <= m_max; ++m) {
        out << m;
        for (int n = 1; n <= n_max; ++n) {
            const Integer h = invariant_dim(n, m);
            out << '\t';
            if (h == 0) out << '.';
            else out << h.str();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hsop

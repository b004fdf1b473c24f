#pragma once

// Exact characterizations of hsop degree sequences for binary forms of
// degree 3..8, the additive reduction between sequences, minimality, and
// bounded exhaustive enumeration of the minimal sequences.

#include "hsop/conditions.hpp"
#include "hsop/parallel.hpp"
#include "hsop/series.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hsop {

// ---------------------------------------------------------------------------
// Admissibility predicates
// ---------------------------------------------------------------------------

/// One clause of an admissibility predicate. Every value set mentioned by the
/// predicates lies below 64, so sets are bit masks.
struct Clause {
    enum class Kind {
        all_divisible,      // every entry divisible by `modulus`
        forbidden_values,   // no entry lies in `values`
        at_most_in_set,     // at most `bound` entries lie in `values`
        forbidden_submultiset,  // `submultiset` is not contained in the sequence
        at_least_divisible, // at least `bound` entries divisible by `modulus`
    };

    Kind kind;
    std::string rule;
    std::string description;
    int modulus = 1;
    int bound = 0;
    std::uint64_t values = 0;
    std::vector<int> submultiset;

    /// True when this clause can no longer hold for any completion of
    /// `prefix` by `remaining` further entries (remaining = 0: plain check).
    /// `small` holds multiplicities of values below 64.
    bool fails(std::span<const int> prefix, const std::array<std::uint8_t, 64>& small, int remaining) const {
        switch (kind) {
        case Kind::all_divisible:
            return std::any_of(prefix.begin(), prefix.end(), [this](int d) { return d % modulus != 0; });
        case Kind::forbidden_values:
            return std::any_of(prefix.begin(), prefix.end(), [this](int d) { return in_set(d); });
        case Kind::at_most_in_set: {
            int k = 0;
            for (int d : prefix) k += in_set(d);
            return k > bound;
        }
        case Kind::forbidden_submultiset: {
            for (std::size_t i = 0; i < submultiset.size();) {
                std::size_t j = i;
                while (j < submultiset.size() && submultiset[j] == submultiset[i]) ++j;
                if (small[submultiset[i]] < j - i) return false;
                i = j;
            }
            return true;
        }
        case Kind::at_least_divisible: {
            int k = 0;
            for (int d : prefix) k += d % modulus == 0;
            return k + remaining < bound;
        }
        }
        return false;
    }

    bool in_set(int d) const { return d >= 0 && d < 64 && ((values >> d) & 1u); }

    std::vector<int> witnesses(std::span<const int> seq) const {
        std::vector<int> out;
        switch (kind) {
        case Kind::all_divisible:
            for (int d : seq)
                if (d % modulus != 0) out.push_back(d);
            break;
        case Kind::forbidden_values:
        case Kind::at_most_in_set:
            for (int d : seq)
                if (in_set(d)) out.push_back(d);
            break;
        case Kind::forbidden_submultiset:
            out = submultiset;
            break;
        case Kind::at_least_divisible:
            for (int d : seq)
                if (d % modulus == 0) out.push_back(d);
            break;
        }
        return out;
    }
};

namespace detail {

inline std::uint64_t mask_of(std::initializer_list<int> values) {
    std::uint64_t m = 0;
    for (int v : values) m |= std::uint64_t{1} << v;
    return m;
}

inline std::string join(std::initializer_list<int> values, const char* sep) {
    std::string s;
    bool first = true;
    for (int v : values) {
        if (!first) s += sep;
        first = false;
        s += std::to_string(v);
    }
    return s;
}

inline const char* count_word(int k) {
    static const char* words[] = {"zero", "one", "two", "three", "four", "five", "six"};
    return k >= 0 && k <= 6 ? words[k] : "many";
}

struct ClauseBuilder {
    int n;
    std::vector<Clause> clauses;

    std::string id(const std::string& tail) const { return "n" + std::to_string(n) + "." + tail; }

    void all_divisible(int q) {
        clauses.push_back({Clause::Kind::all_divisible,
                           id(q == 2 ? "all_even" : "all_divisible_by_" + std::to_string(q)),
                           q == 2 ? "all degrees even" : "all degrees divisible by " + std::to_string(q), q});
    }
    void forbidden_values(std::initializer_list<int> values, const std::string& tail) {
        Clause c{Clause::Kind::forbidden_values, id(tail), "no degree in {" + join(values, ",") + "}"};
        c.values = mask_of(values);
        clauses.push_back(std::move(c));
    }
    // "no k entries in S" == at most k-1 entries in S, counted with multiplicity.
    void no_k_in(int k, std::initializer_list<int> values) {
        const std::string tail = std::string("no_") + count_word(k) + "_in_" + join(values, "_");
        Clause c{Clause::Kind::at_most_in_set, id(tail),
                 "at most " + std::to_string(k - 1) + " degrees in {" + join(values, ",") + "}"};
        c.values = mask_of(values);
        c.bound = k - 1;
        clauses.push_back(std::move(c));
    }
    void no_submultiset(std::initializer_list<int> values) {
        Clause c{Clause::Kind::forbidden_submultiset, id("no_sub_" + join(values, "_")),
                 "sub-multiset {" + join(values, ",") + "} forbidden"};
        c.submultiset = values;
        std::sort(c.submultiset.begin(), c.submultiset.end());
        clauses.push_back(std::move(c));
    }
    void at_least(int q, int k) {
        Clause c{Clause::Kind::at_least_divisible, id("at_least_" + std::to_string(k) + "_div_" + std::to_string(q)),
                 "at least " + std::to_string(k) + " degrees divisible by " + std::to_string(q), q};
        c.bound = k;
        clauses.push_back(std::move(c));
    }
};

inline std::vector<Clause> build_clauses(int n) {
    ClauseBuilder b{n, {}};
    switch (n) {
    case 3:
        b.all_divisible(4);
        break;
    case 4:
        b.forbidden_values({1}, "not_1");
        b.at_least(2, 1);
        b.at_least(3, 1);
        break;
    case 5:
        b.all_divisible(2);
        b.forbidden_values({2, 6, 10, 14}, "not_2_6_10_14");
        b.no_submultiset({4, 4});
        b.no_submultiset({4, 22});
        b.at_least(4, 2);
        b.at_least(6, 1);
        b.at_least(8, 1);
        break;
    case 6:
        b.forbidden_values({1, 3, 5, 7, 9, 11, 13}, "not_1_3_5_7_9_11_13");
        b.no_k_in(2, {2, 17});
        b.no_k_in(3, {2, 4, 8, 14, 17, 19, 23, 29});
        b.no_k_in(3, {2, 6, 17, 21});
        b.at_least(2, 3);
        b.at_least(3, 1);
        b.at_least(4, 1);
        b.at_least(5, 1);
        break;
    case 7:
        b.all_divisible(2);
        b.forbidden_values({2, 6, 10}, "not_2_6_10");
        b.no_k_in(2, {4});
        b.no_k_in(4, {4, 8, 14, 16, 18, 22, 26, 28, 34, 38, 46, 58});
        b.at_least(4, 3);
        b.at_least(6, 2);
        b.at_least(8, 1);
        b.at_least(10, 1);
        b.at_least(12, 1);
        break;
    case 8:
        b.forbidden_values({1}, "not_1");
        b.at_least(2, 3);
        b.at_least(3, 2);
        b.at_least(4, 1);
        b.at_least(5, 1);
        b.at_least(6, 1);
        b.at_least(7, 1);
        for (auto sub : {std::initializer_list<int>{2, 2}, {3, 3}, {2, 4, 4}, {2, 5, 5}, {3, 5, 5}, {4, 4, 4},
                         {5, 5, 5}, {2, 3, 7, 7}})
            b.no_submultiset(sub);
        b.no_k_in(4, {2, 3, 6});
        b.no_k_in(4, {2, 4, 5});
        b.no_k_in(4, {2, 4, 7});
        b.no_k_in(5, {2, 3, 4, 5, 11});
        b.no_k_in(5, {2, 3, 4, 6, 11});
        b.no_k_in(5, {2, 3, 4, 7});
        b.no_k_in(5, {2, 3, 4, 8});
        b.no_k_in(5, {2, 3, 4, 9});
        b.no_k_in(5, {2, 3, 5, 6});
        b.no_k_in(5, {2, 3, 6, 7, 11});
        break;
    default:
        throw UnsupportedDegree("no admissibility predicate for n=" + std::to_string(n) + " (supported: 3..8)");
    }
    return std::move(b.clauses);
}

}  // namespace detail

/// Running counts of a (partial) sequence against a rule set: one 4-bit
/// lane per divisibility clause and per value-set clause, plus multiplicities
/// of the small values that forbidden sub-multisets mention.
struct Tally {
    std::uint64_t divisible = 0;
    std::uint64_t in_sets = 0;
    std::array<std::uint8_t, 64> small{};
    bool bad = false;  // some entry violates an every-entry clause
    int size = 0;
};

/// The full admissibility predicate for hsop degree sequences of the binary
/// n-ic, 3 <= n <= 8, as a list of clauses that must all hold.
///
/// Two evaluators share the clause list: report() walks the clauses and
/// collects violations; viable() and the Tally interface use per-value bit
/// lanes and are what the enumerator runs.
class AdmissibilityRules {
public:
    explicit AdmissibilityRules(int n) : n_(n), clauses_(detail::build_clauses(n)) {
        for (std::size_t i = 0; i < clauses_.size(); ++i) {
            const auto& c = clauses_[i];
            switch (c.kind) {
            case Clause::Kind::all_divisible:
                step_ = std::lcm(step_, c.modulus);
                break;
            case Clause::Kind::at_least_divisible:
                at_least_.push_back(i);
                break;
            case Clause::Kind::at_most_in_set:
                at_most_.push_back(i);
                break;
            case Clause::Kind::forbidden_submultiset:
                submultisets_.push_back(i);
                break;
            case Clause::Kind::forbidden_values:
                break;
            }
        }
        if (at_least_.size() > 16 || at_most_.size() > 16) throw InternalInconsistency("too many counting clauses");
        for (int v = 0; v < kTableSize; ++v) table_[v] = compute_info(v);
    }

    /// Cached rule set for n.
    static const AdmissibilityRules& for_degree(int n) {
        static const std::array<std::optional<AdmissibilityRules>, 9> table = [] {
            std::array<std::optional<AdmissibilityRules>, 9> t;
            for (int k = 3; k <= 8; ++k) t[k].emplace(k);
            return t;
        }();
        if (n < 3 || n > 8) {
            throw UnsupportedDegree("no admissibility predicate for n=" + std::to_string(n) + " (supported: 3..8)");
        }
        return *table[n];
    }

    int n() const { return n_; }
    std::size_t length() const { return static_cast<std::size_t>(n_ - 2); }
    const std::vector<Clause>& clauses() const { return clauses_; }

    /// Every entry of an admissible sequence is a multiple of this step.
    int step() const { return step_; }

    void add(Tally& t, int v) const {
        const ValueInfo info = v < kTableSize ? table_[v] : compute_info(v);
        t.divisible += info.divisible;
        t.in_sets += info.in_sets;
        t.bad |= info.bad;
        if (v < 64) ++t.small[v];
        ++t.size;
    }

    /// Could a sequence with this tally still be completed to an admissible
    /// one by `remaining` more entries? remaining == 0 gives the verdict.
    bool viable(const Tally& t, int remaining = 0) const {
        if (t.bad) return false;
        for (std::size_t k = 0; k < at_least_.size(); ++k) {
            const int have = static_cast<int>((t.divisible >> (4 * k)) & 0xF);
            if (have + remaining < clauses_[at_least_[k]].bound) return false;
        }
        for (std::size_t k = 0; k < at_most_.size(); ++k) {
            const int have = static_cast<int>((t.in_sets >> (4 * k)) & 0xF);
            if (have > clauses_[at_most_[k]].bound) return false;
        }
        for (std::size_t idx : submultisets_) {
            const auto& sub = clauses_[idx].submultiset;
            bool contained = true;
            for (std::size_t i = 0; i < sub.size() && contained;) {
                std::size_t j = i;
                while (j < sub.size() && sub[j] == sub[i]) ++j;
                contained = t.small[sub[i]] >= j - i;
                i = j;
            }
            if (contained) return false;
        }
        return true;
    }

    bool viable(std::span<const int> prefix, int remaining = 0) const {
        if (prefix.size() > 15) throw DomainError("sequence too long for the counting lanes");
        Tally t;
        for (int d : prefix) add(t, d);
        return viable(t, remaining);
    }

    /// Divisibility counts still missing from t, as the lcm of the moduli that
    /// the next entry must be divisible by when it is the last one.
    int last_entry_stride(const Tally& t) const {
        int stride = step_;
        for (std::size_t k = 0; k < at_least_.size(); ++k) {
            const int have = static_cast<int>((t.divisible >> (4 * k)) & 0xF);
            const auto& c = clauses_[at_least_[k]];
            if (have < c.bound) stride = std::lcm(stride, c.modulus);
        }
        return stride;
    }

    AdmissibilityReport report(std::span<const int> seq) const {
        AdmissibilityReport r;
        std::array<std::uint8_t, 64> small{};
        for (int d : seq)
            if (d < 64) ++small[d];
        for (const auto& c : clauses_)
            if (c.fails(seq, small, 0)) r.violations.push_back({c.rule, c.description, c.witnesses(seq)});
        return r;
    }

private:
    struct ValueInfo {
        std::uint64_t divisible = 0;
        std::uint64_t in_sets = 0;
        bool bad = false;
    };

    static constexpr int kTableSize = 1024;

    ValueInfo compute_info(int v) const {
        ValueInfo info;
        if (v <= 0) {
            info.bad = true;
            return info;
        }
        for (std::size_t k = 0; k < at_least_.size(); ++k)
            if (v % clauses_[at_least_[k]].modulus == 0) info.divisible |= std::uint64_t{1} << (4 * k);
        for (std::size_t k = 0; k < at_most_.size(); ++k)
            if (clauses_[at_most_[k]].in_set(v)) info.in_sets |= std::uint64_t{1} << (4 * k);
        for (const auto& c : clauses_) {
            if (c.kind == Clause::Kind::all_divisible && v % c.modulus != 0) info.bad = true;
            if (c.kind == Clause::Kind::forbidden_values && c.in_set(v)) info.bad = true;
        }
        return info;
    }

    int n_;
    std::vector<Clause> clauses_;
    int step_ = 1;
    std::vector<std::size_t> at_least_;
    std::vector<std::size_t> at_most_;
    std::vector<std::size_t> submultisets_;
    std::array<ValueInfo, kTableSize> table_{};
};

inline void check_length(int n, const DegreeSequence& seq) {
    if (seq.size() != static_cast<std::size_t>(n - 2)) {
        throw LengthMismatch("n=" + std::to_string(n) + " needs " + std::to_string(n - 2) + " degrees, got " +
                             std::to_string(seq.size()));
    }
}

/// Exact test whether seq is the degree sequence of some hsop for the binary
/// n-ic, reporting every violated clause.
inline AdmissibilityReport admissible(int n, const DegreeSequence& seq) {
    const auto& rules = AdmissibilityRules::for_degree(n);
    check_length(n, seq);
    return rules.report(seq.degrees());
}

// ---------------------------------------------------------------------------
// Reductions and minimality
// ---------------------------------------------------------------------------

/// Entry `entry` = left + right, where replacing it by either part leaves an
/// admissible sequence.
struct ReductionWitness {
    int entry = 0;
    int left = 0;
    int right = 0;
    DegreeSequence left_sequence;
    DegreeSequence right_sequence;

    friend bool operator==(const ReductionWitness&, const ReductionWitness&) = default;
};

namespace detail {

/// Admissibility of `seq` with position `pos` replaced by x, memoized over x.
class ReplacementOracle {
public:
    ReplacementOracle(const AdmissibilityRules& rules, std::span<const int> seq, std::size_t pos)
        : rules_(rules), known_(scratch()) {
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (i != pos) rules_.add(rest_, seq[i]);
        known_.assign(static_cast<std::size_t>(seq[pos]), 0);
    }

    bool operator()(int x) {
        auto& slot = known_[static_cast<std::size_t>(x)];
        if (slot == 0) {
            Tally t = rest_;
            rules_.add(t, x);
            slot = rules_.viable(t) ? 1 : 2;
        }
        return slot == 1;
    }

private:
    static std::vector<std::uint8_t>& scratch() {
        thread_local std::vector<std::uint8_t> buffer;
        return buffer;
    }

    const AdmissibilityRules& rules_;
    Tally rest_;
    std::vector<std::uint8_t>& known_;  // 0 unknown, 1 admissible, 2 not
};

/// Scans splits of each distinct entry in `order` of positions; returns
/// the first (position, left) pair found.
template <class PositionOrder>
std::optional<std::pair<std::size_t, int>> search_split(const AdmissibilityRules& rules, std::span<const int> seq,
                                                        PositionOrder&& positions) {
    const int step = rules.step();
    for (std::size_t pos : positions) {
        const int d = seq[pos];
        ReplacementOracle ok(rules, seq, pos);
        for (int left = step; 2 * left <= d; left += step) {
            if (ok(left) && ok(d - left)) return std::make_pair(pos, left);
        }
    }
    return std::nullopt;
}

/// Positions of the distinct values of a sorted sequence, ascending.
inline std::vector<std::size_t> distinct_positions(std::span<const int> seq) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (i == 0 || seq[i] != seq[i - 1]) out.push_back(i);
    return out;
}

/// Any split at all; tries the largest entries first since they split most
/// often.
inline bool has_reduction(const AdmissibilityRules& rules, std::span<const int> seq) {
    auto positions = distinct_positions(seq);
    std::reverse(positions.begin(), positions.end());
    return search_split(rules, seq, positions).has_value();
}

}  // namespace detail

/// A split of one entry d = d' + d'' (d' <= d'') such that both resulting
/// sequences are admissible. Entries are tried in ascending order and d'
/// ascending, so the witness is deterministic. Absent iff seq is minimal.
inline std::optional<ReductionWitness> find_reduction(int n, const DegreeSequence& seq) {
    const auto& rules = AdmissibilityRules::for_degree(n);
    check_length(n, seq);
    if (!rules.viable(seq.degrees())) {
        throw PreconditionFailed("find_reduction: " + seq.to_string() + " is not admissible for n=" + std::to_string(n));
    }
    const auto& v = seq.degrees();
    auto hit = detail::search_split(rules, v, detail::distinct_positions(v));
    if (!hit) return std::nullopt;
    const auto [pos, left] = *hit;
    const int d = v[pos];
    ReductionWitness w{d, left, d - left, seq.replaced(d, left), seq.replaced(d, d - left)};
    if (!admissible(n, w.left_sequence) || !admissible(n, w.right_sequence)) {
        throw InternalInconsistency("reduction witness for " + seq.to_string() + " is not admissible");
    }
    return w;
}

/// Admissible and not obtainable from smaller sequences by splitting an
/// entry (which subsumes taking multiples).
inline bool is_minimal(int n, const DegreeSequence& seq) {
    const auto& rules = AdmissibilityRules::for_degree(n);
    check_length(n, seq);
    if (!rules.viable(seq.degrees())) return false;
    return !detail::has_reduction(rules, seq.degrees());
}

// ---------------------------------------------------------------------------
// Bounded enumeration
// ---------------------------------------------------------------------------

/// Region of sorted sequences searched for minimal sequences of the n-ic.
/// Entry i of a sorted candidate is at most upper[i].
struct SearchBox {
    int n = 0;
    std::vector<int> upper;
    /// Extra filter restricting the box to the sequences the completeness
    /// argument covers; applied to full candidates only.
    bool (*accept)(std::span<const int>) = nullptr;
};

namespace detail {

/// Can the sorted 6-tuple be arranged as (4 entries <= 24, one <= 72, one
/// <= 432) with the last divisible by 7 and one of the last two by 5?
inline bool octavic_placement(std::span<const int> s) {
    for (std::size_t last = 0; last < s.size(); ++last) {
        if (s[last] % 7 != 0 || s[last] > 432) continue;
        for (std::size_t fifth = 0; fifth < s.size(); ++fifth) {
            if (fifth == last || s[fifth] > 72) continue;
            if (s[last] % 5 != 0 && s[fifth] % 5 != 0) continue;
            bool rest_small = true;
            for (std::size_t i = 0; i < s.size() && rest_small; ++i)
                if (i != last && i != fifth && s[i] > 24) rest_small = false;
            if (rest_small) return true;
        }
    }
    return false;
}

}  // namespace detail

/// The per-degree search regions, each large enough that every admissible
/// sequence outside it has a reduction.
inline SearchBox search_box(int n) {
    switch (n) {
    case 3: return {3, {8}};
    case 4: return {4, {12, 12}};
    case 5: return {5, {48, 48, 48}};
    case 6: return {6, {89, 89, 89, 89}};
    case 7: return {7, {180, 180, 180, 180, 180}};
    case 8: return {8, {24, 24, 24, 24, 72, 432}, &detail::octavic_placement};
    default:
        throw UnsupportedDegree("no enumeration bound for n=" + std::to_string(n) + " (supported: 3..8)");
    }
}

struct EnumerationStats {
    std::uint64_t admissible = 0;
    std::uint64_t minimal = 0;
};

namespace detail {

/// Depth of the prefixes used to partition the box into shards.
inline std::size_t shard_depth(const SearchBox& box) { return std::min<std::size_t>(2, box.upper.size()); }

/// Sorted prefixes of length shard_depth, each still viable; their order is
/// the static shard order.
inline std::vector<std::vector<int>> shard_prefixes(const AdmissibilityRules& rules, const SearchBox& box) {
    const std::size_t depth = shard_depth(box);
    const int len = static_cast<int>(box.upper.size());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (cur.size() == depth) {
            out.push_back(cur);
            return;
        }
        const std::size_t i = cur.size();
        for (int v = lo; v <= box.upper[i]; v += rules.step()) {
            cur.push_back(v);
            if (rules.viable(cur, len - static_cast<int>(cur.size()))) self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, rules.step());
    return out;
}

/// Visits every admissible sorted sequence in the box extending `cur`,
/// whose counts are `tally`.
template <class Visit>
void extend_admissible(const AdmissibilityRules& rules, const SearchBox& box, std::vector<int>& cur,
                       const Tally& tally, Visit&& visit) {
    const int len = static_cast<int>(box.upper.size());
    if (static_cast<int>(cur.size()) == len) {
        if (box.accept && !box.accept(cur)) return;
        visit(std::span<const int>(cur));
        return;
    }
    const std::size_t i = cur.size();
    const int remaining = len - static_cast<int>(i) - 1;
    // The last entry must supply every divisibility count still missing.
    const int stride = remaining == 0 ? rules.last_entry_stride(tally) : rules.step();
    int lo = cur.empty() ? rules.step() : cur.back();
    lo = (lo + stride - 1) / stride * stride;
    for (int v = lo; v <= box.upper[i]; v += stride) {
        Tally next = tally;
        rules.add(next, v);
        if (!rules.viable(next, remaining)) continue;
        cur.push_back(v);
        extend_admissible(rules, box, cur, next, visit);
        cur.pop_back();
    }
}

}  // namespace detail

/// Visits each admissible sequence in shard `shard` of `shards`.
template <class Visit>
void for_each_admissible_in_shard(int n, std::size_t shard, std::size_t shards, Visit&& visit) {
    if (shards == 0 || shard >= shards) throw DomainError("shard index out of range");
    const auto& rules = AdmissibilityRules::for_degree(n);
    const SearchBox box = search_box(n);
    const auto prefixes = detail::shard_prefixes(rules, box);
    for (std::size_t p = shard; p < prefixes.size(); p += shards) {
        std::vector<int> cur = prefixes[p];
        Tally tally;
        for (int v : cur) rules.add(tally, v);
        detail::extend_admissible(rules, box, cur, tally, visit);
    }
}

/// Minimal sequences found in one shard of the search box, sorted.
inline std::vector<DegreeSequence> enumerate_minimal_shard(int n, std::size_t shard, std::size_t shards,
                                                           EnumerationStats* stats = nullptr) {
    const auto& rules = AdmissibilityRules::for_degree(n);
    std::vector<DegreeSequence> found;
    EnumerationStats local;
    for_each_admissible_in_shard(n, shard, shards, [&](std::span<const int> seq) {
        ++local.admissible;
        if (!detail::has_reduction(rules, seq)) {
            ++local.minimal;
            found.emplace_back(std::vector<int>(seq.begin(), seq.end()));
        }
    });
    std::sort(found.begin(), found.end());
    if (stats) *stats = local;
    return found;
}

/// Union of shard outputs in canonical order, duplicates removed.
inline std::vector<DegreeSequence> merge_shards(std::vector<std::vector<DegreeSequence>> parts) {
    std::vector<DegreeSequence> all;
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

/// All minimal hsop degree sequences for the binary n-ic, 3 <= n <= 8, found
/// by exhausting the search box split into `shards` parts run through
/// `parallel`. The result does not depend on either.
inline std::vector<DegreeSequence> enumerate_minimal(int n, std::size_t shards = 1,
                                                     const ParallelFor& parallel = sequential_for(),
                                                     EnumerationStats* stats = nullptr) {
    AdmissibilityRules::for_degree(n);
    if (shards == 0) throw DomainError("need at least one shard");
    std::vector<std::vector<DegreeSequence>> parts(shards);
    std::vector<EnumerationStats> part_stats(shards);
    parallel(shards, [&](std::size_t i) { parts[i] = enumerate_minimal_shard(n, i, shards, &part_stats[i]); });
    if (stats) {
        *stats = {};
        for (const auto& s : part_stats) {
            stats->admissible += s.admissible;
            stats->minimal += s.minimal;
        }
    }
    return merge_shards(std::move(parts));
}

// ---------------------------------------------------------------------------
// Numerator scan over the divisibility conditions
// ---------------------------------------------------------------------------

struct ScanObstruction {
    DegreeSequence sequence;
    std::size_t first_negative_exponent = 0;
    bool admissible_known = false;  // an admissibility predicate exists for n
    bool admissible = false;
};

struct ScanReport {
    int n = 0;
    int lower = 0;
    int upper = 0;
    std::uint64_t candidates = 0;        // sorted sequences in range
    std::uint64_t passing_theorem1 = 0;  // numerators computed
    std::uint64_t palindromic = 0;       // numerators that read the same reversed
    std::vector<ScanObstruction> obstructions;
};

/// Computes the numerator for every sorted (n-2)-tuple with entries in
/// [lower, upper] meeting the divisibility conditions and records those with
/// a negative coefficient.
inline ScanReport conjecture_scan(int n, int lower, int upper) {
    if (n < 3) throw DomainError("conjecture_scan needs n >= 3");
    if (lower < 1 || lower > upper) throw DomainError("conjecture_scan needs 1 <= lower <= upper");
    ScanReport report{n, lower, upper};
    const std::size_t len = static_cast<std::size_t>(n - 2);
    const bool classified = n >= 3 && n <= 8;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (cur.size() == len) {
            ++report.candidates;
            DegreeSequence seq(cur);
            if (!theorem1_check(n, seq)) return;
            ++report.passing_theorem1;
            const IntPolynomial num = hsop_numerator(n, seq);
            if (num.is_palindromic()) ++report.palindromic;
            if (auto neg = num.first_negative()) {
                ScanObstruction o{seq, *neg, classified, false};
                if (classified) o.admissible = admissible(n, seq).verdict();
                report.obstructions.push_back(std::move(o));
            }
            return;
        }
        for (int v = lo; v <= upper; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, lower);
    return report;
}

}  // namespace hsop

#pragma once

// Necessary divisibility conditions on the degrees of a homogeneous system
// of parameters for the invariants of a binary n-ic.

#include "hsop/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace hsop {

/// A multiset of positive degrees, stored sorted non-decreasing.
class DegreeSequence {
public:
    DegreeSequence() = default;

    explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
        for (int d : degrees_)
            if (d <= 0) throw DomainError("degrees must be positive, got " + std::to_string(d));
        std::sort(degrees_.begin(), degrees_.end());
    }

    DegreeSequence(std::initializer_list<int> degrees) : DegreeSequence(std::vector<int>(degrees)) {}

    /// Parses `4,8,12` (whitespace around entries is ignored).
    static DegreeSequence parse(const std::string& text) {
        std::vector<int> v;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto b = item.find_first_not_of(" \t");
            const auto e = item.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw DomainError("empty entry in degree list '" + text + "'");
            item = item.substr(b, e - b + 1);
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(item, &used);
            } catch (const std::exception&) {
                throw DomainError("malformed degree '" + item + "'");
            }
            if (used != item.size()) throw DomainError("malformed degree '" + item + "'");
            if (value <= 0 || value > 1'000'000) throw DomainError("degree out of range: " + item);
            v.push_back(static_cast<int>(value));
        }
        if (v.empty()) throw DomainError("empty degree list");
        return DegreeSequence(std::move(v));
    }

    const std::vector<int>& degrees() const { return degrees_; }
    std::size_t size() const { return degrees_.size(); }
    int operator[](std::size_t i) const { return degrees_[i]; }
    auto begin() const { return degrees_.begin(); }
    auto end() const { return degrees_.end(); }

    /// Number of entries divisible by q.
    int count_divisible(int q) const {
        return static_cast<int>(std::count_if(degrees_.begin(), degrees_.end(), [q](int d) { return d % q == 0; }));
    }

    /// Entry-wise multiple e * seq.
    DegreeSequence scaled(int e) const {
        std::vector<int> v = degrees_;
        for (int& d : v) d *= e;
        return DegreeSequence(std::move(v));
    }

    /// Copy with one occurrence of `from` replaced by `to`.
    DegreeSequence replaced(int from, int to) const {
        std::vector<int> v = degrees_;
        auto it = std::find(v.begin(), v.end(), from);
        if (it == v.end()) throw DomainError("entry " + std::to_string(from) + " not in sequence");
        *it = to;
        return DegreeSequence(std::move(v));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(degrees_[i]);
        }
        return s;
    }

    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> degrees_;
};

/// "At least min_count of the degrees are divisible by modulus."
struct DivisibilityRequirement {
    int modulus = 1;
    int min_count = 0;

    friend auto operator<=>(const DivisibilityRequirement&, const DivisibilityRequirement&) = default;
};

struct Violation {
    std::string rule;         // stable machine-readable identifier
    std::string description;  // human-readable
    std::vector<int> witnesses;
};

/// Verdict of a predicate together with every clause it violated.
struct AdmissibilityReport {
    std::vector<Violation> violations;

    bool verdict() const { return violations.empty(); }
    explicit operator bool() const { return verdict(); }

    bool violates(const std::string& rule) const {
        return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
    }
};

/// d (n - 2j) / 2 == 0 (mod t), evaluated as d (n - 2j) == 0 (mod 2t).
inline bool lemma1_congruence(int n, int j, int t, long long d) {
    if (t <= 0) throw DomainError("modulus t must be positive");
    const long long two_t = 2LL * t;
    long long r = (d % two_t) * ((static_cast<long long>(n) - 2LL * j) % two_t) % two_t;
    return r == 0;
}

/// Lower bound on how many hsop degrees a single modulus must divide, taken
/// at the smallest admissible offset j.
inline DivisibilityRequirement lemma3_requirement(int n, int t) {
    if (n < 3) throw DomainError("lemma3_requirement needs n >= 3");
    if (t <= 1) throw DomainError("lemma3_requirement needs t > 1");
    if (n % 2 == 1) {
        for (int j = 0; j <= n; ++j) {
            if (std::gcd(n - 2 * j, t) == 1) return {2 * t, (n - j) / t};
        }
    } else {
        for (int j = 0; j <= n / 2; ++j) {
            if (std::gcd(n / 2 - j, t) == 1) return {t, (n - j) / t};
        }
    }
    throw InternalInconsistency("no offset j with the required coprimality");
}

/// The divisibility requirements every hsop degree sequence satisfies, one
/// per modulus (same-modulus clauses merged by taking the larger count),
/// sorted by modulus.
inline std::vector<DivisibilityRequirement> theorem1_requirements(int n) {
    if (n < 3) throw DomainError("theorem1_requirements needs n >= 3");
    std::map<int, int> by_modulus;
    auto add = [&](int q, int c) {
        if (c <= 0) return;
        auto [it, inserted] = by_modulus.emplace(q, c);
        if (!inserted) it->second = std::max(it->second, c);
    };
    const bool odd = n % 2 == 1;
    for (int t = 2; t <= n - 1; ++t) add(odd ? 2 * t : t, (n - 1) / t);
    if (odd) add(2, n - 2);
    if (n % 4 == 2) add(2, n / 2);
    std::vector<DivisibilityRequirement> out;
    for (auto [q, c] : by_modulus) out.push_back({q, c});
    return out;
}

struct RequirementTally {
    DivisibilityRequirement requirement;
    int have = 0;
    bool ok() const { return have >= requirement.min_count; }
};

/// How many entries of seq meet each requirement. Entries are counted
/// independently for each modulus.
inline std::vector<RequirementTally> theorem1_tally(int n, const DegreeSequence& seq) {
    std::vector<RequirementTally> out;
    for (const auto& r : theorem1_requirements(n)) out.push_back({r, seq.count_divisible(r.modulus)});
    return out;
}

inline std::string theorem1_rule_id(int modulus) { return "thm1.mod_" + std::to_string(modulus); }

inline AdmissibilityReport theorem1_check(int n, const DegreeSequence& seq) {
    AdmissibilityReport report;
    for (const auto& tally : theorem1_tally(n, seq)) {
        if (tally.ok()) continue;
        std::vector<int> witnesses;
        for (int d : seq)
            if (d % tally.requirement.modulus == 0) witnesses.push_back(d);
        report.violations.push_back({theorem1_rule_id(tally.requirement.modulus),
                                     "at least " + std::to_string(tally.requirement.min_count) +
                                         " degrees divisible by " + std::to_string(tally.requirement.modulus) +
                                         ", found " + std::to_string(tally.have),
                                     std::move(witnesses)});
    }
    return report;
}

/// One line per requirement: `mod <q>: need <c>, have <k>, OK|FAIL`.
inline std::string render_tally(const std::vector<RequirementTally>& tallies) {
    std::ostringstream out;
    for (const auto& t : tallies) {
        out << "mod " << t.requirement.modulus << ": need " << t.requirement.min_count << ", have " << t.have << ", "
            << (t.ok() ? "OK" : "FAIL") << '\n';
    }
    return out.str();
}

}  // namespace hsop

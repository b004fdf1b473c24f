#pragma once

// Command-line front end. dispatch() does all the work and returns the
// streams as strings so tests can call it in-process; tools/hsop.cpp is a
// thin wrapper around it.
//
// Exit codes: 0 ok, 2 usage error, 3 false verdict under --assert,
// 4 internal inconsistency.

#include "hsop/catalog.hpp"
#include "hsop/classifier.hpp"
#include "hsop/combinatorics.hpp"
#include "hsop/parallel.hpp"
#include "hsop/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace hsop::cli {

enum ExitCode : int { ok = 0, usage = 2, assertion = 3, internal = 4 };

struct CommandResult {
    int exit_code = ok;
    std::string out;
    std::string err;
};

namespace detail {

using json = nlohmann::json;

inline std::string str(const Integer& v) { return hsop::to_string(v); }
inline std::string str(const Rational& v) { return hsop::to_string(v); }
inline std::string str(long long v) { return std::to_string(v); }

inline json degrees_json(const DegreeSequence& s) {
    json a = json::array();
    for (int d : s) a.push_back(std::to_string(d));
    return a;
}

inline json coefficients_json(const std::vector<Integer>& c) {
    json a = json::array();
    for (const auto& v : c) a.push_back(str(v));
    return a;
}

inline json form_json(const BinaryForm& f) {
    json a = json::array();
    for (const auto& c : f.coefficients()) a.push_back(str(c));
    return json{{"degree", std::to_string(f.degree())}, {"coefficients", a}};
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

/// Sequences from --degrees, or one per non-empty line of the input stream.
inline std::vector<DegreeSequence> read_sequences(const std::vector<std::string>& given, std::istream* in) {
    std::vector<DegreeSequence> out;
    for (const auto& g : given) out.push_back(DegreeSequence::parse(g));
    if (!given.empty()) return out;
    if (!in) throw DomainError("no sequences given (use --degrees or standard input)");
    for (std::string line; std::getline(*in, line);) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        out.push_back(DegreeSequence::parse(line));
    }
    if (out.empty()) throw DomainError("no sequences on standard input");
    return out;
}

inline std::vector<DegreeSequence> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::vector<DegreeSequence> out;
    for (std::string line; std::getline(in, line);) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') out.push_back(DegreeSequence::parse(line));
    }
    return out;
}

inline std::string joined_rules(const AdmissibilityReport& r) {
    std::string s;
    for (const auto& v : r.violations) s += (s.empty() ? "" : ",") + v.rule;
    return s;
}

struct Options {
    bool json = false;
    bool assert_verdict = false;
    bool binomial = false;
    int n = 0;
    int m = 0;
    int a = 0;
    int n_max = 18;
    int m_max = 18;
    int order = 30;
    int k = 0;
    int lower = 2;
    int upper = 20;
    bool pairs = false;
    bool stats = false;
    bool list = false;
    std::vector<std::string> degrees;
    std::size_t shards = 0;
    long shard = -1;
    unsigned workers = default_workers();
    std::vector<std::string> merge;
    std::string form;
    std::string other;
    std::string chain;
    std::string name;
};

class Runner {
public:
    Runner(const Options& o, std::istream* in) : o_(o), in_(in) {}

    std::ostringstream out;
    bool verdict = true;

    void line(const std::string& text) { out << text << '\n'; }
    void emit(const json& j) { out << j.dump() << '\n'; }

    Convention convention() const { return o_.binomial ? Convention::binomial : Convention::plain; }

    void dims() {
        const Integer h = covariant_dim(o_.n, o_.m, o_.a);
        if (o_.json) {
            emit({{"n", str(o_.n)}, {"m", str(o_.m)}, {"a", str(o_.a)}, {"dim", str(h)}});
        } else {
            line(str(h));
        }
    }

    void table() {
        if (o_.n_max < 1 || o_.m_max < 1) throw DomainError("table needs --n-max and --m-max >= 1");
        if (!o_.json) {
            out << invariant_table_tsv(o_.n_max, o_.m_max);
            return;
        }
        for (int m = 1; m <= o_.m_max; ++m) {
            json row = json::array();
            for (int n = 1; n <= o_.n_max; ++n) row.push_back(str(invariant_dim(n, m)));
            emit({{"m", str(m)}, {"h", row}});
        }
    }

    void poincare() {
        if (o_.n < 1 || o_.order < 0) throw DomainError("poincare needs --n >= 1 and --order >= 0");
        const TruncatedSeries s = poincare_series(o_.n, static_cast<std::size_t>(o_.order));
        const IntPolynomial p = s.as_polynomial();
        if (o_.json) {
            emit({{"n", str(o_.n)}, {"order", str(o_.order)}, {"coefficients", coefficients_json(s.coefficients())}});
            return;
        }
        line(p.to_string());
        if (o_.pairs) line(p.to_pairs());
    }

    void numerator() {
        for (const auto& seq : read_sequences(o_.degrees, in_)) {
            const IntPolynomial p = hsop_numerator(o_.n, seq);
            const auto neg = first_negative(p);
            if (neg) verdict = false;
            if (o_.json) {
                json j{{"n", str(o_.n)},
                       {"degrees", degrees_json(seq)},
                       {"numerator", p.to_pairs()},
                       {"nonnegative", !neg},
                       {"palindromic", p.is_palindromic()}};
                j["first_negative"] = neg ? json(std::to_string(*neg)) : json(nullptr);
                emit(j);
                continue;
            }
            line(p.to_string());
            if (o_.pairs) line(p.to_pairs());
        }
    }

    void check() {
        const auto seqs = read_sequences(o_.degrees, in_);
        for (const auto& seq : seqs) {
            const auto tallies = theorem1_tally(o_.n, seq);
            bool pass = true;
            for (const auto& t : tallies) pass = pass && t.ok();
            if (!pass) verdict = false;
            if (o_.json) {
                json reqs = json::array();
                for (const auto& t : tallies) {
                    reqs.push_back({{"modulus", str(t.requirement.modulus)},
                                    {"need", str(t.requirement.min_count)},
                                    {"have", str(t.have)},
                                    {"ok", t.ok()}});
                }
                emit({{"n", str(o_.n)}, {"degrees", degrees_json(seq)}, {"pass", pass}, {"requirements", reqs}});
                continue;
            }
            if (seqs.size() > 1) line(seq.to_string() + ":");
            out << render_tally(tallies);
        }
    }

    void admissible_cmd() {
        for (const auto& seq : read_sequences(o_.degrees, in_)) {
            const AdmissibilityReport r = admissible(o_.n, seq);
            if (!r.verdict()) verdict = false;
            if (o_.json) {
                json v = json::array();
                for (const auto& x : r.violations) {
                    json w = json::array();
                    for (int d : x.witnesses) w.push_back(std::to_string(d));
                    v.push_back({{"rule", x.rule}, {"description", x.description}, {"witnesses", w}});
                }
                emit({{"n", str(o_.n)}, {"degrees", degrees_json(seq)}, {"admissible", r.verdict()}, {"violations", v}});
                continue;
            }
            if (r.verdict()) {
                line(seq.to_string() + ": admissible");
            } else {
                line(seq.to_string() + ": rejected " + joined_rules(r));
            }
        }
    }

    void minimal() {
        for (const auto& seq : read_sequences(o_.degrees, in_)) {
            const AdmissibilityReport r = admissible(o_.n, seq);
            std::optional<ReductionWitness> w;
            if (r.verdict()) w = find_reduction(o_.n, seq);
            const bool is_min = r.verdict() && !w;
            if (!is_min) verdict = false;
            if (o_.json) {
                json j{{"n", str(o_.n)}, {"degrees", degrees_json(seq)}, {"admissible", r.verdict()}, {"minimal", is_min}};
                if (w) {
                    j["reduction"] = {{"entry", str(w->entry)},
                                      {"left", str(w->left)},
                                      {"right", str(w->right)},
                                      {"left_sequence", degrees_json(w->left_sequence)},
                                      {"right_sequence", degrees_json(w->right_sequence)}};
                }
                emit(j);
                continue;
            }
            if (!r.verdict()) {
                line(seq.to_string() + ": not admissible " + joined_rules(r));
            } else if (w) {
                line(seq.to_string() + ": reducible " + std::to_string(w->entry) + "=" + std::to_string(w->left) + "+" +
                     std::to_string(w->right) + " via " + w->left_sequence.to_string() + " and " +
                     w->right_sequence.to_string());
            } else {
                line(seq.to_string() + ": minimal");
            }
        }
    }

    void enumerate() {
        std::vector<DegreeSequence> result;
        EnumerationStats st;
        if (!o_.merge.empty()) {
            std::vector<std::vector<DegreeSequence>> parts;
            for (const auto& path : o_.merge) parts.push_back(read_sequence_file(path));
            result = merge_shards(std::move(parts));
        } else if (o_.shard >= 0) {
            if (o_.shards == 0) throw DomainError("--shard needs --shards");
            if (static_cast<std::size_t>(o_.shard) >= o_.shards) throw DomainError("--shard must be below --shards");
            result = enumerate_minimal_shard(o_.n, static_cast<std::size_t>(o_.shard), o_.shards, &st);
        } else {
            const std::size_t shards = o_.shards ? o_.shards : std::max<std::size_t>(1, 8 * std::size_t{o_.workers});
            result = enumerate_minimal(o_.n, shards, thread_pool_for(o_.workers), &st);
        }
        for (const auto& seq : result) {
            if (o_.json) {
                emit({{"n", str(o_.n)}, {"degrees", degrees_json(seq)}});
            } else {
                line(seq.to_string());
            }
        }
        if (o_.stats && o_.merge.empty()) {
            std::cerr << "admissible " << st.admissible << ", minimal " << st.minimal << '\n';
        }
    }

    void scan() {
        const ScanReport r = conjecture_scan(o_.n, o_.lower, o_.upper);
        if (!r.obstructions.empty()) verdict = false;
        auto status = [](const ScanObstruction& o) {
            return o.admissible_known ? (o.admissible ? "admissible" : "rejected") : "unclassified";
        };
        if (o_.json) {
            json obs = json::array();
            for (const auto& o : r.obstructions) {
                obs.push_back({{"degrees", degrees_json(o.sequence)},
                               {"first_negative", std::to_string(o.first_negative_exponent)},
                               {"classifier", status(o)}});
            }
            emit({{"n", str(o_.n)},
                  {"lower", str(o_.lower)},
                  {"upper", str(o_.upper)},
                  {"candidates", std::to_string(r.candidates)},
                  {"passing_theorem1", std::to_string(r.passing_theorem1)},
                  {"palindromic", std::to_string(r.palindromic)},
                  {"obstructions", obs}});
            return;
        }
        line("candidates " + std::to_string(r.candidates));
        line("passing divisibility " + std::to_string(r.passing_theorem1));
        line("palindromic numerators " + std::to_string(r.palindromic));
        line("obstructions " + std::to_string(r.obstructions.size()));
        for (const auto& o : r.obstructions) {
            line(o.sequence.to_string() + ": negative at t^" + std::to_string(o.first_negative_exponent) + " (" +
                 status(o) + ")");
        }
    }

    void transvect() {
        const BinaryForm g = BinaryForm::parse(o_.form, convention());
        const BinaryForm h = o_.other.empty() ? g : BinaryForm::parse(o_.other, convention());
        const BinaryForm r = hsop::transvectant(g, h, o_.k);
        print_form(r);
    }

    void nullform() {
        const BinaryForm f = BinaryForm::parse(o_.form, convention());
        const int mult = max_root_multiplicity(f);
        const bool is_null = is_nullform(f);
        if (!is_null) verdict = false;
        if (o_.json) {
            emit({{"form", form_json(f)}, {"max_multiplicity", str(mult)}, {"nullform", is_null}});
        } else {
            line("max multiplicity " + std::to_string(mult) + ", " + (is_null ? "nullform" : "not a nullform"));
        }
    }

    void eval_invariant() {
        if (o_.list) {
            for (const auto& e : invariant_catalog()) {
                if (o_.n && e.n != o_.n) continue;
                if (o_.json) {
                    emit({{"n", str(e.n)}, {"name", e.name}, {"chain", e.chain}, {"degree", str(e.degree)},
                          {"order", str(e.order)}});
                } else {
                    line(std::to_string(e.n) + "\t" + e.name + "\t" + std::to_string(e.degree) + "\t" +
                         std::to_string(e.order) + "\t" + e.chain);
                }
            }
            return;
        }
        const BinaryForm f = BinaryForm::parse(o_.form, convention());
        InvariantChain chain = InvariantChain::form();
        if (!o_.name.empty()) {
            const CatalogEntry* e = find_catalog_entry(f.degree(), o_.name);
            if (!e) throw DomainError("no catalog entry '" + o_.name + "' for n=" + std::to_string(f.degree()));
            chain = e->parse();
        } else if (!o_.chain.empty()) {
            chain = InvariantChain::parse(o_.chain);
        } else {
            throw DomainError("eval-invariant needs --chain, --name or --list");
        }
        print_form(evaluate_chain(chain, f));
    }

private:
    void print_form(const BinaryForm& r) {
        if (o_.json) {
            emit({{"result", form_json(r)}, {"text", r.to_polynomial_string()}});
        } else if (r.degree() == 0) {
            line(str(r.scalar()));
        } else {
            line(r.to_string());
        }
    }

    const Options& o_;
    std::istream* in_;
};

}  // namespace detail

/// Runs one command line (without the program name). `in` supplies sequences
/// for commands that read them when --degrees is absent.
inline CommandResult dispatch(std::vector<std::string> args, std::istream* in = nullptr) {
    using detail::Options;
    CommandResult result;
    Options o;
    CLI::App app{"Invariant dimensions, hsop degree sequences and binary forms"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* s) {
        s->add_flag("--json", o.json, "One JSON object per result line");
        s->add_flag("--assert", o.assert_verdict, "Exit 3 when a verdict is false");
    };
    auto need_n = [&](CLI::App* s) { s->add_option("--n", o.n, "Degree of the form")->required(); };
    auto degrees = [&](CLI::App* s) {
        s->add_option("--degrees", o.degrees, "Degree sequence such as 4,8,12 (repeatable; else read stdin)");
    };
    auto form = [&](CLI::App* s) {
        s->add_option("--form", o.form, "Form as 'n: c0,c1,...,cn'")->required();
        s->add_flag("--binomial", o.binomial, "Coefficients are given with binomial weights");
    };

    std::vector<std::pair<CLI::App*, void (detail::Runner::*)()>> commands;
    auto sub = [&](const char* name, const char* help, void (detail::Runner::*fn)()) {
        CLI::App* s = app.add_subcommand(name, help);
        common(s);
        commands.emplace_back(s, fn);
        return s;
    };

    auto* dims = sub("dims", "Dimension of covariants of degree m and order a", &detail::Runner::dims);
    need_n(dims);
    dims->add_option("--m", o.m, "Degree in the coefficients")->required();
    dims->add_option("--a", o.a, "Order (0 for invariants)");

    auto* table = sub("table", "Invariant dimensions as TSV, rows m and columns n", &detail::Runner::table);
    table->add_option("--n-max", o.n_max);
    table->add_option("--m-max", o.m_max);

    auto* poincare = sub("poincare", "Poincare series up to a given order", &detail::Runner::poincare);
    need_n(poincare);
    poincare->add_option("--order", o.order);
    poincare->add_flag("--pairs", o.pairs, "Also print exponent:coefficient pairs");

    auto* numerator = sub("numerator", "Numerator over prod(1 - t^d)", &detail::Runner::numerator);
    need_n(numerator);
    degrees(numerator);
    numerator->add_flag("--pairs", o.pairs, "Also print exponent:coefficient pairs");

    auto* check = sub("check", "Divisibility conditions", &detail::Runner::check);
    need_n(check);
    degrees(check);

    auto* adm = sub("admissible", "Exact hsop degree predicate for 3 <= n <= 8", &detail::Runner::admissible_cmd);
    need_n(adm);
    degrees(adm);

    auto* minimal = sub("minimal", "Minimality with a reduction witness", &detail::Runner::minimal);
    need_n(minimal);
    degrees(minimal);

    auto* en = sub("enumerate", "All minimal degree sequences", &detail::Runner::enumerate);
    need_n(en);
    en->add_option("--shards", o.shards, "Number of shards");
    en->add_option("--shard", o.shard, "Run only this shard");
    en->add_option("--workers", o.workers, "Worker threads");
    en->add_option("--merge", o.merge, "Merge shard output files instead of searching");
    en->add_flag("--stats", o.stats, "Print search counts on stderr");

    auto* scan = sub("scan", "Numerator signs over all sequences in a range", &detail::Runner::scan);
    need_n(scan);
    scan->add_option("--lower", o.lower, "Smallest degree tried (default 2)");
    scan->add_option("--upper", o.upper, "Largest degree tried (default 20)");

    auto* tv = sub("transvect", "Transvectant (g,h)_k", &detail::Runner::transvect);
    form(tv);
    tv->add_option("--with", o.other, "Second form (default: the first)");
    tv->add_option("--k", o.k, "Transvectant index")->required();

    auto* nf = sub("nullform", "Largest root multiplicity and nullcone membership", &detail::Runner::nullform);
    form(nf);

    auto* ev = sub("eval-invariant", "Evaluate a transvectant chain", &detail::Runner::eval_invariant);
    ev->add_option("--form", o.form, "Form as 'n: c0,c1,...,cn'");
    ev->add_flag("--binomial", o.binomial, "Coefficients are given with binomial weights");
    ev->add_option("--chain", o.chain, "Chain such as ((f,f)_2,(f,f)_2)_4");
    ev->add_option("--name", o.name, "Catalog entry name");
    ev->add_flag("--list", o.list, "List catalog entries (for --n if given)");
    ev->add_option("--n", o.n, "Restrict --list to this n");

    std::reverse(args.begin(), args.end());
    std::ostringstream err;
    try {
        app.parse(args);
    } catch (const CLI::Success& e) {
        std::ostringstream help;
        app.exit(e, help, err);
        result.out = help.str();
        result.exit_code = ok;
        return result;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::ostringstream help;
            app.exit(e, help, err);
            result.out = help.str();
            return result;
        }
        std::string msg = e.what();
        if (auto nl = msg.find('\n'); nl != std::string::npos) msg = msg.substr(0, nl);
        result.err = "hsop: " + msg + "\n";
        result.exit_code = usage;
        return result;
    }

    detail::Runner runner(o, in);
    try {
        for (const auto& [s, fn] : commands) {
            if (s->parsed()) (runner.*fn)();
        }
    } catch (const InternalInconsistency& e) {
        result.err = std::string("hsop: internal inconsistency: ") + e.what() + "\n";
        result.exit_code = internal;
        result.out = runner.out.str();
        return result;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        if (auto nl = msg.find('\n'); nl != std::string::npos) msg = msg.substr(0, nl);
        result.err = "hsop: " + msg + "\n";
        result.exit_code = usage;
        return result;
    }
    result.out = runner.out.str();
    result.exit_code = (o.assert_verdict && !runner.verdict) ? assertion : ok;
    return result;
}

}  // namespace hsop::cli

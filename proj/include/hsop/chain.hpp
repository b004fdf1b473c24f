#pragma once

// Covariants and invariants built from a form f by nested transvectants.
//
// Text syntax (also produced by to_string):
//
//     expr    := product
//     product := power ('*' power)*          g*h is (g,h)_0
//     power   := atom ('^' integer)?
//     atom    := 'f' | rational | '(' expr ',' expr ')' '_' integer | '(' expr ')'
//
// A rational literal in a product scales the rest of it. Example: the degree
// 12 septimic invariant (psi_1, psi^5)_10 with psi = (f,f)_6 and
// psi_1 = (f,f)_2 is written `((f,f)_2,(f,f)_6^5)_10`.

#include "hsop/forms.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hsop {

class InvariantChain {
public:
    enum class Kind { form, transvectant, scale };

    /// The input form f.
    static InvariantChain form() { return InvariantChain(std::make_shared<Node>(Node{Kind::form})); }

    static InvariantChain transvectant(const InvariantChain& g, const InvariantChain& h, int k) {
        if (k < 0) throw DomainError("transvectant index must be non-negative");
        Node node{Kind::transvectant};
        node.left = g.root_;
        node.right = h.root_;
        node.k = k;
        return InvariantChain(std::make_shared<Node>(std::move(node)));
    }

    static InvariantChain product(const InvariantChain& g, const InvariantChain& h) { return transvectant(g, h, 0); }

    /// g^e as a product tree that shares repeated squares.
    static InvariantChain power(const InvariantChain& g, int e) {
        if (e < 1) throw DomainError("chain powers must be >= 1");
        if (e == 1) return g;
        const InvariantChain half = power(g, e / 2);
        const InvariantChain sq = product(half, half);
        sq.root_->power_of = e % 2 == 0 ? g.root_ : nullptr;
        sq.root_->exponent = e % 2 == 0 ? e : 0;
        if (e % 2 == 0) return sq;
        InvariantChain out = product(sq, g);
        out.root_->power_of = g.root_;
        out.root_->exponent = e;
        return out;
    }

    static InvariantChain scale(const Rational& c, const InvariantChain& g) {
        Node node{Kind::scale};
        node.left = g.root_;
        node.factor = c;
        return InvariantChain(std::make_shared<Node>(std::move(node)));
    }

    /// Degree in the coefficients of f.
    int degree() const { return degree_of(*root_); }

    /// Order (degree in x, y) when applied to a form of degree n.
    int order(int n) const { return order_of(*root_, n); }

    /// Checks every transvectant index against the orders of its arguments.
    bool well_formed(int n) const { return well_formed_at(*root_, n); }

    /// Evaluates the tree on f. Shared subtrees are computed once.
    BinaryForm evaluate(const BinaryForm& f) const {
        std::map<const Node*, BinaryForm> memo;
        return eval(*root_, f, memo);
    }

    std::string to_string() const { return print(*root_, false); }

    /// Parses the text syntax above; throws DomainError on malformed input.
    static InvariantChain parse(const std::string& text);

private:
    struct Node {
        Kind kind;
        std::shared_ptr<Node> left;
        std::shared_ptr<Node> right;
        int k = 0;
        Rational factor{1};
        // Set when this product node is power_of^exponent, for printing.
        std::shared_ptr<Node> power_of;
        int exponent = 0;
    };

    explicit InvariantChain(std::shared_ptr<Node> root) : root_(std::move(root)) {}

    static int degree_of(const Node& node) {
        switch (node.kind) {
        case Kind::form: return 1;
        case Kind::transvectant: return degree_of(*node.left) + degree_of(*node.right);
        case Kind::scale: return degree_of(*node.left);
        }
        return 0;
    }

    static int order_of(const Node& node, int n) {
        switch (node.kind) {
        case Kind::form: return n;
        case Kind::transvectant: return order_of(*node.left, n) + order_of(*node.right, n) - 2 * node.k;
        case Kind::scale: return order_of(*node.left, n);
        }
        return 0;
    }

    static bool well_formed_at(const Node& node, int n) {
        switch (node.kind) {
        case Kind::form: return n >= 0;
        case Kind::transvectant:
            return well_formed_at(*node.left, n) && well_formed_at(*node.right, n) &&
                   node.k <= order_of(*node.left, n) && node.k <= order_of(*node.right, n);
        case Kind::scale: return well_formed_at(*node.left, n);
        }
        return false;
    }

    static BinaryForm eval(const Node& node, const BinaryForm& f, std::map<const Node*, BinaryForm>& memo) {
        if (node.kind == Kind::form) return f;
        if (auto it = memo.find(&node); it != memo.end()) return it->second;
        BinaryForm out;
        if (node.kind == Kind::scale) {
            out = node.factor * eval(*node.left, f, memo);
        } else {
            const BinaryForm g = eval(*node.left, f, memo);
            const BinaryForm h = eval(*node.right, f, memo);
            out = node.k == 0 ? g * h : hsop::transvectant(g, h, node.k);
        }
        memo.emplace(&node, out);
        return out;
    }

    static std::string print(const Node& node, bool in_product) {
        switch (node.kind) {
        case Kind::form: return "f";
        case Kind::scale: return hsop::to_string(node.factor) + "*" + print(*node.left, true);
        case Kind::transvectant:
            if (node.power_of) {
                const Node& base = *node.power_of;
                const bool atomic = base.kind == Kind::form || (base.kind == Kind::transvectant && base.k > 0);
                const std::string b = atomic ? print(base, false) : "(" + print(base, false) + ")";
                return b + "^" + std::to_string(node.exponent);
            }
            if (node.k == 0) {
                std::string s = print(*node.left, true) + "*" + print(*node.right, true);
                return in_product ? "(" + s + ")" : s;
            }
            return "(" + print(*node.left, false) + "," + print(*node.right, false) + ")_" + std::to_string(node.k);
        }
        return "?";
    }

    friend class ChainParser;
    std::shared_ptr<Node> root_;
};

class ChainParser {
public:
    explicit ChainParser(std::string text) : text_(std::move(text)) {}

    InvariantChain parse() {
        InvariantChain c = product();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return c;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("chain syntax error at offset " + std::to_string(pos_) + ": " + what + " in '" + text_ + "'");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 6) fail("integer too large");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    InvariantChain product() {
        std::vector<Rational> factors;
        std::vector<InvariantChain> terms;
        do {
            skip();
            if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
                factors.push_back(rational());
            } else {
                terms.push_back(power());
            }
        } while (eat('*'));
        if (terms.empty()) fail("a product needs at least one chain factor");
        InvariantChain out = terms.front();
        for (std::size_t i = 1; i < terms.size(); ++i) out = InvariantChain::product(out, terms[i]);
        Rational c(1);
        for (const auto& r : factors) c *= r;
        if (!factors.empty()) out = InvariantChain::scale(c, out);
        return out;
    }

    Rational rational() {
        skip();
        const std::size_t start = pos_;
        if (text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        return parse_rational(text_.substr(start, pos_ - start));
    }

    InvariantChain power() {
        InvariantChain base = atom();
        if (eat('^')) return InvariantChain::power(base, integer());
        return base;
    }

    InvariantChain atom() {
        if (eat('f')) return InvariantChain::form();
        if (!eat('(')) fail("expected 'f' or '('");
        InvariantChain first = product();
        if (eat(')')) return first;
        if (!eat(',')) fail("expected ',' or ')'");
        InvariantChain second = product();
        if (!eat(')')) fail("expected ')'");
        if (!eat('_')) fail("expected '_' after a transvectant pair");
        return InvariantChain::transvectant(first, second, integer());
    }

    std::string text_;
    std::size_t pos_ = 0;
};

inline InvariantChain InvariantChain::parse(const std::string& text) { return ChainParser(text).parse(); }

/// evaluate_chain with the bookkeeping checked first.
inline BinaryForm evaluate_chain(const InvariantChain& chain, const BinaryForm& f) {
    if (!chain.well_formed(f.degree())) {
        throw OrderTooHigh("chain " + chain.to_string() + " has a transvectant index above an argument order for n=" +
                           std::to_string(f.degree()));
    }
    return chain.evaluate(f);
}

}  // namespace hsop

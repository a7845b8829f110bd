#pragma once

// Integer Heisenberg group H_n(Z): elements (k, l, m), words in the
// generators a_j = (e_j, 0, 0), b_j = (0, e_j, 0), c = (0, 0, 1), and the
// normal form a_1^k_1 ... a_n^k_n b_1^l_1 ... b_n^l_n c^m.
//
// All arithmetic is checked 64-bit; overflow raises OverflowError.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heis/error.hpp"

namespace heis {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
    return s;
}

}  // namespace checked

class LatticeElement {
public:
    /// Identity of H_n(Z).
    explicit LatticeElement(std::size_t n) : k_(n, 0), l_(n, 0), m_(0) {
        if (n == 0) throw DimensionError("lattice element needs n >= 1");
    }

    LatticeElement(std::vector<Int> k, std::vector<Int> l, Int m)
        : k_(std::move(k)), l_(std::move(l)), m_(m) {
        if (k_.empty()) throw DimensionError("lattice element needs n >= 1");
        if (k_.size() != l_.size())
            throw DimensionError("k and l blocks differ in length: " + std::to_string(k_.size()) +
                                 " vs " + std::to_string(l_.size()));
    }

    std::size_t dim() const noexcept { return k_.size(); }
    const std::vector<Int>& k() const noexcept { return k_; }
    const std::vector<Int>& l() const noexcept { return l_; }
    Int m() const noexcept { return m_; }

    bool is_identity() const noexcept {
        if (m_ != 0) return false;
        for (std::size_t i = 0; i < k_.size(); ++i)
            if (k_[i] != 0 || l_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const LatticeElement&, const LatticeElement&) = default;

private:
    std::vector<Int> k_;
    std::vector<Int> l_;
    Int m_;
};

/// (k, l, m)(k', l', m') = (k + k', l + l', m + m' + k' . l)
inline LatticeElement mul(const LatticeElement& g, const LatticeElement& h) {
    if (g.dim() != h.dim())
        throw DimensionError("dimension mismatch: " + std::to_string(g.dim()) + " vs " +
                             std::to_string(h.dim()));
    const std::size_t n = g.dim();
    std::vector<Int> k(n), l(n);
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = checked::add(g.k()[i], h.k()[i]);
        l[i] = checked::add(g.l()[i], h.l()[i]);
    }
    Int m = checked::add(checked::add(g.m(), h.m()), checked::dot(h.k(), g.l()));
    return {std::move(k), std::move(l), m};
}

/// (-k, -l, -m + k . l)
inline LatticeElement inverse(const LatticeElement& g) {
    const std::size_t n = g.dim();
    std::vector<Int> k(n), l(n);
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = checked::neg(g.k()[i]);
        l[i] = checked::neg(g.l()[i]);
    }
    return {std::move(k), std::move(l), checked::add(checked::neg(g.m()), checked::dot(g.k(), g.l()))};
}

enum class GeneratorKind { A, B, C };

struct GeneratorToken {
    GeneratorKind kind;
    std::size_t index;  // 1-based; 0 for C
    Int exponent;       // never 0

    friend bool operator==(const GeneratorToken&, const GeneratorToken&) = default;
};

class Word {
public:
    explicit Word(std::size_t n) : n_(n) {
        if (n == 0) throw DimensionError("word needs n >= 1");
    }

    Word(std::size_t n, std::vector<GeneratorToken> tokens) : n_(n), tokens_(std::move(tokens)) {
        if (n == 0) throw DimensionError("word needs n >= 1");
        for (std::size_t i = 0; i < tokens_.size(); ++i) validate(tokens_[i], i);
    }

    std::size_t dim() const noexcept { return n_; }
    const std::vector<GeneratorToken>& tokens() const noexcept { return tokens_; }
    bool empty() const noexcept { return tokens_.empty(); }

    void push_back(GeneratorToken tok) {
        validate(tok, tokens_.size());
        tokens_.push_back(tok);
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    void validate(const GeneratorToken& tok, std::size_t pos) const {
        if (tok.exponent == 0) throw ParameterError("zero exponent in token " + std::to_string(pos));
        if (tok.kind == GeneratorKind::C) {
            if (tok.index != 0) throw ParameterError("generator c takes no index");
        } else if (tok.index < 1 || tok.index > n_) {
            throw IndexRangeError("generator index " + std::to_string(tok.index) +
                                      " outside [1, " + std::to_string(n_) + "]",
                                  pos);
        }
    }

    std::size_t n_;
    std::vector<GeneratorToken> tokens_;
};

inline GeneratorToken gen_a(std::size_t j, Int e = 1) { return {GeneratorKind::A, j, e}; }
inline GeneratorToken gen_b(std::size_t j, Int e = 1) { return {GeneratorKind::B, j, e}; }
inline GeneratorToken gen_c(Int e = 1) { return {GeneratorKind::C, 0, e}; }

/// The group element denoted by a single token. Powers of one generator
/// never pick up a central term since a_j has y = 0 and b_j has x = 0.
inline LatticeElement token_value(const GeneratorToken& tok, std::size_t n) {
    std::vector<Int> k(n, 0), l(n, 0);
    Int m = 0;
    switch (tok.kind) {
        case GeneratorKind::A: k[tok.index - 1] = tok.exponent; break;
        case GeneratorKind::B: l[tok.index - 1] = tok.exponent; break;
        case GeneratorKind::C: m = tok.exponent; break;
    }
    return {std::move(k), std::move(l), m};
}

/// Left-to-right product of the tokens of w.
inline LatticeElement evaluate_word(const Word& w) {
    LatticeElement acc(w.dim());
    for (const auto& tok : w.tokens()) acc = mul(acc, token_value(tok, w.dim()));
    return acc;
}

/// Reads the exponents straight off the triple; zero exponents are omitted.
inline Word normal_form(const LatticeElement& g) {
    Word w(g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j)
        if (g.k()[j] != 0) w.push_back(gen_a(j + 1, g.k()[j]));
    for (std::size_t j = 0; j < g.dim(); ++j)
        if (g.l()[j] != 0) w.push_back(gen_b(j + 1, g.l()[j]));
    if (g.m() != 0) w.push_back(gen_c(g.m()));
    return w;
}

inline Word normalize_word(const Word& w) { return normal_form(evaluate_word(w)); }

// ---------------------------------------------------------------------------
// Word text: word := "" | term (" " term)* ; term := gen ("^" int)? ;
// gen := "a"int | "b"int | "c"

namespace detail {

inline bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; }

inline bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

}  // namespace detail

inline Word parse_word(std::string_view text, std::size_t n) {
    using detail::is_digit;
    using detail::is_space;
    Word w(n);
    std::size_t pos = 0;
    const std::size_t len = text.size();
    auto skip_ws = [&] {
        while (pos < len && is_space(text[pos])) ++pos;
    };

    skip_ws();
    while (pos < len) {
        const char g = text[pos];
        GeneratorToken tok{GeneratorKind::C, 0, 1};
        if (g == 'a' || g == 'b') {
            tok.kind = g == 'a' ? GeneratorKind::A : GeneratorKind::B;
            ++pos;
            const std::size_t digits = pos;
            while (pos < len && is_digit(text[pos])) ++pos;
            if (pos == digits) throw ParseError("expected generator index after '" + std::string(1, g) + "'", pos);
            std::uint64_t idx = 0;
            auto [ptr, ec] = std::from_chars(text.data() + digits, text.data() + pos, idx);
            if (ec != std::errc{} || idx < 1 || idx > n)
                throw IndexRangeError("generator index " + std::string(text.substr(digits, pos - digits)) +
                                          " outside [1, " + std::to_string(n) + "]",
                                      digits);
            tok.index = static_cast<std::size_t>(idx);
        } else if (g == 'c') {
            ++pos;
        } else {
            throw ParseError("expected generator a<j>, b<j> or c", pos);
        }

        if (pos < len && text[pos] == '^') {
            ++pos;
            const std::size_t num_start = pos;
            bool negative = false;
            if (pos < len && (text[pos] == '-' || text[pos] == '+')) {
                negative = text[pos] == '-';
                ++pos;
            }
            const std::size_t digits = pos;
            while (pos < len && is_digit(text[pos])) ++pos;
            if (pos == digits) throw ParseError("expected integer exponent after '^'", digits);
            std::uint64_t mag = 0;
            auto [ptr, ec] = std::from_chars(text.data() + digits, text.data() + pos, mag);
            const auto limit = static_cast<std::uint64_t>(std::numeric_limits<Int>::max());
            if (ec != std::errc{} || mag > limit + (negative ? 1u : 0u))
                throw ParseError("exponent out of 64-bit range", num_start);
            if (mag == 0) throw ParseError("zero exponent", num_start);
            tok.exponent = negative ? static_cast<Int>(0 - mag) : static_cast<Int>(mag);
        }

        if (pos < len && !is_space(text[pos]))
            throw ParseError("expected space between terms", pos);
        w.push_back(tok);
        skip_ws();
    }
    return w;
}

inline std::string to_string(const GeneratorToken& tok) {
    std::string s;
    switch (tok.kind) {
        case GeneratorKind::A: s = "a" + std::to_string(tok.index); break;
        case GeneratorKind::B: s = "b" + std::to_string(tok.index); break;
        case GeneratorKind::C: s = "c"; break;
    }
    if (tok.exponent != 1) s += "^" + std::to_string(tok.exponent);
    return s;
}

/// Inverse of parse_word; the identity prints as the empty string.
inline std::string to_string(const Word& w) {
    std::string s;
    for (const auto& tok : w.tokens()) {
        if (!s.empty()) s += ' ';
        s += to_string(tok);
    }
    return s;
}

/// Structured token listing, e.g. "[A(1,+2), B(1,+1), C(-1)]".
inline std::string describe_tokens(const Word& w) {
    std::string s = "[";
    bool first = true;
    for (const auto& tok : w.tokens()) {
        if (!first) s += ", ";
        first = false;
        const std::string e = (tok.exponent > 0 ? "+" : "") + std::to_string(tok.exponent);
        switch (tok.kind) {
            case GeneratorKind::A: s += "A(" + std::to_string(tok.index) + "," + e + ")"; break;
            case GeneratorKind::B: s += "B(" + std::to_string(tok.index) + "," + e + ")"; break;
            case GeneratorKind::C: s += "C(" + e + ")"; break;
        }
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Defining relations.

struct RelationInstance {
    std::string family;
    Word lhs;
    Word rhs;
    LatticeElement lhs_value;
    LatticeElement rhs_value;

    bool holds() const { return lhs_value == rhs_value; }
};

struct RelationFamily {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
};

struct RelationReport {
    std::size_t n = 0;
    Int bound = 1;
    std::vector<RelationFamily> families;
    std::vector<RelationInstance> counterexamples;

    std::size_t instances() const {
        std::size_t s = 0;
        for (const auto& f : families) s += f.instances;
        return s;
    }
    bool all_hold() const { return counterexamples.empty(); }
};

/// Evaluates both sides of every defining relation, for all valid index
/// pairs and for generator powers with exponents in [-bound, bound] \ {0}.
/// With bound = 1 and positive exponents these are exactly
///   a_i a_j = a_j a_i, b_i b_j = b_j b_i, a_i c = c a_i, b_j c = c b_j,
///   a_i b_j = b_j a_i (i != j), b_i a_i = a_i b_i c.
inline RelationReport check_relations(std::size_t n, Int bound = 1) {
    if (n == 0) throw DimensionError("relation check needs n >= 1");
    if (bound < 1) throw ParameterError("relation bound must be >= 1");

    RelationReport report;
    report.n = n;
    report.bound = bound;

    std::vector<Int> exps;
    for (Int e = -bound; e <= bound; ++e)
        if (e != 0) exps.push_back(e);

    auto record = [&](RelationFamily& fam, std::vector<GeneratorToken> lhs, std::vector<GeneratorToken> rhs) {
        RelationInstance inst{fam.name, Word(n, std::move(lhs)), Word(n, std::move(rhs)), LatticeElement(n),
                              LatticeElement(n)};
        inst.lhs_value = evaluate_word(inst.lhs);
        inst.rhs_value = evaluate_word(inst.rhs);
        ++fam.instances;
        if (!inst.holds()) {
            ++fam.failures;
            report.counterexamples.push_back(std::move(inst));
        }
    };

    RelationFamily aa{"a_i a_j = a_j a_i"}, bb{"b_i b_j = b_j b_i"}, ac{"a_i c = c a_i"}, bc{"b_j c = c b_j"},
        ab{"a_i b_j = b_j a_i (i != j)"}, ba{"b_i a_i = a_i b_i c"};

    for (Int p : exps) {
        for (Int q : exps) {
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = 1; j <= n; ++j) {
                    record(aa, {gen_a(i, p), gen_a(j, q)}, {gen_a(j, q), gen_a(i, p)});
                    record(bb, {gen_b(i, p), gen_b(j, q)}, {gen_b(j, q), gen_b(i, p)});
                    if (i != j) record(ab, {gen_a(i, p), gen_b(j, q)}, {gen_b(j, q), gen_a(i, p)});
                }
                record(ac, {gen_a(i, p), gen_c(q)}, {gen_c(q), gen_a(i, p)});
                record(bc, {gen_b(i, p), gen_c(q)}, {gen_c(q), gen_b(i, p)});
                // b_i^p a_i^q = a_i^q b_i^p c^(pq)
                record(ba, {gen_b(i, p), gen_a(i, q)}, {gen_a(i, q), gen_b(i, p), gen_c(checked::mul(p, q))});
            }
        }
    }

    report.families = {aa, bb, ac, bc, ab, ba};
    return report;
}

}  // namespace heis

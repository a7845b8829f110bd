#pragma once

// Literal grammars shared by the CLI and the tests.
//
//   real element     x1,...,xn ; y1,...,yn ; t
//   lattice element  k1,...,kn ; l1,...,ln ; m          (integers)
//   complex element  z1,...,zn ; t                     (zj = re+imi)
//   Siegel point     w1,...,wn ; sigma
//
// Whitespace around separators is ignored on input. Output is compact (no
// spaces) with 17 significant digits, so print -> parse is value-identical.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "heis/error.hpp"
#include "heis/lattice.hpp"
#include "heis/real_group.hpp"
#include "heis/siegel.hpp"

namespace heis::text {

/// A slice of the input together with its byte offset.
struct Piece {
    std::string_view text;
    std::size_t offset;
};

inline Piece trim(Piece p) {
    auto is_ws = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
    std::size_t b = 0, e = p.text.size();
    while (b < e && is_ws(p.text[b])) ++b;
    while (e > b && is_ws(p.text[e - 1])) --e;
    return {p.text.substr(b, e - b), p.offset + b};
}

inline std::vector<Piece> split(Piece p, char sep) {
    std::vector<Piece> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= p.text.size(); ++i) {
        if (i == p.text.size() || p.text[i] == sep) {
            out.push_back(trim({p.text.substr(start, i - start), p.offset + start}));
            start = i + 1;
        }
    }
    return out;
}

inline std::vector<Piece> blocks(std::string_view text, std::size_t expected, const char* what) {
    auto parts = split({text, 0}, ';');
    if (parts.size() != expected)
        throw ParseError(std::string(what) + " needs " + std::to_string(expected) + " ';'-separated blocks, got " +
                             std::to_string(parts.size()),
                         0);
    return parts;
}

inline std::vector<Piece> components(Piece block, std::size_t n, const char* what) {
    if (block.text.empty()) throw ParseError(std::string("empty ") + what + " block", block.offset);
    auto parts = split(block, ',');
    if (parts.size() != n)
        throw DimensionError(std::string(what) + " block has " + std::to_string(parts.size()) +
                             " components, expected n = " + std::to_string(n));
    return parts;
}

inline double parse_double(Piece p) {
    p = trim(p);
    std::string_view s = p.text;
    std::size_t skip = 0;
    if (!s.empty() && s[0] == '+') skip = 1;
    if (s.size() == skip) throw ParseError("expected a number", p.offset);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data() + skip, s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError("number out of range", p.offset);
    if (ec != std::errc{}) throw ParseError("expected a number", p.offset);
    if (ptr != s.data() + s.size())
        throw ParseError("unexpected character in number", p.offset + static_cast<std::size_t>(ptr - s.data()));
    return v;
}

inline Int parse_int(Piece p) {
    p = trim(p);
    std::string_view s = p.text;
    std::size_t skip = 0;
    if (!s.empty() && s[0] == '+') skip = 1;
    if (s.size() == skip) throw ParseError("expected an integer", p.offset);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + skip, s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of 64-bit range", p.offset);
    if (ec != std::errc{}) throw ParseError("expected an integer", p.offset);
    if (ptr != s.data() + s.size())
        throw ParseError("unexpected character in integer", p.offset + static_cast<std::size_t>(ptr - s.data()));
    return v;
}

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i".
inline Complex parse_complex(Piece p) {
    p = trim(p);
    std::string_view s = p.text;
    if (s.empty()) throw ParseError("expected a complex number", p.offset);
    if (s.back() != 'i') return {parse_double(p), 0.0};

    const std::string_view body = s.substr(0, s.size() - 1);
    std::size_t split_at = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    auto imag_part = [&](std::string_view t, std::size_t off) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double({t, off});
    };
    if (split_at == std::string_view::npos) return {0.0, imag_part(body, p.offset)};
    return {parse_double({body.substr(0, split_at), p.offset}),
            imag_part(body.substr(split_at), p.offset + split_at)};
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_complex(Complex c) {
    std::string s = format_double(c.real());
    s += std::signbit(c.imag()) ? '-' : '+';
    s += format_double(std::abs(c.imag()));
    s += 'i';
    return s;
}

template <class T, class F>
std::string join(const std::vector<T>& v, F fmt) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += fmt(v[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------

inline RealElement parse_real_element(std::string_view text, std::size_t n) {
    auto b = blocks(text, 3, "real element");
    std::vector<double> x, y;
    for (auto c : components(b[0], n, "x")) x.push_back(parse_double(c));
    for (auto c : components(b[1], n, "y")) y.push_back(parse_double(c));
    auto t = components(b[2], 1, "t");
    return {std::move(x), std::move(y), parse_double(t[0])};
}

inline std::string format(const RealElement& g) {
    return join(g.x(), format_double) + ';' + join(g.y(), format_double) + ';' + format_double(g.t());
}

inline LatticeElement parse_lattice_element(std::string_view text, std::size_t n) {
    auto b = blocks(text, 3, "lattice element");
    std::vector<Int> k, l;
    for (auto c : components(b[0], n, "k")) k.push_back(parse_int(c));
    for (auto c : components(b[1], n, "l")) l.push_back(parse_int(c));
    auto m = components(b[2], 1, "m");
    return {std::move(k), std::move(l), parse_int(m[0])};
}

inline std::string format(const LatticeElement& g) {
    auto fmt = [](Int v) { return std::to_string(v); };
    return join(g.k(), fmt) + ';' + join(g.l(), fmt) + ';' + std::to_string(g.m());
}

inline ComplexElement parse_complex_element(std::string_view text, std::size_t n) {
    auto b = blocks(text, 2, "complex element");
    ComplexVector z;
    for (auto c : components(b[0], n, "z")) z.push_back(parse_complex(c));
    auto t = components(b[1], 1, "t");
    return {std::move(z), parse_double(t[0])};
}

inline std::string format(const ComplexElement& g) {
    return join(g.z(), format_complex) + ';' + format_double(g.t());
}

inline SiegelPoint parse_siegel_point(std::string_view text, std::size_t n) {
    auto b = blocks(text, 2, "Siegel point");
    ComplexVector w;
    for (auto c : components(b[0], n, "w")) w.push_back(parse_complex(c));
    auto sigma = components(b[1], 1, "sigma");
    return {std::move(w), parse_complex(sigma[0])};
}

inline std::string format(const SiegelPoint& p) {
    return join(p.w(), format_complex) + ';' + format_complex(p.sigma());
}

}  // namespace heis::text

#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace apolar {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

struct RawTerm {
    Rat coefficient;
    std::vector<std::pair<int, int>> powers;  // (variable index, exponent)
    size_t position;
    std::string text;

    int degree() const {
        int d = 0;
        for (auto& [v, e] : powers) d += e;
        return d;
    }
};

class PolyParser {
   public:
    PolyParser(const std::string& src, char var_letter) : s_(src), var_(var_letter) {}

    std::vector<RawTerm> parse_terms() {
        std::vector<RawTerm> terms;
        skip_ws();
        if (eof()) throw ParseError("empty polynomial", 0);
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = get() == '-';
        while (true) {
            RawTerm t = parse_term();
            if (negate) t.coefficient = -t.coefficient;
            terms.push_back(std::move(t));
            skip_ws();
            if (eof()) break;
            char op = get();
            if (op != '+' && op != '-')
                throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_ - 1);
            negate = op == '-';
            skip_ws();
            if (eof()) throw ParseError("dangling operator", pos_);
        }
        return terms;
    }

   private:
    RawTerm parse_term() {
        skip_ws();
        RawTerm t;
        t.coefficient = 1;
        t.position = pos_;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                t.coefficient *= parse_rational();
                saw_factor = true;
            } else if (!eof() && peek() == var_) {
                ++pos_;
                int idx = parse_int("variable index");
                int exp = 1;
                skip_ws();
                if (!eof() && peek() == '^') {
                    ++pos_;
                    exp = parse_int("exponent");
                }
                t.powers.emplace_back(idx, exp);
                saw_factor = true;
            } else if (!eof() && (std::isalpha(static_cast<unsigned char>(peek())))) {
                throw ParseError(std::string("unknown variable letter '") + peek() +
                                     "', expected '" + var_ + "'",
                                 pos_);
            } else {
                break;
            }
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("expected a term", pos_);
        t.text = s_.substr(t.position, pos_ - t.position);
        while (!t.text.empty() && std::isspace(static_cast<unsigned char>(t.text.back())))
            t.text.pop_back();
        return t;
    }

    Rat parse_rational() {
        Int num = parse_integer("coefficient");
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            Int den = parse_integer("denominator");
            if (den == 0) throw ParseError("zero denominator", pos_);
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    Int parse_integer(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError(std::string("expected ") + what, pos_);
        return Int(s_.substr(start, pos_ - start));
    }

    int parse_int(const char* what) {
        Int v = parse_integer(what);
        if (!v.fits_sint_p()) throw ParseError(std::string(what) + " too large", pos_);
        return static_cast<int>(v.get_si());
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    const std::string& s_;
    char var_;
    size_t pos_ = 0;
};

}  // namespace detail

/// Parses "3*x0^2*x1 - 1/2*x2^3" style input into a homogeneous polynomial.
/// Non-homogeneous input is rejected with the offending (lower-degree) term
/// named; the variable count is the largest index used plus one, or min_vars
/// if that is larger.
inline Polynomial parse_polynomial(const std::string& text, char var_letter = 'x',
                                   int min_vars = 1) {
    detail::PolyParser parser(text, var_letter);
    auto terms = parser.parse_terms();

    int nvars = min_vars;
    int degree = 0;
    for (const auto& t : terms) {
        degree = std::max(degree, t.degree());
        for (auto& [v, e] : t.powers) {
            if (v < 0) throw ParseError("negative variable index", t.position);
            nvars = std::max(nvars, v + 1);
        }
    }
    for (const auto& t : terms)
        if (t.degree() != degree)
            throw ParseError("non-homogeneous input: term '" + t.text + "' has degree " +
                                 std::to_string(t.degree()) + " but the polynomial has degree " +
                                 std::to_string(degree),
                             t.position);

    Polynomial p(nvars, degree);
    for (const auto& t : terms) {
        MultiIndex a(std::vector<int>(static_cast<size_t>(nvars), 0));
        for (auto& [v, e] : t.powers) {
            if (e < 0) throw ParseError("negative exponent", t.position);
            a[v] += e;
        }
        p.add_term(a, t.coefficient);
    }
    return p;
}

inline Rat parse_rational_token(const std::string& tok) {
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(tok));
        Rat r(Int(tok.substr(0, slash)), Int(tok.substr(slash + 1)));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + tok + "'", 0);
    }
}

/// Point-set file: one point per line, n+1 whitespace-separated rationals,
/// '#' starts a comment.
inline std::vector<std::vector<Rat>> parse_point_rows(std::istream& in) {
    std::vector<std::vector<Rat>> rows;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<Rat> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_rational_token(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

/// Generator file: one dual polynomial per line in the y-variable grammar.
inline std::vector<Polynomial> parse_generator_lines(std::istream& in, int min_vars = 1) {
    std::vector<Polynomial> gens;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        gens.push_back(parse_polynomial(line, 'y', min_vars));
    }
    int nvars = min_vars;
    for (const auto& g : gens) nvars = std::max(nvars, g.num_vars());
    // re-embed everything in the widest ring seen
    for (auto& g : gens)
        if (g.num_vars() < nvars) {
            Polynomial widened(nvars, g.degree());
            for (const auto& [a, c] : g.terms()) {
                std::vector<int> e = a.exponents;
                e.resize(static_cast<size_t>(nvars), 0);
                widened.add_term(MultiIndex(e), c);
            }
            g = widened;
        }
    return gens;
}

}  // namespace apolar

#ifndef MONTYPE_IDEAL_IO_HPP
#define MONTYPE_IDEAL_IO_HPP

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "montype/errors.hpp"
#include "montype/ideal.hpp"
#include "montype/numeric.hpp"
#include "montype/polynomial.hpp"

namespace montype {

/// Parsed ideal file: a ring header plus one generator per line.
///
///   ring n=2 vars=x,y     # vars optional, defaults to x1..xn
///   x^2*y
///   1/2*x*y^2 + y^3       # polynomial syntax for the arc prober
///
/// '#' starts a comment, blank lines are skipped.
struct IdealFile {
    int n = 0;
    std::vector<std::string> var_names;
    std::vector<Polynomial> generators;

    bool all_monomial() const {
        for (const auto& g : generators)
            if (!g.is_monomial()) return false;
        return true;
    }

    /// Monomial view of the file. Multi-term generators are a
    /// precondition failure (the caller should be running probe).
    MonomialIdeal monomial_ideal() const {
        std::vector<ExponentVector> gens;
        for (const auto& g : generators) {
            if (!g.is_monomial())
                throw PreconditionError(
                    "generator " + std::to_string(gens.size() + 1) +
                    " is not a monomial; polynomial ideals are handled by probe");
            gens.push_back(g.monomial_exponent());
        }
        return MonomialIdeal(n, std::move(gens));
    }

    PolynomialIdeal polynomial_ideal() const { return PolynomialIdeal(n, generators); }
};

namespace io_detail {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, End } kind;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Token::End, ""};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Number, s_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            return {Token::Ident, s_.substr(start, pos_ - start)};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Plus, "+"};
            case '-': return {Token::Minus, "-"};
            case '*': return {Token::Star, "*"};
            case '^': return {Token::Caret, "^"};
            case '/': return {Token::Slash, "/"};
            default: throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace io_detail

/// Parse one generator line: terms separated by +/-, each term a product
/// of rational-number and var^exponent factors.
inline Polynomial parse_polynomial(const std::string& line, int n,
                                   const std::vector<std::string>& var_names) {
    std::map<std::string, int> var_index;
    for (int j = 0; j < n; ++j) var_index[var_names[j]] = j;

    io_detail::Lexer lex(line);
    io_detail::Token tok = lex.next();
    std::map<ExponentVector, Rat> terms;

    auto parse_term = [&](int sign) {
        Rat coeff(sign);
        ExponentVector expo(n, 0);
        bool saw_factor = false;
        while (true) {
            if (tok.kind == io_detail::Token::Number) {
                Rat value(Int(tok.text), Int(1));
                tok = lex.next();
                if (tok.kind == io_detail::Token::Slash) {
                    tok = lex.next();
                    if (tok.kind != io_detail::Token::Number)
                        throw ParseError("expected denominator after '/'");
                    Int den(tok.text);
                    if (den == 0) throw ParseError("zero denominator");
                    value /= Rat(den);
                    tok = lex.next();
                }
                coeff *= value;
            } else if (tok.kind == io_detail::Token::Ident) {
                auto it = var_index.find(tok.text);
                if (it == var_index.end())
                    throw ParseError("unknown variable '" + tok.text + "'");
                int e = 1;
                tok = lex.next();
                if (tok.kind == io_detail::Token::Caret) {
                    tok = lex.next();
                    if (tok.kind != io_detail::Token::Number)
                        throw ParseError("expected integer exponent after '^'");
                    e = std::stoi(tok.text);
                    tok = lex.next();
                }
                expo[it->second] += e;
            } else {
                throw ParseError("expected a number or variable");
            }
            saw_factor = true;
            if (tok.kind == io_detail::Token::Star) {
                tok = lex.next();
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("empty term");
        terms[expo] += coeff;
    };

    int sign = 1;
    if (tok.kind == io_detail::Token::Plus || tok.kind == io_detail::Token::Minus) {
        sign = tok.kind == io_detail::Token::Minus ? -1 : 1;
        tok = lex.next();
    }
    parse_term(sign);
    while (tok.kind != io_detail::Token::End) {
        if (tok.kind == io_detail::Token::Plus)
            sign = 1;
        else if (tok.kind == io_detail::Token::Minus)
            sign = -1;
        else
            throw ParseError("expected '+' or '-' between terms");
        tok = lex.next();
        parse_term(sign);
    }

    for (auto it = terms.begin(); it != terms.end();)
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    if (terms.empty()) throw ParseError("generator is the zero polynomial");
    return Polynomial(n, std::move(terms));
}

inline IdealFile parse_ideal_stream(std::istream& in) {
    IdealFile file;
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string trimmed;
        {
            std::size_t a = line.find_first_not_of(" \t\r");
            std::size_t b = line.find_last_not_of(" \t\r");
            if (a != std::string::npos) trimmed = line.substr(a, b - a + 1);
        }
        if (trimmed.empty()) continue;

        if (!saw_header) {
            std::istringstream hs(trimmed);
            std::string kw;
            hs >> kw;
            if (kw != "ring")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header 'ring n=<n> [vars=...]'");
            std::string field;
            while (hs >> field) {
                if (field.rfind("n=", 0) == 0) {
                    file.n = std::stoi(field.substr(2));
                } else if (field.rfind("vars=", 0) == 0) {
                    std::string names = field.substr(5);
                    std::size_t start = 0;
                    while (start <= names.size()) {
                        std::size_t comma = names.find(',', start);
                        std::string name = names.substr(
                            start, comma == std::string::npos ? std::string::npos
                                                              : comma - start);
                        if (name.empty())
                            throw ParseError("line " + std::to_string(line_no) +
                                             ": empty variable name");
                        file.var_names.push_back(name);
                        if (comma == std::string::npos) break;
                        start = comma + 1;
                    }
                } else {
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": unknown header field '" + field + "'");
                }
            }
            if (file.n < 1)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": header must declare n >= 1");
            if (file.var_names.empty())
                for (int j = 1; j <= file.n; ++j)
                    file.var_names.push_back("x" + std::to_string(j));
            if (static_cast<int>(file.var_names.size()) != file.n)
                throw ParseError("line " + std::to_string(line_no) + ": declared " +
                                 std::to_string(file.var_names.size()) + " names for n=" +
                                 std::to_string(file.n));
            saw_header = true;
            continue;
        }

        try {
            file.generators.push_back(parse_polynomial(trimmed, file.n, file.var_names));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!saw_header) throw ParseError("missing 'ring' header line");
    if (file.generators.empty()) throw ParseError("no generators in ideal file");
    return file;
}

inline IdealFile parse_ideal_string(const std::string& text) {
    std::istringstream in(text);
    return parse_ideal_stream(in);
}

inline IdealFile parse_ideal_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ideal file '" + path + "'");
    return parse_ideal_stream(in);
}

inline std::string monomial_to_string(const ExponentVector& u,
                                      const std::vector<std::string>& var_names) {
    std::string s;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_names[j];
        if (u[j] > 1) s += "^" + std::to_string(u[j]);
    }
    return s.empty() ? "1" : s;
}

inline std::vector<std::string> default_var_names(int n) {
    std::vector<std::string> names;
    for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
    return names;
}

/// Inverse of parsing for monomial ideals: reparsing the output yields a
/// structurally equal ideal.
inline std::string serialize_ideal(const MonomialIdeal& I,
                                   const std::vector<std::string>& var_names) {
    std::string out = "ring n=" + std::to_string(I.ambient_dim()) + " vars=";
    for (std::size_t j = 0; j < var_names.size(); ++j) {
        if (j) out += ",";
        out += var_names[j];
    }
    out += "\n";
    for (const auto& g : I.generators()) out += monomial_to_string(g, var_names) + "\n";
    return out;
}

inline std::string serialize_ideal(const MonomialIdeal& I) {
    return serialize_ideal(I, default_var_names(I.ambient_dim()));
}

}  // namespace montype

#endif

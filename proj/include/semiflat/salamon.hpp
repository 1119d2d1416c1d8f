#pragma once

/*
 * Salamon notation: "(0,0,0,0,12,13)", "(e^{16}+e^{35},-e^{26}+e^{45},...)".
 *
 * Each component is a sum of terms [sign][coefficient][*][e][^][{]digits[}].
 * Coefficients are expressions in rationals, named parameters, i and sqrt(k)
 * with + - * / and parentheses; adjacency multiplies. A term's index digits
 * are its last `grade` digits (two for structure equations), 1-based.
 * Unicode minus, middle dot, lambda and alpha are accepted.
 */

#include "semiflat/lie.hpp"

#include <cctype>
#include <map>
#include <string>
#include <vector>

namespace semiflat {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Params = std::map<std::string, Rational>;

namespace detail {

inline void replace_all(std::string& s, const std::string& from, const std::string& to)
{
    for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + to.size()))
        s.replace(p, from.size(), to);
}

inline std::string normalize_text(std::string s)
{
    replace_all(s, "\xE2\x88\x92", "-");  // U+2212 minus
    replace_all(s, "\xC2\xB7", "*");      // middle dot
    replace_all(s, "\xE2\x8B\x85", "*");  // dot operator
    replace_all(s, "\xCE\xBB", "lambda");
    replace_all(s, "\xCE\xB1", "alpha");
    replace_all(s, "\\lambda", "lambda");
    replace_all(s, "\\alpha", "alpha");
    // whitespace between two operands multiplies ("i lambda e2"), elsewhere it is dropped
    auto operand = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ')' || c == '(' ||
               (static_cast<unsigned char>(c) & 0x80);
    };
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (!std::isspace(static_cast<unsigned char>(s[k]))) {
            out.push_back(s[k]);
            continue;
        }
        std::size_t next = k;
        while (next < s.size() && std::isspace(static_cast<unsigned char>(s[next])))
            ++next;
        if (!out.empty() && next < s.size() && operand(out.back()) && out.back() != '(' && operand(s[next]) &&
            s[next] != ')')
            out.push_back('*');
        k = next - 1;
    }
    return out;
}

inline Params normalize_params(const Params& p)
{
    Params out;
    for (const auto& [k, v] : p)
        out[normalize_text(k)] = v;
    return out;
}

class CoefficientParser {
public:
    CoefficientParser(const std::string& text, const Params& params) : s_(text), params_(params) {}

    CScalar parse()
    {
        CScalar v = expr();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("coefficient '" + s_ + "': " + what);
    }

    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    static bool ident_char(char c)
    {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || (static_cast<unsigned char>(c) & 0x80);
    }

    bool starts_primary() const
    {
        if (pos_ >= s_.size())
            return false;
        const char c = s_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || ident_char(c);
    }

    CScalar expr()
    {
        CScalar v = term();
        while (peek('+') || peek('-')) {
            const char op = s_[pos_++];
            CScalar t = term();
            v = op == '+' ? v + t : v - t;
        }
        return v;
    }

    CScalar term()
    {
        CScalar v = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                v *= unary();
            } else if (peek('/')) {
                ++pos_;
                CScalar den = unary();
                if (den.is_zero())
                    fail("division by zero");
                v /= den;
            } else if (starts_primary()) {
                v *= unary();
            } else {
                return v;
            }
        }
    }

    CScalar unary()
    {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return primary();
    }

    CScalar primary()
    {
        if (pos_ >= s_.size())
            fail("unexpected end");
        if (peek('(')) {
            ++pos_;
            CScalar v = expr();
            if (!peek(')'))
                fail("missing ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return CScalar(Rational(Integer(s_.substr(start, pos_ - start))));
        }
        if (ident_char(s_[pos_])) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (ident_char(s_[pos_]) || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (auto it = params_.find(name); it != params_.end())
                return CScalar(it->second);
            if (name == "i")
                return CScalar::i();
            if (name == "sqrt") {
                if (!peek('('))
                    fail("sqrt needs parentheses");
                ++pos_;
                std::size_t a = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                if (a == pos_ || !peek(')'))
                    fail("sqrt takes a positive integer literal");
                const long D = std::stol(s_.substr(a, pos_ - a));
                ++pos_;
                const Integer root = sqrt(Integer(D));
                if (root * root == D)
                    return CScalar(Rational(root));
                return CScalar(Scalar::sqrt_of(D));
            }
            fail("unbound parameter '" + name + "'");
        }
        fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }

    std::string s_;
    const Params& params_;
    std::size_t pos_ = 0;
};

// Split at top-level '+'/'-' that are binary (not after '(', '*', '/' or another sign).
inline std::vector<std::string> split_terms(const std::string& s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const char c = s[k];
        if (c == '(' || c == '{')
            ++depth;
        else if (c == ')' || c == '}')
            --depth;
        else if ((c == '+' || c == '-') && depth == 0 && k > start) {
            const char prev = s[k - 1];
            if (prev == '*' || prev == '/' || prev == '+' || prev == '-' || prev == '^')
                continue;
            out.push_back(s.substr(start, k - start));
            start = k;
        }
    }
    if (depth != 0)
        throw ParseError("unbalanced brackets in '" + s + "'");
    out.push_back(s.substr(start));
    return out;
}

inline std::vector<std::string> split_top(const std::string& s, char sep)
{
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '(' || s[k] == '{')
            ++depth;
        else if (s[k] == ')' || s[k] == '}')
            --depth;
        else if (s[k] == sep && depth == 0) {
            out.push_back(s.substr(start, k - start));
            start = k + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

// One term: coefficient text and 0-based indices (order as written).
struct RawTerm {
    CScalar coeff;
    std::vector<int> idx;
};

inline RawTerm parse_term(const std::string& term, int grade, const Params& params)
{
    std::string t = term;
    bool closing = !t.empty() && t.back() == '}';
    if (closing)
        t.pop_back();
    std::size_t end = t.size();
    std::size_t start = end;
    while (start > 0 && std::isdigit(static_cast<unsigned char>(t[start - 1])))
        --start;
    if (start == end)
        throw ParseError("term '" + term + "' has no index digits");
    if (grade > 0) {
        if (end - start < static_cast<std::size_t>(grade))
            throw ParseError("term '" + term + "' needs " + std::to_string(grade) + " index digits");
        start = end - grade;
    }
    std::string digits = t.substr(start);
    std::string head = t.substr(0, start);
    if (closing) {
        if (head.empty() || head.back() != '{')
            throw ParseError("unbalanced '}' in '" + term + "'");
        head.pop_back();
    } else if (!head.empty() && head.back() == '{') {
        throw ParseError("unbalanced '{' in '" + term + "'");
    }
    if (!head.empty() && head.back() == '^')
        head.pop_back();
    if (!head.empty() && head.back() == 'e')
        head.pop_back();
    if (!head.empty() && head.back() == '*')
        head.pop_back();
    RawTerm out;
    std::string sign;
    while (!head.empty() && (head.front() == '+' || head.front() == '-')) {
        if (head.front() == '-')
            sign = sign.empty() ? "-" : "";
        head.erase(head.begin());
    }
    if (head.empty())
        out.coeff = 1;
    else
        out.coeff = CoefficientParser(head, params).parse();
    if (sign == "-")
        out.coeff = -out.coeff;
    for (char c : digits)
        out.idx.push_back(c - '1');
    for (int i : out.idx)
        if (i < 0)
            throw ParseError("index 0 in term '" + term + "' (indices are 1-based)");
    return out;
}

}  // namespace detail

// A linear combination of monomials in dimension n; grade 0 means "all trailing digits".
inline Form parse_form(const std::string& text, int n, const Params& params = {}, int grade = 0)
{
    const std::string s = detail::normalize_text(text);
    const Params p = detail::normalize_params(params);
    Form f(n);
    if (s.empty())
        throw ParseError("empty form");
    if (s == "0")
        return f;
    for (const auto& raw : detail::split_terms(s)) {
        if (raw.empty() || raw == "+" || raw == "-")
            throw ParseError("empty term in '" + text + "'");
        auto term = detail::parse_term(raw, grade, p);
        for (int i : term.idx)
            if (i >= n)
                throw ParseError("index " + std::to_string(i + 1) + " out of range in '" + text + "'");
        f += Form::product(n, term.idx) * term.coeff;
    }
    return f;
}

inline LieAlgebra parse_salamon(const std::string& text, const Params& params = {})
{
    std::string s = detail::normalize_text(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("structure equations must be enclosed in parentheses: '" + text + "'");
    s = s.substr(1, s.size() - 2);
    const auto parts = detail::split_top(s, ',');
    const int n = static_cast<int>(parts.size());
    if (n > 9)
        throw ParseError("two-digit index pairs limit structure equations to n <= 9");
    std::vector<Form> de;
    for (const auto& part : parts) {
        if (part.empty())
            throw ParseError("empty component in '" + text + "'");
        de.push_back(parse_form(part, n, params, 2));
    }
    return LieAlgebra(std::move(de));
}

namespace detail {

inline std::string coefficient_prefix(const CScalar& c, bool first)
{
    if (c.is_real() && c.re().is_rational()) {
        const Rational& r = c.re().rational_part();
        const std::string sign = sgn(r) < 0 ? "-" : (first ? "" : "+");
        const Rational a = abs(r);
        return a == 1 ? sign : sign + a.get_str() + "*";
    }
    return std::string(first ? "" : "+") + "(" + c.str() + ")*";
}

}  // namespace detail

// Render a linear combination without "e" prefixes: "-35+2*14".
inline std::string render_terms(const Form& f)
{
    if (f.is_zero())
        return "0";
    std::string s;
    for (const auto& [m, c] : f.terms()) {
        s += detail::coefficient_prefix(c, s.empty());
        for (int i : indices_of(m))
            s += std::to_string(i + 1);
    }
    return s;
}

inline std::string render_salamon(const LieAlgebra& g)
{
    std::string s = "(";
    for (int k = 0; k < g.dim(); ++k)
        s += (k ? "," : "") + render_terms(g.de(k));
    return s + ")";
}

}  // namespace semiflat

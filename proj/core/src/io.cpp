#include <superint/io.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include <superint/errors.hpp>

namespace superint
{

namespace
{

struct Line {
    std::string text; // comment stripped
    std::size_t number = 0;
};

std::vector<Line> content_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) {
            raw.remove_suffix(1);
        }
        const bool blank = std::all_of(raw.begin(), raw.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (!blank) {
            out.push_back({std::string(raw), number});
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return out;
}

enum class Tok { number, ident, caret, plus, minus, star, colon, arrow, comma, lparen, rparen, lbracket, rbracket, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t col = 0;
};

class Tokens
{
public:
    Tokens(const std::string &line, std::size_t line_no) : m_line(line_no)
    {
        std::size_t i = 0;
        while (i < line.size()) {
            const char c = line[i];
            const std::size_t col = i + 1;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) {
                    ++j;
                }
                if (j + 1 < line.size() && line[j] == '/' && std::isdigit(static_cast<unsigned char>(line[j + 1]))) {
                    ++j;
                    while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) {
                        ++j;
                    }
                }
                m_toks.push_back({Tok::number, line.substr(i, j - i), col});
                i = j;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) {
                    ++j;
                }
                m_toks.push_back({Tok::ident, line.substr(i, j - i), col});
                i = j;
                continue;
            }
            if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
                m_toks.push_back({Tok::arrow, "->", col});
                i += 2;
                continue;
            }
            Tok k;
            switch (c) {
            case '^': k = Tok::caret; break;
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case ':': k = Tok::colon; break;
            case ',': k = Tok::comma; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case '[': k = Tok::lbracket; break;
            case ']': k = Tok::rbracket; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", m_line, col);
            }
            m_toks.push_back({k, std::string(1, c), col});
            ++i;
        }
        m_end_col = line.size() + 1;
    }

    bool at_end() const noexcept
    {
        return m_pos >= m_toks.size();
    }
    Token peek() const
    {
        return at_end() ? Token{Tok::end, "", m_end_col} : m_toks[m_pos];
    }
    Token next()
    {
        Token t = peek();
        if (!at_end()) {
            ++m_pos;
        }
        return t;
    }
    bool accept(Tok k)
    {
        if (peek().kind == k) {
            ++m_pos;
            return true;
        }
        return false;
    }
    Token expect(Tok k, const std::string &what)
    {
        if (peek().kind != k) {
            fail("expected " + what);
        }
        return next();
    }
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ParseError(msg, m_line, peek().col);
    }
    [[noreturn]] void fail_at(const std::string &msg, std::size_t col) const
    {
        throw ParseError(msg, m_line, col);
    }
    void expect_end(const std::string &what)
    {
        if (!at_end()) {
            fail("unexpected '" + peek().text + "' after " + what);
        }
    }
    std::size_t line() const noexcept
    {
        return m_line;
    }

private:
    std::vector<Token> m_toks;
    std::size_t m_pos = 0;
    std::size_t m_line;
    std::size_t m_end_col = 1;
};

Rational to_rational(const Tokens &ts, const Token &t)
{
    const auto slash = t.text.find('/');
    if (slash != std::string::npos && t.text.find_first_not_of('0', slash + 1) == std::string::npos) {
        ts.fail_at("zero denominator", t.col);
    }
    Rational r(t.text, 10);
    r.canonicalize();
    return r;
}

Rational signed_rational(Tokens &ts, const std::string &what)
{
    const bool neg = ts.accept(Tok::minus);
    const Token t = ts.expect(Tok::number, what);
    Rational r = to_rational(ts, t);
    return neg ? Rational(-r) : r;
}

unsigned to_unsigned(Tokens &ts, const std::string &what)
{
    const Token t = ts.expect(Tok::number, what);
    if (t.text.find('/') != std::string::npos || t.text.size() > 9) {
        ts.fail_at("expected a small nonnegative integer for " + what, t.col);
    }
    return static_cast<unsigned>(std::stoul(t.text));
}

int signed_exponent(Tokens &ts)
{
    const bool neg = ts.accept(Tok::minus);
    const Token t = ts.expect(Tok::number, "an integer exponent");
    if (t.text.find('/') != std::string::npos || t.text.size() > 6) {
        ts.fail_at("exponent must be a small integer", t.col);
    }
    const int e = std::stoi(t.text);
    return neg ? -e : e;
}

// Index k of a name "<prefix>k" (1-based in text), or 0 if the name does not match.
unsigned indexed_name(const std::string &name, const std::string &prefix)
{
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
        return 0;
    }
    const std::string digits = name.substr(prefix.size());
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })
        || digits.size() > 6 || digits[0] == '0') {
        return 0;
    }
    return static_cast<unsigned>(std::stoul(digits));
}

struct TermSyntax {
    bool gauss = false;  // s, s^k allowed
    bool odd = false;    // xi<k> allowed
    unsigned nvars = 0;  // x1..x_nvars allowed
};

struct RawTerm {
    Rational coeff{1};
    int gauss = 0;
    Exponents exps;
    std::vector<unsigned> odd; // 0-based, in order of appearance
    std::size_t col = 0;
};

bool starts_factor(const Token &t)
{
    return t.kind == Tok::number || t.kind == Tok::ident;
}

RawTerm parse_term(Tokens &ts, const TermSyntax &syn)
{
    RawTerm term;
    term.exps.assign(syn.nvars, 0);
    term.col = ts.peek().col;
    bool any = false;
    while (true) {
        if (any && ts.peek().kind == Tok::star) {
            ts.next();
            if (!starts_factor(ts.peek())) {
                ts.fail("expected a factor after '*'");
            }
        }
        if (!starts_factor(ts.peek())) {
            break;
        }
        const Token t = ts.next();
        any = true;
        if (t.kind == Tok::number) {
            term.coeff *= to_rational(ts, t);
            continue;
        }
        int power = 1;
        bool has_power = false;
        if (ts.accept(Tok::caret)) {
            power = signed_exponent(ts);
            has_power = true;
        }
        if (t.text == "s" && syn.gauss) {
            term.gauss += power;
        } else if (unsigned k = indexed_name(t.text, "xi"); k != 0 && syn.odd) {
            if (has_power) {
                ts.fail_at("odd generators take no exponent", t.col);
            }
            term.odd.push_back(k - 1);
        } else if (unsigned v = indexed_name(t.text, "x"); v != 0 && syn.nvars > 0) {
            if (v > syn.nvars) {
                ts.fail_at("variable " + t.text + " out of range (" + std::to_string(syn.nvars) + " even variables)",
                           t.col);
            }
            term.exps[v - 1] += power;
        } else {
            ts.fail_at("unknown symbol '" + t.text + "'", t.col);
        }
    }
    if (!any) {
        ts.fail("expected a term");
    }
    return term;
}

// Sum of terms with leading sign; stops at the end or at a token that cannot continue it.
std::vector<RawTerm> parse_sum(Tokens &ts, const TermSyntax &syn)
{
    std::vector<RawTerm> out;
    bool negative = false;
    if (ts.peek().kind == Tok::minus) {
        ts.next();
        negative = true;
    } else if (ts.peek().kind == Tok::plus) {
        ts.next();
    }
    while (true) {
        RawTerm t = parse_term(ts, syn);
        if (negative) {
            t.coeff = -t.coeff;
        }
        out.push_back(std::move(t));
        const Tok k = ts.peek().kind;
        if (k == Tok::plus || k == Tok::minus) {
            negative = k == Tok::minus;
            ts.next();
            continue;
        }
        break;
    }
    return out;
}

// Sorts odd factors into canonical order; returns 0 for a repeated generator.
int odd_mask_sign(const std::vector<unsigned> &odd, OddMask &mask)
{
    std::vector<unsigned> v = odd;
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
        }
    }
    mask = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0 && v[i] == v[i - 1]) {
            return 0;
        }
        mask |= OddMask{1} << v[i];
    }
    return sign;
}

// nullopt: as many generators as the largest index used.
GrassmannElement grassmann_from_terms(Tokens &ts, const std::vector<RawTerm> &terms,
                                      std::optional<unsigned> generator_count)
{
    unsigned n = generator_count.value_or(0);
    if (!generator_count) {
        for (const auto &t : terms) {
            for (unsigned k : t.odd) {
                n = std::max(n, k + 1);
            }
        }
    }
    GrassmannElement out(n);
    for (const auto &t : terms) {
        for (unsigned k : t.odd) {
            if (k >= n) {
                ts.fail_at("generator xi" + std::to_string(k + 1) + " out of range (" + std::to_string(n)
                               + " generators)",
                           t.col);
            }
        }
        OddMask mask = 0;
        const int sign = odd_mask_sign(t.odd, mask);
        if (sign == 0) {
            continue;
        }
        try {
            out.add_term(mask, Scalar(sign * t.coeff, t.gauss));
        } catch (const ExponentMismatchError &) {
            ts.fail_at("terms carry different powers of s", t.col);
        }
    }
    return out;
}

GrassmannElement parse_grassmann_line(const Line &line, std::optional<unsigned> generator_count)
{
    Tokens ts(line.text, line.number);
    const auto terms = parse_sum(ts, {true, true, 0});
    ts.expect_end("expression");
    return grassmann_from_terms(ts, terms, generator_count);
}

Line single_line(std::string_view text, const std::string &what)
{
    const auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError("empty " + what, 1, 1);
    }
    if (lines.size() > 1) {
        throw ParseError("unexpected second line in " + what, lines[1].number, 1);
    }
    return lines.front();
}

Interval parse_interval_tokens(Tokens &ts)
{
    const Token open = ts.next();
    if (open.kind == Tok::ident && open.text == "R") {
        return Interval::all();
    }
    if (open.kind != Tok::lparen && open.kind != Tok::lbracket) {
        ts.fail_at("expected an interval: R, [a, b], (a, b), (a, inf), ...", open.col);
    }
    Interval iv;
    iv.lo_open = open.kind == Tok::lparen;
    if (ts.peek().kind == Tok::minus) {
        const Token minus = ts.next();
        if (ts.peek().kind == Tok::ident && ts.peek().text == "inf") {
            ts.next();
            if (!iv.lo_open) {
                ts.fail_at("infinite endpoint must be open", minus.col);
            }
        } else {
            const Token t = ts.expect(Tok::number, "an endpoint");
            iv.lo = -to_rational(ts, t);
        }
    } else {
        iv.lo = to_rational(ts, ts.expect(Tok::number, "an endpoint"));
    }
    ts.expect(Tok::comma, "','");
    if (ts.peek().kind == Tok::ident && ts.peek().text == "inf") {
        ts.next();
    } else {
        iv.hi = signed_rational(ts, "an endpoint");
    }
    const Token close = ts.next();
    if (close.kind != Tok::rparen && close.kind != Tok::rbracket) {
        ts.fail_at("expected ')' or ']'", close.col);
    }
    iv.hi_open = close.kind == Tok::rparen;
    if (!iv.hi && !iv.hi_open) {
        ts.fail_at("infinite endpoint must be open", close.col);
    }
    if (!iv.lo) {
        iv.lo_open = false;
    }
    if (!iv.hi) {
        iv.hi_open = false;
    }
    if (iv.lo && iv.hi) {
        const bool empty = *iv.lo > *iv.hi || (*iv.lo == *iv.hi && (iv.lo_open || iv.hi_open));
        if (empty) {
            ts.fail_at("empty interval", open.col);
        }
    }
    return iv;
}

std::string join_rationals(const LieVector &v)
{
    std::string out;
    for (const auto &c : v) {
        out += " " + c.get_str();
    }
    return out;
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    const Line line = single_line(text, "scalar");
    Tokens ts(line.text, line.number);
    const auto terms = parse_sum(ts, {true, false, 0});
    ts.expect_end("scalar");
    Scalar out;
    for (const auto &t : terms) {
        try {
            out += Scalar(t.coeff, t.gauss);
        } catch (const ExponentMismatchError &) {
            ts.fail_at("terms carry different powers of s", t.col);
        }
    }
    return out;
}

GrassmannElement parse_grassmann(std::string_view text, unsigned generator_count)
{
    return parse_grassmann_line(single_line(text, "Grassmann expression"),
                                generator_count == 0 ? std::nullopt : std::optional<unsigned>(generator_count));
}

Polynomial parse_polynomial(std::string_view text, unsigned nvars)
{
    const Line line = single_line(text, "polynomial");
    Tokens ts(line.text, line.number);
    const auto terms = parse_sum(ts, {false, false, nvars});
    ts.expect_end("polynomial");
    Polynomial out(nvars);
    for (const auto &t : terms) {
        out.add_term(t.exps, t.coeff);
    }
    return out;
}

Interval parse_interval(std::string_view text)
{
    const Line line = single_line(text, "interval");
    Tokens ts(line.text, line.number);
    Interval iv = parse_interval_tokens(ts);
    ts.expect_end("interval");
    return iv;
}

GrassmannMatrix parse_supermatrix(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError("empty supermatrix file", 1, 1);
    }
    Tokens head(lines[0].text, lines[0].number);
    const unsigned p = to_unsigned(head, "p");
    const unsigned q = to_unsigned(head, "q");
    const unsigned n = to_unsigned(head, "generator count N");
    head.expect_end("header 'p q N'");
    if (n > 64) {
        throw ParseError("at most 64 generators are supported", lines[0].number, 1);
    }
    const std::size_t size = p + q;
    if (lines.size() - 1 != size * size) {
        const std::size_t where = lines.size() > size * size + 1 ? lines[size * size + 1].number : lines.back().number + 1;
        throw ParseError("expected " + std::to_string(size * size) + " entries, found "
                             + std::to_string(lines.size() - 1),
                         where, 1);
    }
    std::vector<GrassmannElement> entries;
    entries.reserve(size * size);
    for (std::size_t k = 0; k < size * size; ++k) {
        const Line &line = lines[k + 1];
        GrassmannElement e = parse_grassmann_line(line, n);
        const std::size_t i = k / size, j = k % size;
        const Parity expected = (i < p) == (j < p) ? Parity::even : Parity::odd;
        const auto par = e.parity();
        if (!e.is_zero() && (!par || *par != expected)) {
            throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be "
                                 + to_string(expected),
                             line.number, 1);
        }
        entries.push_back(std::move(e));
    }
    return GrassmannMatrix(p, q, std::move(entries), GrassmannElement(n));
}

std::string format_supermatrix(const GrassmannMatrix &x)
{
    std::ostringstream os;
    os << x.p() << ' ' << x.q() << ' ' << x.zero_element().generator_count() << '\n';
    for (const auto &e : x.entries()) {
        os << e.str() << '\n';
    }
    return os.str();
}

SuperFunction parse_superfunction(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError("empty superfunction file", 1, 1);
    }
    Tokens head(lines[0].text, lines[0].number);
    const unsigned m = to_unsigned(head, "m");
    const unsigned n = to_unsigned(head, "n");
    const unsigned aux = to_unsigned(head, "aux");
    unsigned params = 0;
    if (!head.at_end()) {
        params = to_unsigned(head, "params");
    }
    head.expect_end("header 'm n aux'");

    std::size_t k = 1;
    Box box;
    if (k < lines.size()) {
        Tokens ts(lines[k].text, lines[k].number);
        if (ts.peek().kind == Tok::ident && ts.peek().text == "box") {
            ts.next();
            while (!ts.at_end()) {
                box.push_back(parse_interval_tokens(ts));
            }
            if (box.size() != m + params) {
                throw ParseError("box needs " + std::to_string(m + params) + " intervals, found "
                                     + std::to_string(box.size()),
                                 lines[k].number, 1);
            }
            ++k;
        }
    }
    SuperDomainShape shape;
    try {
        Box even_box, param_box;
        if (!box.empty()) {
            even_box.assign(box.begin(), box.begin() + m);
            param_box.assign(box.begin() + m, box.end());
        }
        shape = SuperDomainShape::make(m, n, even_box, aux).with_parameters(params, 0, param_box);
    } catch (const DimensionError &e) {
        throw ParseError(e.what(), lines[0].number, 1);
    }

    SuperFunction f(shape);
    const unsigned nvars = shape.even_count();
    const unsigned nodd = shape.odd_count();
    for (; k < lines.size(); ++k) {
        Tokens ts(lines[k].text, lines[k].number);
        const auto poly_terms = parse_sum(ts, {false, false, nvars});
        ts.expect(Tok::colon, "':' between the coefficient and the odd monomial");
        std::vector<unsigned> odd;
        while (!ts.at_end()) {
            const Token t = ts.expect(Tok::ident, "an odd generator xi<k>");
            const unsigned idx = indexed_name(t.text, "xi");
            if (idx == 0) {
                ts.fail_at("expected an odd generator xi<k>", t.col);
            }
            if (idx > nodd) {
                ts.fail_at("generator " + t.text + " out of range (" + std::to_string(nodd) + " odd generators)",
                           t.col);
            }
            odd.push_back(idx - 1);
        }
        OddMask mask = 0;
        const int sign = odd_mask_sign(odd, mask);
        if (sign == 0) {
            continue;
        }
        Polynomial p(nvars);
        for (const auto &t : poly_terms) {
            p.add_term(t.exps, sign * t.coeff);
        }
        f.add_term(mask, p);
    }
    return f;
}

std::string format_superfunction(const SuperFunction &f)
{
    const auto &s = f.shape();
    std::ostringstream os;
    os << s.m << ' ' << s.n << ' ' << s.aux;
    if (s.params) {
        os << ' ' << s.params;
    }
    os << '\n';
    if (!s.box.empty()) {
        os << "box";
        for (const auto &iv : s.box) {
            os << ' ' << iv.str();
        }
        os << '\n';
    }
    if (!f.is_zero()) {
        os << f.str() << '\n';
    }
    return os.str();
}

LieSuperAlgebra parse_lie_algebra(std::string_view text)
{
    const auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError("empty structure-constant file", 1, 1);
    }
    std::vector<LieGenerator> basis;
    {
        Tokens ts(lines[0].text, lines[0].number);
        while (!ts.at_end()) {
            const Token name = ts.expect(Tok::ident, "a generator name");
            ts.expect(Tok::colon, "':' and a parity 0 or 1");
            const Token par = ts.expect(Tok::number, "a parity 0 or 1");
            if (par.text != "0" && par.text != "1") {
                ts.fail_at("parity must be 0 or 1", par.col);
            }
            for (const auto &g : basis) {
                if (g.name == name.text) {
                    ts.fail_at("duplicate generator name '" + name.text + "'", name.col);
                }
            }
            basis.push_back({name.text, par.text == "1" ? Parity::odd : Parity::even});
        }
    }
    const unsigned dim = static_cast<unsigned>(basis.size());
    std::map<std::pair<unsigned, unsigned>, LieVector> brackets;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        Tokens ts(lines[k].text, lines[k].number);
        const Token ti = ts.peek();
        const unsigned i = to_unsigned(ts, "index i");
        const Token tj = ts.peek();
        const unsigned j = to_unsigned(ts, "index j");
        if (i >= dim) {
            ts.fail_at("index " + std::to_string(i) + " out of range", ti.col);
        }
        if (j >= dim) {
            ts.fail_at("index " + std::to_string(j) + " out of range", tj.col);
        }
        ts.expect(Tok::arrow, "'->'");
        LieVector v;
        while (!ts.at_end()) {
            v.push_back(signed_rational(ts, "a coefficient"));
        }
        if (v.size() != dim) {
            ts.fail("expected " + std::to_string(dim) + " coefficients, found " + std::to_string(v.size()));
        }
        if (!brackets.emplace(std::pair{i, j}, std::move(v)).second) {
            ts.fail_at("bracket (" + std::to_string(i) + "," + std::to_string(j) + ") listed twice", ti.col);
        }
    }
    return LieSuperAlgebra::from_brackets(std::move(basis), brackets);
}

std::string format_lie_algebra(const LieSuperAlgebra &g)
{
    std::ostringstream os;
    for (unsigned i = 0; i < g.dim(); ++i) {
        os << (i ? " " : "") << g.basis()[i].name << ':' << to_int(g.basis()[i].parity);
    }
    os << '\n';
    auto nonzero = [](const LieVector &v) {
        return std::any_of(v.begin(), v.end(), [](const Rational &c) { return sgn(c) != 0; });
    };
    for (unsigned i = 0; i < g.dim(); ++i) {
        for (unsigned j = 0; j < g.dim(); ++j) {
            if (nonzero(g.bracket_basis(i, j)) || nonzero(g.bracket_basis(j, i))) {
                os << i << ' ' << j << " ->" << join_rationals(g.bracket_basis(i, j)) << '\n';
            }
        }
    }
    return os.str();
}

std::string read_text_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace superint

#include "ybx/grammar.hpp"

#include <cctype>
#include <sstream>

namespace ybx {

namespace {

void print_term(std::ostream& os, const VarContext& ctx, const Exponents& e, const Rat& mag) {
    bool has_vars = false;
    for (auto k : e)
        if (k > 0) has_vars = true;
    if (!has_vars) {
        os << mag.str();
        return;
    }
    bool first = true;
    if (!mag.is_one()) {
        os << mag.str();
        first = false;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << ctx.name(i);
        if (e[i] > 1) os << '^' << e[i];
    }
}

} // namespace

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rat& c = it->second;
        if (first) {
            if (c.sign() < 0) os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        print_term(os, p.context(), it->first, c.abs());
    }
    return os.str();
}

std::string to_string(const RatFunc& f) {
    if (f.is_polynomial()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

class Cursor {
  public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                         std::string(s_) + "\"");
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    bool peek_alpha() {
        skip_ws();
        return pos_ < s_.size() &&
               (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
    }

    std::string read_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected variable name");
        return std::string(s_.substr(start, pos_ - start));
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

Rat read_number(Cursor& cur) {
    std::string n = cur.read_integer();
    if (cur.accept('/')) {
        std::string d = cur.read_integer();
        mpz_class dz(d);
        if (dz == 0) cur.fail("zero denominator in number");
        return Rat(mpz_class(n), dz);
    }
    return Rat(mpz_class(n));
}

MPoly read_term(Cursor& cur, const VarContext& ctx) {
    Rat coeff(1);
    Exponents e(ctx.size(), 0);
    bool any = false;
    while (true) {
        if (cur.peek_digit()) {
            coeff *= read_number(cur);
            any = true;
        } else if (cur.peek_alpha()) {
            std::string name = cur.read_name();
            auto idx = ctx.index_of(name);
            if (!idx) cur.fail("unknown variable \"" + name + "\"");
            std::uint32_t k = 1;
            if (cur.accept('^'))
                k = static_cast<std::uint32_t>(std::stoul(cur.read_integer()));
            e[*idx] += k;
            any = true;
        } else {
            break;
        }
        if (!cur.accept('*')) break;
    }
    if (!any) cur.fail("expected term");
    return MPoly::monomial(ctx, std::move(e), coeff);
}

MPoly read_poly(Cursor& cur, const VarContext& ctx) {
    MPoly p(ctx);
    bool negate = cur.accept('-');
    p += negate ? -read_term(cur, ctx) : read_term(cur, ctx);
    while (true) {
        if (cur.accept('+')) {
            p += read_term(cur, ctx);
        } else if (cur.accept('-')) {
            p -= read_term(cur, ctx);
        } else {
            break;
        }
    }
    return p;
}

} // namespace

Rat parse_rat(std::string_view text) {
    Cursor cur(text);
    bool negate = cur.accept('-');
    Rat r = read_number(cur);
    if (!cur.done()) cur.fail("trailing input");
    return negate ? -r : r;
}

MPoly parse_poly(const VarContext& ctx, std::string_view text) {
    Cursor cur(text);
    MPoly p = read_poly(cur, ctx);
    if (!cur.done()) cur.fail("trailing input");
    return p;
}

RatFunc parse_ratfunc(const VarContext& ctx, std::string_view text) {
    Cursor cur(text);
    if (cur.peek() == '(') {
        cur.expect('(');
        MPoly num = read_poly(cur, ctx);
        cur.expect(')');
        if (cur.done()) return RatFunc(std::move(num));
        cur.expect('/');
        cur.expect('(');
        MPoly den = read_poly(cur, ctx);
        cur.expect(')');
        if (!cur.done()) cur.fail("trailing input");
        return RatFunc(std::move(num), std::move(den));
    }
    MPoly p = read_poly(cur, ctx);
    if (!cur.done()) cur.fail("trailing input");
    return RatFunc(std::move(p));
}

} // namespace ybx

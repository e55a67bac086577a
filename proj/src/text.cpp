#include "qortho/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qortho {

namespace {

struct RenderedTerm {
    bool negative = false;
    std::string body;  // magnitude, no sign
};

// Renders c * sym^exp (c != 0) as a signed product term.
RenderedTerm render_vterm(const mpz_class& c, const std::string& sym, int exp, bool latex) {
    RenderedTerm t;
    mpz_class a = c;
    if (a < 0) {
        t.negative = true;
        a = -a;
    }
    std::string mag = a.get_str();
    std::string var;
    if (exp > 0) {
        var = sym;
        if (exp != 1) var += latex ? "^{" + std::to_string(exp) + "}" : "^" + std::to_string(exp);
    }
    if (var.empty()) {
        t.body = mag;
    } else if (mag == "1") {
        t.body = var;
    } else {
        t.body = latex ? mag + " " + var : mag + "*" + var;
    }
    return t;
}

std::string join_terms(const std::vector<RenderedTerm>& terms) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out += "-";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].body;
    }
    return out;
}

// Renders a VPoly whose display exponents are (stored exponent + shift),
// divided by `div` (1 for v-form, 2 for q-form). Terms descending.
std::vector<RenderedTerm> vpoly_terms(const VPoly& p, const std::string& sym, int shift, int div,
                                      bool latex) {
    std::vector<RenderedTerm> out;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(i) == 0) continue;
        out.push_back(render_vterm(p.coeff(i), sym, (i + shift) / div, latex));
    }
    return out;
}

struct ScalarText {
    std::string text;
    bool multi_term = false;   // top-level additive structure, needs () as factor
    bool negative = false;     // single-product with a leading minus
    std::string magnitude;     // body without the sign when !multi_term
    std::vector<RenderedTerm> splice;  // flattenable terms when den == 1
    bool can_splice = false;
};

bool den_is_atom(const VPoly& den, int shift) {
    // Safe to print after '/' without parentheses: a bare integer or a pure
    // power of the symbol ('^' binds tighter than '/').
    int nonzero = 0, idx = -1;
    for (int i = 0; i <= den.degree(); ++i)
        if (den.coeff(i) != 0) {
            ++nonzero;
            idx = i;
        }
    if (nonzero != 1) return false;
    if (idx + shift == 0) return true;              // integer
    return den.coeff(idx) == 1;                     // v^k / q^k
}

ScalarText scalar_text(const Scalar& s, bool latex) {
    ScalarText r;
    if (s.is_zero()) {
        r.text = "0";
        r.magnitude = "0";
        r.splice.push_back({false, "0"});
        r.can_splice = true;
        return r;
    }
    bool qform = s.only_even_v();
    std::string sym = qform ? "q" : "v";
    int div = qform ? 2 : 1;
    long off = s.off();
    int num_shift = off >= 0 ? static_cast<int>(off) : 0;
    int den_shift = off >= 0 ? 0 : static_cast<int>(-off);
    auto num_terms = vpoly_terms(s.num(), sym, num_shift, div, latex);
    bool den_one = s.den().is_one() && den_shift == 0;
    if (den_one) {
        r.text = join_terms(num_terms);
        r.multi_term = num_terms.size() > 1;
        r.negative = !r.multi_term && num_terms[0].negative;
        r.magnitude = r.multi_term ? r.text : num_terms[0].body;
        r.splice = std::move(num_terms);
        r.can_splice = true;
        return r;
    }
    auto den_terms = vpoly_terms(s.den(), sym, den_shift, div, latex);
    std::string num_str = join_terms(num_terms);
    std::string den_str = join_terms(den_terms);
    if (latex) {
        r.text = "\\frac{" + num_str + "}{" + den_str + "}";
        r.magnitude = r.text;
        r.splice.push_back({false, r.text});
        r.can_splice = true;
        return r;
    }
    bool num_neg = num_terms.size() == 1 && num_terms[0].negative;
    std::string num_part = num_terms.size() > 1 ? "(" + num_str + ")"
                           : num_neg           ? num_terms[0].body
                                               : num_str;
    std::string den_part =
        den_is_atom(s.den(), den_shift) ? den_terms[0].body : "(" + den_str + ")";
    r.negative = num_neg;
    r.magnitude = num_part + "/" + den_part;
    r.text = (num_neg ? "-" : "") + r.magnitude;
    r.splice.push_back({num_neg, r.magnitude});
    r.can_splice = true;
    return r;
}

std::string exp_str(const std::string& var, int e, bool latex) {
    if (e == 1) return var;
    return latex ? var + "^{" + std::to_string(e) + "}" : var + "^" + std::to_string(e);
}

std::string render_poly_impl(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::vector<RenderedTerm> terms;
    const char* sep = latex ? " " : "*";
    for (const auto& [m, c] : p.terms()) {
        ScalarText ct = scalar_text(c, latex);
        if (m.x == 0 && m.s == 0) {
            // Constant term: splice the scalar's own additive terms.
            for (auto& t : ct.splice) terms.push_back(std::move(t));
            continue;
        }
        std::string vars;
        if (m.s > 0) vars = exp_str("s", m.s, latex);
        if (m.x > 0) {
            if (!vars.empty()) vars += sep;
            vars += exp_str("x", m.x, latex);
        }
        RenderedTerm t;
        if (ct.multi_term) {
            t.body = "(" + ct.text + ")" + sep + vars;
        } else if (ct.magnitude == "1") {
            t.negative = ct.negative;
            t.body = vars;
        } else {
            t.negative = ct.negative;
            t.body = ct.magnitude + sep + vars;
        }
        terms.push_back(std::move(t));
    }
    return join_terms(terms);
}

}  // namespace

std::string render_scalar(const Scalar& s) { return scalar_text(s, false).text; }
std::string render_poly(const Poly& p) { return render_poly_impl(p, false); }
std::string render_poly_latex(const Poly& p) { return render_poly_impl(p, true); }

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("parse error at position " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        if (++depth_ > 200) fail("expression nested too deeply");
        bool neg = false;
        skip_ws();
        while (eat('-')) neg = !neg;
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) {
                acc += term();
            } else if (eat('-')) {
                acc -= term();
            } else {
                --depth_;
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                Poly d = factor();
                if (!d.is_scalar()) fail("division by a non-scalar expression");
                Scalar ds = d.as_scalar();
                if (ds.is_zero()) fail("division by zero");
                acc = acc.scaled(ds.inverse());
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = primary();
        if (eat('^')) {
            long e = exponent();
            if (e >= 0) {
                base = base.pow(static_cast<int>(e));
            } else {
                if (!base.is_scalar()) fail("negative power of a non-scalar expression");
                base = Poly(base.as_scalar().pow(e));
            }
        }
        return base;
    }

    long exponent() {
        skip_ws();
        bool parens = eat('(');
        bool neg = false;
        while (eat('-')) neg = !neg;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer exponent");
        long val = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            val = val * 10 + (s_[pos_] - '0');
            if (val > 1000000) fail("exponent too large");
            ++pos_;
        }
        if (parens && !eat(')')) fail("expected ')'");
        return neg ? -val : val;
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly(Scalar(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        ++pos_;
        switch (c) {
            case 'q': return Poly(Scalar::q());
            case 'v': return Poly(Scalar::v());
            case 'x': return Poly::x();
            case 's': return Poly::s();
            default: fail(std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return Parser(text).parse(); }

Scalar parse_scalar(const std::string& text) {
    Poly p = parse_poly(text);
    if (!p.is_scalar()) throw parse_error("expected a scalar, found x or s");
    return p.as_scalar();
}

}  // namespace qortho

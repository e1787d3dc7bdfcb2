#pragma once

#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integral.hpp"
#include "rings.hpp"
#include "torsion.hpp"

namespace liecohom {

// Recursive-descent evaluator for
//   expr  := ['-'] term (('+'|'-') term)*
//   term  := power ('*' power)*
//   power := atom ['^' int]
//   atom  := int | name | C{i,j,...} | E{i,j,...} | '(' expr ')'
template <class Context>
class ExpressionParser {
public:
    using Value = typename Context::Value;

    ExpressionParser(const Context& ctx, std::string text) : ctx_(ctx), s_(std::move(text)) {}

    Value parse() {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer");
        if (pos_ - start > 17) error("integer too large");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    Value expr() {
        bool negate = accept('-');
        Value v = term();
        if (negate) v = ctx_.negate(v);
        for (;;) {
            if (accept('+')) v = ctx_.add(v, term());
            else if (accept('-')) v = ctx_.add(v, ctx_.negate(term()));
            else return v;
        }
    }
    Value term() {
        Value v = power();
        while (accept('*')) v = ctx_.mul(v, power());
        return v;
    }
    Value power() {
        Value v = atom();
        if (accept('^')) {
            long long e = integer();
            if (e > 64) error("exponent too large");
            Value r = ctx_.integer(1);
            for (long long i = 0; i < e; ++i) r = ctx_.mul(r, v);
            return r;
        }
        return v;
    }
    Value atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!accept(')')) error("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return ctx_.integer(integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if ((name == "C" || name == "E") && accept('{')) {
                Subset I;
                do I.push_back(static_cast<int>(integer()));
                while (accept(','));
                if (!accept('}')) error("expected '}'");
                return ctx_.c_class(I);
            }
            return ctx_.name(name);
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    const Context& ctx_;
    std::string s_;
    std::size_t pos_ = 0;
};

// Evaluation inside H*(G;F) for a field F.
struct FieldContext {
    using Value = Element;
    const CohomologyRing& ring;

    Value integer(long long n) const { return Rational(n) * ring.algebra->one(); }
    Value negate(const Value& v) const { return -v; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value name(const std::string& n) const {
        if (auto i = ring.resolve(n)) return ring.algebra->generator(*i);
        throw ParseError("unknown generator '" + n + "' for " + to_string(ring.group) + " over " +
                         to_string(ring.coeff));
    }
    Value c_class(const Subset& I) const {
        if (!ring.coeff.is_prime_field()) throw ParseError("C-classes exist over F_p only");
        try {
            return liecohom::c_class(I, ring);
        } catch (const IndexNotInGp& e) {
            throw ParseError(e.what());
        } catch (const PreconditionViolation& e) {
            throw ParseError(e.what());
        }
    }
};

// Evaluation inside H*(G;Z).
struct IntegralContext {
    using Value = IntegralElement;
    const IntegralCohomology& H;

    Value integer(long long n) const { return H.scale(Rational(n), H.one()); }
    Value negate(const Value& v) const { return H.scale(Rational(-1), v); }
    Value add(const Value& a, const Value& b) const { return H.add(a, b); }
    Value mul(const Value& a, const Value& b) const { return H.multiply(a, b); }
    Value name(const std::string& n) const {
        if (H.free_ring().resolve(n)) return H.rho(n);
        const BasicData b = basic_data(H.group());
        for (int j = 1; j <= b.m; ++j)
            if (n == "x" + std::to_string(b.deg_y[j - 1]) || n == "y_" + std::to_string(j)) return H.x(j);
        throw ParseError("unknown generator '" + n + "' for " + to_string(H.group()) + " over Z");
    }
    Value c_class(const Subset& I) const {
        const BasicData b = basic_data(H.group());
        for (int t : I)
            if (t < 1 || t > b.m || b.p_list[t - 1] != b.p_list[I[0] - 1])
                throw ParseError("index set " + subset_string(I) + " is not inside a single G(p)");
        try {
            return H.e_class(I);
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
};

inline Element evaluate_expression(const CohomologyRing& ring, const std::string& text) {
    FieldContext ctx{ring};
    return ExpressionParser<FieldContext>(ctx, text).parse();
}

inline IntegralElement evaluate_expression(const IntegralCohomology& H, const std::string& text) {
    IntegralContext ctx{H};
    return ExpressionParser<IntegralContext>(ctx, text).parse();
}

}  // namespace liecohom

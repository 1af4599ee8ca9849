#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "euc/error.hpp"
#include "euc/formula.hpp"

namespace euc {

// Infix rendering used by theory files and the text exporter:
// BE(A,B,C), ~F, F /\ G, F \/ G. Precedence ~ > /\ > \/.
inline std::string to_infix(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::Atom: {
        std::string out(f.predicate());
        out.push_back('(');
        for (std::size_t i = 0; i < f.args().size(); ++i) {
            if (i > 0) out.push_back(',');
            out.push_back(f.args()[i]);
        }
        out.push_back(')');
        return out;
    }
    case Formula::Kind::Not: {
        const Formula& g = f.operand();
        return g.is_junction() ? "~(" + to_infix(g) + ")" : "~" + to_infix(g);
    }
    default: {
        const bool conj = f.is_and();
        std::string out;
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
            if (i > 0) out += conj ? " /\\ " : " \\/ ";
            const Formula& p = f.parts()[i];
            // an AN inside an OR binds tighter and needs no parentheses
            bool paren = p.kind() == f.kind() || (conj && p.is_or());
            out += paren ? "(" + to_infix(p) + ")" : to_infix(p);
        }
        return out;
    }
    }
}

namespace detail {

class InfixParser {
public:
    InfixParser(std::string_view text, int line) : s_(text), line_(line) {}

    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }

    bool peek(std::string_view tok) {
        skip_ws();
        return s_.substr(pos_, tok.size()) == tok;
    }

    bool accept(std::string_view tok) {
        if (!peek(tok)) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    // A keyword followed by whitespace, e.g. "forall A B,".
    bool accept_word(std::string_view word) {
        skip_ws();
        if (s_.substr(pos_, word.size()) != word) return false;
        std::size_t after = pos_ + word.size();
        if (after < s_.size() && !std::isspace(static_cast<unsigned char>(s_[after]))) return false;
        pos_ = after;
        return true;
    }

    // Space-separated single-letter variables terminated by ','.
    std::string variable_list() {
        std::string vars;
        for (;;) {
            skip_ws();
            if (accept(",")) break;
            if (pos_ >= s_.size() || !is_variable_char(s_[pos_])) fail("expected a variable or ','");
            if (pos_ + 1 < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_ + 1])) &&
                s_[pos_ + 1] != ',')
                fail("variables are single letters");
            if (vars.find(s_[pos_]) != std::string::npos) fail(std::string("variable listed twice: ") + s_[pos_]);
            vars.push_back(s_[pos_++]);
        }
        return vars;
    }

    Formula formula() { return disjunction(); }

    Formula atom() {
        skip_ws();
        std::string_view name = s_.substr(pos_, 2);
        if (name.size() < 2 || !std::isupper(static_cast<unsigned char>(name[0])) ||
            !std::isupper(static_cast<unsigned char>(name[1])))
            fail("expected a predicate");
        const PredicateSignature* sig = find_signature(name);
        if (sig == nullptr)
            throw Error(ErrorKind::UnknownPredicate, "line " + std::to_string(line_) +
                                                         ": unknown predicate " + std::string(name),
                        line_);
        pos_ += 2;
        expect("(");
        std::string args;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size() || !is_variable_char(s_[pos_])) fail("expected a variable");
            args.push_back(s_[pos_++]);
            if (accept(")")) break;
            expect(",");
        }
        if (args.size() != sig->arity())
            throw Error(ErrorKind::ArityMismatch,
                        "line " + std::to_string(line_) + ": " + std::string(sig->name) + " takes " +
                            std::to_string(sig->arity()) + " arguments, got " +
                            std::to_string(args.size()),
                        line_);
        return Formula::atom(sig, std::move(args));
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::SyntaxError,
                    "line " + std::to_string(line_) + ": " + what + " at column " + std::to_string(pos_ + 1),
                    line_);
    }

private:
    Formula disjunction() {
        std::vector<Formula> parts{conjunction()};
        while (accept("\\/")) parts.push_back(conjunction());
        if (parts.size() == 1) return std::move(parts.front());
        return Formula::disjunction(std::move(parts));
    }

    Formula conjunction() {
        std::vector<Formula> parts{unary()};
        while (accept("/\\")) parts.push_back(unary());
        if (parts.size() == 1) return std::move(parts.front());
        return Formula::conjunction(std::move(parts));
    }

    Formula unary() {
        if (accept("~")) return Formula::negation(unary());
        if (accept("(")) {
            Formula f = disjunction();
            expect(")");
            return f;
        }
        return atom();
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
};

} // namespace detail

inline Formula parse_infix(std::string_view text) {
    detail::InfixParser p(text, 0);
    Formula f = p.formula();
    if (!p.at_end()) p.fail("trailing input");
    infer_sorts(f);
    return f;
}

} // namespace euc

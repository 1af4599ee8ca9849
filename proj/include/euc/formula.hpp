#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "euc/error.hpp"

namespace euc {

enum class Sort { Point, Circle };

// sorts holds one tag per position: 'P' point, 'C' circle.
struct PredicateSignature {
    std::string_view name;
    std::string_view sorts;

    std::size_t arity() const { return sorts.size(); }
    Sort sort_at(std::size_t i) const { return sorts[i] == 'C' ? Sort::Circle : Sort::Point; }
};

inline const std::vector<PredicateSignature>& signatures() {
    static const std::vector<PredicateSignature> table = {
        {"EQ", "PP"},       {"NE", "PP"},       {"BE", "PPP"},      {"EE", "PPPP"},
        {"CO", "PPP"},      {"NC", "PPP"},      {"CI", "CPPP"},     {"IC", "PC"},
        {"OC", "PC"},       {"ON", "PC"},       {"EL", "PPP"},      {"TR", "PPP"},
        {"RA", "PPP"},      {"LT", "PPPP"},     {"MI", "PPP"},      {"EA", "PPPPPP"},
        {"SU", "PPPPP"},    {"RR", "PPP"},      {"PA", "PPPPP"},    {"PE", "PPPP"},
        {"IA", "PPPP"},     {"OS", "PPPP"},     {"SS", "PPPP"},     {"IS", "PPP"},
        {"CU", "PPPPP"},    {"TC", "PPPPPP"},   {"AO", "PPPPPP"},   {"TG", "PPPPPP"},
        {"TT", "PPPPPPPP"}, {"RT", "PPPPPP"},   {"ME", "PPPP"},     {"CR", "PPPP"},
        {"TP", "PPPP"},     {"PR", "PPPP"},     {"AS", "PPPPPPPPP"}, {"PG", "PPPP"},
        {"SQ", "PPPP"},     {"RE", "PPPP"},     {"RC", "PPPPPPPP"}, {"ER", "PPPPPPPP"},
        {"BR", "PPPPP"},    {"TE", "PPPPPP"},   {"FE", "PPPPPPPP"}, {"ET", "PPPPPP"},
        {"EF", "PPPPPPPP"}, {"FR", "PPPPPPPP"},
    };
    return table;
}

inline const PredicateSignature* find_signature(std::string_view name) {
    for (const auto& s : signatures())
        if (s.name == name) return &s;
    return nullptr;
}

inline bool is_variable_char(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

class Formula {
public:
    enum class Kind { Atom, Not, And, Or };

    Formula() = default;

    static Formula atom(const PredicateSignature* sig, std::string args) {
        if (sig == nullptr) throw Error(ErrorKind::UnknownPredicate, "null predicate signature");
        if (args.size() != sig->arity())
            throw Error(ErrorKind::ArityMismatch, std::string(sig->name) + " takes " +
                                                      std::to_string(sig->arity()) + " arguments");
        for (char c : args)
            if (!is_variable_char(c))
                throw Error(ErrorKind::ArityMismatch, std::string("bad variable '") + c + "'");
        Formula f;
        f.kind_ = Kind::Atom;
        f.sig_ = sig;
        f.args_ = std::move(args);
        return f;
    }

    static Formula atom(std::string_view name, std::string args) {
        const PredicateSignature* sig = find_signature(name);
        if (sig == nullptr)
            throw Error(ErrorKind::UnknownPredicate, "unknown predicate " + std::string(name));
        return atom(sig, std::move(args));
    }

    static Formula negation(Formula inner) {
        Formula f;
        f.kind_ = Kind::Not;
        f.parts_.push_back(std::move(inner));
        return f;
    }

    static Formula conjunction(std::vector<Formula> parts) { return junction(Kind::And, std::move(parts)); }
    static Formula disjunction(std::vector<Formula> parts) { return junction(Kind::Or, std::move(parts)); }

    static Formula junction(Kind k, std::vector<Formula> parts) {
        if (parts.size() < 2)
            throw Error(ErrorKind::ArityMismatch, "a junction needs at least two members");
        Formula f;
        f.kind_ = k;
        f.parts_ = std::move(parts);
        return f;
    }

    Kind kind() const { return kind_; }
    bool is_atom() const { return kind_ == Kind::Atom; }
    bool is_not() const { return kind_ == Kind::Not; }
    bool is_and() const { return kind_ == Kind::And; }
    bool is_or() const { return kind_ == Kind::Or; }
    bool is_junction() const { return kind_ == Kind::And || kind_ == Kind::Or; }

    const PredicateSignature& signature() const { return *sig_; }
    std::string_view predicate() const { return sig_->name; }
    const std::string& args() const { return args_; }
    const std::vector<Formula>& parts() const { return parts_; }
    const Formula& operand() const { return parts_.front(); }

    friend bool operator==(const Formula& a, const Formula& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Atom) return a.sig_->name == b.sig_->name && a.args_ == b.args_;
        return a.parts_ == b.parts_;
    }

    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
        if (a.kind_ == Kind::Atom) {
            if (auto c = a.sig_->name <=> b.sig_->name; c != 0) return c;
            return a.args_ <=> b.args_;
        }
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

private:
    Kind kind_ = Kind::Atom;
    const PredicateSignature* sig_ = nullptr;
    std::string args_;
    std::vector<Formula> parts_;
};

using Substitution = std::map<char, char>;
using SortMap = std::map<char, Sort>;

/// Records the sort of every variable in f into sorts; throws SortClash on conflict.
inline void infer_sorts(const Formula& f, SortMap& sorts) {
    if (f.is_atom()) {
        for (std::size_t i = 0; i < f.args().size(); ++i) {
            Sort s = f.signature().sort_at(i);
            auto [it, inserted] = sorts.emplace(f.args()[i], s);
            if (!inserted && it->second != s)
                throw Error(ErrorKind::SortClash, std::string("variable '") + f.args()[i] +
                                                      "' used both as point and circle in " +
                                                      std::string(f.predicate()));
        }
        return;
    }
    for (const auto& p : f.parts()) infer_sorts(p, sorts);
}

inline SortMap infer_sorts(const Formula& f) {
    SortMap m;
    infer_sorts(f, m);
    return m;
}

/// Variables in order of first occurrence.
inline std::string variables(const Formula& f) {
    std::string out;
    auto walk = [&](auto&& self, const Formula& g) -> void {
        if (g.is_atom()) {
            for (char c : g.args())
                if (out.find(c) == std::string::npos) out.push_back(c);
            return;
        }
        for (const auto& p : g.parts()) self(self, p);
    };
    walk(walk, f);
    return out;
}

inline bool occurs(char v, const Formula& f) {
    if (f.is_atom()) return f.args().find(v) != std::string::npos;
    for (const auto& p : f.parts())
        if (occurs(v, p)) return true;
    return false;
}

namespace detail {

class PolishParser {
public:
    explicit PolishParser(std::string_view text) : s_(text) {}

    Formula parse() {
        if (s_.empty()) throw Error(ErrorKind::ArityMismatch, "empty formula");
        Formula f = node();
        if (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '+' || c == '|')
                throw Error(ErrorKind::DanglingSeparator,
                            std::string("separator '") + c + "' outside any junction at offset " +
                                std::to_string(pos_));
            throw Error(ErrorKind::TrailingInput,
                        "trailing input '" + std::string(s_.substr(pos_)) + "'");
        }
        infer_sorts(f);
        return f;
    }

private:
    Formula node() {
        std::string_view head = s_.substr(pos_, 2);
        if (head.size() < 2) throw Error(ErrorKind::ArityMismatch, "truncated formula at offset " + std::to_string(pos_));
        if (head == "NO") {
            pos_ += 2;
            return Formula::negation(node());
        }
        if (head == "AN" || head == "OR") {
            pos_ += 2;
            const bool conj = head == "AN";
            const char other = conj ? '|' : '+';
            std::vector<Formula> parts;
            parts.push_back(node());
            while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '|')) {
                if (s_[pos_] == other)
                    throw Error(ErrorKind::DanglingSeparator,
                                std::string("separator '") + other + "' inside " +
                                    std::string(head) + " at offset " + std::to_string(pos_));
                ++pos_;
                parts.push_back(node());
            }
            if (parts.size() < 2)
                throw Error(ErrorKind::ArityMismatch, std::string(head) + " with a single member");
            return Formula::junction(conj ? Formula::Kind::And : Formula::Kind::Or, std::move(parts));
        }
        const PredicateSignature* sig = find_signature(head);
        if (sig == nullptr)
            throw Error(ErrorKind::UnknownPredicate, "unknown predicate '" + std::string(head) + "'");
        pos_ += 2;
        std::string args;
        for (std::size_t i = 0; i < sig->arity(); ++i) {
            if (pos_ >= s_.size() || !is_variable_char(s_[pos_]))
                throw Error(ErrorKind::ArityMismatch, std::string(sig->name) + " expects " +
                                                          std::to_string(sig->arity()) +
                                                          " variables, found " + std::to_string(i));
            args.push_back(s_[pos_++]);
        }
        if (pos_ < s_.size() && is_variable_char(s_[pos_]))
            throw Error(ErrorKind::ArityMismatch, std::string(sig->name) + " followed by extra variable '" +
                                                      s_[pos_] + "'");
        return Formula::atom(sig, std::move(args));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// A part ending in a junction swallows every following separator.
inline bool ends_open(const Formula& f) {
    if (f.is_junction()) return true;
    if (f.is_not()) return ends_open(f.operand());
    return false;
}

inline void print_into(const Formula& f, std::string& out) {
    switch (f.kind()) {
    case Formula::Kind::Atom:
        out += f.predicate();
        out += f.args();
        return;
    case Formula::Kind::Not:
        out += "NO";
        print_into(f.operand(), out);
        return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        out += f.is_and() ? "AN" : "OR";
        const char sep = f.is_and() ? '+' : '|';
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
            if (i > 0) out.push_back(sep);
            if (i + 1 < f.parts().size() && ends_open(f.parts()[i]))
                throw Error(ErrorKind::Unprintable,
                            "a nested junction may only be the last member of its parent");
            print_into(f.parts()[i], out);
        }
        return;
    }
    }
}

} // namespace detail

inline Formula parse_formula(std::string_view text) { return detail::PolishParser(text).parse(); }

inline std::string print_formula(const Formula& f) {
    std::string out;
    detail::print_into(f, out);
    return out;
}

inline bool printable(const Formula& f) {
    try {
        print_formula(f);
        return true;
    } catch (const Error&) {
        return false;
    }
}

namespace detail {
inline Formula rename(const Formula& f, const Substitution& s) {
    switch (f.kind()) {
    case Formula::Kind::Atom: {
        std::string args = f.args();
        for (char& c : args)
            if (auto it = s.find(c); it != s.end()) c = it->second;
        return Formula::atom(&f.signature(), std::move(args));
    }
    case Formula::Kind::Not:
        return Formula::negation(rename(f.operand(), s));
    default: {
        std::vector<Formula> parts;
        parts.reserve(f.parts().size());
        for (const auto& p : f.parts()) parts.push_back(rename(p, s));
        return Formula::junction(f.kind(), std::move(parts));
    }
    }
}
} // namespace detail

/// Renames variables; unmapped variables stay. Throws SortClash if the result
/// puts one variable at a point and a circle position.
inline Formula apply_substitution(const Formula& f, const Substitution& s) {
    SortMap before = infer_sorts(f);
    SortMap image;
    for (auto [v, sort] : before) {
        auto it = s.find(v);
        char w = it == s.end() ? v : it->second;
        auto [pos, inserted] = image.emplace(w, sort);
        if (!inserted && pos->second != sort)
            throw Error(ErrorKind::SortClash, std::string("substitution sends '") + v +
                                                  "' onto '" + w + "' of another sort");
    }
    return detail::rename(f, s);
}

namespace detail {
inline bool match_into(const Formula& p, const Formula& t, Substitution& s) {
    if (p.kind() != t.kind()) return false;
    if (p.is_atom()) {
        if (p.predicate() != t.predicate()) return false;
        for (std::size_t i = 0; i < p.args().size(); ++i) {
            auto [it, inserted] = s.emplace(p.args()[i], t.args()[i]);
            if (!inserted && it->second != t.args()[i]) return false;
        }
        return true;
    }
    if (p.parts().size() != t.parts().size()) return false;
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        if (!match_into(p.parts()[i], t.parts()[i], s)) return false;
    return true;
}
} // namespace detail

/// One-way matching: extends partial so that pattern instantiates to target.
inline std::optional<Substitution> match_formula(const Formula& pattern, const Formula& target,
                                                 const Substitution& partial = {}) {
    Substitution s = partial;
    if (!detail::match_into(pattern, target, s)) return std::nullopt;
    return s;
}

/// (outer . inner)(v) = outer(inner(v)).
inline Substitution compose(const Substitution& outer, const Substitution& inner) {
    Substitution r;
    for (auto [v, w] : inner) {
        auto it = outer.find(w);
        r[v] = it == outer.end() ? w : it->second;
    }
    for (auto [v, w] : outer) r.emplace(v, w);
    return r;
}

inline std::string to_string(const Substitution& s) {
    std::string out = "{";
    bool first = true;
    for (auto [v, w] : s) {
        if (!first) out += ",";
        first = false;
        out.push_back(v);
        out += "->";
        out.push_back(w);
    }
    return out + "}";
}

} // namespace euc

#pragma once

// Brute-force reference semantics. Integer coordinates only; defined
// predicates are expanded from their theory definitions and existential
// witnesses are searched over a bounded integer grid.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "euc/theory.hpp"

namespace oracle {

struct P {
    long long x = 0, y = 0;
    friend bool operator==(const P&, const P&) = default;
};

struct Circ {
    P c, r1, r2;
};

inline long long cross(P u, P v) { return u.x * v.y - u.y * v.x; }
inline long long dot(P u, P v) { return u.x * v.x + u.y * v.y; }
inline P sub(P a, P b) { return {a.x - b.x, a.y - b.y}; }
inline long long d2(P a, P b) { return dot(sub(a, b), sub(a, b)); }

inline bool be(P a, P b, P c) {
    if (a == c || cross(sub(b, a), sub(c, a)) != 0) return false;
    long long t = dot(sub(b, a), sub(c, a));
    return 0 < t && t < d2(a, c);
}

enum class Tri { False, True, Unknown };

struct Frame {
    std::array<std::optional<P>, 128> pts{};
    std::array<std::optional<Circ>, 128> circles{};
};

class Expander {
public:
    Expander(const euc::Registry& reg, int radius) : reg_(reg), radius_(radius) {}

    bool holds(const euc::Formula& f, Frame& fr) { return eval(f, fr) == Tri::True; }

    Tri eval(const euc::Formula& f, Frame& fr) {
        using K = euc::Formula::Kind;
        switch (f.kind()) {
        case K::Atom: return atom(f, fr);
        case K::Not: {
            Tri t = eval(f.operand(), fr);
            return t == Tri::Unknown ? t : (t == Tri::True ? Tri::False : Tri::True);
        }
        case K::And: {
            bool unknown = false;
            for (const auto& p : f.parts()) {
                Tri t = eval(p, fr);
                if (t == Tri::False) return t;
                unknown |= t == Tri::Unknown;
            }
            return unknown ? Tri::Unknown : Tri::True;
        }
        case K::Or: {
            bool unknown = false;
            for (const auto& p : f.parts()) {
                Tri t = eval(p, fr);
                if (t == Tri::True) return t;
                unknown |= t == Tri::Unknown;
            }
            return unknown ? Tri::Unknown : Tri::False;
        }
        }
        return Tri::Unknown;
    }

private:
    static Tri of(bool b) { return b ? Tri::True : Tri::False; }

    Tri atom(const euc::Formula& f, Frame& fr) {
        const std::string& a = f.args();
        for (std::size_t i = 0; i < a.size(); ++i) {
            bool circle = f.signature().sort_at(i) == euc::Sort::Circle;
            if (circle ? !fr.circles[a[i]] : !fr.pts[a[i]]) return Tri::Unknown;
        }
        auto p = [&](std::size_t i) { return *fr.pts[a[i]]; };
        std::string_view n = f.predicate();
        if (n == "EQ") return of(p(0) == p(1));
        if (n == "BE") return of(be(p(0), p(1), p(2)));
        if (n == "EE") return of(d2(p(0), p(1)) == d2(p(2), p(3)));
        if (n == "CI") {
            const Circ& j = *fr.circles[a[0]];
            return of(j.c == p(1) && j.r1 == p(2) && j.r2 == p(3) && !(p(2) == p(3)));
        }
        return expand(f, fr);
    }

    Tri expand(const euc::Formula& f, Frame& fr) {
        const euc::TheoryItem* def = nullptr;
        for (const auto& item : reg_.items())
            if (item.head && item.head->predicate() == f.predicate()) def = &item;
        if (def == nullptr) throw std::runtime_error("oracle: no definition for " + std::string(f.predicate()));
        Frame inner;
        const std::string& params = def->head->args();
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (f.signature().sort_at(i) == euc::Sort::Circle) inner.circles[params[i]] = fr.circles[f.args()[i]];
            else inner.pts[params[i]] = fr.pts[f.args()[i]];
        }
        const euc::Formula& body = def->conclusions.front();
        std::string order;
        for (char v : euc::variables(body))
            if (def->existentials.find(v) != std::string::npos) order.push_back(v);
        return of(search(body, inner, order, 0));
    }

    // CI(J,..) with J known fixes its point arguments
    std::optional<P> forced(const euc::Formula& body, const Frame& fr, char v) {
        if (body.is_atom()) {
            if (body.predicate() != "CI" || !fr.circles[body.args()[0]]) return std::nullopt;
            const Circ& j = *fr.circles[body.args()[0]];
            const P vals[3] = {j.c, j.r1, j.r2};
            for (int i = 0; i < 3; ++i)
                if (body.args()[i + 1] == v) return vals[i];
            return std::nullopt;
        }
        if (!body.is_and()) return std::nullopt;
        for (const auto& p : body.parts())
            if (auto r = forced(p, fr, v)) return r;
        return std::nullopt;
    }

    bool search(const euc::Formula& body, Frame& fr, const std::string& order, std::size_t k) {
        Tri t = eval(body, fr);
        if (t != Tri::Unknown) return t == Tri::True;
        if (k == order.size()) return false;
        char v = order[k];
        if (auto p = forced(body, fr, v)) {
            fr.pts[v] = *p;
            bool ok = search(body, fr, order, k + 1);
            fr.pts[v].reset();
            return ok;
        }
        for (long long x = -radius_; x <= radius_; ++x)
            for (long long y = -radius_; y <= radius_; ++y) {
                fr.pts[v] = P{x, y};
                if (search(body, fr, order, k + 1)) {
                    fr.pts[v].reset();
                    return true;
                }
            }
        fr.pts[v].reset();
        return false;
    }

    const euc::Registry& reg_;
    long long radius_;
};

} // namespace oracle

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "euc/error.hpp"
#include "euc/formula.hpp"
#include "euc/geometry.hpp"

namespace euc {

enum class Backend { Exact, Approx };

inline std::string_view to_string(Backend b) { return b == Backend::Exact ? "exact" : "approx"; }

/// Variable assignment; total on the variables of whatever is evaluated.
template <class S>
struct PlaneModel {
    std::map<char, Point<S>> points;
    std::map<char, CircleVal<S>> circles;
    double eps = 0; // ignored by the exact backend

    const Point<S>& point(char v) const {
        auto it = points.find(v);
        if (it == points.end())
            throw Error(ErrorKind::UnassignedVariable, std::string("point variable '") + v + "' is unassigned");
        return it->second;
    }

    const CircleVal<S>& circle(char v) const {
        auto it = circles.find(v);
        if (it == circles.end())
            throw Error(ErrorKind::UnassignedVariable, std::string("circle variable '") + v + "' is unassigned");
        return it->second;
    }
};

using ExactModel = PlaneModel<Rational>;
using ApproxModel = PlaneModel<double>;

inline ApproxModel to_approx(const ExactModel& m, double eps) {
    ApproxModel out;
    out.eps = eps;
    for (const auto& [v, p] : m.points) out.points[v] = to_double(p);
    for (const auto& [v, c] : m.circles) out.circles[v] = to_double(c);
    return out;
}

/// Closed-form decision procedures. Every comparison is on squared lengths,
/// cross and dot products; sums of lengths use exact nested square-root sign tests.
template <class S>
class Plane {
public:
    using P = Point<S>;
    using C = CircleVal<S>;

    explicit Plane(double eps = 0) : eps_(eps) {}

    int sign(const S& v) const { return sign_of(v, eps_); }
    bool zero(const S& v) const { return sign(v) == 0; }

    bool eq(const P& a, const P& b) const { return zero(S(a.x - b.x)) && zero(S(a.y - b.y)); }
    bool ne(const P& a, const P& b) const { return !eq(a, b); }

    bool collinear(const P& a, const P& b, const P& c) const { return zero(tarea(a, b, c)); }

    // a != c, collinear, b - a = t (c - a) with 0 < t < 1
    bool be(const P& a, const P& b, const P& c) const {
        if (eq(a, c) || !collinear(a, b, c)) return false;
        S d = dot(P(b - a), P(c - a));
        return sign(d) > 0 && sign(S(dist2(a, c) - d)) > 0;
    }

    bool ee(const P& a, const P& b, const P& c, const P& d) const { return zero(S(dist2(a, b) - dist2(c, d))); }

    bool co(const P& a, const P& b, const P& c) const { return collinear(a, b, c); }
    bool nc(const P& a, const P& b, const P& c) const { return !collinear(a, b, c); }

    bool ci(const C& j, const P& a, const P& b, const P& c) const {
        return eq(j.center, a) && eq(j.r1, b) && eq(j.r2, c) && ne(b, c);
    }

    int circle_side(const P& p, const C& j) const { return sign(S(dist2(j.center, p) - radius2(j))); }
    bool ic(const P& p, const C& j) const { return ne(j.r1, j.r2) && circle_side(p, j) < 0; }
    bool oc(const P& p, const C& j) const { return ne(j.r1, j.r2) && circle_side(p, j) > 0; }
    bool on(const P& p, const C& j) const { return ne(j.r1, j.r2) && circle_side(p, j) == 0; }

    bool el(const P& a, const P& b, const P& c) const { return ee(a, b, b, c) && ee(b, c, c, a); }

    // b and c on the same open ray from a
    bool ra(const P& a, const P& b, const P& c) const {
        return ne(a, b) && ne(a, c) && collinear(a, b, c) && sign(dot(P(b - a), P(c - a))) > 0;
    }

    bool lt(const P& a, const P& b, const P& c, const P& d) const {
        S ab = dist2(a, b);
        return sign(ab) > 0 && sign(S(dist2(c, d) - ab)) > 0;
    }

    bool mi(const P& a, const P& b, const P& c) const { return be(a, b, c) && ee(a, b, b, c); }

    /// cos^2 of angle abc with its sign kept, as a rational; requires a != b, c != b.
    S signed_cos2(const P& a, const P& b, const P& c) const {
        S d = dot(P(a - b), P(c - b));
        S l = S(dist2(a, b) * dist2(c, b));
        return S(d * (sign(d) < 0 ? S(-d) : d) / l);
    }

    // unsigned angles compared through cos; NC on the first triple forces a proper angle
    bool ea(const P& a, const P& b, const P& c, const P& x, const P& y, const P& z) const {
        if (!nc(a, b, c) || eq(x, y) || eq(z, y)) return false;
        return zero(S(signed_cos2(a, b, c) - signed_cos2(x, y, z)));
    }

    bool su(const P& a, const P& b, const P& c, const P& d, const P& f) const { return ra(b, c, d) && be(a, b, f); }

    bool rr(const P& a, const P& b, const P& c) const {
        return ne(a, b) && ne(b, c) && zero(dot(P(a - b), P(c - b)));
    }

    bool pa(const P& p, const P& q, const P& a, const P& b, const P& c) const {
        if (!co(p, q, c) || !co(a, b, c) || eq(p, c)) return false;
        return eq(a, b) || zero(dot(P(b - a), P(p - c)));
    }

    // C must be the foot of the perpendicular from p to line ab
    bool pe(const P& p, const P& q, const P& a, const P& b) const {
        if (eq(a, b)) return true;
        if (collinear(a, b, p)) return false;
        P d = b - a;
        S t = S(dot(P(p - a), d) / norm2(d));
        P foot = a + P(t * d);
        return co(p, q, foot);
    }

    bool ia(const P& a, const P& b, const P& c, const P& p) const {
        if (eq(a, b) || eq(c, b)) return false;
        P u = a - b, v = c - b, w = p - b;
        int s = sign(cross(u, v));
        if (s != 0) return sign(cross(u, w)) == s && sign(cross(w, v)) == s;
        if (sign(dot(u, v)) > 0) return collinear(b, a, p) && sign(dot(w, u)) > 0;
        return collinear(a, b, p);
    }

    int side(const P& a, const P& b, const P& p) const { return sign(cross(P(b - a), P(p - a))); }

    bool os(const P& p, const P& a, const P& b, const P& q) const {
        return nc(a, b, p) && side(a, b, p) * side(a, b, q) < 0;
    }

    bool ss(const P& p, const P& q, const P& a, const P& b) const {
        return nc(a, b, p) && nc(a, b, q) && side(a, b, p) == side(a, b, q);
    }

    bool is(const P& a, const P& b, const P& c) const { return nc(a, b, c) && ee(a, b, a, c); }

    bool cu(const P& a, const P& b, const P& c, const P& d, const P& e) const {
        return be(a, e, b) && be(c, e, d) && nc(a, b, c) && nc(a, b, d);
    }

    bool tc(const P& a, const P& b, const P& c, const P& x, const P& y, const P& z) const {
        return ee(a, b, x, y) && ee(b, c, y, z) && ee(a, c, x, z) && nc(a, b, c);
    }

    /// angle abc < angle xyz, both proper
    bool ao(const P& a, const P& b, const P& c, const P& x, const P& y, const P& z) const {
        if (!nc(a, b, c) || !nc(x, y, z)) return false;
        return sign(S(signed_cos2(a, b, c) - signed_cos2(x, y, z))) > 0;
    }

    // |ef| < |ab| + |cd|, all three non-zero
    bool tg(const P& a, const P& b, const P& c, const P& d, const P& e, const P& f) const {
        S ab = dist2(a, b), cd = dist2(c, d), ef = dist2(e, f);
        if (zero(ab) || zero(cd) || zero(ef)) return false;
        // ab + cd + 2 sqrt(ab cd) - ef > 0
        return sign_plus_sqrt(S(ab + cd - ef), S(2), S(ab * cd), eps_) > 0;
    }

    // |ef| + |gh| < |ab| + |cd|, all four non-zero
    bool tt(const P& a, const P& b, const P& c, const P& d, const P& e, const P& f, const P& g,
            const P& h) const {
        S ab = dist2(a, b), cd = dist2(c, d), ef = dist2(e, f), gh = dist2(g, h);
        if (zero(ab) || zero(cd) || zero(ef) || zero(gh)) return false;
        // squares: ef + gh + 2 sqrt(ef gh) < ab + cd + 2 sqrt(ab cd)
        S k = S((ab + cd - ef - gh) / 2);
        return sign_sqrt_difference(k, S(ab * cd), S(ef * gh), eps_) > 0;
    }

    // the two proper angles sum to two right angles
    bool rt(const P& a, const P& b, const P& c, const P& d, const P& e, const P& f) const {
        if (!nc(a, b, c) || !nc(d, e, f)) return false;
        return zero(S(signed_cos2(a, b, c) + signed_cos2(d, e, f)));
    }

    bool me(const P& a, const P& b, const P& c, const P& d) const {
        if (eq(a, b) || eq(c, d)) return false;
        return !zero(cross(P(b - a), P(d - c))) || collinear(a, b, c);
    }

    bool cr(const P& a, const P& b, const P& c, const P& d) const {
        if (eq(a, b) || eq(c, d)) return false;
        int o1 = side(a, b, c), o2 = side(a, b, d);
        if (o1 == 0 && o2 == 0) {
            // collinear: the open segments overlap
            P u = b - a;
            S lo1 = 0, hi1 = norm2(u), pc = dot(P(c - a), u), pd = dot(P(d - a), u);
            S lo2 = pc < pd ? pc : pd, hi2 = pc < pd ? pd : pc;
            S lo = lo1 < lo2 ? lo2 : lo1, hi = hi1 < hi2 ? hi1 : hi2;
            return sign(S(hi - lo)) > 0;
        }
        int o3 = side(c, d, a), o4 = side(c, d, b);
        return o1 * o2 < 0 && o3 * o4 < 0;
    }

    bool tp(const P& a, const P& b, const P& c, const P& d) const {
        return ne(a, b) && ne(c, d) && !me(a, b, c, d) && ss(c, d, a, b);
    }

    bool pr(const P& a, const P& b, const P& c, const P& d) const { return ne(a, b) && ne(c, d) && !me(a, b, c, d); }

    // angle abc + angle def = angle pqr, all proper
    bool as(const P& a, const P& b, const P& c, const P& d, const P& e, const P& f, const P& p, const P& q,
            const P& r) const {
        if (!nc(a, b, c) || !nc(d, e, f) || !nc(p, q, r)) return false;
        S d1 = dot(P(a - b), P(c - b)), c1 = cross(P(a - b), P(c - b)), l1 = S(dist2(a, b) * dist2(c, b));
        S d2 = dot(P(d - e), P(f - e)), c2 = cross(P(d - e), P(f - e)), l2 = S(dist2(d, e) * dist2(f, e));
        S d3 = dot(P(p - q), P(r - q)), l3 = S(dist2(p, q) * dist2(r, q));
        // the sum must stay below a straight angle: cos(abc) > -cos(def)
        if (sign(S(signed_cos2(a, b, c) + signed_cos2(d, e, f))) <= 0) return false;
        // cos(sum) = (d1 d2 - |c1 c2|) / sqrt(l1 l2), compared with d3 / sqrt(l3)
        S c12 = S(c1 * c2);
        if (sign(c12) < 0) c12 = -c12;
        S num = S(d1 * d2 - c12);
        if (sign(num) != sign(d3)) return false;
        return zero(S(num * num * l3 - d3 * d3 * l1 * l2));
    }

    bool pg(const P& a, const P& b, const P& c, const P& d) const { return pr(a, b, c, d) && pr(a, d, b, c); }

    bool re(const P& a, const P& b, const P& c, const P& d) const {
        return rr(d, a, b) && rr(a, b, c) && rr(b, c, d) && rr(c, d, a) && cr(a, c, b, d);
    }

    bool sq(const P& a, const P& b, const P& c, const P& d) const {
        return ee(a, b, c, d) && ee(a, b, b, c) && ee(a, b, d, a) && rr(d, a, b) && rr(a, b, c) && rr(b, c, d) &&
               rr(c, d, a);
    }

    bool rc(const P& a, const P& b, const P& c, const P& d, const P& w, const P& x, const P& y, const P& z) const {
        return re(a, b, c, d) && re(w, x, y, z) && ee(a, b, w, x) && ee(b, c, x, y);
    }

    bool er(const P& a, const P& b, const P& c, const P& d, const P& w, const P& x, const P& y, const P& z) const {
        return re(a, b, c, d) && re(w, x, y, z) && equal_abs(sarea4(a, b, c, d), sarea4(w, x, y, z));
    }

    bool br(const P& a, const P& b, const P& c, const P& d, const P& e) const { return re(b, c, d, e) && co(d, e, a); }

    bool et(const P& a, const P& b, const P& c, const P& x, const P& y, const P& z) const {
        S s = tarea(a, b, c), t = tarea(x, y, z);
        return !zero(s) && equal_abs(s, t);
    }

    /// Non-zero area and either convex with strictly crossing diagonals, or a
    /// triangle with one vertex strictly inside an edge.
    bool admissible(const P& a, const P& b, const P& c, const P& d) const {
        if (zero(sarea4(a, b, c, d))) return false;
        return cr(a, c, b, d) || be(d, a, b) || be(a, b, c) || be(b, c, d) || be(c, d, a);
    }

    bool ef(const P& a, const P& b, const P& c, const P& d, const P& w, const P& x, const P& y, const P& z) const {
        return admissible(a, b, c, d) && admissible(w, x, y, z) && equal_abs(sarea4(a, b, c, d), sarea4(w, x, y, z));
    }

private:
    bool equal_abs(const S& s, const S& t) const { return zero(S(s - t)) || zero(S(s + t)); }

    double eps_;
};

namespace detail {

template <class S>
bool eval_points(const Plane<S>& g, std::string_view name, const std::vector<Point<S>>& p) {
    // dispatch on the two-letter code; arity is guaranteed by the formula's signature
    switch (name[0] << 8 | name[1]) {
    case 'E' << 8 | 'Q': return g.eq(p[0], p[1]);
    case 'N' << 8 | 'E': return g.ne(p[0], p[1]);
    case 'B' << 8 | 'E': return g.be(p[0], p[1], p[2]);
    case 'E' << 8 | 'E': return g.ee(p[0], p[1], p[2], p[3]);
    case 'C' << 8 | 'O': return g.co(p[0], p[1], p[2]);
    case 'N' << 8 | 'C': return g.nc(p[0], p[1], p[2]);
    case 'T' << 8 | 'R': return g.nc(p[0], p[1], p[2]);
    case 'E' << 8 | 'L': return g.el(p[0], p[1], p[2]);
    case 'R' << 8 | 'A': return g.ra(p[0], p[1], p[2]);
    case 'L' << 8 | 'T': return g.lt(p[0], p[1], p[2], p[3]);
    case 'M' << 8 | 'I': return g.mi(p[0], p[1], p[2]);
    case 'E' << 8 | 'A': return g.ea(p[0], p[1], p[2], p[3], p[4], p[5]);
    case 'S' << 8 | 'U': return g.su(p[0], p[1], p[2], p[3], p[4]);
    case 'R' << 8 | 'R': return g.rr(p[0], p[1], p[2]);
    case 'P' << 8 | 'A': return g.pa(p[0], p[1], p[2], p[3], p[4]);
    case 'P' << 8 | 'E': return g.pe(p[0], p[1], p[2], p[3]);
    case 'I' << 8 | 'A': return g.ia(p[0], p[1], p[2], p[3]);
    case 'O' << 8 | 'S': return g.os(p[0], p[1], p[2], p[3]);
    case 'S' << 8 | 'S': return g.ss(p[0], p[1], p[2], p[3]);
    case 'I' << 8 | 'S': return g.is(p[0], p[1], p[2]);
    case 'C' << 8 | 'U': return g.cu(p[0], p[1], p[2], p[3], p[4]);
    case 'T' << 8 | 'C': return g.tc(p[0], p[1], p[2], p[3], p[4], p[5]);
    case 'A' << 8 | 'O': return g.ao(p[0], p[1], p[2], p[3], p[4], p[5]);
    case 'T' << 8 | 'G': return g.tg(p[0], p[1], p[2], p[3], p[4], p[5]);
    case 'T' << 8 | 'T': return g.tt(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]);
    case 'R' << 8 | 'T': return g.rt(p[0], p[1], p[2], p[3], p[4], p[5]);
    case 'M' << 8 | 'E': return g.me(p[0], p[1], p[2], p[3]);
    case 'C' << 8 | 'R': return g.cr(p[0], p[1], p[2], p[3]);
    case 'T' << 8 | 'P': return g.tp(p[0], p[1], p[2], p[3]);
    case 'P' << 8 | 'R': return g.pr(p[0], p[1], p[2], p[3]);
    case 'A' << 8 | 'S': return g.as(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]);
    case 'P' << 8 | 'G': return g.pg(p[0], p[1], p[2], p[3]);
    case 'S' << 8 | 'Q': return g.sq(p[0], p[1], p[2], p[3]);
    case 'R' << 8 | 'E': return g.re(p[0], p[1], p[2], p[3]);
    case 'R' << 8 | 'C': return g.rc(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]);
    case 'E' << 8 | 'R': return g.er(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]);
    case 'B' << 8 | 'R': return g.br(p[0], p[1], p[2], p[3], p[4]);
    case 'E' << 8 | 'T':
    case 'T' << 8 | 'E': return g.et(p[0], p[1], p[2], p[3], p[4], p[5]);
    case 'E' << 8 | 'F':
    case 'F' << 8 | 'E': return g.ef(p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7]);
    }
    throw Error(ErrorKind::UnsupportedPredicate, "no decision procedure for " + std::string(name));
}

} // namespace detail

/// Predicates without a decision procedure in the plane.
inline bool supported_predicate(std::string_view name) { return name != "FR"; }

inline bool supported_formula(const Formula& f) {
    if (f.is_atom()) return supported_predicate(f.predicate());
    for (const auto& p : f.parts())
        if (!supported_formula(p)) return false;
    return true;
}

template <class S>
bool eval_atom(const PlaneModel<S>& m, const Formula& atom) {
    if (!atom.is_atom()) throw Error(ErrorKind::UnsupportedPredicate, "eval_atom needs an atom");
    std::string_view name = atom.predicate();
    if (!supported_predicate(name))
        throw Error(ErrorKind::UnsupportedPredicate, "no decision procedure for " + std::string(name));
    Plane<S> g(m.eps);
    const std::string& args = atom.args();
    if (name == "CI") return g.ci(m.circle(args[0]), m.point(args[1]), m.point(args[2]), m.point(args[3]));
    if (name == "IC") return g.ic(m.point(args[0]), m.circle(args[1]));
    if (name == "OC") return g.oc(m.point(args[0]), m.circle(args[1]));
    if (name == "ON") return g.on(m.point(args[0]), m.circle(args[1]));
    std::vector<Point<S>> pts;
    pts.reserve(args.size());
    for (char v : args) pts.push_back(m.point(v));
    return detail::eval_points(g, name, pts);
}

template <class S>
bool eval_formula(const PlaneModel<S>& m, const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::Atom: return eval_atom(m, f);
    case Formula::Kind::Not: return !eval_formula(m, f.operand());
    case Formula::Kind::And:
        for (const auto& p : f.parts())
            if (!eval_formula(m, p)) return false;
        return true;
    case Formula::Kind::Or:
        for (const auto& p : f.parts())
            if (eval_formula(m, p)) return true;
        return false;
    }
    return false;
}

template <class S>
std::string format_model(const PlaneModel<S>& m) {
    std::string out;
    for (const auto& [v, p] : m.points) out += std::string(out.empty() ? "" : " ") + v + "=" + format_point(p);
    for (const auto& [v, c] : m.circles) out += std::string(out.empty() ? "" : " ") + v + "=" + format_circle(c);
    return out;
}

} // namespace euc

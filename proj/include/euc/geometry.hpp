#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include <gmpxx.h>

#include "euc/error.hpp"

namespace euc {

using Rational = mpq_class;

template <class S>
struct Point {
    S x{}, y{};

    friend Point operator+(const Point& a, const Point& b) { return {S(a.x + b.x), S(a.y + b.y)}; }
    friend Point operator-(const Point& a, const Point& b) { return {S(a.x - b.x), S(a.y - b.y)}; }
    friend Point operator*(const S& k, const Point& a) { return {S(k * a.x), S(k * a.y)}; }
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

/// Center plus two points whose distance is the radius; r1 != r2.
template <class S>
struct CircleVal {
    Point<S> center, r1, r2;

    friend bool operator==(const CircleVal& a, const CircleVal& b) {
        return a.center == b.center && a.r1 == b.r1 && a.r2 == b.r2;
    }
};

// (a,b) x (c,d) = ad - bc
template <class S>
S cross(const Point<S>& u, const Point<S>& v) {
    return S(u.x * v.y - u.y * v.x);
}

template <class S>
S dot(const Point<S>& u, const Point<S>& v) {
    return S(u.x * v.x + u.y * v.y);
}

template <class S>
S norm2(const Point<S>& u) {
    return dot(u, u);
}

template <class S>
S dist2(const Point<S>& a, const Point<S>& b) {
    return norm2(Point<S>(b - a));
}

/// Twice the signed area of triangle abc.
template <class S>
S tarea(const Point<S>& a, const Point<S>& b, const Point<S>& c) {
    return cross(Point<S>(c - a), Point<S>(b - a));
}

/// Twice the signed area of quadrilateral abcd, as the cross product of its diagonals.
template <class S>
S sarea4(const Point<S>& a, const Point<S>& b, const Point<S>& c, const Point<S>& d) {
    return cross(Point<S>(c - a), Point<S>(b - d));
}

template <class S>
Point<S> perp(const Point<S>& u) {
    return {S(-u.y), u.x};
}

template <class S>
S radius2(const CircleVal<S>& c) {
    return dist2(c.r1, c.r2);
}

/// Scalar-dependent comparisons. Exact for rationals; doubles compare within eps.
inline int sign_of(const Rational& v, double) { return sgn(v); }
inline int sign_of(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

template <class S>
Point<double> to_double(const Point<S>& p) {
    return {to_double(p.x), to_double(p.y)};
}

template <class S>
CircleVal<double> to_double(const CircleVal<S>& c) {
    return {to_double(c.center), to_double(c.r1), to_double(c.r2)};
}

inline std::string format_scalar(const Rational& v) { return v.get_str(); }

inline std::string format_scalar(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

template <class S>
std::string format_point(const Point<S>& p) {
    return "(" + format_scalar(p.x) + "," + format_scalar(p.y) + ")";
}

template <class S>
std::string format_circle(const CircleVal<S>& c) {
    return "(" + format_point(c.center) + "," + format_point(c.r1) + "," + format_point(c.r2) + ")";
}

/// sign(a + b*sqrt(q)) for q >= 0.
template <class S>
int sign_plus_sqrt(const S& a, const S& b, const S& q, double eps) {
    int sa = sign_of(a, eps), sb = sign_of(b, eps);
    if (sb == 0 || sign_of(q, eps) == 0) return sa;
    if (sa >= 0 && sb > 0) return 1;
    if (sa <= 0 && sb < 0) return -1;
    int c = sign_of(S(a * a - b * b * q), eps);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

/// sign(k + sqrt(q) - sqrt(p)) for p, q >= 0.
template <class S>
int sign_sqrt_difference(const S& k, const S& q, const S& p, double eps) {
    int alpha = sign_plus_sqrt(k, S(1), q, eps); // alpha = k + sqrt(q)
    if (alpha <= 0) return sign_of(p, eps) == 0 ? alpha : -1;
    // both sides positive: compare alpha^2 = k^2 + q + 2k sqrt(q) against p
    return sign_plus_sqrt(S(k * k + q - p), S(2 * k), q, eps);
}

/// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& v) {
    if (sgn(v) < 0) return std::nullopt;
    mpz_class n = v.get_num(), d = v.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

/// Intersection of lines ab and cd; DegenerateConfiguration when parallel.
template <class S>
Point<S> line_intersection(const Point<S>& a, const Point<S>& b, const Point<S>& c, const Point<S>& d,
                           double eps = 0) {
    Point<S> r = b - a, s = d - c;
    S den = cross(r, s);
    if (sign_of(den, eps) == 0) throw Error(ErrorKind::DegenerateConfiguration, "lines are parallel");
    S t = S(cross(Point<S>(c - a), s) / den);
    return a + Point<S>(t * r);
}

/// Rational rotation by the angle with cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2).
inline Point<Rational> rational_rotation(const Rational& t) {
    Rational den = 1 + t * t;
    return {Rational((1 - t * t) / den), Rational(2 * t / den)};
}

template <class S>
Point<S> rotate(const Point<S>& v, const Point<S>& cs) {
    return {S(cs.x * v.x - cs.y * v.y), S(cs.y * v.x + cs.x * v.y)};
}

/// Mirror image of p in the line through a and b (a != b).
template <class S>
Point<S> reflect(const Point<S>& p, const Point<S>& a, const Point<S>& b) {
    Point<S> d = b - a;
    S t = S(dot(Point<S>(p - a), d) / norm2(d));
    Point<S> foot = a + Point<S>(t * d);
    return Point<S>(S(2) * foot) - p;
}

} // namespace euc

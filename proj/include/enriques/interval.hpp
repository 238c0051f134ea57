#ifndef ENRIQUES_INTERVAL_HPP
#define ENRIQUES_INTERVAL_HPP

#include <algorithm>

#include "enriques/numeric.hpp"

namespace enriques {

// Closed rational interval; endpoints are exact, so no rounding is involved.
struct QI {
    Rat lo, hi;

    QI() = default;
    QI(Rat v) : lo(v), hi(std::move(v)) {}
    QI(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("BadInterval", "interval endpoints out of order");
    }

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rat width() const { return hi - lo; }

    friend QI operator+(const QI& a, const QI& b) { return QI(a.lo + b.lo, a.hi + b.hi); }
    friend QI operator-(const QI& a, const QI& b) { return QI(a.lo - b.hi, a.hi - b.lo); }
    friend QI operator-(const QI& a) { return QI(-a.hi, -a.lo); }
    friend QI operator*(const QI& a, const QI& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return QI(std::min(std::min(p1, p2), std::min(p3, p4)),
                  std::max(std::max(p1, p2), std::max(p3, p4)));
    }
    friend QI operator*(const Rat& c, const QI& a) {
        return sgn(c) >= 0 ? QI(c * a.lo, c * a.hi) : QI(c * a.hi, c * a.lo);
    }
    friend QI operator+(const Rat& c, const QI& a) { return QI(c + a.lo, c + a.hi); }

    QI square() const {
        Rat l2 = lo * lo, h2 = hi * hi;
        if (contains_zero()) return QI(Rat(0), std::max(l2, h2));
        return QI(std::min(l2, h2), std::max(l2, h2));
    }
    QI pow(unsigned n) const {
        if (n == 0) return QI(Rat(1));
        QI sq = square();
        QI r = (n % 2) ? *this : QI(Rat(1));
        unsigned half = n / 2;
        for (unsigned k = 0; k < half; ++k) r = r * sq;
        return r;
    }
};

// A patch of the unit circle parametrized by the half-angle tangent t:
// chart 0: (cos, sin) = ((1-t^2)/(1+t^2), 2t/(1+t^2)), covering angles in
// (-pi/2, pi/2) for t in [-1, 1]; chart 1 negates both coordinates and covers
// the opposite half. Rational t gives exact rational points on the circle.
struct CirclePatch {
    int chart = 0;  // 0 or 1
    QI t;           // subset of [-1, 1]
};

struct CirclePoint {
    Rat c, s;  // exact, c^2 + s^2 = 1
};

CirclePoint circle_point(int chart, const Rat& t);

struct CircleEnclosure {
    QI c, s;
};

// tight enclosure of (cos, sin) over a patch, using monotonicity in t
CircleEnclosure circle_enclosure(const CirclePatch& p);

}  // namespace enriques

#endif

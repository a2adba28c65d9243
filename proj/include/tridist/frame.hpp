#ifndef TRIDIST_FRAME_HPP
#define TRIDIST_FRAME_HPP

#include <utility>
#include <vector>

#include "tridist/rational.hpp"

namespace tridist {

struct PlanePoint {
    Rational x, y;
    bool operator==(const PlanePoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const PlanePoint& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Anchors p1 = (1,0), p2 = (-1,0), p3 = (a,b). b == 0 means the anchors are
// collinear; a == 1 / a == -1 put p3 co-vertical with p1 / p2.
struct AnchorFrame {
    Rational a, b;
    bool collinear() const { return sgn(b) == 0; }
    bool covertical_p1() const { return a == 1; }
    bool covertical_p2() const { return a == -1; }
    PlanePoint p1() const { return {Rational(1), Rational(0)}; }
    PlanePoint p2() const { return {Rational(-1), Rational(0)}; }
    PlanePoint p3() const { return {a, b}; }
    bool operator==(const AnchorFrame& o) const { return a == o.a && b == o.b; }
};

// The point set P in a normalized frame. No point may coincide with an
// anchor and there are no duplicates; validate() enforces both.
struct Configuration {
    AnchorFrame frame;
    std::vector<PlanePoint> points;
    void validate() const;  // throws std::invalid_argument on violation
};

// Squared distances of one point to (p1, p2, p3). For q = (x, y) the
// identity Y - X = 4x always holds.
struct DistanceTriple {
    Rational X, Y, Z;
};

// Moves arbitrary anchors to the normalized frame with the orientation-aware
// similarity T(z) = (2z - p1 - p2)/(p1 - p2), reflecting afterwards if
// needed so that b >= 0. Returns the configuration and the factor by which
// every squared distance was multiplied (4 / |p1 p2|^2). Distinct-distance
// counts are invariant under both steps.
std::pair<Configuration, Rational> normalize(const PlanePoint& p1, const PlanePoint& p2,
                                             const PlanePoint& p3,
                                             const std::vector<PlanePoint>& P);

// Exact squared distances of q to the three anchors; throws if q is an
// anchor.
DistanceTriple distance_triple(const AnchorFrame& frame, const PlanePoint& q);

inline Rational squared_distance(const PlanePoint& p, const PlanePoint& q) {
    Rational dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

}  // namespace tridist

#endif

#include "tridist/frame.hpp"

#include <set>
#include <stdexcept>

namespace tridist {

void Configuration::validate() const {
    std::set<PlanePoint> seen;
    const PlanePoint anchors[3] = {frame.p1(), frame.p2(), frame.p3()};
    for (const auto& q : points) {
        for (const auto& p : anchors)
            if (q == p)
                throw std::invalid_argument("configuration point coincides with an anchor");
        if (!seen.insert(q).second)
            throw std::invalid_argument("duplicate point in configuration");
    }
}

namespace {

// complex number over Q
struct QC {
    Rational re, im;
    QC operator-(const QC& o) const { return {re - o.re, im - o.im}; }
    QC operator+(const QC& o) const { return {re + o.re, im + o.im}; }
    QC operator*(const QC& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    QC operator/(const QC& o) const {
        Rational n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
};

QC to_qc(const PlanePoint& p) { return {p.x, p.y}; }

}  // namespace

std::pair<Configuration, Rational> normalize(const PlanePoint& p1, const PlanePoint& p2,
                                             const PlanePoint& p3,
                                             const std::vector<PlanePoint>& P) {
    if (p1 == p2) throw std::invalid_argument("normalize: p1 == p2");
    if (p3 == p1 || p3 == p2) throw std::invalid_argument("normalize: p3 collides with p1 or p2");
    QC c1 = to_qc(p1), c2 = to_qc(p2);
    QC denom = c1 - c2;
    auto apply = [&](const PlanePoint& p) {
        QC z = to_qc(p);
        QC w = (QC{z.re * 2, z.im * 2} - c1 - c2) / denom;
        return PlanePoint{w.re, w.im};
    };
    PlanePoint t3 = apply(p3);
    bool reflect = sgn(t3.y) < 0;
    if (reflect) t3.y = -t3.y;
    Configuration cfg;
    cfg.frame = AnchorFrame{t3.x, t3.y};
    cfg.points.reserve(P.size());
    for (const auto& p : P) {
        PlanePoint t = apply(p);
        if (reflect) t.y = -t.y;
        cfg.points.push_back(t);
    }
    cfg.validate();
    Rational scale = Rational(4) / squared_distance(p1, p2);
    return {cfg, scale};
}

DistanceTriple distance_triple(const AnchorFrame& frame, const PlanePoint& q) {
    const PlanePoint anchors[3] = {frame.p1(), frame.p2(), frame.p3()};
    for (const auto& p : anchors)
        if (q == p) throw std::invalid_argument("distance_triple: point coincides with an anchor");
    DistanceTriple t;
    t.X = squared_distance(q, anchors[0]);
    t.Y = squared_distance(q, anchors[1]);
    t.Z = squared_distance(q, anchors[2]);
    return t;
}

}  // namespace tridist

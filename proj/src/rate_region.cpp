#include "cogcap/rate_region.hpp"

#include <algorithm>
#include <cmath>

#include "cogcap/errors.hpp"

namespace cogcap {

namespace {

constexpr double kAxisEps = 1e-12;

double cross(Point o, Point a, Point b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

double dist(Point a, Point b) { return std::hypot(a.r1 - b.r1, a.r2 - b.r2); }

double segment_distance(Point p, Point a, Point b) {
    const double dx = b.r1 - a.r1, dy = b.r2 - a.r2;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return dist(p, a);
    const double t = std::clamp(((p.r1 - a.r1) * dx + (p.r2 - a.r2) * dy) / len2, 0.0, 1.0);
    return dist(p, {a.r1 + t * dx, a.r2 + t * dy});
}

// Counter-clockwise polygon conv{origin, chain}.
std::vector<Point> polygon(const RateRegion& r) {
    std::vector<Point> poly;
    if (!(r.vertices.front() == Point{})) poly.push_back(Point{});
    for (const Point& v : r.vertices)
        if (poly.empty() || !(v == poly.back())) poly.push_back(v);
    if (poly.size() > 1 && poly.back() == poly.front()) poly.pop_back();
    return poly;
}

double signed_area(const std::vector<Point>& poly) {
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        s += a.r1 * b.r2 - b.r1 * a.r2;
    }
    return 0.5 * s;
}

double distance_to_polygon(Point p, const std::vector<Point>& poly) {
    const std::size_t n = poly.size();
    if (n == 1) return dist(p, poly[0]);
    if (n >= 3 && signed_area(poly) > 1e-15) {
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i) {
            const Point& a = poly[i];
            const Point& b = poly[(i + 1) % n];
            const double len = dist(a, b);
            if (len > 0.0 && cross(a, b, p) / len < -1e-12) inside = false;
        }
        if (inside) return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) best = std::min(best, segment_distance(p, poly[i], poly[(i + 1) % n]));
    return best;
}

}  // namespace

std::vector<Point> normalize_chain(std::vector<Point> chain) {
    for (Point& p : chain) {
        if (p.r1 < -1e-9 || p.r2 < -1e-9 || !std::isfinite(p.r1) || !std::isfinite(p.r2))
            throw ArgumentError("region vertex outside the nonnegative quadrant");
        if (p.r1 < kAxisEps) p.r1 = 0.0;
        if (p.r2 < kAxisEps) p.r2 = 0.0;
    }
    std::erase_if(chain, [](const Point& p) { return p == Point{}; });
    if (chain.empty()) return {Point{}};
    if (chain.front().r2 > 0.0) chain.insert(chain.begin(), Point{chain.front().r1, 0.0});
    if (chain.back().r1 > 0.0) chain.push_back(Point{0.0, chain.back().r2});
    if (chain.size() == 1) return {Point{}};  // only reachable for the origin

    std::vector<Point> out;
    for (const Point& p : chain) {
        if (!out.empty() && dist(out.back(), p) <= kAxisEps) continue;
        while (out.size() >= 2) {
            const Point& a = out[out.size() - 2];
            const Point& b = out.back();
            const double scale = std::max({dist(a, b), dist(b, p), 1.0});
            if (std::abs(cross(a, b, p)) <= 1e-13 * scale * scale) {
                out.pop_back();
            } else {
                break;
            }
        }
        out.push_back(p);
    }
    return out;
}

RateRegion region_from_chain(std::vector<Point> chain) {
    RateRegion r;
    r.vertices = normalize_chain(std::move(chain));
    r.provenance.assign(r.vertices.size(), kNoProvenance);
    return r;
}

std::vector<Point> clip_box(double r1_max, double r2_max, const std::vector<HalfPlane>& planes) {
    r1_max = std::max(r1_max, 0.0);
    r2_max = std::max(r2_max, 0.0);
    if (r1_max < kAxisEps && r2_max < kAxisEps) return {Point{}};
    if (r1_max < kAxisEps) return normalize_chain({Point{0.0, 0.0}, Point{0.0, r2_max}});
    if (r2_max < kAxisEps) return normalize_chain({Point{r1_max, 0.0}, Point{0.0, 0.0}});

    std::vector<Point> poly{{0.0, 0.0}, {r1_max, 0.0}, {r1_max, r2_max}, {0.0, r2_max}};
    for (const HalfPlane& h : planes) {
        auto excess = [&](Point p) { return h.n1 * p.r1 + h.n2 * p.r2 - h.c; };
        const double tol = 1e-13 * std::max(1.0, std::abs(h.c));
        std::vector<Point> next;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point a = poly[i];
            const Point b = poly[(i + 1) % poly.size()];
            const double ea = excess(a), eb = excess(b);
            const bool ia = ea <= tol, ib = eb <= tol;
            if (ia) next.push_back(a);
            if (ia != ib) {
                const double t = ea / (ea - eb);
                next.push_back({a.r1 + t * (b.r1 - a.r1), a.r2 + t * (b.r2 - a.r2)});
            }
        }
        poly = std::move(next);
        if (poly.empty()) return {Point{}};
    }
    // The origin survives every clip (n >= 0, c >= 0) and stays first.
    std::vector<Point> chain(poly.begin() + 1, poly.end());
    return normalize_chain(std::move(chain));
}

std::optional<std::string> invariant_violation(const RateRegion& region) {
    const auto& v = region.vertices;
    if (v.empty()) return "empty vertex list";
    for (const Point& p : v)
        if (!(p.r1 >= 0.0 && p.r2 >= 0.0)) return "vertex outside the nonnegative quadrant";
    if (v.size() == 1) {
        if (!(v[0] == Point{})) return "single vertex must be the origin";
        return std::nullopt;
    }
    if (v.front().r2 != 0.0) return "chain must start on the R1 axis";
    if (v.back().r1 != 0.0) return "chain must end on the R2 axis";
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].r1 > v[i - 1].r1 + 1e-12 || v[i].r2 < v[i - 1].r2 - 1e-12) return "chain is not monotone";
    }
    for (std::size_t i = 2; i < v.size(); ++i) {
        if (cross(v[i - 2], v[i - 1], v[i]) < -1e-12) return "chain is not convex";
    }
    if (!region.provenance.empty() && region.provenance.size() != v.size()) return "provenance size mismatch";
    return std::nullopt;
}

SubsetResult region_subset(const RateRegion& a, const RateRegion& b, double tol) {
    std::vector<HalfPlane> planes{{1.0, 0.0, b.r1_max()}, {0.0, 1.0, b.r2_max()}};
    const auto& bv = b.vertices;
    for (std::size_t i = 1; i < bv.size(); ++i) {
        double n1 = bv[i].r2 - bv[i - 1].r2;
        double n2 = bv[i - 1].r1 - bv[i].r1;
        const double m = std::max(n1, n2);
        if (m <= 0.0) continue;
        n1 /= m;
        n2 /= m;
        planes.push_back({n1, n2, n1 * bv[i].r1 + n2 * bv[i].r2});
    }
    double worst = 0.0;
    for (const HalfPlane& h : planes)
        for (const Point& p : a.vertices) worst = std::max(worst, h.n1 * p.r1 + h.n2 * p.r2 - h.c);
    return {worst <= tol, worst};
}

double hausdorff(const RateRegion& a, const RateRegion& b) {
    const auto pa = polygon(a);
    const auto pb = polygon(b);
    double h = 0.0;
    for (const Point& p : pa) h = std::max(h, distance_to_polygon(p, pb));
    for (const Point& p : pb) h = std::max(h, distance_to_polygon(p, pa));
    return h;
}

double area(const RateRegion& region) {
    const auto poly = polygon(region);
    return poly.size() < 3 ? 0.0 : std::abs(signed_area(poly));
}

double support_value(const RateRegion& region, double mu1, double mu2) {
    double best = 0.0;
    for (const Point& p : region.vertices) best = std::max(best, mu1 * p.r1 + mu2 * p.r2);
    return best;
}

}  // namespace cogcap

#include "steiner/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace steiner {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935274;

void check_chain(const ChainLengths& a) {
    if (a.n() < 1) throw std::domain_error("chain needs at least one edge");
    if (std::abs(a.a[0] - 1.0) > 1e-12)
        throw std::domain_error("chain is normalized to a_1 = 1");
    for (double x : a.a)
        if (!(x >= 0.0)) throw std::domain_error("chain lengths must be nonnegative");
}

double at(const ChainLengths& a, int k) { return a.a[static_cast<std::size_t>(k - 1)]; }

// Squared chord |A_u A_v|^2 from the unit-vector sum; used beyond the
// tabulated range v <= 6.
double chord2_generic(int u, int v, const ChainLengths& a) {
    double x = 0.0, y = 0.0;
    for (int k = u + 1; k <= v; ++k) {
        const double th = -1.0471975511965976 * (k - 1);  // -60 deg steps
        x += at(a, k) * std::cos(th);
        y += at(a, k) * std::sin(th);
    }
    return x * x + y * y;
}

// Tabulated squared-chord polynomials |A_u A_v|^2 in a_2..a_6.
double chord2_table(int u, int v, const ChainLengths& a) {
    const double a2 = v >= 2 ? at(a, 2) : 0.0;
    const double a3 = v >= 3 ? at(a, 3) : 0.0;
    const double a4 = v >= 4 ? at(a, 4) : 0.0;
    const double a5 = v >= 5 ? at(a, 5) : 0.0;
    const double a6 = v >= 6 ? at(a, 6) : 0.0;
    switch (u * 8 + v) {
        case 0 * 8 + 2: return 1 + a2 + a2 * a2;
        case 0 * 8 + 3: return 1 + a2 + a2 * a2 - a3 + a2 * a3 + a3 * a3;
        case 0 * 8 + 4:
            return a2 * a2 + a3 * a3 + a2 * (1 + a3 - a4) + a3 * (-1 + a4) +
                   (-1 + a4) * (-1 + a4);
        case 0 * 8 + 5:
            return 1 + a2 * a2 + a3 * a3 - 2 * a4 + a4 * a4 +
                   a2 * (1 + a3 - a4 - 2 * a5) + a3 * (-1 + a4 - a5) - a5 + a4 * a5 +
                   a5 * a5;
        case 0 * 8 + 6:
            return 1 + a2 * a2 + a3 * a3 - 2 * a4 + a4 * a4 - a5 + a4 * a5 + a5 * a5 +
                   a3 * (-1 + a4 - a5 - 2 * a6) + a2 * (1 + a3 - a4 - 2 * a5 - a6) + a6 -
                   a4 * a6 + a5 * a6 + a6 * a6;
        case 1 * 8 + 3: return a2 * a2 + a2 * a3 + a3 * a3;
        case 1 * 8 + 4: return a2 * a2 + a3 * a3 + a2 * (a3 - a4) + a3 * a4 + a4 * a4;
        case 1 * 8 + 5:
            return a2 * a2 + a3 * a3 + a4 * a4 + a2 * (a3 - a4 - 2 * a5) +
                   a3 * (a4 - a5) + a4 * a5 + a5 * a5;
        case 1 * 8 + 6:
            return a2 * a2 + a3 * a3 + a4 * a4 + a4 * a5 + a5 * a5 +
                   a3 * (a4 - a5 - 2 * a6) + a2 * (a3 - a4 - 2 * a5 - a6) - a4 * a6 +
                   a5 * a6 + a6 * a6;
        case 2 * 8 + 4: return a3 * a3 + a3 * a4 + a4 * a4;
        case 2 * 8 + 5:
            return a3 * a3 + a4 * a4 + a3 * (a4 - a5) + a4 * a5 + a5 * a5;
        case 2 * 8 + 6:
            return a3 * a3 + a4 * a4 + a5 * a5 + a3 * (a4 - a5 - 2 * a6) +
                   a4 * (a5 - a6) + a5 * a6 + a6 * a6;
        case 3 * 8 + 5: return a4 * a4 + a4 * a5 + a5 * a5;
        case 3 * 8 + 6:
            return a4 * a4 + a5 * a5 + a4 * (a5 - a6) + a5 * a6 + a6 * a6;
        case 4 * 8 + 6: return a5 * a5 + a5 * a6 + a6 * a6;
        default: return chord2_generic(u, v, a);
    }
}

double seg_point_dist(Point p, Point a, Point b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    double t = len2 > 0.0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
    t = std::max(0.0, std::min(1.0, t));
    const Point c{a.x + t * vx, a.y + t * vy};
    return dist(p, c);
}

bool in_polygon(Point p, const std::vector<Point>& poly, double tol) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        if (seg_point_dist(p, poly[j], poly[i]) <= tol) return true;
        const bool cross = (poly[i].y > p.y) != (poly[j].y > p.y);
        if (cross) {
            const double xi = poly[j].x + (p.y - poly[j].y) / (poly[i].y - poly[j].y) *
                                              (poly[i].x - poly[j].x);
            if (p.x < xi) inside = !inside;
        }
    }
    return inside;
}

}  // namespace

std::vector<Point> chain_points(const ChainLengths& a) {
    check_chain(a);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(a.n()) + 1);
    pts.push_back({0.0, 0.0});
    for (int k = 1; k <= a.n(); ++k) {
        const double th = -1.0471975511965976 * (k - 1);
        pts.push_back({pts.back().x + at(a, k) * std::cos(th),
                       pts.back().y + at(a, k) * std::sin(th)});
    }
    return pts;
}

bool cond_A(int u, int v, int s, const ChainLengths& a) {
    check_chain(a);
    if (!(0 <= u && u < s && s <= v && v <= a.n()))
        throw std::domain_error("cond_A: index constraint 0 <= u < s <= v <= n violated");
    const double as = at(a, s);
    if (v - u == 1) return at(a, v) >= as;
    return chord2_table(u, v, a) >= as * as;
}

CondBClauses cond_B_clauses(int u, int v, const ChainLengths& a) {
    const double a2 = v >= 2 ? at(a, 2) : 0.0;
    const double a3 = v >= 3 ? at(a, 3) : 0.0;
    const double a4 = v >= 4 ? at(a, 4) : 0.0;
    const double a5 = v >= 5 ? at(a, 5) : 0.0;
    switch (u * 8 + v) {
        case 0 * 8 + 2:
            return {true, (1 - a2) / 2, kSqrt3 * (1 + a2) / 2};
        case 0 * 8 + 3:
            return {true, (2 + a2 - a3) / 2, kSqrt3 * (a2 + a3) / 2};
        case 0 * 8 + 4:
            return {true, (1 + 2 * a2 + a3 - a4) / 2, kSqrt3 * (-1 + a3 + a4) / 2};
        case 0 * 8 + 5:
            return {true, (-1 + a2 + 2 * a3 + a4 - a5) / 2,
                    kSqrt3 * (-1 - a2 + a4 + a5) / 2};
        case 1 * 8 + 3:
            return {true, (a2 - a3) / 2, kSqrt3 * (a2 + a3) / 2};
        case 1 * 8 + 4:
            return {true, (2 * a2 + a3 - a4) / 2, kSqrt3 * (a3 + a4) / 2};
        case 1 * 8 + 5:
            return {true, (a2 + 2 * a3 + a4 - a5) / 2, kSqrt3 * (-a2 + a4 + a5) / 2};
        case 2 * 8 + 4:
            return {true, (a3 - a4) / 2, kSqrt3 * (a3 + a4) / 2};
        case 2 * 8 + 5:
            return {true, (2 * a3 + a4 - a5) / 2, kSqrt3 * (a4 + a5) / 2};
        case 3 * 8 + 5:
            return {true, (a4 - a5) / 2, kSqrt3 * (a4 + a5) / 2};
        default:
            return {false, 0.0, 0.0};  // adjacent rows are identically false
    }
}

bool cond_B(int u, int v, int s, const ChainLengths& a) {
    check_chain(a);
    if (!(0 <= u && u < s && s <= v && v < std::min(6, a.n())))
        throw std::domain_error("cond_B: index constraint 0 <= u < s <= v < min(6, n) violated");
    const CondBClauses cl = cond_B_clauses(u, v, a);
    if (!cl.defined) return false;
    return cl.ray >= 0.0 && cl.footdist <= at(a, s);
}

TrapSimulation trap_simulate(const ChainLengths& a) {
    TrapSimulation sim;
    sim.points = chain_points(a);
    sim.endpoint = sim.points.back();
    const int n = a.n();
    for (int u = 0; u + 1 < std::min(6, n); ++u) {
        for (int v = u + 1; v < std::min(6, n); ++v) {
            for (int s = u + 1; s <= v; ++s) {
                if (!cond_B(u, v, s, a)) continue;
                // foot of the perpendicular from A_u on line A_v A_{v+1}
                const Point au = sim.points[static_cast<std::size_t>(u)];
                const Point av = sim.points[static_cast<std::size_t>(v)];
                const Point an = sim.points[static_cast<std::size_t>(v + 1)];
                const double dx = an.x - av.x, dy = an.y - av.y;
                const double L2 = dx * dx + dy * dy;
                Point h = av;
                if (L2 > 0.0) {
                    const double t = ((au.x - av.x) * dx + (au.y - av.y) * dy) / L2;
                    h = {av.x + t * dx, av.y + t * dy};
                }
                std::vector<Point> poly;
                for (int k = u; k <= v; ++k) poly.push_back(sim.points[static_cast<std::size_t>(k)]);
                poly.push_back(h);
                sim.fired.push_back({u, v, s, in_polygon(sim.endpoint, poly, 1e-9)});
            }
        }
    }
    return sim;
}

}  // namespace steiner

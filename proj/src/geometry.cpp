#include "steiner/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steiner {

Point polar_offset(Point p, double length, double angle_deg) {
    if (length < 0.0) throw std::domain_error("polar_offset: negative length");
    const double th = angle_deg * std::numbers::pi / 180.0;
    return {p.x + length * std::cos(th), p.y + length * std::sin(th)};
}

double mst_length(std::span<const Point> points) {
    const std::size_t n = points.size();
    if (n == 0) throw std::domain_error("mst_length: empty point set");
    if (n == 1) return 0.0;

    struct Edge {
        double w;
        std::size_t i, j;
    };
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.push_back({dist(points[i], points[j]), i, j});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    double total = 0.0;
    std::size_t used = 0;
    for (const Edge& e : edges) {
        const std::size_t a = find(e.i), b = find(e.j);
        if (a == b) continue;
        parent[a] = b;
        total += e.w;
        if (++used == n - 1) break;
    }
    return total;
}

}  // namespace steiner

#ifndef STEINER_CHAIN_HPP
#define STEINER_CHAIN_HPP

#include <optional>
#include <vector>

#include "steiner/geometry.hpp"

namespace steiner {

// Spiral chain edge lengths a_1..a_n with the normalization a_1 = 1.
struct ChainLengths {
    std::vector<double> a;  // a[0] = a_1 = 1

    int n() const { return static_cast<int>(a.size()); }
};

// Chain vertices A_0..A_n: A_0 at the origin, A_k reached from A_{k-1}
// by moving a_k at inclination -60(k-1) degrees (a right turn at every
// Steiner point).
std::vector<Point> chain_points(const ChainLengths& a);

// Necessary condition |A_u A_v| >= a_s for 0 <= u < s <= v <= n,
// evaluated through the closed-form polynomial rows of the condition
// table (squared-distance polynomials in a_2..a_6).
bool cond_A(int u, int v, int s, const ChainLengths& a);

// Sufficient trapping condition for 0 <= u < s <= v < min(6, n): the
// perpendicular foot H of A_u on line A_v A_{v+1} lies on the forward
// ray and |A_u H| <= a_s. Evaluated via the table's two closed-form
// clauses (ray clause, distance clause).
bool cond_B(int u, int v, int s, const ChainLengths& a);

// Closed-form clause values, exposed for table-vs-geometry audits.
// ray >= 0 is the first clause; the second clause is footdist <= a_s.
struct CondBClauses {
    bool defined;    // false for the identically-false rows
    double ray;      // projection parameter of H along A_v -> A_{v+1}
    double footdist; // |A_u H|
};
CondBClauses cond_B_clauses(int u, int v, const ChainLengths& a);

struct TrapFiring {
    int u, v, s;
    bool contains;  // chain endpoint inside polygon A_u..A_v H (inflated 1e-9)
};

struct TrapSimulation {
    std::vector<Point> points;  // A_0..A_n
    Point endpoint;             // A_n
    std::vector<TrapFiring> fired;
};

// Builds the chain and, for every B-condition row that fires on it,
// reports whether the endpoint lies inside the claimed trap polygon.
TrapSimulation trap_simulate(const ChainLengths& a);

}  // namespace steiner

#endif

#ifndef ONECENTER_GEOMETRY_HPP
#define ONECENTER_GEOMETRY_HPP

#include "onecenter/rat.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace onecenter {

struct Point {
    std::vector<Rat> x;

    Point() = default;
    explicit Point(std::vector<Rat> coords) : x(std::move(coords)) {}
    Point(std::initializer_list<Rat> coords) : x(coords) {}

    std::size_t dim() const { return x.size(); }
    const Rat& operator[](std::size_t i) const { return x[i]; }
    Rat& operator[](std::size_t i) { return x[i]; }
    bool operator==(const Point& o) const { return x == o.x; }

    std::string to_string() const;
};

Rat sqdist(const Point& a, const Point& b);
Rat sqnorm(const Point& a);

struct Ball {
    Point center;
    Rat radius_sq{0};

    bool contains(const Point& p) const { return sqdist(p, center) <= radius_sq; }
    bool on_boundary(const Point& p) const { return sqdist(p, center) == radius_sq; }
    bool operator==(const Ball& o) const { return center == o.center && radius_sq == o.radius_sq; }
};

// dim Aff(P) plus the greedy lowest-index maximum affinely independent
// sublist (indices into P, size rank+1).
struct AffineRank {
    int rank = -1;
    std::vector<std::size_t> basis;
};
AffineRank affine_rank(const std::vector<Point>& pts);

// The linear system behind the circumcenter formula: matrix entries
// (p_i-p_0).(p_j-p_0), right-hand side |p_i-p_0|^2 / 2, base point p_0.
struct GramSystem {
    std::vector<std::vector<Rat>> matrix;
    std::vector<Rat> rhs;
    Point base;
};
GramSystem build_gram_system(const std::vector<Point>& pts);

struct Circumball {
    Point center;
    Rat radius_sq;
};

// Circumcenter of 2..d+1 affinely independent points: the unique point of
// Aff(P) equidistant from all of P. Throws DegenerateSimplex otherwise.
Circumball circumcenter(const std::vector<Point>& pts);

// Coefficients of the circumcenter as an affine combination of pts
// (first entry is 1 - sum of the Cramer solution); sums to 1 exactly.
std::vector<Rat> cc_affine_coefficients(const std::vector<Point>& pts);

// CB(T) == SEB(S_all): every point of S_all inside CB(T) and cc(T) in conv(T).
bool is_boundary_support(const std::vector<Point>& T, const std::vector<Point>& S_all);

// Every subset of size <= d+1 affinely independent and no d+2 points
// co-spherical (lifted determinant test). O(n^(d+2)).
bool general_position_check(const std::vector<Point>& pts);

// Exact determinant of a square Rat matrix (Gaussian elimination).
Rat rat_det(std::vector<std::vector<Rat>> m);

} // namespace onecenter

#endif

#pragma once

// Admissible curves on the marked disk / cylinder, encoded by their reduced
// crossing words against the vertical cuts through the marked points.
// Half twists act through exact piecewise-linear point slides; pairs are put
// in minimal position through a canonical joint realization, from which
// geometric and graded intersection numbers are read off exactly.

#include "twistcat/scalars.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace twistcat {

struct Surface {
    bool cylinder = true;
    int n = 2;

    int m() const { return n + 1; }
    bool operator==(const Surface& o) const { return cylinder == o.cylinder && n == o.n; }
};

inline constexpr int RAY_U = 0;
inline constexpr int RAY_D = 1;
inline constexpr int SIDE_R = 0;  // germ into the slab right of the point
inline constexpr int SIDE_L = 1;

struct CurveCrossing {
    int64_t cut;  // cover position of the cut line (disk: 0..n)
    int side;     // RAY_U / RAY_D
    bool operator==(const CurveCrossing& o) const { return cut == o.cut && side == o.side; }
};

struct CombCurve {
    Surface surf;
    int64_t start = 0, end = 0;  // cover positions of the endpoint marked points
    int start_side = SIDE_R, end_side = SIDE_L;
    std::vector<CurveCrossing> word;

    void validate() const;
    bool reduced() const;
    // slabs (by left cut) along the walk: entry 0 = germ slab, entry k =
    // slab after crossing word[k-1]; size word.size()+1
    std::vector<int64_t> slab_track() const;

    CombCurve reduce() const;  // cancel adjacent equal crossings until none
    CombCurve reduce_randomized(std::mt19937_64& rng) const;
    CombCurve translated(int64_t dx) const;
    CombCurve reversed() const;
    // translate so the start residue representative lies in [0, m)
    CombCurve canonical_translate() const;

    bool operator==(const CombCurve& o) const;
};

struct GradedCurve {
    CombCurve c;
    int64_t grading = 0;
};

// Standard segments: cylinder c_i from i to i+1 (i = 0..n), disk c_i from
// i-1 to i (i = 1..n), grading 0.
GradedCurve standard_curve(const Surface& s, int i);

GradedCurve shift_grading(const GradedCurve& c, int64_t k);

// Full reduction: cancels adjacent equal crossings and pops crossings that
// wrap around the curve's own endpoints (germ pivots).  A start-germ pivot
// through the downward direction moves the grading anchor by -+2.
GradedCurve reduce_graded(const GradedCurve& c);
bool fully_reduced(const CombCurve& c);

GradedCurve reverse_graded(const GradedCurve& c);
// orientation + translate canonical representative (grading transported)
GradedCurve canonical_graded(const GradedCurve& c);
bool same_unoriented_class(const CombCurve& a, const CombCurve& b);
bool same_graded_class(const GradedCurve& a, const GradedCurve& b);

// Positive half twist swapping the endpoints of the i-th standard curve
// (cylinder: points i, i+1 mod m; disk: i-1, i); sign -1 is the inverse.
GradedCurve half_twist(int i, int sign, const GradedCurve& c);

struct CurveIntersections {
    Rat I;                       // interior count + half per shared endpoint
    std::map<int, int64_t> igr;  // graded polynomial, q^mu coefficients
    std::vector<int> interior_mu;
    std::vector<int> endpoint_mu;
};

CurveIntersections intersections(const GradedCurve& c0, const GradedCurve& c1);
Rat geometric_intersection(const CombCurve& c0, const CombCurve& c1);
std::map<int, int64_t> graded_intersection(const GradedCurve& c0, const GradedCurve& c1);

// debug rendering only
std::string render_svg(const Surface& s, const std::vector<GradedCurve>& curves);

// Self-height rank of each crossing along its ray (1 = closest to the
// marked point), used by the serialization schema.
std::vector<int> self_ranks(const CombCurve& c);

}  // namespace twistcat

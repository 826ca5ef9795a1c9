#ifndef LANDAU_RECTANGLES_HPP
#define LANDAU_RECTANGLES_HPP

#include <utility>
#include <vector>

namespace landau {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Axis-aligned open box in R^M. An interval with lo >= hi marks the
/// rectangle empty; empty rectangles have volume 0.
struct Rectangle {
  std::vector<Interval> intervals;

  int dim() const { return static_cast<int>(intervals.size()); }
  bool empty() const;
  double volume() const;
};

/// Hard cap on rectangle enumeration: the constructions emit up to 2^M boxes.
inline constexpr int kMaxEnumerationDim = 20;

/// The rho >= 1 packing: one rectangle per index tuple (j_1,...,j_M) in
/// {0,1}^M, coordinate k spanning one bisected slice of
/// (-P[...], -P[...] + 2 P[1/2, ...]). List order follows the tuple index
/// with j_1 as the least significant bit.
std::vector<Rectangle> rectangles_ge1(int M, double rho);

/// The rho < 1 packing over tuples (j_1,...,j_{M-1}): unit slabs in the
/// first M-1 coordinates, last coordinate (sum_k j_k rho^{M-k}, 1).
/// Rectangles whose last interval is empty are dropped.
std::vector<Rectangle> rectangles_lt1(int M, double rho);

/// Same construction without the empty-rectangle filter, preserving the
/// index bookkeeping (entry t corresponds to tuple bits of t).
std::vector<Rectangle> rectangles_lt1_all(int M, double rho);

/// True iff no two non-empty rectangles have overlapping interiors.
bool verify_disjoint(const std::vector<Rectangle>& rects);

/// Total volume of a verified-disjoint family. Throws when the family is
/// not disjoint.
double packing_volume(const std::vector<Rectangle>& rects);

/// Closed-form lower bound for Vol(-(B^rho)# intersect [-1,1]^M):
/// [1 + (1-1/M)/(4 rho + 1/M)]^M for rho >= 1, and for rho < 1 the larger of
/// 2^{M-1}[1 - rho/(2(1-rho))] (floored at 0) and the rho = 1 value.
double lower_bound(int M, double rho);

/// The packing realizing lower_bound at (M, rho): the rho >= 1 construction
/// at its own rho, and for rho < 1 whichever of the rho < 1 construction and
/// the rho = 1 construction has larger volume (both lie in the rho < 1 set).
std::vector<Rectangle> packing_rectangles(int M, double rho);

}  // namespace landau

#endif  // LANDAU_RECTANGLES_HPP

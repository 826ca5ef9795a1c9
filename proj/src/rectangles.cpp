#include "landau/rectangles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace landau {

bool Rectangle::empty() const {
  for (const auto& iv : intervals) {
    if (iv.lo >= iv.hi) return true;
  }
  return intervals.empty();
}

double Rectangle::volume() const {
  if (empty()) return 0.0;
  double v = 1.0;
  for (const auto& iv : intervals) v *= iv.hi - iv.lo;
  return v;
}

namespace {

void check_enumeration_dim(int M) {
  if (M > kMaxEnumerationDim) {
    throw std::invalid_argument("rectangle enumeration capped at M = " +
                                std::to_string(kMaxEnumerationDim));
  }
}

}  // namespace

std::vector<Rectangle> rectangles_ge1(int M, double rho) {
  if (M < 1) throw std::invalid_argument("rectangles_ge1: M must be >= 1");
  check_enumeration_dim(M);
  if (!(rho >= 1.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("rectangles_ge1: rho must satisfy rho >= 1");
  }
  const double h = 0.5 / rho;
  const std::size_t count = std::size_t{1} << M;
  std::vector<Rectangle> rects;
  rects.reserve(count);
  std::vector<int> j(M);
  for (std::size_t t = 0; t < count; ++t) {
    for (int k = 0; k < M; ++k) j[k] = static_cast<int>((t >> k) & 1u);
    Rectangle r;
    r.intervals.resize(M);
    // Backward recursion for the nested products over the tail
    // (h j_{k+1}, ..., h j_M): offset = P[tail], width = P[1/2, tail].
    double tail_p = 0.0;  // empty list at k = M
    for (int k = M - 1; k >= 0; --k) {
      const double width = 0.5 * (1.0 + tail_p);
      const double lo = -tail_p + j[k] * width;
      r.intervals[k] = {lo, lo + width};
      tail_p = h * j[k] * (1.0 + tail_p);
    }
    rects.push_back(std::move(r));
  }
  return rects;
}

std::vector<Rectangle> rectangles_lt1_all(int M, double rho) {
  if (M < 2) throw std::invalid_argument("rectangles_lt1: M must be >= 2");
  check_enumeration_dim(M);
  if (!(rho > 0.0) || !(rho < 1.0)) {
    throw std::invalid_argument("rectangles_lt1: rho must lie in (0,1)");
  }
  const std::size_t count = std::size_t{1} << (M - 1);
  std::vector<Rectangle> rects;
  rects.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    Rectangle r;
    r.intervals.resize(M);
    double last_lo = 0.0;
    for (int k = 0; k < M - 1; ++k) {
      const int jk = static_cast<int>((t >> k) & 1u);
      r.intervals[k] = {-static_cast<double>(jk), 1.0 - static_cast<double>(jk)};
      if (jk) last_lo += std::pow(rho, M - (k + 1));
    }
    r.intervals[M - 1] = {last_lo, 1.0};
    rects.push_back(std::move(r));
  }
  return rects;
}

std::vector<Rectangle> rectangles_lt1(int M, double rho) {
  auto all = rectangles_lt1_all(M, rho);
  std::vector<Rectangle> kept;
  kept.reserve(all.size());
  for (auto& r : all) {
    if (!r.empty()) kept.push_back(std::move(r));
  }
  return kept;
}

bool verify_disjoint(const std::vector<Rectangle>& rects) {
  const std::size_t n = rects.size();
  if (n > 1) {
    const int M = rects.front().dim();
    for (const auto& r : rects) {
      if (r.dim() != M) throw std::invalid_argument("verify_disjoint: dimension mismatch");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (rects[a].empty()) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rects[b].empty()) continue;
      bool overlap = true;
      for (int k = 0; k < rects[a].dim(); ++k) {
        const auto& ia = rects[a].intervals[k];
        const auto& ib = rects[b].intervals[k];
        if (std::max(ia.lo, ib.lo) >= std::min(ia.hi, ib.hi)) {
          overlap = false;
          break;
        }
      }
      if (overlap) return false;
    }
  }
  return true;
}

double packing_volume(const std::vector<Rectangle>& rects) {
  if (!verify_disjoint(rects)) {
    throw std::invalid_argument("packing_volume: rectangles are not disjoint");
  }
  double total = 0.0;
  for (const auto& r : rects) total += r.volume();
  return total;
}

double lower_bound(int M, double rho) {
  if (M < 1) throw std::invalid_argument("lower_bound: M must be >= 1");
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("lower_bound: rho must be positive and finite");
  }
  const auto ge1_bound = [M](double r) {
    const double Minv = 1.0 / M;
    return std::pow(1.0 + (1.0 - Minv) / (4.0 * r + Minv), M);
  };
  if (rho >= 1.0) return ge1_bound(rho);
  const double lt1 = std::max(0.0, std::ldexp(1.0, M - 1) * (1.0 - rho / (2.0 * (1.0 - rho))));
  return std::max(lt1, ge1_bound(1.0));
}

std::vector<Rectangle> packing_rectangles(int M, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("packing_rectangles: rho must be positive and finite");
  }
  if (rho >= 1.0) return rectangles_ge1(M, rho);
  if (M == 1) return rectangles_ge1(1, 1.0);  // the chain is empty; [0,1) splits
  auto lt1 = rectangles_lt1(M, rho);
  auto at1 = rectangles_ge1(M, 1.0);
  double v_lt1 = 0.0;
  for (const auto& r : lt1) v_lt1 += r.volume();
  double v_at1 = 0.0;
  for (const auto& r : at1) v_at1 += r.volume();
  return v_lt1 >= v_at1 ? std::move(lt1) : std::move(at1);
}

}  // namespace landau

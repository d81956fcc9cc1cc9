// SPDX-License-Identifier: Apache-2.0
#include "fogndt/ndt_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fogndt {
namespace {

const NdtBreakdown kInfeasibleBreakdown = NdtBreakdown::of(kInfiniteNdt, kInfiniteNdt);

NdtBreakdown share(double w, const NdtBreakdown& a, const NdtBreakdown& b) {
  return NdtBreakdown::of(time_share(w, a.fronthaul, b.fronthaul),
                          time_share(w, a.edge, b.edge));
}

void check_nodes(int num_nodes) {
  if (num_nodes < 1) throw std::invalid_argument("num_nodes must be >= 1");
}

void check_rate(double fronthaul_rate) {
  if (!(fronthaul_rate >= 0.0))
    throw std::invalid_argument("fronthaul_rate must be >= 0");
}

void check_quality(double csi_quality) {
  if (!(csi_quality >= 0.0 && csi_quality <= 1.0))
    throw std::invalid_argument("csi_quality must lie in [0, 1]");
}

void check_fraction(double cache_fraction) {
  if (!(cache_fraction >= 0.0 && cache_fraction <= 1.0))
    throw std::invalid_argument("cache_fraction must lie in [0, 1]");
}

}  // namespace

double edge_zf_ndt() { return 1.0; }

double edge_ia_ndt(int num_nodes) {
  check_nodes(num_nodes);
  return 2.0 - 1.0 / num_nodes;
}

NdtBreakdown cloud_hard_breakdown(int num_nodes, double fronthaul_rate) {
  check_nodes(num_nodes);
  check_rate(fronthaul_rate);
  // Replicate the whole request set at every node, or split it into disjoint
  // per-node shares. Ties go to the replicating form.
  NdtBreakdown replicate =
      NdtBreakdown::of(ndt_div(num_nodes, fronthaul_rate), edge_zf_ndt());
  NdtBreakdown split =
      NdtBreakdown::of(ndt_div(1.0, fronthaul_rate), edge_ia_ndt(num_nodes));
  return replicate.total <= split.total ? replicate : split;
}

double cloud_hard_ndt(int num_nodes, double fronthaul_rate) {
  return cloud_hard_breakdown(num_nodes, fronthaul_rate).total;
}

NdtBreakdown cloud_soft_breakdown(double fronthaul_rate, double csi_quality) {
  check_rate(fronthaul_rate);
  check_quality(csi_quality);
  return NdtBreakdown::of(ndt_div(1.0, fronthaul_rate), ndt_div(1.0, csi_quality));
}

double cloud_soft_ndt(double fronthaul_rate, double csi_quality) {
  return cloud_soft_breakdown(fronthaul_rate, csi_quality).total;
}

NdtBreakdown cloud_best_breakdown(int num_nodes, double fronthaul_rate,
                                  double csi_quality) {
  NdtBreakdown hard = cloud_hard_breakdown(num_nodes, fronthaul_rate);
  NdtBreakdown soft = cloud_soft_breakdown(fronthaul_rate, csi_quality);
  // Tie goes to soft transfer: it does not degrade with the node count.
  return soft.total <= hard.total ? soft : hard;
}

NdtBreakdown orthogonal_ndt(const SystemParams& params) {
  params.validate();
  const int num_nodes = params.num_nodes;
  const double mu = params.cache_fraction;
  const NdtBreakdown edge_full = NdtBreakdown::of(0.0, edge_zf_ndt());
  const NdtBreakdown cloud = cloud_best_breakdown(num_nodes, params.fronthaul_rate,
                                                  params.csi_quality);

  // Plain split: cached part by cooperative zero-forcing, the rest from the
  // cloud, budgeted by the cache fraction.
  NdtBreakdown plain = share(mu, edge_full, cloud);

  // Refined split pivoting on the disjoint-caching point mu = 1/K, where the
  // edge can still serve everything cached without any replication.
  const double pivot = 1.0 / num_nodes;
  NdtBreakdown refined = kInfeasibleBreakdown;
  if (mu >= pivot) {
    // Above the pivot the cloud is not needed at all.
    refined = NdtBreakdown::of(0.0, 2.0 - mu);
  }
  if (mu <= pivot) {
    // Weight clamped so a stray ulp above one cannot turn into a negative
    // share of a possibly infinite cloud term.
    double w = std::min(1.0, num_nodes * mu);
    NdtBreakdown mixed =
        share(w, NdtBreakdown::of(0.0, edge_ia_ndt(num_nodes)), cloud);
    if (mixed.total < refined.total) refined = mixed;
  }

  return plain.total <= refined.total ? plain : refined;
}

NdtBreakdown nonorthogonal_ndt(const SystemParams& params) {
  params.validate();
  const double mu = params.cache_fraction;
  const double alpha = params.csi_quality;
  const double fronthaul = ndt_div(1.0 - mu, params.fronthaul_rate);

  NdtBreakdown best = kInfeasibleBreakdown;
  // Edge layer finishes last: the block length is set by the cached content
  // stream, which absorbs the cloud layer along the way.
  if (mu >= 1.0 - alpha) best = NdtBreakdown::of(fronthaul, 1.0);
  // Cloud layer finishes last; needs usable cloud CSI. The mu = 1, alpha = 0
  // corner belongs to the branch above, so alpha > 0 is required here.
  if (alpha > 0.0 && mu <= 1.0 - alpha) {
    NdtBreakdown cloud_limited =
        NdtBreakdown::of(fronthaul, ndt_div(1.0 - mu, alpha));
    if (cloud_limited.total < best.total) best = cloud_limited;
  }
  return best;
}

double PiecewiseLinearCurve::evaluate(double x) const {
  if (breakpoints.size() < 2 || breakpoints.size() != values.size())
    throw std::logic_error("malformed piecewise-linear curve");
  if (!(x >= breakpoints.front() && x <= breakpoints.back()))
    throw std::invalid_argument("evaluation point outside curve domain");
  auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x);
  if (it != breakpoints.end() && *it == x)
    return values[static_cast<size_t>(it - breakpoints.begin())];
  size_t hi = static_cast<size_t>(it - breakpoints.begin());
  size_t lo = hi - 1;
  if (!std::isfinite(values[lo])) return kInfiniteNdt;
  double t = (x - breakpoints[lo]) / (breakpoints[hi] - breakpoints[lo]);
  return values[lo] + (values[hi] - values[lo]) * t;
}

PiecewiseLinearCurve lower_convex_envelope(
    const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2)
    throw std::invalid_argument("envelope needs at least two points");
  for (size_t i = 0; i + 1 < points.size(); ++i)
    if (!(points[i].first < points[i + 1].first))
      throw std::invalid_argument("points must be strictly increasing in x");

  size_t first_finite = 0;
  while (first_finite < points.size() &&
         std::isinf(points[first_finite].second))
    ++first_finite;
  for (size_t i = 0; i < points.size(); ++i) {
    double v = points[i].second;
    if (std::isnan(v) || (std::isinf(v) && v < 0.0))
      throw std::invalid_argument("values must be finite or +inf");
    if (i >= first_finite && std::isinf(v))
      throw std::invalid_argument("+inf values allowed only as a leading prefix");
  }
  if (points.size() - first_finite < 2)
    throw std::invalid_argument("envelope needs at least two finite values");

  // Monotone-chain lower hull over the finite suffix. cross <= 0 pops points
  // on or above the chord, so collinear interior points never survive and
  // the output is the canonical vertex list.
  std::vector<std::pair<double, double>> hull;
  for (size_t i = first_finite; i < points.size(); ++i) {
    const auto& p = points[i];
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      double cross = (b.first - a.first) * (p.second - a.second) -
                     (p.first - a.first) * (b.second - a.second);
      if (cross <= 0.0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }

  PiecewiseLinearCurve curve;
  curve.breakpoints.reserve(hull.size() + 1);
  curve.values.reserve(hull.size() + 1);
  if (first_finite > 0) {
    // Feasibility cannot be time-shared in from outside the finite region:
    // the envelope stays +inf left of the first finite point.
    curve.breakpoints.push_back(points.front().first);
    curve.values.push_back(kInfiniteNdt);
  }
  for (const auto& [x, v] : hull) {
    curve.breakpoints.push_back(x);
    curve.values.push_back(v);
  }
  return curve;
}

namespace {

// Scheme attaining min(orthogonal, nonorthogonal) at one cache fraction;
// ties go to the superposition scheme.
NdtBreakdown best_constituent(int num_nodes, double fronthaul_rate,
                              double csi_quality, double cache_fraction) {
  SystemParams p;
  p.num_nodes = num_nodes;
  p.cache_fraction = cache_fraction;
  p.fronthaul_rate = fronthaul_rate;
  p.csi_quality = csi_quality;
  NdtBreakdown orth = orthogonal_ndt(p);
  NdtBreakdown nonorth = nonorthogonal_ndt(p);
  return nonorth.total <= orth.total ? nonorth : orth;
}

}  // namespace

PiecewiseLinearCurve combined_ndt_curve(int num_nodes, double fronthaul_rate,
                                        double csi_quality) {
  check_nodes(num_nodes);
  check_rate(fronthaul_rate);
  check_quality(csi_quality);

  // Both constituent curves are piecewise linear in the cache fraction with
  // breakpoints only at 1/K and 1-alpha, and a crossing of two linear pieces
  // is a concave kink of the min, never an envelope vertex. Sampling the
  // endpoints and the two breakpoints is therefore exact.
  std::vector<double> grid = {0.0, 1.0 / num_nodes, 1.0 - csi_quality, 1.0};
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<std::pair<double, double>> samples;
  samples.reserve(grid.size());
  size_t finite = 0;
  for (double x : grid) {
    double v = best_constituent(num_nodes, fronthaul_rate, csi_quality, x).total;
    if (std::isfinite(v)) ++finite;
    samples.emplace_back(x, v);
  }
  if (finite >= 2) return lower_convex_envelope(samples);

  // Starved corner (K = 1 with a dead fronthaul): only full caching works.
  PiecewiseLinearCurve curve;
  curve.breakpoints = {0.0, 1.0};
  curve.values = {kInfiniteNdt, samples.back().second};
  return curve;
}

NdtBreakdown combined_ndt_point(int num_nodes, double fronthaul_rate,
                                double csi_quality, double cache_fraction) {
  check_fraction(cache_fraction);
  PiecewiseLinearCurve curve =
      combined_ndt_curve(num_nodes, fronthaul_rate, csi_quality);

  const auto& bp = curve.breakpoints;
  auto it = std::lower_bound(bp.begin(), bp.end(), cache_fraction);
  if (it != bp.end() && *it == cache_fraction) {
    size_t idx = static_cast<size_t>(it - bp.begin());
    if (!std::isfinite(curve.values[idx])) return kInfeasibleBreakdown;
    // Every stored breakpoint is an envelope vertex, where the envelope
    // touches the better constituent scheme.
    return best_constituent(num_nodes, fronthaul_rate, csi_quality,
                            cache_fraction);
  }
  size_t hi = static_cast<size_t>(it - bp.begin());
  size_t lo = hi - 1;
  if (!std::isfinite(curve.values[lo])) return kInfeasibleBreakdown;

  // Interior of a segment: time sharing between the schemes attaining the
  // two bracketing vertices, with the phase split interpolated accordingly.
  NdtBreakdown left =
      best_constituent(num_nodes, fronthaul_rate, csi_quality, bp[lo]);
  NdtBreakdown right =
      best_constituent(num_nodes, fronthaul_rate, csi_quality, bp[hi]);
  double w = (bp[hi] - cache_fraction) / (bp[hi] - bp[lo]);
  return share(w, left, right);
}

}  // namespace fogndt

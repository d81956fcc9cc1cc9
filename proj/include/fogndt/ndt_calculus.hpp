// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "fogndt/extended_real.hpp"
#include "fogndt/params.hpp"

namespace fogndt {

// Delivery time split into its fronthaul and edge phases, normalized so that
// an interference-free point-to-point downlink takes one unit. total is
// always fronthaul + edge; +inf components mark infeasible schemes.
struct NdtBreakdown {
  double fronthaul = 0.0;
  double edge = 0.0;
  double total = 0.0;

  static NdtBreakdown of(double fronthaul, double edge) {
    return NdtBreakdown{fronthaul, edge, fronthaul + edge};
  }
};

// Full caching: every node holds the whole library and the K nodes beamform
// as one antenna array.
double edge_zf_ndt();

// Disjoint caching of 1/K of the library per node; delivery runs as a K x K
// interference channel with cooperation only through the shared content.
double edge_ia_ndt(int num_nodes);

// Cloud sends hard file content over the fronthaul. Best of replicating the
// whole request set at every node (then zero-forcing) and splitting it into
// disjoint per-node shares (then interference alignment).
double cloud_hard_ndt(int num_nodes, double fronthaul_rate);
NdtBreakdown cloud_hard_breakdown(int num_nodes, double fronthaul_rate);

// Cloud precodes centrally and ships quantized baseband samples. The edge
// phase is limited by the cloud's CSI quality rather than by the node count.
double cloud_soft_ndt(double fronthaul_rate, double csi_quality);
NdtBreakdown cloud_soft_breakdown(double fronthaul_rate, double csi_quality);

// Cheapest cloud-only delivery at this operating point (hard vs soft; on a
// tie soft wins, since it does not grow with the node count).
NdtBreakdown cloud_best_breakdown(int num_nodes, double fronthaul_rate,
                                  double csi_quality);

// Cached and uncached parts of each file delivered one after the other:
// time share between pure edge transmission and the best cloud-only scheme,
// with the share chosen by the cache fraction. Uses params.num_nodes,
// cache_fraction, fronthaul_rate, csi_quality (snr plays no role here).
NdtBreakdown orthogonal_ndt(const SystemParams& params);

// Cached and uncached parts superposed in one block: edge layer for cached
// content on top of a cloud layer of quantized precoded samples.
NdtBreakdown nonorthogonal_ndt(const SystemParams& params);

// Continuous piecewise-linear map from cache fraction to delivery time.
// breakpoints are strictly increasing; values[i] is the time at
// breakpoints[i]; between breakpoints the curve interpolates linearly. Only
// the leftmost segment may carry +inf (schemes infeasible below some cache
// fraction); evaluate() returns +inf strictly left of the first finite
// breakpoint.
struct PiecewiseLinearCurve {
  std::vector<double> breakpoints;
  std::vector<double> values;

  double evaluate(double x) const;
};

// Lower convex envelope of the piecewise-linear interpolation through the
// given (x, value) points. Points must be sorted strictly increasing in x
// with at least two finite values; +inf values are allowed only as a prefix
// (the envelope is taken over the finite region, +inf kept to its left).
// Collinear interior points are canonicalized away, so the result carries
// exactly the envelope's vertices and the map is idempotent.
PiecewiseLinearCurve lower_convex_envelope(
    const std::vector<std::pair<double, double>>& points);

// Best delivery time over both schedules and over time/memory sharing: the
// lower convex envelope, in the cache fraction, of
// min(orthogonal, nonorthogonal). Both constituents are piecewise linear
// with breakpoints only at 1/K and 1-alpha, and their crossings never create
// envelope vertices, so hulling the values at {0, 1/K, 1-alpha, 1} is exact.
PiecewiseLinearCurve combined_ndt_curve(int num_nodes, double fronthaul_rate,
                                        double csi_quality);

// Point evaluation of combined_ndt_curve with the phase split recovered by
// interpolating the breakdowns of the schemes attaining the two bracketing
// envelope vertices.
NdtBreakdown combined_ndt_point(int num_nodes, double fronthaul_rate,
                                double csi_quality, double cache_fraction);

}  // namespace fogndt

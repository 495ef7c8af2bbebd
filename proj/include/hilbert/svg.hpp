#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbert/domain.hpp"
#include "hilbert/flats.hpp"

namespace hilbert {

// A 2-plane in RP^d spanned by three points, with the boundary curve of the
// domain slice sampled as a closed polyline. Coordinates are reported in the
// plane's own affine frame.
struct SliceFigure {
  std::vector<std::pair<double, double>> boundary;  // closed polyline
  std::vector<std::pair<double, double>> flat_segment;     // optional overlay
  std::vector<std::pair<double, double>> normal_segment;   // optional overlay
};

// Samples the slice boundary with `samples` rays from an interior point of
// the slice. Throws PlaneMissesDomain when the span does not meet the
// domain. Optional overlays: the chord cut by a flat, and the normal-line
// chord through a point (drawn when the pseudo-dual lies in the plane).
SliceFigure slice_domain(const ConvexDomain& domain, const std::vector<PointQ>& plane_points,
                         int samples, const Flat* flat, const PointQ* normal_base);

// Deterministic renderers: fixed decimal formatting, byte-stable output.
std::string slice_to_svg(const SliceFigure& figure);
std::string slice_to_csv(const SliceFigure& figure);

}  // namespace hilbert

#pragma once

#include <array>
#include <string>
#include <vector>

#include "ptc/solver.hpp"

namespace ptc {

struct MeshSpec {
  int segments_per_circle = 64;  // >= 3
};

/// Triangle mesh of the surface of revolution: one vertex ring per radius,
/// rings shared by index between adjacent cone bands, no cap faces.
struct TriangleMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based

  double lateral_area() const;
};

/// Revolve the surface about the t-axis, rings centered on t = 0. The faceted
/// lateral area converges to pi * area_over_pi as segments grow (within 0.5%
/// at 256 segments).
TriangleMesh build_revolution_mesh(const PtcSurface& surface, const MeshSpec& spec = {});

/// Wavefront OBJ: `v x y z` lines then 1-indexed `f` triangles, no normals or
/// materials.
std::string to_obj(const TriangleMesh& mesh);

}  // namespace ptc

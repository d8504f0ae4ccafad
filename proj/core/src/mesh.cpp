#include "ptc/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "ptc/errors.hpp"

namespace ptc {

double TriangleMesh::lateral_area() const {
  double area = 0.0;
  for (const auto& f : faces) {
    const auto& a = vertices[static_cast<std::size_t>(f[0])];
    const auto& b = vertices[static_cast<std::size_t>(f[1])];
    const auto& c = vertices[static_cast<std::size_t>(f[2])];
    const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    const double nx = u[1] * v[2] - u[2] * v[1];
    const double ny = u[2] * v[0] - u[0] * v[2];
    const double nz = u[0] * v[1] - u[1] * v[0];
    area += 0.5 * std::sqrt(nx * nx + ny * ny + nz * nz);
  }
  return area;
}

TriangleMesh build_revolution_mesh(const PtcSurface& surface, const MeshSpec& spec) {
  if (spec.segments_per_circle < 3)
    throw DomainError("build_revolution_mesh: need at least 3 segments per circle");

  const int rings = static_cast<int>(surface.radii.size());
  const int bands = rings - 1;
  const int segments = spec.segments_per_circle;
  const double ell = surface.family.ell;
  const double t0 = -0.5 * bands * ell;

  TriangleMesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(rings * segments));
  for (int i = 0; i < rings; ++i) {
    const double t = t0 + i * ell;
    const double r = surface.radii[static_cast<std::size_t>(i)];
    for (int j = 0; j < segments; ++j) {
      const double angle = 2.0 * std::numbers::pi * j / segments;
      mesh.vertices.push_back({t, r * std::cos(angle), r * std::sin(angle)});
    }
  }

  // Quads between adjacent rings, split into triangles; rings are shared by
  // index so the bands are watertight across every junction circle.
  mesh.faces.reserve(static_cast<std::size_t>(2 * bands * segments));
  for (int i = 0; i < bands; ++i) {
    const int ring = i * segments;
    const int next_ring = (i + 1) * segments;
    for (int j = 0; j < segments; ++j) {
      const int jn = (j + 1) % segments;
      mesh.faces.push_back({ring + j, next_ring + j, next_ring + jn});
      mesh.faces.push_back({ring + j, next_ring + jn, ring + jn});
    }
  }
  return mesh;
}

std::string to_obj(const TriangleMesh& mesh) {
  std::string obj;
  obj.reserve(mesh.vertices.size() * 40 + mesh.faces.size() * 20);
  char buf[160];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
    obj += buf;
  }
  for (const auto& f : mesh.faces) {
    std::snprintf(buf, sizeof(buf), "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
    obj += buf;
  }
  return obj;
}

}  // namespace ptc

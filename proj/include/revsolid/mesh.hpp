#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "revsolid/profile.hpp"

namespace revsolid {

/// One mesh vertex with its provenance on the profile. `reliable` is false
/// where the discrete curvature estimate is expected to be polluted: at the
/// poles and on rings adjacent to poles or arc junctions.
struct MeshVertex {
  Eigen::Vector3d position;
  ArcId arc;
  double t;
  double analytic_H;
  bool reliable;
};

/// Triangulated closed surface of revolution. The rotation axis is the
/// y-axis; a profile point (x, y) sweeps to (x cos a, y, x sin a).
/// Triangles are counter-clockwise seen from outside.
struct MeshSurface {
  std::vector<MeshVertex> vertices;
  std::vector<std::array<std::int32_t, 3>> triangles;
};

struct MeshTopologyReport {
  bool closed = false;                 // every edge borders exactly 2 faces
  bool consistently_oriented = false;  // each with opposite directions
  int euler_characteristic = 0;
  int pole_vertices = 0;  // vertices exactly on the rotation axis
  double signed_volume = 0.0;

  bool watertight() const { return closed && consistently_oriented; }
};

/// Tessellates the material arcs of the profile. n_profile is the total
/// number of profile segments, distributed across arcs proportionally to arc
/// length with at least 8 per arc (so n_profile >= 8 * material arc count);
/// n_angular >= 8 is the number of steps around the axis. Junction points
/// become single pinned rings shared by both arcs; the two axis points
/// become single pole vertices with triangle fans.
MeshSurface tessellate(const ClosedProfile& profile, int n_profile,
                       int n_angular);

MeshTopologyReport analyze_topology(const MeshSurface& mesh);

/// (total triangle area, enclosed volume by signed tetrahedra). Throws
/// std::domain_error if the mesh is not closed.
std::pair<double, double> discrete_measures(const MeshSurface& mesh);

/// Per-vertex discrete mean curvature (average convention, signed against
/// the outward normal) via the cotangent Laplacian with Voronoi-mixed
/// areas. Zero-area triangles contribute nothing.
std::vector<double> discrete_mean_curvature(const MeshSurface& mesh);

enum class MeshFormat {
  Obj,
  StlBinary,
};

/// Writes the mesh and returns the number of bytes written. The binary STL
/// size is exactly 84 + 50 * triangle count; both formats are byte-stable
/// across runs.
std::size_t export_mesh(const MeshSurface& mesh, MeshFormat format,
                        std::ostream& out);

}  // namespace revsolid

#include "revsolid/mesh.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "revsolid/curvature.hpp"

namespace revsolid {

namespace {

using Eigen::Vector3d;

struct ProfileNode {
  Vec2 p;
  ArcId arc;
  double t;
  double H;
  bool boundary;  // pole or junction between two arcs
};

// Samples the material arcs from pole to pole. Junction nodes are emitted
// once (by the incoming arc), so the rings built from them are shared
// exactly; the first and last node are snapped onto the axis.
std::vector<ProfileNode> profile_chain(const ClosedProfile& profile,
                                       int n_profile) {
  const auto& arcs = profile.arcs();
  std::size_t axis = arcs.size();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].arc.on_axis()) {
      axis = i;
      break;
    }
  }
  if (axis == arcs.size()) {
    throw std::invalid_argument(
        "tessellation expects a profile closed through the axis");
  }

  std::vector<const DirectedArc*> chain;
  for (std::size_t k = 1; k < arcs.size(); ++k) {
    chain.push_back(&arcs[(axis + k) % arcs.size()]);
  }

  if (n_profile < 8 * static_cast<int>(chain.size())) {
    throw std::invalid_argument(
        "n_profile must allow at least 8 segments per material arc");
  }

  // Split the segment budget across arcs proportionally to length, largest
  // remainders first, then enforce the per-arc minimum of 8.
  std::vector<double> lengths;
  double total = 0.0;
  for (const DirectedArc* da : chain) {
    lengths.push_back(da->arc.length(Tolerance{1e-12, 1e-12, 100'000}));
    total += lengths.back();
  }
  std::vector<int> counts(chain.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  int assigned = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const double raw = n_profile * lengths[i] / total;
    counts[i] = static_cast<int>(raw);
    assigned += counts[i];
    remainders.push_back({raw - counts[i], i});
  }
  std::sort(remainders.begin(), remainders.end(),
            [](const auto& a, const auto& b) {
              return a.first != b.first ? a.first > b.first
                                        : a.second < b.second;
            });
  const int leftover = n_profile - assigned;
  for (int i = 0; i < leftover; ++i) {
    ++counts[remainders[i].second];
  }
  for (int& c : counts) {
    c = std::max(c, 8);
  }

  std::vector<ProfileNode> nodes;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const DirectedArc& da = *chain[k];
    const double t_from =
        da.direction > 0 ? da.arc.t_begin() : da.arc.t_end();
    const double t_to = da.direction > 0 ? da.arc.t_end() : da.arc.t_begin();
    const double span = t_to - t_from;
    // One-sided curvature limits at the arc ends: evaluate a hair inside so
    // closed forms that degenerate exactly at the axis stay well defined.
    const double nudge = 1e-9 * std::abs(span);

    for (int j = (k == 0 ? 0 : 1); j <= counts[k]; ++j) {
      const double t = (j == counts[k]) ? t_to : t_from + span * j / counts[k];
      double t_eval = t;
      if (j == 0) {
        t_eval = t + (span > 0 ? nudge : -nudge);
      } else if (j == counts[k]) {
        t_eval = t - (span > 0 ? nudge : -nudge);
      }
      nodes.push_back({da.arc.position(t), da.arc.id(), t,
                       principal_curvatures(da, t_eval).H,
                       j == 0 || j == counts[k]});
    }
  }

  // The chain must start and end on the rotation axis; pin those vertices
  // exactly onto it.
  for (ProfileNode* pole : {&nodes.front(), &nodes.back()}) {
    if (std::abs(pole->p.x()) > 1e-9 * (1.0 + std::abs(pole->p.y()))) {
      throw std::invalid_argument(
          "tessellation expects the material chain to start and end on the "
          "axis");
    }
    pole->p.x() = 0.0;
  }
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i].p.x() > 0.0)) {
      throw std::invalid_argument(
          "tessellation expects interior profile nodes strictly off the "
          "axis");
    }
  }
  return nodes;
}

std::uint64_t edge_key(std::int32_t a, std::int32_t b) {
  const std::uint64_t lo = static_cast<std::uint32_t>(std::min(a, b));
  const std::uint64_t hi = static_cast<std::uint32_t>(std::max(a, b));
  return (hi << 32) | lo;
}

void append_le32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void append_f32(std::string& out, float v) {
  append_le32(out, std::bit_cast<std::uint32_t>(v));
}

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

}  // namespace

MeshSurface tessellate(const ClosedProfile& profile, int n_profile,
                       int n_angular) {
  if (n_angular < 8) {
    throw std::invalid_argument("n_angular must be at least 8");
  }
  const std::vector<ProfileNode> nodes = profile_chain(profile, n_profile);
  const int n_nodes = static_cast<int>(nodes.size());

  // Rings adjacent to a pole or junction inherit the unreliable flag: the
  // one-ring of such a vertex touches mixed geometry.
  std::vector<bool> unreliable(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    unreliable[i] = nodes[i].boundary ||
                    (i > 0 && nodes[i - 1].boundary) ||
                    (i + 1 < nodes.size() && nodes[i + 1].boundary);
  }

  MeshSurface mesh;
  mesh.vertices.reserve(2 + (nodes.size() - 2) * n_angular);

  const auto add_vertex = [&mesh](const ProfileNode& n, double angle,
                                  bool reliable) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    mesh.vertices.push_back({Vector3d{n.p.x() * c, n.p.y(), n.p.x() * s},
                             n.arc, n.t, n.H, reliable});
  };

  add_vertex(nodes.front(), 0.0, false);  // pole A = vertex 0
  for (int i = 1; i + 1 < n_nodes; ++i) {
    for (int a = 0; a < n_angular; ++a) {
      add_vertex(nodes[i], 2.0 * std::numbers::pi * a / n_angular,
                 !unreliable[i]);
    }
  }
  const std::int32_t pole_b =
      static_cast<std::int32_t>(1 + (n_nodes - 2) * n_angular);
  add_vertex(nodes.back(), 0.0, false);

  const auto ring_vertex = [n_angular](int interior_ring, int a) {
    return static_cast<std::int32_t>(1 + interior_ring * n_angular +
                                     (a % n_angular));
  };

  // Triangles wind counter-clockwise seen from outside the solid: the chain
  // runs with the profile loop oriented so (d/ds) x (d/d angle) points
  // outward.
  mesh.triangles.reserve(2 * (n_nodes - 2) * n_angular);
  for (int a = 0; a < n_angular; ++a) {
    mesh.triangles.push_back({0, ring_vertex(0, a), ring_vertex(0, a + 1)});
  }
  for (int i = 0; i + 1 < n_nodes - 2; ++i) {
    for (int a = 0; a < n_angular; ++a) {
      const std::int32_t n00 = ring_vertex(i, a);
      const std::int32_t n01 = ring_vertex(i, a + 1);
      const std::int32_t n10 = ring_vertex(i + 1, a);
      const std::int32_t n11 = ring_vertex(i + 1, a + 1);
      mesh.triangles.push_back({n00, n10, n11});
      mesh.triangles.push_back({n00, n11, n01});
    }
  }
  for (int a = 0; a < n_angular; ++a) {
    mesh.triangles.push_back(
        {ring_vertex(n_nodes - 3, a), pole_b, ring_vertex(n_nodes - 3, a + 1)});
  }
  return mesh;
}

MeshTopologyReport analyze_topology(const MeshSurface& mesh) {
  MeshTopologyReport report;
  std::unordered_map<std::uint64_t, std::pair<int, int>> edges;
  edges.reserve(mesh.triangles.size() * 2);

  double six_volume = 0.0;
  for (const auto& tri : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      const std::int32_t u = tri[k];
      const std::int32_t v = tri[(k + 1) % 3];
      auto& [count, balance] = edges[edge_key(u, v)];
      ++count;
      balance += (u < v) ? 1 : -1;
    }
    const Vector3d& a = mesh.vertices[tri[0]].position;
    const Vector3d& b = mesh.vertices[tri[1]].position;
    const Vector3d& c = mesh.vertices[tri[2]].position;
    six_volume += a.dot(b.cross(c));
  }

  report.closed = true;
  report.consistently_oriented = true;
  for (const auto& [key, info] : edges) {
    if (info.first != 2) {
      report.closed = false;
    }
    if (info.first != 2 || info.second != 0) {
      report.consistently_oriented = false;
    }
  }
  report.euler_characteristic = static_cast<int>(mesh.vertices.size()) -
                                static_cast<int>(edges.size()) +
                                static_cast<int>(mesh.triangles.size());
  for (const MeshVertex& v : mesh.vertices) {
    if (v.position.x() == 0.0 && v.position.z() == 0.0) {
      ++report.pole_vertices;
    }
  }
  report.signed_volume = six_volume / 6.0;
  return report;
}

std::pair<double, double> discrete_measures(const MeshSurface& mesh) {
  const MeshTopologyReport topo = analyze_topology(mesh);
  if (!topo.closed) {
    throw std::domain_error("discrete_measures requires a closed mesh");
  }
  double area = 0.0;
  for (const auto& tri : mesh.triangles) {
    const Vector3d& a = mesh.vertices[tri[0]].position;
    const Vector3d& b = mesh.vertices[tri[1]].position;
    const Vector3d& c = mesh.vertices[tri[2]].position;
    area += 0.5 * (b - a).cross(c - a).norm();
  }
  return {area, std::abs(topo.signed_volume)};
}

std::vector<double> discrete_mean_curvature(const MeshSurface& mesh) {
  const std::size_t n = mesh.vertices.size();
  std::vector<Vector3d> laplace(n, Vector3d::Zero());
  std::vector<Vector3d> normal(n, Vector3d::Zero());
  std::vector<double> area_mixed(n, 0.0);

  for (const auto& tri : mesh.triangles) {
    const std::int32_t i0 = tri[0], i1 = tri[1], i2 = tri[2];
    const Vector3d& p0 = mesh.vertices[i0].position;
    const Vector3d& p1 = mesh.vertices[i1].position;
    const Vector3d& p2 = mesh.vertices[i2].position;

    const Vector3d face = (p1 - p0).cross(p2 - p0);
    const double double_area = face.norm();
    if (double_area == 0.0) {
      continue;  // degenerate triangle: contributes nothing
    }
    normal[i0] += face;
    normal[i1] += face;
    normal[i2] += face;

    const double cot0 = (p1 - p0).dot(p2 - p0) / double_area;
    const double cot1 = (p0 - p1).dot(p2 - p1) / double_area;
    const double cot2 = (p0 - p2).dot(p1 - p2) / double_area;

    laplace[i1] += cot0 * (p1 - p2);
    laplace[i2] += cot0 * (p2 - p1);
    laplace[i0] += cot1 * (p0 - p2);
    laplace[i2] += cot1 * (p2 - p0);
    laplace[i0] += cot2 * (p0 - p1);
    laplace[i1] += cot2 * (p1 - p0);

    // Mixed (Voronoi-safe) area weights.
    const double area = 0.5 * double_area;
    if (cot0 >= 0.0 && cot1 >= 0.0 && cot2 >= 0.0) {
      const double l01 = (p1 - p0).squaredNorm();
      const double l02 = (p2 - p0).squaredNorm();
      const double l12 = (p2 - p1).squaredNorm();
      area_mixed[i0] += (l01 * cot2 + l02 * cot1) / 8.0;
      area_mixed[i1] += (l01 * cot2 + l12 * cot0) / 8.0;
      area_mixed[i2] += (l02 * cot1 + l12 * cot0) / 8.0;
    } else {
      area_mixed[i0] += (cot0 < 0.0) ? area / 2.0 : area / 4.0;
      area_mixed[i1] += (cot1 < 0.0) ? area / 2.0 : area / 4.0;
      area_mixed[i2] += (cot2 < 0.0) ? area / 2.0 : area / 4.0;
    }
  }

  std::vector<double> H(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (area_mixed[i] <= 0.0) {
      continue;
    }
    const Vector3d K = laplace[i] / (2.0 * area_mixed[i]);
    const double magnitude = 0.5 * K.norm();
    H[i] = K.dot(normal[i]) >= 0.0 ? magnitude : -magnitude;
  }
  return H;
}

std::size_t export_mesh(const MeshSurface& mesh, MeshFormat format,
                        std::ostream& out) {
  const std::int64_t n_vertices = static_cast<std::int64_t>(mesh.vertices.size());
  for (const auto& tri : mesh.triangles) {
    for (std::int32_t idx : tri) {
      if (idx < 0 || idx >= n_vertices) {
        throw std::invalid_argument("mesh triangle index out of range");
      }
    }
  }

  std::string buffer;
  if (format == MeshFormat::Obj) {
    buffer.reserve(mesh.vertices.size() * 64 + mesh.triangles.size() * 32);
    for (const MeshVertex& v : mesh.vertices) {
      buffer += "v ";
      append_double(buffer, v.position.x());
      buffer += ' ';
      append_double(buffer, v.position.y());
      buffer += ' ';
      append_double(buffer, v.position.z());
      buffer += '\n';
    }
    for (const auto& tri : mesh.triangles) {
      buffer += "f ";
      buffer += std::to_string(tri[0] + 1);
      buffer += ' ';
      buffer += std::to_string(tri[1] + 1);
      buffer += ' ';
      buffer += std::to_string(tri[2] + 1);
      buffer += '\n';
    }
  } else {
    buffer.reserve(84 + 50 * mesh.triangles.size());
    std::string header = "revsolid binary stl";
    header.resize(80, '\0');
    buffer += header;
    append_le32(buffer, static_cast<std::uint32_t>(mesh.triangles.size()));
    for (const auto& tri : mesh.triangles) {
      const Vector3d& a = mesh.vertices[tri[0]].position;
      const Vector3d& b = mesh.vertices[tri[1]].position;
      const Vector3d& c = mesh.vertices[tri[2]].position;
      const Vector3d raw = (b - a).cross(c - a);
      const double len = raw.norm();
      const Vector3d n = (len > 0.0) ? Vector3d(raw / len) : Vector3d(Vector3d::Zero());
      for (const Vector3d* v : {&n, &a, &b, &c}) {
        append_f32(buffer, static_cast<float>(v->x()));
        append_f32(buffer, static_cast<float>(v->y()));
        append_f32(buffer, static_cast<float>(v->z()));
      }
      buffer.push_back('\0');  // attribute byte count = 0
      buffer.push_back('\0');
    }
  }

  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  if (!out) {
    throw std::runtime_error("mesh export failed while writing");
  }
  return buffer.size();
}

}  // namespace revsolid

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace eckart {

enum class MeshKind { HyperboloidFree, HyperboloidDeformed, SphereFree, SphereDeformed };

MeshKind parse_mesh_kind(const std::string& name);
std::string to_string(MeshKind kind);
bool is_hyperbolic(MeshKind kind);
bool is_deformed(MeshKind kind);

struct MeshOptions {
  MeshKind kind = MeshKind::HyperboloidDeformed;
  double b = 1.0;
  double t_min = 0.0;
  /// 2.5 on the hyperboloid, pi on the sphere when left unset.
  double t_max = -1.0;
  int n_t = 64;
  int n_phi = 64;
};

/// Points r(t) * (s cos phi, s sin phi, c) on a (t, phi) grid, row-major in t,
/// with r = e^{-2 b t} for deformed kinds and r = 1 otherwise (c, s = cosh,
/// sinh on the hyperboloid, cos, sin on the sphere). phi_j = 2 pi j / n_phi.
struct MeshSurface {
  MeshKind kind = MeshKind::HyperboloidFree;
  double b = 0.0;
  int n_t = 0;
  int n_phi = 0;
  std::vector<double> t_values;
  std::vector<std::array<double, 3>> points;
};

MeshSurface generate_mesh(const MeshOptions& options);

/// Largest deviation of the surface's quadratic form from its target:
/// |z^2 - x^2 - y^2 - r(t)^2| on the hyperboloid, |x^2 + y^2 + z^2 - r(t)^2| on the sphere.
double mesh_constraint_error(const MeshSurface& mesh);

/// "x,y,z" header and one row per point.
void write_csv(const MeshSurface& mesh, std::ostream& os);
/// Wavefront OBJ: vertices, then quad faces wrapping around in phi.
void write_obj(const MeshSurface& mesh, std::ostream& os);

}  // namespace eckart

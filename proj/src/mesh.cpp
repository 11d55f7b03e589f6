#include "eckart/mesh.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace eckart {

MeshKind parse_mesh_kind(const std::string& name) {
  if (name == "hyperboloid-free") return MeshKind::HyperboloidFree;
  if (name == "hyperboloid-deformed") return MeshKind::HyperboloidDeformed;
  if (name == "sphere-free") return MeshKind::SphereFree;
  if (name == "sphere-deformed") return MeshKind::SphereDeformed;
  throw std::invalid_argument("unknown mesh kind '" + name + "'");
}

std::string to_string(MeshKind kind) {
  switch (kind) {
    case MeshKind::HyperboloidFree: return "hyperboloid-free";
    case MeshKind::HyperboloidDeformed: return "hyperboloid-deformed";
    case MeshKind::SphereFree: return "sphere-free";
    case MeshKind::SphereDeformed: return "sphere-deformed";
  }
  return "unknown";
}

bool is_hyperbolic(MeshKind kind) {
  return kind == MeshKind::HyperboloidFree || kind == MeshKind::HyperboloidDeformed;
}

bool is_deformed(MeshKind kind) {
  return kind == MeshKind::HyperboloidDeformed || kind == MeshKind::SphereDeformed;
}

namespace {

double radius(const MeshSurface& mesh, double t) {
  return is_deformed(mesh.kind) ? std::exp(-2.0 * mesh.b * t) : 1.0;
}

}  // namespace

MeshSurface generate_mesh(const MeshOptions& options) {
  const bool hyp = is_hyperbolic(options.kind);
  const double t_max = options.t_max < 0.0 ? (hyp ? 2.5 : std::numbers::pi) : options.t_max;
  if (options.n_t < 2 || options.n_phi < 2) throw std::invalid_argument("mesh resolution must be at least 2x2");
  if (!(options.t_min >= 0.0) || !(t_max > options.t_min) || !std::isfinite(t_max)) {
    throw std::invalid_argument("invalid mesh range: need 0 <= tMin < tMax");
  }
  if (!hyp && t_max > std::numbers::pi) throw std::invalid_argument("sphere range must lie in [0, pi]");
  if (!std::isfinite(options.b)) throw std::invalid_argument("coupling must be finite");

  MeshSurface mesh{options.kind, is_deformed(options.kind) ? options.b : 0.0, options.n_t, options.n_phi, {}, {}};
  mesh.t_values.reserve(static_cast<std::size_t>(options.n_t));
  mesh.points.reserve(static_cast<std::size_t>(options.n_t) * options.n_phi);
  for (int i = 0; i < options.n_t; ++i) {
    const double t = options.t_min + (t_max - options.t_min) * i / (options.n_t - 1);
    mesh.t_values.push_back(t);
    const double r = radius(mesh, t);
    const double c = hyp ? std::cosh(t) : std::cos(t);
    const double s = hyp ? std::sinh(t) : std::sin(t);
    for (int j = 0; j < options.n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / options.n_phi;
      mesh.points.push_back({r * s * std::cos(phi), r * s * std::sin(phi), r * c});
    }
  }
  return mesh;
}

double mesh_constraint_error(const MeshSurface& mesh) {
  const bool hyp = is_hyperbolic(mesh.kind);
  double worst = 0.0;
  for (int i = 0; i < mesh.n_t; ++i) {
    const double r = radius(mesh, mesh.t_values[i]);
    for (int j = 0; j < mesh.n_phi; ++j) {
      const auto& [x, y, z] = mesh.points[static_cast<std::size_t>(i) * mesh.n_phi + j];
      const double form = hyp ? z * z - x * x - y * y : x * x + y * y + z * z;
      worst = std::max(worst, std::abs(form - r * r));
    }
  }
  return worst;
}

void write_csv(const MeshSurface& mesh, std::ostream& os) {
  os << "x,y,z\n" << std::setprecision(17);
  for (const auto& [x, y, z] : mesh.points) os << x << ',' << y << ',' << z << '\n';
}

void write_obj(const MeshSurface& mesh, std::ostream& os) {
  os << "# " << to_string(mesh.kind) << " b=" << mesh.b << " grid " << mesh.n_t << "x" << mesh.n_phi
     << '\n'
     << std::setprecision(17);
  for (const auto& [x, y, z] : mesh.points) os << "v " << x << ' ' << y << ' ' << z << '\n';
  auto index = [&](int i, int j) { return i * mesh.n_phi + (j % mesh.n_phi) + 1; };
  for (int i = 0; i + 1 < mesh.n_t; ++i) {
    for (int j = 0; j < mesh.n_phi; ++j) {
      os << "f " << index(i, j) << ' ' << index(i + 1, j) << ' ' << index(i + 1, j + 1) << ' '
         << index(i, j + 1) << '\n';
    }
  }
}

}  // namespace eckart

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "eckart/mesh.hpp"

using namespace eckart;

TEST(Mesh, FreeHyperboloidApexAndConstraint) {
  const MeshSurface m = generate_mesh({MeshKind::HyperboloidDeformed, 0.0});
  EXPECT_EQ(m.n_t, 64);
  EXPECT_EQ(m.n_phi, 64);
  ASSERT_EQ(m.points.size(), 64u * 64u);
  EXPECT_DOUBLE_EQ(m.t_values.front(), 0.0);
  EXPECT_DOUBLE_EQ(m.t_values.back(), 2.5);
  for (int j = 0; j < m.n_phi; ++j) {
    EXPECT_NEAR(m.points[j][0], 0.0, 1e-15);
    EXPECT_NEAR(m.points[j][1], 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(m.points[j][2], 1.0);
  }
  EXPECT_LT(mesh_constraint_error(m), 1e-10);
  EXPECT_LT(mesh_constraint_error(generate_mesh({MeshKind::HyperboloidFree, 3.0})), 1e-10);
}

TEST(Mesh, DeformedHyperboloidPoint) {
  // eta = 1 on a grid [0, 2] with 3 rows; phi = 0 is the first column.
  const MeshSurface m = generate_mesh({MeshKind::HyperboloidDeformed, 1.0, 0.0, 2.0, 3, 4});
  const auto& p = m.points[1 * 4 + 0];
  const double r = std::exp(-2.0);
  EXPECT_NEAR(p[0], r * std::sinh(1.0), 1e-15);
  EXPECT_NEAR(p[1], 0.0, 1e-15);
  EXPECT_NEAR(p[2], r * std::cosh(1.0), 1e-15);
  // phi = pi/2 is the second column
  EXPECT_NEAR(m.points[1 * 4 + 1][1], r * std::sinh(1.0), 1e-15);
}

TEST(Mesh, DeformedSphereEquator) {
  const MeshSurface m = generate_mesh({MeshKind::SphereDeformed, 1.0, 0.0, std::numbers::pi, 3, 8});
  const auto& p = m.points[1 * 8 + 0];
  EXPECT_NEAR(p[0], std::exp(-std::numbers::pi), 1e-15);
  EXPECT_NEAR(p[1], 0.0, 1e-15);
  EXPECT_NEAR(p[2], 0.0, 1e-15);
  EXPECT_LT(mesh_constraint_error(m), 1e-10);
}

TEST(Mesh, ConstraintHoldsForAllKinds) {
  for (auto kind : {MeshKind::HyperboloidFree, MeshKind::HyperboloidDeformed, MeshKind::SphereFree, MeshKind::SphereDeformed}) {
    for (double b : {0.0, 0.5, 1.0, 2.0}) {
      const MeshSurface m = generate_mesh({kind, b});
      EXPECT_LT(mesh_constraint_error(m), 1e-10) << to_string(kind) << " b=" << b;
      // Independent check of the deformed targets against the generating angle.
      for (int i = 0; i < m.n_t; i += 7) {
        const auto& [x, y, z] = m.points[static_cast<std::size_t>(i) * m.n_phi + 5];
        const double t = m.t_values[i];
        const double target = is_deformed(kind) ? std::exp(-4.0 * b * t) : 1.0;
        const double form = is_hyperbolic(kind) ? z * z - x * x - y * y : x * x + y * y + z * z;
        EXPECT_NEAR(form, target, 1e-10);
      }
    }
  }
}

TEST(Mesh, ConstraintErrorDetectsCorruption) {
  MeshSurface m = generate_mesh({MeshKind::HyperboloidDeformed, 1.0});
  m.points[100][2] += 1e-6;
  EXPECT_GT(mesh_constraint_error(m), 1e-10);
}

TEST(Mesh, Validation) {
  EXPECT_THROW(generate_mesh({MeshKind::HyperboloidFree, 1.0, 0.0, 2.0, 1, 4}), std::invalid_argument);
  EXPECT_THROW(generate_mesh({MeshKind::HyperboloidFree, 1.0, 0.0, 2.0, 4, 1}), std::invalid_argument);
  EXPECT_THROW(generate_mesh({MeshKind::HyperboloidFree, 1.0, -0.5, 2.0}), std::invalid_argument);
  EXPECT_THROW(generate_mesh({MeshKind::HyperboloidFree, 1.0, 2.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(generate_mesh({MeshKind::SphereFree, 1.0, 0.0, 4.0}), std::invalid_argument);
  EXPECT_THROW(parse_mesh_kind("torus"), std::invalid_argument);
  EXPECT_EQ(parse_mesh_kind(to_string(MeshKind::SphereDeformed)), MeshKind::SphereDeformed);
}

TEST(Mesh, CsvAndObjOutput) {
  const MeshSurface m = generate_mesh({MeshKind::HyperboloidDeformed, 1.0, 0.0, 1.0, 3, 4});
  std::ostringstream csv;
  write_csv(m, csv);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,z");
  int rows = 0;
  while (std::getline(in, line)) {
    double x, y, z;
    char c1, c2;
    std::istringstream row(line);
    ASSERT_TRUE(row >> x >> c1 >> y >> c2 >> z);
    const auto& p = m.points[static_cast<std::size_t>(rows)];
    EXPECT_EQ(x, p[0]);
    EXPECT_EQ(y, p[1]);
    EXPECT_EQ(z, p[2]);
    ++rows;
  }
  EXPECT_EQ(rows, 12);

  std::ostringstream obj;
  write_obj(m, obj);
  int vertices = 0, faces = 0, max_index = 0;
  std::istringstream objin(obj.str());
  while (std::getline(objin, line)) {
    if (line.rfind("v ", 0) == 0) ++vertices;
    if (line.rfind("f ", 0) == 0) {
      ++faces;
      std::istringstream f(line.substr(2));
      int idx;
      while (f >> idx) max_index = std::max(max_index, idx);
    }
  }
  EXPECT_EQ(vertices, 12);
  EXPECT_EQ(faces, 2 * 4);
  EXPECT_EQ(max_index, 12);
}

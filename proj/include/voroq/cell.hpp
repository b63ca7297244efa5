#ifndef VOROQ_CELL_HPP
#define VOROQ_CELL_HPP

// Voronoi cell of a lattice in Selling form. Vertices live in y-coordinates
// (y = A x), where they are linear in the six parameters; physical lengths
// come from the metric A via area = sqrt(V^T A V) / sqrt(det A) and the
// Euclidean embedding v = B^{-T} y with B^T B = A.
//
// Generic cell: 24 vertices in 12 antipodal pairs, 14 faces (8 hexagons,
// 6 quadrilaterals). On boundary strata faces collapse: the cube and the
// rhombic dodecahedron are the classic degenerations.

#include <array>
#include <span>
#include <string>

#include "voroq/linalg.hpp"
#include "voroq/selling.hpp"

namespace voroq {

struct VertexY {
  std::array<int, 3> label;  // the ijk of v_{ijk}
  Vec3 y;
};

struct FaceCycle {
  std::string name;                // F12.., F0..; antipode prefixed with '-'
  std::array<int, 6> vertex_ids;   // indices into the 24-vertex table
  int n_vertices = 0;              // 4 for quads, 6 for hexagons
  Vec3 area_vector{};              // y-space vector area of the cycle
  double scalar_area = 0.0;        // Euclidean area
};

struct VoronoiCell {
  SellingParams params;
  std::array<VertexY, 24> vertices;
  std::array<FaceCycle, 14> faces;
  double total_area = 0.0;
  double volume = 0.0;
};

struct EuclideanEmbedding {
  Mat3 basis;  // upper-triangular B with B^T B = A

  // v = B^{-T} y, via forward substitution on B^T v = y.
  Vec3 to_euclidean(const Vec3& y) const { return solve_lower_transposed(basis, y); }
};

// Face template over vertex-table indices; area data not yet filled in.
struct FaceTemplate {
  const char* name;
  std::array<int, 6> vertex_ids;
  int n_vertices;
};

// The 24 vertices: 14 from the generating formulas, 10 by central inversion.
std::array<VertexY, 24> cell_vertices(const SellingParams& rho);

// Vertex index for a label like {1,0,2}; -1 if not a cell vertex.
int vertex_id(int i, int j, int k);

// Antipodal partner of each vertex-table index.
const std::array<int, 24>& vertex_antipode();

// The 7 representative face cycles (quads F12, F13, F23; hexagons F1, F2,
// F3, F0), then all 14 including antipodes.
const std::array<FaceTemplate, 7>& face_cycles();
const std::array<FaceTemplate, 14>& all_face_cycles();

// Vector area (1/2) sum p_k x p_{k+1} of a closed polygon; translation
// invariant.
Vec3 area_vector_polygon(std::span<const Vec3> vertices);

// Closed-form vector areas of the 7 representatives, up to the cyclic-
// ordering sign: V12 = cd(1,1,0), V13 = be(1,0,1), V23 = af(0,1,1),
// V1 = (bc+bf+cf)e1, V2 = (ac+ae+ce)e2, V3 = (ab+ad+bd)e3,
// V0 = (de+df+ef)(1,1,1).
std::array<std::pair<const char*, Vec3>, 7> area_vectors_closed(const Vec6& rho);

// Physical face area sqrt(V^T A V) / sqrt(det A).
double face_area(const SellingParams& rho, const Vec3& area_vector);

// Full cell: vertices, 14 faces with polygon-path areas, total area, and
// the volume by the divergence theorem in the Euclidean embedding.
VoronoiCell build_cell(const SellingParams& rho);

EuclideanEmbedding embed_euclidean(const SellingParams& rho);

// Wavefront OBJ text: 24 "v" lines (9 significant digits), one "f" line per
// nondegenerate face (outward-oriented), a comment per degenerate face.
std::string export_obj(const VoronoiCell& cell, const EuclideanEmbedding& embedding);

}  // namespace voroq

#endif

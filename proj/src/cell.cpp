#include "voroq/cell.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "voroq/errors.hpp"

namespace voroq {

namespace {

// Vertex table order: the 14 generators first, then the 10 inversion images.
constexpr std::array<std::array<int, 3>, 24> kLabels = {{
    {1, 0, 2}, {1, 2, 0}, {1, 0, 3}, {1, 3, 0}, {1, 2, 3}, {1, 3, 2},
    {2, 0, 1}, {2, 1, 0}, {2, 1, 3}, {2, 3, 1}, {2, 3, 0}, {2, 0, 3},
    {3, 1, 2}, {3, 2, 1},
    {3, 0, 2}, {3, 2, 0}, {3, 0, 1}, {3, 1, 0},
    {0, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 3, 1}, {0, 1, 2}, {0, 2, 1},
}};

// v[i] = -v[kAntipode[i]]; an involution pairing the 24 vertices.
constexpr std::array<int, 24> kAntipode = {
    15, 14, 10, 11, 19, 18, 17, 16, 21, 20, 2, 3,
    23, 22, 1,  0,  7,  6,  5,  4,  9,  8, 13, 12};

const std::array<FaceTemplate, 7> kFaceReps = {{
    {"F12", {1, 4, 8, 7, -1, -1}, 4},
    {"F13", {3, 5, 12, 17, -1, -1}, 4},
    {"F23", {10, 9, 13, 15, -1, -1}, 4},
    {"F1", {0, 1, 4, 5, 3, 2}, 6},
    {"F2", {6, 7, 8, 9, 10, 11}, 6},
    {"F3", {14, 15, 13, 12, 17, 16}, 6},
    {"F0", {22, 23, 18, 19, 21, 20}, 6},
}};

}  // namespace

std::array<VertexY, 24> cell_vertices(const SellingParams& rho) {
  const double a = rho.a(), b = rho.b(), c = rho.c(), d = rho.d(),
               e = rho.e(), f = rho.f();

  std::array<VertexY, 24> v{};
  for (int i = 0; i < 24; ++i)
    v[static_cast<std::size_t>(i)].label = kLabels[static_cast<std::size_t>(i)];

  auto set = [&](int id, double x, double y, double z) {
    v[static_cast<std::size_t>(id)].y = {0.5 * x, 0.5 * y, 0.5 * z};
  };

  set(0, a + d + e, f - b - d, -c - e - f);   // v102
  set(1, a + d + e, b - d + f, -c - e - f);   // v120
  set(2, a + d + e, -b - d - f, f - c - e);   // v103
  set(3, a + d + e, -b - d - f, c + f - e);   // v130
  set(4, a + d + e, b - d + f, c - e - f);    // v123
  set(5, a + d + e, b - d - f, c - e + f);    // v132
  set(6, -a - d + e, b + d + f, -c - e - f);  // v201
  set(7, a - d + e, b + d + f, -c - e - f);   // v210
  set(8, a - d + e, b + d + f, c - e - f);    // v213
  set(9, a - d - e, b + d + f, c + e - f);    // v231
  set(10, -a - d - e, b + d + f, c + e - f);  // v230
  set(11, -a - d - e, b + d + f, -c + e - f); // v203
  set(12, a + d - e, b - d - f, c + e + f);   // v312
  set(13, a - d - e, b + d - f, c + e + f);   // v321

  for (int i = 14; i < 24; ++i) {
    const Vec3& src = v[static_cast<std::size_t>(kAntipode[static_cast<std::size_t>(i)])].y;
    v[static_cast<std::size_t>(i)].y = {-src[0], -src[1], -src[2]};
  }
  return v;
}

int vertex_id(int i, int j, int k) {
  for (int n = 0; n < 24; ++n) {
    const auto& l = kLabels[static_cast<std::size_t>(n)];
    if (l[0] == i && l[1] == j && l[2] == k) return n;
  }
  return -1;
}

const std::array<int, 24>& vertex_antipode() {
  static const std::array<int, 24> table = kAntipode;
  return table;
}

const std::array<FaceTemplate, 7>& face_cycles() { return kFaceReps; }

const std::array<FaceTemplate, 14>& all_face_cycles() {
  static constexpr std::array<const char*, 7> kAntipodeNames = {
      "-F12", "-F13", "-F23", "-F1", "-F2", "-F3", "-F0"};
  static const std::array<FaceTemplate, 14> table = [] {
    std::array<FaceTemplate, 14> out{};
    for (std::size_t i = 0; i < 7; ++i) out[i] = kFaceReps[i];
    for (std::size_t i = 0; i < 7; ++i) {
      FaceTemplate t = kFaceReps[i];
      t.name = kAntipodeNames[i];
      for (int k = 0; k < t.n_vertices; ++k)
        t.vertex_ids[static_cast<std::size_t>(k)] =
            kAntipode[static_cast<std::size_t>(t.vertex_ids[static_cast<std::size_t>(k)])];
      out[7 + i] = t;
    }
    return out;
  }();
  return table;
}

Vec3 area_vector_polygon(std::span<const Vec3> p) {
  Vec3 v{0.0, 0.0, 0.0};
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3 c = cross(p[k], p[(k + 1) % n]);
    v[0] += 0.5 * c[0];
    v[1] += 0.5 * c[1];
    v[2] += 0.5 * c[2];
  }
  return v;
}

std::array<std::pair<const char*, Vec3>, 7> area_vectors_closed(const Vec6& r) {
  const double a = r[0], b = r[1], c = r[2], d = r[3], e = r[4], f = r[5];
  return {{
      {"F12", {c * d, c * d, 0.0}},
      {"F13", {b * e, 0.0, b * e}},
      {"F23", {0.0, a * f, a * f}},
      {"F1", {b * c + b * f + c * f, 0.0, 0.0}},
      {"F2", {0.0, a * c + a * e + c * e, 0.0}},
      {"F3", {0.0, 0.0, a * b + a * d + b * d}},
      {"F0", {d * e + d * f + e * f, d * e + d * f + e * f, d * e + d * f + e * f}},
  }};
}

double face_area(const SellingParams& rho, const Vec3& v) {
  const double det = det_closed(rho.raw());
  if (det <= 0.0) throw DegenerateCell("face_area: det A <= 0");
  const Mat3 a = gram_entries(rho.raw());
  const double q = dot(mat_vec(a, v), v);
  return std::sqrt(std::max(q, 0.0)) / std::sqrt(det);
}

EuclideanEmbedding embed_euclidean(const SellingParams& rho) {
  return EuclideanEmbedding{gram_matrix(rho).cholesky_upper};
}

VoronoiCell build_cell(const SellingParams& rho) {
  const GramMatrix gram = gram_matrix(rho);  // throws on degeneracy
  VoronoiCell cell{rho, cell_vertices(rho), {}, 0.0, 0.0};

  const Mat3& a = gram.entries;
  const double sqrt_det = std::sqrt(gram.det);

  const auto& templates = all_face_cycles();
  for (std::size_t fi = 0; fi < 14; ++fi) {
    const FaceTemplate& t = templates[fi];
    std::array<Vec3, 6> pts{};
    for (int k = 0; k < t.n_vertices; ++k)
      pts[static_cast<std::size_t>(k)] =
          cell.vertices[static_cast<std::size_t>(t.vertex_ids[static_cast<std::size_t>(k)])].y;
    FaceCycle& f = cell.faces[fi];
    f.name = t.name;
    f.vertex_ids = t.vertex_ids;
    f.n_vertices = t.n_vertices;
    f.area_vector = area_vector_polygon(
        std::span<const Vec3>(pts.data(), static_cast<std::size_t>(t.n_vertices)));
    const double q = dot(mat_vec(a, f.area_vector), f.area_vector);
    f.scalar_area = std::sqrt(std::max(q, 0.0)) / sqrt_det;
    cell.total_area += f.scalar_area;
  }

  // Divergence theorem over the embedded faces; doubles as a sqrt(det A)
  // cross-check on the whole vertex/face pipeline.
  const EuclideanEmbedding emb{gram.cholesky_upper};
  double vol = 0.0;
  for (const FaceCycle& f : cell.faces) {
    std::array<Vec3, 6> pts{};
    Vec3 centroid{0.0, 0.0, 0.0};
    for (int k = 0; k < f.n_vertices; ++k) {
      pts[static_cast<std::size_t>(k)] = emb.to_euclidean(
          cell.vertices[static_cast<std::size_t>(f.vertex_ids[static_cast<std::size_t>(k)])].y);
      for (int j = 0; j < 3; ++j)
        centroid[static_cast<std::size_t>(j)] +=
            pts[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] / f.n_vertices;
    }
    const Vec3 av = area_vector_polygon(
        std::span<const Vec3>(pts.data(), static_cast<std::size_t>(f.n_vertices)));
    vol += std::abs(dot(centroid, av)) / 3.0;
  }
  cell.volume = vol;
  return cell;
}

std::string export_obj(const VoronoiCell& cell, const EuclideanEmbedding& embedding) {
  std::string out;
  out.reserve(2048);
  char line[128];

  for (const VertexY& v : cell.vertices) {
    const Vec3 p = embedding.to_euclidean(v.y);
    std::snprintf(line, sizeof line, "v %.9g %.9g %.9g\n", p[0], p[1], p[2]);
    out += line;
  }

  const double degenerate_below = 1e-12 * cell.total_area;
  for (const FaceCycle& f : cell.faces) {
    if (f.scalar_area < degenerate_below) {
      out += "# degenerate-face " + f.name + "\n";
      continue;
    }
    // Orient outward: the Euclidean area vector must point away from the
    // origin, i.e. have positive dot product with the face centroid.
    std::array<Vec3, 6> pts{};
    Vec3 centroid{0.0, 0.0, 0.0};
    for (int k = 0; k < f.n_vertices; ++k) {
      pts[static_cast<std::size_t>(k)] = embedding.to_euclidean(
          cell.vertices[static_cast<std::size_t>(f.vertex_ids[static_cast<std::size_t>(k)])].y);
      for (int j = 0; j < 3; ++j)
        centroid[static_cast<std::size_t>(j)] +=
            pts[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] / f.n_vertices;
    }
    const Vec3 av = area_vector_polygon(
        std::span<const Vec3>(pts.data(), static_cast<std::size_t>(f.n_vertices)));
    const bool flip = dot(av, centroid) < 0.0;

    out += "f";
    for (int k = 0; k < f.n_vertices; ++k) {
      const int idx = f.vertex_ids[static_cast<std::size_t>(flip ? f.n_vertices - 1 - k : k)];
      std::snprintf(line, sizeof line, " %d", idx + 1);
      out += line;
    }
    out += "\n";
  }
  return out;
}

}  // namespace voroq

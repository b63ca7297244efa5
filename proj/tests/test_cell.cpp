#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "voroq/cell.hpp"
#include "voroq/errors.hpp"
#include "voroq/selling.hpp"

using namespace voroq;

namespace {

Vec6 random_rho(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Vec6 r{};
  for (double& x : r) x = dist(rng);
  return r;
}

const VertexY& vert(const std::array<VertexY, 24>& vs, int i, int j, int k) {
  return vs[static_cast<std::size_t>(vertex_id(i, j, k))];
}

}  // namespace

TEST_CASE("vertex formulas at the all-ones point") {
  const auto vs = cell_vertices(SellingParams(1, 1, 1, 1, 1, 1));
  CHECK(vert(vs, 1, 0, 2).y == Vec3{1.5, -0.5, -1.5});
  // central inversion pairs
  CHECK(vert(vs, 3, 2, 0).y == Vec3{-1.5, 0.5, 1.5});
  for (int n = 0; n < 24; ++n) {
    const int m = vertex_antipode()[static_cast<std::size_t>(n)];
    for (int c = 0; c < 3; ++c)
      CHECK(vs[static_cast<std::size_t>(n)].y[static_cast<std::size_t>(c)] ==
            -vs[static_cast<std::size_t>(m)].y[static_cast<std::size_t>(c)]);
  }
}

TEST_CASE("printed vertex table is consistent with the edge identities") {
  // The generating formulas must reproduce the stated edge vectors for any
  // parameters; a mismatch would mean a typo in the table.
  std::mt19937_64 rng(42);
  for (int it = 0; it < 100; ++it) {
    const Vec6 r = random_rho(rng, 0.05, 2.0);
    const double a = r[0], b = r[1], c = r[2], d = r[3], e = r[4], f = r[5];
    const auto vs = cell_vertices(SellingParams(r));
    auto edge = [&](int i1, int j1, int k1, int i2, int j2, int k2) {
      return vert(vs, i1, j1, k1).y - vert(vs, i2, j2, k2).y;
    };
    CHECK(norm(edge(1, 3, 2, 1, 3, 0) - Vec3{0, b, 0}) < 1e-14);
    CHECK(norm(edge(3, 1, 2, 1, 3, 2) - Vec3{-e, 0, e}) < 1e-14);
    CHECK(norm(edge(2, 3, 1, 2, 3, 0) - Vec3{a, 0, 0}) < 1e-14);
    CHECK(norm(edge(3, 2, 1, 2, 3, 1) - Vec3{0, -f, f}) < 1e-14);
    CHECK(norm(edge(1, 2, 3, 1, 2, 0) - Vec3{0, 0, c}) < 1e-14);
    CHECK(norm(edge(2, 1, 3, 1, 2, 3) - Vec3{-d, d, 0}) < 1e-14);
    CHECK(norm(edge(1, 2, 0, 1, 0, 2) - Vec3{0, b, 0}) < 1e-14);
  }
}

TEST_CASE("hexagon edges collapse on the cube stratum") {
  // At (1,1,1,0,0,0) the f-edge of the first hexagon vanishes and the
  // remaining edges are unit axis steps: the hexagon has become a square.
  const auto vs = cell_vertices(SellingParams(1, 1, 1, 0, 0, 0));
  CHECK(vert(vs, 1, 3, 2).y - vert(vs, 1, 3, 0).y == Vec3{0, 1, 0});
  CHECK(norm(vert(vs, 1, 3, 2).y - vert(vs, 1, 2, 3).y) == 0.0);  // u_f = (0,-f,f) = 0
}

TEST_CASE("face cycles close for random parameters") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 1000; ++it) {
    const auto vs = cell_vertices(SellingParams(random_rho(rng, 0.01, 2.0)));
    double vscale = 0.0;
    for (const auto& v : vs) vscale = std::max(vscale, norm(v.y));
    for (const auto& t : all_face_cycles()) {
      Vec3 sum{0, 0, 0};
      for (int k = 0; k < t.n_vertices; ++k) {
        const Vec3& p = vs[static_cast<std::size_t>(t.vertex_ids[static_cast<std::size_t>(k)])].y;
        const Vec3& q =
            vs[static_cast<std::size_t>(
                   t.vertex_ids[static_cast<std::size_t>((k + 1) % t.n_vertices)])].y;
        sum = sum + (q - p);
      }
      CHECK(norm(sum) <= 1e-12 * vscale);
    }
  }
}

TEST_CASE("hexagons are centrally symmetric zonogons") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const auto vs = cell_vertices(SellingParams(random_rho(rng, 0.05, 2.0)));
    for (const auto& t : all_face_cycles()) {
      if (t.n_vertices != 6) continue;
      std::array<Vec3, 6> p{};
      for (int k = 0; k < 6; ++k)
        p[static_cast<std::size_t>(k)] =
            vs[static_cast<std::size_t>(t.vertex_ids[static_cast<std::size_t>(k)])].y;
      std::array<Vec3, 6> edges{};
      for (std::size_t k = 0; k < 6; ++k) edges[k] = p[(k + 1) % 6] - p[k];
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(norm(edges[k] + edges[k + 3]) < 1e-12);
      // vector area by polygon sum == u x v + u x w + v x w
      const Vec3 u = edges[0], v = edges[1], w = edges[2];
      const Vec3 z = cross(u, v) + cross(u, w) + cross(v, w);
      const Vec3 a = area_vector_polygon(std::span<const Vec3>(p.data(), 6));
      CHECK(norm(a - z) <= 1e-12 * (1.0 + norm(z)));
    }
  }
}

TEST_CASE("area_vector_polygon basics") {
  const std::array<Vec3, 4> square = {
      Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{1, 1, 0}, Vec3{0, 1, 0}};
  CHECK(norm(area_vector_polygon(std::span<const Vec3>(square.data(), 4)) -
             Vec3{0, 0, 1}) < 1e-15);

  // translation invariance
  const Vec3 t = {3.5, -2.0, 7.25};
  std::array<Vec3, 4> moved = square;
  for (auto& p : moved) p = p + t;
  CHECK(norm(area_vector_polygon(std::span<const Vec3>(moved.data(), 4)) -
             Vec3{0, 0, 1}) < 1e-12);
}

TEST_CASE("closed-form area vectors match the polygon path up to sign") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 1000; ++it) {
    const Vec6 r = random_rho(rng, 0.01, 2.0);
    const auto vs = cell_vertices(SellingParams(r));
    const auto closed = area_vectors_closed(r);
    const auto& reps = face_cycles();
    for (std::size_t fi = 0; fi < 7; ++fi) {
      std::array<Vec3, 6> p{};
      for (int k = 0; k < reps[fi].n_vertices; ++k)
        p[static_cast<std::size_t>(k)] =
            vs[static_cast<std::size_t>(reps[fi].vertex_ids[static_cast<std::size_t>(k)])].y;
      const Vec3 poly = area_vector_polygon(
          std::span<const Vec3>(p.data(), static_cast<std::size_t>(reps[fi].n_vertices)));
      const Vec3& cf = closed[fi].second;
      const double scale = 1.0 + norm(cf);
      const bool matches_plus = norm(poly - cf) <= 1e-12 * scale;
      const bool matches_minus = norm(poly + cf) <= 1e-12 * scale;
      CHECK((matches_plus || matches_minus));
    }
  }
}

TEST_CASE("area vectors on degenerate strata") {
  // all-ones: the central zonogon carries de+df+ef = 3
  const auto v_bcc = area_vectors_closed({1, 1, 1, 1, 1, 1});
  CHECK(v_bcc[6].second == Vec3{3, 3, 3});

  // cube: quads and the F0 pair vanish, the axis hexagons become unit squares
  const auto v_sc = area_vectors_closed({1, 1, 1, 0, 0, 0});
  CHECK(norm(v_sc[0].second) == 0.0);
  CHECK(norm(v_sc[1].second) == 0.0);
  CHECK(norm(v_sc[2].second) == 0.0);
  CHECK(norm(v_sc[6].second) == 0.0);
  CHECK(v_sc[3].second == Vec3{1, 0, 0});
  CHECK(v_sc[4].second == Vec3{0, 1, 0});
  CHECK(v_sc[5].second == Vec3{0, 0, 1});
}

TEST_CASE("face_area reference values") {
  const SellingParams bcc(1, 1, 1, 1, 1, 1);
  // quad weight cd = 1 on direction (1,1,0): u^T A u = 4, det = 16
  CHECK(face_area(bcc, {1, 1, 0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(face_area(bcc, {0, 0, 0}) == 0.0);

  const SellingParams sc(1, 1, 1, 0, 0, 0);
  CHECK(face_area(sc, {1, 0, 0}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("build_cell on the three classic lattices") {
  const VoronoiCell cube = build_cell(SellingParams(1, 1, 1, 0, 0, 0));
  CHECK(cube.total_area == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(cube.volume == doctest::Approx(1.0).epsilon(1e-12));

  const VoronoiCell bcc = build_cell(SellingParams(1, 1, 1, 1, 1, 1));
  CHECK(bcc.volume == doctest::Approx(4.0).epsilon(1e-12));
  int nondeg = 0;
  for (const auto& f : bcc.faces)
    if (f.scalar_area > 1e-12 * bcc.total_area) ++nondeg;
  CHECK(nondeg == 14);

  // rhombic dodecahedron: the af quad pair collapses, 12 congruent faces stay
  const VoronoiCell rd = build_cell(SellingParams(0, 1, 1, 1, 1, 0));
  int live = 0;
  for (const auto& f : rd.faces) {
    if (f.scalar_area > 1e-12 * rd.total_area) {
      ++live;
      CHECK(f.scalar_area == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    }
  }
  CHECK(live == 12);
  CHECK(rd.total_area == doctest::Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(rd.volume == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("total area equals twice the representative sum") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    const SellingParams rho(random_rho(rng, 0.01, 2.0));
    const VoronoiCell cell = build_cell(rho);
    double rep_sum = 0.0;
    for (std::size_t i = 0; i < 7; ++i) rep_sum += cell.faces[i].scalar_area;
    CHECK(cell.total_area == doctest::Approx(2.0 * rep_sum).epsilon(1e-12));
    // antipodal faces carry equal area
    for (std::size_t i = 0; i < 7; ++i)
      CHECK(cell.faces[i].scalar_area ==
            doctest::Approx(cell.faces[i + 7].scalar_area).epsilon(1e-12));
  }
}

TEST_CASE("volume equals sqrt(det A)") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 1000; ++it) {
    const SellingParams rho(random_rho(rng, 0.01, 2.0));
    const VoronoiCell cell = build_cell(rho);
    const double expect = std::sqrt(det_closed(rho.raw()));
    CHECK(std::abs(cell.volume - expect) <= 1e-9 * expect);
  }
}

TEST_CASE("euclidean embedding") {
  // identity metric: vertices sit at the cube corners
  const SellingParams sc(1, 1, 1, 0, 0, 0);
  const EuclideanEmbedding emb = embed_euclidean(sc);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(emb.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));
  const auto vs = cell_vertices(sc);
  for (const auto& v : vs) {
    const Vec3 p = emb.to_euclidean(v.y);
    for (double x : p) CHECK(std::abs(std::abs(x) - 0.5) < 1e-14);
  }

  // dual metric check: |B^{-T} y|^2 == y^T A^{-1} y
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    const SellingParams rho(random_rho(rng, 0.05, 2.0));
    const EuclideanEmbedding e2 = embed_euclidean(rho);
    const Mat3 ainv = inverse3(gram_entries(rho.raw()));
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const Vec3 y = {dist(rng), dist(rng), dist(rng)};
    const double direct = dot(e2.to_euclidean(y), e2.to_euclidean(y));
    const double via_inv = dot(mat_vec(ainv, y), y);
    CHECK(direct == doctest::Approx(via_inv).epsilon(1e-10));
  }
}

TEST_CASE("OBJ export") {
  auto count_lines = [](const std::string& text, const std::string& prefix) {
    int n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (line.rfind(prefix, 0) == 0) ++n;
    return n;
  };

  const SellingParams sc(1, 1, 1, 0, 0, 0);
  const std::string obj_sc = export_obj(build_cell(sc), embed_euclidean(sc));
  CHECK(count_lines(obj_sc, "v ") == 24);
  CHECK(count_lines(obj_sc, "f") == 6);
  CHECK(count_lines(obj_sc, "# degenerate-face") == 8);
  CHECK(obj_sc.back() == '\n');

  const SellingParams bcc(1, 1, 1, 1, 1, 1);
  const std::string obj_bcc = export_obj(build_cell(bcc), embed_euclidean(bcc));
  CHECK(count_lines(obj_bcc, "v ") == 24);
  CHECK(count_lines(obj_bcc, "f") == 14);

  const SellingParams fcc(0, 1, 1, 1, 1, 0);
  const std::string obj_fcc = export_obj(build_cell(fcc), embed_euclidean(fcc));
  CHECK(count_lines(obj_fcc, "f") == 12);
  CHECK(count_lines(obj_fcc, "# degenerate-face") == 2);

  // outward orientation: parse the f lines back and check normal . centroid > 0
  const VoronoiCell cell = build_cell(bcc);
  const EuclideanEmbedding emb = embed_euclidean(bcc);
  std::vector<Vec3> coords;
  std::istringstream in(obj_bcc);
  std::string line;
  std::vector<std::vector<int>> faces;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      Vec3 p{};
      ls >> p[0] >> p[1] >> p[2];
      coords.push_back(p);
    } else if (tag == "f") {
      std::vector<int> ids;
      int idx = 0;
      while (ls >> idx) ids.push_back(idx - 1);
      faces.push_back(ids);
    }
  }
  CHECK(coords.size() == 24);
  for (const auto& ids : faces) {
    std::vector<Vec3> pts;
    Vec3 centroid{0, 0, 0};
    for (int id : ids) {
      pts.push_back(coords[static_cast<std::size_t>(id)]);
      centroid = centroid + (1.0 / static_cast<double>(ids.size())) *
                                coords[static_cast<std::size_t>(id)];
    }
    const Vec3 av = area_vector_polygon(std::span<const Vec3>(pts.data(), pts.size()));
    CHECK(dot(av, centroid) > 0.0);
  }
  (void)cell;
  (void)emb;
}

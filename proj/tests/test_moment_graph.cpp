#include "gkm/moment_graph.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <tuple>

using namespace gkm;

namespace {

IntVector root(int a, int b, int c) {
  IntVector v(3);
  v << a, b, c;
  return v;
}

using EdgeKey = std::tuple<std::string, std::string, std::string>;

std::multiset<EdgeKey> edge_keys(const MomentGraph& g) {
  std::multiset<EdgeKey> keys;
  for (const MomentGraphEdge& e : g.edges)
    keys.insert({word_to_string(g.vertices[static_cast<std::size_t>(e.u)].rep_word),
                 word_to_string(g.vertices[static_cast<std::size_t>(e.v)].rep_word),
                 root_to_string(e.label)});
  return keys;
}

} // namespace

TEST_CASE("parabolic roots") {
  const RootDatum a3 = oracles::a3();
  SECTION("regular weight: empty") {
    const RationalVector rho = fundamental_weight(a3, 0) + fundamental_weight(a3, 1) +
                               fundamental_weight(a3, 2);
    CHECK(parabolic_roots(a3, rho).empty());
  }
  SECTION("A3, omega2: alpha1 and alpha3") {
    const auto roots = parabolic_roots(a3, fundamental_weight(a3, 1));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == root(1, 0, 0));
    CHECK(roots[1] == root(0, 0, 1));
  }
  SECTION("B2, omega1: alpha2") {
    const RootDatum b2 = build_root_datum('B', 2);
    const auto roots = parabolic_roots(b2, fundamental_weight(b2, 0));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0](0) == 0);
    CHECK(roots[0](1) == 1);
  }
  SECTION("zero weight rejected") {
    CHECK_THROWS_AS(parabolic_roots(a3, RationalVector::Zero(3)), std::invalid_argument);
  }
}

TEST_CASE("the input word is canonicalised to the minimal coset representative") {
  const RootDatum a3 = oracles::a3();
  const RationalVector lambda = fundamental_weight(a3, 1);
  // s3 s1 s2, s1 s3 s2 and the non-reduced s1 s1 s3 s1 s2 reach the same point
  const SchubertDatum sd1 = make_schubert_datum(a3, lambda, {2, 0, 1});
  const SchubertDatum sd2 = make_schubert_datum(a3, lambda, {0, 2, 1});
  const SchubertDatum sd3 = make_schubert_datum(a3, lambda, {0, 0, 2, 0, 1});
  CHECK(sd1.w.word == std::vector<int>{2, 0, 1});
  CHECK(sd2.w.word == sd1.w.word);
  CHECK(sd3.w.word == sd1.w.word);
  // multiplying by a stabilizer letter does not change the variety either
  const SchubertDatum sd4 = make_schubert_datum(a3, lambda, {2, 0, 1, 0});
  CHECK(sd4.w.word == sd1.w.word);
}

TEST_CASE("fixed points") {
  const RootDatum a3 = oracles::a3();
  const RationalVector lambda = fundamental_weight(a3, 1);
  SECTION("X(e) is a single point") {
    const auto points = fixed_points(make_schubert_datum(a3, lambda, {}));
    REQUIRE(points.size() == 1);
    CHECK(points[0].weight == lambda);
  }
  SECTION("the singular threefold has five") {
    const auto points = fixed_points(oracles::gr2c4_schubert());
    REQUIRE(points.size() == 5);
    const std::vector<std::vector<int>> expected = {{}, {1}, {0, 1}, {2, 1}, {2, 0, 1}};
    for (std::size_t i = 0; i < points.size(); ++i) {
      CHECK(points[i].rep.word == expected[i]);
      CHECK(points[i].weight == apply_word(a3, expected[i], lambda));
    }
  }
  SECTION("the longest representative gives the whole orbit") {
    CHECK(fixed_points(oracles::gr2c4_full()).size() == 6);
  }
}

TEST_CASE("moment graph of the singular threefold in Gr(2, C^4)") {
  const MomentGraph g = moment_graph(oracles::gr2c4_schubert(), oracles::circle_direction());
  REQUIRE(g.vertices.size() == 5);

  SECTION("Phi values") {
    const std::vector<int> expected = {-4, -3, -1, 1, 3};
    for (std::size_t i = 0; i < 5; ++i) CHECK(g.vertices[i].phi == expected[i]);
  }
  SECTION("exactly the eight divisibility edges") {
    const std::multiset<EdgeKey> expected = {
        {"e", "2", "a2"},          {"e", "1-2", "a1+a2"},
        {"e", "3-2", "a2+a3"},     {"e", "3-1-2", "a1+a2+a3"},
        {"2", "1-2", "a1"},        {"2", "3-2", "a3"},
        {"1-2", "3-1-2", "a3"},    {"3-2", "3-1-2", "a1"},
    };
    CHECK(edge_keys(g) == expected);
  }
  SECTION("edges reflect one endpoint weight onto the other") {
    const RootDatum a3 = oracles::a3();
    for (const MomentGraphEdge& e : g.edges) {
      const auto& wu = g.vertices[static_cast<std::size_t>(e.u)].weight;
      const auto& wv = g.vertices[static_cast<std::size_t>(e.v)].weight;
      CHECK(reflect(a3, wu, e.label) == wv);
      CHECK(wu != wv);
    }
  }
}

TEST_CASE("moment graph edge counts") {
  CHECK(moment_graph(make_schubert_datum(oracles::a3(),
                                         fundamental_weight(oracles::a3(), 1), {}),
                     oracles::circle_direction())
            .edges.empty());
  CHECK(moment_graph(oracles::gr2c4_full(), oracles::circle_direction()).edges.size() == 12);
}

TEST_CASE("truncation") {
  const MomentGraph g = moment_graph(oracles::gr2c4_schubert(), oracles::circle_direction());

  SECTION("below the minimum: unchanged") {
    const MomentGraph t = truncate_graph(g, Rational(-10));
    CHECK(t.vertices.size() == 5);
    CHECK(t.edges.size() == 8);
    CHECK(edge_keys(t) == edge_keys(g));
  }
  SECTION("at r0 = 2: only the top vertex") {
    const MomentGraph t = truncate_graph(g, 2);
    REQUIRE(t.vertices.size() == 1);
    CHECK(word_to_string(t.vertices[0].rep_word) == "3-1-2");
    CHECK(t.edges.empty());
  }
  SECTION("at r0 = 0: the top edge survives") {
    const MomentGraph t = truncate_graph(g, 0);
    REQUIRE(t.vertices.size() == 2);
    CHECK(word_to_string(t.vertices[0].rep_word) == "3-2");
    CHECK(word_to_string(t.vertices[1].rep_word) == "3-1-2");
    REQUIRE(t.edges.size() == 1);
    CHECK(root_to_string(t.edges[0].label) == "a1");
  }
  SECTION("above the maximum: empty") {
    const MomentGraph t = truncate_graph(g, 100);
    CHECK(t.vertices.empty());
    CHECK(t.edges.empty());
  }
  SECTION("truncations are induced subgraphs") {
    for (const Rational& r0 : {Rational(-2), Rational(0), Rational(1, 2), Rational(2)}) {
      const MomentGraph t = truncate_graph(g, r0);
      for (const MomentGraphVertex& v : t.vertices) CHECK(v.phi >= r0);
      const auto full = edge_keys(g);
      for (const EdgeKey& key : edge_keys(t)) CHECK(full.count(key) == 1);
    }
  }
}

TEST_CASE("assumption 1 validation") {
  const SchubertDatum sd = oracles::gr2c4_schubert();
  SECTION("the shipped direction passes") {
    const Assumption1Report report = validate_assumption1(sd, oracles::circle_direction());
    CHECK(report.passed());
    CHECK(report.failures.empty());
  }
  SECTION("(-1,-1,-1) fails injectivity") {
    IntVector a(3);
    a << -1, -1, -1;
    const Assumption1Report report = validate_assumption1(sd, a);
    CHECK(report.regularity);
    CHECK_FALSE(report.injectivity);
    CHECK_FALSE(report.passed());
  }
  SECTION("(-2,-1,1) fails regularity: alpha2+alpha3 pairs to zero") {
    IntVector a(3);
    a << -2, -1, 1;
    const Assumption1Report report = validate_assumption1(sd, a);
    CHECK_FALSE(report.regularity);
    CHECK_FALSE(report.passed());
  }
  SECTION("under a passing report, lambda and w.lambda are the extremes") {
    const MomentGraph g = moment_graph(sd, oracles::circle_direction());
    for (const MomentGraphVertex& v : g.vertices) {
      CHECK(v.phi >= g.vertices.front().phi);  // vertex order starts at lambda
      CHECK(v.phi <= g.vertices.back().phi);   // and ends at w.lambda
    }
  }
}

TEST_CASE("r0 validation") {
  const MomentGraph g = moment_graph(oracles::gr2c4_schubert(), oracles::circle_direction());
  CHECK(validate_r0(g, 2).passed);
  CHECK(validate_r0(g, Rational(1, 2)).passed);
  for (const int critical : {-4, -3, -1, 1, 3}) {
    const R0Report report = validate_r0(g, critical);
    CHECK_FALSE(report.passed);
    CHECK(report.message.find("critical") != std::string::npos);
  }
  CHECK_FALSE(validate_r0(g, 4).passed);
  CHECK_FALSE(validate_r0(g, -5).passed);
}

TEST_CASE("Poincare polynomial") {
  const RootDatum a3 = oracles::a3();
  const RationalVector lambda = fundamental_weight(a3, 1);

  CHECK(poincare_polynomial(make_schubert_datum(a3, lambda, {})) == std::vector<int>{1});

  const std::vector<int> singular = poincare_polynomial(oracles::gr2c4_schubert());
  CHECK(singular == std::vector<int>{1, 1, 2, 1});
  CHECK_FALSE(is_palindromic(singular));

  const std::vector<int> full = poincare_polynomial(oracles::gr2c4_full());
  CHECK(full == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(is_palindromic(full));

  SECTION("coefficients sum to the number of fixed points") {
    int total = 0;
    for (int b : singular) total += b;
    CHECK(total == 5);
  }
  SECTION("agrees with the subword-search enumeration") {
    CHECK(singular == oracles::poincare_by_subwords(oracles::gr2c4_schubert()));
    CHECK(full == oracles::poincare_by_subwords(oracles::gr2c4_full()));
  }
}

TEST_CASE("valency heuristic") {
  SECTION("flags exactly lambda on the singular threefold") {
    const MomentGraph g =
        moment_graph(oracles::gr2c4_schubert(), oracles::circle_direction());
    const auto flagged = valency_report(g, 3);
    REQUIRE(flagged.size() == 1);
    CHECK(word_to_string(g.vertices[static_cast<std::size_t>(flagged[0])].rep_word) == "e");
  }
  SECTION("flags nothing on the projective line") {
    const RootDatum a1 = build_root_datum('A', 1);
    IntVector a(1);
    a << -1;
    const MomentGraph g =
        moment_graph(make_schubert_datum(a1, fundamental_weight(a1, 0), {0}), a);
    CHECK(valency_report(g, 1).empty());
  }
  SECTION("flags nothing on the full Grassmannian") {
    const MomentGraph g = moment_graph(oracles::gr2c4_full(), oracles::circle_direction());
    CHECK(valency_report(g, 4).empty());
  }
}

TEST_CASE("moment polytope extreme points") {
  SECTION("single vertex") {
    const RootDatum a3 = oracles::a3();
    const MomentGraph g = moment_graph(
        make_schubert_datum(a3, fundamental_weight(a3, 1), {}), oracles::circle_direction());
    CHECK(polytope_vertices(g) == std::vector<Eigen::Index>{0});
  }
  SECTION("all five corners of the singular threefold") {
    const MomentGraph g =
        moment_graph(oracles::gr2c4_schubert(), oracles::circle_direction());
    CHECK(polytope_vertices(g).size() == 5);
  }
  SECTION("all six orbit points of the full Grassmannian") {
    const MomentGraph g = moment_graph(oracles::gr2c4_full(), oracles::circle_direction());
    CHECK(polytope_vertices(g).size() == 6);
  }
  SECTION("an interior point is not extreme") {
    MomentGraph g;
    g.rank = 2;
    for (int x : {-1, 0, 1}) {
      RationalVector w(2);
      w << x, 0;
      g.vertices.push_back({{}, w, Rational(x)});
    }
    const auto extreme = polytope_vertices(g);
    CHECK(extreme == std::vector<Eigen::Index>{0, 2});
  }
}

TEST_CASE("dot export") {
  const RootDatum a3 = oracles::a3();
  SECTION("one node, no edges") {
    const MomentGraph g = moment_graph(
        make_schubert_datum(a3, fundamental_weight(a3, 1), {}), oracles::circle_direction());
    CHECK(to_dot(g) ==
          "graph moment_graph {\n"
          "  \"e\" [label=\"e\\nphi=-4\", phi=\"-4\"];\n"
          "}\n");
  }
  SECTION("deterministic full output") {
    const MomentGraph g =
        moment_graph(oracles::gr2c4_schubert(), oracles::circle_direction());
    const std::string dot = to_dot(g);
    CHECK(dot == to_dot(g));
    CHECK(dot.find("\"3-2\" -- \"3-1-2\" [label=\"a1\"];") != std::string::npos);
    CHECK(dot.find("\"e\" [label=\"e\\nphi=-4\", phi=\"-4\"];") != std::string::npos);
  }
}

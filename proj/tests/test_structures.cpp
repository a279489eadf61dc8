#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "somc/structures.hpp"

using namespace somc;

// Independent per-test oracle: count Hamming-distance-1 pairs directly.
static int hammingEdgeTuples(int m) {
  int n = 1 << m, count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && std::popcount((unsigned)(a ^ b)) == 1) ++count;
  return count;
}

TEST_CASE("hypercube generator") {
  auto q3 = generateHypercube(3);
  CHECK(q3.domainSize == 8);
  CHECK((int)q3.tuples("E").size() == hammingEdgeTuples(3));
  CHECK((int)q3.tuples("E").size() == 24);  // 12 undirected edges
  for (int m = 1; m <= 4; ++m) {
    auto q = generateHypercube(m);
    CHECK((int)q.tuples("E").size() == m * (1 << m));  // m * 2^(m-1) edges
    for (const Tuple& t : q.tuples("E")) CHECK(q.holds("E", {t[1], t[0]}));
  }
  CHECK_THROWS_AS(generateHypercube(0), InvalidInput);
}

TEST_CASE("linear digraph and cycle generators") {
  auto l4 = generateLinearDigraph(4);
  CHECK(l4.tuples("succ") == TupleSet{{0, 1}, {1, 2}, {2, 3}});
  CHECK(generateLinearDigraph(1).tuples("succ").empty());
  auto c3 = generateCycle(3);
  CHECK(c3.tuples("E").size() == 6);  // triangle, symmetric storage
  CHECK(generateCycle(1).tuples("E").empty());
  CHECK(generateCycle(2).tuples("E") == TupleSet{{0, 1}, {1, 0}});
  CHECK(generateComplete(4).tuples("E").size() == 12);
  CHECK_THROWS_AS(generateCycle(0), InvalidInput);
  CHECK_THROWS_AS(generateComplete(-1), InvalidInput);
}

TEST_CASE("hypercube oracle accepts generated hypercubes") {
  for (int m = 1; m <= 4; ++m) CHECK(isHypercubeOracle(generateHypercube(m)));
}

TEST_CASE("hypercube oracle rejects perturbed hypercubes") {
  for (int m = 1; m <= 3; ++m) {
    auto q = generateHypercube(m);
    // removals
    for (const Tuple& t : TupleSet(q.tuples("E"))) {
      if (t[0] > t[1]) continue;
      auto g = q;
      g.interp["E"].erase({t[0], t[1]});
      g.interp["E"].erase({t[1], t[0]});
      CHECK_FALSE(isHypercubeOracle(g));
    }
    // additions
    for (int a = 0; a < q.domainSize; ++a)
      for (int b = a + 1; b < q.domainSize; ++b) {
        if (q.holds("E", {a, b})) continue;
        auto g = q;
        g.interp["E"].insert({a, b});
        g.interp["E"].insert({b, a});
        CHECK_FALSE(isHypercubeOracle(g));
      }
  }
}

TEST_CASE("hypercube oracle misc") {
  CHECK_FALSE(isHypercubeOracle(generateCycle(6)));
  CHECK(isHypercubeOracle(generateCycle(4)));  // C4 is Q2
  CHECK_FALSE(isHypercubeOracle(generateCycle(8)));
  CHECK_FALSE(isHypercubeOracle(generateComplete(4)));
  // single vertex: not a hypercube (Q_m needs m >= 1)
  CHECK_FALSE(isHypercubeOracle(generateCycle(1)));
  // non-symmetric input violates precondition
  FiniteStructure bad = generateLinearDigraph(2);
  bad.vocab = graphVocabulary();
  bad.interp["E"] = {{0, 1}};
  bad.interp.erase("succ");
  CHECK_THROWS_AS(isHypercubeOracle(bad), InvalidInput);
}

TEST_CASE("regular oracle") {
  CHECK(isRegularOracle(generateCycle(4)));
  CHECK(isRegularOracle(generateComplete(5)));
  FiniteStructure path3 = generateCycle(3);
  path3.interp["E"] = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  CHECK_FALSE(isRegularOracle(path3));
  FiniteStructure empty5 = generateCycle(1);
  empty5.domainSize = 5;
  CHECK(isRegularOracle(empty5));
}

TEST_CASE("isomorphism") {
  CHECK(areIsomorphic(generateHypercube(2), generateCycle(4)));
  CHECK_FALSE(areIsomorphic(generateHypercube(3), generateCycle(8)));
  for (const auto& g : {generateHypercube(2), generateCycle(5),
                        generateComplete(4), generateCycle(6)})
    CHECK(areIsomorphic(g, g));
  // symmetry on small pairs
  CHECK(areIsomorphic(generateCycle(4), generateHypercube(2)));
  CHECK_THROWS_AS(areIsomorphic(generateHypercube(4), generateHypercube(4)),
                  BudgetExceeded);
  CHECK_THROWS_AS(areIsomorphic(generateCycle(3), generateLinearDigraph(3)),
                  InvalidInput);
}

TEST_CASE("structure IO") {
  CHECK(serializeStructure(generateLinearDigraph(2)) ==
        "domain 2\nrel succ 2\n0 1\nend\n");
  for (const auto& g : {generateHypercube(2), generateCycle(5),
                        generateComplete(3), generateLinearDigraph(4)})
    CHECK(parseStructure(serializeStructure(g)) == g);
  CHECK_THROWS_WITH_AS(parseStructure("domain 2\nrel E 2\n0 5\nend"),
                       doctest::Contains("out of range"), InvalidInput);
  CHECK_THROWS_AS(parseStructure("domain 2\nrel E 2\n0 1\nrel F 1\n"),
                  InvalidInput);
  CHECK_THROWS_AS(parseStructure("domain 2\nrel E 2\n0\nend"), InvalidInput);
  CHECK_THROWS_AS(
      parseStructure("domain 2\nrel E 2\nend\nrel E 2\nend"), InvalidInput);
  // comments and constants round-trip
  auto s = parseStructure("# a structure\ndomain 3\nconst c 1\nrel R 1\n2\nend\n");
  CHECK(s.constInterp.at("c") == 1);
  CHECK(parseStructure(serializeStructure(s)) == s);
}

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "kappalat/lattice.hpp"
#include "kappalat/lattice_io.hpp"
#include "oracles.hpp"

using namespace kappalat;

namespace {

FiniteLattice figure1() {
  std::ifstream in(std::string(KAPPALAT_FIXTURE_DIR) + "/figure1.lat");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str());
}

// simple deterministic LCG for the random poset sweep
struct Lcg {
  std::uint64_t s;
  std::uint32_t next(std::uint32_t bound) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::uint32_t>((s >> 33) % bound);
  }
};

}  // namespace

TEST_CASE("figure 1 lattice builds and matches the fixture structure") {
  FiniteLattice L = figure1();
  CHECK(L.size() == 5);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 4);
  CHECK(L.name(1) == "x");
  CHECK(L.covers() == std::vector<CoverPair>{{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}});

  // join(x,y) = top, meet(x,z) = bottom (brute-forced over the order)
  CHECK(*oracle::lub(L, 1, 2) == 4);
  CHECK(L.join(1, 2) == 4);
  CHECK(*oracle::glb(L, 1, 3) == 0);
  CHECK(L.meet(1, 3) == 0);
}

TEST_CASE("one-element lattice") {
  FiniteLattice L = build_lattice(1, {});
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 0);
  CHECK(L.meet(0, 0) == 0);
  CHECK(lattice_length(L) == 0);
  auto chains = maximal_chains(L);
  REQUIRE(chains.size() == 1);
  CHECK(chains[0].elements == std::vector<Elem>{0});
}

TEST_CASE("diamond B2 and axiom failures") {
  FiniteLattice b2 = build_lattice(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(b2.meet(1, 2) == 0);
  CHECK(b2.join(1, 2) == 3);

  CHECK_THROWS_AS(build_lattice(4, {{0, 1}, {0, 2}}), NotALattice);
  CHECK_THROWS_AS(build_lattice(3, {{0, 1}, {1, 2}, {0, 2}}), CoverNotReduced);
  CHECK_THROWS_AS(build_lattice(3, {{0, 1}, {1, 2}, {2, 0}}), CycleDetected);
  CHECK_THROWS_AS(build_lattice(2, {{0, 5}}), LatticeError);
  CHECK_THROWS_AS(build_lattice((1 << 16) + 1, {}), BudgetExceeded);
}

TEST_CASE("meet and join of sets, empty conventions") {
  FiniteLattice L = figure1();
  CHECK(L.meet_set({}) == L.top());
  CHECK(L.join_set({}) == L.bottom());
  std::vector<Elem> all{1, 2, 3};
  CHECK(L.join_set(all) == 4);
  CHECK(L.meet_set(all) == 0);
}

TEST_CASE("maximal chains of figure 1 in lexicographic order") {
  FiniteLattice L = figure1();
  auto chains = maximal_chains(L);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0].elements == std::vector<Elem>{0, 1, 4});
  CHECK(chains[1].elements == std::vector<Elem>{0, 2, 3, 4});
  for (const auto& c : chains) CHECK(is_maximal_chain(L, c));

  // chain lattice has exactly one; diamond has two of length 2
  CHECK(maximal_chains(chain_lattice(7)).size() == 1);
  auto diamond = build_lattice(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto dc = maximal_chains(diamond);
  REQUIRE(dc.size() == 2);
  CHECK(dc[0].elements.size() == 3);
}

TEST_CASE("maximal chain budget is a hard cap") {
  FiniteLattice b4 = boolean_lattice(4);  // 24 maximal chains
  CHECK_THROWS_AS(maximal_chains(b4, 10), BudgetExceeded);
  CHECK(maximal_chains(b4, 24).size() == 24);
}

TEST_CASE("interval and dual") {
  FiniteLattice L = figure1();
  FiniteLattice I = interval(L, 0, 3);
  CHECK(I.size() == 3);
  CHECK(I.covers() == std::vector<CoverPair>{{0, 1}, {1, 2}});
  CHECK(I.name(1) == "y");

  FiniteLattice single = interval(L, 1, 1);
  CHECK(single.size() == 1);

  CHECK_THROWS_AS(interval(L, 1, 2), NotComparable);

  FiniteLattice D = dual(L);
  CHECK(D.bottom() == L.top());
  CHECK(D.meet(1, 2) == L.join(1, 2));
  FiniteLattice DD = dual(D);
  CHECK(DD.covers() == L.covers());
  CHECK(DD.bottom() == L.bottom());
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      CHECK(DD.leq(a, b) == L.leq(a, b));
      CHECK(DD.meet(a, b) == L.meet(a, b));
    }
}

TEST_CASE("parse/serialize round trip and errors") {
  std::ifstream in(std::string(KAPPALAT_FIXTURE_DIR) + "/figure1.lat");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  FiniteLattice L = parse_lattice(text);
  std::string canon = serialize_lattice(L);
  CHECK(serialize_lattice(parse_lattice(canon)) == canon);

  CHECK_THROWS_AS(parse_lattice("lattice-v1\nn=5\ncover 0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice("n=5\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice("lattice-v1\nn=2\nfrob 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice(""), ParseError);
}

TEST_CASE("tables agree with brute-forced bounds on the corpus") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    if (L.size() > 64) continue;  // keep the n^4 brute force small
    CAPTURE(name);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        auto m = oracle::glb(L, a, b);
        auto j = oracle::lub(L, a, b);
        REQUIRE(m.has_value());
        REQUIRE(j.has_value());
        CHECK(L.meet(a, b) == *m);
        CHECK(L.join(a, b) == *j);
      }
  }
}

TEST_CASE("covers equal the independently recomputed transitive reduction") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    if (L.size() > 150) continue;
    CAPTURE(name);
    CHECK(L.covers() == oracle::transitive_reduction(L));
  }
}

TEST_CASE("parser never crashes on mutated input") {
  std::ifstream in(std::string(KAPPALAT_FIXTURE_DIR) + "/figure1.lat");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string base = buf.str();

  Lcg rng{0xC0FFEE};
  for (int trial = 0; trial < 400; ++trial) {
    std::string text = base;
    int edits = 1 + static_cast<int>(rng.next(4));
    for (int e = 0; e < edits; ++e) {
      std::size_t pos = rng.next(static_cast<std::uint32_t>(text.size()));
      text[pos] = static_cast<char>(' ' + rng.next(95));
    }
    try {
      FiniteLattice L = parse_lattice(text);
      CHECK(L.size() >= 1);
    } catch (const LatticeError&) {
      // rejected input: fine, as long as it never crashes
    }
  }
}

TEST_CASE("random downset lattices validate and stay consistent") {
  Lcg rng{20260810};
  for (int trial = 0; trial < 25; ++trial) {
    int p = 2 + static_cast<int>(rng.next(6));
    std::vector<std::pair<int, int>> rels;
    int edges = static_cast<int>(rng.next(2 * p));
    for (int e = 0; e < edges; ++e) {
      int a = static_cast<int>(rng.next(p)), b = static_cast<int>(rng.next(p));
      if (a < b) rels.emplace_back(a, b);  // acyclic by construction
    }
    FiniteLattice L = downset_lattice(p, rels);
    CAPTURE(trial);
    CHECK(L.covers() == oracle::transitive_reduction(L));
    for (const auto& c : maximal_chains(L)) CHECK(is_maximal_chain(L, c));
  }
}

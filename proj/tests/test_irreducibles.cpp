#include <doctest.h>

#include "corpus.hpp"
#include "kappalat/irreducibles.hpp"
#include "oracles.hpp"

using namespace kappalat;

namespace {

FiniteLattice figure1() {
  return build_lattice(5, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {1, 4}},
                       {"bot", "x", "y", "z", "top"});
}

}  // namespace

TEST_CASE("irreducibles of figure 1, booleans and chains") {
  FiniteLattice L = figure1();
  CHECK(join_irreducibles(L) == std::vector<Elem>{1, 2, 3});
  CHECK(meet_irreducibles(L) == std::vector<Elem>{1, 2, 3});

  FiniteLattice b3 = boolean_lattice(3);
  CHECK(join_irreducibles(b3) == std::vector<Elem>{1, 2, 4});  // atoms

  FiniteLattice c5 = chain_lattice(5);
  CHECK(join_irreducibles(c5) == std::vector<Elem>{1, 2, 3, 4, 5});
}

TEST_CASE("kappa on figure 1 matches the definition") {
  FiniteLattice L = figure1();
  CHECK(kappa(L, 1) == 3);  // κ(x) = z
  CHECK(kappa(L, 2) == 1);  // κ(y) = x
  CHECK(kappa(L, 3) == 2);  // κ(z) = y
  CHECK(kappa_inv(L, 3) == 1);
  CHECK(kappa_inv(L, 1) == 2);
  CHECK(kappa_inv(L, 2) == 3);
  CHECK_THROWS_AS(kappa(L, 4), std::invalid_argument);  // top is not JI

  for (Elem j : join_irreducibles(L)) CHECK(kappa(L, j) == *oracle::kappa(L, j));
}

TEST_CASE("kappa on a chain collapses to the lower cover") {
  FiniteLattice c = chain_lattice(6);
  for (Elem j : join_irreducibles(c)) CHECK(kappa(c, j) == j - 1);
}

TEST_CASE("kappa on the weak order hexagon") {
  FiniteLattice h = weak_order(3);
  // elements in lex order: 123, 132, 213, 231, 312, 321
  // κ(s2)=s1s2, κ(s1)=s2s1, κ(s1s2)=s1, κ(s2s1)=s2
  CHECK(kappa(h, 1) == 3);
  CHECK(kappa(h, 2) == 4);
  CHECK(kappa(h, 3) == 2);
  CHECK(kappa(h, 4) == 1);
  for (Elem j : join_irreducibles(h)) CHECK(kappa(h, j) == *oracle::kappa(h, j));
}

TEST_CASE("M3 has no kappa for its atoms") {
  FiniteLattice m3 = corpus::m3();
  CHECK_THROWS_AS(kappa(m3, 1), KappaUndefined);
  try {
    kappa(m3, 1);
  } catch (const KappaUndefined& e) {
    CHECK(e.candidates == std::vector<Elem>{2, 3});
  }
  CHECK_THROWS_AS(kappa_inv(m3, 1), KappaUndefined);
  CHECK_FALSE(is_kappa_lattice(m3));
}

TEST_CASE("semidistributivity verdicts and witnesses") {
  CHECK(is_semidistributive(figure1()).ok);

  SdReport m3 = is_semidistributive(corpus::m3());
  REQUIRE_FALSE(m3.ok);
  REQUIRE(m3.witness.has_value());
  CHECK(m3.witness->join_law);
  CHECK(m3.witness->x == 1);
  CHECK(m3.witness->y == 2);
  CHECK(m3.witness->z == 3);

  // distributive implies semidistributive
  CHECK(is_distributive(boolean_lattice(4)));
  CHECK(is_semidistributive(boolean_lattice(4)).ok);
  CHECK_FALSE(is_distributive(figure1()));  // pentagon
}

TEST_CASE("well-separation on figure 1 and kappa failure propagation") {
  FiniteLattice L = figure1();
  CHECK(is_kappa_lattice(L));
  CHECK(is_well_separated(L).ok);
  CHECK_THROWS_AS(is_well_separated(corpus::m3()), KappaUndefined);
}

TEST_CASE("three-way agreement: SD = kappa-lattice = well-separated kappa-lattice") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    CAPTURE(name);
    KappaData kd = compute_kappa(L);
    bool sd = is_semidistributive(L).ok;
    CHECK(sd);
    CHECK(kd.bijective == sd);
    REQUIRE(kd.kappa_total);
    CHECK(is_well_separated(L, kd).ok == sd);
  }
  // and the negative case agrees three ways as well
  FiniteLattice m3 = corpus::m3();
  CHECK_FALSE(is_semidistributive(m3).ok);
  CHECK_FALSE(is_kappa_lattice(m3));
}

TEST_CASE("kappa identities and duality on the corpus") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    CAPTURE(name);
    KappaData kd = compute_kappa(L);
    REQUIRE(kd.bijective);
    for (Elem j : kd.ji) {
      Elem m = kd.kappa[j].image;
      CHECK(L.meet(m, j) == kd.lower_of[j]);
      CHECK(L.join(m, j) == kd.upper_of[m]);
      CHECK(kd.kappa_inv[m].image == j);
    }
    // JI(dual L) = MI(L); kappa of the dual is kappa_inv
    FiniteLattice D = dual(L);
    CHECK(join_irreducibles(D) == kd.mi);
    CHECK(meet_irreducibles(D) == kd.ji);
    for (Elem m : kd.mi) CHECK(kappa(D, m) == kd.kappa_inv[m].image);
  }
}

TEST_CASE("|JI| and |MI| bound the length") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    CAPTURE(name);
    int len = lattice_length(L);
    CHECK(static_cast<int>(join_irreducibles(L).size()) >= len);
    CHECK(static_cast<int>(meet_irreducibles(L).size()) >= len);
  }
}

#include <doctest.h>

#include <algorithm>
#include <span>

#include "corpus.hpp"
#include "kappalat/modularity.hpp"
#include "oracles.hpp"

using namespace kappalat;

namespace {

FiniteLattice figure1() {
  return build_lattice(5, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {1, 4}},
                       {"bot", "x", "y", "z", "top"});
}

}  // namespace

TEST_CASE("left modularity by definition on figure 1") {
  FiniteLattice L = figure1();
  CHECK(is_left_modular_def(L, 2).ok);  // y
  LmDefCheck x = is_left_modular_def(L, 1);
  REQUIRE_FALSE(x.ok);
  REQUIRE(x.witness.has_value());
  // (y ∨ x) ∧ z = z but y ∨ (x ∧ z) = y
  CHECK(x.witness->x == 2);
  CHECK(x.witness->y == 3);

  // bottom and top are always left modular
  CHECK(is_left_modular_def(L, 0).ok);
  CHECK(is_left_modular_def(L, 4).ok);
  CHECK(is_left_modular_def(corpus::m3(), 0).ok);

  // weak order S3: s1 is not left modular
  CHECK_FALSE(is_left_modular_def(weak_order(3), 2).ok);
}

TEST_CASE("kappa criterion on figure 1") {
  FiniteLattice L = figure1();
  CHECK(is_left_modular_kappa(L, 3).ok);  // t = z
  LmKappaCheck x = is_left_modular_kappa(L, 1);
  REQUIRE_FALSE(x.ok);
  CHECK(x.witness_j == 3);  // z ≰ x and x ≰ κ(z) = y

  CHECK_THROWS_AS(is_left_modular_kappa(corpus::m3(), 1), KappaUndefined);
}

TEST_CASE("cover criterion on figure 1") {
  FiniteLattice L = figure1();
  CHECK(is_left_modular_cover(L, 2).ok);
  CHECK_FALSE(is_left_modular_cover(L, 1).ok);
}

TEST_CASE("three LM criteria agree elementwise on the SD corpus") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    CAPTURE(name);
    KappaData kd = compute_kappa(L);
    for (Elem t = 0; t < L.size(); ++t) {
      bool d = is_left_modular_def(L, t).ok;
      CHECK(d == is_left_modular_kappa(L, kd, t).ok);
      CHECK(d == is_left_modular_cover(L, t).ok);
    }
  }
}

TEST_CASE("LM definition agrees with the bounds-only oracle on small lattices") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    if (L.size() > 24) continue;
    CAPTURE(name);
    for (Elem t = 0; t < L.size(); ++t)
      CHECK(is_left_modular_def(L, t).ok == oracle::left_modular(L, t));
  }
}

TEST_CASE("left modular set of figure 1") {
  FiniteLattice L = figure1();
  LmReport r = left_modular_set(L);
  CHECK(r.lm_set == std::vector<Elem>{0, 2, 3, 4});
  CHECK(r.is_lm_lattice);
  REQUIRE(r.lm_chain.has_value());
  CHECK(r.lm_chain->elements == std::vector<Elem>{0, 2, 3, 4});
  CHECK(r.closed_under_meet_join);
  CHECK(r.distributive);
}

TEST_CASE("left modular set of the weak order and booleans") {
  LmReport s3 = left_modular_set(weak_order(3));
  CHECK(s3.lm_set == std::vector<Elem>{0, 5});
  CHECK_FALSE(s3.is_lm_lattice);

  FiniteLattice b4 = boolean_lattice(4);
  LmReport b = left_modular_set(b4);
  CHECK(static_cast<int>(b.lm_set.size()) == b4.size());
  CHECK(b.is_lm_lattice);
}

TEST_CASE("cover labels on figure 1") {
  FiniteLattice L = figure1();
  KappaData kd = compute_kappa(L);
  CHECK(cover_label(L, kd, 3, 4) == 1);  // label(z ⋖ top) = x
  CHECK(cover_label(L, kd, 0, 2) == 2);  // label(bot ⋖ y) = y
  CHECK(cover_label(L, kd, 2, 3) == 3);  // label(y ⋖ z) = z
  CHECK_THROWS_AS(cover_label(L, kd, 0, 4), NotACover);

  // atoms label their own covers
  FiniteLattice b3 = boolean_lattice(3);
  KappaData kb = compute_kappa(b3);
  for (Elem j : kb.ji) CHECK(cover_label(b3, kb, 0, j) == j);
}

TEST_CASE("cover label is min{a : a ∨ x = y} on the SD corpus") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    if (L.size() > 64) continue;
    CAPTURE(name);
    KappaData kd = compute_kappa(L);
    for (auto [x, y] : L.covers()) {
      Elem j = cover_label(L, kd, x, y);
      // brute minimum over {a : a ∨ x = y}
      Elem least = -1;
      for (Elem a = 0; a < L.size(); ++a) {
        if (L.join(a, x) != y) continue;
        if (least < 0 || L.leq(a, least)) least = a;
      }
      CHECK(j == least);
    }
  }
}

TEST_CASE("classical extremality reports") {
  ExtremalityReport f1 = is_extremal_classical(figure1());
  CHECK(f1.length == 3);
  CHECK(f1.ji_count == 3);
  CHECK(f1.mi_count == 3);
  CHECK(f1.extremal);

  ExtremalityReport s3 = is_extremal_classical(weak_order(3));
  CHECK(s3.length == 3);
  CHECK(s3.ji_count == 4);
  CHECK_FALSE(s3.extremal);

  ExtremalityReport b5 = is_extremal_classical(boolean_lattice(5));
  CHECK(b5.length == 5);
  CHECK(b5.ji_count == 5);
  CHECK(b5.extremal);
}

TEST_CASE("extremal chain checks on figure 1") {
  FiniteLattice L = figure1();
  CHECK(is_extremal_chain(L, Chain{{0, 2, 3, 4}}).ok);
  ChainLabelCheck short_side = is_extremal_chain(L, Chain{{0, 1, 4}});
  CHECK_FALSE(short_side.ok);
  CHECK(short_side.missing_j >= 0);
  CHECK_THROWS_AS(is_extremal_chain(L, Chain{{0, 3, 4}}), NotMaximalChain);

  FiniteLattice c = chain_lattice(5);
  CHECK(is_extremal_chain(c, maximal_chains(c)[0]).ok);
}

TEST_CASE("generalized extremality: figure 1, controls, searches") {
  ExtremalityReport f1 = is_extremal_generalized(figure1());
  CHECK(f1.extremal);
  CHECK(f1.lambda_used == "kappa");
  REQUIRE(f1.chain.has_value());
  CHECK(f1.chain->elements == std::vector<Elem>{0, 2, 3, 4});

  // M3 is not semidistributive: the induced-bijection path must refuse it
  ExtremalityReport m3 = is_extremal_generalized(corpus::m3());
  CHECK_FALSE(m3.extremal);
  CHECK(m3.lambda_used == "induced-bijection");

  CHECK(find_extremal_chain(figure1()).has_value());
  CHECK_FALSE(find_extremal_chain(weak_order(3)).has_value());
}

TEST_CASE("generalized equals classical on every instance") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    CAPTURE(name);
    CHECK(is_extremal_generalized(L).extremal ==
          is_extremal_classical(L).extremal);
  }
  CHECK(is_extremal_generalized(corpus::m3()).extremal ==
        is_extremal_classical(corpus::m3()).extremal);
}

TEST_CASE("LM lattice equals extremal on the SD corpus") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    CAPTURE(name);
    CHECK(left_modular_set(L).is_lm_lattice == is_extremal_classical(L).extremal);
  }
}

TEST_CASE("trim verdicts") {
  CHECK(is_trim(figure1()));
  CHECK(is_trim(tamari(3)));
  CHECK_FALSE(is_trim(weak_order(3)));
  CHECK(is_trim(boolean_lattice(3)));
}

TEST_CASE("extremal chain count agrees with the maximal-chain filter") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    if (L.size() > 42) continue;
    CAPTURE(name);
    KappaData kd = compute_kappa(L);
    std::uint64_t brute = 0;
    for (const Chain& c : maximal_chains(L))
      if (is_extremal_chain(L, c).ok) ++brute;
    CHECK(count_extremal_chains(L, kd, 1'000'000) == brute);
  }
}

TEST_CASE("LM set closure under arbitrary subsets, sampled") {
  for (const auto& [name, L] : corpus::sd_corpus()) {
    if (L.size() > 64) continue;
    CAPTURE(name);
    LmReport r = left_modular_set(L);
    REQUIRE(r.closed_under_meet_join);
    // windows of the lm_set as arbitrary subsets
    for (std::size_t i = 0; i < r.lm_set.size(); ++i)
      for (std::size_t w = 2; w <= 4 && i + w <= r.lm_set.size(); ++w) {
        std::span<const Elem> s(r.lm_set.data() + i, w);
        Elem m = L.meet_set(s), j = L.join_set(s);
        CHECK(std::binary_search(r.lm_set.begin(), r.lm_set.end(), m));
        CHECK(std::binary_search(r.lm_set.begin(), r.lm_set.end(), j));
      }
  }
}

#include "kappalat/irreducibles.hpp"

#include <algorithm>

namespace kappalat {

std::vector<Elem> join_irreducibles(const FiniteLattice& L) {
  std::vector<Elem> out;
  for (Elem x = 0; x < L.size(); ++x)
    if (L.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<Elem> meet_irreducibles(const FiniteLattice& L) {
  std::vector<Elem> out;
  for (Elem x = 0; x < L.size(); ++x)
    if (L.upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

namespace {

// Extremal entry of {x : x ∧ j = j_*} (want_max) or {y : y ∨ m = m^*}.
KappaEntry extremum_entry(const FiniteLattice& L, Elem j, Elem j_star,
                          bool want_max) {
  int n = L.size();
  Bits set(n);
  for (Elem x = 0; x < n; ++x) {
    Elem v = want_max ? L.meet(x, j) : L.join(x, j);
    if (v == j_star) set.set(x);
  }
  // collect the maximal (resp. minimal) elements of the set
  std::vector<Elem> extremal;
  for (auto x = set.find_first(); x != Bits::npos; x = set.find_next(x)) {
    Bits beyond = want_max ? L.above(static_cast<Elem>(x))
                           : L.below(static_cast<Elem>(x));
    beyond &= set;
    if (beyond.count() == 1) extremal.push_back(static_cast<Elem>(x));
  }
  KappaEntry entry;
  if (extremal.size() == 1)
    entry.image = extremal.front();
  else
    entry.candidates = std::move(extremal);
  return entry;
}

}  // namespace

KappaData compute_kappa(const FiniteLattice& L) {
  int n = L.size();
  KappaData kd;
  kd.ji = join_irreducibles(L);
  kd.mi = meet_irreducibles(L);
  kd.lower_of.assign(n, -1);
  kd.upper_of.assign(n, -1);
  kd.kappa.assign(n, {});
  kd.kappa_inv.assign(n, {});

  kd.kappa_total = true;
  for (Elem j : kd.ji) {
    kd.lower_of[j] = L.lower_covers(j).front();
    kd.kappa[j] = extremum_entry(L, j, kd.lower_of[j], true);
    kd.kappa_total = kd.kappa_total && kd.kappa[j].defined();
  }
  kd.kappa_inv_total = true;
  for (Elem m : kd.mi) {
    kd.upper_of[m] = L.upper_covers(m).front();
    kd.kappa_inv[m] = extremum_entry(L, m, kd.upper_of[m], false);
    kd.kappa_inv_total = kd.kappa_inv_total && kd.kappa_inv[m].defined();
  }

  kd.bijective = kd.kappa_total && kd.kappa_inv_total;
  if (kd.bijective) {
    for (Elem j : kd.ji) {
      Elem m = kd.kappa[j].image;
      if (!kd.is_mi(m) || kd.kappa_inv[m].image != j) {
        kd.bijective = false;
        break;
      }
    }
    if (kd.bijective)
      for (Elem m : kd.mi) {
        Elem j = kd.kappa_inv[m].image;
        if (!kd.is_ji(j) || kd.kappa[j].image != m) {
          kd.bijective = false;
          break;
        }
      }
  }
  return kd;
}

Elem kappa(const FiniteLattice& L, Elem j) {
  if (L.lower_covers(j).size() != 1)
    throw std::invalid_argument("kappa: element " + std::to_string(j) +
                                " is not join-irreducible");
  KappaEntry e = extremum_entry(L, j, L.lower_covers(j).front(), true);
  if (!e.defined()) throw KappaUndefined(j, e.candidates, false);
  return e.image;
}

Elem kappa_inv(const FiniteLattice& L, Elem m) {
  if (L.upper_covers(m).size() != 1)
    throw std::invalid_argument("kappa_inv: element " + std::to_string(m) +
                                " is not meet-irreducible");
  KappaEntry e = extremum_entry(L, m, L.upper_covers(m).front(), false);
  if (!e.defined()) throw KappaUndefined(m, e.candidates, true);
  return e.image;
}

SdReport is_semidistributive(const FiniteLattice& L) {
  int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (L.join(x, y) == L.join(x, z) &&
            L.join(x, L.meet(y, z)) != L.join(x, y))
          return {false, SdWitness{true, x, y, z}};
        if (L.meet(x, y) == L.meet(x, z) &&
            L.meet(x, L.join(y, z)) != L.meet(x, y))
          return {false, SdWitness{false, x, y, z}};
      }
  return {true, std::nullopt};
}

bool is_distributive(const FiniteLattice& L) {
  int n = L.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)))
          return false;
  return true;
}

bool is_kappa_lattice(const KappaData& kd) { return kd.bijective; }

bool is_kappa_lattice(const FiniteLattice& L) {
  return is_kappa_lattice(compute_kappa(L));
}

WsReport is_well_separated(const FiniteLattice& L) {
  return is_well_separated(L, compute_kappa(L));
}

WsReport is_well_separated(const FiniteLattice& L, const KappaData& kd) {
  for (Elem j : kd.ji)
    if (!kd.kappa[j].defined())
      throw KappaUndefined(j, kd.kappa[j].candidates, false);

  int n = L.size();
  // sep[y] = {j ∈ JI : y ≤ κ(j)}, so the pair (x,y) is separated iff some
  // j ≤ x lies in sep[y].
  std::vector<Bits> sep(n, Bits(n));
  for (Elem j : kd.ji) {
    const Bits& bk = L.below(kd.kappa[j].image);
    for (auto y = bk.find_first(); y != Bits::npos; y = bk.find_next(y))
      sep[y].set(j);
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (L.leq(x, y)) continue;
      Bits hits = sep[y];
      hits &= L.below(x);
      if (hits.none()) return {false, PairWitness{x, y}};
    }
  return {true, std::nullopt};
}

}  // namespace kappalat

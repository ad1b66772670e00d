#include "kappalat/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace kappalat {

namespace {

// Topological order of the cover digraph (Kahn, least index first for
// determinism).  Throws CycleDetected.
std::vector<Elem> topo_sort(int n, const std::vector<std::vector<Elem>>& up) {
  std::vector<int> indeg(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y : up[x]) ++indeg[y];
  std::vector<Elem> ready;
  for (Elem x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push_back(x);
  // min-heap on element index
  std::make_heap(ready.begin(), ready.end(), std::greater<>());
  std::vector<Elem> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>());
    Elem x = ready.back();
    ready.pop_back();
    order.push_back(x);
    for (Elem y : up[x])
      if (--indeg[y] == 0) {
        ready.push_back(y);
        std::push_heap(ready.begin(), ready.end(), std::greater<>());
      }
  }
  if (static_cast<int>(order.size()) != n)
    throw CycleDetected("cover graph contains a directed cycle");
  return order;
}

}  // namespace

FiniteLattice build_lattice(int n, std::vector<CoverPair> covers,
                            std::vector<std::string> names) {
  if (n <= 0) throw LatticeError("element count must be positive");
  if (n > (1 << 16))
    throw BudgetExceeded("table engine cap is 2^16 elements");
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw LatticeError("name list length does not match element count");

  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw LatticeError("cover " + std::to_string(a) + " " +
                         std::to_string(b) + " out of range");
    if (a == b)
      throw CycleDetected("cover " + std::to_string(a) + " " +
                          std::to_string(a) + " is a self-loop");
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  FiniteLattice L;
  L.n_ = n;
  L.covers_ = covers;
  L.names_ = std::move(names);
  L.up_adj_.assign(n, {});
  L.down_adj_.assign(n, {});
  for (auto [a, b] : covers) {
    L.up_adj_[a].push_back(b);
    L.down_adj_[b].push_back(a);
  }

  L.topo_ = topo_sort(n, L.up_adj_);

  // Reflexive-transitive closure by DP along the topological order.
  L.below_.assign(n, Bits(n));
  L.above_.assign(n, Bits(n));
  for (Elem x : L.topo_) {
    L.below_[x].set(x);
    for (Elem p : L.down_adj_[x]) L.below_[x] |= L.below_[p];
  }
  for (auto it = L.topo_.rbegin(); it != L.topo_.rend(); ++it) {
    Elem x = *it;
    L.above_[x].set(x);
    for (Elem q : L.up_adj_[x]) L.above_[x] |= L.above_[q];
  }

  // Every input pair must be a genuine cover; the closure is generated by
  // the input edges, so this makes covers exactly the transitive reduction.
  for (auto [a, b] : covers) {
    Bits between = L.above_[a];
    between &= L.below_[b];
    if (between.count() != 2) throw CoverNotReduced(a, b);
  }

  // Meet/join tables.  Rows are re-indexed by topological position so that
  // find_first() yields the least (resp. greatest) element of an up-set
  // (resp. down-set) directly.
  std::vector<int> pos(n), rpos(n);
  for (int p = 0; p < n; ++p) {
    pos[L.topo_[p]] = p;
    rpos[L.topo_[p]] = n - 1 - p;
  }
  std::vector<Bits> up_t(n, Bits(n)), down_r(n, Bits(n));
  for (Elem x = 0; x < n; ++x) {
    for (auto y = L.above_[x].find_first(); y != Bits::npos;
         y = L.above_[x].find_next(y))
      up_t[x].set(pos[y]);
    for (auto y = L.below_[x].find_first(); y != Bits::npos;
         y = L.below_[x].find_next(y))
      down_r[x].set(rpos[y]);
  }

  L.meet_table_.assign(static_cast<std::size_t>(n) * n, -1);
  L.join_table_.assign(static_cast<std::size_t>(n) * n, -1);
  Bits common(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      common = up_t[a];
      common &= up_t[b];
      auto p = common.find_first();
      if (p == Bits::npos)
        throw NotALattice('j', a, b, "no common upper bound");
      Elem z = L.topo_[p];
      if (!common.is_subset_of(up_t[z])) {
        Bits rest = common;
        rest -= up_t[z];
        Elem w = L.topo_[rest.find_first()];
        throw NotALattice('j', a, b,
                          "incomparable minimal upper bounds " +
                              std::to_string(z) + " and " + std::to_string(w));
      }
      L.join_table_[static_cast<std::size_t>(n) * a + b] = z;
      L.join_table_[static_cast<std::size_t>(n) * b + a] = z;

      common = down_r[a];
      common &= down_r[b];
      p = common.find_first();
      if (p == Bits::npos)
        throw NotALattice('m', a, b, "no common lower bound");
      z = L.topo_[n - 1 - p];
      if (!common.is_subset_of(down_r[z])) {
        Bits rest = common;
        rest -= down_r[z];
        Elem w = L.topo_[n - 1 - rest.find_first()];
        throw NotALattice('m', a, b,
                          "incomparable maximal lower bounds " +
                              std::to_string(z) + " and " + std::to_string(w));
      }
      L.meet_table_[static_cast<std::size_t>(n) * a + b] = z;
      L.meet_table_[static_cast<std::size_t>(n) * b + a] = z;
    }
  }

  L.bottom_ = L.topo_.front();
  L.top_ = L.topo_.back();
  // A unique minimum and maximum exist once all pairs have bounds, and they
  // are the endpoints of the topological order only when comparable to all;
  // fold to be exact.
  for (Elem x = 0; x < n; ++x) {
    L.bottom_ = L.meet(L.bottom_, x);
    L.top_ = L.join(L.top_, x);
  }
  return L;
}

bool FiniteLattice::is_cover(Elem a, Elem b) const {
  const auto& ups = up_adj_[a];
  return std::binary_search(ups.begin(), ups.end(), b);
}

Elem FiniteLattice::meet_set(std::span<const Elem> s) const {
  Elem acc = top_;
  for (Elem x : s) acc = meet(acc, x);
  return acc;
}

Elem FiniteLattice::join_set(std::span<const Elem> s) const {
  Elem acc = bottom_;
  for (Elem x : s) acc = join(acc, x);
  return acc;
}

bool is_chain(const FiniteLattice& L, const Chain& c) {
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    Elem x = c.elements[i];
    if (x < 0 || x >= L.size()) return false;
    if (i > 0 && !L.lt(c.elements[i - 1], x)) return false;
  }
  return true;
}

bool is_maximal_chain(const FiniteLattice& L, const Chain& c) {
  if (c.elements.empty()) return false;
  if (c.elements.front() != L.bottom() || c.elements.back() != L.top())
    return false;
  for (std::size_t i = 0; i + 1 < c.elements.size(); ++i)
    if (!L.is_cover(c.elements[i], c.elements[i + 1])) return false;
  return is_chain(L, c);
}

int lattice_length(const FiniteLattice& L) {
  std::vector<int> depth(L.size(), 0);
  int best = 0;
  for (Elem x : L.topo_order()) {
    for (Elem p : L.lower_covers(x)) depth[x] = std::max(depth[x], depth[p] + 1);
    best = std::max(best, depth[x]);
  }
  return best;
}

std::uint64_t for_each_maximal_chain(
    const FiniteLattice& L, std::uint64_t max_chains,
    const std::function<bool(const Chain&)>& visit) {
  std::uint64_t emitted = 0;
  Chain path;
  path.elements.push_back(L.bottom());
  // iterative DFS; frame = index of next upper cover to try
  std::vector<std::size_t> next{0};
  bool stopped = false;
  while (!next.empty() && !stopped) {
    Elem x = path.elements.back();
    if (x == L.top()) {
      if (emitted == max_chains)
        throw BudgetExceeded("maximal chain enumeration exceeded " +
                             std::to_string(max_chains));
      ++emitted;
      if (!visit(path)) stopped = true;
      path.elements.pop_back();
      next.pop_back();
      continue;
    }
    const auto& ups = L.upper_covers(x);
    if (next.back() < ups.size()) {
      Elem y = ups[next.back()++];
      path.elements.push_back(y);
      next.push_back(0);
    } else {
      path.elements.pop_back();
      next.pop_back();
    }
  }
  return emitted;
}

std::vector<Chain> maximal_chains(const FiniteLattice& L,
                                  std::uint64_t max_chains) {
  std::vector<Chain> out;
  for_each_maximal_chain(L, max_chains, [&](const Chain& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

FiniteLattice interval(const FiniteLattice& L, Elem x, Elem y) {
  if (!L.leq(x, y)) throw NotComparable(x, y);
  Bits member = L.above(x);
  member &= L.below(y);
  std::vector<Elem> elems;
  for (auto e = member.find_first(); e != Bits::npos; e = member.find_next(e))
    elems.push_back(static_cast<Elem>(e));
  std::vector<Elem> remap(L.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) remap[elems[i]] = static_cast<Elem>(i);

  // An interval is order-convex, so its covers are the covers of L that
  // stay inside it.
  std::vector<CoverPair> covers;
  for (auto [a, b] : L.covers())
    if (member.test(a) && member.test(b)) covers.emplace_back(remap[a], remap[b]);

  std::vector<std::string> names;
  if (!L.names().empty()) {
    names.resize(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) names[i] = L.names()[elems[i]];
  }
  return build_lattice(static_cast<int>(elems.size()), std::move(covers),
                       std::move(names));
}

FiniteLattice dual(const FiniteLattice& L) {
  FiniteLattice d;
  d.n_ = L.n_;
  d.bottom_ = L.top_;
  d.top_ = L.bottom_;
  d.below_ = L.above_;
  d.above_ = L.below_;
  d.up_adj_ = L.down_adj_;
  d.down_adj_ = L.up_adj_;
  d.meet_table_ = L.join_table_;
  d.join_table_ = L.meet_table_;
  d.names_ = L.names_;
  d.topo_.assign(L.topo_.rbegin(), L.topo_.rend());
  d.covers_.reserve(L.covers_.size());
  for (auto [a, b] : L.covers_) d.covers_.emplace_back(b, a);
  std::sort(d.covers_.begin(), d.covers_.end());
  return d;
}

}  // namespace kappalat

#pragma once

// Independent reference implementations used to cross-check library output.
// Everything here works on plain index maps and quantifies directly over the
// defining conditions, deliberately avoiding the library's enumeration,
// pruning, and construction code paths.

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/colimits.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/functor.hpp"

namespace oracles {

using fibcat::CatPtr;
using fibcat::FinCat;
using fibcat::FinFunctor;

/// A functor candidate as raw index maps (no validation object attached).
struct RawMap {
  std::vector<int> obj;  // per source object, a target object
  std::vector<int> arr;  // per source arrow, a target arrow
};

/// All functors A -> B found by assigning object images, then arrow images
/// drawn from the matching hom-sets, then checking every composable pair.
inline std::vector<RawMap> all_functors(const FinCat& A, const FinCat& B) {
  std::vector<RawMap> out;
  const int no = A.object_count();
  std::vector<int> obj(no, 0);
  auto arrows_done = [&](const std::vector<int>& arr) {
    for (int f = 0; f < A.arrow_count(); ++f)
      for (int g = 0; g < A.arrow_count(); ++g) {
        if (A.src(g) != A.dst(f)) continue;
        if (B.try_compose(arr[g], arr[f]) != arr[A.compose(g, f)]) return false;
      }
    return true;
  };
  // Recursive assignment over non-identity arrows; identities are forced.
  std::vector<int> arr(A.arrow_count(), -1);
  auto assign = [&](auto&& self, int f) -> void {
    if (f == A.non_identity_arrow_count()) {
      if (arrows_done(arr)) out.push_back(RawMap{obj, arr});
      return;
    }
    for (int img : B.hom(obj[A.src(f)], obj[A.dst(f)])) {
      arr[f] = img;
      self(self, f + 1);
    }
    arr[f] = -1;
  };
  long total = 1;
  for (int i = 0; i < no; ++i) total *= B.object_count();
  if (no == 0) total = 1;
  for (long tick = 0; tick < total; ++tick) {
    long rest = tick;
    for (int i = 0; i < no; ++i) {
      obj[i] = static_cast<int>(rest % B.object_count());
      rest /= B.object_count();
    }
    for (int o = 0; o < no; ++o)
      arr[A.identity(o)] = B.identity(obj[o]);
    assign(assign, 0);
  }
  return out;
}

/// g after f on raw maps: source of g must be the target category of f.
inline RawMap compose_maps(const RawMap& g, const RawMap& f) {
  RawMap out;
  out.obj.reserve(f.obj.size());
  out.arr.reserve(f.arr.size());
  for (int o : f.obj) out.obj.push_back(g.obj[o]);
  for (int a : f.arr) out.arr.push_back(g.arr[a]);
  return out;
}

inline RawMap as_raw(const FinFunctor& F) {
  return RawMap{F.object_map(), F.arrow_map()};
}

inline bool maps_equal(const RawMap& a, const RawMap& b) {
  return a.obj == b.obj && a.arr == b.arr;
}

/// Sum over object pairs of the size of the hom-set between their images:
/// the object count of the comma construction for F and G.
inline long sigma_hom(const FinFunctor& F, const FinFunctor& G) {
  long total = 0;
  const FinCat& A = *F.source();
  const FinCat& B = *G.source();
  const FinCat& C = *F.target();
  for (int a = 0; a < A.object_count(); ++a)
    for (int b = 0; b < B.object_count(); ++b)
      total += static_cast<long>(
          C.hom(F.on_object(a), G.on_object(b)).size());
  return total;
}

/// Direct count of commuting squares between comma objects: pairs (u, k)
/// with G k . f = f' . F u, summed over all ordered object pairs.
inline long comma_arrow_count(const FinFunctor& F, const FinFunctor& G,
                              const fibcat::CommaCat& cc) {
  const FinCat& A = *F.source();
  const FinCat& B = *G.source();
  const FinCat& C = *F.target();
  long total = 0;
  for (const auto& from : cc.objs)
    for (const auto& to : cc.objs)
      for (int u : A.hom(from.left, to.left))
        for (int k : B.hom(from.right, to.right)) {
          int lhs = C.try_compose(G.on_arrow(k), from.f);
          int rhs = C.try_compose(to.f, F.on_arrow(u));
          if (lhs != FinCat::kNone && lhs == rhs) ++total;
        }
  return total;
}

/// Cartesianness of phi : e -> a over F, straight from the definition: for
/// every psi : e'' -> a and every w : F e'' -> F e with F phi . w = F psi
/// there must be exactly one chi : e'' -> e with F chi = w and phi . chi =
/// psi.
inline bool is_cartesian(const FinFunctor& F, int phi) {
  const FinCat& E = *F.source();
  const FinCat& B = *F.target();
  const int a = E.dst(phi);
  for (int e2 = 0; e2 < E.object_count(); ++e2)
    for (int psi : E.hom(e2, a))
      for (int w : B.hom(F.on_object(e2), F.on_object(E.src(phi)))) {
        if (B.compose(F.on_arrow(phi), w) != F.on_arrow(psi)) continue;
        int found = 0;
        for (int chi : E.hom(e2, E.src(phi)))
          if (F.on_arrow(chi) == w && E.compose(phi, chi) == psi) ++found;
        if (found != 1) return false;
      }
  return true;
}

/// Undirected connectivity by breadth-first search over an edge list.
inline bool bfs_connected(int nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes <= 1) return true;
  std::vector<std::vector<int>> adj(nodes);
  for (auto [x, y] : edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<char> seen(nodes, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        q.push(y);
      }
  }
  return reached == nodes;
}

/// Universal property of a coequalizer candidate (q : Y -> Q) for G, H:
/// every functor T : Y -> Z with T G = T H must factor as U q for exactly
/// one U : Q -> Z. Returns false on the first violation.
inline bool coequalizer_universal(const FinFunctor& G, const FinFunctor& H,
                                  const FinFunctor& q, const FinCat& Z) {
  const FinCat& Y = *G.target();
  const FinCat& Q = *q.target();
  RawMap rg = as_raw(G), rh = as_raw(H), rq = as_raw(q);
  std::vector<RawMap> from_Y = all_functors(Y, Z);
  std::vector<RawMap> from_Q = all_functors(Q, Z);
  for (const RawMap& T : from_Y) {
    if (!maps_equal(compose_maps(T, rg), compose_maps(T, rh))) continue;
    int found = 0;
    for (const RawMap& U : from_Q)
      if (maps_equal(compose_maps(U, rq), T)) ++found;
    if (found != 1) return false;
  }
  return true;
}

/// The coequalizer candidate must itself coequalize: q G = q H.
inline bool coequalizes(const FinFunctor& G, const FinFunctor& H,
                        const FinFunctor& q) {
  return maps_equal(compose_maps(as_raw(q), as_raw(G)),
                    compose_maps(as_raw(q), as_raw(H)));
}

/// Universal property of a pullback candidate (P with projections pa, pb
/// against F : A -> C, G : B -> C): every pair (S : W -> A, T : W -> B)
/// with F S = G T comes from exactly one U : W -> P.
inline bool pullback_universal(const FinFunctor& F, const FinFunctor& G,
                               const FinFunctor& pa, const FinFunctor& pb,
                               const FinCat& W) {
  const FinCat& A = *F.source();
  const FinCat& B = *G.source();
  const FinCat& P = *pa.source();
  RawMap rf = as_raw(F), rg = as_raw(G), rpa = as_raw(pa), rpb = as_raw(pb);
  std::vector<RawMap> from_WA = all_functors(W, A);
  std::vector<RawMap> from_WB = all_functors(W, B);
  std::vector<RawMap> from_WP = all_functors(W, P);
  for (const RawMap& S : from_WA)
    for (const RawMap& T : from_WB) {
      if (!maps_equal(compose_maps(rf, S), compose_maps(rg, T))) continue;
      int found = 0;
      for (const RawMap& U : from_WP)
        if (maps_equal(compose_maps(rpa, U), S) &&
            maps_equal(compose_maps(rpb, U), T))
          ++found;
      if (found != 1) return false;
    }
  return true;
}

/// Universal property of a comma candidate for F : A -> C, G : B -> C with
/// projections pa, pb and object components f_of (per comma object, the
/// connecting arrow in C). A cone from W is (S : W -> A, T : W -> B, tau)
/// with tau_w : F S w -> G T w natural in w; each cone must come from
/// exactly one U : W -> comma with pa U = S, pb U = T, and connecting
/// components tau.
inline bool comma_universal(const FinFunctor& F, const FinFunctor& G,
                            const FinFunctor& pa, const FinFunctor& pb,
                            const std::vector<int>& f_of, const FinCat& W) {
  const FinCat& A = *F.source();
  const FinCat& B = *G.source();
  const FinCat& C = *F.target();
  const FinCat& P = *pa.source();
  RawMap rpa = as_raw(pa), rpb = as_raw(pb);
  std::vector<RawMap> from_WA = all_functors(W, A);
  std::vector<RawMap> from_WB = all_functors(W, B);
  std::vector<RawMap> from_WP = all_functors(W, P);
  for (const RawMap& S : from_WA)
    for (const RawMap& T : from_WB) {
      // Enumerate all natural families tau.
      std::vector<std::vector<int>> choices(W.object_count());
      for (int w = 0; w < W.object_count(); ++w)
        choices[w] = C.hom(F.on_object(S.obj[w]), G.on_object(T.obj[w]));
      std::vector<int> tau(W.object_count(), -1);
      auto natural = [&]() {
        for (int x = 0; x < W.arrow_count(); ++x) {
          int w = W.src(x), w2 = W.dst(x);
          int lhs = C.try_compose(G.on_arrow(T.arr[x]), tau[w]);
          int rhs = C.try_compose(tau[w2], F.on_arrow(S.arr[x]));
          if (lhs == FinCat::kNone || lhs != rhs) return false;
        }
        return true;
      };
      auto run = [&](auto&& self, int w) -> bool {
        if (w == W.object_count()) {
          if (!natural()) return true;
          int found = 0;
          for (const RawMap& U : from_WP) {
            if (!maps_equal(compose_maps(rpa, U), S)) continue;
            if (!maps_equal(compose_maps(rpb, U), T)) continue;
            bool same_tau = true;
            for (int i = 0; i < W.object_count(); ++i)
              if (f_of[U.obj[i]] != tau[i]) same_tau = false;
            if (same_tau) ++found;
          }
          return found == 1;
        }
        for (int c : choices[w]) {
          tau[w] = c;
          if (!self(self, w + 1)) return false;
        }
        return true;
      };
      if (!run(run, 0)) return false;
    }
  return true;
}

}  // namespace oracles

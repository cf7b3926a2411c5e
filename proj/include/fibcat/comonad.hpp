#pragma once

#include <string>
#include <vector>

#include "fibcat/fib.hpp"

namespace fibcat {

/// The splitting carrier of a cloven functor F : A -> B. Objects are pairs
/// (b, X) of a base object and a functor X from the slice over b to A whose
/// composite with F is the slice's own projection; arrows (b, X) -> (b', X')
/// are pairs (f : b -> b', alpha) where alpha is a natural family of vertical
/// arrows X g -> X'(f . g) indexed by the objects of the slice over b.
struct GFCat {
  FinFunctor F;     // the functor being split, A -> B
  CatPtr carrier;

  std::vector<SliceCat> slices;  // one per object of B

  struct Obj {
    int base;      // object of B
    FinFunctor X;  // slices[base].carrier -> A
  };
  struct Arr {
    int f;                   // arrow of B
    std::vector<int> alpha;  // arrow of A per object of the source slice
  };
  std::vector<Obj> objs;
  std::vector<Arr> arrs;

  int find_obj(int base, const std::vector<int>& obj_map,
               const std::vector<int>& arr_map) const;
  int find_arr(int src_obj, int dst_obj, int f,
               const std::vector<int>& alpha) const;

  /// Postcomposition with f : b -> b' as a functor between slices.
  FinFunctor postcompose(int f) const;

  /// Projection to B: (b, X) |-> b, (f, alpha) |-> f.
  FinFunctor projection() const;

  /// Evaluation at identities: (b, X) |-> X(id_b); an arrow (f, alpha) goes
  /// to X'(f^) . alpha_{id_b}, where f^ is the triangle from f to id_b' with
  /// leg f.
  FinFunctor counit() const;

  /// The strictly split cleavage of the projection: the lift of f : b -> b'
  /// at (b', X') is (f, identity components) from (b, X' . postcompose(f)).
  Cleavage canonical_cleavage() const;
};

GFCat build_GF(const FinFunctor& F, const Limits& lim = {});

/// The splitting construction on a morphism over B: V : A -> A' with
/// F' . V = F induces (b, X) |-> (b, V . X) between the carriers.
FinFunctor gf_on_morphism(const GFCat& from, const GFCat& to,
                          const FinFunctor& V, const std::string& name);

/// The functor a |-> (F a, g |-> source of the chosen lift of g at a) induced
/// by a cleavage, with the checks that tie it to the counit.
struct CoalgebraReport {
  FinFunctor coalg;  // A -> carrier
  bool over_ok = false;          // projection . coalg == F
  bool counit_identity = false;  // counit . coalg == Id (normalized cleavage)
  bool fully_faithful = false;
  bool hom_bijection_ok = false;  // chi |-> lift(a, id) . counit(chi) is a
                                  // bijection Hom(xi, coalg a) -> Hom(E xi, a)
  bool triangle_counit = false;   // lift(E xi, id) . counit(unit_xi) == id
  bool triangle_coalg = false;    // coalg(lift(a, id)) . unit_{coalg a} == id
  std::vector<int> unit_component;    // per carrier object: xi -> coalg(E xi)
  std::vector<char> unit_invertible;  // per carrier object
  bool laws_ok() const {
    return over_ok && fully_faithful && hom_bijection_ok && triangle_counit &&
           triangle_coalg;
  }
};

CoalgebraReport coalgebra_structure(const GFCat& gf, const Cleavage& cleavage);

struct ComonadLawsReport {
  bool left_counit_ok = false;   // counit at the second level . delta == Id
  bool right_counit_ok = false;  // pushed counit . delta == Id
  bool delta_over_ok = false;    // second projection . delta == projection
  bool coassoc_checked = false;
  bool coassoc_ok = false;
  bool canonical_cartesian = false;  // canonical lifts are cartesian
  bool canonical_split = false;      // canonical cleavage is split+normalized
  long carrier_objects = 0, carrier_arrows = 0;
  long level2_objects = 0, level2_arrows = 0;
  bool laws_ok() const {
    return left_counit_ok && right_counit_ok && delta_over_ok &&
           canonical_cartesian && canonical_split &&
           (!coassoc_checked || coassoc_ok);
  }
};

/// Builds the carrier, the carrier of its own projection, and the
/// comultiplication, then checks the comonad identities.
ComonadLawsReport comonad_laws(const FinFunctor& F, const Limits& lim = {});

/// Restriction of the splitting carrier to the closure of the coalgebra
/// image under vertical isomorphisms, with the pair of functors exhibiting
/// an equivalence between it and the source of F.
struct SplitEquivalentResult {
  GFCat gf;
  CoalgebraReport coalg_rep;
  SubCat sub;                  // the replete image, a full subcategory
  bool closed_under_lifts = false;  // canonical lift sources stay inside
  SplitCheck sub_split;             // the restricted cleavage is split
  FinFunctor j;  // A -> sub carrier (the coalgebra, corestricted)
  FinFunctor k;  // sub carrier -> A (the counit, restricted)
  NatTrans unit_s;    // Id => j . k, componentwise invertible
  NatTrans counit_a;  // k . j => Id, componentwise invertible
  bool unit_iso_ok = false;
  bool counit_iso_ok = false;
  bool equivalence_ok() const {
    return closed_under_lifts && sub_split.ok() && unit_iso_ok &&
           counit_iso_ok;
  }
};

/// Requires F to be a fibration (throws NotCloven otherwise).
SplitEquivalentResult split_equivalent(const FinFunctor& F,
                                       const Limits& lim = {});

}  // namespace fibcat

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibcat/functor.hpp"

namespace fibcat {

/// Comma category of two functors F : A -> C and G : B -> C. Objects are
/// triples (a, f : F a -> G b, b); arrows are pairs (u : a -> a', k : b -> b')
/// with G k . f = f' . F u. Exposes the decomposition of the canonical
/// carrier and both projection functors.
struct CommaCat {
  CatPtr carrier;

  struct Obj {
    int left, f, right;  // left in A, f in C, right in B
  };
  struct Arr {
    int u, k;  // u in A, k in B
  };
  std::vector<Obj> objs;  // indexed by carrier object
  std::vector<Arr> arrs;  // indexed by carrier arrow

  CatPtr left_src, right_src;  // A and B

  int find_obj(int left, int f, int right) const;
  int find_arr(int src_obj, int dst_obj, int u, int k) const;

  /// Projection to A (sends (a, f, b) to a and (u, k) to u).
  FinFunctor proj_left() const;
  /// Projection to B.
  FinFunctor proj_right() const;
};

/// Requires F.target() and G.target() to share their carrier.
CommaCat comma(const FinFunctor& F, const FinFunctor& G,
               const std::string& name, const Limits& lim = {});

/// Slice over an object b: objects are the arrows of C into b (carrier object
/// ids reuse the arrow ids of C), arrows from g to g' are the u with
/// g' . u = g. Exposes the projection sending g : x -> b to x.
struct SliceCat {
  CatPtr carrier;
  std::vector<int> obj_arrow;  // carrier object -> arrow of C into b
  std::vector<int> arr_u;      // carrier arrow -> underlying arrow of C
  CatPtr base;
  int over = FinCat::kNone;  // the object b

  int find_obj(int arrow_into_b) const;
  FinFunctor domain_projection() const;
};

SliceCat slice_cat(CatPtr cat, int over, const std::string& name,
                   const Limits& lim = {});

/// Pullback (fibered product) of F : A -> C and G : B -> C: pairs of objects
/// and arrows with equal images.
struct PullbackCat {
  CatPtr carrier;
  struct Obj {
    int left, right;
  };
  struct Arr {
    int u, k;
  };
  std::vector<Obj> objs;
  std::vector<Arr> arrs;
  CatPtr left_src, right_src;

  int find_obj(int left, int right) const;
  int find_arr(int u, int k) const;
  FinFunctor proj_left() const;
  FinFunctor proj_right() const;
};

PullbackCat pullback_cat(const FinFunctor& F, const FinFunctor& G,
                         const std::string& name, const Limits& lim = {});

/// Opposite category: same ids, endpoints swapped, composition reversed.
FinCat dual(const FinCat& cat, const std::string& name);

/// Arrow category: comma of the identity functor with itself.
CommaCat arrow_category(CatPtr cat, const std::string& name,
                        const Limits& lim = {});

/// Full subcategory on a subset of objects; ids are inherited, so parent and
/// child items correspond by id.
struct SubCat {
  CatPtr carrier;
  std::vector<int> obj_of;  // child object -> parent object
  std::vector<int> arr_of;  // child arrow -> parent arrow
  /// Inclusion into the parent category.
  FinFunctor inclusion(CatPtr parent) const;
};

SubCat full_subcategory(CatPtr cat, const std::vector<int>& objects,
                        const std::string& name);

/// Brute-force isomorphism search (bijective functor; the inverse of a
/// bijective functor is automatically a functor).
struct IsoCheck {
  bool isomorphic = false;
  /// Witness when isomorphic: object/arrow bijections (left-to-right).
  std::vector<int> obj_map, arr_map;
};

IsoCheck iso_check(const FinCat& lhs, const FinCat& rhs);

}  // namespace fibcat

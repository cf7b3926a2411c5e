#include "fibcat/constructions.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace fibcat {

namespace {

void check_arrow_budget(long count, const Limits& lim, const std::string& name) {
  if (count > lim.construction_arrow_cap)
    fail(Err::InstanceTooLarge, "construction " + name + " exceeds " +
                                    std::to_string(lim.construction_arrow_cap) +
                                    " arrows");
}

std::string bracket2(const std::string& x, const std::string& y) {
  return "(" + x + "|" + y + ")";
}

std::string bracket3(const std::string& x, const std::string& y,
                     const std::string& z) {
  return "(" + x + "|" + y + "|" + z + ")";
}

std::string bracket4(const std::string& w, const std::string& x,
                     const std::string& y, const std::string& z) {
  return "(" + w + "|" + x + "|" + y + "|" + z + ")";
}

}  // namespace

int CommaCat::find_obj(int left, int f, int right) const {
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    if (objs[i].left == left && objs[i].f == f && objs[i].right == right)
      return i;
  return FinCat::kNone;
}

int CommaCat::find_arr(int src_obj, int dst_obj, int u, int k) const {
  for (int i = 0; i < static_cast<int>(arrs.size()); ++i)
    if (carrier->src(i) == src_obj && carrier->dst(i) == dst_obj &&
        arrs[i].u == u && arrs[i].k == k)
      return i;
  return FinCat::kNone;
}

FinFunctor CommaCat::proj_left() const {
  std::vector<int> obj_map(objs.size()), arr_map(carrier->arrow_count());
  for (size_t i = 0; i < objs.size(); ++i) obj_map[i] = objs[i].left;
  for (int a = 0; a < carrier->arrow_count(); ++a) arr_map[a] = arrs[a].u;
  return FinFunctor(carrier->name() + ".left", carrier, left_src,
                    std::move(obj_map), std::move(arr_map));
}

FinFunctor CommaCat::proj_right() const {
  std::vector<int> obj_map(objs.size()), arr_map(carrier->arrow_count());
  for (size_t i = 0; i < objs.size(); ++i) obj_map[i] = objs[i].right;
  for (int a = 0; a < carrier->arrow_count(); ++a) arr_map[a] = arrs[a].k;
  return FinFunctor(carrier->name() + ".right", carrier, right_src,
                    std::move(obj_map), std::move(arr_map));
}

CommaCat comma(const FinFunctor& F, const FinFunctor& G,
               const std::string& name, const Limits& lim) {
  if (!F.target()->same_structure(*G.target()))
    fail(Err::TargetMismatch, "comma(" + F.name() + ", " + G.name() +
                                  "): functors do not share a target");
  const FinCat& A = *F.source();
  const FinCat& B = *G.source();
  const FinCat& C = *F.target();

  CommaCat out;
  out.left_src = F.source();
  out.right_src = G.source();

  RawCategory raw;
  raw.name = name;
  for (int a = 0; a < A.object_count(); ++a)
    for (int b = 0; b < B.object_count(); ++b)
      for (int f : C.hom(F.on_object(a), G.on_object(b))) {
        out.objs.push_back({a, f, b});
        raw.objects.push_back(
            bracket3(A.object_id(a), C.arrow_id(f), B.object_id(b)));
        check_arrow_budget(static_cast<long>(out.objs.size()), lim, name);
      }

  const int n_obj = static_cast<int>(out.objs.size());
  // Arrows (u, k) : (a, f, b) -> (a', f', b') with G k . f = f' . F u.
  std::vector<RawArrow> user_arrows;
  std::vector<CommaCat::Arr> user_arrs;
  std::map<std::tuple<int, int, int, int>, std::string> arrow_id_of;
  long total = n_obj;  // identities
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j) {
      const auto& oi = out.objs[i];
      const auto& oj = out.objs[j];
      for (int u : A.hom(oi.left, oj.left))
        for (int k : B.hom(oi.right, oj.right)) {
          if (C.compose(G.on_arrow(k), oi.f) != C.compose(oj.f, F.on_arrow(u)))
            continue;
          std::string id;
          if (i == j && A.is_identity(u) && B.is_identity(k)) {
            id = identity_id(raw.objects[i]);
          } else {
            id = bracket4(A.arrow_id(u), B.arrow_id(k), C.arrow_id(oi.f),
                          C.arrow_id(oj.f));
            user_arrows.push_back({id, raw.objects[i], raw.objects[j]});
            user_arrs.push_back({u, k});
            check_arrow_budget(++total, lim, name);
          }
          arrow_id_of[{i, j, u, k}] = std::move(id);
        }
    }
  raw.arrows = user_arrows;

  for (const auto& [key_f, id_f] : arrow_id_of) {
    auto [i, j, u, k] = key_f;
    if (i == j && A.is_identity(u) && B.is_identity(k)) continue;
    for (const auto& [key_g, id_g] : arrow_id_of) {
      auto [j2, l, u2, k2] = key_g;
      if (j2 != j) continue;
      if (j2 == l && A.is_identity(u2) && B.is_identity(k2)) continue;
      auto it = arrow_id_of.find({i, l, A.compose(u2, u), B.compose(k2, k)});
      if (it == arrow_id_of.end())
        fail(Err::LawViolation, "comma " + name + ": composite escaped");
      raw.compose.push_back({id_g, id_f, it->second});
    }
  }

  out.carrier = make_cat(raw);
  // Canonical arrow order in the carrier: user arrows in insertion order,
  // then identities; extend the decomposition for the identities.
  out.arrs = std::move(user_arrs);
  for (int i = 0; i < n_obj; ++i)
    out.arrs.push_back({A.identity(out.objs[i].left),
                        B.identity(out.objs[i].right)});
  return out;
}

int SliceCat::find_obj(int arrow_into_b) const {
  for (int i = 0; i < static_cast<int>(obj_arrow.size()); ++i)
    if (obj_arrow[i] == arrow_into_b) return i;
  return FinCat::kNone;
}

FinFunctor SliceCat::domain_projection() const {
  std::vector<int> obj_map(obj_arrow.size()), arr_map(carrier->arrow_count());
  for (size_t i = 0; i < obj_arrow.size(); ++i)
    obj_map[i] = base->src(obj_arrow[i]);
  for (int a = 0; a < carrier->arrow_count(); ++a) arr_map[a] = arr_u[a];
  return FinFunctor(carrier->name() + ".dom", carrier, base,
                    std::move(obj_map), std::move(arr_map));
}

SliceCat slice_cat(CatPtr cat, int over, const std::string& name,
                   const Limits& lim) {
  const FinCat& C = *cat;
  SliceCat out;
  out.base = cat;
  out.over = over;

  RawCategory raw;
  raw.name = name;
  for (int g : C.arrows_into(over)) {
    out.obj_arrow.push_back(g);
    raw.objects.push_back(C.arrow_id(g));
  }
  const int n_obj = static_cast<int>(out.obj_arrow.size());

  // A triangle from g to g' is u : dom g -> dom g' with g' . u = g; it is
  // determined by its target g' and its leg u (the source is g' . u), and it
  // is an identity exactly when u is.
  std::vector<int> user_u;
  std::map<std::pair<int, int>, std::string> arrow_id_of;  // (dst obj, u)
  long total = n_obj;
  for (int i = 0; i < n_obj; ++i) {
    int g = out.obj_arrow[i];
    for (int j = 0; j < n_obj; ++j) {
      int gp = out.obj_arrow[j];
      for (int u : C.hom(C.src(g), C.src(gp))) {
        if (C.compose(gp, u) != g) continue;
        std::string id;
        if (C.is_identity(u)) {
          id = identity_id(raw.objects[i]);
        } else {
          id = bracket2(C.arrow_id(u), C.arrow_id(gp));
          raw.arrows.push_back({id, raw.objects[i], raw.objects[j]});
          user_u.push_back(u);
          check_arrow_budget(++total, lim, name);
        }
        arrow_id_of[{j, u}] = std::move(id);
      }
    }
  }

  // (u2, g'') . (u1, g') = (u2 . u1, g''), defined when the second triangle
  // starts at g', that is when g'' . u2 = g'.
  for (const auto& [key_f, id_f] : arrow_id_of) {
    auto [j1, u1] = key_f;
    if (C.is_identity(u1)) continue;
    for (const auto& [key_g, id_g] : arrow_id_of) {
      auto [j2, u2] = key_g;
      if (C.is_identity(u2)) continue;
      if (C.try_compose(out.obj_arrow[j2], u2) != out.obj_arrow[j1]) continue;
      auto it = arrow_id_of.find({j2, C.compose(u2, u1)});
      if (it == arrow_id_of.end())
        fail(Err::LawViolation, "slice " + name + ": composite escaped");
      raw.compose.push_back({id_g, id_f, it->second});
    }
  }

  out.carrier = make_cat(raw);
  out.arr_u = std::move(user_u);
  for (int i = 0; i < n_obj; ++i)
    out.arr_u.push_back(C.identity(C.src(out.obj_arrow[i])));
  return out;
}

int PullbackCat::find_obj(int left, int right) const {
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    if (objs[i].left == left && objs[i].right == right) return i;
  return FinCat::kNone;
}

int PullbackCat::find_arr(int u, int k) const {
  for (int a = 0; a < static_cast<int>(arrs.size()); ++a)
    if (arrs[a].u == u && arrs[a].k == k) return a;
  return FinCat::kNone;
}

FinFunctor PullbackCat::proj_left() const {
  std::vector<int> obj_map(objs.size()), arr_map(carrier->arrow_count());
  for (size_t i = 0; i < objs.size(); ++i) obj_map[i] = objs[i].left;
  for (int a = 0; a < carrier->arrow_count(); ++a) arr_map[a] = arrs[a].u;
  return FinFunctor(carrier->name() + ".left", carrier, left_src,
                    std::move(obj_map), std::move(arr_map));
}

FinFunctor PullbackCat::proj_right() const {
  std::vector<int> obj_map(objs.size()), arr_map(carrier->arrow_count());
  for (size_t i = 0; i < objs.size(); ++i) obj_map[i] = objs[i].right;
  for (int a = 0; a < carrier->arrow_count(); ++a) arr_map[a] = arrs[a].k;
  return FinFunctor(carrier->name() + ".right", carrier, right_src,
                    std::move(obj_map), std::move(arr_map));
}

PullbackCat pullback_cat(const FinFunctor& F, const FinFunctor& G,
                         const std::string& name, const Limits& lim) {
  if (!F.target()->same_structure(*G.target()))
    fail(Err::TargetMismatch, "pullback(" + F.name() + ", " + G.name() +
                                  "): functors do not share a target");
  const FinCat& A = *F.source();
  const FinCat& B = *G.source();

  PullbackCat out;
  out.left_src = F.source();
  out.right_src = G.source();

  RawCategory raw;
  raw.name = name;
  for (int a = 0; a < A.object_count(); ++a)
    for (int b = 0; b < B.object_count(); ++b)
      if (F.on_object(a) == G.on_object(b)) {
        out.objs.push_back({a, b});
        raw.objects.push_back(bracket2(A.object_id(a), B.object_id(b)));
      }
  const int n_obj = static_cast<int>(out.objs.size());

  std::map<std::pair<int, int>, std::string> arrow_id_of;  // (u, k)
  long total = n_obj;
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j) {
      const auto& oi = out.objs[i];
      const auto& oj = out.objs[j];
      for (int u : A.hom(oi.left, oj.left))
        for (int k : B.hom(oi.right, oj.right)) {
          if (F.on_arrow(u) != G.on_arrow(k)) continue;
          std::string id;
          if (A.is_identity(u) && B.is_identity(k)) {
            id = identity_id(raw.objects[i]);
          } else {
            id = bracket2(A.arrow_id(u), B.arrow_id(k));
            raw.arrows.push_back({id, raw.objects[i], raw.objects[j]});
            out.arrs.push_back({u, k});
            check_arrow_budget(++total, lim, name);
          }
          arrow_id_of[{u, k}] = std::move(id);
        }
    }

  for (const auto& [key_f, id_f] : arrow_id_of) {
    auto [u, k] = key_f;
    if (A.is_identity(u) && B.is_identity(k)) continue;
    for (const auto& [key_g, id_g] : arrow_id_of) {
      auto [u2, k2] = key_g;
      if (A.is_identity(u2) && B.is_identity(k2)) continue;
      if (A.src(u2) != A.dst(u) || B.src(k2) != B.dst(k)) continue;
      auto it = arrow_id_of.find({A.compose(u2, u), B.compose(k2, k)});
      if (it == arrow_id_of.end())
        fail(Err::LawViolation, "pullback " + name + ": composite escaped");
      raw.compose.push_back({id_g, id_f, it->second});
    }
  }

  out.carrier = make_cat(raw);
  for (int i = 0; i < n_obj; ++i)
    out.arrs.push_back(
        {A.identity(out.objs[i].left), B.identity(out.objs[i].right)});
  return out;
}

FinCat dual(const FinCat& cat, const std::string& name) {
  RawCategory raw;
  raw.name = name;
  for (int o = 0; o < cat.object_count(); ++o)
    raw.objects.push_back(cat.object_id(o));
  for (int a = 0; a < cat.non_identity_arrow_count(); ++a)
    raw.arrows.push_back(
        {cat.arrow_id(a), cat.object_id(cat.dst(a)), cat.object_id(cat.src(a))});
  for (int g = 0; g < cat.non_identity_arrow_count(); ++g)
    for (int f = 0; f < cat.non_identity_arrow_count(); ++f)
      if (cat.src(f) == cat.dst(g))
        raw.compose.push_back(
            {cat.arrow_id(g), cat.arrow_id(f), cat.arrow_id(cat.compose(f, g))});
  return validate_category(raw);
}

CommaCat arrow_category(CatPtr cat, const std::string& name,
                        const Limits& lim) {
  FinFunctor idc = identity_functor(cat);
  return comma(idc, idc, name, lim);
}

FinFunctor SubCat::inclusion(CatPtr parent) const {
  std::vector<int> obj_map = obj_of, arr_map = arr_of;
  return FinFunctor(carrier->name() + ".incl", carrier, std::move(parent),
                    std::move(obj_map), std::move(arr_map));
}

SubCat full_subcategory(CatPtr cat, const std::vector<int>& objects,
                        const std::string& name) {
  const FinCat& C = *cat;
  SubCat out;
  std::vector<int> child_of(C.object_count(), FinCat::kNone);
  RawCategory raw;
  raw.name = name;
  for (int o : objects) {
    child_of[o] = static_cast<int>(out.obj_of.size());
    out.obj_of.push_back(o);
    raw.objects.push_back(C.object_id(o));
  }
  std::vector<int> kept;
  for (int a = 0; a < C.arrow_count(); ++a) {
    if (child_of[C.src(a)] == FinCat::kNone ||
        child_of[C.dst(a)] == FinCat::kNone)
      continue;
    kept.push_back(a);
    if (!C.is_identity(a))
      raw.arrows.push_back({C.arrow_id(a), C.object_id(C.src(a)),
                            C.object_id(C.dst(a))});
  }
  for (int f : kept) {
    if (C.is_identity(f)) continue;
    for (int g : kept) {
      if (C.is_identity(g) || C.src(g) != C.dst(f)) continue;
      raw.compose.push_back(
          {C.arrow_id(g), C.arrow_id(f), C.arrow_id(C.compose(g, f))});
    }
  }
  out.carrier = make_cat(raw);
  out.arr_of.resize(out.carrier->arrow_count());
  for (int a = 0; a < out.carrier->arrow_count(); ++a)
    out.arr_of[a] = C.require_arrow(out.carrier->arrow_id(a));
  return out;
}

namespace {

struct IsoSearch {
  const FinCat& lhs;
  const FinCat& rhs;
  std::vector<int> obj_map, arr_map;
  std::vector<bool> obj_used, arr_used;
  bool found = false;

  bool assign_object(int o) {
    if (o == lhs.object_count()) return assign_arrow(0);
    for (int img = 0; img < rhs.object_count(); ++img) {
      if (obj_used[img]) continue;
      if (lhs.arrows_into(o).size() != rhs.arrows_into(img).size() ||
          lhs.arrows_from(o).size() != rhs.arrows_from(img).size())
        continue;
      obj_map[o] = img;
      obj_used[img] = true;
      if (assign_object(o + 1)) return true;
      obj_used[img] = false;
    }
    obj_map[o] = FinCat::kNone;
    return false;
  }

  bool assign_arrow(int a) {
    if (a == lhs.arrow_count()) return true;
    if (lhs.is_identity(a)) {
      int img = rhs.identity(obj_map[lhs.src(a)]);
      if (arr_used[img]) return false;
      arr_map[a] = img;
      arr_used[img] = true;
      if (consistent(a) && assign_arrow(a + 1)) return true;
      arr_used[img] = false;
      arr_map[a] = FinCat::kNone;
      return false;
    }
    for (int img : rhs.hom(obj_map[lhs.src(a)], obj_map[lhs.dst(a)])) {
      if (arr_used[img] || rhs.is_identity(img)) continue;
      arr_map[a] = img;
      arr_used[img] = true;
      if (consistent(a) && assign_arrow(a + 1)) return true;
      arr_used[img] = false;
    }
    arr_map[a] = FinCat::kNone;
    return false;
  }

  bool consistent(int a) {
    for (int b = 0; b <= a; ++b) {
      if (arr_map[b] == FinCat::kNone) continue;
      int ab = lhs.try_compose(a, b);
      if (ab != FinCat::kNone && ab <= a &&
          rhs.compose(arr_map[a], arr_map[b]) != arr_map[ab])
        return false;
      int ba = lhs.try_compose(b, a);
      if (ba != FinCat::kNone && ba <= a &&
          rhs.compose(arr_map[b], arr_map[a]) != arr_map[ba])
        return false;
    }
    return true;
  }
};

}  // namespace

IsoCheck iso_check(const FinCat& lhs, const FinCat& rhs) {
  IsoCheck out;
  if (lhs.object_count() != rhs.object_count() ||
      lhs.arrow_count() != rhs.arrow_count())
    return out;
  IsoSearch search{lhs, rhs,
                   std::vector<int>(lhs.object_count(), FinCat::kNone),
                   std::vector<int>(lhs.arrow_count(), FinCat::kNone),
                   std::vector<bool>(rhs.object_count(), false),
                   std::vector<bool>(rhs.arrow_count(), false)};
  if (search.assign_object(0)) {
    out.isomorphic = true;
    out.obj_map = std::move(search.obj_map);
    out.arr_map = std::move(search.arr_map);
  }
  return out;
}

}  // namespace fibcat

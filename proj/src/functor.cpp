#include "fibcat/functor.hpp"

#include <algorithm>
#include <unordered_map>

namespace fibcat {

namespace {

void check_functor_laws(const std::string& name, const FinCat& src,
                        const FinCat& dst, const std::vector<int>& obj_map,
                        const std::vector<int>& arr_map) {
  for (int a = 0; a < src.arrow_count(); ++a) {
    int fa = arr_map[a];
    if (dst.src(fa) != obj_map[src.src(a)] || dst.dst(fa) != obj_map[src.dst(a)])
      fail(Err::TargetMismatch, "functor " + name + " sends '" +
                                    src.arrow_id(a) +
                                    "' to an arrow with wrong endpoints");
  }
  for (int o = 0; o < src.object_count(); ++o)
    if (arr_map[src.identity(o)] != dst.identity(obj_map[o]))
      fail(Err::LawViolation, "functor " + name +
                                  " does not preserve the identity of '" +
                                  src.object_id(o) + "'");
  for (int f = 0; f < src.arrow_count(); ++f)
    for (int g : src.arrows_from(src.dst(f)))
      if (arr_map[src.compose(g, f)] != dst.compose(arr_map[g], arr_map[f]))
        fail(Err::LawViolation, "functor " + name +
                                    " does not preserve the composite of ('" +
                                    src.arrow_id(g) + "', '" + src.arrow_id(f) +
                                    "')");
}

}  // namespace

FinFunctor::FinFunctor(std::string name, CatPtr source, CatPtr target,
                       std::vector<int> obj_map, std::vector<int> arr_map)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      obj_map_(std::move(obj_map)),
      arr_map_(std::move(arr_map)) {
  if (static_cast<int>(obj_map_.size()) != source_->object_count() ||
      static_cast<int>(arr_map_.size()) != source_->arrow_count())
    fail(Err::Parse, "functor " + name_ + " has partial maps");
  check_functor_laws(name_, *source_, *target_, obj_map_, arr_map_);
}

bool functor_equal(const FinFunctor& f, const FinFunctor& g) {
  return f.source()->same_structure(*g.source()) &&
         f.target()->same_structure(*g.target()) &&
         f.object_map() == g.object_map() && f.arrow_map() == g.arrow_map();
}

FinFunctor validate_functor(const RawFunctor& raw, CatPtr source,
                            CatPtr target) {
  std::vector<int> obj_map(source->object_count(), FinCat::kNone);
  std::vector<int> arr_map(source->arrow_count(), FinCat::kNone);
  for (const auto& [from, to] : raw.on_objects) {
    int o = source->require_object(from);
    if (obj_map[o] != FinCat::kNone)
      fail(Err::Parse, "functor " + raw.name + " maps object '" + from +
                           "' twice");
    obj_map[o] = target->require_object(to);
  }
  for (int o = 0; o < source->object_count(); ++o)
    if (obj_map[o] == FinCat::kNone)
      fail(Err::Parse, "functor " + raw.name + " misses object '" +
                                  source->object_id(o) + "'");
  for (const auto& [from, to] : raw.on_arrows) {
    int a = source->require_arrow(from);
    if (source->is_identity(a))
      fail(Err::Parse, "functor " + raw.name +
                           " explicitly maps the identity '" + from +
                           "'; identities are mapped automatically");
    if (arr_map[a] != FinCat::kNone)
      fail(Err::Parse, "functor " + raw.name + " maps arrow '" + from +
                           "' twice");
    arr_map[a] = target->require_arrow(to);
  }
  for (int a = 0; a < source->non_identity_arrow_count(); ++a)
    if (arr_map[a] == FinCat::kNone)
      fail(Err::Parse, "functor " + raw.name + " misses arrow '" +
                                  source->arrow_id(a) + "'");
  for (int o = 0; o < source->object_count(); ++o)
    arr_map[source->identity(o)] = target->identity(obj_map[o]);
  return FinFunctor(raw.name, std::move(source), std::move(target),
                    std::move(obj_map), std::move(arr_map));
}

FinFunctor identity_functor(CatPtr cat) {
  std::vector<int> obj_map(cat->object_count());
  std::vector<int> arr_map(cat->arrow_count());
  for (int o = 0; o < cat->object_count(); ++o) obj_map[o] = o;
  for (int a = 0; a < cat->arrow_count(); ++a) arr_map[a] = a;
  std::string nm = "id_" + cat->name();
  return FinFunctor(std::move(nm), cat, cat, std::move(obj_map),
                    std::move(arr_map));
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f,
                            const std::string& name) {
  if (!f.target()->same_structure(*g.source()))
    fail(Err::TargetMismatch, "cannot compose functors " + g.name() + " and " +
                                  f.name() + ": carriers do not match");
  std::vector<int> obj_map(f.source()->object_count());
  std::vector<int> arr_map(f.source()->arrow_count());
  for (int o = 0; o < f.source()->object_count(); ++o)
    obj_map[o] = g.on_object(f.on_object(o));
  for (int a = 0; a < f.source()->arrow_count(); ++a)
    arr_map[a] = g.on_arrow(f.on_arrow(a));
  std::string nm = name.empty() ? g.name() + "." + f.name() : name;
  return FinFunctor(std::move(nm), f.source(), g.target(), std::move(obj_map),
                    std::move(arr_map));
}

NatTrans make_nat_trans(std::string name, const FinFunctor& from,
                        const FinFunctor& to, std::vector<int> component) {
  if (!from.source()->same_structure(*to.source()) ||
      !from.target()->same_structure(*to.target()))
    fail(Err::ParallelismMismatch, "transformation " + name +
                                       " between non-parallel functors");
  const FinCat& src = *from.source();
  const FinCat& dst = *from.target();
  if (static_cast<int>(component.size()) != src.object_count())
    fail(Err::Parse, "transformation " + name +
                                " has a partial component family");
  for (int o = 0; o < src.object_count(); ++o) {
    int c = component[o];
    if (dst.src(c) != from.on_object(o) || dst.dst(c) != to.on_object(o))
      fail(Err::TargetMismatch, "component of " + name + " at '" +
                                    src.object_id(o) + "' has wrong endpoints");
  }
  for (int a = 0; a < src.arrow_count(); ++a)
    if (dst.compose(component[src.dst(a)], from.on_arrow(a)) !=
        dst.compose(to.on_arrow(a), component[src.src(a)]))
      fail(Err::LawViolation, "transformation " + name +
                                  " fails naturality at arrow '" +
                                  src.arrow_id(a) + "'");
  return NatTrans{std::move(name), from, to, std::move(component)};
}

bool nat_trans_is_identity(const NatTrans& t) {
  const FinCat& dst = *t.from.target();
  for (int c : t.component)
    if (!dst.is_identity(c)) return false;
  return true;
}

bool nat_trans_vertical(const NatTrans& t, const FinFunctor& down) {
  for (int c : t.component)
    if (!down.target()->is_identity(down.on_arrow(c))) return false;
  return true;
}

std::optional<NatTrans> nat_trans_inverse(const NatTrans& t) {
  const FinCat& dst = *t.from.target();
  std::vector<int> inv(t.component.size());
  for (size_t o = 0; o < t.component.size(); ++o) {
    int c = t.component[o];
    int found = FinCat::kNone;
    for (int g : dst.hom(dst.dst(c), dst.src(c)))
      if (dst.compose(g, c) == dst.identity(dst.src(c)) &&
          dst.compose(c, g) == dst.identity(dst.dst(c))) {
        found = g;
        break;
      }
    if (found == FinCat::kNone) return std::nullopt;
    inv[o] = found;
  }
  return make_nat_trans(t.name + "^-1", t.to, t.from, std::move(inv));
}

namespace {

/// Backtracking enumerator. Assigns object images in object order, then arrow
/// images in arrow order, pruning on endpoints, the over-constraint, and all
/// composites among already-assigned arrows.
struct FunctorSearch {
  const FinCat& src;
  const FinCat& dst;
  CatPtr src_ptr, dst_ptr;
  const OverConstraint* over;
  long cap;
  std::vector<int> obj_map, arr_map;
  std::vector<FinFunctor> out;

  void run() {
    obj_map.assign(src.object_count(), FinCat::kNone);
    arr_map.assign(src.arrow_count(), FinCat::kNone);
    assign_object(0);
  }

  void assign_object(int o) {
    if (cap >= 0 && static_cast<long>(out.size()) >= cap) return;
    if (o == src.object_count()) {
      for (int i = 0; i < src.object_count(); ++i)
        arr_map[src.identity(i)] = dst.identity(obj_map[i]);
      assign_arrow(0);
      return;
    }
    for (int img = 0; img < dst.object_count(); ++img) {
      if (over && over->after->on_object(img) != over->expect->on_object(o))
        continue;
      obj_map[o] = img;
      assign_object(o + 1);
      obj_map[o] = FinCat::kNone;
    }
  }

  void assign_arrow(int a) {
    if (cap >= 0 && static_cast<long>(out.size()) >= cap) return;
    if (a == src.non_identity_arrow_count()) {
      out.emplace_back("", src_ptr, dst_ptr, obj_map, arr_map);
      return;
    }
    for (int img : dst.hom(obj_map[src.src(a)], obj_map[src.dst(a)])) {
      if (over && over->after->on_arrow(img) != over->expect->on_arrow(a))
        continue;
      arr_map[a] = img;
      if (composites_consistent(a)) assign_arrow(a + 1);
      arr_map[a] = FinCat::kNone;
    }
  }

  /// Composites involving arrow a and any assigned arrow (including a itself)
  /// must land on assigned arrows consistently.
  bool composites_consistent(int a) {
    const int limit = src.arrow_count();
    for (int b = 0; b < limit; ++b) {
      if (arr_map[b] == FinCat::kNone) continue;
      int ab = src.try_compose(a, b);
      if (ab != FinCat::kNone && arr_map[ab] != FinCat::kNone &&
          dst.compose(arr_map[a], arr_map[b]) != arr_map[ab])
        return false;
      int ba = src.try_compose(b, a);
      if (ba != FinCat::kNone && arr_map[ba] != FinCat::kNone &&
          dst.compose(arr_map[b], arr_map[a]) != arr_map[ba])
        return false;
    }
    return true;
  }
};

}  // namespace

std::vector<FinFunctor> enumerate_functors(CatPtr source, CatPtr target,
                                           const OverConstraint* over,
                                           long cap) {
  FunctorSearch search{*source, *target, source, target, over, cap, {}, {}, {}};
  search.run();
  return std::move(search.out);
}

std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& from,
                                          const FinFunctor& to,
                                          const FinFunctor* down) {
  const FinCat& src = *from.source();
  const FinCat& dst = *from.target();
  std::vector<std::vector<int>> choices(src.object_count());
  for (int o = 0; o < src.object_count(); ++o) {
    for (int c : dst.hom(from.on_object(o), to.on_object(o))) {
      if (down && !down->target()->is_identity(down->on_arrow(c))) continue;
      choices[o].push_back(c);
    }
    if (choices[o].empty()) return {};
  }
  std::vector<NatTrans> out;
  std::vector<int> pick(src.object_count(), 0);
  std::vector<int> component(src.object_count());
  while (true) {
    for (int o = 0; o < src.object_count(); ++o)
      component[o] = choices[o][pick[o]];
    bool natural = true;
    for (int a = 0; a < src.arrow_count() && natural; ++a)
      natural = dst.compose(component[src.dst(a)], from.on_arrow(a)) ==
                dst.compose(to.on_arrow(a), component[src.src(a)]);
    if (natural)
      out.push_back(make_nat_trans("", from, to, component));
    int o = src.object_count() - 1;
    while (o >= 0 && ++pick[o] == static_cast<int>(choices[o].size()))
      pick[o--] = 0;
    if (o < 0) break;
  }
  return out;
}

}  // namespace fibcat

#include "fibcat/catalog.hpp"

#include <filesystem>
#include <map>

#include "fibcat/constructions.hpp"
#include "fibcat/io.hpp"

namespace fibcat {

namespace {

namespace fs = std::filesystem;

RawArrow arr(std::string id, std::string src, std::string dst) {
  return {std::move(id), std::move(src), std::move(dst)};
}

std::string sanitize(const std::string& id) {
  std::string out = id;
  for (char& c : out)
    if (c == ':') c = '_';
  return out;
}

/// Exports an arrow category with interchange-safe ids: the object standing
/// for an arrow g of the base is named "e_<g>", and a commuting square gets
/// "s_<src>_<dst>" (with a numeric suffix when several squares share their
/// endpoints). Also derives the domain/codomain projections onto the base.
struct ArrowCatExport {
  RawCategory raw;
  RawFunctor dom, cod;
};

ArrowCatExport export_arrow_cat(CatPtr base, const std::string& name) {
  const FinCat& C = *base;
  CommaCat cc = arrow_category(base, name + "_tmp");
  const FinCat& car = *cc.carrier;

  std::vector<std::string> obj_name(car.object_count());
  for (int i = 0; i < car.object_count(); ++i)
    obj_name[i] = "e_" + sanitize(C.arrow_id(cc.objs[i].f));

  std::vector<std::string> arr_name(car.non_identity_arrow_count());
  std::map<std::pair<int, int>, int> seen;
  for (int a = 0; a < car.non_identity_arrow_count(); ++a) {
    const int count = ++seen[{car.src(a), car.dst(a)}];
    arr_name[a] = "s_" + obj_name[car.src(a)] + "_" + obj_name[car.dst(a)];
    if (count > 1) arr_name[a] += "_" + std::to_string(count);
  }

  ArrowCatExport out;
  out.raw.name = name;
  for (int i = 0; i < car.object_count(); ++i)
    out.raw.objects.push_back(obj_name[i]);
  for (int a = 0; a < car.non_identity_arrow_count(); ++a)
    out.raw.arrows.push_back(
        {arr_name[a], obj_name[car.src(a)], obj_name[car.dst(a)]});
  for (int g = 0; g < car.non_identity_arrow_count(); ++g)
    for (int f = 0; f < car.non_identity_arrow_count(); ++f) {
      if (car.src(g) != car.dst(f)) continue;
      const int gf = car.compose(g, f);
      out.raw.compose.push_back(
          {arr_name[g], arr_name[f],
           car.is_identity(gf) ? identity_id(obj_name[car.src(f)])
                               : arr_name[gf]});
    }

  out.dom.name = name + "_dom";
  out.cod.name = name + "_cod";
  out.dom.source_file = out.cod.source_file = name + ".json";
  out.dom.target_file = out.cod.target_file = C.name() + ".json";
  for (int i = 0; i < car.object_count(); ++i) {
    const int f = cc.objs[i].f;
    out.dom.on_objects.push_back({obj_name[i], C.object_id(C.src(f))});
    out.cod.on_objects.push_back({obj_name[i], C.object_id(C.dst(f))});
  }
  for (int a = 0; a < car.non_identity_arrow_count(); ++a) {
    out.dom.on_arrows.push_back({arr_name[a], C.arrow_id(cc.arrs[a].u)});
    out.cod.on_arrows.push_back({arr_name[a], C.arrow_id(cc.arrs[a].k)});
  }
  return out;
}

RawFunctor fun(std::string name, std::string source, std::string target,
               std::vector<std::pair<std::string, std::string>> on_objects,
               std::vector<std::pair<std::string, std::string>> on_arrows) {
  RawFunctor f;
  f.name = std::move(name);
  f.source_file = std::move(source) + ".json";
  f.target_file = std::move(target) + ".json";
  f.on_objects = std::move(on_objects);
  f.on_arrows = std::move(on_arrows);
  return f;
}

}  // namespace

std::vector<std::string> generate_catalog(const std::string& dir) {
  std::vector<RawCategory> cats;
  std::vector<RawFunctor> funs;

  {
    RawCategory c;
    c.name = "one";
    c.objects = {"*"};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "two";
    c.objects = {"0", "1"};
    c.arrows = {arr("f01", "0", "1")};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "three";
    c.objects = {"0", "1", "2"};
    c.arrows = {arr("f01", "0", "1"), arr("f12", "1", "2"),
                arr("f02", "0", "2")};
    c.compose = {{"f12", "f01", "f02"}};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "poset2x2";
    c.objects = {"bot", "a", "b", "top"};
    c.arrows = {arr("bot_a", "bot", "a"), arr("bot_b", "bot", "b"),
                arr("a_top", "a", "top"), arr("b_top", "b", "top"),
                arr("bot_top", "bot", "top")};
    c.compose = {{"a_top", "bot_a", "bot_top"}, {"b_top", "bot_b", "bot_top"}};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "chaotic2";
    c.objects = {"p", "q"};
    c.arrows = {arr("u", "p", "q"), arr("v", "q", "p")};
    c.compose = {{"v", "u", "id:p"}, {"u", "v", "id:q"}};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "one_plus_one";
    c.objects = {"p", "q"};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "two_plus_two";
    c.objects = {"a0", "a1", "b0", "b1"};
    c.arrows = {arr("fa", "a0", "a1"), arr("fb", "b0", "b1")};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "cospan";
    c.objects = {"a", "b", "c"};
    c.arrows = {arr("u", "a", "c"), arr("v", "b", "c")};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "quop_X";
    c.objects = {"x"};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "quop_Y";
    c.objects = {"yp", "y1", "y2", "ypp"};
    c.arrows = {arr("v1", "yp", "y1"), arr("v2", "y2", "ypp")};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "quop_A";
    c.objects = {"ap", "a", "app"};
    c.arrows = {arr("w1", "ap", "a"), arr("w2", "a", "app"),
                arr("w", "ap", "app")};
    c.compose = {{"w2", "w1", "w"}};
    cats.push_back(c);
  }
  {
    RawCategory c;
    c.name = "pres_Y";
    c.objects = {"u0", "u1", "s"};
    c.arrows = {arr("e", "u0", "u1")};
    cats.push_back(c);
  }

  std::map<std::string, CatPtr> by_name;
  for (const auto& raw : cats) by_name[raw.name] = make_cat(raw);

  std::vector<ArrowCatExport> arrow_cats;
  for (const std::string& base : {"two", "poset2x2", "cospan"})
    arrow_cats.push_back(export_arrow_cat(by_name.at(base), base + "_arr"));
  for (const auto& e : arrow_cats) cats.push_back(e.raw);

  auto identity_raw = [&](const std::string& base) {
    const FinCat& C = *by_name.at(base);
    std::vector<std::pair<std::string, std::string>> objs, arrs;
    for (int o = 0; o < C.object_count(); ++o)
      objs.push_back({C.object_id(o), C.object_id(o)});
    for (int a = 0; a < C.non_identity_arrow_count(); ++a)
      arrs.push_back({C.arrow_id(a), C.arrow_id(a)});
    return fun("id_" + base, base, base, std::move(objs), std::move(arrs));
  };
  funs.push_back(identity_raw("one"));
  funs.push_back(identity_raw("two"));
  funs.push_back(identity_raw("three"));
  funs.push_back(identity_raw("poset2x2"));

  funs.push_back(fun("pt0", "one", "two", {{"*", "0"}}, {}));
  funs.push_back(fun("pt1", "one", "two", {{"*", "1"}}, {}));
  funs.push_back(fun("pt_chaotic0", "one", "chaotic2", {{"*", "p"}}, {}));
  funs.push_back(fun("twopoint_nonfib", "one_plus_one", "two",
                     {{"p", "0"}, {"q", "1"}}, {}));
  funs.push_back(fun("fold", "two_plus_two", "two",
                     {{"a0", "0"}, {"a1", "1"}, {"b0", "0"}, {"b1", "1"}},
                     {{"fa", "f01"}, {"fb", "f01"}}));
  funs.push_back(fun("quop_G", "quop_X", "quop_Y", {{"x", "y1"}}, {}));
  funs.push_back(fun("quop_H", "quop_X", "quop_Y", {{"x", "y2"}}, {}));
  funs.push_back(fun("quop_Q", "quop_Y", "quop_A",
                     {{"yp", "ap"}, {"y1", "a"}, {"y2", "a"}, {"ypp", "app"}},
                     {{"v1", "w1"}, {"v2", "w2"}}));
  funs.push_back(
      fun("quop_D", "two", "quop_A", {{"0", "ap"}, {"1", "app"}},
          {{"f01", "w"}}));
  funs.push_back(fun("nonconduche_D", "two", "three", {{"0", "0"}, {"1", "2"}},
                     {{"f01", "f02"}}));
  for (const auto& e : arrow_cats) {
    funs.push_back(e.dom);
    funs.push_back(e.cod);
  }
  funs.push_back(fun("pres_G", "one_plus_one", "pres_Y",
                     {{"p", "u1"}, {"q", "s"}}, {}));
  funs.push_back(fun("pres_H", "one_plus_one", "pres_Y",
                     {{"p", "s"}, {"q", "u1"}}, {}));
  funs.push_back(fun("pres_anchor", "pres_Y", "poset2x2",
                     {{"u0", "bot"}, {"u1", "top"}, {"s", "top"}},
                     {{"e", "bot_top"}}));
  funs.push_back(fun("sp_G", "one", "one_plus_one", {{"*", "p"}}, {}));
  funs.push_back(fun("sp_H", "one", "one_plus_one", {{"*", "q"}}, {}));
  funs.push_back(
      fun("sp_anchor", "one_plus_one", "two", {{"p", "1"}, {"q", "1"}}, {}));

  std::vector<std::string> written;
  for (const auto& raw : cats) {
    const std::string path = (fs::path(dir) / (raw.name + ".json")).string();
    write_file(path, canonical_bytes(category_to_json(raw)));
    written.push_back(path);
  }
  for (const auto& raw : funs) {
    const std::string path = (fs::path(dir) / (raw.name + ".json")).string();
    write_file(path, canonical_bytes(functor_to_json(raw)));
    written.push_back(path);
  }
  return written;
}

}  // namespace fibcat

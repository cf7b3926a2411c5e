#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fibcat/catalog.hpp"
#include "fibcat/colimits.hpp"
#include "fibcat/comonad.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/fib.hpp"
#include "fibcat/io.hpp"

namespace {

using namespace fibcat;
using Clock = std::chrono::steady_clock;

struct GlobalOpts {
  std::string catalog = "data/catalog";
  Limits lim = Limits::from_env();
  int max_len = -1;
  std::string dot_path;
  bool json = true;  // reports are JSON by default; the flag is accepted
  bool timing = false;
  Clock::time_point started = Clock::now();
};

Json params_for(const GlobalOpts& o, const std::vector<std::string>& args,
                bool with_max_len = false) {
  Json p = Json::object();
  p["args"] = args;
  p["size_cap"] = o.lim.stage_arrow_cap;
  if (with_max_len) p["max_len"] = o.max_len;
  return p;
}

int emit(Json report, const GlobalOpts& o, int code) {
  if (o.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - o.started)
                        .count();
    report["timing"] = Json{{"ms", ms}};
  }
  std::cout << canonical_bytes(report);
  return code;
}

void maybe_dot(const GlobalOpts& o, const FinCat& cat) {
  if (!o.dot_path.empty()) write_file(o.dot_path, dot_category(cat));
}

/// Exit codes: 0 = the property holds, 1 = a genuine refutation or
/// undecided saturation, 2 = unusable input or resource cap.
int code_for(Err e) {
  switch (e) {
    case Err::NoLift:
    case Err::NotCloven:
    case Err::NonTermination:
      return 1;
    default:
      return 2;
  }
}

int guard(const std::string& verb, const GlobalOpts& o,
          const std::vector<std::string>& args,
          const std::function<int()>& body) {
  try {
    return body();
  } catch (const CatError& e) {
    Json rep = make_report(verb, params_for(o, args), {});
    rep["error"] =
        Json{{"code", err_name(e.code())}, {"message", e.what()}};
    return emit(std::move(rep), o, code_for(e.code()));
  }
}

Json ids_of(const FinCat& cat) {
  Json j = Json::object();
  j["objects"] = Json::array();
  for (int i = 0; i < cat.object_count(); ++i)
    j["objects"].push_back(cat.object_id(i));
  j["arrows"] = Json::array();
  for (int a = 0; a < cat.non_identity_arrow_count(); ++a)
    j["arrows"].push_back(cat.arrow_id(a));
  return j;
}

Json cat_summary(const FinCat& cat) {
  Json j = Json::object();
  j["name"] = cat.name();
  j["object_count"] = cat.object_count();
  j["arrow_count"] = cat.arrow_count();
  j["non_identity_arrow_count"] = cat.non_identity_arrow_count();
  return j;
}

// --- verb bodies -------------------------------------------------------------

int do_validate(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  const bool functor_file = ws.is_functor_file(arg);
  try {
    Json result;
    if (functor_file) {
      FinFunctor f = ws.functor(arg);
      result["ok"] = true;
      result["kind"] = "functor";
      result["name"] = f.name();
      result["source"] = f.source()->name();
      result["target"] = f.target()->name();
    } else {
      CatPtr c = ws.category(arg);
      result["ok"] = true;
      result["kind"] = "category";
      result.update(cat_summary(*c));
      maybe_dot(o, *c);
    }
    Json rep = make_report("validate", params_for(o, {arg}), ws.inputs());
    rep["result"] = std::move(result);
    return emit(std::move(rep), o, 0);
  } catch (const CatError& e) {
    if (e.code() == Err::Parse || e.code() == Err::UnknownEntry) throw;
    Json result;
    result["ok"] = false;
    result["kind"] = functor_file ? "functor" : "category";
    result["error"] = err_name(e.code());
    result["message"] = e.what();
    Json rep = make_report("validate", params_for(o, {arg}), ws.inputs());
    rep["result"] = std::move(result);
    return emit(std::move(rep), o, 1);
  }
}

int do_comma(const GlobalOpts& o, const std::string& f_arg,
             const std::string& g_arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(f_arg);
  FinFunctor G = ws.functor(g_arg);
  CommaCat cc = comma(F, G, "(" + F.name() + "|" + G.name() + ")", o.lim);
  maybe_dot(o, *cc.carrier);
  Json rep = make_report("comma", params_for(o, {f_arg, g_arg}), ws.inputs());
  Json result = cat_summary(*cc.carrier);
  result["ids"] = ids_of(*cc.carrier);
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, 0);
}

int do_pullback(const GlobalOpts& o, const std::string& f_arg,
                const std::string& g_arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(f_arg);
  FinFunctor G = ws.functor(g_arg);
  PullbackCat pb =
      pullback_cat(F, G, "(" + F.name() + "*" + G.name() + ")", o.lim);
  maybe_dot(o, *pb.carrier);
  Json rep =
      make_report("pullback", params_for(o, {f_arg, g_arg}), ws.inputs());
  Json result = cat_summary(*pb.carrier);
  result["ids"] = ids_of(*pb.carrier);
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, 0);
}

int do_fib_check(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  const FinCat& E = *F.source();
  const FinCat& B = *F.target();
  FibrationCheck fc = is_fibration(F, o.lim);
  StreetCheck sc = is_street_fibration(F, o.lim);
  Json result;
  result["functor"] = F.name();
  result["fibration"] = fc.ok;
  result["pairs_checked"] = fc.pairs_checked;
  result["missing"] = Json::array();
  for (const auto& m : fc.missing)
    result["missing"].push_back(
        {{"object", E.object_id(m.obj)}, {"arrow", B.arrow_id(m.arrow)}});
  result["street"] = Json::object();
  result["street"]["fibration_up_to_iso"] = sc.ok;
  result["street"]["missing"] = Json::array();
  for (const auto& m : sc.missing)
    result["street"]["missing"].push_back(
        {{"object", E.object_id(m.obj)}, {"arrow", B.arrow_id(m.arrow)}});
  Json rep = make_report("fib.check", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, fc.ok ? 0 : 1);
}

int do_fib_cleavage(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  const FinCat& E = *F.source();
  const FinCat& B = *F.target();
  Cleavage cl = extract_cleavage(F);
  SplitCheck spl = is_split(cl);
  Json result;
  result["functor"] = F.name();
  result["normalized"] = spl.normalized;
  result["split"] = spl.split;
  result["lifts"] = Json::array();
  for (int a = 0; a < E.object_count(); ++a)
    for (int f : B.arrows_into(F.on_object(a)))
      result["lifts"].push_back({{"object", E.object_id(a)},
                                 {"arrow", B.arrow_id(f)},
                                 {"lift", E.arrow_id(cl.lift(a, f))},
                                 {"source", E.object_id(cl.lift_src(a, f))}});
  Json rep = make_report("fib.cleavage", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, 0);
}

int do_fib_split_check(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  const FinCat& E = *F.source();
  const FinCat& B = *F.target();
  Cleavage cl = extract_cleavage(F);
  SplitCheck spl = is_split(cl);
  Json result;
  result["functor"] = F.name();
  result["normalized"] = spl.normalized;
  result["split"] = spl.split;
  result["unit_failures"] = Json::array();
  for (const auto& u : spl.unit_failures)
    result["unit_failures"].push_back(E.object_id(u.obj));
  result["comp_failures"] = Json::array();
  for (const auto& c : spl.comp_failures)
    result["comp_failures"].push_back({{"object", E.object_id(c.obj)},
                                       {"f", B.arrow_id(c.f)},
                                       {"g", B.arrow_id(c.g)}});
  Json rep =
      make_report("fib.split-check", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, spl.ok() ? 0 : 1);
}

int do_fib_monad(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  MonadInstance mi = monad_M(F, o.lim);
  Json result;
  result["functor"] = F.name();
  result["stage"] = cat_summary(*mi.bf.carrier);
  result["stage2"] = cat_summary(*mi.bmf.carrier);
  result["counit_components"] = mi.counit_u.component.size();
  result["laws"] = Json{{"eta_over", mi.eta_over_ok},
                        {"mu_over", mi.mu_over_ok},
                        {"unit_law_right", mi.unit_law_right},
                        {"unit_law_left", mi.unit_law_left},
                        {"counit_vertical", mi.counit_vertical},
                        {"triangle_counit", mi.triangle_counit},
                        {"triangle_mu", mi.triangle_mu}};
  result["laws_ok"] = mi.laws_ok();
  Json rep = make_report("fib.monad", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, mi.laws_ok() ? 0 : 1);
}

int do_fib_colax(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  ColaxReport cr = check_colax_idempotent(F, o.lim);
  const bool ok = cr.hom_bijection_ok && (!cr.assoc_checked || cr.assoc_ok) &&
                  cr.inst.laws_ok();
  Json result;
  result["functor"] = F.name();
  result["hom_bijection_ok"] = cr.hom_bijection_ok;
  result["assoc_checked"] = cr.assoc_checked;
  result["assoc_ok"] = cr.assoc_ok;
  result["stage3_arrows"] = cr.stage3_arrows;
  result["monad_laws_ok"] = cr.inst.laws_ok();
  result["ok"] = ok;
  Json rep =
      make_report("fib.colax-check", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, ok ? 0 : 1);
}

int do_fib_alpha(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  Cleavage cl = extract_cleavage(F);
  MonadInstance mi = monad_M(F, o.lim);
  AlphaReport ar = pseudo_algebra_alpha(F, cl, mi);
  Json result;
  result["functor"] = F.name();
  result["over_ok"] = ar.over_ok;
  result["strict_unit"] = ar.strict_unit;
  result["unit_iso_ok"] = ar.unit_iso_ok;
  result["counit_vertical"] = ar.counit_vertical;
  result["counit_cartesian"] = ar.counit_cartesian;
  result["triangle_at_eta"] = ar.triangle_at_eta;
  result["triangle_alpha"] = ar.triangle_alpha;
  result["laws_ok"] = ar.laws_ok();
  Json rep = make_report("fib.alpha", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, ar.laws_ok() ? 0 : 1);
}

Json fiber_sizes(const GFCat& gf) {
  const FinCat& B = *gf.F.target();
  Json fibers = Json::array();
  for (int b = 0; b < B.object_count(); ++b) {
    long n = 0;
    for (const auto& obj : gf.objs)
      if (obj.base == b) ++n;
    fibers.push_back({{"base", B.object_id(b)}, {"objects", n}});
  }
  return fibers;
}

int do_comonad_build(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  GFCat gf = build_GF(F, o.lim);
  maybe_dot(o, *gf.carrier);
  Json result = cat_summary(*gf.carrier);
  result["fibers"] = fiber_sizes(gf);
  result["ids"] = ids_of(*gf.carrier);
  Json rep = make_report("comonad.build", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, 0);
}

int do_comonad_counit(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  GFCat gf = build_GF(F, o.lim);
  FinFunctor eps = gf.counit();
  const FinCat& car = *gf.carrier;
  const FinCat& A = *F.source();
  Json result;
  result["carrier"] = cat_summary(car);
  result["on_objects"] = Json::array();
  for (int i = 0; i < car.object_count(); ++i)
    result["on_objects"].push_back({{"from", car.object_id(i)},
                                    {"to", A.object_id(eps.on_object(i))}});
  Json rep = make_report("comonad.counit", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, 0);
}

int do_comonad_laws(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  ComonadLawsReport r = comonad_laws(F, o.lim);
  Json result;
  result["functor"] = F.name();
  result["carrier"] = Json{{"objects", r.carrier_objects},
                           {"arrows", r.carrier_arrows}};
  result["level2"] = Json{{"objects", r.level2_objects},
                          {"arrows", r.level2_arrows}};
  result["left_counit_ok"] = r.left_counit_ok;
  result["right_counit_ok"] = r.right_counit_ok;
  result["delta_over_ok"] = r.delta_over_ok;
  result["coassoc_checked"] = r.coassoc_checked;
  result["coassoc_ok"] = r.coassoc_ok;
  result["canonical_cartesian"] = r.canonical_cartesian;
  result["canonical_split"] = r.canonical_split;
  result["laws_ok"] = r.laws_ok();
  Json rep = make_report("comonad.laws", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, r.laws_ok() ? 0 : 1);
}

int do_comonad_coalgebra(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  GFCat gf = build_GF(F, o.lim);
  Cleavage cl = extract_cleavage(F);
  CoalgebraReport cr = coalgebra_structure(gf, cl);
  bool unit_all_invertible = true;
  for (char c : cr.unit_invertible)
    if (!c) unit_all_invertible = false;
  Json result;
  result["functor"] = F.name();
  result["over_ok"] = cr.over_ok;
  result["counit_identity"] = cr.counit_identity;
  result["fully_faithful"] = cr.fully_faithful;
  result["hom_bijection_ok"] = cr.hom_bijection_ok;
  result["triangle_counit"] = cr.triangle_counit;
  result["triangle_coalg"] = cr.triangle_coalg;
  result["unit_invertible_everywhere"] = unit_all_invertible;
  result["laws_ok"] = cr.laws_ok();
  Json rep =
      make_report("comonad.coalgebra", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, cr.laws_ok() ? 0 : 1);
}

int do_comonad_split(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  SplitEquivalentResult r = split_equivalent(F, o.lim);
  Json result;
  result["functor"] = F.name();
  result["carrier"] = cat_summary(*r.gf.carrier);
  result["sub"] = cat_summary(*r.sub.carrier);
  result["closed_under_lifts"] = r.closed_under_lifts;
  result["sub_normalized"] = r.sub_split.normalized;
  result["sub_split"] = r.sub_split.split;
  result["unit_iso_ok"] = r.unit_iso_ok;
  result["counit_iso_ok"] = r.counit_iso_ok;
  result["equivalence_ok"] = r.equivalence_ok();
  Json rep = make_report("comonad.split", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, r.equivalence_ok() ? 0 : 1);
}

int do_colim_coeq(const GlobalOpts& o, const std::string& g_arg,
                  const std::string& h_arg) {
  Workspace ws(o.catalog);
  FinFunctor G = ws.functor(g_arg);
  FinFunctor H = ws.functor(h_arg);
  CoeqResult res = coequalizer(G, H, o.max_len, o.lim);
  Json rep = make_report("colim.coeq", params_for(o, {g_arg, h_arg}, true),
                         ws.inputs());
  if (const auto* div = std::get_if<CoeqDiverged>(&res)) {
    Json result;
    result["certified"] = false;
    result["reason"] = err_name(Err::NonTermination);
    result["levels_used"] = div->max_len;
    result["class_trace"] = div->class_trace;
    result["nodes"] = div->nodes;
    rep["result"] = std::move(result);
    return emit(std::move(rep), o, 1);
  }
  const CoeqOk& ok = std::get<CoeqOk>(res);
  maybe_dot(o, *ok.quotient);
  Json result;
  result["certified"] = true;
  result["levels_used"] = ok.levels_used;
  result["max_rep_len"] = ok.max_rep_len;
  result["class_trace"] = ok.class_trace;
  result["nodes"] = ok.nodes;
  result["quotient"] = cat_summary(*ok.quotient);
  result["quotient"]["ids"] = ids_of(*ok.quotient);
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, 0);
}

int do_colim_regepi(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor Q = ws.functor(arg);
  RegEpiReport r = is_regular_epi(Q, o.max_len, o.lim);
  Json result;
  result["functor"] = Q.name();
  result["obj_surjective"] = r.obj_surjective;
  result["arrows_generate"] = r.arrows_generate;
  result["kernel_matches"] = r.kernel_matches;
  result["certified"] = r.certified;
  result["levels_used"] = r.levels_used;
  result["class_trace"] = r.class_trace;
  result["regular_epi"] = r.ok();
  Json rep =
      make_report("colim.regepi", params_for(o, {arg}, true), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, r.ok() ? 0 : 1);
}

int do_colim_conduche(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  FinFunctor F = ws.functor(arg);
  const FinCat& E = *F.source();
  const FinCat& B = *F.target();
  ConducheReport r = conduche_check(F, o.lim);
  Json result;
  result["functor"] = F.name();
  result["ok"] = r.ok;
  result["triples_checked"] = r.triples_checked;
  result["failures"] = Json::array();
  for (const auto& fl : r.failures)
    result["failures"].push_back({{"arrow", E.arrow_id(fl.f)},
                                  {"g1", B.arrow_id(fl.g1)},
                                  {"g2", B.arrow_id(fl.g2)},
                                  {"reason", fl.empty ? "empty" : "disconnected"}});
  Json rep =
      make_report("colim.conduche", params_for(o, {arg}), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, r.ok ? 0 : 1);
}

int do_colim_preserve(const GlobalOpts& o, const std::string& g_arg,
                      const std::string& h_arg, const std::string& anchor_arg,
                      const std::string& d_arg) {
  Workspace ws(o.catalog);
  FinFunctor G = ws.functor(g_arg);
  FinFunctor H = ws.functor(h_arg);
  FinFunctor anchor = ws.functor(anchor_arg);
  FinFunctor D = ws.functor(d_arg);
  PreservationReport r = preservation_experiment(G, H, anchor, D, o.max_len,
                                                 o.lim);
  Json result;
  result["anchor_coequalizes"] = r.anchor_coequalizes;
  result["anchor_factors_ok"] = r.anchor_factors_ok;
  result["down_certified"] = r.down_certified;
  result["up_certified"] = r.up_certified;
  result["computed"] = r.computed;
  result["kappa_well_defined"] = r.kappa_well_defined;
  result["kappa_commutes"] = r.kappa_commutes;
  result["obj_bijective"] = r.obj_bijective;
  result["arr_bijective"] = r.arr_bijective;
  result["downstairs"] = Json{{"objects", r.down_objects},
                              {"arrows", r.down_arrows}};
  result["pulled_back"] = Json{{"objects", r.pulled_objects},
                               {"arrows", r.pulled_arrows}};
  result["upstairs"] = Json{{"objects", r.up_objects},
                            {"arrows", r.up_arrows}};
  result["preserved"] = r.preserved();
  Json rep = make_report(
      "colim.preserve",
      params_for(o, {g_arg, h_arg, anchor_arg, d_arg}, true), ws.inputs());
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, r.preserved() ? 0 : 1);
}

int do_dot(const GlobalOpts& o, const std::string& arg) {
  Workspace ws(o.catalog);
  std::string text;
  if (ws.is_functor_file(arg))
    text = dot_functor(ws.functor(arg));
  else
    text = dot_category(*ws.category(arg));
  if (o.dot_path.empty())
    std::cout << text;
  else
    write_file(o.dot_path, text);
  return 0;
}

int do_catalog(const GlobalOpts& o, const std::string& dir_arg) {
  const std::string dir = dir_arg.empty() ? o.catalog : dir_arg;
  const std::vector<std::string> written = generate_catalog(dir);
  Json result;
  result["directory"] = dir;
  result["count"] = written.size();
  result["files"] = written;
  Json rep = make_report("catalog", params_for(o, {dir}), {});
  rep["result"] = std::move(result);
  return emit(std::move(rep), o, 0);
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts o;
  int workers = 0;
  long size_cap = 0;

  CLI::App app{
      "fibcat: explicit finite categories, fibration checks, comma stages, "
      "splitting carriers, quotients and coequalizers"};
  app.require_subcommand(1);
  app.add_option("--catalog", o.catalog, "catalog directory for bare names")
      ->capture_default_str();
  app.add_option("--workers", workers,
                 "worker threads (results do not depend on this)");
  app.add_option("--size-cap", size_cap, "arrow cap for iterated stages");
  app.add_option("--max-len", o.max_len,
                 "sequence length bound for quotient saturation");
  app.add_option("--dot", o.dot_path, "write a DOT rendering to this path");
  app.add_flag("--json", o.json, "emit the JSON report (default)");
  app.add_flag("--timing", o.timing, "include wall-clock timing in the report");

  std::string a1, a2, a3, a4;

  auto* v_validate = app.add_subcommand("validate", "check a category or functor file");
  v_validate->add_option("input", a1)->required();
  auto* v_comma = app.add_subcommand("comma", "comma category of two functors");
  v_comma->add_option("F", a1)->required();
  v_comma->add_option("G", a2)->required();
  auto* v_pullback = app.add_subcommand("pullback", "fibered product of two functors");
  v_pullback->add_option("F", a1)->required();
  v_pullback->add_option("G", a2)->required();

  auto* v_fib = app.add_subcommand("fib", "fibration analysis");
  v_fib->require_subcommand(1);
  auto* v_fib_check = v_fib->add_subcommand("check", "cartesian lift existence (strict and up to iso)");
  v_fib_check->add_option("F", a1)->required();
  auto* v_fib_cleavage = v_fib->add_subcommand("cleavage", "extract the canonical cleavage");
  v_fib_cleavage->add_option("F", a1)->required();
  auto* v_fib_split = v_fib->add_subcommand("split-check", "is the canonical cleavage split");
  v_fib_split->add_option("F", a1)->required();
  auto* v_fib_monad = v_fib->add_subcommand("monad", "comma stage with unit/multiplication laws");
  v_fib_monad->add_option("F", a1)->required();
  auto* v_fib_colax = v_fib->add_subcommand("colax-check", "adjunction-style analysis one stage up");
  v_fib_colax->add_option("F", a1)->required();
  auto* v_fib_alpha = v_fib->add_subcommand("alpha", "structure map induced by the cleavage");
  v_fib_alpha->add_option("F", a1)->required();

  auto* v_co = app.add_subcommand("comonad", "splitting carrier");
  v_co->require_subcommand(1);
  auto* v_co_build = v_co->add_subcommand("build", "build the splitting carrier");
  v_co_build->add_option("F", a1)->required();
  auto* v_co_counit = v_co->add_subcommand("counit", "evaluation functor back to the source");
  v_co_counit->add_option("F", a1)->required();
  auto* v_co_laws = v_co->add_subcommand("laws", "counit/comultiplication laws");
  v_co_laws->add_option("F", a1)->required();
  auto* v_co_coalg = v_co->add_subcommand("coalgebra", "coalgebra induced by a cleavage");
  v_co_coalg->add_option("F", a1)->required();
  auto* v_co_split = v_co->add_subcommand("split", "split replacement and the equivalence to it");
  v_co_split->add_option("F", a1)->required();

  auto* v_colim = app.add_subcommand("colim", "quotients and coequalizers");
  v_colim->require_subcommand(1);
  auto* v_colim_coeq = v_colim->add_subcommand("coeq", "coequalizer of a parallel pair");
  v_colim_coeq->add_option("G", a1)->required();
  v_colim_coeq->add_option("H", a2)->required();
  auto* v_colim_regepi = v_colim->add_subcommand("regepi", "regular epimorphism test");
  v_colim_regepi->add_option("Q", a1)->required();
  auto* v_colim_conduche = v_colim->add_subcommand("conduche", "factorization lifting test");
  v_colim_conduche->add_option("F", a1)->required();
  auto* v_colim_preserve = v_colim->add_subcommand("preserve", "stability of a coequalizer under change of base");
  v_colim_preserve->add_option("G", a1)->required();
  v_colim_preserve->add_option("H", a2)->required();
  v_colim_preserve->add_option("anchor", a3)->required();
  v_colim_preserve->add_option("D", a4)->required();

  auto* v_dot = app.add_subcommand("dot", "DOT rendering of a category or functor");
  v_dot->add_option("input", a1)->required();
  auto* v_catalog = app.add_subcommand("catalog", "write the bundled example catalog");
  v_catalog->add_option("dir", a2);

  for (CLI::App* sub :
       {v_validate, v_comma, v_pullback, v_fib, v_fib_check, v_fib_cleavage,
        v_fib_split, v_fib_monad, v_fib_colax, v_fib_alpha, v_co, v_co_build,
        v_co_counit, v_co_laws, v_co_coalg, v_co_split, v_colim, v_colim_coeq,
        v_colim_regepi, v_colim_conduche, v_colim_preserve, v_dot, v_catalog})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (workers > 0) o.lim.workers = workers;
  if (size_cap > 0) o.lim.stage_arrow_cap = static_cast<int>(size_cap);

  try {
    if (*v_validate) return guard("validate", o, {a1}, [&] { return do_validate(o, a1); });
    if (*v_comma) return guard("comma", o, {a1, a2}, [&] { return do_comma(o, a1, a2); });
    if (*v_pullback) return guard("pullback", o, {a1, a2}, [&] { return do_pullback(o, a1, a2); });
    if (*v_fib_check) return guard("fib.check", o, {a1}, [&] { return do_fib_check(o, a1); });
    if (*v_fib_cleavage) return guard("fib.cleavage", o, {a1}, [&] { return do_fib_cleavage(o, a1); });
    if (*v_fib_split) return guard("fib.split-check", o, {a1}, [&] { return do_fib_split_check(o, a1); });
    if (*v_fib_monad) return guard("fib.monad", o, {a1}, [&] { return do_fib_monad(o, a1); });
    if (*v_fib_colax) return guard("fib.colax-check", o, {a1}, [&] { return do_fib_colax(o, a1); });
    if (*v_fib_alpha) return guard("fib.alpha", o, {a1}, [&] { return do_fib_alpha(o, a1); });
    if (*v_co_build) return guard("comonad.build", o, {a1}, [&] { return do_comonad_build(o, a1); });
    if (*v_co_counit) return guard("comonad.counit", o, {a1}, [&] { return do_comonad_counit(o, a1); });
    if (*v_co_laws) return guard("comonad.laws", o, {a1}, [&] { return do_comonad_laws(o, a1); });
    if (*v_co_coalg) return guard("comonad.coalgebra", o, {a1}, [&] { return do_comonad_coalgebra(o, a1); });
    if (*v_co_split) return guard("comonad.split", o, {a1}, [&] { return do_comonad_split(o, a1); });
    if (*v_colim_coeq) return guard("colim.coeq", o, {a1, a2}, [&] { return do_colim_coeq(o, a1, a2); });
    if (*v_colim_regepi) return guard("colim.regepi", o, {a1}, [&] { return do_colim_regepi(o, a1); });
    if (*v_colim_conduche) return guard("colim.conduche", o, {a1}, [&] { return do_colim_conduche(o, a1); });
    if (*v_colim_preserve)
      return guard("colim.preserve", o, {a1, a2, a3, a4},
                   [&] { return do_colim_preserve(o, a1, a2, a3, a4); });
    if (*v_dot) return guard("dot", o, {a1}, [&] { return do_dot(o, a1); });
    if (*v_catalog) return guard("catalog", o, {a2}, [&] { return do_catalog(o, a2); });
  } catch (const std::exception& e) {
    Json rep = make_report("error", Json::object(), {});
    rep["error"] = Json{{"code", err_name(Err::UnknownVerb)}, {"message", e.what()}};
    std::cout << canonical_bytes(rep);
    return 2;
  }
  std::cerr << "unknown verb\n";
  return 2;
}

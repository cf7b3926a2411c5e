#include "fibcat/category.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace fibcat {

const char* err_name(Err code) {
  switch (code) {
    case Err::Parse: return "ParseError";
    case Err::MissingComposite: return "MissingComposite";
    case Err::LawViolation: return "LawViolation";
    case Err::DanglingEndpoint: return "DanglingEndpoint";
    case Err::TargetMismatch: return "TargetMismatch";
    case Err::UnknownObject: return "UnknownObject";
    case Err::UnknownArrow: return "UnknownArrow";
    case Err::NoLift: return "NoLift";
    case Err::NotCloven: return "NotCloven";
    case Err::InstanceTooLarge: return "InstanceTooLarge";
    case Err::ParallelismMismatch: return "ParallelismMismatch";
    case Err::NonTermination: return "NonTermination";
    case Err::UnknownVerb: return "UnknownVerb";
    case Err::UnknownEntry: return "UnknownEntry";
  }
  return "UnknownError";
}

void fail(Err code, const std::string& what) {
  throw CatError(code, std::string(err_name(code)) + ": " + what);
}

Limits Limits::from_env() {
  Limits l;
  if (const char* cap = std::getenv("FIBCAT_SIZE_CAP")) {
    int v = std::atoi(cap);
    if (v > 0) l.stage_arrow_cap = v;
  }
  if (const char* w = std::getenv("FIBCAT_WORKERS")) {
    int v = std::atoi(w);
    if (v > 0) l.workers = v;
  }
  return l;
}

std::string identity_id(std::string_view obj) {
  return "id:" + std::string(obj);
}

bool interchange_id_ok(std::string_view id) {
  if (id.empty()) return false;
  if (id.find('|') != std::string_view::npos) return false;
  if (id.find(".o.") != std::string_view::npos) return false;
  if (id.size() >= 3 && id.substr(0, 3) == "id:") return false;
  return true;
}

int FinCat::compose(int g, int f) const {
  if (src_[g] != dst_[f])
    fail(Err::LawViolation, "compose(" + arrow_ids_[g] + ", " + arrow_ids_[f] +
                                ") on a non-composable pair");
  return table_[static_cast<size_t>(g) * arrow_ids_.size() + f];
}

int FinCat::compose_list(const std::vector<int>& diagram_order) const {
  if (diagram_order.empty())
    fail(Err::LawViolation, "compose_list of an empty list");
  int acc = diagram_order[0];
  for (size_t i = 1; i < diagram_order.size(); ++i)
    acc = compose(diagram_order[i], acc);
  return acc;
}

int FinCat::object_index(std::string_view id) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects_[i] == id) return i;
  return kNone;
}

int FinCat::arrow_index(std::string_view id) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrow_ids_[i] == id) return i;
  return kNone;
}

int FinCat::require_object(std::string_view id) const {
  int i = object_index(id);
  if (i == kNone)
    fail(Err::UnknownObject, "no object '" + std::string(id) + "' in " + name_);
  return i;
}

int FinCat::require_arrow(std::string_view id) const {
  int i = arrow_index(id);
  if (i == kNone)
    fail(Err::UnknownArrow, "no arrow '" + std::string(id) + "' in " + name_);
  return i;
}

std::vector<int> FinCat::hom(int x, int y) const {
  std::vector<int> out;
  for (int a : from_[x])
    if (dst_[a] == y) out.push_back(a);
  return out;
}

std::vector<std::pair<int, int>> FinCat::iso_pairs(int x, int y) const {
  std::vector<std::pair<int, int>> out;
  for (int f : hom(x, y))
    for (int g : hom(y, x))
      if (compose(g, f) == identity_[x] && compose(f, g) == identity_[y])
        out.emplace_back(f, g);
  return out;
}

bool FinCat::is_iso(int a) const {
  for (int g : hom(dst_[a], src_[a]))
    if (compose(g, a) == identity_[src_[a]] && compose(a, g) == identity_[dst_[a]])
      return true;
  return false;
}

bool FinCat::same_structure(const FinCat& other) const {
  return objects_ == other.objects_ && arrow_ids_ == other.arrow_ids_ &&
         src_ == other.src_ && dst_ == other.dst_ && table_ == other.table_;
}

RawCategory FinCat::to_raw() const {
  RawCategory raw;
  raw.name = name_;
  raw.objects = objects_;
  for (int a = 0; a < arrow_count(); ++a)
    if (!is_identity(a))
      raw.arrows.push_back({arrow_ids_[a], objects_[src_[a]], objects_[dst_[a]]});
  for (int f = 0; f < arrow_count(); ++f) {
    if (is_identity(f)) continue;
    for (int g = 0; g < arrow_count(); ++g) {
      if (is_identity(g) || src_[g] != dst_[f]) continue;
      raw.compose.push_back({arrow_ids_[g], arrow_ids_[f],
                             arrow_ids_[try_compose(g, f)]});
    }
  }
  // canonical entry order: by g then f
  std::sort(raw.compose.begin(), raw.compose.end(),
            [&](const auto& lhs, const auto& rhs) {
              int lg = arrow_index(lhs[0]), rg = arrow_index(rhs[0]);
              if (lg != rg) return lg < rg;
              return arrow_index(lhs[1]) < arrow_index(rhs[1]);
            });
  return raw;
}

FinCat validate_category(const RawCategory& raw) {
  FinCat cat;
  cat.name_ = raw.name;

  std::unordered_map<std::string, int> obj_index;
  for (const auto& o : raw.objects) {
    if (o.empty()) fail(Err::Parse, "empty object id in " + raw.name);
    if (!obj_index.emplace(o, static_cast<int>(cat.objects_.size())).second)
      fail(Err::Parse, "duplicate object id '" + o + "' in " + raw.name);
    cat.objects_.push_back(o);
  }

  std::unordered_map<std::string, int> arr_index;
  auto add_arrow = [&](const std::string& id, int s, int d) {
    if (!arr_index.emplace(id, static_cast<int>(cat.arrow_ids_.size())).second)
      fail(Err::Parse, "duplicate arrow id '" + id + "' in " + raw.name);
    cat.arrow_ids_.push_back(id);
    cat.src_.push_back(s);
    cat.dst_.push_back(d);
  };

  for (const auto& a : raw.arrows) {
    if (a.id.empty()) fail(Err::Parse, "empty arrow id in " + raw.name);
    auto s = obj_index.find(a.src);
    auto d = obj_index.find(a.dst);
    if (s == obj_index.end() || d == obj_index.end())
      fail(Err::DanglingEndpoint, "arrow '" + a.id + "' in " + raw.name +
                                      " references an unknown object");
    add_arrow(a.id, s->second, d->second);
  }
  for (int o = 0; o < cat.object_count(); ++o) {
    cat.identity_.push_back(static_cast<int>(cat.arrow_ids_.size()));
    add_arrow(identity_id(cat.objects_[o]), o, o);
  }

  const int n = cat.arrow_count();
  cat.table_.assign(static_cast<size_t>(n) * n, FinCat::kNone);
  auto slot = [&](int g, int f) -> int32_t& {
    return cat.table_[static_cast<size_t>(g) * n + f];
  };
  for (int a = 0; a < n; ++a) {
    slot(a, cat.identity_[cat.src_[a]]) = a;
    slot(cat.identity_[cat.dst_[a]], a) = a;
  }

  for (const auto& entry : raw.compose) {
    auto g = arr_index.find(entry[0]);
    auto f = arr_index.find(entry[1]);
    auto gf = arr_index.find(entry[2]);
    if (g == arr_index.end() || f == arr_index.end() || gf == arr_index.end())
      fail(Err::DanglingEndpoint, "compose entry (" + entry[0] + ", " + entry[1] +
                                      ", " + entry[2] + ") in " + raw.name +
                                      " references an unknown arrow");
    int gi = g->second, fi = f->second, ci = gf->second;
    if (cat.src_[gi] != cat.dst_[fi])
      fail(Err::LawViolation, "compose entry for non-composable pair (" +
                                  entry[0] + ", " + entry[1] + ") in " + raw.name);
    if (cat.src_[ci] != cat.src_[fi] || cat.dst_[ci] != cat.dst_[gi])
      fail(Err::LawViolation, "composite '" + entry[2] +
                                  "' has wrong endpoints for (" + entry[0] +
                                  ", " + entry[1] + ") in " + raw.name);
    int32_t& cell = slot(gi, fi);
    if (cell != FinCat::kNone && cell != ci)
      fail(Err::LawViolation, "conflicting compose entries for (" + entry[0] +
                                  ", " + entry[1] + ") in " + raw.name);
    cell = ci;
  }

  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g)
      if (cat.src_[g] == cat.dst_[f] && slot(g, f) == FinCat::kNone)
        fail(Err::MissingComposite, "no compose entry for (" + cat.arrow_ids_[g] +
                                        ", " + cat.arrow_ids_[f] + ") in " +
                                        raw.name);

  cat.into_.resize(cat.object_count());
  cat.from_.resize(cat.object_count());
  for (int a = 0; a < n; ++a) {
    cat.into_[cat.dst_[a]].push_back(a);
    cat.from_[cat.src_[a]].push_back(a);
  }

  // associativity over composable triples
  for (int f = 0; f < n; ++f)
    for (int g : cat.from_[cat.dst_[f]]) {
      int gf = slot(g, f);
      for (int h : cat.from_[cat.dst_[g]])
        if (slot(h, gf) != slot(slot(h, g), f))
          fail(Err::LawViolation, "associativity fails at (" + cat.arrow_ids_[h] +
                                      ", " + cat.arrow_ids_[g] + ", " +
                                      cat.arrow_ids_[f] + ") in " + raw.name);
    }

  return cat;
}

CatPtr make_cat(const RawCategory& raw) {
  return std::make_shared<const FinCat>(validate_category(raw));
}

CatPtr make_cat(FinCat cat) {
  return std::make_shared<const FinCat>(std::move(cat));
}

}  // namespace fibcat

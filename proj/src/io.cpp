#include "fibcat/io.hpp"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fibcat {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::UnknownEntry, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  if (const fs::path dir = fs::path(path).parent_path(); !dir.empty())
    fs::create_directories(dir);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Err::UnknownEntry, "cannot write " + path);
  out << bytes;
}

bool file_exists(const std::string& path) {
  std::error_code ec;
  return fs::is_regular_file(path, ec);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    fail(Err::Parse, "sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

std::string canonical_bytes(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& bytes, const std::string& what) {
  Json j = Json::parse(bytes, nullptr, false);
  if (j.is_discarded()) fail(Err::Parse, what + ": malformed JSON");
  return j;
}

namespace {

std::string need_string(const Json& j, const std::string& key,
                        const std::string& what) {
  if (!j.contains(key) || !j[key].is_string())
    fail(Err::Parse, what + ": missing string field \"" + key + "\"");
  return j[key].get<std::string>();
}

void check_declared_id(const std::string& id, const std::string& what) {
  if (!interchange_id_ok(id))
    fail(Err::Parse, what + ": id \"" + id +
                         "\" is reserved (ids must be nonempty, contain no "
                         "'|' and no '.o.', and must not start with 'id:')");
}

}  // namespace

RawCategory category_from_json(const Json& j, const std::string& fallback_name) {
  if (!j.is_object()) fail(Err::Parse, "category document must be an object");
  RawCategory raw;
  raw.name = j.contains("name") ? need_string(j, "name", "category")
                                : fallback_name;
  if (!j.contains("objects") || !j["objects"].is_array())
    fail(Err::Parse, raw.name + ": missing \"objects\" array");
  for (const auto& o : j["objects"]) {
    if (!o.is_string()) fail(Err::Parse, raw.name + ": objects must be strings");
    check_declared_id(o.get<std::string>(), raw.name);
    raw.objects.push_back(o.get<std::string>());
  }
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array())
      fail(Err::Parse, raw.name + ": \"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      RawArrow arrow{need_string(a, "id", raw.name),
                     need_string(a, "src", raw.name),
                     need_string(a, "dst", raw.name)};
      check_declared_id(arrow.id, raw.name);
      raw.arrows.push_back(std::move(arrow));
    }
  }
  if (j.contains("compose")) {
    if (!j["compose"].is_array())
      fail(Err::Parse, raw.name + ": \"compose\" must be an array");
    for (const auto& c : j["compose"]) {
      if (!c.is_array() || c.size() != 3 || !c[0].is_string() ||
          !c[1].is_string() || !c[2].is_string())
        fail(Err::Parse,
             raw.name + ": compose entries must be triples [g, f, g.f]");
      raw.compose.push_back({c[0].get<std::string>(), c[1].get<std::string>(),
                             c[2].get<std::string>()});
    }
  }
  return raw;
}

Json category_to_json(const RawCategory& raw) {
  Json j = Json::object();
  j["name"] = raw.name;
  j["objects"] = raw.objects;
  j["arrows"] = Json::array();
  for (const auto& a : raw.arrows)
    j["arrows"].push_back({{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
  j["compose"] = Json::array();
  for (const auto& c : raw.compose)
    j["compose"].push_back(Json::array({c[0], c[1], c[2]}));
  return j;
}

bool json_is_functor(const Json& j) {
  return j.is_object() && j.contains("source_file");
}

RawFunctor functor_from_json(const Json& j, const std::string& fallback_name) {
  if (!j.is_object()) fail(Err::Parse, "functor document must be an object");
  RawFunctor raw;
  raw.name = j.contains("name") ? need_string(j, "name", "functor")
                                : fallback_name;
  raw.source_file = need_string(j, "source_file", raw.name);
  raw.target_file = need_string(j, "target_file", raw.name);
  if (!j.contains("on_objects") || !j["on_objects"].is_object())
    fail(Err::Parse, raw.name + ": missing \"on_objects\" map");
  for (const auto& [key, value] : j["on_objects"].items()) {
    if (!value.is_string())
      fail(Err::Parse, raw.name + ": object images must be strings");
    raw.on_objects.push_back({key, value.get<std::string>()});
  }
  if (j.contains("on_arrows")) {
    if (!j["on_arrows"].is_object())
      fail(Err::Parse, raw.name + ": \"on_arrows\" must be a map");
    for (const auto& [key, value] : j["on_arrows"].items()) {
      if (!value.is_string())
        fail(Err::Parse, raw.name + ": arrow images must be strings");
      raw.on_arrows.push_back({key, value.get<std::string>()});
    }
  }
  return raw;
}

Json functor_to_json(const RawFunctor& raw) {
  Json j = Json::object();
  j["name"] = raw.name;
  j["source_file"] = raw.source_file;
  j["target_file"] = raw.target_file;
  j["on_objects"] = Json::object();
  for (const auto& [from, to] : raw.on_objects) j["on_objects"][from] = to;
  j["on_arrows"] = Json::object();
  for (const auto& [from, to] : raw.on_arrows) j["on_arrows"][from] = to;
  return j;
}

// --- workspace ---------------------------------------------------------------

Workspace::Workspace(std::string catalog_dir)
    : catalog_dir_(std::move(catalog_dir)) {}

std::string Workspace::resolve(const std::string& arg) const {
  if (file_exists(arg)) return arg;
  const std::string in_catalog =
      (fs::path(catalog_dir_) / (arg + ".json")).string();
  if (file_exists(in_catalog)) return in_catalog;
  fail(Err::UnknownEntry, "no file \"" + arg + "\" and no catalog entry \"" +
                              in_catalog + "\"");
}

Json Workspace::load_json(const std::string& path) {
  const std::string bytes = read_file(path);
  inputs_.push_back({path, sha256_hex(bytes)});
  return parse_json(bytes, path);
}

CatPtr Workspace::category_at(const std::string& path) {
  const std::string key = fs::weakly_canonical(path).string();
  if (auto it = cats_.find(key); it != cats_.end()) return it->second;
  const Json j = load_json(path);
  if (json_is_functor(j))
    fail(Err::Parse, path + ": expected a category, found a functor");
  CatPtr cat = make_cat(category_from_json(j, fs::path(path).stem().string()));
  cats_.emplace(key, cat);
  return cat;
}

CatPtr Workspace::category(const std::string& arg) {
  return category_at(resolve(arg));
}

bool Workspace::is_functor_file(const std::string& arg) {
  const std::string path = resolve(arg);
  return json_is_functor(parse_json(read_file(path), path));
}

FinFunctor Workspace::functor(const std::string& arg) {
  const std::string path = resolve(arg);
  const Json j = load_json(path);
  if (!json_is_functor(j))
    fail(Err::Parse, path + ": expected a functor, found a category");
  RawFunctor raw = functor_from_json(j, fs::path(path).stem().string());

  auto endpoint = [&](const std::string& ref) -> CatPtr {
    const std::string beside = (fs::path(path).parent_path() / ref).string();
    if (file_exists(beside)) return category_at(beside);
    if (file_exists(ref)) return category_at(ref);
    const std::string in_catalog = (fs::path(catalog_dir_) / ref).string();
    if (file_exists(in_catalog)) return category_at(in_catalog);
    fail(Err::UnknownEntry, path + ": cannot find referenced file " + ref);
  };
  CatPtr source = endpoint(raw.source_file);
  CatPtr target = endpoint(raw.target_file);
  return validate_functor(raw, source, target);
}

// --- graphviz ----------------------------------------------------------------

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void dot_nodes_edges(std::string& out, const FinCat& cat,
                     const std::string& prefix, const std::string& indent) {
  for (int o = 0; o < cat.object_count(); ++o)
    out += indent + "\"" + prefix + dot_escape(cat.object_id(o)) + "\";\n";
  for (int a = 0; a < cat.non_identity_arrow_count(); ++a)
    out += indent + "\"" + prefix + dot_escape(cat.object_id(cat.src(a))) +
           "\" -> \"" + prefix + dot_escape(cat.object_id(cat.dst(a))) +
           "\" [label=\"" + dot_escape(cat.arrow_id(a)) + "\"];\n";
}

}  // namespace

std::string dot_category(const FinCat& cat) {
  std::string out = "digraph \"" + dot_escape(cat.name()) + "\" {\n";
  out += "  rankdir=LR;\n";
  dot_nodes_edges(out, cat, "", "  ");
  out += "}\n";
  return out;
}

std::string dot_functor(const FinFunctor& F) {
  const FinCat& A = *F.source();
  const FinCat& B = *F.target();
  std::string out = "digraph \"" + dot_escape(F.name()) + "\" {\n";
  out += "  rankdir=LR;\n";
  out += "  subgraph cluster_source {\n    label=\"" + dot_escape(A.name()) +
         "\";\n";
  dot_nodes_edges(out, A, "s:", "    ");
  out += "  }\n";
  out += "  subgraph cluster_target {\n    label=\"" + dot_escape(B.name()) +
         "\";\n";
  dot_nodes_edges(out, B, "t:", "    ");
  out += "  }\n";
  for (int o = 0; o < A.object_count(); ++o)
    out += "  \"s:" + dot_escape(A.object_id(o)) + "\" -> \"t:" +
           dot_escape(B.object_id(F.on_object(o))) +
           "\" [style=dashed, color=gray];\n";
  out += "}\n";
  return out;
}

// --- reports -----------------------------------------------------------------

Json make_report(const std::string& verb, Json params,
                 const std::vector<std::pair<std::string, std::string>>& inputs) {
  Json j = Json::object();
  j["schema"] = kReportSchema;
  j["verb"] = verb;
  j["params"] = std::move(params);
  j["inputs"] = Json::array();
  for (const auto& [path, digest] : inputs)
    j["inputs"].push_back({{"path", path}, {"sha256", digest}});
  return j;
}

}  // namespace fibcat

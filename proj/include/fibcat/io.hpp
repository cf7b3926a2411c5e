#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/functor.hpp"
#include "json.hpp"

namespace fibcat {

/// Insertion-ordered JSON: serialization order is fully determined by the
/// code that builds a document, which keeps emitted reports byte-stable.
using Json = nlohmann::ordered_json;

// --- files -----------------------------------------------------------------

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);
bool file_exists(const std::string& path);

/// Hex SHA-256 of the given bytes.
std::string sha256_hex(const std::string& bytes);

/// Canonical serialization: two-space indent plus a trailing newline.
std::string canonical_bytes(const Json& j);

// --- interchange format ------------------------------------------------------
//
// Category files:
//   { "name": "...",                      (optional; defaults to file stem)
//     "objects": ["x", ...],
//     "arrows": [{"id": "f", "src": "x", "dst": "y"}, ...],
//     "compose": [["g", "f", "gf"], ...] }   (entries are [g, f, g.f])
// Identity arrows are implicit; "compose" may mention them. Declared ids must
// be nonempty and must not contain "|", contain ".o." or start with "id:"
// (those forms are reserved for items synthesized by constructions).
//
// Functor files:
//   { "name": "...", "source_file": "two.json", "target_file": "three.json",
//     "on_objects": {"x": "Fx", ...}, "on_arrows": {"f": "Ff", ...} }
// Identities are mapped automatically and must not be listed.

RawCategory category_from_json(const Json& j, const std::string& fallback_name);
Json category_to_json(const RawCategory& raw);

RawFunctor functor_from_json(const Json& j, const std::string& fallback_name);
Json functor_to_json(const RawFunctor& raw);

/// True when the JSON document declares a functor (has "source_file").
bool json_is_functor(const Json& j);

/// Parses a JSON document, mapping parse failures to the library's error type.
Json parse_json(const std::string& bytes, const std::string& what);

// --- workspace ---------------------------------------------------------------

/// Resolves command-line arguments to files and caches loaded categories so a
/// functor pair shares its endpoint carriers. An argument is first tried as a
/// literal path, then as "<catalog>/<arg>.json". Every file read is recorded
/// with its digest, in load order, for inclusion in reports.
class Workspace {
 public:
  explicit Workspace(std::string catalog_dir);

  std::string resolve(const std::string& arg) const;

  CatPtr category(const std::string& arg);
  FinFunctor functor(const std::string& arg);
  /// Loads either kind; exactly one of the outputs is filled.
  bool is_functor_file(const std::string& arg);

  const std::vector<std::pair<std::string, std::string>>& inputs() const {
    return inputs_;
  }
  const std::string& catalog_dir() const { return catalog_dir_; }

 private:
  Json load_json(const std::string& path);
  CatPtr category_at(const std::string& path);

  std::string catalog_dir_;
  std::map<std::string, CatPtr> cats_;
  std::vector<std::pair<std::string, std::string>> inputs_;
};

// --- graphviz ----------------------------------------------------------------

/// DOT rendering of a category: objects as nodes, non-identity arrows as
/// labeled edges.
std::string dot_category(const FinCat& cat);
/// DOT rendering of a functor: source and target as clusters, the object map
/// as dashed cross-edges.
std::string dot_functor(const FinFunctor& F);

// --- reports -----------------------------------------------------------------

inline constexpr const char* kReportSchema = "fibcat-report/1";

/// Report skeleton shared by every verb: schema, verb, parameters, inputs.
Json make_report(const std::string& verb, Json params,
                 const std::vector<std::pair<std::string, std::string>>& inputs);

}  // namespace fibcat

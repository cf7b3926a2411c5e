#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibcat {

enum class Err {
  Parse,
  MissingComposite,
  LawViolation,
  DanglingEndpoint,
  TargetMismatch,
  UnknownObject,
  UnknownArrow,
  NoLift,
  NotCloven,
  InstanceTooLarge,
  ParallelismMismatch,
  NonTermination,
  UnknownVerb,
  UnknownEntry,
};

const char* err_name(Err code);

class CatError : public std::runtime_error {
 public:
  CatError(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& what);

/// Size caps and evaluation knobs shared by all operations.
struct Limits {
  int workers = 1;
  int stage_arrow_cap = 200;      // per carrier of an iterated comma stage
  int gf_base_objects_cap = 6;    // base object count for the splitting carrier
  int gf_slice_arrows_cap = 20;   // arrows per slice used in that carrier
  long gf_carrier_arrow_cap = 1000;
  long construction_arrow_cap = 100000;
  long coeq_node_budget = 200000;  // interned composable lists during saturation
  /// Reads FIBCAT_SIZE_CAP and FIBCAT_WORKERS when set.
  static Limits from_env();
};

struct RawArrow {
  std::string id, src, dst;
};

/// Interchange-level category description. Identities are implicit and get
/// synthesized with reserved ids `id:<object>`.
struct RawCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<RawArrow> arrows;                     // non-identity arrows
  std::vector<std::array<std::string, 3>> compose;  // {g, f, g after f}
};

std::string identity_id(std::string_view obj);

/// Interchange files may only use ids that are non-empty, contain neither '|'
/// nor '.o.', and do not start with 'id:'; those forms are reserved for
/// synthesized identities and constructed categories.
bool interchange_id_ok(std::string_view id);

/// Immutable finite category with a total composition table.
///
/// Canonical order: objects in declaration order; arrows are the declared
/// non-identity arrows in declaration order followed by one identity per
/// object in object order. Every tie-break in the library ("first arrow
/// such that ...") refers to this order.
class FinCat {
 public:
  static constexpr int kNone = -1;

  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrow_ids_.size()); }
  const std::string& object_id(int o) const { return objects_[o]; }
  const std::string& arrow_id(int a) const { return arrow_ids_[a]; }
  int src(int a) const { return src_[a]; }
  int dst(int a) const { return dst_[a]; }
  int identity(int obj) const { return identity_[obj]; }
  bool is_identity(int a) const { return a >= non_identity_arrow_count(); }
  int non_identity_arrow_count() const {
    return arrow_count() - object_count();
  }

  /// Composite of g after f; requires src(g) == dst(f).
  int compose(int g, int f) const;
  /// Composite of g after f, or kNone when the pair is not composable.
  int try_compose(int g, int f) const {
    if (src_[g] != dst_[f]) return kNone;
    return table_[static_cast<size_t>(g) * arrow_ids_.size() + f];
  }
  /// Composite of a nonempty path listed in diagram order: {f1, ..., fn}
  /// yields fn after ... after f1.
  int compose_list(const std::vector<int>& diagram_order) const;

  int object_index(std::string_view id) const;  // kNone if absent
  int arrow_index(std::string_view id) const;   // kNone if absent
  int require_object(std::string_view id) const;
  int require_arrow(std::string_view id) const;

  /// All arrows with the given codomain, in canonical order.
  const std::vector<int>& arrows_into(int obj) const { return into_[obj]; }
  /// All arrows with the given domain, in canonical order.
  const std::vector<int>& arrows_from(int obj) const { return from_[obj]; }
  std::vector<int> hom(int x, int y) const;
  /// All (f: x -> y, g: y -> x) with g f = id and f g = id.
  std::vector<std::pair<int, int>> iso_pairs(int x, int y) const;
  bool is_iso(int a) const;

  /// Identical object/arrow ids, endpoints, and composition table
  /// (names excluded).
  bool same_structure(const FinCat& other) const;

  RawCategory to_raw() const;

  friend FinCat validate_category(const RawCategory& raw);

 private:
  FinCat() = default;

  std::string name_;
  std::vector<std::string> objects_, arrow_ids_;
  std::vector<int> src_, dst_, identity_;
  std::vector<int32_t> table_;  // flat n*n, kNone when not composable
  std::vector<std::vector<int>> into_, from_;
};

using CatPtr = std::shared_ptr<const FinCat>;

/// Checks ids, endpoints, totality of composition, identity laws, and
/// associativity; throws CatError on the first violation found.
FinCat validate_category(const RawCategory& raw);
CatPtr make_cat(const RawCategory& raw);
CatPtr make_cat(FinCat cat);

}  // namespace fibcat

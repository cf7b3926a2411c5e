#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fibcat/category.hpp"

namespace fibcat {

/// Interchange-level functor description: total maps on declared objects and
/// declared non-identity arrows (identities are mapped automatically).
struct RawFunctor {
  std::string name;
  std::string source_file, target_file;  // optional file origins for reports
  std::vector<std::pair<std::string, std::string>> on_objects;
  std::vector<std::pair<std::string, std::string>> on_arrows;
};

/// Functor between finite categories; stores total index maps and is only
/// constructible through validation, so every held value satisfies the
/// functor laws.
class FinFunctor {
 public:
  FinFunctor(std::string name, CatPtr source, CatPtr target,
             std::vector<int> obj_map, std::vector<int> arr_map);

  const std::string& name() const { return name_; }
  const CatPtr& source() const { return source_; }
  const CatPtr& target() const { return target_; }
  int on_object(int o) const { return obj_map_[o]; }
  int on_arrow(int a) const { return arr_map_[a]; }
  const std::vector<int>& object_map() const { return obj_map_; }
  const std::vector<int>& arrow_map() const { return arr_map_; }

 private:
  std::string name_;
  CatPtr source_, target_;
  std::vector<int> obj_map_, arr_map_;
};

/// Same carriers (by structure) and identical object/arrow maps.
bool functor_equal(const FinFunctor& f, const FinFunctor& g);

FinFunctor validate_functor(const RawFunctor& raw, CatPtr source, CatPtr target);
FinFunctor identity_functor(CatPtr cat);
/// g after f; requires the carrier of g's source to equal f's target.
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f,
                            const std::string& name = "");

/// Natural transformation between parallel functors; components are indexed
/// by source objects. Construct through make_nat_trans, which verifies every
/// naturality square. Owns copies of both functors.
struct NatTrans {
  std::string name;
  FinFunctor from, to;
  std::vector<int> component;  // target arrow per source object
};

NatTrans make_nat_trans(std::string name, const FinFunctor& from,
                        const FinFunctor& to, std::vector<int> component);

/// Every component is an identity arrow.
bool nat_trans_is_identity(const NatTrans& t);
/// Every component maps to an identity under the given functor out of the
/// common target.
bool nat_trans_vertical(const NatTrans& t, const FinFunctor& down);
/// Componentwise inverse when every component is invertible.
std::optional<NatTrans> nat_trans_inverse(const NatTrans& t);

/// Optional side condition for functor enumeration: only keep X with
/// after(X) equal to expect (that is, Q . X = P for given Q, P).
struct OverConstraint {
  const FinFunctor* after = nullptr;   // Q : target -> base
  const FinFunctor* expect = nullptr;  // P : source -> base
};

/// All functors source -> target in canonical order (objects assigned in
/// object order, arrows in arrow order, both scanning candidate images in
/// canonical target order). Optionally restricted by an OverConstraint.
std::vector<FinFunctor> enumerate_functors(
    CatPtr source, CatPtr target, const OverConstraint* over = nullptr,
    long cap = -1);

/// All natural transformations from -> to in canonical order; optionally only
/// those vertical with respect to `down`.
std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& from,
                                          const FinFunctor& to,
                                          const FinFunctor* down = nullptr);

}  // namespace fibcat

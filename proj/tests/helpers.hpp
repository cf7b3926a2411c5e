#pragma once

// Shared fixtures: catalog access plus terse builders for ad-hoc categories.

#include <array>
#include <string>
#include <vector>

#include "fibcat/category.hpp"
#include "fibcat/functor.hpp"
#include "fibcat/io.hpp"

#ifndef FIBCAT_CATALOG_DIR
#error "FIBCAT_CATALOG_DIR must point at the bundled example files"
#endif

namespace helpers {

inline const char* catalog_dir() { return FIBCAT_CATALOG_DIR; }

inline fibcat::Workspace& ws() {
  static fibcat::Workspace w{catalog_dir()};
  return w;
}

// Loaded through the shared workspace: carriers are cached there, so the
// categories referenced by returned values stay alive for the whole run.
inline fibcat::CatPtr cat(const std::string& entry) {
  return ws().category(entry);
}

inline fibcat::FinFunctor fun(const std::string& entry) {
  return ws().functor(entry);
}

struct ArrowSpec {
  std::string id, src, dst;
};

/// Builds and validates a category from terse literals.
inline fibcat::CatPtr mk(
    const std::string& name, std::vector<std::string> objects,
    std::vector<ArrowSpec> arrows,
    std::vector<std::array<std::string, 3>> compose = {}) {
  fibcat::RawCategory raw;
  raw.name = name;
  raw.objects = std::move(objects);
  for (auto& a : arrows) raw.arrows.push_back({a.id, a.src, a.dst});
  raw.compose = std::move(compose);
  return fibcat::make_cat(raw);
}

/// Builds and validates a functor from terse literals; identities implied.
inline fibcat::FinFunctor mkf(
    const std::string& name, fibcat::CatPtr source, fibcat::CatPtr target,
    std::vector<std::pair<std::string, std::string>> on_objects,
    std::vector<std::pair<std::string, std::string>> on_arrows = {}) {
  fibcat::RawFunctor raw;
  raw.name = name;
  raw.on_objects = std::move(on_objects);
  raw.on_arrows = std::move(on_arrows);
  return fibcat::validate_functor(raw, std::move(source), std::move(target));
}

}  // namespace helpers

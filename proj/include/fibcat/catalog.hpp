#pragma once

#include <string>
#include <vector>

namespace fibcat {

/// Writes the bundled example catalog (categories and functors) into the
/// given directory, creating it if needed. Output is deterministic: running
/// twice produces byte-identical files. Returns the paths written, in order.
std::vector<std::string> generate_catalog(const std::string& dir);

}  // namespace fibcat

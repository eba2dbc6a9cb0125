#pragma once

// Seeded property suites behind `skewdual verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "skewdual/framework.hpp"

namespace skewdual {

struct SuiteReport {
  std::string name;
  CheckReport report;
};

const std::vector<std::string>& suite_names();
/// `samples` scales every random-sample loop, in percent of its default count.
/// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, unsigned samples = 100);

}  // namespace skewdual

#pragma once

#include <string>
#include <vector>

#include "vres/io.hpp"

namespace vres {

const std::vector<std::string>& exampleNames();
// Runs a scripted scenario; throws InputError for unknown names.
json runExample(const std::string& name);

std::string goldenPath(const std::string& name);

struct GoldenDiff {
    bool same = false;
    std::string diff;  // unified diff when different
};
GoldenDiff compareGolden(const std::string& name, const std::string& actual);

}  // namespace vres

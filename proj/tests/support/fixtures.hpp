#pragma once

#include "hyperplay/core/problem.hpp"

#include <filesystem>
#include <string>

namespace hyperplay::testing {

std::filesystem::path fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);
hyper_problem load_fixture(const std::string& name);

} // namespace hyperplay::testing

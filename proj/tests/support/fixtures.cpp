#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hyperplay::testing {

std::filesystem::path fixture_path(const std::string& name)
{
    return std::filesystem::path(HYPERPLAY_FIXTURE_DIR) / name;
}

std::string read_fixture(const std::string& name)
{
    std::ifstream in(fixture_path(name));
    if (!in)
        throw std::runtime_error("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hyper_problem load_fixture(const std::string& name)
{
    return parse_problem_text(read_fixture(name));
}

} // namespace hyperplay::testing

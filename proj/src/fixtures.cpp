#include "slodowy/fixtures.hpp"

#include "slodowy/errors.hpp"

#include <cstdlib>
#include <fstream>

namespace slodowy {

std::string fixture_dir(const std::string& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (const char* env = std::getenv("SLODOWY_FIXTURES"); env && *env) return env;
  return SLODOWY_DEFAULT_FIXTURES;
}

nlohmann::json load_fixture(const std::string& file, const std::string& override_dir) {
  const std::string path = fixture_dir(override_dir) + "/" + file;
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fixture " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError("malformed fixture " + path + ": " + ex.what());
  }
}

Mat mat_from_entries(int n, const nlohmann::json& entries) {
  Mat m(n);
  for (const auto& e : entries) {
    const int i = e.at(0).get<int>(), j = e.at(1).get<int>();
    if (i < 1 || i > n || j < 1 || j > n) throw InputError("matrix entry out of range");
    m.set(i, j, parse_rat(e.at(2).get<std::string>()));
  }
  return m;
}

}  // namespace slodowy

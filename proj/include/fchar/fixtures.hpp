#pragma once

// Table-driven worked-example checks behind `fchar verify-paper`.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "fchar/groebner.hpp"

namespace fchar {

class FixtureFileError : public PreconditionError {
 public:
  FixtureFileError(const std::string& path, const std::string& what)
      : PreconditionError(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct FixtureOutcome {
  std::string id;
  std::string group;
  bool pass = false;
  std::string detail;
  nlohmann::json observed;
  double millis = 0;
};

/// The table compiled into the library.
nlohmann::json embedded_fixture_table();
/// Reads and parses a table; any failure raises FixtureFileError naming the path.
nlohmann::json load_fixture_table(const std::string& path);

/// Runs every fixture (or only those whose group equals `only`), in table order.
std::vector<FixtureOutcome> run_fixture_table(const nlohmann::json& table, const std::optional<std::string>& only);

struct IdentityInstance {
  Ideal ideal;
  Polynomial z;
  unsigned e;
};

/// Random (I, z, e) over F_p for p in {2,3,5}: at most 3 variables, at most 3
/// generators of degree ≤ 4, z of degree ≤ 2, e in {1,2}.
IdentityInstance random_identity_instance(std::mt19937_64& rng);

/// Generous caps for bracket powers with q up to 25.
GroebnerLimits identity_limits();

}  // namespace fchar

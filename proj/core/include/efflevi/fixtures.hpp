#pragma once

#include <string>
#include <vector>

#include "efflevi/lie.hpp"

namespace efflevi {

// Built-in seed corpus, each with a hand-verified radical and Levi part.
std::vector<std::string> fixture_names();

struct Fixture {
  std::string name;
  LieSubalgebra algebra;
  bool has_keep = false;
  LieSubalgebra keep;
};

// Throws invalid_input for an unknown name.
Fixture fixture(const std::string& name);

// Canonical JSON form of the fixture, as shipped under fixtures/.
std::string fixture_json(const std::string& name);

}  // namespace efflevi

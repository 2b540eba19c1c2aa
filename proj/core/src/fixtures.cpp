#include "efflevi/fixtures.hpp"

#include "efflevi/json_io.hpp"

namespace efflevi {

namespace {

IntMat unit(int N, int i, int j) {
  IntMat m(N, N);
  m(i, j) = 1;
  return m;
}

std::vector<RatMat> sl2_block(int N) {
  IntMat h(N, N);
  h(0, 0) = 1;
  h(1, 1) = -1;
  return {to_rat(unit(N, 0, 1)), to_rat(unit(N, 1, 0)), to_rat(h)};
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"sl2_block_sl3",        "sl2_block_sl4", "sl2_semidirect",
          "heisenberg_sl3",       "nilradical_borel_sl4",
          "sl2_sl2_sl4",          "sl2_plus_abelian_sl4"};
}

Fixture fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  if (name == "sl2_block_sl3") {
    f.algebra = lie_span(3, sl2_block(3));
    return f;
  }
  if (name == "sl2_block_sl4") {
    f.algebra = lie_span(4, sl2_block(4));
    return f;
  }
  if (name == "sl2_semidirect") {
    std::vector<RatMat> gens = sl2_block(3);
    gens.push_back(to_rat(unit(3, 0, 2)));
    gens.push_back(to_rat(unit(3, 1, 2)));
    f.algebra = lie_span(3, gens);
    return f;
  }
  if (name == "heisenberg_sl3") {
    f.algebra = lie_span(
        3, {to_rat(unit(3, 0, 1)), to_rat(unit(3, 1, 2)), to_rat(unit(3, 0, 2))});
    return f;
  }
  if (name == "nilradical_borel_sl4") {
    std::vector<RatMat> gens;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) gens.push_back(to_rat(unit(4, i, j)));
    f.algebra = lie_span(4, gens);
    return f;
  }
  if (name == "sl2_sl2_sl4") {
    std::vector<RatMat> gens = sl2_block(4);
    IntMat h2(4, 4);
    h2(2, 2) = 1;
    h2(3, 3) = -1;
    gens.push_back(to_rat(unit(4, 2, 3)));
    gens.push_back(to_rat(unit(4, 3, 2)));
    gens.push_back(to_rat(h2));
    f.algebra = lie_span(4, gens);
    return f;
  }
  if (name == "sl2_plus_abelian_sl4") {
    std::vector<RatMat> gens = sl2_block(4);
    IntMat z(4, 4);
    z(0, 0) = 1;
    z(1, 1) = 1;
    z(2, 2) = -1;
    z(3, 3) = -1;
    gens.push_back(to_rat(z));
    f.algebra = lie_span(4, gens);
    f.has_keep = true;
    f.keep = lie_span(4, sl2_block(4));
    return f;
  }
  throw invalid_input("unknown fixture: " + name);
}

std::string fixture_json(const std::string& name) {
  Fixture f = fixture(name);
  return lie_algebra_json(f.algebra, f.name, f.has_keep ? &f.keep : nullptr);
}

}  // namespace efflevi

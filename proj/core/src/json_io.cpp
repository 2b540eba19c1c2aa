#include "efflevi/json_io.hpp"

#include <json.hpp>

#include "efflevi/fixtures.hpp"
#include "efflevi/harness.hpp"
#include "efflevi/levi.hpp"
#include "efflevi/siegel.hpp"
#include "efflevi/unipotent.hpp"

namespace efflevi {

namespace {

using Json = nlohmann::ordered_json;

Json vec_json(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(to_string(x));
  return a;
}

template <class T>
Json entries_json(const Mat<T>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols; ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json mats_json(const std::vector<IntMat>& ms) {
  Json a = Json::array();
  for (const IntMat& m : ms) a.push_back(entries_json(m));
  return a;
}

Json vecs_json(const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const IntVec& v : vs) a.push_back(vec_json(v));
  return a;
}

Rat rat_field(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  require_input(j.is_string(), "expected a rational string");
  return rat_from_string(j.get<std::string>());
}

Int int_field(const Json& j) {
  Rat r = rat_field(j);
  require_input(den(r) == 1, "expected an integer");
  return num(r);
}

RatVec parse_vec(const Json& j) {
  require_input(j.is_array() && !j.empty(), "expected a nonempty array");
  RatVec v;
  for (const Json& x : j) v.push_back(rat_field(x));
  return v;
}

IntVec parse_int_vec(const Json& j) {
  RatVec v = parse_vec(j);
  IntVec r;
  require_input(to_int(v, &r), "entries must be integers");
  return r;
}

RatMat parse_entries(const Json& j) {
  require_input(j.is_array() && !j.empty(), "matrix entries must be rows");
  int rows = static_cast<int>(j.size());
  int cols = -1;
  RatMat m;
  for (int i = 0; i < rows; ++i) {
    RatVec row = parse_vec(j[i]);
    if (cols < 0) {
      cols = static_cast<int>(row.size());
      m = RatMat(rows, cols);
    }
    require_input(static_cast<int>(row.size()) == cols,
                  "matrix rows must have equal length");
    for (int k = 0; k < cols; ++k) m(i, k) = row[k];
  }
  return m;
}

IntMat parse_int_entries(const Json& j) {
  RatMat m = parse_entries(j);
  IntMat r;
  require_input(to_int(m, &r), "entries must be integers");
  return r;
}

Json parse_top(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  require_input(!j.is_discarded(), "input is not valid JSON");
  require_input(j.is_object(), "input must be a JSON object");
  require_input(j.value("schema", "") == std::string(kSchema),
                "missing or unsupported schema");
  return j;
}

std::string kind_of(const Json& j) { return j.value("kind", ""); }

LieSubalgebra parse_algebra_obj(const Json& j) {
  require_input(j.is_object() && kind_of(j) == "lie_algebra",
                "expected a lie_algebra object");
  require_input(j.contains("N") && j["N"].is_number_integer(),
                "N must be an integer");
  int N = j["N"].get<int>();
  require_input(N >= 1, "N must be positive");
  require_input(j.contains("basis") && j["basis"].is_array(),
                "basis must be an array of matrices");
  std::vector<IntVec> coords;
  for (const Json& e : j["basis"]) {
    IntMat m = parse_int_entries(e);
    require_input(m.rows == N && m.cols == N, "basis matrices must be N x N");
    require_input(trace(m) == 0, "basis matrices must be traceless");
    coords.push_back(sl_coords_int(m));
  }
  LieSubalgebra g = lie_from_coord_span(N, coords, false);
  require_input(is_bracket_closed(g),
                "basis must span a bracket-closed subalgebra");
  return g;
}

bool parse_keep(const Json& j, int N, LieSubalgebra* keep) {
  if (!j.contains("keep") || j["keep"].is_null()) return false;
  require_input(j["keep"].is_array(), "keep must be an array of matrices");
  std::vector<IntVec> coords;
  for (const Json& e : j["keep"]) {
    IntMat m = parse_int_entries(e);
    require_input(m.rows == N && m.cols == N, "keep matrices must be N x N");
    require_input(trace(m) == 0, "keep matrices must be traceless");
    coords.push_back(sl_coords_int(m));
  }
  *keep = lie_from_coord_span(N, coords, false);
  require_input(is_bracket_closed(*keep),
                "keep must span a bracket-closed subalgebra");
  return true;
}

Json algebra_json_obj(const LieSubalgebra& g, const std::string& name,
                      const LieSubalgebra* keep) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "lie_algebra";
  if (!name.empty()) j["name"] = name;
  j["N"] = g.N;
  j["basis"] = mats_json(g.basis);
  if (keep) j["keep"] = mats_json(keep->basis);
  return j;
}

Json matrix_json_obj(const RatMat& m) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "matrix";
  j["entries"] = entries_json(m);
  return j;
}

Place parse_place_str(const std::string& s) {
  if (s == "inf") return inf_place();
  require_input(!s.empty() && s.find_first_not_of("0123456789") ==
                                  std::string::npos,
                "place must be inf or a prime: " + s);
  return finite_place(Int(s));
}

std::string place_str(const Place& v) {
  return v.infinite ? "inf" : to_string(v.p);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(start, comma - start);
    require_input(!tok.empty(), "empty item in comma-separated list");
    out.push_back(tok);
    start = comma + 1;
  }
  return out;
}

SElement parse_s_element_obj(const Json& j) {
  require_input(kind_of(j) == "s_element", "expected an s_element object");
  require_input(j.contains("places") && j["places"].is_array(),
                "places must be an array");
  require_input(j.contains("components") && j["components"].is_array(),
                "components must be an array");
  SElement g;
  for (const Json& p : j["places"]) {
    require_input(p.is_string(), "places must be strings");
    g.places.push_back(parse_place_str(p.get<std::string>()));
  }
  for (const Json& c : j["components"]) g.components.push_back(parse_entries(c));
  validate(g);
  return g;
}

Json s_element_json_obj(const SElement& g) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "s_element";
  Json pl = Json::array();
  for (const Place& v : g.places) pl.push_back(place_str(v));
  j["places"] = std::move(pl);
  Json comps = Json::array();
  for (const RatMat& c : g.components) comps.push_back(entries_json(c));
  j["components"] = std::move(comps);
  return j;
}

SElement element_input(const Json& j, const std::string& S) {
  std::string k = kind_of(j);
  if (k == "s_element") return parse_s_element_obj(j);
  require_input(k == "matrix", "input must be a matrix or s_element");
  RatMat m = parse_entries(j.at("entries"));
  SElement g;
  for (const std::string& tok : split_csv(S)) {
    g.places.push_back(parse_place_str(tok));
    g.components.push_back(m);
  }
  validate(g);
  return g;
}

Json cmd_radical(const Json& in) {
  LieSubalgebra g = parse_algebra_obj(in);
  LieSubalgebra r = radical(g);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "radical_witness";
  w["input"] = algebra_json_obj(g, in.value("name", ""), nullptr);
  w["radical"] = mats_json(r.basis);
  w["dim"] = r.dim();
  return w;
}

Json cmd_levi(const Json& in, long budget) {
  LieSubalgebra g = parse_algebra_obj(in);
  LieSubalgebra keep;
  bool hk = parse_keep(in, g.N, &keep);
  LeviResult lr = effective_levi(g, hk ? &keep : nullptr, budget);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "levi_witness";
  w["input"] = algebra_json_obj(g, in.value("name", ""), hk ? &keep : nullptr);
  w["budget"] = budget;
  w["levi"] = mats_json(lr.h.basis);
  w["radical"] = mats_json(lr.r.basis);
  w["dim_h"] = lr.h.dim();
  w["dim_r"] = lr.r.dim();
  w["depth"] = lr.depth;
  w["ht_g"] = to_string(lr.ht_g);
  w["ht_h"] = to_string(lr.ht_h);
  w["ht_r"] = to_string(lr.ht_r);
  w["solve_achieved"] = vec_json(lr.solve_achieved);
  return w;
}

Json cmd_standardize(const Json& in, long budget) {
  LieSubalgebra g = parse_algebra_obj(in);
  LieSubalgebra keep;
  bool hk = parse_keep(in, g.N, &keep);
  LeviResult lr = effective_levi(g, hk ? &keep : nullptr, budget);
  FlagStandardization fs = standardize_radical(lr.h, lr.r);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "standardize_witness";
  w["input"] = algebra_json_obj(g, in.value("name", ""), hk ? &keep : nullptr);
  w["budget"] = budget;
  w["levi"] = mats_json(lr.h.basis);
  w["radical"] = mats_json(lr.r.basis);
  w["delta"] = entries_json(fs.delta);
  w["delta_inv"] = entries_json(fs.delta_inv);
  w["flag_dims"] = fs.flag_dims;
  w["block_sizes"] = fs.block_sizes;
  w["delta_size"] = to_string(fs.delta_size);
  return w;
}

Json cmd_height(const Json& in, const CommandOptions& opt) {
  SElement g = element_input(in, opt.S);
  HeightResult hr = height_S(g, opt.budget);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "height_witness";
  w["input"] = s_element_json_obj(g);
  w["budget"] = opt.budget;
  w["ht"] = to_string(hr.value);
  w["min_c"] = to_string(hr.min_c);
  w["witness"] = vec_json(hr.witness);
  w["nodes"] = hr.nodes;
  return w;
}

Json cmd_height_adjoint(const Json& in, const CommandOptions& opt) {
  SElement g = element_input(in, opt.S);
  LieSubalgebra mod;
  bool has_mod = false;
  if (in.contains("module") && !in["module"].is_null()) {
    mod = parse_algebra_obj(in["module"]);
    has_mod = true;
  }
  HeightResult hr = height_adjoint(g, has_mod ? &mod : nullptr, opt.budget);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "height_adjoint_witness";
  w["input"] = s_element_json_obj(g);
  w["module"] = has_mod ? algebra_json_obj(mod, "", nullptr) : Json(nullptr);
  w["budget"] = opt.budget;
  w["ht"] = to_string(hr.value);
  w["min_c"] = to_string(hr.min_c);
  w["witness"] = vec_json(hr.witness);
  w["nodes"] = hr.nodes;
  return w;
}

Json cmd_height_subspace(const Json& in) {
  LieSubalgebra g = parse_algebra_obj(in);
  SubspaceHeight sh = height_subspace(g);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "height_subspace_witness";
  w["input"] = algebra_json_obj(g, in.value("name", ""), nullptr);
  w["ht"] = to_string(sh.value);
  w["dim"] = sh.dim;
  return w;
}

Json cmd_reduce(const Json& in, const Rat& delta) {
  require_input(kind_of(in) == "matrix", "input must be a matrix");
  RatMat g = parse_entries(in.at("entries"));
  SiegelReduction red = siegel_reduce(g, delta);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "reduce_witness";
  w["input"] = matrix_json_obj(g);
  w["delta"] = to_string(delta);
  w["gamma"] = entries_json(red.gamma);
  w["reduced"] = entries_json(red.reduced);
  w["b2"] = vec_json(red.profile.b2);
  w["mu"] = entries_json(red.profile.mu);
  w["a_sup_squared"] = to_string(red.a_sup_squared);
  return w;
}

Json cmd_inj_radius(const Json& in, const Rat& eta0) {
  require_input(kind_of(in) == "matrix", "input must be a matrix");
  require_input(eta0 > 0, "eta0 must be positive");
  RatMat g = parse_entries(in.at("entries"));
  InjectivityRadius ir = injectivity_radius_lower(g);
  Rat eta = std::min(ir.eta, eta0);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "inj_radius_witness";
  w["input"] = matrix_json_obj(g);
  w["eta0"] = to_string(eta0);
  w["eta"] = to_string(eta);
  w["eta_raw"] = to_string(ir.eta);
  w["eta_sq"] = to_string(eta * eta);
  w["a_sup_squared"] = to_string(ir.a_sup_squared);
  w["c_n"] = to_string(ir.c_n);
  return w;
}

Json cmd_siegel_kernel(const Json& in, long budget) {
  require_input(kind_of(in) == "matrix", "input must be a matrix");
  IntMat A = parse_int_entries(in.at("entries"));
  SiegelKernelResult kr = siegel_kernel_basis(A, budget);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "siegel_kernel_witness";
  w["input"] = matrix_json_obj(to_rat(A));
  w["budget"] = budget;
  w["basis"] = vecs_json(kr.basis);
  w["det_bound"] = to_string(kr.det_bound);
  w["enumeration_used"] = kr.enumeration_used;
  w["nodes"] = kr.nodes;
  return w;
}

Json cmd_siegel_solve(const Json& in, int* exit_code) {
  require_input(kind_of(in) == "siegel_solve_input",
                "input must be a siegel_solve_input");
  IntMat A = parse_int_entries(in.at("A"));
  IntVec b = parse_int_vec(in.at("b"));
  require_input(static_cast<int>(b.size()) == A.rows,
                "right-hand side length must match the rows");
  SiegelSolveResult sr = siegel_inhomogeneous(A, b);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "siegel_solve_witness";
  Json input;
  input["schema"] = kSchema;
  input["kind"] = "siegel_solve_input";
  input["A"] = entries_json(A);
  input["b"] = vec_json(b);
  w["input"] = std::move(input);
  w["feasible"] = sr.feasible;
  if (sr.feasible) {
    w["y"] = vec_json(sr.y);
    w["d"] = to_string(sr.d);
    w["achieved"] = to_string(sr.achieved);
  } else {
    w["certificate"] = vec_json(sr.certificate);
    *exit_code = 3;
  }
  return w;
}

Json cmd_small_basis(const Json& in) {
  require_input(kind_of(in) == "small_basis_input",
                "input must be a small_basis_input");
  require_input(in.contains("ambient") && in["ambient"].is_number_integer(),
                "ambient must be an integer");
  int ambient = in["ambient"].get<int>();
  require_input(ambient >= 1, "ambient must be positive");
  std::vector<IntVec> lattice, u;
  for (const Json& v : in.at("lattice")) {
    IntVec x = parse_int_vec(v);
    require_input(static_cast<int>(x.size()) == ambient,
                  "lattice vectors must have ambient length");
    lattice.push_back(std::move(x));
  }
  for (const Json& v : in.at("vectors")) {
    IntVec x = parse_int_vec(v);
    require_input(static_cast<int>(x.size()) == ambient,
                  "vectors must have ambient length");
    u.push_back(std::move(x));
  }
  require_input(!lattice.empty(), "lattice basis must be nonempty");
  require_input(rank_of(lattice, ambient) ==
                    static_cast<int>(lattice.size()),
                "lattice basis must be independent");
  require_input(u.size() == lattice.size(),
                "vectors must match the lattice rank");
  require_input(rank_of(u, ambient) == static_cast<int>(u.size()),
                "vectors must be independent");
  for (const IntVec& x : u)
    require_input(integer_coordinates(lattice, ambient, x, nullptr),
                  "vectors must lie in the lattice");
  std::vector<IntVec> basis =
      extract_small_basis(IntegerLattice(ambient, lattice), u);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "small_basis_witness";
  Json input;
  input["schema"] = kSchema;
  input["kind"] = "small_basis_input";
  input["ambient"] = ambient;
  input["lattice"] = vecs_json(lattice);
  input["vectors"] = vecs_json(u);
  w["input"] = std::move(input);
  w["basis"] = vecs_json(basis);
  return w;
}

Json cmd_unipotent_reduce(const Json& in) {
  require_input(kind_of(in) == "unipotent_reduce_input",
                "input must be a unipotent_reduce_input");
  RatMat h = parse_entries(in.at("h"));
  LieSubalgebra r = parse_algebra_obj(in.at("algebra"));
  NilpotentAlgebra na = nilpotent_algebra(r);
  UnipotentReduction ur = unipotent_reduce(h, na);
  Json w;
  w["schema"] = kSchema;
  w["kind"] = "unipotent_reduce_witness";
  Json input;
  input["schema"] = kSchema;
  input["kind"] = "unipotent_reduce_input";
  input["h"] = entries_json(h);
  input["algebra"] = algebra_json_obj(r, "", nullptr);
  w["input"] = std::move(input);
  w["gamma"] = entries_json(ur.gamma);
  w["reduced"] = entries_json(ur.reduced);
  w["coords"] = vec_json(ur.coords);
  w["achieved"] = to_string(ur.achieved);
  w["nilpotency_class"] = na.nilpotency_class;
  return w;
}

BenchConfig parse_bench_config(const Json& in, const CommandOptions& opt) {
  require_input(kind_of(in) == "bench_config", "input must be a bench_config");
  BenchConfig c;
  require_input(in.contains("seeds") && in["seeds"].is_array(),
                "seeds must be an array of fixture names");
  for (const Json& s : in["seeds"]) {
    require_input(s.is_string(), "seeds must be strings");
    c.seeds.push_back(s.get<std::string>());
  }
  if (in.contains("entry_bounds")) {
    c.entry_bounds.clear();
    for (const Json& b : in["entry_bounds"]) {
      require_input(b.is_number_integer(), "entry bounds must be integers");
      c.entry_bounds.push_back(b.get<long>());
    }
  }
  if (in.contains("samples")) {
    require_input(in["samples"].is_number_integer(),
                  "samples must be an integer");
    c.samples = in["samples"].get<int>();
  }
  c.rng_seed = opt.seed;
  if (in.contains("rng_seed")) {
    require_input(in["rng_seed"].is_number_integer(),
                  "rng_seed must be an integer");
    c.rng_seed = in["rng_seed"].get<uint64_t>();
  }
  return c;
}

Json bench_config_json(const BenchConfig& c) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "bench_config";
  j["seeds"] = c.seeds;
  j["entry_bounds"] = c.entry_bounds;
  j["samples"] = c.samples;
  j["rng_seed"] = c.rng_seed;
  return j;
}

Json bench_report_json(const BenchReport& rep) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "bench_report";
  j["config"] = bench_config_json(rep.config);
  Json rows = Json::array();
  for (const BenchRow& r : rep.rows) {
    Json o;
    o["fixture"] = r.fixture;
    o["B"] = r.B;
    o["k"] = r.k;
    o["T"] = to_string(r.T);
    o["ht_h"] = to_string(r.ht_h);
    o["ht_r"] = to_string(r.ht_r);
    o["a_sq"] = to_string(r.a_sq);
    o["ht"] = to_string(r.ht);
    o["depth"] = r.depth;
    o["valid"] = r.valid;
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  Json slopes = Json::array();
  for (const SlopeFit& f : rep.slopes) {
    Json o;
    o["fixture"] = f.fixture;
    o["B"] = f.B;
    o["n"] = f.n;
    o["degenerate"] = f.degenerate;
    o["slope"] = f.slope;
    o["slope_se"] = f.slope_se;
    slopes.push_back(std::move(o));
  }
  j["slopes"] = std::move(slopes);
  return j;
}

std::string bench_csv(const BenchReport& rep) {
  std::string out = "fixture,B,k,T,ht_h,ht_r,a_sq,ht,depth,valid\n";
  for (const BenchRow& r : rep.rows) {
    out += r.fixture + "," + std::to_string(r.B) + "," + std::to_string(r.k) +
           "," + to_string(r.T) + "," + to_string(r.ht_h) + "," +
           to_string(r.ht_r) + "," + to_string(r.a_sq) + "," +
           to_string(r.ht) + "," + std::to_string(r.depth) + "," +
           (r.valid ? "1" : "0") + "\n";
  }
  return out;
}

Json dispatch_parsed(const std::string& name, const Json& in,
                     const CommandOptions& opt, int* exit_code);

Json cmd_verify(const Json& w, int* exit_code) {
  std::string kind = kind_of(w);
  CommandOptions o;
  std::string cmd;
  Json input;
  if (kind == "radical_witness") {
    cmd = "radical";
    input = w.at("input");
  } else if (kind == "levi_witness" || kind == "standardize_witness") {
    cmd = kind == "levi_witness" ? "levi" : "standardize";
    input = w.at("input");
    o.budget = w.at("budget").get<long>();
  } else if (kind == "height_witness") {
    cmd = "height";
    input = w.at("input");
    o.budget = w.at("budget").get<long>();
  } else if (kind == "height_adjoint_witness") {
    cmd = "height-adjoint";
    input = w.at("input");
    if (!w.at("module").is_null()) input["module"] = w["module"];
    o.budget = w.at("budget").get<long>();
  } else if (kind == "height_subspace_witness") {
    cmd = "height-subspace";
    input = w.at("input");
  } else if (kind == "reduce_witness") {
    cmd = "reduce";
    input = w.at("input");
    o.delta = rat_field(w.at("delta"));
  } else if (kind == "inj_radius_witness") {
    cmd = "inj-radius";
    input = w.at("input");
    o.eta0 = rat_field(w.at("eta0"));
  } else if (kind == "siegel_kernel_witness") {
    cmd = "siegel-kernel";
    input = w.at("input");
    o.budget = w.at("budget").get<long>();
  } else if (kind == "siegel_solve_witness") {
    cmd = "siegel-solve";
    input = w.at("input");
  } else if (kind == "small_basis_witness") {
    cmd = "small-basis";
    input = w.at("input");
  } else if (kind == "unipotent_reduce_witness") {
    cmd = "unipotent-reduce";
    input = w.at("input");
  } else if (kind == "bench_report") {
    cmd = "bench-exponents";
    input = w.at("config");
  } else {
    throw invalid_input("not a verifiable witness: " + kind);
  }
  int ec = 0;
  Json again = dispatch_parsed(cmd, input, o, &ec);
  require_input(ec == 0 || ec == 3, "witness could not be recomputed");
  require_input(again == w, "witness does not verify");
  Json rep;
  rep["schema"] = kSchema;
  rep["kind"] = "verify_report";
  rep["witness_kind"] = kind;
  rep["verified"] = true;
  (void)exit_code;
  return rep;
}

Json dispatch_parsed(const std::string& name, const Json& in,
                     const CommandOptions& opt, int* exit_code) {
  if (name == "radical") return cmd_radical(in);
  if (name == "levi") return cmd_levi(in, opt.budget);
  if (name == "standardize") return cmd_standardize(in, opt.budget);
  if (name == "height") return cmd_height(in, opt);
  if (name == "height-adjoint") return cmd_height_adjoint(in, opt);
  if (name == "height-subspace") return cmd_height_subspace(in);
  if (name == "reduce") return cmd_reduce(in, opt.delta);
  if (name == "inj-radius") return cmd_inj_radius(in, opt.eta0);
  if (name == "siegel-kernel") return cmd_siegel_kernel(in, opt.budget);
  if (name == "siegel-solve") return cmd_siegel_solve(in, exit_code);
  if (name == "small-basis") return cmd_small_basis(in);
  if (name == "unipotent-reduce") return cmd_unipotent_reduce(in);
  if (name == "bench-exponents")
    return bench_report_json(run_bench(parse_bench_config(in, opt)));
  if (name == "verify") return cmd_verify(in, exit_code);
  throw invalid_input("unknown subcommand: " + name);
}

}  // namespace

CommandResult run_command(const std::string& name, const std::string& input,
                          const CommandOptions& opt) {
  CommandResult res;
  try {
    require_input(opt.format == "json" || opt.format == "csv",
                  "format must be json or csv");
    require_input(opt.format == "json" || name == "bench-exponents",
                  "csv output applies to bench-exponents only");
    Json in = parse_top(input);
    if (name == "bench-exponents" && opt.format == "csv") {
      res.output = bench_csv(run_bench(parse_bench_config(in, opt)));
      return res;
    }
    Json out = dispatch_parsed(name, in, opt, &res.exit_code);
    if (res.exit_code == 3) res.error = "system is infeasible";
    res.output = out.dump(2) + "\n";
  } catch (const invalid_input& e) {
    res.exit_code = 2;
    res.error = e.what();
    res.output.clear();
  } catch (const resource_limit& e) {
    res.exit_code = 4;
    res.error = e.what();
    res.output.clear();
  } catch (const Json::exception& e) {
    res.exit_code = 2;
    res.error = e.what();
    res.output.clear();
  } catch (const internal_error& e) {
    res.exit_code = 1;
    res.error = e.what();
    res.output.clear();
  }
  return res;
}

std::string matrix_json(const RatMat& m) {
  return matrix_json_obj(m).dump(2) + "\n";
}

std::string lie_algebra_json(const LieSubalgebra& g, const std::string& name,
                             const LieSubalgebra* keep) {
  return algebra_json_obj(g, name, keep).dump(2) + "\n";
}

RatMat parse_matrix_json(const std::string& text) {
  Json j = parse_top(text);
  require_input(kind_of(j) == "matrix", "input must be a matrix");
  return parse_entries(j.at("entries"));
}

LieSubalgebra parse_lie_algebra_json(const std::string& text) {
  return parse_algebra_obj(parse_top(text));
}

}  // namespace efflevi

#include "holobound/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "holobound/parallel.hpp"

namespace holobound {

namespace {

using json = nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::set<std::string> kChecks{"bound",           "sup-bound", "invariance", "pluriharmonicity",
                                    "sharpness",       "delta0",    "scheme",     "integrated"};

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ConfigError(path + ": " + msg); }

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json* find(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void reject_unknown(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) fail(at(path, it.key()), "unknown field");
}

double to_number(const json& j, const std::string& path, bool allow_inf) {
  if (j.is_number()) return j.get<double>();
  if (allow_inf && j.is_string() && (j == "inf" || j == "+inf")) return kInf;
  fail(path, allow_inf ? "expected a number or \"inf\"" : "expected a number");
}

double get_number(const json& obj, const std::string& path, const std::string& key, std::optional<double> dflt,
                  bool allow_inf = false) {
  const json* v = find(obj, key);
  if (!v) {
    if (!dflt) fail(at(path, key), "missing required field");
    return *dflt;
  }
  return to_number(*v, at(path, key), allow_inf);
}

std::string get_string(const json& obj, const std::string& path, const std::string& key,
                       std::optional<std::string> dflt) {
  const json* v = find(obj, key);
  if (!v) {
    if (!dflt) fail(at(path, key), "missing required field");
    return *dflt;
  }
  if (!v->is_string()) fail(at(path, key), "expected a string");
  return v->get<std::string>();
}

std::size_t get_count(const json& obj, const std::string& path, const std::string& key, std::optional<std::size_t> dflt) {
  const json* v = find(obj, key);
  if (!v) {
    if (!dflt) fail(at(path, key), "missing required field");
    return *dflt;
  }
  if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<long long>() >= 0))
    fail(at(path, key), "expected a non-negative integer");
  return v->get<std::size_t>();
}

std::vector<double> get_numbers(const json& obj, const std::string& path, const std::string& key, bool allow_inf = false) {
  std::vector<double> out;
  const json* v = find(obj, key);
  if (!v) return out;
  if (!v->is_array()) fail(at(path, key), "expected an array");
  for (std::size_t i = 0; i < v->size(); ++i) out.push_back(to_number((*v)[i], at(at(path, key), i), allow_inf));
  return out;
}

template <class T>
std::vector<T> get_ints(const json& obj, const std::string& path, const std::string& key) {
  std::vector<T> out;
  const json* v = find(obj, key);
  if (!v) return out;
  if (!v->is_array()) fail(at(path, key), "expected an array");
  for (std::size_t i = 0; i < v->size(); ++i) {
    const json& e = (*v)[i];
    if (!e.is_number_integer() || e.get<long long>() < 0) fail(at(at(path, key), i), "expected a non-negative integer");
    out.push_back(e.get<T>());
  }
  return out;
}

json number_or_inf(double x) { return std::isinf(x) ? json("inf") : json(x); }

json numbers_or_inf(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(number_or_inf(x));
  return a;
}

template <class F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError& e) {
    throw ConfigError(path + "." + e.what());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

SpaceConfig parse_space(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"id", "domain", "n", "weight", "alpha", "alphas", "p", "radii", "blocks"});
  SpaceConfig s;
  s.id = get_string(j, path, "id", std::nullopt);
  s.domain = get_string(j, path, "domain", std::nullopt);
  if (s.domain != "fock" && s.domain != "ball" && s.domain != "polydisc")
    fail(at(path, "domain"), "expected \"fock\", \"ball\" or \"polydisc\"");
  s.n = get_count(j, path, "n", std::nullopt);
  if (s.n == 0) fail(at(path, "n"), "must be >= 1");
  const std::string dflt_weight = s.domain == "fock" ? "fock" : s.domain;
  s.weight = get_string(j, path, "weight", dflt_weight);
  if (find(j, "alpha") && find(j, "alphas")) fail(at(path, "alphas"), "give either alpha or alphas");
  if (find(j, "alpha"))
    s.alphas = {get_number(j, path, "alpha", std::nullopt)};
  else
    s.alphas = get_numbers(j, path, "alphas");
  if (s.alphas.empty()) fail(at(path, "alpha"), "missing required field");
  s.p = get_number(j, path, "p", std::nullopt, true);
  s.radii = get_numbers(j, path, "radii", true);
  s.blocks = get_ints<std::size_t>(j, path, "blocks");
  return s;
}

AutomorphismConfig parse_automorphism(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"id", "automorphism", "z0_re", "z0_im", "radii"});
  AutomorphismConfig a;
  a.id = get_string(j, path, "id", std::nullopt);
  a.kind = get_string(j, path, "automorphism", std::nullopt);
  if (a.kind != "translation" && a.kind != "ball" && a.kind != "polydisc")
    fail(at(path, "automorphism"), "expected \"translation\", \"ball\" or \"polydisc\"");
  a.z0_re = get_numbers(j, path, "z0_re");
  a.z0_im = get_numbers(j, path, "z0_im");
  if (a.z0_re.empty()) fail(at(path, "z0_re"), "missing required field");
  a.radii = get_numbers(j, path, "radii", true);
  return a;
}

FunctionConfig parse_function(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"id", "n", "terms"});
  FunctionConfig f;
  f.id = get_string(j, path, "id", std::nullopt);
  const json* terms = find(j, "terms");
  if (!terms) fail(at(path, "terms"), "missing required field");
  if (!terms->is_array() || terms->empty()) fail(at(path, "terms"), "expected a non-empty array");
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const std::string tp = at(at(path, "terms"), i);
    const json& t = (*terms)[i];
    require_object(t, tp);
    reject_unknown(t, tp, {"coeff_re", "coeff_im", "powers", "exp_re", "exp_im"});
    TermConfig term;
    term.coeff_re = get_number(t, tp, "coeff_re", 1.0);
    term.coeff_im = get_number(t, tp, "coeff_im", 0.0);
    term.powers = get_ints<int>(t, tp, "powers");
    term.exp_re = get_numbers(t, tp, "exp_re");
    term.exp_im = get_numbers(t, tp, "exp_im");
    f.terms.push_back(std::move(term));
  }
  std::size_t n = 0;
  for (const auto& t : f.terms) n = std::max({n, t.powers.size(), t.exp_re.size(), t.exp_im.size()});
  f.n = find(j, "n") ? get_count(j, path, "n", std::nullopt) : std::max<std::size_t>(n, 1);
  if (f.n == 0) fail(at(path, "n"), "must be >= 1");
  return f;
}

CheckConfig parse_check(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"check", "space", "function", "functions", "automorphism", "point_re", "point_im",
                           "random", "outer", "radius"});
  CheckConfig c;
  c.check = get_string(j, path, "check", std::nullopt);
  if (!kChecks.count(c.check)) fail(at(path, "check"), "unknown check '" + c.check + "'");
  c.space = get_string(j, path, "space", std::nullopt);
  c.function = get_string(j, path, "function", std::string{});
  if (const json* fs = find(j, "functions")) {
    if (!fs->is_array()) fail(at(path, "functions"), "expected an array of function ids");
    for (std::size_t i = 0; i < fs->size(); ++i) {
      if (!(*fs)[i].is_string()) fail(at(at(path, "functions"), i), "expected a string");
      c.functions.push_back((*fs)[i].get<std::string>());
    }
  }
  c.automorphism = get_string(j, path, "automorphism", std::string{});
  c.point_re = get_numbers(j, path, "point_re");
  c.point_im = get_numbers(j, path, "point_im");
  c.random = get_count(j, path, "random", 0);
  c.outer = get_string(j, path, "outer", std::string{});
  c.radius = get_number(j, path, "radius", 0.0);
  return c;
}

template <class T>
std::map<std::string, std::size_t> index_ids(const std::vector<T>& items, const std::string& section) {
  std::map<std::string, std::size_t> ids;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].id.empty()) fail(at(at(section, i), "id"), "must be non-empty");
    if (!ids.emplace(items[i].id, i).second) fail(at(at(section, i), "id"), "duplicate id '" + items[i].id + "'");
  }
  return ids;
}

void validate(const RunConfig& c) {
  const auto spaces = index_ids(c.spaces, "spaces");
  const auto autos = index_ids(c.automorphisms, "automorphisms");
  const auto funcs = index_ids(c.functions, "functions");

  std::vector<std::optional<SpaceSpec>> built;
  for (std::size_t i = 0; i < c.spaces.size(); ++i)
    built.emplace_back(wrap(at("spaces", i), [&] { return build_space(c.spaces[i]); }));
  std::vector<std::optional<Automorphism>> autos_built;
  for (std::size_t i = 0; i < c.automorphisms.size(); ++i)
    autos_built.emplace_back(wrap(at("automorphisms", i), [&] { return build_automorphism(c.automorphisms[i]); }));
  for (std::size_t i = 0; i < c.functions.size(); ++i)
    wrap(at("functions", i), [&] { return build_function(c.functions[i]); });
  wrap("integration", [&] { return build_plan(c); });
  if (c.output.format != "csv" && c.output.format != "json") fail("output.format", "expected \"csv\" or \"json\"");

  for (std::size_t i = 0; i < c.checks.size(); ++i) {
    const CheckConfig& k = c.checks[i];
    const std::string path = at("checks", i);
    auto sit = spaces.find(k.space);
    if (sit == spaces.end()) fail(at(path, "space"), "undefined space id '" + k.space + "'");
    const SpaceSpec& s = *built[sit->second];
    if (!s.finite_p()) fail(at(path, "space"), "space '" + k.space + "' has p = inf; checks need a finite p");

    auto need_function = [&](const std::string& id, const std::string& field) {
      if (id.empty()) fail(at(path, field), "missing required field");
      auto it = funcs.find(id);
      if (it == funcs.end()) fail(at(path, field), "undefined function id '" + id + "'");
      if (c.functions[it->second].n != s.dim())
        fail(at(path, field), "function '" + id + "' has dimension " + std::to_string(c.functions[it->second].n) +
                                  ", space has " + std::to_string(s.dim()));
    };
    auto need_point = [&]() {
      if (k.point_re.empty()) fail(at(path, "point_re"), "missing required field");
      const CPoint z = wrap(at(path, "point_re"), [&] { return build_point(k.point_re, k.point_im); });
      if (z.dim() != s.dim()) fail(at(path, "point_re"), "point dimension differs from the space dimension");
      if (!contains(s.domain(), z)) fail(at(path, "point_re"), "point lies outside the domain");
      return z;
    };
    auto need_automorphism = [&]() -> const Automorphism& {
      if (k.automorphism.empty()) fail(at(path, "automorphism"), "missing required field");
      auto it = autos.find(k.automorphism);
      if (it == autos.end()) fail(at(path, "automorphism"), "undefined automorphism id '" + k.automorphism + "'");
      const Automorphism& a = *autos_built[it->second];
      if (a.dim() != s.dim()) fail(at(path, "automorphism"), "automorphism dimension differs from the space dimension");
      return a;
    };

    if (k.check == "bound") {
      need_function(k.function, "function");
      need_point();
    } else if (k.check == "sup-bound") {
      need_function(k.function, "function");
    } else if (k.check == "sharpness") {
      need_point();
    } else if (k.check == "delta0") {
      for (std::size_t f = 0; f < k.functions.size(); ++f) need_function(k.functions[f], at("functions", f));
      if (k.functions.empty() && k.random == 0) fail(at(path, "functions"), "give functions and/or random > 0");
    } else if (k.check == "invariance") {
      const Automorphism& a = need_automorphism();
      if (!(a.domain() == s.domain())) fail(at(path, "automorphism"), "automorphism acts on a different domain");
    } else if (k.check == "pluriharmonicity" || k.check == "scheme") {
      const Automorphism& a = need_automorphism();
      wrap(at(path, "automorphism"), [&] { return psi_representative(s.weight(), a); });
      if (k.check == "scheme") need_function(k.function, "function");
      if (k.check == "pluriharmonicity") {
        if (k.point_re.empty() && k.random == 0) fail(at(path, "point_re"), "give a point or random > 0");
        if (!k.point_re.empty()) need_point();
      }
    } else if (k.check == "integrated") {
      need_function(k.function, "function");
      wrap(at(path, "outer"), [&] { return outer_from_string(k.outer); });
      const CPoint z = need_point();
      if (!(k.radius > 0.0)) fail(at(path, "radius"), "must be > 0");
      if (!(boundary_distance(s.domain(), z) > k.radius)) fail(at(path, "radius"), "sub-ball leaves the domain");
    }
  }
}

json to_json(const RunConfig& c) {
  json j;
  j["description"] = c.description;
  j["seed"] = c.seed;
  j["output"] = {{"path", c.output.path}, {"format", c.output.format}};
  json integ = {{"method", c.integration.method},
                {"nodes", c.integration.nodes},
                {"samples", c.integration.samples},
                {"tol", c.integration.tol},
                {"mc_tol", c.integration.mc_tol}};
  if (c.integration.seed) integ["seed"] = *c.integration.seed;
  j["integration"] = integ;
  j["spaces"] = json::array();
  for (const auto& s : c.spaces) {
    json e = {{"id", s.id}, {"domain", s.domain}, {"n", s.n}, {"weight", s.weight}, {"p", number_or_inf(s.p)}};
    e["alphas"] = s.alphas;
    if (!s.radii.empty()) e["radii"] = numbers_or_inf(s.radii);
    if (!s.blocks.empty()) e["blocks"] = s.blocks;
    j["spaces"].push_back(e);
  }
  j["automorphisms"] = json::array();
  for (const auto& a : c.automorphisms) {
    json e = {{"id", a.id}, {"automorphism", a.kind}, {"z0_re", a.z0_re}};
    if (!a.z0_im.empty()) e["z0_im"] = a.z0_im;
    if (!a.radii.empty()) e["radii"] = numbers_or_inf(a.radii);
    j["automorphisms"].push_back(e);
  }
  j["functions"] = json::array();
  for (const auto& f : c.functions) {
    json terms = json::array();
    for (const auto& t : f.terms) {
      json e = {{"coeff_re", t.coeff_re}, {"coeff_im", t.coeff_im}};
      if (!t.powers.empty()) e["powers"] = t.powers;
      if (!t.exp_re.empty()) e["exp_re"] = t.exp_re;
      if (!t.exp_im.empty()) e["exp_im"] = t.exp_im;
      terms.push_back(e);
    }
    j["functions"].push_back({{"id", f.id}, {"n", f.n}, {"terms", terms}});
  }
  j["checks"] = json::array();
  for (const auto& k : c.checks) {
    json e = {{"check", k.check}, {"space", k.space}};
    if (!k.function.empty()) e["function"] = k.function;
    if (!k.functions.empty()) e["functions"] = k.functions;
    if (!k.automorphism.empty()) e["automorphism"] = k.automorphism;
    if (!k.point_re.empty()) e["point_re"] = k.point_re;
    if (!k.point_im.empty()) e["point_im"] = k.point_im;
    if (k.random) e["random"] = k.random;
    if (!k.outer.empty()) e["outer"] = k.outer;
    if (k.radius != 0.0) e["radius"] = k.radius;
    j["checks"].push_back(e);
  }
  j["parameter_ranges"] = c.parameter_ranges;
  return j;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("<document>", std::string("invalid JSON: ") + e.what());
  }
  require_object(j, "<document>");
  reject_unknown(j, "", {"description", "seed", "output", "integration", "spaces", "automorphisms", "functions",
                         "checks", "parameter_ranges"});
  RunConfig c;
  c.description = get_string(j, "", "description", std::string{});
  const json* seed = find(j, "seed");
  if (!seed) fail("seed", "missing required field");
  if (!seed->is_number_unsigned() && !(seed->is_number_integer() && seed->get<long long>() >= 0))
    fail("seed", "expected a non-negative integer");
  c.seed = seed->get<std::uint64_t>();

  if (const json* o = find(j, "output")) {
    require_object(*o, "output");
    reject_unknown(*o, "output", {"path", "format"});
    c.output.path = get_string(*o, "output", "path", std::string{});
    c.output.format = get_string(*o, "output", "format", std::string("csv"));
  }
  if (const json* in = find(j, "integration")) {
    require_object(*in, "integration");
    reject_unknown(*in, "integration", {"method", "nodes", "samples", "seed", "tol", "mc_tol"});
    c.integration.method = get_string(*in, "integration", "method", std::string("auto"));
    c.integration.nodes = get_count(*in, "integration", "nodes", c.integration.nodes);
    c.integration.samples = get_count(*in, "integration", "samples", c.integration.samples);
    if (find(*in, "seed")) c.integration.seed = get_count(*in, "integration", "seed", std::nullopt);
    c.integration.tol = get_number(*in, "integration", "tol", c.integration.tol);
    c.integration.mc_tol = get_number(*in, "integration", "mc_tol", c.integration.mc_tol);
  }
  auto array_of = [&](const char* key) -> const json* {
    const json* a = find(j, key);
    if (a && !a->is_array()) fail(key, "expected an array");
    return a;
  };
  if (const json* a = array_of("spaces"))
    for (std::size_t i = 0; i < a->size(); ++i) c.spaces.push_back(parse_space((*a)[i], at("spaces", i)));
  if (const json* a = array_of("automorphisms"))
    for (std::size_t i = 0; i < a->size(); ++i)
      c.automorphisms.push_back(parse_automorphism((*a)[i], at("automorphisms", i)));
  if (const json* a = array_of("functions"))
    for (std::size_t i = 0; i < a->size(); ++i) c.functions.push_back(parse_function((*a)[i], at("functions", i)));
  if (const json* a = array_of("checks"))
    for (std::size_t i = 0; i < a->size(); ++i) c.checks.push_back(parse_check((*a)[i], at("checks", i)));
  if (const json* pr = find(j, "parameter_ranges")) {
    require_object(*pr, "parameter_ranges");
    for (auto it = pr->begin(); it != pr->end(); ++it) {
      if (!it->is_string()) fail(at("parameter_ranges", it.key()), "expected a string");
      c.parameter_ranges[it.key()] = it->get<std::string>();
    }
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) { return to_json(c).dump(2) + "\n"; }

// Output settings do not change any result, so they stay out of the digest.
std::string config_digest(const RunConfig& c) {
  json j = to_json(c);
  j.erase("output");
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

SpaceSpec build_space(const SpaceConfig& c) {
  const std::size_t n = c.n;
  auto alphas_n = [&]() {
    if (c.alphas.size() == 1) return std::vector<double>(n, c.alphas[0]);
    if (c.alphas.size() != n) fail("alphas", "expected 1 or n = " + std::to_string(n) + " entries");
    return c.alphas;
  };
  if (c.weight == "fock" || c.weight == "fock_aniso") {
    if (c.domain != "fock") fail("weight", "Fock weights live on domain \"fock\"");
    if (!c.radii.empty()) fail("radii", "not used by Fock weights");
    if (!c.blocks.empty()) {
      std::size_t total = 0;
      for (auto b : c.blocks) total += b;
      if (total != n) fail("blocks", "block sizes must sum to n");
      if (c.alphas.size() != c.blocks.size()) fail("alphas", "one alpha per block required");
      return SpaceSpec(WeightSpec::fock_blocks(c.blocks, c.alphas), c.p);
    }
    if (c.weight == "fock") {
      if (c.alphas.size() != 1) fail("alpha", "Fock weight takes a single alpha");
      return SpaceSpec(WeightSpec::fock(n, c.alphas[0]), c.p);
    }
    return SpaceSpec(WeightSpec::fock_aniso(alphas_n()), c.p);
  }
  if (!c.blocks.empty()) fail("blocks", "only Fock weights take blocks");
  if (std::isinf(c.p)) fail("p", "Bergman weights need a finite p");
  if (c.weight == "ball") {
    if (c.domain != "ball") fail("weight", "ball weight lives on domain \"ball\"");
    if (c.alphas.size() != 1) fail("alpha", "ball weight takes a single alpha");
    if (!c.radii.empty()) fail("radii", "not used by the ball");
    return SpaceSpec::ball(n, c.alphas[0], c.p);
  }
  if (c.weight == "polydisc") {
    if (c.domain != "polydisc") fail("weight", "polydisc weight lives on domain \"polydisc\"");
    if (!c.radii.empty() && c.radii.size() != n) fail("radii", "expected n = " + std::to_string(n) + " entries");
    return SpaceSpec::polydisc(alphas_n(), c.p, c.radii);
  }
  fail("weight", "expected \"fock\", \"fock_aniso\", \"ball\" or \"polydisc\"");
}

CPoint build_point(const std::vector<double>& re, const std::vector<double>& im) {
  if (!im.empty() && im.size() != re.size()) throw std::invalid_argument("real and imaginary parts differ in length");
  std::vector<Complex> z(re.size());
  for (std::size_t j = 0; j < re.size(); ++j) z[j] = {re[j], im.empty() ? 0.0 : im[j]};
  return CPoint(std::move(z));
}

Automorphism build_automorphism(const AutomorphismConfig& c) {
  CPoint z0 = wrap("z0_re", [&] { return build_point(c.z0_re, c.z0_im); });
  if (c.kind == "translation") return Automorphism::translation(std::move(z0));
  if (c.kind == "ball") return Automorphism::ball_mobius(std::move(z0));
  if (!c.radii.empty() && c.radii.size() != z0.dim()) fail("radii", "expected one radius per coordinate");
  return Automorphism::polydisc_mobius(std::move(z0), c.radii);
}

HoloFunction build_function(const FunctionConfig& c) {
  std::vector<PolyExpTerm> terms;
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    const TermConfig& t = c.terms[i];
    const std::string tp = "terms[" + std::to_string(i) + "]";
    auto sized = [&](std::size_t got, const char* field) {
      if (got != 0 && got != c.n) fail(tp + "." + field, "expected n = " + std::to_string(c.n) + " entries");
    };
    sized(t.powers.size(), "powers");
    sized(t.exp_re.size(), "exp_re");
    sized(t.exp_im.size(), "exp_im");
    PolyExpTerm term;
    term.coeff = {t.coeff_re, t.coeff_im};
    term.powers = t.powers.empty() ? std::vector<int>(c.n, 0) : t.powers;
    term.expvec.assign(c.n, 0.0);
    for (std::size_t j = 0; j < c.n; ++j)
      term.expvec[j] = {t.exp_re.empty() ? 0.0 : t.exp_re[j], t.exp_im.empty() ? 0.0 : t.exp_im[j]};
    terms.push_back(std::move(term));
  }
  return HoloFunction::poly_exp(c.n, std::move(terms), c.id);
}

IntegrationPlan build_plan(const RunConfig& c) {
  IntegrationPlan plan;
  plan.method = method_from_string(c.integration.method);
  plan.nodes = c.integration.nodes;
  plan.samples = c.integration.samples;
  plan.seed = c.integration.seed ? *c.integration.seed : derive_seed(c.seed, 0x1a7e);
  plan.tol = c.integration.tol;
  plan.mc_tol = c.integration.mc_tol;
  if (plan.nodes == 0) fail("nodes", "must be >= 1");
  if (plan.samples < 2) fail("samples", "must be >= 2");
  if (!(plan.tol > 0.0)) fail("tol", "must be > 0");
  if (!(plan.mc_tol > 0.0)) fail("mc_tol", "must be > 0");
  return plan;
}

}  // namespace holobound

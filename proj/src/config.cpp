#include "crofton/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace crofton {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  std::size_t b = s.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

Vec parse_numbers(const std::string& key, const std::string& value) {
  Vec out;
  std::string cleaned = value;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream is(cleaned);
  std::string tok;
  while (is >> tok) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      throw config_error("key '" + key + "': expected a number, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

double parse_scalar(const std::string& key, const std::string& value) {
  Vec v = parse_numbers(key, value);
  if (v.size() != 1) throw config_error("key '" + key + "': expected a single number");
  return v[0];
}

long long parse_int(const std::string& key, const std::string& value) {
  double v = parse_scalar(key, value);
  long long i = static_cast<long long>(v);
  if (static_cast<double>(i) != v)
    throw config_error("key '" + key + "': expected an integer");
  return i;
}

// keys that may appear more than once (vector lists)
bool repeatable(const std::string& key) {
  return key == "l0" || key == "normal" || key == "offset" || key == "check";
}

}  // namespace

Subspace ExperimentConfig::fixed_subspace() const {
  if (idx.r == 0) return Subspace::trivial(idx.n);
  try {
    return orthonormalize(idx.n, l0_basis);
  } catch (const degenerate_input&) {
    throw config_error("l0: basis vectors are not linearly independent");
  }
}

EstimatorSpec ExperimentConfig::estimator_spec() const {
  if (!body) throw config_error("estimate mode requires a body");
  return EstimatorSpec{idx,  *body,          fixed_subspace(), outer_samples,
                       inner_samples, reference_radius, seed};
}

ExperimentConfig parse_config(const std::string& text) {
  std::map<std::string, std::vector<std::string>> kv;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw config_error("line " + std::to_string(lineno) + ": empty key or value");
    if (!repeatable(key) && kv.count(key))
      throw config_error("key '" + key + "': duplicate entry");
    kv[key].push_back(value);
  }

  auto take = [&kv](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second.front();
    kv.erase(it);
    return v;
  };
  auto take_list = [&kv](const std::string& key) -> std::vector<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return {};
    std::vector<std::string> v = std::move(it->second);
    kv.erase(it);
    return v;
  };

  ExperimentConfig cfg;
  if (auto v = take("mode")) cfg.mode = *v;
  if (cfg.mode != "estimate" && cfg.mode != "verify" && cfg.mode != "convergence")
    throw config_error("mode: must be estimate, verify or convergence");

  if (auto v = take("design")) {
    if (*v == "rotational")
      cfg.design = Design::Rotational;
    else if (*v == "vertical")
      cfg.design = Design::Vertical;
    else
      throw config_error("design: must be rotational or vertical");
  }
  if (auto v = take("route")) {
    if (*v == "phi")
      cfg.route = PhiRoute::Generic;
    else if (*v == "volume")
      cfg.route = PhiRoute::Volume;
    else if (*v == "projection")
      cfg.route = PhiRoute::Projection;
    else if (*v == "radial")
      cfg.route = PhiRoute::Radial;
    else
      throw config_error("route: must be phi, volume, projection or radial");
  }

  if (auto v = take("seed")) cfg.seed = static_cast<std::uint64_t>(parse_int("seed", *v));
  if (auto v = take("outer")) cfg.outer_samples = parse_int("outer", *v);
  if (auto v = take("inner")) cfg.inner_samples = parse_int("inner", *v);
  if (auto v = take("budget")) cfg.budget = parse_int("budget", *v);
  if (auto v = take("reference_radius"))
    cfg.reference_radius = parse_scalar("reference_radius", *v);
  if (auto v = take("out")) cfg.out_path = *v;
  cfg.checks = take_list("check");

  const bool needs_indices = cfg.mode != "verify";
  if (needs_indices) {
    auto want_int = [&take](const std::string& key) {
      auto v = take(key);
      if (!v) throw config_error("key '" + key + "' is required for this mode");
      return static_cast<int>(parse_int(key, *v));
    };
    cfg.idx.n = want_int("n");
    cfg.idx.k = want_int("k");
    cfg.idx.r = want_int("r");
    cfg.idx.j = want_int("j");
    cfg.idx.q = want_int("q");
    try {
      cfg.idx.validate(cfg.design);
    } catch (const std::domain_error& e) {
      throw config_error(e.what());
    }

    // body
    auto bodykind = take("body");
    if (!bodykind) throw config_error("key 'body' is required (ball, box or polytope)");
    cfg.body_tag = *bodykind;
    const int n = cfg.idx.n;
    auto want_vec = [&take, n](const std::string& key) {
      auto v = take(key);
      if (!v) throw config_error("key '" + key + "' is required for this body");
      Vec out = parse_numbers(key, *v);
      if (static_cast<int>(out.size()) != n)
        throw config_error("key '" + key + "': expected " + std::to_string(n) + " numbers");
      return out;
    };
    try {
      if (*bodykind == "ball") {
        Vec center = want_vec("center");
        auto rv = take("radius");
        if (!rv) throw config_error("key 'radius' is required for body = ball");
        cfg.body = ConvexBody::ball(std::move(center), parse_scalar("radius", *rv));
      } else if (*bodykind == "box") {
        Vec lower = want_vec("lower");
        Vec upper = want_vec("upper");
        cfg.body = ConvexBody::box(std::move(lower), std::move(upper));
      } else if (*bodykind == "polytope") {
        std::vector<std::string> normals = take_list("normal");
        std::vector<std::string> offsets = take_list("offset");
        if (normals.empty() || normals.size() != offsets.size())
          throw config_error("polytope: need matching repeated 'normal' and 'offset' keys");
        Mat A;
        Vec b;
        for (std::size_t i = 0; i < normals.size(); ++i) {
          Vec row = parse_numbers("normal", normals[i]);
          if (static_cast<int>(row.size()) != n)
            throw config_error("normal: expected " + std::to_string(n) + " numbers");
          A.push_back(std::move(row));
          b.push_back(parse_scalar("offset", offsets[i]));
        }
        cfg.body = ConvexBody::polytope(std::move(A), std::move(b));
      } else {
        throw config_error("body: must be ball, box or polytope");
      }
    } catch (const std::invalid_argument& e) {
      throw config_error(std::string("body: ") + e.what());
    }

    // fixed subspace basis
    std::vector<std::string> l0 = take_list("l0");
    if (static_cast<int>(l0.size()) != cfg.idx.r)
      throw config_error("l0: expected " + std::to_string(cfg.idx.r) +
                         " basis vector(s) for r = " + std::to_string(cfg.idx.r));
    for (const std::string& s : l0) {
      Vec v = parse_numbers("l0", s);
      if (static_cast<int>(v.size()) != n)
        throw config_error("l0: expected " + std::to_string(n) + " numbers per vector");
      cfg.l0_basis.push_back(std::move(v));
    }
    (void)cfg.fixed_subspace();  // verifies linear independence

    if (cfg.reference_radius > 0.0 && cfg.reference_radius < cfg.body->circumradius())
      throw config_error("reference_radius: must be at least the body circumradius");
    if (cfg.outer_samples < 1 || cfg.inner_samples < 1)
      throw config_error("outer/inner: sample counts must be positive");
  }

  if (!kv.empty()) throw config_error("unknown key '" + kv.begin()->first + "'");
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw config_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace crofton

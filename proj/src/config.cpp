// SPDX-License-Identifier: Apache-2.0

#include "udw/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

namespace udw {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& msg) {
  throw UsageError(origin + ":" + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& origin, int line, const std::string& key,
                 const std::string& val) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(val.c_str(), &end);
  if (val.empty() || end != val.c_str() + val.size() || errno == ERANGE ||
      !std::isfinite(v))
    fail(origin, line, key + ": expected a finite number, got '" + val + "'");
  return v;
}

int to_int(const std::string& origin, int line, const std::string& key,
           const std::string& val) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(val.c_str(), &end, 10);
  if (val.empty() || end != val.c_str() + val.size() || errno == ERANGE ||
      v < -1000000000L || v > 1000000000L)
    fail(origin, line, key + ": expected an integer, got '" + val + "'");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

SweepAxis axis_from_string(const std::string& s) {
  if (s == "a") return SweepAxis::A;
  if (s == "Omega") return SweepAxis::Omega;
  if (s == "m") return SweepAxis::Mass;
  if (s == "tau") return SweepAxis::Tau;
  if (s == "N") return SweepAxis::NModes;
  throw UsageError("unknown sweep.axis '" + s +
                   "' (expected a, Omega, m, tau or N)");
}

Observable observable_from_string(const std::string& s) {
  if (s == "P") return Observable::P;
  if (s == "dP_scenarios") return Observable::DPScenarios;
  if (s == "rate") return Observable::Rate;
  if (s == "per_mode") return Observable::PerMode;
  throw UsageError("unknown sweep output '" + s +
                   "' (expected P, dP_scenarios, rate or per_mode)");
}

}  // namespace

const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::A: return "a";
    case SweepAxis::Omega: return "Omega";
    case SweepAxis::Mass: return "m";
    case SweepAxis::Tau: return "tau";
    case SweepAxis::NModes: return "N";
  }
  return "?";
}

const char* observable_name(Observable obs) {
  switch (obs) {
    case Observable::P: return "P";
    case Observable::DPScenarios: return "dP_scenarios";
    case Observable::Rate: return "rate";
    case Observable::PerMode: return "per_mode";
  }
  return "?";
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  const auto bad = [&text](const std::string& why) {
    throw UsageError("sweep.grid '" + text + "': " + why);
  };

  if (text.rfind("lin:", 0) == 0 || text.rfind("log:", 0) == 0) {
    const bool logspace = text[1] == 'o';
    const auto parts = split(text.substr(4), ':');
    if (parts.size() != 3) bad("expected lo:hi:n after the prefix");
    const double lo = to_double("sweep.grid", 0, "lo", parts[0]);
    const double hi = to_double("sweep.grid", 0, "hi", parts[1]);
    const int n = to_int("sweep.grid", 0, "n", parts[2]);
    if (n < 2) bad("need at least 2 points");
    if (!(hi > lo)) bad("need hi > lo");
    if (logspace && !(lo > 0.0)) bad("log spacing needs lo > 0");
    grid.reserve(n);
    for (int i = 0; i < n; ++i) {
      const double f = static_cast<double>(i) / (n - 1);
      grid.push_back(logspace ? std::exp(std::log(lo) * (1.0 - f) +
                                         std::log(hi) * f)
                              : lo + (hi - lo) * f);
    }
    grid.front() = lo;  // endpoints exact, not via exp(log(.))
    grid.back() = hi;
  } else {
    for (const auto& item : split(text, ','))
      grid.push_back(to_double("sweep.grid", 0, "value", item));
  }

  if (grid.empty()) bad("empty grid");
  for (size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) bad("values must be strictly increasing");
  return grid;
}

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin) {
  RunConfig cfg;

  // Gather key/value pairs first so duplicate detection sees everything.
  std::map<std::string, std::pair<int, std::string>> kv;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(origin, lineno, "expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, lineno, "empty key");
    if (val.empty()) fail(origin, lineno, key + ": empty value");
    if (!kv.emplace(key, std::make_pair(lineno, val)).second)
      fail(origin, lineno, "duplicate key '" + key + "' (first at line " +
                               std::to_string(kv[key].first) + ")");
  }

  // Typed accessors; each take() consumes its key so leftovers are typos.
  const auto find = [&kv](const char* key) {
    return kv.find(key);
  };
  const auto take_str = [&](const char* key, std::string* out) {
    const auto it = find(key);
    if (it == kv.end()) return -1;
    *out = it->second.second;
    const int at = it->second.first;
    kv.erase(it);
    return at;
  };
  const auto take_double = [&](const char* key, double* out) {
    std::string s;
    const int at = take_str(key, &s);
    if (at >= 0) *out = to_double(origin, at, key, s);
    return at;
  };
  const auto take_int = [&](const char* key, int* out) {
    std::string s;
    const int at = take_str(key, &s);
    if (at >= 0) *out = to_int(origin, at, key, s);
    return at;
  };
  // Wrap value-domain exceptions from enum parsers with the line location.
  const auto locate = [&origin](int at, const auto& fn) {
    try {
      fn();
    } catch (const UsageError& e) {
      fail(origin, at, e.what());
    }
  };

  std::string s;
  int at;

  at = take_str("scenario.kind", &s);
  if (at < 0)
    throw UsageError(origin + ": missing required key scenario.kind");
  locate(at, [&] { cfg.scenario.kind = scenario_kind_from_string(s); });

  take_double("scenario.a", &cfg.scenario.a);
  if ((at = take_str("scenario.anchor", &s)) >= 0)
    locate(at, [&] { cfg.scenario.anchor = anchor_from_string(s); });
  take_double("cavity.L", &cfg.scenario.L);
  take_double("field.m", &cfg.scenario.m);

  // State block: parameters are only meaningful for their state kind, and
  // accepting e.g. state.n_k on a coherent state would mislead.
  std::string state_kind = "vacuum";
  at = take_str("state.kind", &state_kind);
  int state_at = at < 0 ? 0 : at;
  if (state_kind == "vacuum") {
    cfg.state = VacuumState{};
  } else if (state_kind == "fock") {
    FockState f;
    take_int("state.k", &f.k);
    take_int("state.n_k", &f.n_k);
    cfg.state = f;
  } else if (state_kind == "coherent") {
    CoherentState c;
    take_int("state.k", &c.k);
    double re = 0.0, im = 0.0;
    take_double("state.alpha_re", &re);
    take_double("state.alpha_im", &im);
    c.alpha = {re, im};
    cfg.state = c;
  } else {
    fail(origin, state_at, "state.kind: expected vacuum, fock or coherent, got '" +
                               state_kind + "'");
  }

  take_double("detector.omega", &cfg.detector.omega);
  if ((at = take_double("detector.lambda", &cfg.detector.lambda)) >= 0)
    if (!(cfg.detector.lambda > 0.0))
      fail(origin, at, "detector.lambda must be > 0");
  take_double("detector.tau0", &cfg.detector.tau0);
  take_double("detector.tau1", &cfg.detector.tau1);

  if ((at = take_int("modes.N", &cfg.n_modes)) >= 0)
    if (cfg.n_modes < 1) fail(origin, at, "modes.N must be >= 1");
  if ((at = take_str("modes.massless_basis", &s)) >= 0) {
    if (s == "conformal")
      cfg.basis = MasslessBasis::Conformal;
    else if (s == "direct")
      cfg.basis = MasslessBasis::DirectRindler;
    else
      fail(origin, at, "modes.massless_basis: expected conformal or direct");
  }

  if ((at = take_double("quad.rel_tol", &cfg.quad.rel_tol)) >= 0)
    if (!(cfg.quad.rel_tol > 0.0)) fail(origin, at, "quad.rel_tol must be > 0");
  if ((at = take_double("quad.abs_tol", &cfg.quad.abs_tol)) >= 0)
    if (!(cfg.quad.abs_tol > 0.0)) fail(origin, at, "quad.abs_tol must be > 0");
  if ((at = take_int("quad.max_subdivisions", &cfg.quad.max_subdivisions)) >= 0)
    if (cfg.quad.max_subdivisions < 1)
      fail(origin, at, "quad.max_subdivisions must be >= 1");

  // Sweep block (optional, all-or-nothing on axis+grid).
  std::string axis_s, grid_s, outputs_s;
  const int axis_at = take_str("sweep.axis", &axis_s);
  const int grid_at = take_str("sweep.grid", &grid_s);
  const int outputs_at = take_str("sweep.outputs", &outputs_s);
  if ((axis_at >= 0) != (grid_at >= 0))
    throw UsageError(origin +
                     ": sweep.axis and sweep.grid must be given together");
  if (axis_at < 0 && outputs_at >= 0)
    fail(origin, outputs_at, "sweep.outputs without sweep.axis/sweep.grid");
  if (axis_at >= 0) {
    SweepRequest req;
    locate(axis_at, [&] { req.axis = axis_from_string(axis_s); });
    locate(grid_at, [&] { req.grid = parse_grid(grid_s); });
    if (outputs_at >= 0) {
      req.outputs.clear();
      locate(outputs_at, [&] {
        for (const auto& item : split(outputs_s, ','))
          req.outputs.push_back(observable_from_string(item));
      });
      if (req.outputs.empty()) fail(origin, outputs_at, "empty sweep.outputs");
    }
    cfg.sweep = req;
  }

  if (!kv.empty()) {
    const auto& first = *kv.begin();
    fail(origin, first.second.first, "unknown key '" + first.first + "'");
  }

  // Cross-field validation beyond what single keys can see.
  const bool has0 = std::isfinite(cfg.detector.tau0);
  const bool has1 = std::isfinite(cfg.detector.tau1);
  if (cfg.sweep && cfg.sweep->axis == SweepAxis::Tau) {
    if (has1)
      throw UsageError(origin +
                       ": axis tau supplies detector.tau1; remove that key");
  } else if (has0 != has1) {
    throw UsageError(
        origin + ": detector.tau0 and detector.tau1 must be given together");
  } else if (has0 && !(cfg.detector.tau1 > cfg.detector.tau0)) {
    throw UsageError(origin + ": need detector.tau1 > detector.tau0");
  }

  if (cfg.sweep) {
    const auto& req = *cfg.sweep;
    const bool has_rate = std::count(req.outputs.begin(), req.outputs.end(),
                                     Observable::Rate) > 0;
    if (has_rate && req.axis != SweepAxis::Tau)
      throw UsageError(origin + ": output 'rate' needs sweep.axis = tau");
    if (req.axis == SweepAxis::NModes) {
      if (std::count(req.outputs.begin(), req.outputs.end(),
                     Observable::PerMode) > 0)
        throw UsageError(origin +
                         ": output 'per_mode' cannot vary with axis N");
      for (double v : req.grid)
        if (v < 1.0 || v != std::floor(v))
          throw UsageError(origin +
                           ": sweep.grid for axis N must be integers >= 1");
    }
    if (req.axis == SweepAxis::Tau)
      for (double v : req.grid)
        if (!(v > (has0 ? cfg.detector.tau0 : 0.0)))
          throw UsageError(origin +
                           ": tau grid must lie after the window start");
  }

  // State indices against the smallest mode count any row will use.
  int n_min = cfg.n_modes;
  if (cfg.sweep && cfg.sweep->axis == SweepAxis::NModes)
    n_min = static_cast<int>(cfg.sweep->grid.front());
  if (const auto* f = std::get_if<FockState>(&cfg.state)) {
    if (f->k < 1 || f->k > n_min)
      throw UsageError(origin + ": state.k must lie in [1, modes.N]");
    if (f->n_k < 0) throw UsageError(origin + ": state.n_k must be >= 0");
  } else if (const auto* c = std::get_if<CoherentState>(&cfg.state)) {
    if (c->k < 1 || c->k > n_min)
      throw UsageError(origin + ": state.k must lie in [1, modes.N]");
  }

  cfg.scenario.validate();
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string config_echo(const RunConfig& cfg) {
  std::ostringstream out;
  const auto put = [&out](const char* key, const std::string& val) {
    out << key << " = " << val << "\n";
  };

  put("scenario.kind", to_string(cfg.scenario.kind));
  put("scenario.a", fmt17(cfg.scenario.a));
  put("scenario.anchor", to_string(cfg.scenario.anchor));
  put("cavity.L", fmt17(cfg.scenario.L));
  put("field.m", fmt17(cfg.scenario.m));

  if (std::holds_alternative<VacuumState>(cfg.state)) {
    put("state.kind", "vacuum");
  } else if (const auto* f = std::get_if<FockState>(&cfg.state)) {
    put("state.kind", "fock");
    put("state.k", std::to_string(f->k));
    put("state.n_k", std::to_string(f->n_k));
  } else if (const auto* c = std::get_if<CoherentState>(&cfg.state)) {
    put("state.kind", "coherent");
    put("state.k", std::to_string(c->k));
    put("state.alpha_re", fmt17(c->alpha.real()));
    put("state.alpha_im", fmt17(c->alpha.imag()));
  }

  put("detector.omega", fmt17(cfg.detector.omega));
  put("detector.lambda", fmt17(cfg.detector.lambda));
  if (std::isfinite(cfg.detector.tau0))
    put("detector.tau0", fmt17(cfg.detector.tau0));
  if (std::isfinite(cfg.detector.tau1))
    put("detector.tau1", fmt17(cfg.detector.tau1));

  put("modes.N", std::to_string(cfg.n_modes));
  put("modes.massless_basis",
      cfg.basis == MasslessBasis::Conformal ? "conformal" : "direct");

  put("quad.rel_tol", fmt17(cfg.quad.rel_tol));
  put("quad.abs_tol", fmt17(cfg.quad.abs_tol));
  put("quad.max_subdivisions", std::to_string(cfg.quad.max_subdivisions));

  if (cfg.sweep) {
    put("sweep.axis", axis_name(cfg.sweep->axis));
    std::string grid;
    for (size_t i = 0; i < cfg.sweep->grid.size(); ++i) {
      if (i) grid += ',';
      grid += fmt17(cfg.sweep->grid[i]);
    }
    put("sweep.grid", grid);
    std::string outs;
    for (size_t i = 0; i < cfg.sweep->outputs.size(); ++i) {
      if (i) outs += ',';
      outs += observable_name(cfg.sweep->outputs[i]);
    }
    put("sweep.outputs", outs);
  }
  return out.str();
}

ScenarioContext make_context(const RunConfig& cfg) {
  return ScenarioContext(cfg.scenario, cfg.n_modes, cfg.basis);
}

}  // namespace udw

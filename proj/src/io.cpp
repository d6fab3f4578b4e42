// Copyright 2026 The qnetbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnetbound/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qnetbound/errors.hpp"

namespace qnb {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

template <typename T>
T get(const Json& j, const char* key) {
  const Json& v = field(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

double number(const Json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError(what + " must be a number");
  return v.get<double>();
}

std::size_t index(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(what + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::optional<double> optional_number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return number(v, key);
}

Json optional_to_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::array<double, 3> triple(const Json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 3) throw ParseError(what + " must have 3 entries");
  return {number(v[0], what), number(v[1], what), number(v[2], what)};
}

Pauli axis_from_json(const Json& v, const char* key) {
  if (!v.is_string() || v.get<std::string>().size() != 1) {
    throw ParseError(std::string("field '") + key + "' must be one of x, y, z");
  }
  return pauli_from_axis(v.get<std::string>()[0]);
}

int sign_from_json(const Json& v) {
  if (v.is_number_integer() && (v.get<int>() == 1 || v.get<int>() == -1)) return v.get<int>();
  if (v.is_string() && v.get<std::string>() == "+") return 1;
  if (v.is_string() && v.get<std::string>() == "-") return -1;
  throw ParseError("field 'sign' must be +1, -1, \"+\" or \"-\"");
}

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

Json step_to_json(const DepthStep& s) {
  return Json{{"kind", s.kind == StepKind::kGrow ? "grow" : "shrink"},
              {"edge", {s.u, s.v}},
              {"vertex", s.vertex}};
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

QubitNetwork network_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("network must be a JSON object");
  if (j.contains("preset")) {
    NetworkPreset p;
    p.kind = preset_kind_from_string(get<std::string>(j, "preset"));
    p.n = index(field(j, "n"), "n");
    p.J = number(field(j, "J"), "J");
    return p.expand();
  }
  const std::size_t n = index(field(j, "n"), "n");
  ControlModel model = ControlModel::kFullLocal;
  if (j.contains("control_model")) {
    model = control_model_from_string(get<std::string>(j, "control_model"));
  }
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  std::vector<Edge> out;
  for (const auto& e : edges) {
    Edge edge;
    const std::size_t u = index(field(e, "i"), "i");
    const std::size_t v = index(field(e, "j"), "j");
    const Json& g = field(e, "g");
    if (!g.is_array() || g.size() != 3) throw ParseError("g must be a 3x3 array");
    CouplingTensor t{};
    for (std::size_t a = 0; a < 3; ++a) t[a] = triple(g[a], "g row");
    // Keep i < j; a reversed pair transposes the tensor.
    if (u > v) {
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) edge.g[a][b] = t[b][a];
      edge.u = v;
      edge.v = u;
    } else {
      edge.g = t;
      edge.u = u;
      edge.v = v;
    }
    out.push_back(edge);
  }
  std::vector<Splitting> omega;
  if (j.contains("omega") && !j["omega"].is_null()) {
    const Json& w = j["omega"];
    if (!w.is_array()) throw ParseError("omega must be an array");
    for (const auto& row : w) omega.push_back(triple(row, "omega row"));
  }
  return QubitNetwork(n, std::move(out), std::move(omega), model);
}

Json network_to_json(const QubitNetwork& net) {
  Json edges = Json::array();
  for (const auto& e : net.edges()) {
    Json g = Json::array();
    for (const auto& row : e.g) g.push_back(row);
    edges.push_back(Json{{"i", e.u}, {"j", e.v}, {"g", g}});
  }
  Json omega = Json::array();
  for (const auto& w : net.omega()) omega.push_back(w);
  return Json{{"n", net.size()},
              {"control_model", to_string(net.control_model())},
              {"edges", edges},
              {"omega", omega}};
}

GeneratorSpec generator_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("generator must be a JSON array");
  std::vector<GeneratorTerm> terms;
  for (const auto& t : j) {
    GeneratorTerm term;
    term.coeff = number(field(t, "coeff"), "coeff");
    term.pauli = PauliString::parse(get<std::string>(t, "pauli"));
    terms.push_back(term);
  }
  return GeneratorSpec(std::move(terms));
}

Json generator_to_json(const GeneratorSpec& spec) {
  Json out = Json::array();
  for (const auto& t : spec.terms()) {
    out.push_back(Json{{"coeff", t.coeff}, {"pauli", t.pauli.str()}});
  }
  return out;
}

Json bound_report_to_json(const BoundReport& r) {
  return Json{{"n", r.n},
              {"l", r.l},
              {"J", r.J},
              {"epsilon", r.epsilon},
              {"norm_1", r.norm_1},
              {"norm_inf", r.norm_inf},
              {"K", r.K},
              {"m_steps", r.m_steps},
              {"trotter_error", r.trotter_error},
              {"depths", r.depths},
              {"exact_depths", r.exact_depths},
              {"per_term", r.per_term},
              {"eq8_paper", optional_to_json(r.eq8_paper)},
              {"eq8_usable", optional_to_json(r.eq8_usable)},
              {"eq1", optional_to_json(r.eq1)}};
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.n = get<std::size_t>(j, "n");
  r.l = get<std::size_t>(j, "l");
  r.J = get<double>(j, "J");
  r.epsilon = get<double>(j, "epsilon");
  r.norm_1 = get<double>(j, "norm_1");
  r.norm_inf = get<double>(j, "norm_inf");
  r.K = get<double>(j, "K");
  r.m_steps = get<std::size_t>(j, "m_steps");
  r.trotter_error = get<double>(j, "trotter_error");
  r.depths = get<std::vector<std::size_t>>(j, "depths");
  r.exact_depths = get<bool>(j, "exact_depths");
  r.per_term = get<std::vector<double>>(j, "per_term");
  r.eq8_paper = optional_number(j, "eq8_paper");
  r.eq8_usable = optional_number(j, "eq8_usable");
  r.eq1 = optional_number(j, "eq1");
  return r;
}

Json depth_result_to_json(const DepthResult& r) {
  Json witness = Json::array();
  for (const auto& s : r.witness) witness.push_back(step_to_json(s));
  return Json{{"target_support", r.target_support},
              {"start_edge", {r.start_edge.first, r.start_edge.second}},
              {"depth", r.depth},
              {"witness", witness},
              {"exact", r.exact}};
}

DepthResult depth_result_from_json(const Json& j) {
  DepthResult r;
  r.target_support = get<std::vector<std::size_t>>(j, "target_support");
  const auto se = get<std::vector<std::size_t>>(j, "start_edge");
  if (se.size() != 2) throw ParseError("start_edge must have 2 entries");
  r.start_edge = {se[0], se[1]};
  r.depth = get<std::size_t>(j, "depth");
  r.exact = get<bool>(j, "exact");
  const Json& w = field(j, "witness");
  if (!w.is_array()) throw ParseError("witness must be an array");
  for (const auto& s : w) {
    DepthStep step;
    const auto kind = get<std::string>(s, "kind");
    if (kind == "grow") {
      step.kind = StepKind::kGrow;
    } else if (kind == "shrink") {
      step.kind = StepKind::kShrink;
    } else {
      throw ParseError("step kind must be grow or shrink");
    }
    const auto e = get<std::vector<std::size_t>>(s, "edge");
    if (e.size() != 2) throw ParseError("step edge must have 2 entries");
    step.u = e[0];
    step.v = e[1];
    step.vertex = get<std::size_t>(s, "vertex");
    r.witness.push_back(step);
  }
  if (r.witness.size() != r.depth) throw ParseError("witness length differs from depth");
  return r;
}

Json depth_table_to_json(const DepthTable& t) {
  Json by_weight = Json::array();
  for (const auto& [w, d] : t.max_by_weight) {
    by_weight.push_back(Json{{"weight", w}, {"max_depth", d}, {"supports", t.count_by_weight.at(w)}});
  }
  return Json{{"n", t.n}, {"overall_max", t.overall_max}, {"by_weight", by_weight}};
}

Json schedule_to_json(const Schedule& s) {
  Json prims = Json::array();
  for (const auto& p : s.primitives()) {
    if (const auto* r = std::get_if<LocalRotation>(&p)) {
      prims.push_back(Json{{"kind", "local"},
                           {"qubit", r->qubit},
                           {"axis", r->axis},
                           {"angle", r->angle},
                           {"duration", 0.0}});
    } else {
      const auto& e = std::get<TwoBodyEvolution>(p);
      prims.push_back(Json{{"kind", "two_body"},
                           {"edge", {e.u, e.v}},
                           {"alpha", std::string(1, axis_char(e.alpha))},
                           {"beta", std::string(1, axis_char(e.beta))},
                           {"sign", e.sign},
                           {"angle", e.angle},
                           {"duration", e.duration()},
                           {"g_used", e.g_used}});
    }
  }
  return Json{{"n", s.size()}, {"total_duration", s.total_duration()}, {"primitives", prims}};
}

Schedule schedule_from_json(const Json& j, const QubitNetwork& net) {
  const std::size_t n = index(field(j, "n"), "n");
  if (n != net.size()) throw DimensionError("schedule and network sizes differ");
  Schedule s(n);
  const Json& prims = field(j, "primitives");
  if (!prims.is_array()) throw ParseError("primitives must be an array");
  double sum = 0.0;
  for (const auto& p : prims) {
    const auto kind = get<std::string>(p, "kind");
    const double duration = number(field(p, "duration"), "duration");
    if (kind == "local") {
      LocalRotation r;
      r.qubit = index(field(p, "qubit"), "qubit");
      r.axis = triple(field(p, "axis"), "axis");
      r.angle = number(field(p, "angle"), "angle");
      if (duration != 0.0) throw DomainError("local rotations take zero time");
      s.append(r);
    } else if (kind == "two_body") {
      TwoBodyEvolution e;
      const Json& edge = field(p, "edge");
      if (!edge.is_array() || edge.size() != 2) throw ParseError("edge must have 2 entries");
      e.u = index(edge[0], "edge");
      e.v = index(edge[1], "edge");
      e.alpha = axis_from_json(field(p, "alpha"), "alpha");
      e.beta = axis_from_json(field(p, "beta"), "beta");
      e.sign = sign_from_json(field(p, "sign"));
      e.angle = number(field(p, "angle"), "angle");
      e.g_used = number(field(p, "g_used"), "g_used");
      if (!net.has_edge(e.u, e.v)) throw DomainError("evolution on a missing edge");
      if (!close(std::abs(e.g_used), edge_best_coupling(net, e.u, e.v))) {
        throw DomainError("g_used is not the edge's strongest coupling");
      }
      s.append(e);
      if (!close(duration, e.duration())) {
        throw DomainError("duration differs from angle / |g_used|");
      }
    } else {
      throw ParseError("primitive kind must be local or two_body");
    }
    sum += duration;
  }
  const double total = number(field(j, "total_duration"), "total_duration");
  if (!close(total, sum) || !close(total, s.total_duration())) {
    throw DomainError("total_duration differs from the sum of durations");
  }
  return s;
}

}  // namespace qnb

// Copyright 2026 The zsinfo Authors
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

#ifndef ZSINFO_JSON_IO_HPP_
#define ZSINFO_JSON_IO_HPP_

#include <json.hpp>

#include <string>
#include <vector>

#include "zsinfo/channel.hpp"
#include "zsinfo/errors.hpp"
#include "zsinfo/game.hpp"
#include "zsinfo/info_structure.hpp"
#include "zsinfo/prob_vector.hpp"
#include "zsinfo/scalar.hpp"

// Instance file schema, version "1". Shared by the CLI and the fixtures.
//
// Envelope (all kinds):
//   format_version : "1"
//   kind           : "structure" | "game" | "pair" | "channel"
//   arithmetic     : "rational" | "float"   (default "float")
//
// Scalars are JSON numbers in float mode and "p/q" strings (or integers) in
// rational mode; rational mode rejects JSON floats so files stay lossless.
//
// kind "structure":  x_labels, y1_labels, y2_labels, and either
//     prior + channel1 + channel2   (conditionally independent form), or
//     joint[x][y1][y2]              (+ optional prior to cross-check)
// kind "pair":       x_labels, y_labels, joint[x][y]
// kind "game":       x_labels, u1_labels, u2_labels, cost[x][u1][u2]
// kind "channel":    input_labels, output_labels, rows[in][out]

namespace zsinfo::io {

using nlohmann::json;

enum class Arithmetic { rational, floating };
enum class Kind { structure, game, pair, channel };

std::string to_string(Arithmetic a);
std::string to_string(Kind k);
Arithmetic parse_arithmetic(const std::string& name);
Kind parse_kind(const std::string& name);

struct InstanceFile {
  std::string format_version;
  Kind kind;
  Arithmetic arithmetic;
  json doc;
};

// Throws ValidationError on malformed JSON or a bad envelope.
InstanceFile parse_instance(const json& doc);
InstanceFile read_instance_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

template <class S>
S scalar_from_json(const json& v);

template <>
inline Rational scalar_from_json<Rational>(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational(v.get<unsigned long long>());
  if (v.is_number_float())
    throw ValidationError(
        "rational mode requires exact scalars; write \"p/q\" strings instead "
        "of JSON floats");
  throw ValidationError("expected a scalar, got " + std::string(v.type_name()));
}

template <>
inline double scalar_from_json<double>(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
  throw ValidationError("expected a scalar, got " + std::string(v.type_name()));
}

inline json scalar_to_json(const Rational& v) { return to_fraction_string(v); }
inline json scalar_to_json(double v) { return v; }

namespace detail {

inline std::vector<std::string> labels_from(const json& doc, const char* field,
                                            std::size_t fallback_count,
                                            const std::string& prefix) {
  if (!doc.contains(field)) return index_labels(fallback_count, prefix);
  const json& arr = doc.at(field);
  if (!arr.is_array()) throw ValidationError(std::string(field) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string())
      throw ValidationError(std::string(field) + " entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

template <class S>
std::vector<S> vector_from(const json& arr, const char* what) {
  if (!arr.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<S> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(scalar_from_json<S>(v));
  return out;
}

template <class S>
std::vector<std::vector<S>> matrix_from(const json& arr, const char* what) {
  if (!arr.is_array()) throw ValidationError(std::string(what) + " must be a matrix");
  std::vector<std::vector<S>> out;
  for (const auto& row : arr) out.push_back(vector_from<S>(row, what));
  return out;
}

}  // namespace detail

template <class S>
Channel<S> channel_from_json(const json& doc,
                             const S& tol = ScalarTraits<S>::default_tolerance()) {
  if (!doc.contains("rows")) throw ValidationError("channel file needs 'rows'");
  auto rows = detail::matrix_from<S>(doc.at("rows"), "rows");
  const std::size_t n_out = rows.empty() ? 0 : rows[0].size();
  Channel<S> q{detail::labels_from(doc, "input_labels", rows.size(), "x"),
               detail::labels_from(doc, "output_labels", n_out, "y"),
               std::move(rows)};
  q.validate(tol);
  return q;
}

template <class S>
PairMeasure<S> pair_from_json(const json& doc,
                              const S& tol = ScalarTraits<S>::default_tolerance()) {
  if (!doc.contains("joint")) throw ValidationError("pair file needs 'joint'");
  auto rows = detail::matrix_from<S>(doc.at("joint"), "joint");
  const std::size_t ny = rows.empty() ? 0 : rows[0].size();
  PairMeasure<S> p;
  p.x_labels = detail::labels_from(doc, "x_labels", rows.size(), "x");
  p.y_labels = detail::labels_from(doc, "y_labels", ny, "y");
  for (const auto& row : rows) {
    if (row.size() != ny) throw DimensionError("ragged pair table");
    p.joint.insert(p.joint.end(), row.begin(), row.end());
  }
  p.validate(tol);
  return p;
}

template <class S>
InfoStructure<S> structure_from_json(
    const json& doc, const S& tol = ScalarTraits<S>::default_tolerance()) {
  const bool has_joint = doc.contains("joint");
  const bool has_channels = doc.contains("channel1") || doc.contains("channel2");
  if (has_joint && has_channels)
    throw ValidationError("structure file must use either 'joint' or channels, not both");

  if (has_channels) {
    if (!doc.contains("prior") || !doc.contains("channel1") || !doc.contains("channel2"))
      throw ValidationError("channel-form structure needs 'prior', 'channel1', 'channel2'");
    auto prior_mass = detail::vector_from<S>(doc.at("prior"), "prior");
    ProbVector<S> zeta{detail::labels_from(doc, "x_labels", prior_mass.size(), "x"),
                       std::move(prior_mass)};
    zeta.validate(tol);
    auto c1 = detail::matrix_from<S>(doc.at("channel1"), "channel1");
    auto c2 = detail::matrix_from<S>(doc.at("channel2"), "channel2");
    Channel<S> q1{zeta.labels,
                  detail::labels_from(doc, "y1_labels",
                                      c1.empty() ? 0 : c1[0].size(), "a"),
                  std::move(c1)};
    Channel<S> q2{zeta.labels,
                  detail::labels_from(doc, "y2_labels",
                                      c2.empty() ? 0 : c2[0].size(), "b"),
                  std::move(c2)};
    q1.validate(tol);
    q2.validate(tol);
    auto mu = make_cond_independent(zeta, q1, q2);
    mu.validate(tol);
    return mu;
  }

  if (!has_joint)
    throw ValidationError("structure file needs 'joint' or 'prior'+'channel1'+'channel2'");
  const json& tensor = doc.at("joint");
  if (!tensor.is_array() || tensor.empty())
    throw ValidationError("'joint' must be a nonempty 3d array");
  std::vector<S> joint;
  const std::size_t nx = tensor.size();
  std::size_t ny1 = 0, ny2 = 0;
  for (const auto& plane : tensor) {
    auto rows = detail::matrix_from<S>(plane, "joint");
    if (ny1 == 0) {
      ny1 = rows.size();
      ny2 = rows.empty() ? 0 : rows[0].size();
    }
    if (rows.size() != ny1) throw DimensionError("ragged joint tensor");
    for (const auto& row : rows) {
      if (row.size() != ny2) throw DimensionError("ragged joint tensor");
      joint.insert(joint.end(), row.begin(), row.end());
    }
  }
  auto mu = structure_from_joint(detail::labels_from(doc, "x_labels", nx, "x"),
                                 detail::labels_from(doc, "y1_labels", ny1, "a"),
                                 detail::labels_from(doc, "y2_labels", ny2, "b"),
                                 std::move(joint));
  if (doc.contains("prior")) {
    auto declared = detail::vector_from<S>(doc.at("prior"), "prior");
    if (declared.size() != mu.nx())
      throw DimensionError("prior length does not match x_labels");
    for (std::size_t i = 0; i < declared.size(); ++i)
      if (!near(declared[i], mu.prior.mass[i], tol))
        throw ValidationError("declared prior does not match the joint's X-marginal");
  }
  // A claimed conditional-independence flag is verified, not trusted:
  // validate() checks the product factorization when the flag is set.
  if (doc.contains("cond_independent") && doc.at("cond_independent").is_boolean())
    mu.cond_independent = doc.at("cond_independent").get<bool>();
  mu.validate(tol);
  return mu;
}

template <class S>
Game<S> game_from_json(const json& doc) {
  if (!doc.contains("cost")) throw ValidationError("game file needs 'cost'");
  const json& tensor = doc.at("cost");
  if (!tensor.is_array() || tensor.empty())
    throw ValidationError("'cost' must be a nonempty 3d array");
  Game<S> g;
  std::size_t nu1 = 0, nu2 = 0;
  for (const auto& plane : tensor) {
    auto rows = detail::matrix_from<S>(plane, "cost");
    if (nu1 == 0) {
      nu1 = rows.size();
      nu2 = rows.empty() ? 0 : rows[0].size();
    }
    if (rows.size() != nu1) throw DimensionError("ragged cost tensor");
    for (const auto& row : rows) {
      if (row.size() != nu2) throw DimensionError("ragged cost tensor");
      g.cost.insert(g.cost.end(), row.begin(), row.end());
    }
  }
  g.x_labels = detail::labels_from(doc, "x_labels", tensor.size(), "x");
  g.u1_labels = detail::labels_from(doc, "u1_labels", nu1, "u");
  g.u2_labels = detail::labels_from(doc, "u2_labels", nu2, "v");
  g.validate();
  return g;
}

template <class S>
json envelope(Kind kind) {
  json doc;
  doc["format_version"] = "1";
  doc["kind"] = to_string(kind);
  doc["arithmetic"] =
      to_string(ScalarTraits<S>::exact ? Arithmetic::rational : Arithmetic::floating);
  return doc;
}

template <class S>
json channel_to_json(const Channel<S>& q) {
  json doc = envelope<S>(Kind::channel);
  doc["input_labels"] = q.input_labels;
  doc["output_labels"] = q.output_labels;
  json rows = json::array();
  for (const auto& row : q.rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

template <class S>
json pair_to_json(const PairMeasure<S>& p) {
  json doc = envelope<S>(Kind::pair);
  doc["x_labels"] = p.x_labels;
  doc["y_labels"] = p.y_labels;
  json rows = json::array();
  for (std::size_t ix = 0; ix < p.nx(); ++ix) {
    json r = json::array();
    for (std::size_t iy = 0; iy < p.ny(); ++iy)
      r.push_back(scalar_to_json(p.at(ix, iy)));
    rows.push_back(std::move(r));
  }
  doc["joint"] = std::move(rows);
  return doc;
}

template <class S>
json structure_to_json(const InfoStructure<S>& mu) {
  json doc = envelope<S>(Kind::structure);
  doc["x_labels"] = mu.x_labels;
  doc["y1_labels"] = mu.y1_labels;
  doc["y2_labels"] = mu.y2_labels;
  json prior = json::array();
  for (const auto& v : mu.prior.mass) prior.push_back(scalar_to_json(v));
  doc["prior"] = std::move(prior);
  json tensor = json::array();
  for (std::size_t ix = 0; ix < mu.nx(); ++ix) {
    json plane = json::array();
    for (std::size_t a = 0; a < mu.ny1(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < mu.ny2(); ++b)
        row.push_back(scalar_to_json(mu.at(ix, a, b)));
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  doc["joint"] = std::move(tensor);
  doc["cond_independent"] = mu.cond_independent;
  return doc;
}

template <class S>
json game_to_json(const Game<S>& g) {
  json doc = envelope<S>(Kind::game);
  doc["x_labels"] = g.x_labels;
  doc["u1_labels"] = g.u1_labels;
  doc["u2_labels"] = g.u2_labels;
  json tensor = json::array();
  for (std::size_t ix = 0; ix < g.nx(); ++ix) {
    json plane = json::array();
    for (std::size_t i = 0; i < g.nu1(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < g.nu2(); ++j)
        row.push_back(scalar_to_json(g.at(ix, i, j)));
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  doc["cost"] = std::move(tensor);
  return doc;
}

}  // namespace zsinfo::io

#endif  // ZSINFO_JSON_IO_HPP_

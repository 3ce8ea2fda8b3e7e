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

#include "zsinfo/json_io.hpp"

#include <fstream>

namespace zsinfo::io {

std::string to_string(Arithmetic a) {
  return a == Arithmetic::rational ? "rational" : "float";
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::structure: return "structure";
    case Kind::game: return "game";
    case Kind::pair: return "pair";
    case Kind::channel: return "channel";
  }
  return "structure";
}

Arithmetic parse_arithmetic(const std::string& name) {
  if (name == "rational") return Arithmetic::rational;
  if (name == "float") return Arithmetic::floating;
  throw ValidationError("unknown arithmetic '" + name + "'");
}

Kind parse_kind(const std::string& name) {
  if (name == "structure") return Kind::structure;
  if (name == "game") return Kind::game;
  if (name == "pair") return Kind::pair;
  if (name == "channel") return Kind::channel;
  throw ValidationError("unknown instance kind '" + name + "'");
}

InstanceFile parse_instance(const json& doc) {
  if (!doc.is_object()) throw ValidationError("instance file must be a JSON object");
  InstanceFile file;
  file.format_version =
      doc.contains("format_version") ? doc.at("format_version").get<std::string>() : "1";
  if (file.format_version != "1")
    throw ValidationError("unsupported format_version '" + file.format_version + "'");
  if (!doc.contains("kind")) throw ValidationError("instance file needs 'kind'");
  file.kind = parse_kind(doc.at("kind").get<std::string>());
  file.arithmetic = doc.contains("arithmetic")
                        ? parse_arithmetic(doc.at("arithmetic").get<std::string>())
                        : Arithmetic::floating;
  file.doc = doc;
  return file;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError("JSON parse error in '" + path + "': " + e.what());
  }
  return parse_instance(doc);
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

}  // namespace zsinfo::io

// Copyright 2026 The Cohesia Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "cohesia/error.h"
#include "cohesia/interpret.h"
#include "json.hpp"

namespace cohesia {
namespace {

using OrderedJson = nlohmann::ordered_json;
using Json = nlohmann::json;

const std::set<std::string> kRecordKeys = {"id", "pred", "args", "sent",
                                           "complete"};
const std::set<std::string> kArgumentKeys = {"head", "surface", "role"};

void CheckKeys(const Json& object, const std::set<std::string>& expected,
               const char* what, int line) {
  if (!object.is_object()) {
    throw ParseError(std::string(what) + " is not a JSON object", line);
  }
  for (const auto& key : expected) {
    if (!object.contains(key)) {
      throw ParseError(std::string(what) + " is missing field \"" + key + "\"",
                       line);
    }
  }
  for (const auto& [key, value] : object.items()) {
    if (expected.count(key) == 0) {
      throw ParseError(std::string(what) + " has unknown field \"" + key + "\"",
                       line);
    }
  }
}

int64_t ReadInt(const Json& value, const char* field, int line) {
  if (!value.is_number_integer()) {
    throw ParseError(std::string("field \"") + field + "\" must be an integer",
                     line);
  }
  return value.get<int64_t>();
}

std::string ReadString(const Json& value, const char* field, int line) {
  if (!value.is_string()) {
    throw ParseError(std::string("field \"") + field + "\" must be a string",
                     line);
  }
  return value.get<std::string>();
}

Predication ParseRecord(const std::string& text, int line) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
  CheckKeys(j, kRecordKeys, "record", line);

  Predication p;
  const int64_t id = ReadInt(j["id"], "id", line);
  if (id < 0 || id > INT32_MAX) throw ParseError("id out of range", line);
  p.id = static_cast<int>(id);

  if (!j["pred"].is_null()) {
    p.predicate = ReadString(j["pred"], "pred", line);
    if (p.predicate->empty()) throw ParseError("empty predicate", line);
  }

  const int64_t sent = ReadInt(j["sent"], "sent", line);
  if (sent < 0) throw ParseError("negative sentence index", line);
  p.sentence_index = static_cast<size_t>(sent);

  if (!j["complete"].is_boolean()) {
    throw ParseError("field \"complete\" must be a boolean", line);
  }
  p.complete = j["complete"].get<bool>();

  if (!j["args"].is_array()) throw ParseError("field \"args\" must be an array", line);
  if (j["args"].size() > kMaxArguments) {
    throw ParseError("more than " + std::to_string(kMaxArguments) + " arguments",
                     line);
  }
  for (const Json& ja : j["args"]) {
    CheckKeys(ja, kArgumentKeys, "argument", line);
    Argument a;
    a.head = ReadString(ja["head"], "head", line);
    a.surface = ReadString(ja["surface"], "surface", line);
    const int64_t role = ReadInt(ja["role"], "role", line);
    if (role < 0 || role >= static_cast<int64_t>(kMaxArguments)) {
      throw ParseError("argument role out of range", line);
    }
    a.role = static_cast<int>(role);
    if (a.head.empty() && a.surface.empty()) {
      throw ParseError("argument has neither head nor surface", line);
    }
    p.args.push_back(std::move(a));
  }
  if (!p.predicate && p.args.empty()) {
    throw ParseError("record has neither predicate nor arguments", line);
  }
  if (p.complete != p.ComputeComplete()) {
    throw ParseError("\"complete\" disagrees with the record contents", line);
  }
  return p;
}

}  // namespace

std::string ExportPredication(const Predication& p) {
  OrderedJson j;
  j["id"] = p.id;
  j["pred"] = p.predicate ? OrderedJson(*p.predicate) : OrderedJson(nullptr);
  j["args"] = OrderedJson::array();
  for (const Argument& a : p.args) {
    OrderedJson ja;
    ja["head"] = a.head;
    ja["surface"] = a.surface;
    ja["role"] = a.role;
    j["args"].push_back(std::move(ja));
  }
  j["sent"] = p.sentence_index;
  j["complete"] = p.complete;
  return j.dump(-1, ' ', false, OrderedJson::error_handler_t::replace);
}

void ExportPredications(const std::vector<Predication>& preds,
                        std::ostream& out) {
  for (const Predication& p : preds) out << ExportPredication(p) << '\n';
}

std::string ExportPredications(const std::vector<Predication>& preds) {
  std::ostringstream out;
  ExportPredications(preds, out);
  return out.str();
}

std::vector<Predication> IngestPredications(std::istream& in) {
  std::vector<Predication> preds;
  std::set<int> ids;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    Predication p = ParseRecord(text, line);
    if (!ids.insert(p.id).second) {
      throw ParseError("duplicate id " + std::to_string(p.id), line);
    }
    preds.push_back(std::move(p));
  }
  return preds;
}

std::vector<Predication> IngestPredications(std::string_view text) {
  std::istringstream in{std::string(text)};
  return IngestPredications(in);
}

}  // namespace cohesia

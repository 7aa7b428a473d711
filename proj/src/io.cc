// Copyright 2026 The Authors.
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

#include "matroid/io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace matroid {

namespace {

using nlohmann::json;

const json& Require(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected an object holding key '" + std::string(key) + "'");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError("missing key '" + std::string(key) + "'");
  return *it;
}

template <class T>
T Get(const json& doc, const char* key) {
  const json& value = Require(doc, key);
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw ParseError("key '" + std::string(key) + "': " + e.what());
  }
}

// Re-labels errors from a constructor with the key that fed it.
template <class F>
auto Labeled(const char* key, F&& build) {
  try {
    return build();
  } catch (const AxiomError& e) {
    throw AxiomError("key '" + std::string(key) + "': " + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError("key '" + std::string(key) + "': " + e.what());
  }
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::vector<Subset> SubsetList(const json& doc, const char* key, int n) {
  auto lists = Get<std::vector<std::vector<int>>>(doc, key);
  std::vector<Subset> out;
  for (const auto& list : lists) {
    out.push_back(Labeled(key, [&] { return Subset::FromIndices(n, list); }));
  }
  return out;
}

Matroid MatroidFromJson(const json& doc) {
  const auto type = Get<std::string>(doc, "type");
  if (type == "uniform") {
    const int n = Get<int>(doc, "n");
    const int k = Get<int>(doc, "k");
    return Labeled("k", [&] { return Matroid::Uniform(n, k); });
  }
  if (type == "graphic") {
    const int vertices = Get<int>(doc, "vertices");
    auto edges = Get<std::vector<std::pair<int, int>>>(doc, "edges");
    return Labeled("edges", [&] { return Matroid::Graphic(vertices, std::move(edges)); });
  }
  if (type == "linear") {
    const int prime = Get<int>(doc, "prime");
    auto columns = Get<std::vector<std::vector<int>>>(doc, "columns");
    return Labeled("columns", [&] { return Matroid::Linear(prime, std::move(columns)); });
  }
  if (type == "partition") {
    auto blocks = Get<std::vector<std::vector<int>>>(doc, "blocks");
    auto caps = Get<std::vector<int>>(doc, "capacities");
    return Labeled("blocks",
                   [&] { return Matroid::Partition(std::move(blocks), std::move(caps)); });
  }
  if (type == "explicit") {
    const int n = Get<int>(doc, "n");
    Labeled("n", [&] {
      CheckGroundSize(n);
      return 0;
    });
    std::vector<Subset> sets = SubsetList(doc, "independent", n);
    return Labeled("independent", [&] { return Matroid::Explicit(n, sets); });
  }
  throw ParseError("key 'type': unknown matroid type '" + type + "'");
}

json IndexList(const Subset& s) { return json(s.elements()); }

json MatroidToJson(const Matroid& m) {
  if (const UniformSpec* u = m.uniform()) {
    return {{"type", "uniform"}, {"n", u->n}, {"k", u->k}};
  }
  if (const GraphicSpec* g = m.graphic()) {
    return {{"type", "graphic"}, {"vertices", g->vertices}, {"edges", g->edges}};
  }
  if (const LinearSpec* l = m.linear()) {
    return {{"type", "linear"}, {"prime", l->prime}, {"columns", l->columns}};
  }
  if (const PartitionSpec* p = m.partition()) {
    return {{"type", "partition"}, {"blocks", p->blocks}, {"capacities", p->capacities}};
  }
  if (m.kind() == Matroid::Kind::kDerived && m.size() > kMaxSerializedDerivedGround) {
    throw std::invalid_argument("derived matroid on " + std::to_string(m.size()) +
                                " elements is too large to write explicitly");
  }
  const Family family =
      m.explicit_family() ? m.explicit_family()->family : m.IndependentSets();
  json sets = json::array();
  for (const Subset& s : family.sets()) sets.push_back(IndexList(s));
  return {{"type", "explicit"}, {"n", m.size()}, {"independent", std::move(sets)}};
}

std::string CsvCell(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
std::string CsvCell(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "";
}

}  // namespace

Matroid ParseMatroid(std::string_view text) { return MatroidFromJson(Parse(text)); }

std::string SerializeMatroid(const Matroid& m) { return MatroidToJson(m).dump() + "\n"; }

InstanceSpec ParseInstance(std::string_view text) {
  const json doc = Parse(text);
  const json& list = Require(doc, "matroids");
  if (!list.is_array() || list.empty()) {
    throw ParseError("key 'matroids': expected a non-empty list");
  }
  InstanceSpec spec;
  for (std::size_t i = 0; i < list.size(); ++i) {
    try {
      spec.matroids.push_back(MatroidFromJson(list[i]));
    } catch (const AxiomError& e) {
      throw AxiomError("matroids[" + std::to_string(i) + "]: " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("matroids[" + std::to_string(i) + "]: " + e.what());
    }
  }
  Labeled("matroids", [&] { return CommonGroundSize(spec.matroids); });
  const int n = spec.ground_size();
  if (doc.contains("covering_bases")) {
    spec.covering_bases = SubsetList(doc, "covering_bases", n);
    if (spec.covering_bases->size() != spec.matroids.size()) {
      throw ParseError("key 'covering_bases': need one set per matroid");
    }
  }
  if (doc.contains("chain")) {
    Chain chain{SubsetList(doc, "chain", n)};
    if (chain.levels.size() + 1 != spec.matroids.size() || !chain.IsNested()) {
      throw ParseError("key 'chain': need m-1 nested sets");
    }
    spec.chain = std::move(chain);
  }
  return spec;
}

std::string SerializeInstance(const InstanceSpec& instance) {
  json doc;
  doc["matroids"] = json::array();
  for (const Matroid& m : instance.matroids) doc["matroids"].push_back(MatroidToJson(m));
  if (instance.covering_bases) {
    json ts = json::array();
    for (const Subset& t : *instance.covering_bases) ts.push_back(IndexList(t));
    doc["covering_bases"] = std::move(ts);
  }
  if (instance.chain) {
    json levels = json::array();
    for (const Subset& x : instance.chain->levels) levels.push_back(IndexList(x));
    doc["chain"] = std::move(levels);
  }
  return doc.dump() + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

Subset ParseSubsetList(std::string_view text, int n) {
  std::vector<int> elements;
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad subset element '" + std::string(token) + "'");
    }
    elements.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Subset::FromIndices(n, elements);
}

std::vector<NamedInstance> GenerateBatch(GeneratorFamily family, int n, int m,
                                         std::uint64_t seed, int count) {
  std::vector<NamedInstance> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    std::string id = std::string(GeneratorFamilyName(family)) + "-" + std::to_string(n) +
                     "-" + std::to_string(m) + "-s" + std::to_string(s);
    out.push_back({std::move(id), GenerateRandom(family, n, m, s)});
  }
  return out;
}

std::string AuditCsvHeader() {
  return "instance_id,n,m,optimum,edmonds_rhs,filtration_rhs,upper_partition,"
         "lower_dual_union_raw,lower_contracted_printed,lower_contracted_derived,"
         "covering_found,dual_containment_strict,dual_equality_two,"
         "is_matroid_intersection,violation_flags\n";
}

std::string AuditCsvRow(const BoundReport& r) {
  std::string flags;
  for (const std::string& f : r.violation_flags) {
    if (!flags.empty()) flags += ";";
    flags += f;
  }
  for (const std::string& s : r.skipped) {
    if (!flags.empty()) flags += ";";
    flags += "skipped:" + s;
  }
  for (char& c : flags) {
    if (c == ',' || c == '\n' || c == '"') c = ' ';
  }
  std::string row = r.instance_id;
  for (const std::string& cell :
       {std::to_string(r.n), std::to_string(r.m), CsvCell(r.optimum), CsvCell(r.edmonds_rhs),
        CsvCell(r.filtration_rhs), CsvCell(r.upper_partition),
        CsvCell(r.lower_dual_union_raw), CsvCell(r.lower_contracted_printed),
        CsvCell(r.lower_contracted_derived),
        std::string(r.covering_found ? "true" : "false"),
        CsvCell(r.dual_containment_strict), CsvCell(r.dual_equality_two),
        CsvCell(r.is_matroid_intersection), flags}) {
    row += ",";
    row += cell;
  }
  return row + "\n";
}

std::string RunAudit(const std::vector<NamedInstance>& instances, const AuditOptions& options) {
  const auto count = static_cast<std::int64_t>(instances.size());
  std::vector<std::string> rows(instances.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const NamedInstance& item = instances[i];
    try {
      rows[i] = AuditCsvRow(AuditInstance(item.instance, options, item.id));
    } catch (const std::exception& e) {
      BoundReport failed;
      failed.instance_id = item.id;
      failed.n = item.instance.ground_size();
      failed.m = static_cast<int>(item.instance.matroids.size());
      failed.violation_flags.push_back(std::string("error:") + e.what());
      rows[i] = AuditCsvRow(failed);
    }
  }
  std::string out = AuditCsvHeader();
  for (const std::string& row : rows) out += row;
  return out;
}

}  // namespace matroid

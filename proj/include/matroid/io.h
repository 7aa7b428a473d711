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

// JSON matroid and instance files, and the CSV audit report.
//
// Matroid documents:
//   {"type":"uniform","n":3,"k":2}
//   {"type":"graphic","vertices":3,"edges":[[0,1],[1,2]]}
//   {"type":"linear","prime":2,"columns":[[1,0],[0,1]]}
//   {"type":"partition","blocks":[[0,1],[2]],"capacities":[1,1]}
//   {"type":"explicit","n":2,"independent":[[],[0],[1]]}
// Instances: {"matroids":[...], "covering_bases":[[...],...], "chain":[[...],...]}
// where the last two keys are optional.

#ifndef MATROID_IO_H_
#define MATROID_IO_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matroid/bounds.h"
#include "matroid/instance.h"
#include "matroid/matroid.h"

namespace matroid {

// Malformed document. The message names the offending key or the byte
// offset of a syntax error.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Derived matroids are written as explicit families.
inline constexpr int kMaxSerializedDerivedGround = 14;

Matroid ParseMatroid(std::string_view text);
std::string SerializeMatroid(const Matroid& m);

InstanceSpec ParseInstance(std::string_view text);
std::string SerializeInstance(const InstanceSpec& instance);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

// "1,3,4" -> {1,3,4}; empty string -> empty set.
Subset ParseSubsetList(std::string_view text, int n);

struct NamedInstance {
  std::string id;
  InstanceSpec instance;
};

// Instances for ids family-n-m-s<seed+i>, i < count.
std::vector<NamedInstance> GenerateBatch(GeneratorFamily family, int n, int m,
                                         std::uint64_t seed, int count);

std::string AuditCsvHeader();
std::string AuditCsvRow(const BoundReport& report);

// Audits instances concurrently and returns the CSV (header plus one row
// per instance, in input order). Per-instance failures are written into
// the row's violation_flags cell as "error:<message>".
std::string RunAudit(const std::vector<NamedInstance>& instances,
                     const AuditOptions& options = {});

}  // namespace matroid

#endif  // MATROID_IO_H_

// Copyright 2026 The qmfpr Authors
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

#include "qmfpr/bank_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qmfpr {
namespace {

using nlohmann::json;

CausalPoly ReadPoly(const json& doc, const char* key) {
  const auto& arr = doc.at(key);
  if (!arr.is_array() || arr.empty()) {
    throw BankFormatError(std::string("'") + key + "' must be a non-empty array");
  }
  std::vector<double> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) {
      throw BankFormatError(std::string("'") + key + "' holds a non-number");
    }
    coeffs.push_back(v.get<double>());
  }
  try {
    return CausalPoly(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw BankFormatError(std::string("'") + key + "': " + e.what());
  }
}

}  // namespace

BankFile ToBankFile(const FilterBank& bank) {
  BankFile file;
  file.n = bank.provenance.n;
  file.m = bank.provenance.m;
  file.edges = bank.provenance.edges;
  file.window = bank.provenance.window;
  file.h0 = bank.h0.poly();
  file.h1 = bank.h1.poly();
  file.f0 = bank.f0;
  file.f1 = bank.f1;
  file.delay = bank.delay;
  file.scale = bank.scale;
  file.zero_freqs = bank.zero_freqs;
  return file;
}

FilterBank ToFilterBank(const BankFile& file) {
  DesignSpec spec;
  spec.n = file.n;
  spec.m = file.m;
  spec.edges = file.edges;
  spec.window = file.window;
  spec.zero_freqs = file.zero_freqs;
  FilterBank bank{SymmetricFir(file.h0), SymmetricFir(file.h1), file.f0,
                  file.f1,               file.delay,            file.scale,
                  0.0,                   spec,                  file.zero_freqs};
  return bank;
}

std::string SerializeBank(const BankFile& file) {
  json doc;
  doc["format_version"] = file.format_version;
  doc["n"] = file.n;
  doc["m"] = file.m;
  doc["edges"] = {{"wp", file.edges.wp}, {"ws", file.edges.ws}};
  doc["window"] = {{"kind", std::string(WindowKindName(file.window.kind))},
                   {"param", file.window.param}};
  doc["h0"] = file.h0.vec();
  doc["h1"] = file.h1.vec();
  doc["f0"] = file.f0.vec();
  doc["f1"] = file.f1.vec();
  doc["delay"] = file.delay;
  doc["scale"] = file.scale;
  doc["zero_freqs"] = file.zero_freqs;
  return doc.dump(2) + "\n";
}

BankFile ParseBank(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw BankFormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    BankFile file;
    file.format_version = doc.at("format_version").get<int>();
    if (file.format_version != kBankFormatVersion) {
      throw BankFormatError("unsupported format_version " +
                            std::to_string(file.format_version));
    }
    file.n = doc.at("n").get<int>();
    file.m = doc.at("m").get<int>();
    file.edges = BandEdges::Make(doc.at("edges").at("wp").get<double>(),
                                 doc.at("edges").at("ws").get<double>());
    const auto kind =
        ParseWindowKind(doc.at("window").at("kind").get<std::string>());
    if (!kind) throw BankFormatError("unknown window kind");
    file.window = {*kind, doc.at("window").at("param").get<double>()};
    file.h0 = ReadPoly(doc, "h0");
    file.h1 = ReadPoly(doc, "h1");
    file.f0 = ReadPoly(doc, "f0");
    file.f1 = ReadPoly(doc, "f1");
    file.delay = doc.at("delay").get<int>();
    file.scale = doc.at("scale").get<double>();
    file.zero_freqs = doc.at("zero_freqs").get<std::vector<double>>();
    return file;
  } catch (const json::exception& e) {
    throw BankFormatError(std::string("bad bank document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw BankFormatError(std::string("bad bank document: ") + e.what());
  }
}

void SaveBank(const BankFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw BankFormatError("cannot open " + path.string() + " for writing");
  out << SerializeBank(file);
  if (!out) throw BankFormatError("failed writing " + path.string());
}

BankFile LoadBank(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BankFormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseBank(buf.str());
}

}  // namespace qmfpr

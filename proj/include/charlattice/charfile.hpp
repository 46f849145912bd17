#pragma once

// Character files: a JSON document with fields "algebra", "weights" and an
// optional "involution".
//
//   {
//     "algebra": [["A", 2]],
//     "weights": [
//       [[-1, 0], 1],
//       ...
//     ],
//     "involution": [[0, 1], [1, 0]]
//   }
//
// Weight rows are fundamental-weight coordinates followed by a positive
// multiplicity. emit_character_file writes rows merged and sorted, so a
// parse/emit pass yields the canonical text.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "charlattice/reps.hpp"

namespace charlattice {

struct CharacterFile {
  FormalCharacter character;
  std::optional<LatticeInvolution> involution;
};

inline CharacterFile parse_character_file(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("character file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("character file: top level must be an object");
  for (const auto& [k, v] : doc.items())
    if (k != "algebra" && k != "weights" && k != "involution") throw ParseError("character file: unknown field '" + k + "'");
  if (!doc.contains("algebra") || !doc.contains("weights"))
    throw ParseError("character file: 'algebra' and 'weights' are required");

  auto as_int = [](const json& v, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string("character file: ") + what + " must be an integer");
    return v.get<long long>();
  };

  std::vector<SimpleType> factors;
  const json& al = doc["algebra"];
  if (!al.is_array() || al.empty()) throw ParseError("character file: 'algebra' must be a nonempty array");
  for (const json& f : al) {
    if (!f.is_array() || f.size() != 2 || !f[0].is_string())
      throw ParseError("character file: algebra entries look like [\"A\", 2]");
    const std::string fam = f[0].get<std::string>();
    const long long r = as_int(f[1], "rank");
    if (fam.size() != 1 || r < 1 || r > 100000) throw ParseError("character file: bad algebra entry");
    try {
      factors.push_back(SimpleType::parse(fam + std::to_string(r)));
    } catch (const Error& e) {
      throw ParseError(std::string("character file: ") + e.what());
    }
  }
  SemisimpleAlgebra alg(factors);

  FormalCharacter fc(alg);
  const json& ws = doc["weights"];
  if (!ws.is_array() || ws.empty()) throw ParseError("character file: 'weights' must be a nonempty array");
  for (const json& row : ws) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_array())
      throw ParseError("character file: weight rows look like [[coords...], multiplicity]");
    if (row[0].size() != alg.rank())
      throw ParseError("character file: weight of length " + std::to_string(row[0].size()) + " for rank " +
                       std::to_string(alg.rank()));
    Weight w = Weight::zero(alg.rank());
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      long long c = as_int(row[0][i], "coordinate");
      if (c < -1000000 || c > 1000000) throw ParseError("character file: coordinate out of range");
      w[i] = int(c);
    }
    long long m = as_int(row[1], "multiplicity");
    if (m < 1) throw ParseError("character file: multiplicities must be positive");
    fc.add(w, m);
  }
  if (!fc.is_weyl_stable()) throw ParseError("character file: weights are not stable under the Weyl group");

  CharacterFile cf{fc, std::nullopt};
  if (doc.contains("involution")) {
    const json& inv = doc["involution"];
    if (!inv.is_array() || inv.size() != alg.rank())
      throw ParseError("character file: involution must be a square matrix of the algebra's rank");
    IntMatrix m(alg.rank(), alg.rank());
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      if (!inv[i].is_array() || inv[i].size() != alg.rank())
        throw ParseError("character file: involution must be a square matrix of the algebra's rank");
      for (std::size_t j = 0; j < alg.rank(); ++j) m(i, j) = int(as_int(inv[i][j], "involution entry"));
    }
    try {
      cf.involution = LatticeInvolution(m);
    } catch (const Error& e) {
      throw ParseError(std::string("character file: ") + e.what());
    }
  }
  return cf;
}

inline CharacterFile read_character_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_character_file(ss.str());
}

inline std::string emit_character_file(const CharacterFile& cf) {
  auto vec = [](const IntVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "]";
  };
  const SemisimpleAlgebra& alg = cf.character.algebra();
  std::string out = "{\n  \"algebra\": [";
  for (std::size_t k = 0; k < alg.num_factors(); ++k) {
    const SimpleType& t = alg.factors()[k];
    out += (k ? ", " : "") + std::string("[\"") + char(t.family()) + "\", " + std::to_string(t.rank()) + "]";
  }
  out += "],\n  \"weights\": [\n";
  std::size_t i = 0;
  for (const auto& [w, m] : cf.character.multiplicities()) {
    out += "    [" + vec(w.coords) + ", " + std::to_string(m) + "]";
    out += ++i < cf.character.num_distinct() ? ",\n" : "\n";
  }
  out += "  ]";
  if (cf.involution) {
    out += ",\n  \"involution\": [";
    for (std::size_t r = 0; r < cf.involution->matrix.rows(); ++r)
      out += (r ? ", " : "") + vec(cf.involution->matrix.row(r));
    out += "]";
  }
  return out + "\n}\n";
}

}  // namespace charlattice

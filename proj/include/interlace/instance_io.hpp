#pragma once

#include "interlace/expectation.hpp"
#include "interlace/roots.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace interlace {

/// On-disk problem description. Rationals are "p/q" strings and complex
/// entries are [re, im] pairs; a matrix is a list of rows of entries.
///
///   {"dim": 2,
///    "specs": [{"support": [{"prob": "1/2", "vector": [["1","0"],["0","0"]]}, ...]}],
///    "matrices": [...],        // Hermitian tuple for the mixed-char/certify commands
///    "vectors": [...],         // u_1..u_m for the partition commands
///    "outer_products": [...]}  // u_i u_i^* when u_i itself is irrational
///
/// A support point may carry "outer" (a rank-one PSD matrix) instead of "vector".
struct InstanceFile {
  std::size_t dim = 0;
  std::optional<std::vector<RandomVectorSpec>> specs;
  std::optional<std::vector<HermitianMatrix>> matrices;
  std::optional<std::vector<VectorC>> vectors;
  std::optional<std::vector<HermitianMatrix>> outer_products;

  friend bool operator==(const InstanceFile& a, const InstanceFile& b);
};

/// Throws Error(Parse) with line/column for malformed JSON and a JSON path for
/// schema violations. Probabilities and Hermitian symmetry are not checked
/// here; Instance::validate reports those.
InstanceFile parse_instance_file(std::string_view text);
std::string serialize_instance_file(const InstanceFile& file);

/// The random-vector instance described by `specs`, validated.
Instance to_instance(const InstanceFile& file);
/// Rank-one matrices for the partition commands: from "vectors" or "outer_products".
std::vector<HermitianMatrix> partition_outers(const InstanceFile& file);

nlohmann::ordered_json to_json(const Rational& q);
nlohmann::ordered_json to_json(const ComplexRational& z);
nlohmann::ordered_json to_json(const VectorC& v);
nlohmann::ordered_json to_json(const HermitianMatrix& m);
nlohmann::ordered_json to_json(const RootBracket& b);
/// Ascending coefficients.
nlohmann::ordered_json to_json(const UniPoly& p);

/// FNV-1a 64-bit digest of the input bytes, "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

}  // namespace interlace

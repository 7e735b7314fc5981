#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "quiver/datum.hpp"
#include "quiver/semigroup.hpp"

namespace quiver {

using Json = nlohmann::ordered_json;

struct ParseError : QuiverError {
  using QuiverError::QuiverError;
};

// Parsed instance file: quiver, datum pieces and optional relations.
struct InstanceDocument {
  QuiverPtr quiver;
  Representation rep;
  Weight sigma;
  std::vector<Relation> relations;
  bool had_float_entries = false;

  QuiverDatum datum() const { return QuiverDatum(rep, sigma); }
};

/// Strict parse: unknown fields are rejected with a field diagnostic; matrix
/// entries are integers or "p/q" strings, floats only when allow_floats.
InstanceDocument parse_instance(const Json& doc, bool allow_floats = false);
InstanceDocument parse_instance_text(const std::string& text,
                                     bool allow_floats = false);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j, bool allow_floats,
                                bool* saw_float);

/// Family document: SigmaSplit summary + per-entry index, path and block
/// (plus the dense matrix when requested).
Json family_to_json(const BlockMatrixFamily& f, bool dense = false);

struct FamilyDocumentEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t path_rank = 0;
  std::vector<std::string> path;
  long long q = 0;
  long long r = 0;
  RationalMatrix block;
  std::optional<RationalMatrix> dense;
};

struct FamilyDocument {
  long long n = 0;        // positive vertices
  long long m = 0;        // negative vertices
  long long block_rows = 0;   // M
  long long block_cols = 0;   // M'
  long long matrix_size = 0;  // N
  std::vector<long long> row_heights;
  std::vector<long long> col_widths;
  std::vector<FamilyDocumentEntry> entries;
};

FamilyDocument family_document_from_json(const Json& doc);

Json span_decision_to_json(const SpanDecision& d);
Json capacity_report_to_json(const CapacityReport& r);
Json weight_semigroup_to_json(const WeightSemigroupResult& r);
Json membership_report_to_json(const MembershipReport& r);
Json saturation_report_to_json(const SaturationReport& r);

std::uint64_t fnv1a64(const std::string& bytes);

/// Report envelope; everything except "timing" is deterministic for fixed
/// (input bytes, seed, flags).
Json make_report(const std::string& command, const std::string& input_path,
                 const std::string& input_bytes, std::uint64_t seed,
                 const Json& flags, const Json& result, double seconds);

}  // namespace quiver

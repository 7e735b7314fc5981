#include "quiver/json_io.hpp"

#include <cstdio>
#include <set>
#include <utility>

namespace quiver {

namespace {

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be a JSON object");
}

void reject_unknown_fields(const Json& j, const std::set<std::string>& known,
                           const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key)) {
      throw ParseError("unknown field '" + key + "' in " + where);
    }
  }
}

const Json& require_field(const Json& j, const std::string& key,
                          const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError("missing field '" + key + "' in " + where);
  }
  return *it;
}

Rational entry_from_json(const Json& j, bool allow_floats, bool* saw_float,
                         const std::string& where) {
  if (j.is_number_integer()) return Rational((long long)j.get<long long>());
  if (j.is_number_float()) {
    if (!allow_floats) {
      throw ParseError("float entry in " + where +
                       " (pass --inexact to accept floats)");
    }
    if (saw_float) *saw_float = true;
    return rational_from_double(j.get<double>());
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + " in " + where);
    }
  }
  throw ParseError("entry in " + where +
                   " must be an integer or a rational string");
}

long long integer_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    throw ParseError(where + " must be an integer");
  }
  return j.get<long long>();
}

}  // namespace

RationalMatrix matrix_from_json(const Json& j, bool allow_floats,
                                bool* saw_float) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    std::vector<Rational> entries;
    for (std::size_t k = 0; k < row.size(); ++k) {
      entries.push_back(entry_from_json(
          row[k], allow_floats, saw_float,
          "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
    rows.push_back(std::move(entries));
  }
  try {
    return RationalMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(rational_to_string(m.at(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

InstanceDocument parse_instance(const Json& doc, bool allow_floats) {
  require_object(doc, "instance");
  reject_unknown_fields(
      doc, {"quiver", "dimensions", "weight", "representation", "relations"},
      "instance");

  const Json& jq = require_field(doc, "quiver", "instance");
  require_object(jq, "quiver");
  reject_unknown_fields(jq, {"vertices", "arrows"}, "quiver");

  std::vector<std::string> vertices;
  for (const Json& v : require_field(jq, "vertices", "quiver")) {
    if (!v.is_string()) throw ParseError("vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Arrow> arrows;
  for (const Json& a : require_field(jq, "arrows", "quiver")) {
    require_object(a, "arrow");
    reject_unknown_fields(a, {"id", "tail", "head"}, "arrow");
    Arrow arrow;
    arrow.id = require_field(a, "id", "arrow").get<std::string>();
    arrow.tail = require_field(a, "tail", "arrow").get<std::string>();
    arrow.head = require_field(a, "head", "arrow").get<std::string>();
    arrows.push_back(std::move(arrow));
  }
  QuiverPtr quiver;
  try {
    quiver = std::make_shared<const Quiver>(std::move(vertices),
                                            std::move(arrows));
  } catch (const QuiverError& e) {
    throw ParseError(std::string("bad quiver: ") + e.what());
  }

  auto vertex_map = [&](const Json& j,
                        const std::string& where) -> std::map<std::string, long long> {
    require_object(j, where);
    std::map<std::string, long long> out;
    for (const auto& [key, value] : j.items()) {
      out[key] = integer_from_json(value, where + "['" + key + "']");
    }
    return out;
  };

  bool saw_float = false;
  try {
    DimensionVector beta(*quiver,
                         vertex_map(require_field(doc, "dimensions",
                                                  "instance"),
                                    "dimensions"));
    Weight sigma(*quiver,
                 vertex_map(require_field(doc, "weight", "instance"),
                            "weight"));

    const Json& jrep = require_field(doc, "representation", "instance");
    require_object(jrep, "representation");
    std::map<std::string, RationalMatrix> matrices;
    for (const auto& [arrow_id, jmat] : jrep.items()) {
      RationalMatrix m = matrix_from_json(jmat, allow_floats, &saw_float);
      std::size_t ai = quiver->arrow_index(arrow_id);
      const Arrow& a = quiver->arrows()[ai];
      std::size_t want_rows =
          (std::size_t)beta[quiver->vertex_index(a.head)];
      std::size_t want_cols =
          (std::size_t)beta[quiver->vertex_index(a.tail)];
      // [] stands for any matrix with 0 rows; take the width from beta.
      if (m.rows() == 0 && want_rows == 0) {
        m = RationalMatrix(0, want_cols);
      }
      matrices.emplace(arrow_id, std::move(m));
    }

    Representation rep(quiver, std::move(beta), matrices);

    std::vector<Relation> relations;
    if (doc.contains("relations")) {
      const Json& jrels = doc["relations"];
      if (!jrels.is_array()) throw ParseError("relations must be an array");
      for (const Json& jrel : jrels) {
        require_object(jrel, "relation");
        reject_unknown_fields(jrel, {"terms"}, "relation");
        std::vector<PathTerm> terms;
        for (const Json& jterm : require_field(jrel, "terms", "relation")) {
          require_object(jterm, "relation term");
          reject_unknown_fields(jterm, {"coeff", "path"}, "relation term");
          Rational coeff = entry_from_json(
              require_field(jterm, "coeff", "relation term"), allow_floats,
              &saw_float, "relation coefficient");
          std::vector<std::string> ids;
          for (const Json& id : require_field(jterm, "path", "relation term")) {
            ids.push_back(id.get<std::string>());
          }
          terms.push_back({std::move(coeff), Path(*quiver, std::move(ids))});
        }
        relations.emplace_back(*quiver, std::move(terms));
      }
    }

    InstanceDocument out{quiver, std::move(rep), std::move(sigma),
                         std::move(relations), saw_float};
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const QuiverError& e) {
    throw ParseError(e.what());
  }
}

InstanceDocument parse_instance_text(const std::string& text,
                                     bool allow_floats) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(doc, allow_floats);
}

Json family_to_json(const BlockMatrixFamily& f, bool dense) {
  const SigmaSplit& s = f.split();
  Json split{{"positive", s.positive},
             {"negative", s.negative},
             {"sigma_plus", s.sigma_plus},
             {"sigma_minus", s.sigma_minus},
             {"n", s.positive.size()},
             {"m", s.negative.size()},
             {"M", s.block_rows},
             {"M_prime", s.block_cols},
             {"N", s.matrix_size},
             {"family_size", f.size()}};
  Json entries = Json::array();
  for (std::size_t k = 0; k < f.size(); ++k) {
    const FamilyEntry& e = f.entries()[k];
    Json je{{"i", e.i},       {"j", e.j}, {"path_rank", e.path_rank},
            {"path", e.path.arrows()},   {"q", e.q},
            {"r", e.r},       {"block", matrix_to_json(e.block)}};
    if (dense) je["matrix"] = matrix_to_json(f.dense(k));
    entries.push_back(std::move(je));
  }
  return Json{{"sigma_split", std::move(split)},
              {"row_heights", f.row_heights()},
              {"col_widths", f.col_widths()},
              {"entries", std::move(entries)}};
}

FamilyDocument family_document_from_json(const Json& doc) {
  require_object(doc, "family document");
  reject_unknown_fields(doc, {"sigma_split", "row_heights", "col_widths",
                              "entries"},
                        "family document");
  FamilyDocument out;
  const Json& split = require_field(doc, "sigma_split", "family document");
  out.n = integer_from_json(require_field(split, "n", "sigma_split"), "n");
  out.m = integer_from_json(require_field(split, "m", "sigma_split"), "m");
  out.block_rows =
      integer_from_json(require_field(split, "M", "sigma_split"), "M");
  out.block_cols = integer_from_json(
      require_field(split, "M_prime", "sigma_split"), "M_prime");
  out.matrix_size =
      integer_from_json(require_field(split, "N", "sigma_split"), "N");
  for (const Json& h : require_field(doc, "row_heights", "family document")) {
    out.row_heights.push_back(integer_from_json(h, "row_heights"));
  }
  for (const Json& w : require_field(doc, "col_widths", "family document")) {
    out.col_widths.push_back(integer_from_json(w, "col_widths"));
  }
  for (const Json& je : require_field(doc, "entries", "family document")) {
    FamilyDocumentEntry entry;
    entry.i = (std::size_t)integer_from_json(require_field(je, "i", "entry"),
                                             "entry.i");
    entry.j = (std::size_t)integer_from_json(require_field(je, "j", "entry"),
                                             "entry.j");
    entry.path_rank = (std::size_t)integer_from_json(
        require_field(je, "path_rank", "entry"), "entry.path_rank");
    for (const Json& id : require_field(je, "path", "entry")) {
      entry.path.push_back(id.get<std::string>());
    }
    entry.q = integer_from_json(require_field(je, "q", "entry"), "entry.q");
    entry.r = integer_from_json(require_field(je, "r", "entry"), "entry.r");
    entry.block =
        matrix_from_json(require_field(je, "block", "entry"), false, nullptr);
    if (je.contains("matrix")) {
      entry.dense = matrix_from_json(je["matrix"], false, nullptr);
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

namespace {

std::string span_answer_name(SpanAnswer a) {
  return a == SpanAnswer::Yes ? "YES" : "NO";
}

std::string span_method_name(SpanMethod m) {
  switch (m) {
    case SpanMethod::Randomized: return "randomized";
    case SpanMethod::Symbolic: return "symbolic";
    default: return "structural";
  }
}

std::string capacity_decision_name(CapacityDecision d) {
  switch (d) {
    case CapacityDecision::Positive: return "POSITIVE";
    case CapacityDecision::Zero: return "ZERO";
    default: return "INCONCLUSIVE";
  }
}

}  // namespace

Json span_decision_to_json(const SpanDecision& d) {
  Json out{{"answer", span_answer_name(d.answer)},
           {"method", span_method_name(d.method)},
           {"weight_scale", d.weight_scale},
           {"matrix_size", d.matrix_size},
           {"family_size", d.family_size}};
  if (d.answer == SpanAnswer::Yes) {
    out["certificate"] = Json{
        {"coefficients", d.certificate},
        {"determinant", rational_to_string(d.certificate_det)}};
  } else {
    out["proven_zero"] = d.proven_zero;
    out["failure_probability"] = d.failure_probability;
  }
  return out;
}

Json capacity_report_to_json(const CapacityReport& r) {
  Json out{{"decision", capacity_decision_name(r.decision)},
           {"iterations", r.iterations},
           {"final_ds", r.final_ds}};
  if (r.capacity_estimate) out["capacity_estimate"] = *r.capacity_estimate;
  out["diagnostics"] = Json{{"min_eigenvalue_ratio", r.min_eigenvalue_ratio},
                            {"clamp_events", r.clamp_events},
                            {"monotonicity_violation",
                             r.monotonicity_violation}};
  return out;
}

Json weight_semigroup_to_json(const WeightSemigroupResult& r) {
  Json out;
  switch (r.answer) {
    case WeightSemigroupAnswer::Yes: out["answer"] = "YES"; break;
    case WeightSemigroupAnswer::No: out["answer"] = "NO"; break;
    default: out["answer"] = "UNSUPPORTED"; break;
  }
  if (r.answer != WeightSemigroupAnswer::Unsupported) {
    out["alpha"] = r.alpha;
    out["support"] = r.support;
  }
  return out;
}

Json membership_report_to_json(const MembershipReport& r) {
  return Json{{"sigma", r.sigma},
              {"sigma_in_orbit_semigroup", span_decision_to_json(r.sigma_in_s)},
              {"semistable", capacity_report_to_json(r.semistable)},
              {"weight_semigroup", weight_semigroup_to_json(r.weight_semigroup)}};
}

Json saturation_report_to_json(const SaturationReport& r) {
  Json out;
  switch (r.status) {
    case SaturationStatus::ConsistentErp:
      out["status"] = "CONSISTENT_ERP";
      break;
    case SaturationStatus::WitnessedNonSaturated:
      out["status"] = "WITNESSED_NON_SATURATED";
      break;
    default:
      out["status"] = "INCONCLUSIVE";
      break;
  }
  if (r.witness_n) out["witness_n"] = *r.witness_n;
  Json per_n = Json::array();
  for (const auto& d : r.per_n) per_n.push_back(span_decision_to_json(d));
  out["per_n"] = std::move(per_n);
  out["capacity"] = capacity_report_to_json(r.capacity);
  return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Json make_report(const std::string& command, const std::string& input_path,
                 const std::string& input_bytes, std::uint64_t seed,
                 const Json& flags, const Json& result, double seconds) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "fnv1a64:%016llx",
                (unsigned long long)fnv1a64(input_bytes));
  return Json{{"tool", "qedmonds"},
              {"version", "0.1.0"},
              {"command", command},
              {"input", Json{{"path", input_path}, {"hash", hash}}},
              {"seed", seed},
              {"flags", flags},
              {"result", result},
              {"timing", Json{{"total_seconds", seconds}}}};
}

}  // namespace quiver

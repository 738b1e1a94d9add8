#include "coxiter/json_io.hpp"

#include <sstream>

#include "coxiter/class_group.hpp"
#include "coxiter/criteria.hpp"
#include "coxiter/errors.hpp"

namespace coxiter {

const char* const kRepresentativeNotice =
    "coefficient matrix of iterated data is a deterministic representative; "
    "all reported invariants depend only on the exponent matrix";

namespace {

Rational parse_rational(const json& j, const std::string& path) {
  if (!j.is_string())
    throw ParseError(path, "expected a rational string \"p/q\" or \"p\"");
  const std::string s = j.get<std::string>();
  Rational q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError(path, "malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError(path, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();  // falls back to a string beyond int64 range
}

}  // namespace

json group_to_json(const AbelianGroupInvariants& g) {
  json torsion = json::array();
  for (const Int& d : g.torsion) torsion.push_back(int_to_json(d));
  return json{{"rank", g.rank}, {"torsion", torsion}};
}

DatumDocument parse_datum_document(const json& j) {
  if (!j.is_object()) throw ParseError("", "expected a JSON object");
  DatumDocument doc;
  RingDatum& d = doc.datum;

  if (!j.contains("type") || !j["type"].is_number_integer())
    throw ParseError("type", "expected integer 1 or 2");
  const int type = j["type"].get<int>();
  if (type != 1 && type != 2) throw ParseError("type", "expected 1 or 2");
  d.type = type == 1 ? RingType::type1 : RingType::type2;

  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw ParseError("blocks", "expected an array of integer arrays");
  for (std::size_t i = 0; i < j["blocks"].size(); ++i) {
    const json& b = j["blocks"][i];
    const std::string path = "blocks[" + std::to_string(i) + "]";
    if (!b.is_array()) throw ParseError(path, "expected an integer array");
    ExponentBlock block;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!b[k].is_number_integer())
        throw ParseError(path + "[" + std::to_string(k) + "]",
                         "expected an integer");
      block.push_back(b[k].get<long long>());
    }
    d.blocks.push_back(std::move(block));
  }

  if (j.contains("m")) {
    if (!j["m"].is_number_integer() || j["m"].get<long long>() < 0)
      throw ParseError("m", "expected a nonnegative integer");
    d.m = j["m"].get<std::size_t>();
  }

  if (!j.contains("A") || !j["A"].is_array())
    throw ParseError("A", "expected an array of coefficients");
  const json& a = j["A"];
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string path = "A[" + std::to_string(i) + "]";
    if (d.type == RingType::type2) {
      if (!a[i].is_array() || a[i].size() != 2)
        throw ParseError(path, "expected a pair of rational strings");
      d.coeff_columns.push_back({parse_rational(a[i][0], path + "[0]"),
                                 parse_rational(a[i][1], path + "[1]")});
    } else {
      d.coeff_values.push_back(parse_rational(a[i], path));
    }
  }

  if (j.contains("metadata")) {
    if (!j["metadata"].is_object())
      throw ParseError("metadata", "expected a string map");
    for (const auto& [key, value] : j["metadata"].items()) {
      if (!value.is_string())
        throw ParseError("metadata." + key, "expected a string value");
      doc.metadata[key] = value.get<std::string>();
    }
  }

  validate_datum(d);
  return doc;
}

json to_json(const DatumDocument& doc) {
  const RingDatum& d = doc.datum;
  json a = json::array();
  if (d.type == RingType::type2) {
    for (const auto& col : d.coeff_columns)
      a.push_back({col[0].get_str(), col[1].get_str()});
  } else {
    for (const auto& v : d.coeff_values) a.push_back(v.get_str());
  }
  json j{{"type", d.type == RingType::type1 ? 1 : 2},
         {"blocks", d.blocks},
         {"m", d.m},
         {"A", a}};
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j;
}

namespace {

json bpt_or_null(const RingDatum& d) {
  if (d.type == RingType::type2 && is_hyperplatonic(d)) {
    auto t = basic_platonic_triple(d).entries;
    return json::array({t[0], t[1], t[2]});
  }
  return nullptr;
}

}  // namespace

json analysis_report(const RingDatum& d) {
  json degrees = json::object();
  GradingData grading = variable_degrees(d);
  for (const auto& [label, vec] : grading.degrees) {
    json coords = json::array();
    for (const Int& c : vec) coords.push_back(int_to_json(c));
    degrees[label] = coords;
  }
  const bool type2 = d.type == RingType::type2;
  return json{
      {"block_gcds", block_gcds(d)},
      {"rationality_case", rationality_case(d).to_string()},
      {"rational", is_rational(d)},
      {"hyperplatonic", type2 ? json(is_hyperplatonic(d)) : json(nullptr)},
      {"bpt", bpt_or_null(d)},
      {"class_group", group_to_json(grading.group)},
      {"degrees", degrees},
      {"relations", render_relations(d)},
  };
}

std::string analysis_table(const RingDatum& d) {
  const json r = analysis_report(d);
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << key;
    for (std::size_t i = key.size(); i < 18; ++i) out << ' ';
    out << value << "\n";
  };
  row("block gcds", r["block_gcds"].dump());
  row("rationality case", r["rationality_case"].get<std::string>());
  row("hyperplatonic", r["hyperplatonic"].dump());
  row("bpt", r["bpt"].dump());
  row("class group", r["class_group"].dump());
  for (const auto& rel : r["relations"])
    row("relation", rel.get<std::string>());
  for (const auto& [label, vec] : r["degrees"].items())
    row("deg " + label, vec.dump());
  return out.str();
}

json chain_document(const IterationChain& chain, const ChainFamily& family) {
  json steps = json::array();
  for (const auto& step : chain.steps) {
    json b = nullptr;
    if (step.bpt) {
      const auto& t = step.bpt->entries;
      b = json::array({t[0], t[1], t[2]});
    }
    steps.push_back(json{
        {"datum", to_json(DatumDocument{step.datum, {}})},
        {"bpt", b},
        {"class_group", group_to_json(step.class_group)},
        {"rationality_case", step.rationality.to_string()},
    });
  }
  return json{{"steps", steps},
              {"family", family.to_string()},
              {"warnings", json::array({kRepresentativeNotice})}};
}

std::string chain_table(const IterationChain& chain,
                        const ChainFamily& family) {
  std::ostringstream out;
  out << "step  bpt        class group             rationality\n";
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& step = chain.steps[i];
    std::string bpt = step.bpt ? step.bpt->to_string() : "-";
    std::string cg = group_to_json(step.class_group).dump();
    out << i << "     " << bpt;
    for (std::size_t k = bpt.size(); k < 11; ++k) out << ' ';
    out << cg;
    for (std::size_t k = cg.size(); k < 22; ++k) out << ' ';
    out << "  " << step.rationality.to_string() << "\n";
  }
  out << "family: " << family.to_string() << "\n";
  return out.str();
}

}  // namespace coxiter

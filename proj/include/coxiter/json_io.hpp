#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "coxiter/iteration.hpp"
#include "coxiter/ring_datum.hpp"

namespace coxiter {

using json = nlohmann::json;

// JSON interchange form of a ring datum. Rationals travel as strings
// "p/q" (integers as "p"), always in lowest terms.
struct DatumDocument {
  RingDatum datum;
  std::map<std::string, std::string> metadata;

  bool operator==(const DatumDocument&) const = default;
};

// Throws ParseError (with a field path) on malformed documents and the
// usual ValidationError subclasses on structurally invalid data.
DatumDocument parse_datum_document(const json& j);

json to_json(const DatumDocument& doc);

// Aggregated analysis report: block gcds, rationality case, hyperplatonic
// flag, bpt, class group, variable degrees, rendered relations.
json analysis_report(const RingDatum& d);
std::string analysis_table(const RingDatum& d);

json chain_document(const IterationChain& chain, const ChainFamily& family);
std::string chain_table(const IterationChain& chain,
                        const ChainFamily& family);

json group_to_json(const AbelianGroupInvariants& g);

// Notice attached to every iterate/convert output.
extern const char* const kRepresentativeNotice;

}  // namespace coxiter

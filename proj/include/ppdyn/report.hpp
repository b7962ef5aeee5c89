#pragma once

#include "ppdyn/plane_partition.hpp"
#include "ppdyn/poset.hpp"
#include "ppdyn/qpoly.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace ppdyn {

using Json = nlohmann::ordered_json;

// One checked identity: an operator word (or named property), the exact
// predicted value and the observed value as decimal strings (a prediction
// that is not a rational integer is rendered as a residue expression).
struct CheckRow {
  std::string label;
  std::string predicted;
  std::string observed;
  bool match = false;
};

// Result of one verification run over one family.
struct VerifyReport {
  std::string family;     // e.g. "pp 3x2 bound 4"
  std::string statement;  // what is being verified
  std::string polynomial; // sieving polynomial, when there is one
  int order = 0;          // order of the root of unity, when relevant
  std::vector<CheckRow> rows;
  // (orbit size, number of orbits) pairs for the underlying cyclic operator,
  // sorted by size; empty when not computed.
  std::vector<std::pair<long long, long long>> orbit_sizes;
  bool all_match = true;
  double elapsed_ms = 0.0;

  void add(std::string label, std::string predicted, std::string observed);
  void add_bool(std::string label, bool ok);
};

Json report_to_json(const VerifyReport& r, bool with_timings);
Json reports_to_json(const std::vector<VerifyReport>& rs, bool with_timings);
std::string reports_to_csv(const std::vector<VerifyReport>& rs);
std::string reports_to_table(const std::vector<VerifyReport>& rs, bool with_timings);

// Data serializers used by the enumeration and polynomial subcommands.
Json pp_to_json(const PlanePartition& p);
Json labeling_to_json(const Poset& P, const Labeling& v, int m);
Json poset_to_json(const Poset& P);
Json polynomial_to_json(const IntPolynomial& p);
Json formula_to_json(const ProductFormula& f);

}  // namespace ppdyn

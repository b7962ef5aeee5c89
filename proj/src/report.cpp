#include "ppdyn/report.hpp"

#include <algorithm>
#include <sstream>

namespace ppdyn {

void VerifyReport::add(std::string label, std::string predicted, std::string observed) {
  CheckRow row;
  row.label = std::move(label);
  row.predicted = std::move(predicted);
  row.observed = std::move(observed);
  row.match = row.predicted == row.observed;
  if (!row.match) all_match = false;
  rows.push_back(std::move(row));
}

void VerifyReport::add_bool(std::string label, bool ok) {
  add(std::move(label), "true", ok ? "true" : "false");
}

Json report_to_json(const VerifyReport& r, bool with_timings) {
  Json j;
  j["family"] = r.family;
  j["statement"] = r.statement;
  if (!r.polynomial.empty()) j["polynomial"] = r.polynomial;
  if (r.order > 0) j["order"] = r.order;
  Json rows = Json::array();
  for (const CheckRow& row : r.rows) {
    Json jr;
    jr["label"] = row.label;
    jr["predicted"] = row.predicted;
    jr["observed"] = row.observed;
    jr["match"] = row.match;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  if (!r.orbit_sizes.empty()) {
    Json hist = Json::array();
    for (auto [size, count] : r.orbit_sizes) hist.push_back(Json::array({size, count}));
    j["orbit_sizes"] = std::move(hist);
  }
  j["all_match"] = r.all_match;
  if (with_timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json reports_to_json(const std::vector<VerifyReport>& rs, bool with_timings) {
  Json j;
  j["schema"] = 1;
  Json arr = Json::array();
  bool all = true;
  for (const VerifyReport& r : rs) {
    if (!r.all_match) all = false;
    arr.push_back(report_to_json(r, with_timings));
  }
  j["reports"] = std::move(arr);
  j["all_match"] = all;
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string reports_to_csv(const std::vector<VerifyReport>& rs) {
  std::ostringstream out;
  out << "family,label,predicted,observed,match\n";
  for (const VerifyReport& r : rs)
    for (const CheckRow& row : r.rows)
      out << csv_escape(r.family) << ',' << csv_escape(row.label) << ','
          << csv_escape(row.predicted) << ',' << csv_escape(row.observed) << ','
          << (row.match ? "true" : "false") << '\n';
  return out.str();
}

std::string reports_to_table(const std::vector<VerifyReport>& rs, bool with_timings) {
  std::ostringstream out;
  for (const VerifyReport& r : rs) {
    out << "== " << r.family << " ==\n";
    out << r.statement << "\n";
    if (!r.polynomial.empty()) out << "polynomial: " << r.polynomial << "\n";
    if (r.order > 0) out << "root order: " << r.order << "\n";
    size_t wl = 5, wp = 9, wo = 8;
    for (const CheckRow& row : r.rows) {
      wl = std::max(wl, row.label.size());
      wp = std::max(wp, row.predicted.size());
      wo = std::max(wo, row.observed.size());
    }
    auto pad = [](const std::string& s, size_t w) {
      return s + std::string(w - s.size(), ' ');
    };
    out << pad("label", wl) << "  " << pad("predicted", wp) << "  " << pad("observed", wo)
        << "  match\n";
    for (const CheckRow& row : r.rows)
      out << pad(row.label, wl) << "  " << pad(row.predicted, wp) << "  "
          << pad(row.observed, wo) << "  " << (row.match ? "yes" : "NO") << "\n";
    if (!r.orbit_sizes.empty()) {
      out << "orbit sizes:";
      for (auto [size, count] : r.orbit_sizes) out << " " << size << "x" << count;
      out << "\n";
    }
    out << (r.all_match ? "ALL MATCH" : "MISMATCH");
    if (with_timings) out << "  (" << r.elapsed_ms << " ms)";
    out << "\n\n";
  }
  return out.str();
}

Json pp_to_json(const PlanePartition& p) {
  Json j;
  j["a"] = p.rows();
  j["b"] = p.cols();
  j["m"] = p.bound();
  Json rows = Json::array();
  for (const auto& row : p.to_rows()) rows.push_back(row);
  j["entries"] = std::move(rows);
  return j;
}

Json labeling_to_json(const Poset& P, const Labeling& v, int m) {
  Json j;
  j["poset"] = P.name();
  j["m"] = m;
  j["values"] = v;
  return j;
}

Json poset_to_json(const Poset& P) {
  Json j;
  j["poset"] = P.name();
  j["size"] = P.size();
  Json covers = Json::array();
  for (auto [lo, hi] : P.covers()) covers.push_back(Json::array({lo, hi}));
  j["covers"] = std::move(covers);
  if (P.has_coords()) {
    Json coords = Json::array();
    for (int id = 0; id < P.size(); ++id) {
      auto [i, jj] = P.coords(id);
      coords.push_back(Json::array({i, jj}));
    }
    j["coords"] = std::move(coords);
  }
  return j;
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json j;
  Json coeffs = Json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = std::move(coeffs);  // low degree first, decimal strings
  j["degree"] = p.degree();
  return j;
}

Json formula_to_json(const ProductFormula& f) {
  Json j;
  j["num"] = f.num();  // exponents e of factors (1 - q^e)
  j["den"] = f.den();
  return j;
}

}  // namespace ppdyn

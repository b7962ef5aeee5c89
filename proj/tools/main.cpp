#include "ppdyn/plane_partition.hpp"
#include "ppdyn/poset.hpp"
#include "ppdyn/qpoly.hpp"
#include "ppdyn/report.hpp"
#include "ppdyn/sieve.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace ppdyn;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Dims {
  int a = -1;
  int b = -1;
  int n = -1;
  int m = -1;
};

int need(int value, const char* flag) {
  if (value < 0) throw UsageError(std::string("missing required option ") + flag);
  return value;
}

void print_reports(const std::vector<VerifyReport>& reports, const std::string& format,
                   bool timings) {
  if (format == "json")
    std::cout << reports_to_json(reports, timings).dump(2) << "\n";
  else if (format == "csv")
    std::cout << reports_to_csv(reports);
  else
    std::cout << reports_to_table(reports, timings);
}

std::vector<VerifyReport> run_verify(const std::string& selector, const Dims& d,
                                     const SieveOptions& opt) {
  std::vector<VerifyReport> out;
  if (selector == "ppart-csp") {
    out.push_back(verify_promotion_csp(need(d.a, "-a"), need(d.b, "-b"), need(d.m, "-m"), opt));
  } else if (selector == "row-csp-family") {
    int a = need(d.a, "-a"), b = need(d.b, "-b"), m = need(d.m, "-m");
    out.push_back(verify_rowmotion_csp(a, b, m, opt));
    out.push_back(verify_complement_row_csp(a, b, m, opt));
    if (a == b) {
      out.push_back(verify_transpose_row_csp(a, m, opt));
      out.push_back(verify_trco_row_csp(a, m, opt));
    }
  } else if (selector == "com-csp") {
    out.push_back(verify_complement_csp(need(d.a, "-a"), need(d.b, "-b"), need(d.m, "-m"), opt));
  } else if (selector == "tr-csp") {
    out.push_back(verify_transpose_csp(need(d.n, "-n"), need(d.m, "-m"), opt));
  } else if (selector == "trcom-csp") {
    out.push_back(verify_trco_csp(need(d.n, "-n"), need(d.m, "-m"), opt));
  } else if (selector == "qneg-family") {
    out.push_back(verify_qneg_family(need(d.n, "-n"), need(d.m, "-m"), opt));
  } else if (selector == "cy-bijection") {
    out.push_back(verify_cy(need(d.n, "-n"), need(d.m, "-m"), opt));
  } else if (selector == "reciprocity") {
    out.push_back(verify_reciprocity(need(d.a, "-a"), need(d.b, "-b"), need(d.m, "-m"), opt));
  } else if (selector == "lemma-identities") {
    out.push_back(
        verify_operator_identities(need(d.a, "-a"), need(d.b, "-b"), need(d.m, "-m"), opt));
  } else if (selector == "bijection-suite") {
    int a = need(d.a, "-a"), b = need(d.b, "-b"), m = need(d.m, "-m");
    out.push_back(verify_bijections(a, b, m, opt));
    out.push_back(verify_genfun(a, b, m, opt));
  } else if (selector == "conj-tall") {
    int n = need(d.n, "-n"), m = need(d.m, "-m");
    out.push_back(verify_tall_embedding(n, m, opt));
    out.push_back(verify_tall_conjecture(n, m, false, opt));
    out.push_back(verify_tall_conjecture(n, m, true, opt));
  } else if (selector == "conj-wide") {
    int n = need(d.n, "-n"), m = need(d.m, "-m");
    out.push_back(verify_wide_embedding(n + 1, m, opt));
    out.push_back(verify_wide_conjecture(n, m, false, opt));
    out.push_back(verify_wide_conjecture(n, m, true, opt));
  } else if (selector == "conj-corner") {
    int n = need(d.n, "-n"), m = need(d.m, "-m");
    out.push_back(verify_corner_embedding(n, m, opt));
    out.push_back(verify_corner_conjecture(n, m, false, opt));
    out.push_back(verify_corner_conjecture(n, m, true, opt));
  } else {
    throw UsageError("unknown verify selector: " + selector);
  }
  return out;
}

int run_enumerate(const std::string& family, const Dims& d, long long limit,
                  const std::string& format, const SieveOptions& opt) {
  Json items = Json::array();
  long long emitted = 0;
  auto want_more = [&]() { return limit <= 0 || emitted < limit; };

  if (family == "rect" || family == "sym") {
    int m = need(d.m, "-m");
    std::vector<PlanePartition> members =
        family == "rect" ? all_pp(need(d.a, "-a"), need(d.b, "-b"), m, opt)
                         : all_symmetric_pp(need(d.n, "-n"), m, opt);
    for (const PlanePartition& p : members) {
      if (!want_more()) break;
      ++emitted;
      if (format == "json")
        items.push_back(pp_to_json(p));
      else
        std::cout << p.to_string() << "\n";
    }
  } else if (family == "tall" || family == "wide" || family == "corner") {
    int n = need(d.n, "-n"), m = need(d.m, "-m");
    Poset P = family == "tall" ? Poset::tall(n)
              : family == "wide" ? Poset::wide(n)
                                 : Poset::corner(n);
    for_each_labeling(P, m, [&](const Labeling& v) {
      if (static_cast<long long>(emitted) >= opt.cap)
        throw CapExceeded(BigInt(opt.cap) + 1, opt.cap);
      if (!want_more()) return;
      ++emitted;
      if (format == "json")
        items.push_back(labeling_to_json(P, v, m));
      else {
        std::string line;
        for (int x : v) line += std::to_string(x) + " ";
        std::cout << line << "\n";
      }
    });
  } else {
    throw UsageError("unknown family: " + family);
  }

  if (format == "json") {
    Json doc;
    doc["schema"] = 1;
    doc["family"] = family;
    doc["count"] = emitted;
    doc["items"] = items;
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

int run_poly(const std::string& name, const Dims& d, int eval_order, long long eval_power,
             const std::string& format) {
  ProductFormula f;
  if (name == "mac")
    f = mac_formula(need(d.a, "-a"), need(d.b, "-b"), need(d.m, "-m"));
  else if (name == "symmac")
    f = symmac_formula(need(d.n, "-n"), need(d.m, "-m"));
  else if (name == "symmac-prime")
    f = symmac_prime_formula(need(d.n, "-n"), need(d.m, "-m"));
  else if (name == "qbinom")
    f = q_binomial_formula(need(d.n, "-n"), need(d.a, "-a"));
  else if (name == "tall")
    f = tall_conjecture_formula(need(d.n, "-n"), need(d.m, "-m"));
  else if (name == "wide")
    f = wide_conjecture_formula(need(d.n, "-n"), need(d.m, "-m"));
  else if (name == "corner")
    f = corner_conjecture_formula(need(d.n, "-n"), need(d.m, "-m"));
  else
    throw UsageError("unknown polynomial name: " + name);

  IntPolynomial p = f.expand();
  if (format == "json") {
    Json doc;
    doc["schema"] = 1;
    doc["name"] = name;
    doc["formula"] = formula_to_json(f);
    doc["polynomial"] = polynomial_to_json(p);
    doc["value_at_1"] = p.eval_one().str();
    if (eval_order > 0) {
      CyclotomicElement e = evaluate_at_root(p, eval_order, eval_power);
      Json ev;
      ev["root_order"] = eval_order;
      ev["power"] = eval_power;
      auto v = e.as_integer();
      ev["integer"] = v ? Json(v->str()) : Json(nullptr);
      ev["residue"] = e.to_string();
      doc["evaluation"] = ev;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << name << " = " << p.to_string() << "\n";
    std::cout << "value at q=1: " << p.eval_one().str() << "\n";
    if (eval_order > 0) {
      CyclotomicElement e = evaluate_at_root(p, eval_order, eval_power);
      std::cout << "value at root of order " << eval_order << " to the power " << eval_power
                << ": " << e.to_string() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration and sieving checks for bounded plane partitions"};
  app.require_subcommand(1);

  Dims dims;
  std::string format = "table";
  bool timings = false;
  SieveOptions opt;
  if (const char* env = std::getenv("PPDYN_CAP")) {
    long long v = std::atoll(env);
    if (v > 0) opt.cap = v;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-a", dims.a, "number of rows");
    sub->add_option("-b", dims.b, "number of columns");
    sub->add_option("-n", dims.n, "square / triangle size");
    sub->add_option("-m", dims.m, "entry bound");
    sub->add_option("--format", format, "output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--workers", opt.workers, "worker threads (0 = all, 1 = serial)");
    sub->add_option("--cap", opt.cap, "largest family size to enumerate")
        ->capture_default_str();
    sub->add_flag("--timings", timings, "include wall-clock timings in the output");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string selector;
  verify->add_option("selector", selector, "which identity family to check")->required();
  add_common(verify);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list the members of a family");
  std::string family;
  long long limit = 0;
  enumerate->add_option("family", family, "rect, sym, tall, wide or corner")->required();
  enumerate->add_option("--limit", limit, "emit at most this many members (0 = all)");
  add_common(enumerate);

  CLI::App* poly = app.add_subcommand("poly", "print a product formula and its expansion");
  std::string name;
  int eval_order = 0;
  long long eval_power = 0;
  poly->add_option("name", name,
                   "mac, symmac, symmac-prime, qbinom, tall, wide or corner")
      ->required();
  poly->add_option("--eval-order", eval_order, "evaluate at a root of unity of this order");
  poly->add_option("--eval-power", eval_power, "power of the root to use");
  add_common(poly);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      std::vector<VerifyReport> reports = run_verify(selector, dims, opt);
      print_reports(reports, format, timings);
      bool ok = true;
      for (const VerifyReport& r : reports) ok = ok && r.all_match;
      return ok ? 0 : 1;
    }
    if (enumerate->parsed()) return run_enumerate(family, dims, limit, format, opt);
    if (poly->parsed()) return run_poly(name, dims, eval_order, eval_power, format);
  } catch (const ppdyn::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include "gfactor/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <json.hpp>

#include "gfactor/errors.hpp"
#include "gfactor/factor.hpp"
#include "gfactor/fgbg.hpp"
#include "gfactor/io.hpp"
#include "gfactor/ncgb.hpp"

namespace gfactor::cli {

namespace {

using nlohmann::ordered_json;

/// Bad user input that is not a syntax error; reported with exit code 1.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string algebra;
  std::string poly;
  std::string ideal;
  std::string constraints;
  bool first = false;
  bool json = false;
  bool timing = false;
};

ordered_json strings(const std::vector<NcPolynomial>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& f : v) a.push_back(to_string(f));
  return a;
}

std::string product_text(const std::vector<NcPolynomial>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? " * (" : "(") + to_string(v[k]) + ")";
  return s;
}

NcPolynomial nonconstant(const std::string& text, const AlgebraPtr& alg) {
  NcPolynomial f = parse_poly(text, alg);
  if (f.is_zero()) throw UsageError("zero input");
  if (f.is_constant()) throw UsageError("scalar input");
  return f;
}

ordered_json header(const char* command, const AlgebraPtr& alg) {
  return {{"command", command}, {"algebra", alg->name()}};
}

void emit(std::ostream& out, ordered_json doc, const Options& o,
          std::chrono::steady_clock::time_point start) {
  if (o.timing)
    doc["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  out << doc.dump(2) << "\n";
}

void timing_line(std::ostream& out, const Options& o,
                 std::chrono::steady_clock::time_point start) {
  if (!o.timing) return;
  out << "time: "
      << std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
             .count()
      << " ms\n";
}

void cmd_factor(const Options& o, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  AlgebraPtr alg = load_algebra_file(o.algebra);
  NcPolynomial f = nonconstant(o.poly, alg);
  Factorizer fac(alg);
  auto result = fac.factorize(f);
  Rational unit = result.empty() ? Rational(1) : result.front().unit;
  if (o.json) {
    ordered_json doc = header("factor", alg);
    doc["input"] = to_string(f);
    doc["unit"] = to_string(unit);
    ordered_json list = ordered_json::array();
    for (const auto& r : result) list.push_back(strings(r.factors));
    doc["factorizations"] = std::move(list);
    doc["warnings"] = fac.warnings();
    emit(out, std::move(doc), o, start);
    return;
  }
  out << "input: " << to_string(f) << "\n";
  out << "unit: " << to_string(unit) << "\n";
  for (std::size_t k = 0; k < result.size(); ++k)
    out << "factorization " << k + 1 << ": "
        << product_text(result[k].factors) << "\n";
  for (const auto& w : fac.warnings()) out << "warning: " << w << "\n";
  timing_line(out, o, start);
}

void cmd_irreducible(const Options& o, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  AlgebraPtr alg = load_algebra_file(o.algebra);
  NcPolynomial f = nonconstant(o.poly, alg);
  Factorizer fac(alg);
  bool irr = fac.is_irreducible(f);
  if (o.json) {
    ordered_json doc = header("irreducible", alg);
    doc["input"] = to_string(f);
    doc["irreducible"] = irr;
    doc["warnings"] = fac.warnings();
    emit(out, std::move(doc), o, start);
    return;
  }
  out << (irr ? "irreducible" : "reducible") << "\n";
  for (const auto& w : fac.warnings()) out << "warning: " << w << "\n";
  timing_line(out, o, start);
}

void cmd_mul(const Options& o, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  AlgebraPtr alg = load_algebra_file(o.algebra);
  auto factors = parse_poly_list(o.poly, alg);
  NcPolynomial p = product(factors);
  if (o.json) {
    ordered_json doc = header("mul", alg);
    doc["input"] = strings(factors);
    doc["product"] = to_string(p);
    emit(out, std::move(doc), o, start);
    return;
  }
  out << to_string(p) << "\n";
  timing_line(out, o, start);
}

void cmd_nf(const Options& o, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  AlgebraPtr alg = load_algebra_file(o.algebra);
  NcPolynomial f = parse_poly(o.poly, alg);
  auto gens = parse_poly_list(o.ideal, alg);
  LeftBasis gb = left_groebner(gens);
  NcPolynomial r = nf_left(f, gb);
  if (o.json) {
    ordered_json doc = header("nf", alg);
    doc["input"] = to_string(f);
    doc["ideal"] = strings(gens);
    doc["basis"] = strings(gb.elements);
    doc["normal_form"] = to_string(r);
    emit(out, std::move(doc), o, start);
    return;
  }
  out << to_string(r) << "\n";
  timing_line(out, o, start);
}

void cmd_gb(const Options& o, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  AlgebraPtr alg = load_algebra_file(o.algebra);
  auto gens = parse_poly_list(o.ideal, alg);
  LeftBasis gb = left_groebner(gens);
  if (o.json) {
    ordered_json doc = header("gb", alg);
    doc["ideal"] = strings(gens);
    doc["basis"] = strings(gb.elements);
    emit(out, std::move(doc), o, start);
    return;
  }
  for (const auto& g : gb.elements) out << to_string(g) << "\n";
  timing_line(out, o, start);
}

void cmd_fgbg(const Options& o, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  AlgebraPtr alg = load_algebra_file(o.algebra);
  auto gens = parse_poly_list(o.ideal, alg);
  std::vector<NcPolynomial> cons;
  if (!o.constraints.empty()) cons = parse_poly_list(o.constraints, alg);
  Factorizer fac(alg);
  std::vector<ConstrainedTuple> tuples;
  if (o.first) {
    if (auto t = fgbg_first(gens, cons, fac)) tuples.push_back(std::move(*t));
  } else {
    tuples = fgbg(gens, cons, fac);
  }
  if (o.json) {
    ordered_json doc = header("fgbg", alg);
    doc["ideal"] = strings(gens);
    doc["input_constraints"] = strings(cons);
    ordered_json list = ordered_json::array();
    for (const auto& t : tuples)
      list.push_back({{"basis", strings(t.basis.elements)},
                      {"constraints", strings(t.constraints)}});
    doc["tuples"] = std::move(list);
    doc["warnings"] = fac.warnings();
    emit(out, std::move(doc), o, start);
    return;
  }
  if (tuples.empty()) out << "no tuples\n";
  for (std::size_t k = 0; k < tuples.size(); ++k)
    out << "tuple " << k + 1 << ": " << to_string(tuples[k]) << "\n";
  for (const auto& w : fac.warnings()) out << "warning: " << w << "\n";
  timing_line(out, o, start);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Factorization and factorized Groebner bases in G-algebras",
               "gfactor"};
  app.require_subcommand(1);

  auto add = [&](const char* name, const char* about) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("--algebra", o.algebra, "algebra description file")
        ->required();
    sub->add_flag("--timing", o.timing, "report elapsed time");
    return sub;
  };
  auto* factor = add("factor", "all factorizations into irreducibles");
  factor->add_option("--poly", o.poly, "element to factor")->required();
  factor->add_flag("--json", o.json, "JSON output");
  auto* irr = add("irreducible", "irreducibility test");
  irr->add_option("--poly", o.poly, "element to test")->required();
  irr->add_flag("--json", o.json, "JSON output");
  auto* mul = add("mul", "product of ';'-separated factors");
  mul->add_option("--poly", o.poly, "factors")->required();
  mul->add_flag("--json", o.json, "JSON output");
  auto* nf = add("nf", "left normal form modulo a left ideal");
  nf->add_option("--poly", o.poly, "element to reduce")->required();
  nf->add_option("--ideal", o.ideal, "';'-separated generators")->required();
  nf->add_flag("--json", o.json, "JSON output");
  auto* gb = add("gb", "reduced left Groebner basis");
  gb->add_option("--ideal", o.ideal, "';'-separated generators")->required();
  gb->add_flag("--json", o.json, "JSON output");
  auto* fg = add("fgbg", "factorized constrained Groebner tuples");
  fg->add_option("--ideal", o.ideal, "';'-separated generators")->required();
  fg->add_option("--constraints", o.constraints,
                 "';'-separated elements to keep outside the ideal");
  fg->add_flag("--first", o.first, "stop at the first tuple");
  fg->add_flag("--json", o.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (factor->parsed()) cmd_factor(o, out);
    else if (irr->parsed()) cmd_irreducible(o, out);
    else if (mul->parsed()) cmd_mul(o, out);
    else if (nf->parsed()) cmd_nf(o, out);
    else if (gb->parsed()) cmd_gb(o, out);
    else if (fg->parsed()) cmd_fgbg(o, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const AdmissibilityError& e) {
    err << "admissibility error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid algebra: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gfactor::cli

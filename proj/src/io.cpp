#include "gfactor/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "gfactor/errors.hpp"

namespace gfactor {

namespace {

struct RawTerm {
  Rational coeff = 1;
  std::vector<std::pair<std::size_t, Exponent>> factors;  // in written order
};

/// Recursive-descent reader for sums of products of coefficients and
/// variable powers. Columns in errors are 1-based and include `column_offset`.
class ExprReader {
 public:
  ExprReader(std::string_view text, const std::vector<std::string>& names,
             std::size_t line, std::size_t column_offset)
      : text_(text), names_(names), line_(line), offset_(column_offset) {}

  std::vector<RawTerm> read() {
    skip_ws();
    if (at_end()) fail("empty input");
    std::vector<RawTerm> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      RawTerm t = read_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, offset_ + pos_ + 1);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  RawTerm read_term() {
    RawTerm t;
    read_item(t);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      read_item(t);
    }
    return t;
  }

  void read_item(RawTerm& t) {
    skip_ws();
    if (at_end()) fail("expected a coefficient or variable");
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      Rational q;
      q.get_num() = Integer(digits());
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("malformed coefficient: missing denominator");
        q.get_den() = Integer(den);
        if (q.get_den() == 0) {
          pos_ = start;
          fail("malformed coefficient: zero denominator");
        }
      }
      if (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) ||
                        peek() == '_'))
        fail("malformed coefficient: expected '*' before variable");
      q.canonicalize();
      t.coeff *= q;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      Exponent power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        std::string e = digits();
        if (e.empty()) fail("expected exponent after '^'");
        if (e.size() > 9) fail("exponent too large");
        power = static_cast<Exponent>(std::stoul(e));
      }
      t.factors.emplace_back(static_cast<std::size_t>(it - names_.begin()),
                             power);
      return;
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) ||
                     s.front() == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

MonomialOrdering parse_order(std::string_view spec, std::size_t n,
                             std::size_t line, std::size_t column) {
  if (spec == "lex") return MonomialOrdering::lex(n);
  if (spec == "deglex") return MonomialOrdering::deglex(n);
  if (spec.starts_with("wdeglex")) {
    auto open = spec.find('('), close = spec.rfind(')');
    if (open == std::string_view::npos || close != spec.size() - 1 ||
        close < open)
      throw ParseError("expected wdeglex(w1,...,wn)", line, column);
    std::vector<Exponent> w;
    std::string_view body = spec.substr(open + 1, close - open - 1);
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      auto item = trim(body.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start));
      if (item.empty() || item.size() > 9 ||
          !std::all_of(item.begin(), item.end(), [](char ch) {
            return std::isdigit(static_cast<unsigned char>(ch));
          }))
        throw ParseError("weights must be positive integers", line, column);
      Exponent v = static_cast<Exponent>(std::stoul(std::string(item)));
      if (v == 0)
        throw ParseError("weights must be positive integers", line, column);
      w.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (w.size() != n)
      throw ParseError("expected " + std::to_string(n) + " weights", line,
                       column);
    return MonomialOrdering::wdeglex(std::move(w));
  }
  throw ParseError("unknown ordering '" + std::string(spec) + "'", line,
                   column);
}

}  // namespace

AlgebraPresentation parse_algebra(std::string_view text) {
  AlgebraPresentation p;
  bool have_name = false, have_field = false, have_vars = false,
       have_order = false;
  struct PendingRel {
    std::size_t line;
    std::size_t lhs_col, rhs_col;
    std::string lhs, rhs;
  };
  std::vector<PendingRel> rels;
  std::optional<std::pair<std::size_t, std::string>> order_line;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view raw = text.substr(
        start, nl == std::string_view::npos ? std::string_view::npos
                                            : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

    auto space = line.find_first_of(" \t");
    std::string_view key = line.substr(0, space);
    std::string_view rest =
        space == std::string_view::npos ? std::string_view{} : line.substr(space);
    std::size_t rest_col =
        indent + (space == std::string_view::npos ? line.size() : space);
    std::string_view value = trim(rest);
    std::size_t value_col =
        rest_col + static_cast<std::size_t>(value.data() - rest.data()) + 1;
    if (value.empty()) value_col = rest_col + 1;

    auto once = [&](bool& flag) {
      if (flag)
        throw ParseError("duplicate '" + std::string(key) + "' line", line_no,
                         indent + 1);
      flag = true;
    };

    if (key == "algebra") {
      once(have_name);
      if (!is_identifier(value))
        throw ParseError("expected an algebra name", line_no, value_col);
      p.name = std::string(value);
    } else if (key == "field") {
      once(have_field);
      if (value != "QQ")
        throw ParseError("unsupported field '" + std::string(value) +
                             "' (only QQ is accepted)",
                         line_no, value_col);
    } else if (key == "vars") {
      once(have_vars);
      std::size_t s = 0;
      while (true) {
        auto comma = value.find(',', s);
        auto item = trim(value.substr(s, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - s));
        if (!is_identifier(item))
          throw ParseError("expected a variable name", line_no, value_col + s);
        if (std::find(p.names.begin(), p.names.end(), item) != p.names.end())
          throw ParseError("duplicate variable '" + std::string(item) + "'",
                           line_no, value_col + s);
        p.names.emplace_back(item);
        if (comma == std::string_view::npos) break;
        s = comma + 1;
      }
    } else if (key == "rel") {
      auto eq = value.find('=');
      if (eq == std::string_view::npos)
        throw ParseError("expected '=' in relation", line_no, value_col);
      rels.push_back({line_no, value_col - 1, value_col + eq,
                      std::string(value.substr(0, eq)),
                      std::string(value.substr(eq + 1))});
    } else if (key == "order") {
      once(have_order);
      order_line = {line_no, std::string(value)};
      order_line->first = line_no;
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no,
                       indent + 1);
    }
  }

  if (!have_name) throw ParseError("missing 'algebra' line", line_no, 1);
  if (!have_field) throw ParseError("missing 'field' line", line_no, 1);
  if (!have_vars) throw ParseError("missing 'vars' line", line_no, 1);
  std::size_t n = p.names.size();

  p.ordering = order_line ? parse_order(trim(order_line->second), n,
                                        order_line->first, 1)
                          : MonomialOrdering::deglex(n);

  for (const auto& r : rels) {
    auto lhs = ExprReader(r.lhs, p.names, r.line, r.lhs_col).read();
    if (lhs.size() != 1 || lhs[0].coeff != 1 || lhs[0].factors.size() != 2 ||
        lhs[0].factors[0].second != 1 || lhs[0].factors[1].second != 1)
      throw ParseError("left side of a relation must be x_j*x_i", r.line,
                       r.lhs_col + 1);
    std::size_t j = lhs[0].factors[0].first, i = lhs[0].factors[1].first;
    if (!(i < j))
      throw ParseError("relation must be written as " + p.names.back() +
                           "*" + p.names.front() +
                           " style: later variable first",
                       r.line, r.lhs_col + 1);
    if (std::any_of(p.relations.begin(), p.relations.end(),
                    [&](const Relation& x) { return x.i == i && x.j == j; }))
      throw ParseError("duplicate relation", r.line, r.lhs_col + 1);

    Relation rel;
    rel.i = i;
    rel.j = j;
    rel.c = 0;
    ExponentVector xixj(n, 0);
    ++xixj[i];
    ++xixj[j];
    for (const auto& t : ExprReader(r.rhs, p.names, r.line, r.rhs_col).read()) {
      ExponentVector e(n, 0);
      std::size_t last = 0;
      for (const auto& [v, k] : t.factors) {
        if (v < last)
          throw ParseError("right side monomials must list variables in "
                           "declaration order",
                           r.line, r.rhs_col + 1);
        last = v;
        e[v] += k;
      }
      if (e == xixj)
        rel.c += t.coeff;
      else
        rel.d.push_back({std::move(e), t.coeff});
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

AlgebraPtr load_algebra(std::string_view text) {
  return Algebra::create(parse_algebra(text));
}

AlgebraPtr load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read algebra file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_algebra(ss.str());
}

std::string format_algebra(const AlgebraPresentation& p) {
  std::string out = "algebra " + p.name + "\nfield QQ\nvars ";
  for (std::size_t k = 0; k < p.names.size(); ++k)
    out += (k ? ", " : "") + p.names[k];
  out += "\n";
  for (const auto& r : p.relations) {
    TermList rhs = r.d;
    ExponentVector xixj(p.size(), 0);
    ++xixj[r.i];
    ++xixj[r.j];
    rhs.push_back({xixj, r.c});
    std::erase_if(rhs, [](const Term& t) { return is_zero(t.coeff); });
    std::sort(rhs.begin(), rhs.end(), [&](const Term& a, const Term& b) {
      return p.ordering.less(b.exponents, a.exponents);
    });
    out += "rel " + p.names[r.j] + "*" + p.names[r.i] + " = " +
           format_terms(rhs, p.names) + "\n";
  }
  out += "order " + p.ordering.describe() + "\n";
  return out;
}

namespace {

NcPolynomial parse_poly_at(std::string_view text, const AlgebraPtr& algebra,
                           std::size_t column_offset) {
  NcPolynomial sum(algebra);
  for (const auto& t :
       ExprReader(text, algebra->names(), 1, column_offset).read()) {
    NcPolynomial term = NcPolynomial::constant(algebra, t.coeff);
    ExponentVector run(algebra->size(), 0);
    std::size_t last = 0;
    // Runs already in PBW order are collected into one monomial.
    for (const auto& [v, k] : t.factors) {
      if (v < last && !is_zero(run)) {
        term = multiply(term, NcPolynomial::monomial(algebra, run));
        std::fill(run.begin(), run.end(), 0);
      }
      run[v] += k;
      last = v;
    }
    if (!is_zero(run))
      term = multiply(term, NcPolynomial::monomial(algebra, run));
    sum += term;
  }
  return sum;
}

}  // namespace

NcPolynomial parse_poly(std::string_view text, const AlgebraPtr& algebra) {
  return parse_poly_at(text, algebra, 0);
}

std::vector<NcPolynomial> parse_poly_list(std::string_view text,
                                          const AlgebraPtr& algebra) {
  std::vector<NcPolynomial> out;
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    auto item = text.substr(start, semi == std::string_view::npos
                                       ? std::string_view::npos
                                       : semi - start);
    out.push_back(parse_poly_at(item, algebra, start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace gfactor

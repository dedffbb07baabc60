// Command-line front end: classification, character tables, verification suites.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "g3/verify.hpp"

using namespace g3;
using nlohmann::json;

namespace {

struct Malformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Tex };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "tex") return Format::Tex;
  throw Malformed("unknown format: " + s);
}

WeylElt parse_elt(const std::string& s) {
  auto w = parse_word(s);
  if (!w) throw Malformed("malformed Weyl word: " + s);
  return *w;
}

json symbol_json(const Symbol& s) { return json{s.d2, s.x2, s.y2, s.z2}; }

json flag_json(const VermaChar& c) {
  json arr = json::array();
  for (const auto& [s, m] : c) arr.push_back({{"symbol", symbol_json(s)}, {"mult", m}});
  return arr;
}

using Table = Outcome<VermaChar> (*)(int, int, const WeylElt&);

Table table_fn(const std::string& kind) {
  if (kind == "tilting") return &tilting;
  if (kind == "projective") return &projective;
  return &jordan_holder;
}

void check_label(int k, int n) {
  if (k < 0 || n < 0) throw Malformed("block and layer must be non-negative");
}

json row_json(int k, int n, const WeylElt& w, const Outcome<VermaChar>& c) {
  json j{{"block", k}, {"label", {{"n", n}, {"w", render(w)}}}};
  if (c) j["flag"] = flag_json(*c);
  else j["unknown"] = c.unknown().reason;
  return j;
}

void print_csv_rows(std::ostream& os, const std::string& prefix, const Outcome<VermaChar>& c) {
  if (!c) {
    os << prefix << "unknown,,,,\n";
    return;
  }
  for (const auto& [s, m] : *c) os << prefix << s.d2 << ',' << s.x2 << ',' << s.y2 << ',' << s.z2 << ',' << m << '\n';
}

void print_tex_rows(std::ostream& os, const std::string& prefix, const Outcome<VermaChar>& c) {
  if (!c) {
    os << prefix << "\\text{unknown} & \\\\\n";
    return;
  }
  for (const auto& [s, m] : *c) os << prefix << "$" << render(s) << "$ & " << m << " \\\\\n";
}

void print_table(const std::string& kind, int k, int n, const WeylElt& w, Format fmt) {
  check_label(k, n);
  const auto c = table_fn(kind)(k, n, w);
  switch (fmt) {
    case Format::Json: std::cout << row_json(k, n, w, c).dump() << '\n'; break;
    case Format::Csv:
      std::cout << "d2,x2,y2,z2,mult\n";
      print_csv_rows(std::cout, "", c);
      break;
    case Format::Tex:
      std::cout << "\\begin{tabular}{lr}\n";
      print_tex_rows(std::cout, "", c);
      std::cout << "\\end{tabular}\n";
      break;
  }
}

int classify_cmd(const std::string& text) {
  const auto s = parse_symbol(text);
  if (!s || !s->valid()) throw Malformed("malformed symbol: " + text);
  const auto block = classify(*s);
  if (const auto* t = std::get_if<TypicalBlock>(&block)) {
    std::cout << json{{"block", "typical"}, {"antidominant", symbol_json(t->antidominant)}}.dump() << '\n';
    return 0;
  }
  const auto l = label(*s);
  // A coset is rendered by its minimal-length representative.
  std::cout << json{{"block", l.k}, {"n", l.n}, {"w", {render(canonical_elt(l))}}}.dump() << '\n';
  return 0;
}

int verify_cmd(const std::string& suite, const SuiteParams& p, const std::string& json_out) {
  const auto report = verify_suite(suite, p);
  std::cout << suite << ": " << report.count(Verdict::Pass) << " pass, " << report.count(Verdict::Fail) << " fail, "
            << report.count(Verdict::SkippedUnknown) << " skipped-unknown, " << report.flagged() << " flagged\n";
  for (const auto& c : report.cases)
    if (c.verdict == Verdict::Fail) std::cout << "FAIL " << to_json(c).dump() << '\n';
  std::fprintf(stderr, "elapsed %.2fs\n", report.seconds);
  if (!json_out.empty()) {
    std::ofstream os(json_out);
    if (!os) throw std::runtime_error("cannot write " + json_out);
    os << to_json(report).dump(1) << '\n';
  }
  return report.ok() ? 0 : 1;
}

int emit_cmd(int k, std::optional<int> nmax, Format fmt) {
  check_label(k, 0);
  const int last = nmax.value_or(3 * k + 8);
  json rows = json::array();
  std::ostringstream text;
  if (fmt == Format::Csv) text << "table,n,w,d2,x2,y2,z2,mult\n";
  if (fmt == Format::Tex) text << "\\begin{longtable}{lllr}\n";
  for (int n = 0; n <= last; ++n) {
    std::set<Symbol> seen;
    for (const auto& w : weyl_elements()) {
      if (!seen.insert(f(k, n, w)).second) continue;
      json row{{"label", {{"n", n}, {"w", render(w)}}}};
      for (const char* kind : {"tilting", "projective", "jh"}) {
        const auto c = table_fn(kind)(k, n, w);
        const std::string prefix = std::string(kind) + "," + std::to_string(n) + "," + render(w) + ",";
        switch (fmt) {
          case Format::Json: row[kind] = c ? flag_json(*c) : json{{"unknown", c.unknown().reason}}; break;
          case Format::Csv: print_csv_rows(text, prefix, c); break;
          case Format::Tex:
            print_tex_rows(text, std::string(kind) + " & $" + std::to_string(n) + "$ & $" + render(w) + "$ & ", c);
            break;
        }
      }
      rows.push_back(row);
    }
  }
  if (fmt == Format::Json) std::cout << json{{"block", k}, {"rows", rows}}.dump() << '\n';
  else {
    if (fmt == Format::Tex) text << "\\end{longtable}\n";
    std::cout << text.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters of tilting, projective and simple modules in the integral category O of G(3)"};
  app.require_subcommand(1);

  std::string symbol_text;
  auto* classify_sub = app.add_subcommand("classify", "block and label of a symbol");
  classify_sub->add_option("symbol", symbol_text, "symbol such as \"[-3/2|0,-3/2,3/2]\"")->required();

  struct TableArgs {
    int k = 0, n = 0;
    std::string word, format = "json";
  };
  std::map<std::string, TableArgs> table_args;
  std::vector<std::pair<std::string, CLI::App*>> tables;
  for (const char* kind : {"tilting", "projective", "jh"}) {
    auto& a = table_args[kind];
    auto* sub = app.add_subcommand(kind, std::string(kind) + " row of block k, layer n, element w");
    sub->add_option("k", a.k)->required();
    sub->add_option("n", a.n)->required();
    sub->add_option("word", a.word, "Weyl group word: e, 0, 12, w0, 0w0, ...")->required();
    sub->add_option("--format", a.format)->check(CLI::IsMember({"json", "csv", "tex"}));
    tables.emplace_back(kind, sub);
  }

  std::string suite = "all", json_out;
  SuiteParams params;
  int nmax_value = -1;
  auto* verify_sub = app.add_subcommand("verify", "run verification suites");
  verify_sub->add_option("--suite", suite)->check(
      CLI::IsMember({"translation", "duality", "lengths", "table2", "jantzen", "all"}));
  verify_sub->add_option("--kmax", params.kmax)->check(CLI::NonNegativeNumber);
  verify_sub->add_option("--nmax", nmax_value)->check(CLI::NonNegativeNumber);
  verify_sub->add_option("--json", json_out, "write the full report here");

  int emit_block = 0, emit_nmax = -1;
  std::string emit_format = "json";
  auto* emit_sub = app.add_subcommand("emit", "all tables of a block");
  emit_sub->add_option("--block", emit_block)->required()->check(CLI::NonNegativeNumber);
  emit_sub->add_option("--nmax", emit_nmax)->check(CLI::NonNegativeNumber);
  emit_sub->add_option("--format", emit_format)->required()->check(CLI::IsMember({"json", "csv", "tex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify_sub) return classify_cmd(symbol_text);
    for (const auto& [kind, sub] : tables)
      if (*sub) {
        const auto& a = table_args[kind];
        print_table(kind, a.k, a.n, parse_elt(a.word), parse_format(a.format));
        return 0;
      }
    if (*verify_sub) {
      if (nmax_value >= 0) params.nmax = nmax_value;
      return verify_cmd(suite, params, json_out);
    }
    if (*emit_sub)
      return emit_cmd(emit_block, emit_nmax >= 0 ? std::optional(emit_nmax) : std::nullopt, parse_format(emit_format));
  } catch (const Malformed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

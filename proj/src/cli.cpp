#include "sextab/cli.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "sextab/corpus.hpp"
#include "sextab/factorize.hpp"
#include "sextab/match.hpp"
#include "sextab/render.hpp"
#include "sextab/tablegen.hpp"

namespace sextab::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  bool scribal = false;
  bool zero_mark = false;
  std::string separator = ".";
  std::string fixture;

  std::string number;
  std::string policy = "greedy";
  bool reciprocals = false;
  std::vector<std::string> claims;

  std::string table;
  std::optional<long> row;
  std::string principal;
  bool extras = false;
  bool include_n40 = false;
  std::string tail = "nine";
  long start = 1;
  long step = 1;
  long count_rows = 1;

  std::string pattern;
  std::string corpus = "regulars";
  std::size_t max_digits = 0;
  std::string factors = "1-59";
  std::string index;
  std::optional<std::size_t> max_total;
  bool count = false;
  bool widen = false;

  std::vector<std::string> constraints;
  bool continued = false;

  std::string path;
  std::string kind;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    render_.separator = o.separator;
    render_.zero_mark = o.zero_mark;
    render_.json = o.json;
  }

  SexNumber num(const std::string& s) const { return parse_number(s, o_.scribal); }
  std::string fmt(const SexNumber& a) const { return format_number(a, render_); }

  void emit(const json& record, const std::string& text) {
    out_ << (o_.json ? record.dump() : text) << '\n';
  }

  int enumerate() {
    Corpus c = enumerate_regulars(o_.max_digits ? o_.max_digits : 2);
    if (o_.count) return emit({{"count", c.size()}}, std::to_string(c.size())), 0;
    for (const auto& e : c.entries) {
      const auto& t = *e.provenance.exponents;
      emit({{"digits", fmt(e.value)}, {"p", t.p}, {"q", t.q}, {"r", t.r}},
           fmt(e.value) + "  2^" + std::to_string(t.p) + " 3^" + std::to_string(t.q) +
               " 5^" + std::to_string(t.r));
    }
    return 0;
  }

  int recip() {
    SexNumber a = num(o_.number);
    SexNumber r = reciprocal(a);
    emit({{"input", fmt(a)}, {"reciprocal", fmt(r)}}, fmt(r));
    return 0;
  }

  int factorize() {
    static const std::map<std::string, DivisorPolicy> policies = {
        {"greedy", DivisorPolicy::greedy()},
        {"nine", DivisorPolicy::nine()},
        {"twelve-nine", DivisorPolicy::twelve_then_nine()},
        {"twelve-three", DivisorPolicy::twelve_then_three()}};
    FactorChain ch = factor_chain(num(o_.number), policies.at(o_.policy), o_.reciprocals);
    for (std::size_t i = 0; i < ch.rows.size(); ++i) {
      const auto& r = ch.rows[i];
      json rec{{"row", i}, {"value", fmt(r.value)}};
      std::string text = fmt(r.value);
      if (r.divisor) {
        rec["divisor"] = *r.divisor;
        text += "  " + std::to_string(*r.divisor);
      }
      if (i < ch.reciprocals.size()) {
        rec["reciprocal"] = fmt(ch.reciprocals[i]);
        text += "  " + fmt(ch.reciprocals[i]);
      }
      emit(rec, text);
    }
    return 0;
  }

  int verify() {
    std::vector<PowerClaim> claims;
    for (const auto& c : o_.claims) {
      auto caret = c.find('^');
      if (caret == std::string::npos)
        throw Error(Errc::SyntaxError, "claim '" + c + "' is not BASE^EXP");
      long e = std::stol(c.substr(caret + 1));
      if (e < 0) throw Error(Errc::RangeError, "negative exponent", e);
      claims.push_back({num(c.substr(0, caret)), static_cast<unsigned>(e)});
    }
    VerifyResult v = verify_power_product(num(o_.number), claims);
    for (std::size_t i = 0; i < v.chain.size(); ++i)
      emit({{"step", i}, {"quotient", fmt(v.chain[i].quotient)},
            {"divisor", fmt(v.chain[i].divisor)}},
           fmt(v.chain[i].quotient) + "  / " + fmt(v.chain[i].divisor));
    emit({{"verified", v.ok}}, v.ok ? "verified" : "rejected");
    return v.ok ? 0 : 1;
  }

  int table() {
    std::vector<TableRow> rows;
    // Row keys: the exponent of 9 for text-a, otherwise 1-based row numbers.
    bool by_exponent = false;
    if (o_.table == "text-a") {
      rows = text_a_table();
      by_exponent = true;
    } else if (o_.table == "text-b") {
      if (o_.tail != "nine" && o_.tail != "three")
        throw Error(Errc::RangeError, "tail must be nine or three");
      rows = text_b_table(o_.include_n40,
                          o_.tail == "nine" ? BTail::PowersOfNine : BTail::PowersOfThree);
    } else if (o_.table == "standard") {
      auto fx = o_.fixture.empty() ? default_fixture() : load_fixture(o_.fixture);
      rows = reconcile_standard_table(standard_table_anchors(fx));
    } else if (o_.table == "ob") {
      rows = ob_reciprocal_table();
    } else if (o_.table == "squares") {
      rows = squares_table(o_.extras);
    } else if (o_.table == "mult") {
      rows = combined_mult_table(num(o_.principal));
    } else if (o_.table == "text-m") {
      rows = text_m_table(o_.principal.empty() ? text_m_base() : num(o_.principal), o_.start,
                          o_.step, o_.count_rows);
    } else {
      throw Error(Errc::RangeError, "unknown table '" + o_.table + "'");
    }
    bool found = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      long key = by_exponent ? static_cast<long>(rows.size() - 1 - i) : static_cast<long>(i + 1);
      if (o_.row && *o_.row != key) continue;
      found = true;
      json rec{{"table", o_.table}, {"row", key}, {"label", rows[i].label}};
      std::string text = rows[i].label;
      for (std::size_t k = 0; k < rows[i].cells.size(); ++k) {
        rec["cell" + std::to_string(k)] = fmt(rows[i].cells[k]);
        text += "  " + fmt(rows[i].cells[k]);
      }
      if (o_.row) text = fmt(rows[i].cells[0]);
      emit(rec, text);
    }
    if (o_.row && !found)
      throw Error(Errc::RangeError, "no row " + std::to_string(*o_.row), *o_.row);
    return 0;
  }

  int square_trace() {
    SquareTrace t = digitwise_square_trace(num(o_.number));
    for (const auto& p : t.partials) {
      std::string aligned;
      for (std::size_t k = 0; k < p.aligned.size(); ++k)
        aligned += (k ? o_.separator : "") + std::to_string(p.aligned[k]);
      emit({{"i", p.positions.first}, {"j", p.positions.second}, {"partial", aligned}},
           std::to_string(p.positions.first) + " " + std::to_string(p.positions.second) +
               "  " + aligned);
    }
    emit({{"square", fmt(t.total)}}, fmt(t.total));
    return 0;
  }

  Corpus load_corpus() const {
    if (!o_.index.empty()) return load_index(o_.index);
    std::size_t m = o_.max_digits;
    if (o_.corpus == "regulars") return build_corpus(CorpusSpec::regulars(m ? m : 30));
    if (o_.corpus == "fourth-powers")
      return build_corpus(CorpusSpec::fourth_powers(m ? m : 9));
    if (o_.corpus == "products") {
      auto dash = o_.factors.find('-');
      if (dash == std::string::npos)
        throw Error(Errc::SyntaxError, "factor range '" + o_.factors + "' is not LO-HI");
      return build_corpus(CorpusSpec::products(std::stoi(o_.factors.substr(0, dash)),
                                               std::stoi(o_.factors.substr(dash + 1)),
                                               m ? m : 20));
    }
    throw Error(Errc::RangeError, "unknown corpus '" + o_.corpus + "'");
  }

  static std::string provenance_text(const Provenance& p) {
    std::string s;
    if (p.exponents)
      s = "2^" + std::to_string(p.exponents->p) + " 3^" + std::to_string(p.exponents->q) +
          " 5^" + std::to_string(p.exponents->r);
    for (const auto& c : p.constructions) {
      if (!s.empty()) s += "; ";
      s += c.kind == Construction::Kind::Product
               ? std::to_string(c.k) + " x " + c.base.str()
               : "(" + c.base.str() + ")^" + std::to_string(c.k);
    }
    return s;
  }

  int match_cmd() {
    DigitPattern p = parse_pattern(o_.pattern);
    if (o_.widen) p = widen_uncertain(p);
    if (o_.max_total) {
      if (*o_.max_total < p.fixed_width())
        throw Error(Errc::RangeError, "--max below the pattern's fixed width");
      p.max_total_digits = o_.max_total;
    }
    Corpus c = load_corpus();
    if (o_.count) {
      std::size_t n = count_matches(p, c);
      emit({{"count", n}}, std::to_string(n));
      return 0;
    }
    for (const auto& m : match(p, c))
      emit({{"digits", fmt(m.candidate)}, {"offset", m.alignment_offset},
            {"provenance", provenance_text(m.provenance)}},
           fmt(m.candidate) + "  @" + std::to_string(m.alignment_offset) + "  " +
               provenance_text(m.provenance));
    return 0;
  }

  int infer() {
    std::vector<PrincipalConstraint> cs;
    for (const auto& s : o_.constraints) {
      // FACTOR:PATTERN[@LEAD]
      auto colon = s.find(':');
      if (colon == std::string::npos)
        throw Error(Errc::SyntaxError, "constraint '" + s + "' is not FACTOR:PATTERN[@LEAD]");
      auto at = s.rfind('@');
      PrincipalConstraint c;
      c.factor = std::stoi(s.substr(0, colon));
      std::size_t end = at == std::string::npos || at < colon ? s.size() : at;
      c.pattern = parse_pattern(s.substr(colon + 1, end - colon - 1));
      if (end != s.size()) c.lead = std::stol(s.substr(end + 1));
      cs.push_back(std::move(c));
    }
    Corpus regs = enumerate_regulars(o_.max_digits ? o_.max_digits : 6);
    PrincipalInference r = infer_principal(
        cs, &regs, o_.continued ? ReadingMode::Continued : ReadingMode::Truncated);
    std::string hi = r.hi ? to_string(*r.hi) : "inf";
    bool closed = r.hi && r.hi_inclusive;
    emit({{"lo", to_string(r.lo)}, {"hi", hi}, {"hi_inclusive", closed},
          {"candidates", r.candidates.size()}},
         "[" + to_string(r.lo) + ", " + hi + (closed ? "]" : ")"));
    for (const auto& x : r.candidates) emit({{"candidate", to_string(x)}}, to_string(x));
    return 0;
  }

  int index_save() {
    Corpus c = load_corpus();
    save_index(c, o_.path);
    emit({{"path", o_.path}, {"kind", c.spec.describe()}, {"entries", c.size()}},
         o_.path + ": " + c.spec.describe() + ", " + std::to_string(c.size()) + " entries");
    return 0;
  }

  int index_load() {
    std::optional<CorpusKind> expected;
    if (!o_.kind.empty()) {
      for (auto k : {CorpusKind::Regulars, CorpusKind::FourthPowers, CorpusKind::Products,
                     CorpusKind::Powers})
        if (o_.kind == kind_name(k)) expected = k;
      if (!expected) throw Error(Errc::RangeError, "unknown corpus kind '" + o_.kind + "'");
    }
    Corpus c = load_index(o_.path, expected);
    emit({{"path", o_.path}, {"kind", c.spec.describe()}, {"entries", c.size()}},
         o_.path + ": " + c.spec.describe() + ", " + std::to_string(c.size()) + " entries");
    return 0;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  RenderOptions render_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact base-60 reciprocal tables and fragment reconstruction", "sextab"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "One JSON record per line");
  app.add_flag("--scribal", o.scribal, "Read a bare 0 between 10..50 and 1..9 as a mark");
  app.add_flag("--zero-mark", o.zero_mark, "Write the scribal 0 mark");
  app.add_option("--separator", o.separator, "Digit separator for output")
      ->check([](const std::string& s) { return s.empty() ? "separator is empty" : ""; });
  app.add_option("--fixture", o.fixture, "Attested-cell fixture file");

  auto* en = app.add_subcommand("enum", "List regular numbers up to a digit bound");
  en->add_option("--max-digits", o.max_digits, "Digit bound (default 2)");
  en->add_flag("--count", o.count, "Print the number of entries only");

  auto* rc = app.add_subcommand("recip", "Reciprocal of a regular number");
  rc->add_option("number", o.number)->required();

  auto* fa = app.add_subcommand("factorize", "Trailing-digit factor chain");
  fa->add_option("number", o.number)->required();
  fa->add_option("--policy", o.policy)
      ->check(CLI::IsMember({"greedy", "nine", "twelve-nine", "twelve-three"}));
  fa->add_flag("--reciprocals", o.reciprocals, "Add the reciprocal column");

  auto* ve = app.add_subcommand("verify", "Check a number against claimed power factors");
  ve->add_option("number", o.number)->required();
  ve->add_option("--claim", o.claims, "BASE^EXP, repeatable")->required();

  auto* ta = app.add_subcommand("table", "Generate a table");
  ta->add_option("name", o.table, "text-a text-b standard ob squares mult text-m")->required();
  ta->add_option("--row", o.row, "Row key: exponent for text-a, else 1-based");
  ta->add_option("--principal", o.principal, "Principal number for mult and text-m");
  ta->add_flag("--extras", o.extras, "Squares: include the two non-standard rows");
  ta->add_flag("--include-n40", o.include_n40, "Text B: include the n = 40 row");
  ta->add_option("--tail", o.tail, "Text B tail: nine or three");
  ta->add_option("--start", o.start, "Text M first factor");
  ta->add_option("--step", o.step, "Text M factor step");
  ta->add_option("--count", o.count_rows, "Text M row count");

  auto* sq = app.add_subcommand("square-trace", "Digit-wise squaring with partial products");
  sq->add_option("number", o.number)->required();

  auto add_corpus_opts = [&](CLI::App* sub) {
    sub->add_option("--corpus", o.corpus, "regulars fourth-powers products");
    sub->add_option("--max-digits", o.max_digits, "Entry or base digit bound");
    sub->add_option("--factors", o.factors, "Products factor range LO-HI");
  };
  auto* ma = app.add_subcommand("match", "Query a corpus with a damaged-digit pattern");
  ma->add_option("pattern", o.pattern)->required();
  add_corpus_opts(ma);
  ma->add_option("--index", o.index, "Read the corpus from an index file");
  ma->add_option("--max", o.max_total, "Bound on candidate digit count");
  ma->add_flag("--count", o.count, "Print the number of matches only");
  ma->add_flag("--widen-uncertain", o.widen, "Widen N~ digits to their tens decade");

  auto* in = app.add_subcommand("infer-principal", "Bound a principal number");
  in->add_option("--constraint", o.constraints, "FACTOR:PATTERN[@LEAD], repeatable")
      ->required();
  in->add_option("--max-digits", o.max_digits, "Digit bound for candidates (default 6)");
  in->add_flag("--continued", o.continued, "Let unseen digits follow each pattern");

  auto* ix = app.add_subcommand("index", "Save or load corpus index files");
  ix->require_subcommand(1);
  auto* ixs = ix->add_subcommand("save", "Build a corpus and write its index");
  ixs->add_option("path", o.path)->required();
  add_corpus_opts(ixs);
  auto* ixl = ix->add_subcommand("load", "Read and validate an index");
  ixl->add_option("path", o.path)->required();
  ixl->add_option("--kind", o.kind, "Expected corpus kind");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    Runner r(o, out);
    if (*en) return r.enumerate();
    if (*rc) return r.recip();
    if (*fa) return r.factorize();
    if (*ve) return r.verify();
    if (*ta) return r.table();
    if (*sq) return r.square_trace();
    if (*ma) return r.match_cmd();
    if (*in) return r.infer();
    if (*ixs) return r.index_save();
    if (*ixl) return r.index_load();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace sextab::cli

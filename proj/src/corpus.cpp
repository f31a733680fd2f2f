#include "sextab/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace sextab {

namespace {

void sort_and_merge(std::vector<CorpusEntry>& v) {
  std::sort(v.begin(), v.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return a.value < b.value;
  });
  std::vector<CorpusEntry> out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().value == e.value) {
      auto& dst = out.back().provenance;
      dst.constructions.insert(dst.constructions.end(), e.provenance.constructions.begin(),
                               e.provenance.constructions.end());
      if (!dst.exponents) dst.exponents = e.provenance.exponents;
    } else {
      out.push_back(std::move(e));
    }
  }
  for (auto& e : out) {
    auto& c = e.provenance.constructions;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  v = std::move(out);
}

std::optional<ExponentTriple> small_exponents(std::uint32_t f) {
  ExponentTriple t;
  for (; f % 2 == 0; f /= 2) ++t.p;
  for (; f % 3 == 0; f /= 3) ++t.q;
  for (; f % 5 == 0; f /= 5) ++t.r;
  if (f != 1) return std::nullopt;
  return t;
}

std::optional<ExponentTriple> product_exponents(const std::optional<ExponentTriple>& base,
                                                std::uint32_t f) {
  auto fe = small_exponents(f);
  if (!base || !fe) return std::nullopt;
  return ExponentTriple{base->p + fe->p, base->q + fe->q, base->r + fe->r}.canonical();
}

std::optional<ExponentTriple> scaled(const std::optional<ExponentTriple>& t, long k) {
  if (!t) return std::nullopt;
  return ExponentTriple{t->p * k, t->q * k, t->r * k}.canonical();
}

CorpusEntry product_entry(const CorpusEntry& b, int f) {
  auto uf = static_cast<std::uint32_t>(f);
  return {mul_digit(b.value, f),
          {product_exponents(b.provenance.exponents, uf),
           {{Construction::Kind::Product, uf, b.value}}}};
}

CorpusEntry fourth_power_entry(const CorpusEntry& b, const SexNumber& v) {
  return {v, {scaled(b.provenance.exponents, 4), {{Construction::Kind::Power, 4, b.value}}}};
}

}  // namespace

namespace kernels {

std::vector<CorpusEntry> regulars_serial(std::size_t max_digits) {
  std::vector<CorpusEntry> out;
  for (long p = 0; from_exponents({p, 0, 0}).size() <= max_digits; ++p)
    for (long q = 0; from_exponents({p, q, 0}).size() <= max_digits; ++q)
      for (long r = 0;; ++r) {
        if (p >= 2 && q >= 1 && r >= 1) break;
        ExponentTriple t{p, q, r};
        SexNumber v = from_exponents(t);
        if (v.size() > max_digits) break;
        out.push_back({v, {t, {}}});
      }
  sort_and_merge(out);
  return out;
}

std::vector<CorpusEntry> regulars_parallel(std::size_t max_digits) {
  long p_count = 0;
  for (SexNumber two_p; two_p.size() <= max_digits; two_p = mul_digit(two_p, 2)) ++p_count;

  std::vector<std::vector<CorpusEntry>> rows(static_cast<std::size_t>(p_count));
#pragma omp parallel for schedule(dynamic)
  for (long p = 0; p < p_count; ++p) {
    auto& row = rows[static_cast<std::size_t>(p)];
    SexNumber vq = from_exponents({p, 0, 0});
    for (long q = 0; vq.size() <= max_digits; ++q, vq = mul_digit(vq, 3)) {
      SexNumber vr = vq;
      for (long r = 0; vr.size() <= max_digits; ++r, vr = mul_digit(vr, 5)) {
        row.push_back({vr, {ExponentTriple{p, q, r}, {}}});
        // Beyond r = 0 the integer 2^p 3^q 5^r is a multiple of 60.
        if (p >= 2 && q >= 1) break;
      }
    }
  }
  std::vector<CorpusEntry> out;
  for (auto& row : rows) std::move(row.begin(), row.end(), std::back_inserter(out));
  sort_and_merge(out);
  return out;
}

std::vector<CorpusEntry> fourth_powers_serial(const std::vector<CorpusEntry>& bases) {
  std::vector<CorpusEntry> out;
  out.reserve(bases.size());
  for (const auto& b : bases) out.push_back(fourth_power_entry(b, pow(b.value, 4)));
  sort_and_merge(out);
  return out;
}

std::vector<CorpusEntry> fourth_powers_parallel(const std::vector<CorpusEntry>& bases) {
  std::vector<CorpusEntry> out(bases.size());
  const long n = static_cast<long>(bases.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const auto& b = bases[static_cast<std::size_t>(i)];
    SexNumber sq = mul(b.value, b.value);
    out[static_cast<std::size_t>(i)] = fourth_power_entry(b, mul(sq, sq));
  }
  sort_and_merge(out);
  return out;
}

std::vector<CorpusEntry> products_serial(const std::vector<CorpusEntry>& bases, int lo,
                                         int hi) {
  std::vector<CorpusEntry> out;
  for (const auto& b : bases)
    for (int f = lo; f <= hi; ++f) out.push_back(product_entry(b, f));
  sort_and_merge(out);
  return out;
}

std::vector<CorpusEntry> products_parallel(const std::vector<CorpusEntry>& bases, int lo,
                                           int hi) {
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<CorpusEntry> out(bases.size() * width);
  const long n = static_cast<long>(bases.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    const auto& b = bases[static_cast<std::size_t>(i)];
    for (int f = lo; f <= hi; ++f)
      out[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(f - lo)] =
          product_entry(b, f);
  }
  sort_and_merge(out);
  return out;
}

}  // namespace kernels

const char* kind_name(CorpusKind k) {
  switch (k) {
    case CorpusKind::Regulars: return "regulars";
    case CorpusKind::FourthPowers: return "fourth-powers";
    case CorpusKind::Products: return "products";
    case CorpusKind::Powers: return "powers";
  }
  return "?";
}

CorpusSpec CorpusSpec::regulars(std::size_t max_digits) {
  CorpusSpec s;
  s.kind = CorpusKind::Regulars;
  s.max_digits = max_digits;
  return s;
}

CorpusSpec CorpusSpec::fourth_powers(std::size_t base_max_digits) {
  CorpusSpec s;
  s.kind = CorpusKind::FourthPowers;
  s.max_digits = base_max_digits;
  return s;
}

CorpusSpec CorpusSpec::products(int lo, int hi, std::size_t base_max_digits) {
  CorpusSpec s;
  s.kind = CorpusKind::Products;
  s.factor_lo = lo;
  s.factor_hi = hi;
  s.max_digits = base_max_digits;
  return s;
}

CorpusSpec CorpusSpec::powers(const SexNumber& base, unsigned max_exp) {
  CorpusSpec s;
  s.kind = CorpusKind::Powers;
  s.power_base = base;
  s.max_exp = max_exp;
  return s;
}

std::string CorpusSpec::describe() const {
  std::string d = kind_name(kind);
  switch (kind) {
    case CorpusKind::Regulars: return d + " max_digits=" + std::to_string(max_digits);
    case CorpusKind::FourthPowers:
      return d + " base_max_digits=" + std::to_string(max_digits);
    case CorpusKind::Products:
      return d + " factors=" + std::to_string(factor_lo) + "-" + std::to_string(factor_hi) +
             " base_max_digits=" + std::to_string(max_digits);
    case CorpusKind::Powers:
      return d + " base=" + power_base.str() + " max_exp=" + std::to_string(max_exp);
  }
  return d;
}

Corpus build_corpus(const CorpusSpec& spec, Exec exec) {
  const bool par = exec == Exec::Parallel;
  auto check_digits = [](std::size_t m) {
    if (m > kMaxCorpusDigits)
      throw Error(Errc::BudgetExceeded,
                  "digit bound " + std::to_string(m) + " exceeds " +
                      std::to_string(kMaxCorpusDigits),
                  static_cast<long>(m));
    if (m < 1) throw Error(Errc::RangeError, "digit bound must be at least 1");
  };
  auto regs = [&](std::size_t m) {
    return par ? kernels::regulars_parallel(m) : kernels::regulars_serial(m);
  };
  Corpus c{spec, {}};
  switch (spec.kind) {
    case CorpusKind::Regulars:
      check_digits(spec.max_digits);
      c.entries = regs(spec.max_digits);
      break;
    case CorpusKind::FourthPowers: {
      check_digits(spec.max_digits);
      auto bases = regs(spec.max_digits);
      if (bases.size() > spec.budget)
        throw Error(Errc::BudgetExceeded, "fourth-power corpus over budget",
                    static_cast<long>(bases.size()));
      c.entries = par ? kernels::fourth_powers_parallel(bases)
                      : kernels::fourth_powers_serial(bases);
      break;
    }
    case CorpusKind::Products: {
      check_digits(spec.max_digits);
      if (spec.factor_lo < 1 || spec.factor_hi >= kBase || spec.factor_lo > spec.factor_hi)
        throw Error(Errc::RangeError, "factor range must lie in 1..59", spec.factor_lo);
      auto bases = regs(spec.max_digits);
      std::size_t total =
          bases.size() * static_cast<std::size_t>(spec.factor_hi - spec.factor_lo + 1);
      if (total > spec.budget)
        throw Error(Errc::BudgetExceeded,
                    "products corpus needs " + std::to_string(total) +
                        " candidates, budget " + std::to_string(spec.budget),
                    static_cast<long>(total));
      c.entries = par ? kernels::products_parallel(bases, spec.factor_lo, spec.factor_hi)
                      : kernels::products_serial(bases, spec.factor_lo, spec.factor_hi);
      break;
    }
    case CorpusKind::Powers: {
      if (spec.max_exp + 1ull > spec.budget)
        throw Error(Errc::BudgetExceeded, "powers corpus over budget",
                    static_cast<long>(spec.max_exp));
      std::optional<ExponentTriple> e;
      if (is_regular(spec.power_base)) e = to_exponents(spec.power_base);
      SexNumber cur;
      for (unsigned k = 0; k <= spec.max_exp; ++k) {
        c.entries.push_back(
            {cur, {scaled(e, k), {{Construction::Kind::Power, k, spec.power_base}}}});
        cur = mul(cur, spec.power_base);
      }
      sort_and_merge(c.entries);
      break;
    }
  }
  return c;
}

Corpus enumerate_regulars(std::size_t max_digits, Exec exec) {
  return build_corpus(CorpusSpec::regulars(max_digits), exec);
}

void save_index(const Corpus& c, std::ostream& out) {
  out << '#' << c.spec.describe() << ' ' << kIndexVersion << '\n';
  for (const auto& e : c.entries) {
    if (const auto& t = e.provenance.exponents)
      out << t->p << ' ' << t->q << ' ' << t->r;
    else
      out << "- - -";
    out << ' ' << e.value.size() << ' ' << e.value.str();
    for (const auto& k : e.provenance.constructions)
      out << ' ' << (k.kind == Construction::Kind::Product ? 'x' : '^') << k.k << ':'
          << k.base.str();
    out << '\n';
  }
}

void save_index(const Corpus& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::FormatError, "cannot write " + path);
  save_index(c, out);
  if (!out) throw Error(Errc::FormatError, "write failed for " + path);
}

namespace {

[[noreturn]] void bad(const std::string& what, long line) {
  throw Error(Errc::FormatError, "index line " + std::to_string(line) + ": " + what, line);
}

SexNumber strict_digits(const std::string& text, long line) {
  try {
    SexNumber v = from_dotted(text);
    if (v.str() != text) bad("digits '" + text + "' not in canonical form", line);
    return v;
  } catch (const Error& e) {
    if (e.code() == Errc::FormatError) throw;
    bad(e.what(), line);
  }
}

long strict_long(const std::string& s, long line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) bad("bad integer '" + s + "'", line);
    return v;
  } catch (const std::logic_error&) {
    bad("bad integer '" + s + "'", line);
  }
}

CorpusSpec parse_header(const std::string& header, std::optional<CorpusKind> expected) {
  if (header.empty() || header[0] != '#') bad("missing header", 1);
  std::istringstream ss(header.substr(1));
  std::vector<std::string> words;
  for (std::string w; ss >> w;) words.push_back(w);
  if (words.size() < 2) bad("short header", 1);
  if (words.back() != kIndexVersion)
    throw Error(Errc::VersionMismatch,
                "index version " + words.back() + ", expected " + kIndexVersion);
  std::optional<CorpusKind> kind;
  for (auto k : {CorpusKind::Regulars, CorpusKind::FourthPowers, CorpusKind::Products,
                 CorpusKind::Powers})
    if (words[0] == kind_name(k)) kind = k;
  if (!kind) bad("unknown corpus kind '" + words[0] + "'", 1);
  if (expected && *expected != *kind)
    throw Error(Errc::VersionMismatch, std::string("index holds ") + kind_name(*kind) +
                                           ", expected " + kind_name(*expected));
  std::map<std::string, std::string> params;
  for (std::size_t i = 1; i + 1 < words.size(); ++i) {
    auto eq = words[i].find('=');
    if (eq == std::string::npos) bad("bad header parameter '" + words[i] + "'", 1);
    params[words[i].substr(0, eq)] = words[i].substr(eq + 1);
  }
  auto need = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) bad(std::string("header lacks ") + key, 1);
    return it->second;
  };
  CorpusSpec spec;
  spec.kind = *kind;
  switch (*kind) {
    case CorpusKind::Regulars:
      spec.max_digits = static_cast<std::size_t>(strict_long(need("max_digits"), 1));
      break;
    case CorpusKind::FourthPowers:
      spec.max_digits = static_cast<std::size_t>(strict_long(need("base_max_digits"), 1));
      break;
    case CorpusKind::Products: {
      std::string f = need("factors");
      auto dash = f.find('-');
      if (dash == std::string::npos) bad("bad factor range", 1);
      spec.factor_lo = static_cast<int>(strict_long(f.substr(0, dash), 1));
      spec.factor_hi = static_cast<int>(strict_long(f.substr(dash + 1), 1));
      spec.max_digits = static_cast<std::size_t>(strict_long(need("base_max_digits"), 1));
      break;
    }
    case CorpusKind::Powers:
      spec.power_base = strict_digits(need("base"), 1);
      spec.max_exp = static_cast<unsigned>(strict_long(need("max_exp"), 1));
      break;
  }
  return spec;
}

}  // namespace

Corpus load_index(std::istream& in, std::optional<CorpusKind> expected) {
  std::string line;
  if (!std::getline(in, line)) bad("empty index", 1);
  Corpus c{parse_header(line, expected), {}};
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::vector<std::string> f;
    for (std::string w; ss >> w;) f.push_back(w);
    if (f.size() < 5) bad("expected 'p q r len digits'", lineno);
    CorpusEntry e;
    e.value = strict_digits(f[4], lineno);
    if (strict_long(f[3], lineno) != static_cast<long>(e.value.size()))
      bad("length field disagrees with digits", lineno);
    if (f[0] != "-" || f[1] != "-" || f[2] != "-") {
      ExponentTriple t{strict_long(f[0], lineno), strict_long(f[1], lineno),
                       strict_long(f[2], lineno)};
      if (t.canonical() != t || from_exponents(t) != e.value)
        bad("exponents do not reproduce the digits", lineno);
      e.provenance.exponents = t;
    }
    for (std::size_t i = 5; i < f.size(); ++i) {
      const std::string& tok = f[i];
      auto colon = tok.find(':');
      if (tok.size() < 3 || (tok[0] != 'x' && tok[0] != '^') || colon == std::string::npos)
        bad("bad construction '" + tok + "'", lineno);
      Construction k;
      k.kind = tok[0] == 'x' ? Construction::Kind::Product : Construction::Kind::Power;
      k.k = static_cast<std::uint32_t>(strict_long(tok.substr(1, colon - 1), lineno));
      k.base = strict_digits(tok.substr(colon + 1), lineno);
      e.provenance.constructions.push_back(std::move(k));
    }
    if (!c.entries.empty() && !(c.entries.back().value < e.value))
      bad("entries out of order", lineno);
    c.entries.push_back(std::move(e));
  }
  return c;
}

Corpus load_index(const std::string& path, std::optional<CorpusKind> expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FormatError, "cannot open " + path);
  return load_index(in, expected);
}

}  // namespace sextab

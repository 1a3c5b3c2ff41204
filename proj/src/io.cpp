#include "iwa/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "iwa/fp.hpp"

namespace iwa {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

// content lines with original 1-based numbers; '#' comments and blanks dropped
std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream is(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(is, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    out.emplace_back(no, line.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// split on commas outside parentheses
std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  for (auto& t : out) {
    std::size_t b = t.find_first_not_of(" \t");
    std::size_t e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  }
  return out;
}

std::int64_t to_int(const std::string& s, std::size_t line, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail(line, "bad " + what + " '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    fail(line, "bad " + what + " '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(line, what + " out of range '" + s + "'");
  }
}

std::uint32_t to_u32(const std::string& s, std::size_t line, const std::string& what) {
  std::int64_t v = to_int(s, line, what);
  if (v < 0 || v > 0xffffffffLL) fail(line, what + " out of range '" + s + "'");
  return static_cast<std::uint32_t>(v);
}

// key=value tokens after the ring keyword
std::string expect_kv(const std::vector<std::string>& toks, const std::string& key,
                      std::size_t line) {
  for (const auto& t : toks) {
    if (t.size() > key.size() && t.compare(0, key.size(), key) == 0 && t[key.size()] == '=')
      return t.substr(key.size() + 1);
  }
  fail(line, "missing " + key + "=");
}

struct SParser {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void die(const std::string& msg) {
    throw std::invalid_argument("series literal: " + msg + " at position " + std::to_string(i) +
                                " in \"" + s + "\"");
  }
  std::int64_t integer() {
    skip();
    std::size_t j = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (j == i) die("expected an integer");
    if (i - j > 18) die("integer too long");
    return std::stoll(s.substr(j, i - j));
  }
};

} // namespace

PadicSeries parse_series(const std::string& text) {
  SParser P{text};
  // terms, each coefficient * T^k or the O(p^a, T^b) tail
  struct Term {
    std::int64_t coeff;
    std::uint32_t exp;
  };
  std::vector<Term> terms;
  std::uint32_t p = 0, a = 0, b = 0;
  bool tail = false;
  bool first = true;
  for (;;) {
    P.skip();
    bool neg = false;
    if (!first || P.s.compare(P.i, 1, "-") == 0) {
      if (P.eat('+')) {
      } else if (P.eat('-')) {
        neg = true;
      } else if (!first) {
        break;
      }
    }
    first = false;
    P.skip();
    if (P.i < P.s.size() && P.s[P.i] == 'O') {
      ++P.i;
      if (!P.eat('(')) P.die("expected '(' after O");
      std::int64_t pv = P.integer();
      if (!P.eat('^')) P.die("expected '^' in the precision tail");
      std::int64_t av = P.integer();
      if (!P.eat(',')) P.die("expected ',' in the precision tail");
      P.skip();
      if (P.i >= P.s.size() || P.s[P.i] != 'T') P.die("expected T in the precision tail");
      ++P.i;
      if (!P.eat('^')) P.die("expected '^' after T in the precision tail");
      std::int64_t bv = P.integer();
      if (!P.eat(')')) P.die("expected ')'");
      if (neg) P.die("negated precision tail");
      if (pv < 2 || !fp::is_prime(static_cast<std::uint32_t>(pv))) P.die("p must be prime");
      if (av < 1 || bv < 1) P.die("precision must be positive");
      p = static_cast<std::uint32_t>(pv);
      a = static_cast<std::uint32_t>(av);
      b = static_cast<std::uint32_t>(bv);
      tail = true;
      break;
    }
    Term t{1, 0};
    bool have_coeff = false;
    if (P.i < P.s.size() && std::isdigit(static_cast<unsigned char>(P.s[P.i]))) {
      t.coeff = P.integer();
      have_coeff = true;
    }
    P.skip();
    bool have_T = false;
    if (have_coeff ? P.eat('*') : true) {
      P.skip();
      if (P.i < P.s.size() && P.s[P.i] == 'T') {
        ++P.i;
        have_T = true;
        t.exp = 1;
        if (P.eat('^')) t.exp = static_cast<std::uint32_t>(P.integer());
      } else if (have_coeff) {
        P.die("expected T after '*'");
      }
    }
    if (!have_coeff && !have_T) P.die("expected a term");
    if (neg) t.coeff = -t.coeff;
    terms.push_back(t);
  }
  if (!tail) throw std::invalid_argument("series literal: missing precision tail O(p^a, T^b) in \"" +
                                         text + "\"");
  P.skip();
  if (P.i != P.s.size()) P.die("trailing input after the precision tail");
  std::vector<std::int64_t> coeffs;
  for (const auto& t : terms) {
    if (t.exp >= b)
      throw std::invalid_argument("series literal: term T^" + std::to_string(t.exp) +
                                  " outside the precision window T^" + std::to_string(b));
    if (coeffs.size() <= t.exp) coeffs.resize(t.exp + 1, 0);
    coeffs[t.exp] += t.coeff;
  }
  return PadicSeries::from_coeffs(p, a, b, coeffs);
}

ValuationSpec InputDocument::valuation() const {
  if (table.empty()) return ValuationSpec::congruence();
  std::vector<GroupElement> elems;
  std::vector<Omega> vals;
  for (const auto& [idx, om] : table) {
    elems.push_back(group.at(idx));
    vals.push_back(om);
  }
  return ValuationSpec::table(std::move(elems), std::move(vals));
}

InputDocument parse_document(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty document");
  InputDocument doc;
  std::size_t at = 0;
  const auto& [hline, header] = lines[at];
  auto toks = split_ws(header);

  if (!toks.empty() && toks[0] == "ring") {
    if (toks.size() < 2) fail(hline, "ring header needs a ring kind");
    ++at;
    // shared module body: gens, optional shifts, rows
    if (at >= lines.size()) fail(hline, "missing module body");
    auto body_gens = [&]() -> std::uint32_t {
      auto gt = split_ws(lines[at].second);
      if (gt.size() != 2 || gt[0] != "gens") fail(lines[at].first, "expected 'gens <count>'");
      std::uint32_t g = to_u32(gt[1], lines[at].first, "generator count");
      if (g == 0) fail(lines[at].first, "generator count must be positive");
      ++at;
      return g;
    };
    auto body_shifts = [&](std::uint32_t g) -> std::vector<std::int64_t> {
      if (at < lines.size()) {
        auto st = split_ws(lines[at].second);
        if (!st.empty() && st[0] == "shifts") {
          if (st.size() != 2) fail(lines[at].first, "expected 'shifts s0,s1,...'");
          std::vector<std::int64_t> sh;
          for (const auto& t : split_commas(st[1]))
            sh.push_back(to_int(t, lines[at].first, "shift"));
          if (sh.size() != g) fail(lines[at].first, "shift count does not match gens");
          ++at;
          return sh;
        }
      }
      return std::vector<std::int64_t>(g, 0);
    };

    if (toks[1] == "Fp") {
      doc.kind = DocKind::graded;
      std::uint32_t p = to_u32(expect_kv(toks, "p", hline), hline, "p");
      if (!fp::is_prime(p)) fail(hline, "p must be prime");
      std::vector<std::string> vars = split_commas(expect_kv(toks, "vars", hline));
      std::vector<std::uint32_t> weights;
      for (const auto& t : split_commas(expect_kv(toks, "weights", hline)))
        weights.push_back(to_u32(t, hline, "weight"));
      RingPtr R;
      try {
        R = make_ring(p, vars, weights);
      } catch (const std::invalid_argument& e) {
        fail(hline, e.what());
      }
      std::uint32_t g = body_gens();
      auto sh = body_shifts(g);
      PolyMatrix rows;
      for (; at < lines.size(); ++at) {
        auto entries = split_commas(lines[at].second);
        if (entries.size() != g)
          fail(lines[at].first, "row has " + std::to_string(entries.size()) + " entries, expected " +
                                    std::to_string(g));
        PolyRow row;
        for (const auto& t : entries) {
          try {
            row.push_back(parse_poly(R, t));
          } catch (const std::invalid_argument& e) {
            fail(lines[at].first, e.what());
          }
        }
        rows.push_back(std::move(row));
      }
      try {
        doc.graded = ModulePresentation(R, g, std::move(rows), std::move(sh));
      } catch (const std::exception& e) {
        fail(hline, e.what());
      }
      return doc;
    }

    if (toks[1] == "Zp[[T]]") {
      doc.kind = DocKind::lambda;
      std::uint32_t p = to_u32(expect_kv(toks, "p", hline), hline, "p");
      if (!fp::is_prime(p)) fail(hline, "p must be prime");
      // prec=3^12,T^20
      auto prec = split_commas(expect_kv(toks, "prec", hline));
      if (prec.size() != 2) fail(hline, "prec must be p^a,T^b");
      auto caret = prec[0].find('^');
      if (caret == std::string::npos) fail(hline, "prec must be p^a,T^b");
      if (to_u32(prec[0].substr(0, caret), hline, "precision base") != p)
        fail(hline, "precision base does not match p");
      std::uint32_t a = to_u32(prec[0].substr(caret + 1), hline, "p-precision");
      if (prec[1].size() < 3 || prec[1][0] != 'T' || prec[1][1] != '^')
        fail(hline, "prec must be p^a,T^b");
      std::uint32_t b = to_u32(prec[1].substr(2), hline, "T-precision");
      if (a == 0 || b == 0) fail(hline, "precision must be positive");

      std::uint32_t g = body_gens();
      auto sh = body_shifts(g);
      std::vector<std::vector<PadicSeries>> rows;
      for (; at < lines.size(); ++at) {
        auto entries = split_commas(lines[at].second);
        if (entries.size() != g)
          fail(lines[at].first, "row has " + std::to_string(entries.size()) + " entries, expected " +
                                    std::to_string(g));
        std::vector<PadicSeries> row;
        for (const auto& t : entries) {
          PadicSeries s;
          try {
            s = parse_series(t);
          } catch (const std::invalid_argument& e) {
            fail(lines[at].first, e.what());
          }
          if (s.p() != p) fail(lines[at].first, "series prime does not match the header");
          if (s.aprec() > a || s.bprec() > b)
            fail(lines[at].first, "series claims more precision than the header");
          row.push_back(std::move(s));
        }
        rows.push_back(std::move(row));
      }
      try {
        doc.lambda = LambdaModule(p, g, std::move(rows), std::move(sh));
        doc.lambda->validate();
      } catch (const std::exception& e) {
        fail(hline, e.what());
      }
      doc.lambda_aprec = a;
      doc.lambda_bwindow = b;
      return doc;
    }

    fail(hline, "unknown ring kind '" + toks[1] + "' (expected Fp or Zp[[T]])");
  }

  // group document: header `p N n c`, then matrices and table lines
  doc.kind = DocKind::group;
  if (toks.size() != 4) fail(hline, "group header must be four integers: p N n c");
  std::uint32_t p = to_u32(toks[0], hline, "p");
  if (!fp::is_prime(p)) fail(hline, "p must be prime");
  std::uint32_t N = to_u32(toks[1], hline, "N");
  std::uint32_t n = to_u32(toks[2], hline, "n");
  std::uint32_t c = to_u32(toks[3], hline, "c");
  ++at;
  for (; at < lines.size(); ++at) {
    auto ts = split_ws(lines[at].second);
    if (ts.size() == static_cast<std::size_t>(n) * n) {
      std::vector<std::uint64_t> m;
      for (const auto& t : ts) {
        std::int64_t v = to_int(t, lines[at].first, "matrix entry");
        if (v < 0) fail(lines[at].first, "matrix entries are residues, must be nonnegative");
        m.push_back(static_cast<std::uint64_t>(v));
      }
      try {
        doc.group.emplace_back(p, n, N, c, std::move(m));
      } catch (const std::invalid_argument& e) {
        fail(lines[at].first, e.what());
      }
    } else if (ts.size() == 3) {
      std::size_t idx = static_cast<std::size_t>(to_u32(ts[0], lines[at].first, "element index"));
      std::int64_t num = to_int(ts[1], lines[at].first, "value numerator");
      std::int64_t den = to_int(ts[2], lines[at].first, "value denominator");
      if (den <= 0) fail(lines[at].first, "value denominator must be positive");
      if (idx >= doc.group.size())
        fail(lines[at].first, "table references element " + std::to_string(idx) +
                                  " but only " + std::to_string(doc.group.size()) +
                                  " matrices precede it");
      doc.table.emplace_back(idx, Omega{num, den, false, false});
    } else {
      fail(lines[at].first, "expected a matrix line (" + std::to_string(n * n) +
                                " entries) or a table line (3 entries)");
    }
  }
  if (doc.group.empty()) fail(hline, "group document has no matrices");
  return doc;
}

std::string InputDocument::str() const {
  std::ostringstream os;
  if (kind == DocKind::graded) {
    const ModulePresentation& M = *graded;
    const RingSpec& R = *M.ring;
    os << "ring Fp p=" << R.p << " vars=";
    for (std::size_t i = 0; i < R.vars.size(); ++i) os << (i ? "," : "") << R.vars[i];
    os << " weights=";
    for (std::size_t i = 0; i < R.weights.size(); ++i) os << (i ? "," : "") << R.weights[i];
    os << "\ngens " << M.gens << "\nshifts ";
    for (std::size_t i = 0; i < M.shifts.size(); ++i) os << (i ? "," : "") << M.shifts[i];
    os << "\n";
    for (const auto& row : M.rels) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i].str();
      os << "\n";
    }
    return os.str();
  }
  if (kind == DocKind::lambda) {
    const LambdaModule& M = *lambda;
    os << "ring Zp[[T]] p=" << M.p << " prec=" << M.p << "^" << lambda_aprec << ",T^"
       << lambda_bwindow;
    os << "\ngens " << M.gens << "\nshifts ";
    for (std::size_t i = 0; i < M.shifts.size(); ++i) os << (i ? "," : "") << M.shifts[i];
    os << "\n";
    for (const auto& row : M.rels) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i].str();
      os << "\n";
    }
    return os.str();
  }
  const GroupElement& g0 = group.front();
  os << g0.p << " " << g0.N << " " << g0.n << " " << g0.c << "\n";
  for (const auto& g : group) {
    for (std::size_t i = 0; i < g.m.size(); ++i) os << (i ? " " : "") << g.m[i];
    os << "\n";
  }
  for (const auto& [idx, om] : table) os << idx << " " << om.num << " " << om.den << "\n";
  return os.str();
}

} // namespace iwa

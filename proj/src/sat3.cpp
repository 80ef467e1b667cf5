#include "simonls/sat3.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "simonls/anf_props.hpp"
#include "simonls/boolfn.hpp"
#include "simonls/error.hpp"

namespace simonls {

namespace {

constexpr unsigned kSolveCap = 24;
constexpr unsigned kEquisatCap = 20;

long parse_long(std::string_view tok) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(ErrorCode::kParse, "bad integer '" + std::string(tok) + "' in CNF");
  }
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Cnf3 Cnf3::parse(std::string_view text) {
  Cnf3 c;
  bool have_header = false;
  long declared = -1;
  std::vector<Literal> pending;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == 'c' || toks[0][0] == '%') continue;
    if (toks[0] == "p") {
      if (have_header || toks.size() != 4 || toks[1] != "cnf") fail(ErrorCode::kParse, "bad CNF header line");
      const long n = parse_long(toks[2]);
      declared = parse_long(toks[3]);
      if (n < 1 || n > static_cast<long>(kHardDimensionLimit) || declared < 0) {
        fail(ErrorCode::kParse, "CNF header values out of range");
      }
      c.n = static_cast<unsigned>(n);
      have_header = true;
      continue;
    }
    if (!have_header) fail(ErrorCode::kParse, "clause before 'p cnf' header");
    for (auto tok : toks) {
      const long lit = parse_long(tok);
      if (lit == 0) {
        if (pending.size() != 3) {
          fail(ErrorCode::kParse, "clause " + std::to_string(c.clauses.size() + 1) + " has " +
                                      std::to_string(pending.size()) + " literals; exactly 3 required");
        }
        c.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long var = std::labs(lit);
      if (var > static_cast<long>(c.n)) fail(ErrorCode::kParse, "literal " + std::to_string(lit) + " out of range");
      pending.push_back(Literal{static_cast<unsigned>(var), lit < 0});
    }
  }
  if (!have_header) fail(ErrorCode::kParse, "missing 'p cnf' header");
  if (!pending.empty()) fail(ErrorCode::kParse, "last clause is not terminated by 0");
  if (static_cast<long>(c.clauses.size()) != declared) {
    fail(ErrorCode::kParse, "header declares " + std::to_string(declared) + " clauses, found " +
                                std::to_string(c.clauses.size()));
  }
  return c;
}

std::string Cnf3::to_dimacs() const {
  std::ostringstream os;
  os << "p cnf " << n << ' ' << clauses.size() << '\n';
  for (const auto& cl : clauses) {
    for (const auto& l : cl) os << (l.negated ? "-" : "") << l.var << ' ';
    os << "0\n";
  }
  return os.str();
}

bool Cnf3::satisfied_by(uint64_t assignment) const {
  for (const auto& cl : clauses) {
    bool sat = false;
    for (const auto& l : cl) sat = sat || (((assignment >> (l.var - 1)) & 1) != l.negated);
    if (!sat) return false;
  }
  return true;
}

bool ProductEquationSystem::solved_by(uint64_t s) const {
  for (const auto& eq : equations) {
    bool product = true;
    for (const auto& f : eq) product = product && (((s >> (f.var - 1)) & 1) != f.r);
    if (product) return false;
  }
  return true;
}

std::string ProductEquationSystem::to_string() const {
  std::string out;
  for (const auto& eq : equations) {
    for (const auto& f : eq) out += "(s" + std::to_string(f.var) + "+" + (f.r ? "1" : "0") + ")";
    out += "=0\n";
  }
  return out;
}

ProductEquationSystem reduce(const Cnf3& c) {
  ProductEquationSystem sys;
  sys.n = c.n;
  sys.equations.reserve(c.clauses.size());
  for (const auto& cl : c.clauses) {
    std::array<ProductFactor, 3> eq{};
    for (size_t j = 0; j < 3; ++j) eq[j] = ProductFactor{cl[j].var, !cl[j].negated};
    sys.equations.push_back(eq);
  }
  return sys;
}

std::optional<BitVector> solve_brute(const ProductEquationSystem& sys) {
  if (sys.n == 0 || sys.n > kSolveCap) fail(ErrorCode::kCapExceeded, "solve_brute: n must be in [1, 24]");
  for (uint64_t s = 0; s < (uint64_t{1} << sys.n); ++s) {
    if (sys.solved_by(s)) return BitVector(sys.n, s);
  }
  return std::nullopt;
}

bool equisat_check(const Cnf3& c) {
  if (c.n == 0 || c.n > kEquisatCap) fail(ErrorCode::kCapExceeded, "equisat_check: n must be in [1, 20]");
  bool cnf_sat = false;
  for (uint64_t a = 0; a < (uint64_t{1} << c.n) && !cnf_sat; ++a) cnf_sat = c.satisfied_by(a);
  return cnf_sat == solve_brute(reduce(c)).has_value();
}

Theorem4Case parse_theorem4_case(std::string_view name) {
  if (name == "1") return Theorem4Case::k1;
  if (name == "2a") return Theorem4Case::k2a;
  if (name == "2b") return Theorem4Case::k2b;
  if (name == "2c") return Theorem4Case::k2c;
  fail(ErrorCode::kInvalidArgument, "unknown case '" + std::string(name) + "' (expected 1, 2a, 2b or 2c)");
}

bool theorem4_verify(Theorem4Case which, unsigned k, const Theorem4Params& params) {
  const unsigned n = params.n;
  const bool case1 = which == Theorem4Case::k1;
  if (k < (case1 ? 4u : 3u)) fail(ErrorCode::kInvalidArgument, case1 ? "case 1 needs k >= 4" : "case 2 needs k >= 3");
  if (params.indices.size() != k) fail(ErrorCode::kInvalidArgument, "expected exactly k indices");
  if (n == 0 || n > kSolveCap) fail(ErrorCode::kCapExceeded, "theorem4_verify: n must be in [1, 24]");
  uint64_t seen = 0;
  for (unsigned i : params.indices) {
    if (i == 0 || i > n) fail(ErrorCode::kInvalidArgument, "index out of range");
    const uint64_t bit = uint64_t{1} << (i - 1);
    if (seen & bit) fail(ErrorCode::kInvalidArgument, "indices must be distinct");
    seen |= bit;
  }
  auto var = [&](unsigned j) { return uint64_t{1} << (params.indices[j - 1] - 1); };  // x_{i_j}

  // Probed x-monomial and the (up to four) trailing variables.
  const unsigned prefix = case1 ? k - 4 : k - 3;
  uint64_t probe = 0;
  for (unsigned j = 1; j <= prefix; ++j) probe |= var(j);
  const uint64_t a = var(k - 2);
  const uint64_t b = var(k - 1);
  const uint64_t c = var(k);

  std::vector<uint64_t> terms;
  std::vector<uint64_t> expected;  // product form, built by multilinear multiplication
  auto times_plus_one = [](std::vector<uint64_t> poly, uint64_t v) {
    // poly * (s_v + 1)
    std::vector<uint64_t> out = poly;
    for (uint64_t m : poly) out.push_back(m | v);
    return out;
  };
  switch (which) {
    case Theorem4Case::k1: {
      const uint64_t lead = var(k - 3);
      for (uint64_t q = 0; q < 8; ++q) {
        terms.push_back(probe | lead | ((q & 1) ? a : 0) | ((q & 2) ? b : 0) | ((q & 4) ? c : 0));
      }
      expected = times_plus_one(times_plus_one(times_plus_one({lead}, a), b), c);
      break;
    }
    case Theorem4Case::k2a:
      terms = {probe | a | b | c, probe | a | b, probe | a | c, probe | a};
      expected = times_plus_one(times_plus_one({a}, b), c);
      break;
    case Theorem4Case::k2b:
      terms = {probe | a | b | c, probe | a | b};
      expected = times_plus_one({a | b}, c);
      break;
    case Theorem4Case::k2c:
      terms = {probe | a | b | c};
      expected = {a | b | c};
      break;
  }
  for (uint64_t t : params.extra_terms) {
    if ((t & probe) == probe) fail(ErrorCode::kInvalidArgument, "extra term contains the probed monomial");
    terms.push_back(t);
  }

  const Anf f(n, terms);
  const Anf want(n, expected);
  Anf got(n);
  for (const auto& cond : theorem2_system(f)) {
    if (cond.x_monomial == probe) got = cond.polynomial;
  }
  return got == want;
}

}  // namespace simonls

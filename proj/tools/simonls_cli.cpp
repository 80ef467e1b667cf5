// simonls command-line front end. Talks to the library exclusively through
// the C API in simonls/simonls.h.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "simonls/simonls.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr uint64_t kDefaultSeed = 0x53494D4F4EULL;  // "SIMON"

// Thrown for anything the caller did wrong (bad flags, unreadable or malformed input).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(sls_status st, const char* what) {
  if (st != SLS_OK) {
    std::string msg = std::string(what) + ": " + sls_status_string(st);
    const std::string detail = sls_last_error();
    if (!detail.empty()) msg += " (" + detail + ")";
    throw UsageError(msg);
  }
}

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using TablePtr = std::unique_ptr<sls_truth_table, HandleDeleter<sls_truth_table, sls_tt_free>>;
using MultiPtr = std::unique_ptr<sls_multi_table, HandleDeleter<sls_multi_table, sls_mt_free>>;
using ReportPtr = std::unique_ptr<sls_report, HandleDeleter<sls_report, sls_report_free>>;
using AnfPtr = std::unique_ptr<sls_anf, HandleDeleter<sls_anf, sls_anf_free>>;
using CnfPtr = std::unique_ptr<sls_cnf, HandleDeleter<sls_cnf, sls_cnf_free>>;

std::string take_string(char* s) {
  std::string out(s);
  sls_string_free(s);
  return out;
}

std::string bits_to_string(uint64_t v, unsigned n) {
  std::string s(n, '0');
  for (unsigned i = 0; i < n; ++i) {
    if ((v >> i) & 1) s[i] = '1';
  }
  return s;
}

uint64_t string_to_bits(const std::string& s, unsigned n) {
  if (s.size() != n) throw UsageError("bit string '" + s + "' must have length " + std::to_string(n));
  uint64_t v = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (s[i] == '1') {
      v |= uint64_t{1} << i;
    } else if (s[i] != '0') {
      throw UsageError("bad bit string '" + s + "'");
    }
  }
  return v;
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw UsageError("input '" + path + "' is empty");
  }
  return text;
}

// Bit-string vectors, one per line.
std::vector<uint64_t> read_vectors(const std::string& path, unsigned n) {
  std::istringstream in(read_input(path));
  std::vector<uint64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(string_to_bits(line.substr(b, e - b + 1), n));
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

json vector_list(const std::vector<uint64_t>& words, unsigned n) {
  json arr = json::array();
  for (uint64_t w : words) arr.push_back(bits_to_string(w, n));
  return arr;
}

std::vector<uint64_t> report_words(const sls_report* r, sls_status (*getter)(const sls_report*, uint64_t*, size_t,
                                                                               size_t*)) {
  size_t len = 0;
  getter(r, nullptr, 0, &len);
  std::vector<uint64_t> out(len);
  check(getter(r, out.data(), out.size(), &len), "report");
  return out;
}

struct GlobalFlags {
  uint64_t seed = kDefaultSeed;
  unsigned n_cap = 0;
  std::string out;
  std::string format;
};

// ---- plant -------------------------------------------------------------

struct PlantFlags {
  unsigned n = 0;
  unsigned dim = 0;
  std::string basis_file;
  bool periods = false;
  uint64_t r = 0;
};

int run_plant(const GlobalFlags& g, const PlantFlags& p) {
  std::vector<uint64_t> basis;
  if (!p.basis_file.empty()) {
    basis = read_vectors(p.basis_file, p.n);
  } else {
    if (p.dim > p.n) throw UsageError("--dim exceeds --n");
    basis.resize(p.dim);
    check(sls_random_subspace(p.n, p.dim, sls_split_seed(g.seed, 0), basis.data()), "plant");
  }
  Output out(g.out);
  char* text = nullptr;
  if (p.periods) {
    sls_multi_table* raw = nullptr;
    check(sls_mt_plant_periods(p.n, basis.data(), basis.size(), sls_split_seed(g.seed, 1), &raw), "plant");
    MultiPtr F(raw);
    check(sls_mt_format(F.get(), &text), "plant");
  } else {
    sls_truth_table* raw = nullptr;
    check(sls_tt_plant(p.n, basis.data(), basis.size(), sls_split_seed(g.seed, 1), &raw), "plant");
    TablePtr f(raw);
    if (p.r > 0) {
      check(sls_tt_plant_r_type(f.get(), p.r, sls_split_seed(g.seed, 2), &raw), "plant");
      f.reset(raw);
    }
    check(sls_tt_format(f.get(), &text), "plant");
  }
  out.stream() << take_string(text);
  return kExitOk;
}

// ---- find --------------------------------------------------------------

struct FindFlags {
  std::string file;
  std::string mode = "simple";
  unsigned rounds_cap = 0;
  uint64_t verify_p = 0;
  unsigned stabilize_window = 3;
  unsigned anchor_count = 0;
  bool oracle_check = false;
};

int run_find(const GlobalFlags& g, const FindFlags& fl) {
  sls_run_config cfg;
  sls_run_config_init(&cfg);
  cfg.rounds_cap = fl.rounds_cap;
  cfg.verify_p = fl.verify_p;
  cfg.stabilize_window = fl.stabilize_window;
  cfg.anchor_count = fl.anchor_count;
  cfg.oracle_check = fl.oracle_check ? 1 : 0;
  cfg.seed = g.seed;

  const std::string text = read_input(fl.file);
  json j;
  j["schema"] = "1";
  j["mode"] = fl.mode;
  sls_report* raw = nullptr;
  bool oracle_failed = false;
  if (fl.mode == "periods") {
    sls_multi_table* mraw = nullptr;
    check(sls_mt_parse(text.c_str(), &mraw), "find");
    MultiPtr F(mraw);
    check(sls_find_periods(F.get(), &cfg, &raw), "find");
  } else {
    sls_truth_table* traw = nullptr;
    check(sls_tt_parse(text.c_str(), &traw), "find");
    TablePtr f(traw);
    const sls_mode mode = fl.mode == "iterative" ? SLS_MODE_ITERATIVE : SLS_MODE_SIMPLE;
    check(sls_find_structure(f.get(), &cfg, mode, &raw), "find");
  }
  ReportPtr report(raw);
  const unsigned n = sls_report_n(report.get());
  const auto candidate = report_words(report.get(), sls_report_candidate);
  const auto ys = report_words(report.get(), sls_report_ys);
  j["n"] = n;
  j["candidate"] = vector_list(candidate, n);
  j["dim"] = candidate.size();
  if (fl.mode != "periods") j["verified"] = sls_report_flag(report.get(), "verified") == 1;
  j["stabilized"] = sls_report_flag(report.get(), "stabilized") == 1;
  j["rounds_used"] = sls_report_counter(report.get(), "rounds");
  j["passes_used"] = sls_report_counter(report.get(), "passes");
  if (fl.mode != "periods") {
    j["oracle_checked"] = sls_report_flag(report.get(), "oracle_checked") == 1;
    if (fl.oracle_check) {
      const bool match = sls_report_flag(report.get(), "oracle_match") == 1;
      j["oracle_match"] = match;
      oracle_failed = !match;
    }
    j["pseudo_flag"] = sls_report_flag(report.get(), "pseudo_flag") == 1;
  }
  j["ys_collected"] = vector_list(ys, n);
  Output out(g.out);
  out.stream() << j.dump(2) << '\n';
  return oracle_failed ? kExitVerifyFailed : kExitOk;
}

// ---- sample ------------------------------------------------------------

struct SampleFlags {
  std::string file;
  std::string anchors = "random:1";
  unsigned rounds = 1;
  std::string trace;
};

int run_sample(const GlobalFlags& g, const SampleFlags& s) {
  sls_truth_table* raw = nullptr;
  check(sls_tt_parse(read_input(s.file).c_str(), &raw), "sample");
  TablePtr f(raw);
  const unsigned n = sls_tt_n(f.get());
  std::vector<uint64_t> anchors;
  if (s.anchors.rfind("random:", 0) == 0) {
    size_t k = 0;
    try {
      k = std::stoul(s.anchors.substr(7));
    } catch (const std::exception&) {
      throw UsageError("bad --anchors value '" + s.anchors + "'");
    }
    anchors.resize(k);
    check(sls_random_words(n, k, sls_split_seed(g.seed, 0), anchors.data()), "sample");
  } else {
    anchors = read_vectors(s.anchors, n);
  }
  if (anchors.empty()) throw UsageError("at least one anchor is required");

  Output out(g.out);
  std::ofstream trace_file;
  std::string trace_path = s.trace;
  if (trace_path.empty() && !g.out.empty() && g.out != "-") trace_path = g.out + ".trace.jsonl";
  if (!trace_path.empty()) {
    trace_file.open(trace_path, std::ios::binary | std::ios::trunc);
    if (!trace_file) throw UsageError("cannot write '" + trace_path + "'");
  }
  std::ostream& trace = trace_file.is_open() ? static_cast<std::ostream&>(trace_file) : std::cerr;

  std::vector<uint8_t> observed(anchors.size() + 1);
  for (unsigned round = 0; round < s.rounds; ++round) {
    uint64_t y = 0;
    uint64_t size = 0;
    check(sls_sample_round(f.get(), anchors.data(), anchors.size(), sls_split_seed(g.seed, 1000 + round), &y,
                           observed.data(), &size),
          "sample");
    out.stream() << bits_to_string(y, n) << '\n';
    std::string word;
    for (uint8_t b : observed) word += b ? '1' : '0';
    json line;
    line["round"] = round;
    line["observed"] = word;
    line["set_size"] = size;
    line["y"] = bits_to_string(y, n);
    trace << line.dump() << '\n';
  }
  return kExitOk;
}

// ---- oracle ------------------------------------------------------------

struct OracleFlags {
  std::string file;
  std::optional<uint64_t> r_type;
};

int run_oracle(const GlobalFlags& g, const OracleFlags& o) {
  sls_truth_table* raw = nullptr;
  check(sls_tt_parse(read_input(o.file).c_str(), &raw), "oracle");
  TablePtr f(raw);
  const unsigned n = sls_tt_n(f.get());
  std::vector<int64_t> spectrum(size_t{1} << n);
  check(sls_oracle_spectrum(f.get(), spectrum.data(), spectrum.size()), "oracle");
  size_t u0_len = 0;
  size_t u1_len = 0;
  std::vector<uint64_t> u0(n);
  std::vector<uint64_t> u1(size_t{1} << n);
  check(sls_oracle_structures(f.get(), u0.data(), u0.size(), &u0_len, u1.data(), u1.size(), &u1_len), "oracle");
  u0.resize(u0_len);
  u1.resize(u1_len);

  struct RRow {
    uint64_t alpha;
    uint8_t c;
    uint64_t violations;
  };
  std::vector<RRow> rrows;
  if (o.r_type) {
    size_t len = 0;
    const size_t cap = size_t{1} << n;
    std::vector<uint64_t> alphas(cap), viol(cap);
    std::vector<uint8_t> cs(cap);
    check(sls_oracle_r_type(f.get(), *o.r_type, alphas.data(), cs.data(), viol.data(), cap, &len), "oracle");
    for (size_t i = 0; i < len; ++i) rrows.push_back(RRow{alphas[i], cs[i], viol[i]});
  }

  Output out(g.out);
  const int64_t full = int64_t{1} << n;
  if (g.format == "csv") {
    auto& os = out.stream();
    os << "# schema=1\nalpha,autocorrelation,class\n";
    for (size_t a = 0; a < spectrum.size(); ++a) {
      const char* cls = spectrum[a] == full ? "u0" : spectrum[a] == -full ? "u1" : "-";
      os << bits_to_string(a, n) << ',' << spectrum[a] << ',' << cls << '\n';
    }
    if (o.r_type) {
      os << "# r_type r=" << *o.r_type << "\nalpha,c,violations\n";
      for (const auto& row : rrows) {
        os << bits_to_string(row.alpha, n) << ',' << int(row.c) << ',' << row.violations << '\n';
      }
    }
    return kExitOk;
  }
  json j;
  j["schema"] = "1";
  j["n"] = n;
  j["spectrum"] = spectrum;
  j["u0_basis"] = vector_list(u0, n);
  j["u0_dim"] = u0.size();
  j["u1"] = vector_list(u1, n);
  if (o.r_type) {
    json arr = json::array();
    for (const auto& row : rrows) {
      arr.push_back({{"alpha", bits_to_string(row.alpha, n)}, {"c", int(row.c)}, {"violations", row.violations}});
    }
    j["r_type"] = {{"r", *o.r_type}, {"entries", arr}};
  }
  out.stream() << j.dump(2) << '\n';
  return kExitOk;
}

// ---- prob --------------------------------------------------------------

struct ProbFlags {
  unsigned n = 0;
  unsigned kmax = 0;
  std::string csv;
  bool verify = false;
};

int run_prob(const GlobalFlags& g, const ProbFlags& p) {
  if (p.verify) {
    Output out(g.out);
    auto& os = out.stream();
    bool ok = true;
    double max_err = 0;
    bool exact_ok = true;
    for (unsigned n = 1; n <= 8; ++n) {
      for (unsigned i = 0; i <= 12; ++i) {
        double a = 0, b = 0;
        int agree = 0;
        check(sls_prob_q(n, i, &a), "prob");
        check(sls_prob_q_direct(n, i, &b), "prob");
        check(sls_prob_q_exact_agree(n, i, &agree), "prob");
        max_err = std::max(max_err, std::abs(a - b));
        exact_ok = exact_ok && agree == 1;
      }
    }
    const bool q_ok = max_err <= 1e-12 && exact_ok;
    ok = ok && q_ok;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s q-recurrence-vs-direct max_abs_err=%.3e exact_agree=%d\n",
                  q_ok ? "PASS" : "FAIL", max_err, exact_ok ? 1 : 0);
    os << buf;
    constexpr uint64_t kTrials = 10000;
    for (unsigned n : {4u, 8u}) {
      for (unsigned k = n; k <= n + 8; ++k) {
        double s = 0, rate = 0;
        check(sls_prob_s(n, k, &s), "prob");
        check(sls_prob_rank_success(n, k, kTrials, sls_split_seed(g.seed, n * 100 + k), &rate), "prob");
        const double se = std::sqrt(s * (1 - s) / kTrials);
        const bool pass = std::abs(rate - s) <= 3 * se + 1e-12;
        ok = ok && pass;
        std::snprintf(buf, sizeof buf, "%s monte-carlo n=%u k=%u s=%.6f measured=%.4f se=%.5f\n",
                      pass ? "PASS" : "FAIL", n, k, s, rate, se);
        os << buf;
      }
    }
    return ok ? kExitOk : kExitVerifyFailed;
  }
  if (p.n == 0) throw UsageError("prob needs --n (or --verify)");
  const unsigned kmax = p.kmax == 0 ? p.n + 16 : p.kmax;
  char* text = nullptr;
  check(sls_prob_table_csv(p.n, kmax, &text), "prob");
  const std::string csv = take_string(text);
  Output out(p.csv.empty() ? g.out : p.csv);
  if (g.format == "json") {
    json j;
    j["schema"] = "1";
    j["n"] = p.n;
    json rows = json::array();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // schema comment
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string n_s, k_s, s_s, h_s;
      std::getline(ls, n_s, ',');
      std::getline(ls, k_s, ',');
      std::getline(ls, s_s, ',');
      std::getline(ls, h_s, ',');
      rows.push_back({{"k", std::stoul(k_s)}, {"s", std::stod(s_s)}, {"h", std::stod(h_s)}});
    }
    j["rows"] = rows;
    out.stream() << j.dump(2) << '\n';
  } else {
    out.stream() << csv;
  }
  return kExitOk;
}

// ---- anf ---------------------------------------------------------------

struct AnfFlags {
  std::string text;
  unsigned n = 0;
  bool classify = false;
  bool system = false;
  std::string check_s;
  bool truth_table = false;
};

int run_anf(const GlobalFlags& g, const AnfFlags& a) {
  if (a.text.empty()) throw UsageError("anf needs --anf \"<polynomial>\"");
  sls_anf* raw = nullptr;
  check(sls_anf_parse(a.text.c_str(), a.n, &raw), "anf");
  AnfPtr f(raw);
  const unsigned n = sls_anf_n(f.get());
  char* text = nullptr;
  check(sls_anf_format(f.get(), &text), "anf");
  json j;
  j["schema"] = "1";
  j["n"] = n;
  j["anf"] = take_string(text);
  if (a.truth_table) {
    sls_truth_table* traw = nullptr;
    check(sls_anf_truth_table(f.get(), &traw), "anf");
    TablePtr t(traw);
    check(sls_tt_format(t.get(), &text), "anf");
    std::string file = take_string(text);
    j["truth_table"] = file.substr(file.find('\n') + 1, (size_t{1} << n));
  }
  if (a.classify) {
    int property = 0, kind = 0;
    unsigned m = 0;
    uint64_t forced = 0;
    check(sls_anf_classify(f.get(), &property, &m, &kind, &forced), "anf");
    static const char* kKinds[] = {"undetermined", "zero", "vector", "all_ones"};
    json c;
    c["property"] = property;
    c["m"] = m;
    c["forced_kind"] = kKinds[kind];
    if (kind >= 2) c["forced_s"] = bits_to_string(forced, n);
    j["classify"] = c;
  }
  if (a.system) {
    check(sls_anf_system(f.get(), &text), "anf");
    std::istringstream in(take_string(text));
    json lines = json::array();
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    j["system"] = lines;
  }
  if (!a.check_s.empty()) {
    const uint64_t s = string_to_bits(a.check_s, n);
    sls_anf* graw = nullptr;
    check(sls_anf_derivative(f.get(), s, &graw), "anf");
    AnfPtr g_anf(graw);
    check(sls_anf_format(g_anf.get(), &text), "anf");
    const std::string g_text = take_string(text);
    j["check_s"] = {{"s", a.check_s}, {"g", g_text}, {"in_u0", g_text == "0"}};
  }
  Output out(g.out);
  out.stream() << j.dump(2) << '\n';
  return kExitOk;
}

// ---- sat3 --------------------------------------------------------------

struct SatFlags {
  std::string cnf;
  bool reduce = false;
  bool solve = false;
  bool equisat = false;
  std::string theorem4_case;
  unsigned k = 3;
  unsigned n = 0;
  std::vector<unsigned> indices;
};

int run_sat3(const GlobalFlags& g, const SatFlags& s) {
  if (s.cnf.empty() && s.theorem4_case.empty()) throw UsageError("sat3 needs --cnf or --verify-theorem4");
  json j;
  j["schema"] = "1";
  bool failed = false;
  if (!s.cnf.empty()) {
    sls_cnf* raw = nullptr;
    check(sls_cnf_parse(read_input(s.cnf).c_str(), &raw), "sat3");
    CnfPtr c(raw);
    const unsigned n = sls_cnf_n(c.get());
    j["n"] = n;
    if (s.reduce) {
      char* text = nullptr;
      check(sls_cnf_reduce(c.get(), &text), "sat3");
      std::istringstream in(take_string(text));
      json lines = json::array();
      std::string line;
      while (std::getline(in, line)) lines.push_back(line);
      j["reduce"] = lines;
    }
    if (s.solve) {
      int found = 0;
      uint64_t sol = 0;
      check(sls_cnf_solve(c.get(), &found, &sol), "sat3");
      j["solve"] = found ? json{{"found", true}, {"s", bits_to_string(sol, n)}} : json{{"found", false}};
    }
    if (s.equisat) {
      int ok = 0;
      check(sls_cnf_equisat(c.get(), &ok), "sat3");
      j["equisat"] = ok == 1;
      failed = failed || ok != 1;
    }
  }
  if (!s.theorem4_case.empty()) {
    std::vector<unsigned> indices = s.indices;
    if (indices.empty()) {
      for (unsigned i = 1; i <= s.k; ++i) indices.push_back(i);
    }
    const unsigned n = s.n == 0 ? s.k + 1 : s.n;
    int ok = 0;
    check(sls_theorem4_verify(s.theorem4_case.c_str(), s.k, n, indices.data(), &ok), "sat3");
    j["theorem4"] = {{"case", s.theorem4_case}, {"k", s.k}, {"n", n}, {"indices", indices}, {"holds", ok == 1}};
    failed = failed || ok != 1;
  }
  Output out(g.out);
  out.stream() << j.dump(2) << '\n';
  return failed ? kExitVerifyFailed : kExitOk;
}

// ---- bench -------------------------------------------------------------

struct BenchFlags {
  unsigned n_min = 12;
  unsigned n_max = 18;
  bool check_scaling = false;
};

int run_bench(const GlobalFlags& g, const BenchFlags& b) {
  if (b.n_min == 0 || b.n_min > b.n_max) throw UsageError("bench needs 1 <= --n-min <= --n-max");
  if (b.n_max > sls_dimension_cap()) {
    throw UsageError("--n-max " + std::to_string(b.n_max) + " exceeds the dimension cap " +
                     std::to_string(sls_dimension_cap()));
  }
  using clock = std::chrono::steady_clock;
  Output out(g.out);
  auto& os = out.stream();
  os << "# schema=1\nn,spectrum_seconds,find_seconds,spectrum_ratio\n";
  double prev = 0;
  bool scaling_ok = true;
  for (unsigned n = b.n_min; n <= b.n_max; ++n) {
    const unsigned dim = n >= 3 ? 2 : 0;
    std::vector<uint64_t> basis(dim);
    check(sls_random_subspace(n, dim, sls_split_seed(g.seed, n), basis.data()), "bench");
    sls_truth_table* raw = nullptr;
    check(sls_tt_plant(n, basis.data(), basis.size(), sls_split_seed(g.seed, 100 + n), &raw), "bench");
    TablePtr f(raw);
    std::vector<int64_t> spectrum(size_t{1} << n);

    // Repeat until enough wall time has accumulated for a stable mean.
    unsigned reps = 0;
    const auto t0 = clock::now();
    auto elapsed = clock::duration::zero();
    do {
      check(sls_oracle_spectrum(f.get(), spectrum.data(), spectrum.size()), "bench");
      ++reps;
      elapsed = clock::now() - t0;
    } while (elapsed < std::chrono::milliseconds(50) && reps < 100000);
    const double spectrum_s = std::chrono::duration<double>(elapsed).count() / reps;

    sls_run_config cfg;
    sls_run_config_init(&cfg);
    cfg.seed = g.seed;
    sls_report* rraw = nullptr;
    const auto t1 = clock::now();
    check(sls_find_structure(f.get(), &cfg, SLS_MODE_SIMPLE, &rraw), "bench");
    const double find_s = std::chrono::duration<double>(clock::now() - t1).count();
    ReportPtr report(rraw);

    const double ratio = prev > 0 ? spectrum_s / prev : 0;
    if (prev > 0 && b.check_scaling && (ratio < 1.8 || ratio > 2.6)) scaling_ok = false;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%u,%.9f,%.9f,%.3f\n", n, spectrum_s, find_s, ratio);
    os << buf;
    prev = spectrum_s;
  }
  return scaling_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simonls: simulator and classical oracles for Simon-style linear-structure finding"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalFlags global;
  app.add_option("--seed", global.seed, "Master seed (default 0x53494D4F4E, \"SIMON\")")->capture_default_str();
  app.add_option("--n-cap", global.n_cap, "Dimension cap for n (default 24, at most 64)");
  app.add_option("--out", global.out, "Write the primary output to this path instead of stdout");
  app.add_option("--format", global.format, "Tabular output format")->check(CLI::IsMember({"csv", "json"}));

  PlantFlags plant;
  auto* plant_cmd = app.add_subcommand("plant", "Generate an instance with a known structure or period set");
  plant_cmd->add_option("--n", plant.n, "Number of input variables")->required();
  plant_cmd->add_option("--dim", plant.dim, "Dimension of a random structure span");
  plant_cmd->add_option("--basis", plant.basis_file, "File of basis vectors (one bit string per line)");
  plant_cmd->add_flag("--periods", plant.periods, "Emit a multi-output table with that period span");
  plant_cmd->add_option("--r", plant.r, "Flip the planted table on r random inputs (pseudo structures)");

  FindFlags find;
  auto* find_cmd = app.add_subcommand("find", "Recover U_f^(0) (or the periods of F) by simulated sampling");
  find_cmd->add_option("--f", find.file, "Truth-table file, '-' for stdin")->required();
  find_cmd->add_option("--mode", find.mode, "simple | iterative | periods")
      ->check(CLI::IsMember({"simple", "iterative", "periods"}))
      ->capture_default_str();
  find_cmd->add_option("--rounds-cap", find.rounds_cap, "Sampling rounds per solve and pass budget (default 8n)");
  find_cmd->add_option("--verify-p", find.verify_p, "Verification samples per basis vector (default max(64, 4n))");
  find_cmd->add_option("--stabilize-window", find.stabilize_window, "Span-equal passes required (iterative)")
      ->capture_default_str();
  find_cmd->add_option("--anchor-count", find.anchor_count, "Anchor count l (default n)");
  find_cmd->add_flag("--oracle-check", find.oracle_check, "Cross-check against brute force; exit 1 on mismatch");

  SampleFlags sample;
  auto* sample_cmd = app.add_subcommand("sample", "Simulate collapse-and-measure rounds; one y per line");
  sample_cmd->add_option("--f", sample.file, "Truth-table file, '-' for stdin")->required();
  sample_cmd->add_option("--anchors", sample.anchors, "Anchor file or random:<k>")->capture_default_str();
  sample_cmd->add_option("--rounds", sample.rounds, "Number of rounds")->capture_default_str();
  sample_cmd->add_option("--trace", sample.trace,
                         "JSON-lines trace path (default <out>.trace.jsonl, or stderr without --out)");

  OracleFlags oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Autocorrelation spectrum and exact structure sets");
  oracle_cmd->add_option("--f", oracle.file, "Truth-table file, '-' for stdin")->required();
  oracle_cmd->add_option("--r-type", oracle.r_type, "Also list every r-type structure for this r");

  ProbFlags prob;
  auto* prob_cmd = app.add_subcommand("prob", "Success-probability table s(n,k), h(n,k)");
  prob_cmd->add_option("--n", prob.n, "Dimension");
  prob_cmd->add_option("--kmax", prob.kmax, "Largest k (default n+16)");
  prob_cmd->add_option("--csv", prob.csv, "Write the CSV table to this path");
  prob_cmd->add_flag("--verify", prob.verify, "Check the recurrence against the direct sum and Monte Carlo");

  AnfFlags anf;
  auto* anf_cmd = app.add_subcommand("anf", "Derivative conditions and top-degree classifiers for an ANF");
  anf_cmd->add_option("--anf", anf.text, "Polynomial, e.g. \"x1*x2 + x3 + 1\"")->required();
  anf_cmd->add_option("--n", anf.n, "Variable count (default: largest index used)");
  anf_cmd->add_flag("--classify", anf.classify, "Apply the top-degree pattern classifiers");
  anf_cmd->add_flag("--system", anf.system, "List the coefficient-vanishing conditions on s");
  anf_cmd->add_option("--check-s", anf.check_s, "Expand g(x) = f(x+s) + f(x) for this s");
  anf_cmd->add_flag("--tt", anf.truth_table, "Include the truth table");

  SatFlags sat;
  auto* sat_cmd = app.add_subcommand("sat3", "3SAT to product equations, brute-force solving, pattern identities");
  sat_cmd->add_option("--cnf", sat.cnf, "DIMACS-like CNF file with three literals per clause");
  sat_cmd->add_flag("--reduce", sat.reduce, "Print the product-equation system");
  sat_cmd->add_flag("--solve", sat.solve, "Find the smallest solving s");
  sat_cmd->add_flag("--equisat", sat.equisat, "Check CNF satisfiability against the reduced system");
  sat_cmd->add_option("--verify-theorem4", sat.theorem4_case, "Pattern case: 1, 2a, 2b or 2c")
      ->check(CLI::IsMember({"1", "2a", "2b", "2c"}));
  sat_cmd->add_option("--k", sat.k, "Pattern degree k")->capture_default_str();
  sat_cmd->add_option("--n", sat.n, "Variable count (default k+1)");
  sat_cmd->add_option("--indices", sat.indices, "The k distinct indices i_1..i_k (default 1..k)");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the spectrum transform and one recovery run per n");
  bench_cmd->add_option("--n-min", bench.n_min, "Smallest n")->capture_default_str();
  bench_cmd->add_option("--n-max", bench.n_max, "Largest n")->capture_default_str();
  bench_cmd->add_flag("--check-scaling", bench.check_scaling,
                      "Exit 1 unless consecutive spectrum times grow by a factor in [1.8, 2.6]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (global.n_cap != 0) sls_set_dimension_cap(global.n_cap);
    if (*plant_cmd) return run_plant(global, plant);
    if (*find_cmd) return run_find(global, find);
    if (*sample_cmd) return run_sample(global, sample);
    if (*oracle_cmd) return run_oracle(global, oracle);
    if (*prob_cmd) return run_prob(global, prob);
    if (*anf_cmd) return run_anf(global, anf);
    if (*sat_cmd) return run_sat3(global, sat);
    if (*bench_cmd) return run_bench(global, bench);
  } catch (const UsageError& e) {
    std::cerr << "simonls: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "simonls: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

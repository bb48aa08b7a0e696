// nilorb: nilpotent coadjoint orbits of Sp(2n), O(2n+1), O(2n) in characteristic 2.
//
// Exit codes: 0 ok, 1 verification failure or internal error, 2 invalid
// flags or input, 3 size bound exceeded, 4 non-nilpotent input.

#include <nilorb/nilorb.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace nilorb;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;
constexpr int kExitNotNilpotent = 4;
constexpr int kClosedMaxN = 20;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "closed" or a field order 2^e, e ≤ 8.
const Field* field_for_q(const std::string& q)
{
  if (q == "closed")
    return nullptr;
  for (int e = 1; e <= 8; ++e)
    if (q == std::to_string(1u << e))
      return &Field::standard(e);
  throw UsageError("--q must be closed or a power of two up to 256, got '" + q + "'");
}

// --- tables ---------------------------------------------------------------------

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os, const std::string& format) const
  {
    if (format == "csv") {
      auto cell = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos)
          return s;
        std::string q = "\"";
        for (char c : s)
          q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
      };
      for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << cell(header[i]);
      os << '\n';
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
          os << (i ? "," : "") << cell(r[i]);
        os << '\n';
      }
      return;
    }
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i)
      w[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i)
        w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i)
        os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
      os << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto x : w)
      rule.push_back(std::string(x, '-'));
    line(rule);
    for (const auto& r : rows)
      line(r);
  }
};

std::string fmt_double(double v)
{
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

// --- orbits ---------------------------------------------------------------------

struct OrbitsArgs {
  std::string type, q = "closed", format = "table";
  int n = 0;
};

json closed_row_json(const std::string& sym, const std::optional<PartitionPair>& pair, std::optional<CentralizerReport> cr,
                     int lie)
{
  json j = {{"symbol", sym}};
  if (pair)
    j["pair"] = to_string(*pair);
  if (cr) {
    j["dim_z"] = cr->dim_z;
    j["dim_orbit"] = lie - cr->dim_z;
    j["comp_group_rank"] = cr->comp_group_rank;
    j["rational_orbits"] = 1 << cr->comp_group_rank;
  }
  return j;
}

int run_orbits(const OrbitsArgs& a)
{
  const GroupKind kind = kind_from_name(a.type);
  if (a.n < 1)
    throw UsageError("--n must be at least 1");
  const Field* f = field_for_q(a.q);
  const int lie = lie_dim(kind, a.n);
  Table t;
  json rows = json::array();

  if (!f) {
    if (a.n > kClosedMaxN)
      throw SizeLimitError("closed-field tables are limited to n <= " + std::to_string(kClosedMaxN));
    t.header = {"symbol", "pair", "dim_orbit", "component_group", "rational_orbits"};
    auto add = [&](const std::string& sym, std::optional<PartitionPair> pair, std::optional<CentralizerReport> cr) {
      rows.push_back(closed_row_json(sym, pair, cr, lie));
      t.rows.push_back({sym, pair ? to_string(*pair) : "-", cr ? std::to_string(lie - cr->dim_z) : "-",
                        cr ? "(Z2)^" + std::to_string(cr->comp_group_rank) : "-",
                        cr ? std::to_string(1 << cr->comp_group_rank) : "-"});
    };
    if (kind == GroupKind::Sp) {
      for (const auto& s : symp_enumerate_closed(a.n))
        add(to_string(s), symp_symbol_to_pair(s), centralizer_symp(s));
    } else if (kind == GroupKind::OOdd) {
      for (const auto& s : oodd_enumerate_closed(a.n))
        add(to_string(s), oodd_symbol_to_pair(s), centralizer_oodd(s));
    } else {
      for (const auto& s : orth_enumerate_closed(a.n))
        add(to_string(s), std::nullopt, std::nullopt);
    }
  } else {
    const auto d = all_nilpotent_orbits(kind, a.n, *f);
    const auto reports = orbit_reports(d);
    if (a.format == "jsonl") {
      for (const auto& r : reports)
        std::cout << orbit_report_to_json(d, r).dump() << '\n';
      return 0;
    }
    t.header = {"symbol", "pair", "dim_orbit", "component_group", "orbit_size", "stabilizer", "predicted_orbit_size"};
    for (const auto& r : reports) {
      const Classification& c = r.classification;
      json j = orbit_report_to_json(d, r);
      std::string pred = "-";
      if (c.centralizer) {
        const double lead = c.centralizer->predicted_point_count_leading(f->order());
        pred = fmt_double(static_cast<double>(d.group.order) / lead);
        j["dim_orbit"] = lie - c.centralizer->dim_z;
        j["comp_group_rank"] = c.centralizer->comp_group_rank;
        j["predicted_orbit_size"] = static_cast<double>(d.group.order) / lead;
      }
      rows.push_back(j);
      t.rows.push_back({c.symbol_text(), c.pair ? to_string(*c.pair) : "-",
                        c.centralizer ? std::to_string(lie - c.centralizer->dim_z) : "-",
                        c.centralizer ? "(Z2)^" + std::to_string(c.centralizer->comp_group_rank) : "-",
                        std::to_string(r.orbit_size), std::to_string(r.stabilizer_order), pred});
    }
  }
  if (a.format == "json" || a.format == "jsonl") {
    json out = {{"type", a.type}, {"n", a.n}, {"q", a.q}, {"orbits", rows}};
    std::cout << out.dump(2) << '\n';
  } else {
    t.print(std::cout, a.format);
  }
  return 0;
}

// --- classify ---------------------------------------------------------------------

struct ClassifyArgs {
  std::string matrix, type, q = "closed";
};

int run_classify(const ClassifyArgs& a)
{
  const GroupKind kind = kind_from_name(a.type);
  std::ifstream in(a.matrix);
  if (!in)
    throw UsageError("cannot open matrix file '" + a.matrix + "'");
  Mat X = [&] {
    try {
      return read_matrix(in);
    } catch (const std::invalid_argument& e) {
      throw UsageError(a.matrix + ": " + e.what());
    }
  }();
  const int N = X.rows();
  if (X.cols() != N)
    throw UsageError("matrix must be square");
  const bool odd = kind == GroupKind::OOdd;
  if (N < 2 || (N % 2 == 1) != odd)
    throw UsageError("a " + std::to_string(N) + "x" + std::to_string(N) + " matrix does not fit type " + a.type);
  const int n = odd ? (N - 1) / 2 : N / 2;
  const Field* f = field_for_q(a.q);
  if (f && f != &X.field())
    throw UsageError("--q " + a.q + " does not match the matrix field " + X.field().header());
  const DualFunctional xi = DualFunctional::from_matrix(lie_algebra(kind, n, X.field()), X);
  const Classification c = classify(xi, f ? LabelMode::Rational : LabelMode::Closed);
  json j = classification_to_json(c);
  j["functional"] = functional_to_json(xi);
  std::cout << j.dump(2) << '\n';
  return c.nilpotent ? 0 : kExitNotNilpotent;
}

// --- normal-form ------------------------------------------------------------------

struct NormalFormArgs {
  std::string type, symbol, q = "2", format = "text";
};

int run_normal_form(const NormalFormArgs& a)
{
  const GroupKind kind = kind_from_name(a.type);
  const Field* f = field_for_q(a.q);
  if (!f)
    throw UsageError("normal-form needs a finite field: --q 2, 4, ...");
  std::optional<DualFunctional> xi;
  try {
    switch (kind) {
    case GroupKind::Sp:
      xi = build_normal_form(parse_symp_symbol(a.symbol), *f).witness;
      break;
    case GroupKind::OOdd:
      xi = build_odd_normal_form(parse_odd_symbol(a.symbol), *f).witness;
      break;
    case GroupKind::OEven:
      xi = even_normal_form_witness(parse_orth_symbol(a.symbol).blocks, *f);
      break;
    }
  } catch (const SizeLimitError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.format == "json") {
    json j = {{"symbol", a.symbol}, {"functional", functional_to_json(*xi)}};
    std::cout << j.dump(2) << '\n';
  } else {
    write_matrix(std::cout, xi->X());
  }
  return 0;
}

// --- centralizer ------------------------------------------------------------------

struct CentralizerArgs {
  std::string type, symbol, pair, q = "closed";
};

int run_centralizer(const CentralizerArgs& a)
{
  const GroupKind kind = kind_from_name(a.type);
  if (a.symbol.empty() == a.pair.empty())
    throw UsageError("give exactly one of --symbol and --pair");
  const Field* f = field_for_q(a.q);
  CentralizerReport r;
  std::string sym;
  PartitionPair pair;
  int n = 0;
  try {
    if (kind == GroupKind::Sp) {
      SympSymbol s;
      if (!a.symbol.empty()) {
        s = parse_symp_symbol(a.symbol).closed();
      } else {
        pair = parse_pair(a.pair).canonical();
        if (!symp_in_delta(pair))
          throw std::invalid_argument("pair " + to_string(pair) + " is not in the symplectic constraint set");
        s = symp_pair_to_symbol(pair);
      }
      pair = symp_symbol_to_pair(s);
      r = centralizer_symp(s);
      sym = to_string(s);
      n = s.rank();
    } else if (kind == GroupKind::OOdd) {
      OddSymbol s;
      if (!a.symbol.empty()) {
        s = parse_odd_symbol(a.symbol).closed();
      } else {
        pair = parse_pair(a.pair);
        if (!oodd_in_delta(pair))
          throw std::invalid_argument("pair " + to_string(pair) + " is not in the odd-orthogonal constraint set");
        s = oodd_pair_to_symbol(pair);
      }
      pair = oodd_symbol_to_pair(s);
      r = centralizer_oodd(s);
      sym = to_string(s);
      n = s.rank();
    } else {
      throw std::invalid_argument("centralizer formulas are available for sp and so-odd only");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j = {{"type", a.type},
            {"n", n},
            {"symbol", sym},
            {"pair", to_string(pair)},
            {"dim_z", r.dim_z},
            {"dim_orbit", lie_dim(kind, n) - r.dim_z},
            {"comp_group_rank", r.comp_group_rank},
            {"comp_group_order", 1 << r.comp_group_rank}};
  if (f) {
    const double lead = r.predicted_point_count_leading(f->order());
    j["q"] = f->order();
    j["leading_point_count"] = lead;
    try {
      j["predicted_orbit_size"] = static_cast<double>(group_order(kind, n, f->order())) / lead;
    } catch (const std::overflow_error&) {
      j["predicted_orbit_size"] = nullptr;
    }
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

// --- verify -------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all", format = "table";
  int max_n = 2;
};

int run_verify(const VerifyArgs& a)
{
  if (a.max_n < 1 || a.max_n > 10)
    throw UsageError("--max-n must be in 1..10");
  const auto results = run_suite(a.suite, a.max_n);
  bool ok = true;
  double total = 0;
  for (const auto& r : results) {
    ok = ok && r.passed;
    total += r.seconds;
  }
  if (a.format == "json") {
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    std::cout << json{{"suite", a.suite}, {"max_n", a.max_n}, {"passed", ok}, {"seconds", total}, {"checks", checks}}.dump(2)
              << '\n';
  } else {
    for (const auto& r : results)
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << " (" << std::fixed
                << std::setprecision(2) << r.seconds << " s)\n";
    std::size_t passed = 0;
    for (const auto& r : results)
      passed += r.passed;
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  return ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Nilpotent coadjoint orbits of Sp(2n), O(2n+1) and O(2n) over fields of characteristic 2"};
  app.require_subcommand(1);
  const std::vector<std::string> types{"sp", "so-odd", "so-even"};

  OrbitsArgs oa;
  auto* orbits = app.add_subcommand("orbits", "List nilpotent orbits (closed field, or F_q by brute force)");
  orbits->add_option("--type", oa.type, "sp, so-odd or so-even")->required()->check(CLI::IsMember(types));
  orbits->add_option("--n", oa.n, "rank n")->required();
  orbits->add_option("--q", oa.q, "closed, 2 or 4");
  orbits->add_option("--format", oa.format, "table, json, csv, or jsonl (F_q oracle dump)")
      ->check(CLI::IsMember({"table", "json", "csv", "jsonl"}));

  ClassifyArgs ca;
  auto* cls = app.add_subcommand("classify", "Classify a functional given by a matrix file");
  cls->add_option("--matrix", ca.matrix, "matrix text file")->required();
  cls->add_option("--type", ca.type, "sp, so-odd or so-even")->required()->check(CLI::IsMember(types));
  cls->add_option("--q", ca.q, "closed, or the matrix field order for rational labels");

  NormalFormArgs na;
  auto* nf = app.add_subcommand("normal-form", "Print a functional realizing a symbol");
  nf->add_option("--type", na.type, "sp, so-odd or so-even")->required()->check(CLI::IsMember(types));
  nf->add_option("--symbol", na.symbol, "symbol text, e.g. \"(2)^2_1:d\"")->required();
  nf->add_option("--q", na.q, "field order");
  nf->add_option("--format", na.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CentralizerArgs za;
  auto* cz = app.add_subcommand("centralizer", "Centralizer dimension and component group of a class");
  cz->add_option("--type", za.type, "sp or so-odd")->required()->check(CLI::IsMember(types));
  cz->add_option("--symbol", za.symbol, "symbol text");
  cz->add_option("--pair", za.pair, "pair text \"nu=[...]; mu=[...]\"");
  cz->add_option("--q", za.q, "field order for point-count predictions");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", va.suite, "all, combinatorics, sp, so-odd, so-even, centralizers, properties")
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-n", va.max_n, "largest rank for oracle suites (1..10)");
  ver->add_option("--format", va.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*orbits)
      return run_orbits(oa);
    if (*cls)
      return run_classify(ca);
    if (*nf)
      return run_normal_form(na);
    if (*cz)
      return run_centralizer(za);
    return run_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "size bound: " << e.what() << '\n';
    return kExitSize;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
}

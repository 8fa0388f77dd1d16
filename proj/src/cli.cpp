#include "stern/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>

#include "stern/idcat.hpp"
#include "stern/seqcore.hpp"
#include "stern/zseries.hpp"

namespace diatomic::cli {

namespace {

using nlohmann::json;

// Indices below this bound are served from the recurrence table in one pass.
constexpr std::size_t kTableLimit = std::size_t{1} << 20;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer parse_or_usage(const std::string& text, const char* what) {
  try {
    return parse_natural(text);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string(what) + ": " + ex.what());
  }
}

json report_json(const idcat::Report& r) {
  json j;
  j["identity"] = idcat::name(r.id);
  j["e"] = r.params.e ? json(*r.params.e) : json(nullptr);
  j["order"] = r.params.order;
  j["status"] = r.passed() ? "pass" : "fail";
  j["effective_order"] = r.effective_order;
  if (r.mismatch)
    j["mismatch"] = {{"index", r.mismatch->index},
                     {"lhs", to_string(r.mismatch->lhs)},
                     {"rhs", to_string(r.mismatch->rhs)}};
  else
    j["mismatch"] = nullptr;
  return j;
}

std::string report_line(const idcat::Report& r) {
  std::string line(idcat::name(r.id));
  if (r.params.e) line += " e=" + std::to_string(*r.params.e);
  line += " N=" + std::to_string(r.params.order);
  line += r.passed() ? " pass" : " FAIL";
  line += " effective_order=" + std::to_string(r.effective_order);
  if (r.mismatch)
    line += " mismatch index=" + std::to_string(r.mismatch->index) +
            " lhs=" + to_string(r.mismatch->lhs) + " rhs=" + to_string(r.mismatch->rhs);
  return line;
}

int cmd_value(const std::string& seq, const std::string& n_text, const std::string& format,
              std::ostream& out) {
  const Integer n = parse_or_usage(n_text, "n");
  const Integer v = seq == "s" ? stern(n) : twisted(n);
  if (format == "json")
    out << json{{"seq", seq}, {"n", to_string(n)}, {"value", to_string(v)}}.dump() << '\n';
  else if (format == "bfile")
    out << to_string(n) << ' ' << to_string(v) << '\n';
  else
    out << to_string(v) << '\n';
  return kExitOk;
}

int cmd_series(const std::string& which, std::size_t order, const std::string& format,
               std::ostream& out) {
  if (order < 1) throw UsageError("--order must be at least 1");
  const auto catalog = idcat::Catalog::with_capacity(order + 4);
  ZSeries series;
  if (which == "S")
    series = catalog.gen_S(order);
  else if (which == "T")
    series = catalog.gen_T(order);
  else if (which == "U")
    series = catalog.gen_U(order);
  else if (which == "G")
    series = catalog.gen_G(order);
  else
    series = catalog.gen_H(order);

  if (format == "json") {
    json coeffs = json::array();
    for (const Integer& c : series.coeffs()) coeffs.push_back(to_string(c));
    out << json{{"series", which}, {"order", order}, {"coeffs", coeffs}}.dump() << '\n';
  } else if (format == "bfile") {
    for (std::size_t k = 0; k < series.trunc(); ++k) out << k << ' ' << to_string(series[k]) << '\n';
  } else {
    for (std::size_t k = 0; k < series.trunc(); ++k) out << (k ? " " : "") << to_string(series[k]);
    out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& names, std::size_t emax, std::size_t order,
               const std::string& format, std::ostream& out, std::ostream& err) {
  if (order < 1) throw UsageError("--order must be at least 1");
  if (emax > 24) throw UsageError("--emax must be at most 24");

  std::set<std::size_t> picked;  // positions in canonical order
  const auto ids = idcat::all_identities();
  for (const std::string& name : names) {
    if (name == "all") {
      for (std::size_t i = 0; i < ids.size(); ++i) picked.insert(i);
      continue;
    }
    const auto id = idcat::parse_identity(name);
    if (!id) throw UsageError("unknown identity '" + name + "'");
    picked.insert(static_cast<std::size_t>(std::find(ids.begin(), ids.end(), *id) - ids.begin()));
  }

  std::vector<idcat::Report> reports;
  bool ok = true;
  for (std::size_t pos : picked) {
    const idcat::IdentityId id = ids[pos];
    const std::size_t first = idcat::is_unparameterized(id) ? 0 : idcat::min_param(id);
    const std::size_t last = idcat::is_unparameterized(id) ? 0 : emax;
    for (std::size_t e = first; e <= last; ++e) {
      const std::size_t n = std::max(order, idcat::min_order(id, e));
      try {
        reports.push_back(idcat::verify(id, e, n));
        ok = ok && reports.back().passed();
      } catch (const std::exception& ex) {
        err << idcat::name(id) << " e=" << e << ": error: " << ex.what() << '\n';
        ok = false;
      }
    }
  }

  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) out << report_line(r) << '\n';
    const auto passed = std::count_if(reports.begin(), reports.end(),
                                      [](const idcat::Report& r) { return r.passed(); });
    out << passed << '/' << reports.size() << " checks passed\n";
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_rationals(std::size_t count, bool check_distinct, std::ostream& out, std::ostream& err) {
  if (count < 1) throw UsageError("count must be at least 1");
  const auto s = stern_range(count + 2);
  std::set<std::pair<Integer, Integer>> seen;
  bool ok = true;
  for (std::size_t n = 1; n <= count; ++n) {
    const Integer& num = s[n + 1];
    const Integer& den = s[n];
    out << to_string(num) << '/' << to_string(den) << '\n';
    if (!check_distinct) continue;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
      err << "not reduced at n=" << n << ": " << to_string(num) << '/' << to_string(den) << '\n';
      ok = false;
    }
    if (!seen.emplace(num, den).second) {
      err << "repeat at n=" << n << ": " << to_string(num) << '/' << to_string(den) << '\n';
      ok = false;
    }
  }
  if (check_distinct && ok)
    err << "checked " << count << " rationals: reduced and pairwise distinct\n";
  return ok ? kExitOk : kExitFailed;
}

int cmd_bfile(const std::string& seq, const std::string& start_text, const std::string& end_text,
              std::ostream& out) {
  const Integer start = parse_or_usage(start_text, "start");
  const Integer end = parse_or_usage(end_text, "end");
  if (start > end) throw UsageError("inverted range: start exceeds end");

  if (end < kTableLimit) {
    const std::size_t lo = start.get_ui();
    const std::size_t hi = end.get_ui();
    const auto values = seq == "s" ? stern_range(hi + 1) : twisted_range(hi + 1);
    for (std::size_t n = lo; n <= hi; ++n) out << n << ' ' << to_string(values[n]) << '\n';
    return kExitOk;
  }
  for (Integer n = start; n <= end; ++n)
    out << to_string(n) << ' ' << to_string(seq == "s" ? stern(n) : twisted(n)) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stern's diatomic sequence, its twist, and their generating-function identities",
               "stern"};
  app.require_subcommand(1);

  std::string format = "plain";
  const auto formats = CLI::IsMember({"plain", "json", "bfile"});

  std::string seq;
  std::string n_text;
  auto* value = app.add_subcommand("value", "Print s(n) or t(n) via the digit-matrix product");
  value->add_option("seq", seq, "Sequence: s or t")->required()->check(CLI::IsMember({"s", "t"}));
  value->add_option("n", n_text, "Index (decimal, or hex with 0x prefix)")->required();
  value->add_option("--format", format, "Output format")->check(formats);

  std::string which;
  std::size_t order = 1024;
  auto* series = app.add_subcommand("series", "Print a generating series to a given order");
  series->add_option("name", which, "Series: S, T, U, G or H")
      ->required()
      ->check(CLI::IsMember({"S", "T", "U", "G", "H"}));
  series->add_option("--order", order, "Truncation order N");
  series->add_option("--format", format, "Output format")->check(formats);

  std::vector<std::string> ids;
  std::size_t emax = 4;
  auto* verify = app.add_subcommand("verify", "Check catalog identities; exit 1 on any failure");
  verify->add_option("ids", ids, "Identity ids, or 'all'")->required();
  verify->add_option("--emax", emax, "Largest e (or k) checked");
  verify->add_option("--order", order, "Truncation order N");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}));

  std::size_t count = 0;
  bool check_distinct = false;
  auto* rationals = app.add_subcommand("rationals", "Print s(n+1)/s(n) for n = 1..count");
  rationals->add_option("count", count, "How many rationals")->required();
  rationals->add_flag("--check-distinct", check_distinct, "Verify gcd 1 and no repeats");

  std::string start_text;
  std::string end_text;
  auto* bfile = app.add_subcommand("bfile", "Emit an OEIS b-file for an inclusive index range");
  bfile->add_option("seq", seq, "Sequence: s or t")->required()->check(CLI::IsMember({"s", "t"}));
  bfile->add_option("start", start_text, "First index")->required();
  bfile->add_option("end", end_text, "Last index")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (value->parsed()) return cmd_value(seq, n_text, format, out);
    if (series->parsed()) return cmd_series(which, order, format, out);
    if (verify->parsed()) return cmd_verify(ids, emax, order, format, out, err);
    if (rationals->parsed()) return cmd_rationals(count, check_distinct, out, err);
    if (bfile->parsed()) return cmd_bfile(seq, start_text, end_text, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace diatomic::cli

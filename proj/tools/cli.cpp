#include "flagvar/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "flagvar/error.hpp"
#include "flagvar/flag.hpp"
#include "flagvar/lct.hpp"
#include "flagvar/report.hpp"
#include "flagvar/verify.hpp"

namespace flagvar::cli {

using report::Json;

std::map<int, Rational> parse_divisor(std::string_view text, int rank) {
  std::map<int, Rational> out;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos == text.size()) return out;
  while (true) {
    const std::size_t entry_begin = pos;
    if (pos >= text.size() || text[pos] != 'a') throw ParseError("expected 'a<node>=<rational>'", pos);
    ++pos;
    int node = 0;
    const std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (pos - digits_begin >= 3) throw ParseError("node index too long", pos);
      node = node * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == digits_begin) throw ParseError("expected a node index after 'a'", pos);
    if (node < 1 || node > rank) {
      throw ParseError("node " + std::to_string(node) + " outside 1.." + std::to_string(rank), digits_begin);
    }
    if (out.count(node - 1)) throw ParseError("coefficient a" + std::to_string(node) + " given twice", entry_begin);
    if (pos >= text.size() || text[pos] != '=') throw ParseError("expected '='", pos);
    ++pos;
    const std::size_t value_begin = pos;
    const std::size_t value_end = std::min(text.find(',', pos), text.size());
    try {
      out.emplace(node - 1, parse_rational(text.substr(value_begin, value_end - value_begin)));
    } catch (const ParseError& e) {
      throw ParseError("bad coefficient for a" + std::to_string(node), value_begin + e.position());
    }
    pos = value_end;
    if (pos == text.size()) break;
    ++pos;  // ','
  }
  return out;
}

namespace {

constexpr const char* kNumbering =
    "Nodes use Bourbaki numbering (1-based). A_n: path 1-2-...-n. B_n/C_n: node n is the\n"
    "short/long end. D_n: n-2 branches to n-1 and n. E_n: 1-3-4-5-...-n with 2 attached\n"
    "to 4. F4: 1-2=>3-4 (1,2 long). G2: 1 short, 2 long.";

struct VarietyArgs {
  std::string type;
  std::optional<std::string> levi;
  std::optional<std::string> omit;
};

struct CommonArgs {
  std::size_t cap = EnumerationPolicy{}.cap;
  bool allow_large = false;
  std::string format = "text";
};

void add_variety_options(CLI::App* cmd, VarietyArgs& v) {
  cmd->add_option("type", v.type, "Cartan type, e.g. A3, F4")->required();
  auto* levi = cmd->add_option("--levi", v.levi, "Levi set I as a node list ('' for G/B)");
  auto* omit = cmd->add_option("--omit", v.omit, "complement S\\I as a node list");
  levi->excludes(omit);
  omit->excludes(levi);
}

void add_common_options(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--cap", c.cap, "enumeration bound on group elements");
  cmd->add_flag("--allow-large", c.allow_large, "permit full-group enumeration of E7/E8");
  cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

FlagVariety make_variety(const VarietyArgs& v) {
  const CartanType type = parse_cartan_type(v.type);
  if (!v.levi && !v.omit) throw ParseError("one of --levi or --omit is required", 0);
  const NodeSet levi = v.levi ? parse_node_list(*v.levi, type.rank)
                              : parse_node_list(*v.omit, type.rank).complement(type.rank);
  return FlagVariety(type, levi);
}

std::string join_nodes(const Json& array) {
  if (array.empty()) return "{}";
  std::string out;
  for (const auto& v : array) out += (out.empty() ? "" : ",") + std::to_string(v.get<int>());
  return "{" + out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string threshold_text(const Json& t) {
  std::string s = t["value"].get<std::string>() + " (" + t["exactness"].get<std::string>();
  if (t["derived_extension"].get<bool>()) s += ", derived extension";
  s += ")";
  const bool bound = t["exactness"] == "lower_bound";
  s += bound ? "  guaranteed klt: " : "  klt: ";
  s += yes_no(t["klt"].get<bool>());
  s += bound ? "  guaranteed lc: " : "  lc: ";
  s += yes_no(t["lc"].get<bool>());
  return s;
}

std::string fibration_text(const Json& f) {
  std::ostringstream os;
  os << "forget node " << f["alpha"] << ": base levi " << join_nodes(f["base_levi"]) << " (dim "
     << f["base_dimension"] << "), fiber " << f["fiber"]["type"].get<std::string>() << " omitting node "
     << f["fiber"]["marked_node"] << " on nodes " << join_nodes(f["fiber"]["nodes"]) << " (dim "
     << f["fiber"]["dimension"] << ")";
  return os.str();
}

void print_header(std::ostream& out, const Json& j) {
  out << "variety        " << j["type"].get<std::string>() << "/P, levi " << join_nodes(j["levi"])
      << ", omitted " << join_nodes(j["omitted"]) << '\n';
}

void print_info(std::ostream& out, const Json& j) {
  print_header(out, j);
  out << "dimension      " << j["dimension"] << '\n';
  out << "picard rank    " << j["picard_rank"] << '\n';
  out << "schubert cells " << j["coset_count"] << '\n';
  out << "betti          ";
  for (std::size_t k = 0; k < j["betti"].size(); ++k) out << (k ? " " : "") << j["betti"][k];
  out << '\n';
  out << "anticanonical  ";
  bool first = true;
  for (const auto& [node, c] : j["anticanonical"].items()) {
    out << (first ? "" : " ") << "a" << node << "=" << c;
    first = false;
  }
  out << '\n';
  out << "global lct     " << threshold_text(j["global_lct"]) << '\n';
  out << "fibration tower\n";
  int step = 1;
  for (const auto& f : j["fibration_tower"]) out << "  " << step++ << ". " << fibration_text(f) << '\n';
}

void print_fibrations(std::ostream& out, const Json& j) {
  print_header(out, j);
  out << "fibrations\n";
  for (const auto& f : j["fibrations"]) out << "  " << fibration_text(f) << '\n';
  out << "tower\n";
  int step = 1;
  for (const auto& f : j["fibration_tower"]) out << "  " << step++ << ". " << fibration_text(f) << '\n';
}

void print_lct(std::ostream& out, const Json& j) {
  print_header(out, j);
  out << "divisor        ";
  bool first = true;
  for (const auto& [node, a] : j["divisor"].items()) {
    out << (first ? "" : " ") << "a" << node << "=" << a.get<std::string>();
    first = false;
  }
  out << '\n';
  out << "lct            " << threshold_text(j["result"]) << '\n';
  for (const auto& f : j["fibers"]) {
    out << "  fiber at node " << f["alpha"] << " (" << f["fiber"]["type"].get<std::string>() << " omitting "
        << f["fiber"]["marked_node"] << "): restriction " << f["restriction"].get<std::string>()
        << " H, threshold " << f["fiber_threshold"].get<std::string>() << '\n';
  }
}

Json verify_json(const std::vector<CheckResult>& results) {
  Json j;
  j["command"] = "verify";
  Json checks = Json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    Json c;
    c["name"] = r.name;
    c["type"] = r.type;
    c["status"] = to_string(r.status);
    c["detail"] = r.detail;
    c["seconds"] = r.seconds;
    checks.push_back(c);
    passed += r.status == CheckStatus::pass;
    failed += r.status == CheckStatus::fail;
    skipped += r.status == CheckStatus::skipped;
  }
  j["checks"] = checks;
  j["passed"] = passed;
  j["failed"] = failed;
  j["skipped"] = skipped;
  return j;
}

void print_verify(std::ostream& out, const Json& j) {
  for (const auto& c : j["checks"]) {
    out << std::left << std::setw(8) << c["status"].get<std::string>() << std::setw(5) << c["type"].get<std::string>()
        << std::setw(28) << c["name"].get<std::string>() << std::right << std::fixed << std::setprecision(3)
        << std::setw(9) << c["seconds"].get<double>() << "s  " << c["detail"].get<std::string>() << '\n';
  }
  out << j["passed"] << " passed, " << j["failed"] << " failed, " << j["skipped"] << " skipped\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{std::string("Flag varieties G/P and log canonical thresholds of B-stable divisors.\n\n") +
               kNumbering};
  app.require_subcommand(1);

  VarietyArgs info_v, lct_v, fib_v;
  CommonArgs info_c, lct_c, fib_c, verify_c;

  auto* info = app.add_subcommand("info", "dimension, Picard rank, Betti numbers, -K_X, fibrations");
  add_variety_options(info, info_v);
  add_common_options(info, info_c);

  std::string divisor_text;
  bool general = false;
  auto* lct = app.add_subcommand("lct", "log canonical threshold of sum a_k D_k");
  add_variety_options(lct, lct_v);
  add_common_options(lct, lct_c);
  lct->add_option("--div", divisor_text, "coefficients, e.g. a1=2,a2=3/4 (missing keys are 0)");
  lct->add_flag("--general", general,
                "treat D as any effective divisor in the class: report a lower bound");

  std::optional<int> alpha;
  auto* fib = app.add_subcommand("fibration", "fibrations G/P -> G/P' and their fibres");
  add_variety_options(fib, fib_v);
  add_common_options(fib, fib_c);
  fib->add_option("--alpha", alpha, "only the fibration forgetting this node");

  std::vector<std::string> include;
  auto* verify = app.add_subcommand("verify", "run the invariant suite against independent oracles");
  add_common_options(verify, verify_c);
  verify->add_option("--include", include, "additional types, e.g. F4 E6 E8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    Json j;
    std::string format;
    void (*print)(std::ostream&, const Json&) = nullptr;
    if (*info) {
      const FlagVariety x = make_variety(info_v);
      j = report::info(x, EnumerationPolicy{info_c.cap, info_c.allow_large});
      format = info_c.format;
      print = print_info;
    } else if (*lct) {
      const FlagVariety x = make_variety(lct_v);
      std::map<int, Rational> coeffs = parse_divisor(divisor_text, x.root_system().rank());
      const QDivisor d(x.omitted(), std::move(coeffs));
      j = report::lct(x, d, general ? Exactness::lower_bound : Exactness::exact);
      format = lct_c.format;
      print = print_lct;
    } else if (*fib) {
      const FlagVariety x = make_variety(fib_v);
      std::optional<int> node;
      if (alpha) node = *alpha - 1;
      j = report::fibrations(x, node);
      format = fib_c.format;
      print = print_fibrations;
    } else {
      VerifyOptions options;
      options.types = default_verify_types();
      for (const auto& t : include) {
        const CartanType extra = parse_cartan_type(t);
        if (std::find(options.types.begin(), options.types.end(), extra) == options.types.end()) {
          options.types.push_back(extra);
        }
      }
      options.policy = EnumerationPolicy{verify_c.cap, verify_c.allow_large};
      j = verify_json(run_verification(options));
      format = verify_c.format;
      print = print_verify;
    }
    if (format == "json") {
      out << j.dump(2) << '\n';
    } else {
      print(out, j);
    }
    if (j.contains("failed") && j["failed"].get<std::size_t>() > 0) return kDomainError;
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace flagvar::cli

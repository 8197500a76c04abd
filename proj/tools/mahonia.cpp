#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mahonia/codes.hpp"
#include "mahonia/foata.hpp"
#include "mahonia/han.hpp"
#include "mahonia/oracle.hpp"
#include "mahonia/permcore.hpp"
#include "mahonia/stats.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerificationFailure = 2;

int enumeration_cap() {
  const char* env = std::getenv("MAHONIA_MAX_N");
  if (!env || !*env) return mahonia::kDefaultMaxN;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used != std::string(env).size() || cap < 1) throw std::invalid_argument("");
    return cap;
  } catch (...) {
    throw std::invalid_argument("MAHONIA_MAX_N must be a positive integer, got \"" +
                                std::string(env) + "\"");
  }
}

std::string join_args(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(' ');
    out += parts[i];
  }
  return out;
}

json perm_json(const mahonia::Permutation& p) {
  return json{{"n", p.size()}, {"values", p.values()}};
}

json word_json(const mahonia::Word& w) {
  return json{{"n", w.size()}, {"k", w.alphabet_size()}, {"letters", w.letters()}};
}

int run_stat(const std::string& stat, const std::string& input, const std::string& format) {
  using namespace mahonia;
  // Permutations are words too; parse_word validates the letters either way.
  const Word w = parse_word(input);
  json out;
  std::string text;
  if (stat == "tvec" || stat == "svec") {
    const std::vector<int> vec = stat == "tvec" ? t_vector(w) : s_vector(w);
    text = render_csv(vec);
    out = json{{"stat", stat}, {"value", vec}};
  } else {
    long long value = 0;
    if (stat == "maj") value = maj(w);
    else if (stat == "inv") value = inv(w);
    else if (stat == "des") value = des(w);
    else value = z_statistic(w);
    text = std::to_string(value);
    out = json{{"stat", stat}, {"value", value}};
  }
  if (format == "json")
    std::cout << out.dump() << "\n";
  else
    std::cout << text << "\n";
  return kExitOk;
}

int run_code(bool encode, const std::string& kind, const std::string& input,
             const std::string& format) {
  using namespace mahonia;
  if (encode) {
    const Permutation sigma = parse_permutation(input);
    const Code code = kind == "lehmer" ? lehmer_encode(sigma) : cyclic_major_encode(sigma);
    if (format == "json")
      std::cout << json(code.entries()).dump() << "\n";
    else
      std::cout << render_csv(code.entries()) << "\n";
  } else {
    const Code code = parse_code(input);
    const Permutation sigma = kind == "lehmer" ? lehmer_decode(code)
                                               : cyclic_major_decode(code);
    if (format == "json")
      std::cout << perm_json(sigma).dump() << "\n";
    else
      std::cout << render(sigma) << "\n";
  }
  return kExitOk;
}

int run_map(const std::string& mode, int partial_k, const std::string& input,
            const std::string& format) {
  using namespace mahonia;
  if (mode == "foata") {
    const std::vector<int> seq = parse_sequence(input);
    if (is_rearrangement_of_identity(seq)) {
      const Permutation image = foata_phi(Permutation(seq));
      std::cout << (format == "json" ? perm_json(image).dump() : render(image)) << "\n";
    } else {
      const Word image = foata_phi(parse_word(input));
      std::cout << (format == "json" ? word_json(image).dump() : render(image)) << "\n";
    }
    return kExitOk;
  }
  const Permutation sigma = parse_permutation(input);
  Permutation image;
  if (mode == "han")
    image = han_h_via_codes(sigma);
  else if (mode == "han-inverse")
    image = han_h_inverse(sigma);
  else
    image = partial_foata(partial_k, sigma);
  std::cout << (format == "json" ? perm_json(image).dump() : render(image)) << "\n";
  return kExitOk;
}

std::string trace_text(const mahonia::Permutation& input,
                       const std::vector<mahonia::TraceRow>& rows) {
  using namespace mahonia;
  const std::size_t width = std::max<std::size_t>(render(input).size(), 3);
  std::ostringstream out;
  out << " j  " << std::left << std::setw(static_cast<int>(width)) << "C^j"
      << "  L  s(n-j)\n";
  for (const TraceRow& row : rows)
    out << std::right << std::setw(2) << row.j << "  " << std::left
        << std::setw(static_cast<int>(width)) << render(row.reduced) << "  " << row.last
        << "  " << row.s_entry << "\n";
  std::vector<int> l_bottom_up;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) l_bottom_up.push_back(it->last);
  out << "L bottom-up: " << render_csv(l_bottom_up) << "\n";
  out << "M(sigma): " << render_csv(code_from_trace(rows).entries()) << "\n";
  return out.str();
}

int run_trace(const std::string& input, const std::string& format) {
  using namespace mahonia;
  const Permutation sigma = parse_permutation(input);
  const std::vector<TraceRow> rows = c_iteration_trace(sigma);
  if (format == "json") {
    json jrows = json::array();
    std::vector<int> l_bottom_up;
    for (const TraceRow& row : rows)
      jrows.push_back(json{{"j", row.j},
                           {"reduced", row.reduced.values()},
                           {"last", row.last},
                           {"s", row.s_entry}});
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) l_bottom_up.push_back(it->last);
    const json out{{"input", perm_json(sigma)},
                   {"rows", jrows},
                   {"l_bottom_up", l_bottom_up},
                   {"cyclic_major_code", code_from_trace(rows).entries()}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << trace_text(sigma, rows);
  }
  return kExitOk;
}

int run_fixed(bool strong, bool list, int list_n, const std::string& input,
              const std::string& format) {
  using namespace mahonia;
  if (strong == list)
    throw std::invalid_argument("fixed: choose exactly one of --strong <perm>, --list <n>");
  if (strong) {
    const Permutation sigma = parse_permutation(input);
    const bool fixed = is_strong_fixed_point(sigma);
    if (format == "json")
      std::cout << json{{"input", perm_json(sigma)}, {"strong_fixed_point", fixed}}.dump()
                << "\n";
    else
      std::cout << (fixed ? "true" : "false") << "\n";
    return kExitOk;
  }
  const auto points = fixed_points_of_h(list_n, enumeration_cap());
  if (format == "json") {
    json values = json::array();
    for (const Permutation& p : points) values.push_back(p.values());
    std::cout << json{{"n", list_n}, {"count", points.size()}, {"fixed_points", values}}.dump()
              << "\n";
  } else {
    for (const Permutation& p : points) std::cout << render(p) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& suite, int n, const std::string& format) {
  using namespace mahonia;
  SuiteOptions opt;
  opt.n = n;
  opt.max_n = enumeration_cap();
  if (n > opt.max_n)
    throw std::invalid_argument("verify: --n " + std::to_string(n) +
                                " exceeds the enumeration cap " + std::to_string(opt.max_n) +
                                " (override with MAHONIA_MAX_N)");
  const std::vector<VerificationReport> reports = run_suite(suite, opt);
  std::size_t passed = 0;
  for (const auto& report : reports)
    if (report.pass) ++passed;
  if (format == "json") {
    json checks = json::array();
    for (const auto& report : reports) {
      json check{{"name", report.check_name},
                 {"population", report.population},
                 {"pass", report.pass}};
      if (!report.pass) check["counterexample"] = report.counterexample;
      checks.push_back(std::move(check));
    }
    const json out{{"suite", suite}, {"n", n}, {"pass", passed == reports.size()},
                   {"checks", checks}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "suite " << suite << ", sizes 1.." << n << "\n";
    for (const auto& report : reports) {
      std::cout << (report.pass ? "[PASS] " : "[FAIL] ") << report.check_name
                << "  (population " << report.population << ")\n";
      if (!report.pass) std::cout << "       counterexample: " << report.counterexample << "\n";
    }
    std::cout << "result: " << passed << "/" << reports.size() << " checks passed\n";
  }
  return passed == reports.size() ? kExitOk : kExitVerificationFailure;
}

int run_table(const std::string& stat, int n, const std::vector<int>& spec_mult,
              const std::string& format) {
  using namespace mahonia;
  const Stat st = stat == "maj" ? Stat::maj : stat == "inv" ? Stat::inv : Stat::z;
  DistributionTable table;
  std::string domain;
  if (!spec_mult.empty()) {
    const MultisetSpec spec(spec_mult);
    table = distribution_over_class(st, spec);
    domain = "R(" + render_csv(spec.multiplicities()) + ")";
  } else {
    table = distribution_over_sn(st, n, enumeration_cap());
    domain = "S_" + std::to_string(n);
  }
  if (format == "json") {
    std::cout << json{{"stat", table.stat_name},
                      {"domain", domain},
                      {"population", table.population},
                      {"coefficients", table.coefficients}}
                     .dump()
              << "\n";
  } else {
    const char sep = format == "csv" ? ',' : ' ';
    std::cout << "value" << sep << "count\n";
    for (std::size_t v = 0; v < table.coefficients.size(); ++v)
      std::cout << v << sep << table.coefficients[v] << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mahonian statistics, permutation codes, and the maj-to-inv bijections"};
  app.require_subcommand(1);

  std::string format = "text";
  std::vector<std::string> input_parts;

  auto* stat_cmd = app.add_subcommand("stat", "Evaluate a statistic of a word or permutation");
  std::string stat_name;
  stat_cmd->add_option("--stat", stat_name, "One of maj|inv|des|z|tvec|svec")
      ->required()
      ->check(CLI::IsMember({"maj", "inv", "des", "z", "tvec", "svec"}));
  stat_cmd->add_option("input", input_parts, "Word or permutation")->required();
  stat_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* code_cmd = app.add_subcommand("code", "Encode or decode a permutation code");
  std::string encode_kind;
  std::string decode_kind;
  code_cmd->add_option("--encode", encode_kind, "Encode a permutation (lehmer|cmaj)")
      ->check(CLI::IsMember({"lehmer", "cmaj"}));
  code_cmd->add_option("--decode", decode_kind, "Decode a code (lehmer|cmaj)")
      ->check(CLI::IsMember({"lehmer", "cmaj"}));
  code_cmd->add_option("input", input_parts, "Permutation or code")->required();
  code_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* map_cmd = app.add_subcommand("map", "Apply one of the bijections");
  bool map_foata = false;
  bool map_han = false;
  bool map_han_inverse = false;
  int partial_k = 0;
  map_cmd->add_flag("--foata", map_foata, "Foata's second fundamental transformation");
  map_cmd->add_flag("--han", map_han, "Han's bijection");
  map_cmd->add_flag("--han-inverse", map_han_inverse, "Inverse of Han's bijection");
  map_cmd->add_option("--partial-foata", partial_k, "k-th partial Foata map");
  map_cmd->add_option("input", input_parts, "Word or permutation")->required();
  map_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* trace_cmd = app.add_subcommand("trace", "Reduction trace and the code it induces");
  trace_cmd->add_option("input", input_parts, "Permutation")->required();
  trace_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* fixed_cmd = app.add_subcommand("fixed", "Fixed point queries");
  bool fixed_strong = false;
  int list_n = 0;
  fixed_cmd->add_flag("--strong", fixed_strong, "Test the strong fixed point criterion");
  auto* list_opt = fixed_cmd->add_option("--list", list_n, "List all fixed points of H in S_n");
  fixed_cmd->add_option("input", input_parts, "Permutation (with --strong)");
  fixed_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive verification suites");
  std::string suite = "all";
  int verify_n = 7;
  verify_cmd->add_option("--suite", suite, "all|han|foata|codes|fixed")
      ->check(CLI::IsMember({"all", "han", "foata", "codes", "fixed"}));
  verify_cmd->add_option("--n", verify_n, "Exhaust sizes 1..n (default 7)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* table_cmd = app.add_subcommand("table", "Distribution table of a statistic");
  std::string table_stat;
  int table_n = 0;
  std::vector<int> spec_mult;
  table_cmd->add_option("--stat", table_stat, "maj|inv|z")
      ->required()
      ->check(CLI::IsMember({"maj", "inv", "z"}));
  auto* n_opt = table_cmd->add_option("--n", table_n, "Tabulate over S_n")
                    ->check(CLI::PositiveNumber);
  auto* spec_opt = table_cmd->add_option("--spec", spec_mult,
                                         "Tabulate over R(X), multiplicities m1,m2,...")
                       ->delimiter(',');
  n_opt->excludes(spec_opt);
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomainError;
  }

  try {
    const std::string input = join_args(input_parts);
    if (stat_cmd->parsed()) return run_stat(stat_name, input, format);
    if (code_cmd->parsed()) {
      if (encode_kind.empty() == decode_kind.empty())
        throw std::invalid_argument("code: choose exactly one of --encode, --decode");
      return run_code(!encode_kind.empty(),
                      !encode_kind.empty() ? encode_kind : decode_kind, input, format);
    }
    if (map_cmd->parsed()) {
      const bool partial = map_cmd->count("--partial-foata") > 0;
      const int modes = int(map_foata) + int(map_han) + int(map_han_inverse) + int(partial);
      if (modes != 1)
        throw std::invalid_argument(
            "map: choose exactly one of --foata, --han, --han-inverse, --partial-foata");
      const std::string mode = map_foata ? "foata"
                               : map_han ? "han"
                               : map_han_inverse ? "han-inverse"
                                                 : "partial";
      return run_map(mode, partial_k, input, format);
    }
    if (trace_cmd->parsed()) return run_trace(input, format);
    if (fixed_cmd->parsed()) {
      if (fixed_strong && input.empty())
        throw std::invalid_argument("fixed --strong: missing permutation");
      return run_fixed(fixed_strong, list_opt->count() > 0, list_n, input, format);
    }
    if (verify_cmd->parsed()) return run_verify(suite, verify_n, format);
    if (table_cmd->parsed()) {
      if ((table_n > 0) == !spec_mult.empty())
        throw std::invalid_argument("table: choose exactly one of --n, --spec");
      return run_table(table_stat, table_n, spec_mult, format);
    }
  } catch (const mahonia::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitDomainError;
}

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "u6ncay/characters.hpp"
#include "u6ncay/families.hpp"
#include "u6ncay/integrality.hpp"
#include "u6ncay/search.hpp"
#include "u6ncay/spectral.hpp"

namespace u6ncay::cli {

using nlohmann::ordered_json;

namespace {

std::vector<int> parse_exponent_list(const std::string& literal) {
  std::vector<int> out;
  std::stringstream ss(literal);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos)
      throw UsageError("--set: empty exponent token");
    const auto last = token.find_last_not_of(" \t");
    try {
      out.push_back(std::stoi(token.substr(first, last - first + 1)));
    } catch (const std::exception&) {
      throw UsageError("--set: bad exponent token '" + token + "'");
    }
  }
  return out;
}

ordered_json set_to_json(const ConnectionSet& S) {
  ordered_json arr = ordered_json::array();
  for (const U6nElement& x : S.elements()) arr.push_back(format_element(x));
  return arr;
}

ordered_json spectrum_to_json(const Spectrum& sp) {
  ordered_json arr = ordered_json::array();
  for (const Spectrum::Entry& e : sp.entries) {
    ordered_json item;
    if (sp.exact)
      item["value"] = e.ivalue;
    else
      item["value"] = e.value;
    item["multiplicity"] = e.multiplicity;
    item["exact"] = sp.exact;
    arr.push_back(std::move(item));
  }
  return arr;
}

ordered_json items_to_json(const std::vector<CheckItem>& items) {
  ordered_json arr = ordered_json::array();
  for (const CheckItem& it : items) {
    ordered_json o;
    o["label"] = it.label;
    if (!it.value.empty()) o["value"] = it.value;
    o["ok"] = it.ok;
    arr.push_back(std::move(o));
  }
  return arr;
}

ordered_json report_to_json(const IntegralityReport& rep) {
  ordered_json diag;
  diag["linear"] = items_to_json(rep.linear);
  diag["quadratic"] = items_to_json(rep.quadratic);
  diag["boolean"] = items_to_json(rep.boolean_checks);
  ordered_json o;
  o["integral"] = rep.integral;
  o["criterion"] = rep.criterion;
  o["diagnostics"] = std::move(diag);
  return o;
}

void print_items(std::ostream& out, const std::vector<CheckItem>& items) {
  for (const CheckItem& it : items) {
    out << "  [" << (it.ok ? "ok" : "FAIL") << "] " << it.label;
    if (!it.value.empty()) out << " = " << it.value;
    out << "\n";
  }
}

// value^mult tokens, descending; no commas so the column needs no quoting
std::string spectrum_csv(const Spectrum& sp) {
  std::ostringstream os;
  bool first = true;
  for (const Spectrum::Entry& e : sp.entries) {
    if (!first) os << " ";
    first = false;
    if (sp.exact)
      os << e.ivalue;
    else
      os << e.value;
    os << "^" << e.multiplicity;
  }
  return os.str();
}

int run_table(const RunConfig& cfg, std::ostream& out) {
  const CharacterTable table = char_table(cfg.n);
  const ConjugacyClasses cc = conjugacy_classes(cfg.n);

  std::vector<std::string> headers;
  headers.reserve(cc.classes.size());
  for (const auto& cls : cc.classes) headers.push_back(format_element(cls.front()));

  auto row_cells = [&](const CharRow& row) {
    std::vector<std::string> cells;
    cells.reserve(row.by_class.size());
    for (const CycValue& v : row.by_class) cells.push_back(v.str());
    return cells;
  };

  if (cfg.json) {
    ordered_json o;
    o["n"] = cfg.n;
    o["classes"] = headers;
    ordered_json rows = ordered_json::array();
    for (const CharRow& row : table.linear) {
      ordered_json r;
      r["name"] = "chi_" + std::to_string(row.index);
      r["degree"] = 1;
      r["values"] = row_cells(row);
      rows.push_back(std::move(r));
    }
    for (const CharRow& row : table.degree2) {
      ordered_json r;
      r["name"] = "psi_" + std::to_string(row.index);
      r["degree"] = 2;
      r["values"] = row_cells(row);
      rows.push_back(std::move(r));
    }
    o["rows"] = std::move(rows);
    out << o.dump(2) << "\n";
    return 0;
  }

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> names;
  for (const CharRow& row : table.linear) {
    names.push_back("chi_" + std::to_string(row.index));
    grid.push_back(row_cells(row));
  }
  for (const CharRow& row : table.degree2) {
    names.push_back("psi_" + std::to_string(row.index));
    grid.push_back(row_cells(row));
  }
  std::size_t name_w = 0;
  for (const auto& s : names) name_w = std::max(name_w, s.size());
  std::vector<std::size_t> col_w(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    col_w[c] = headers[c].size();
    for (const auto& row : grid) col_w[c] = std::max(col_w[c], row[c].size());
  }

  out << "character table of U_" << 6 * cfg.n << " (n = " << cfg.n << ")\n";
  out << std::string(name_w, ' ');
  for (std::size_t c = 0; c < headers.size(); ++c)
    out << "  " << std::setw(static_cast<int>(col_w[c])) << headers[c];
  out << "\n";
  for (std::size_t r = 0; r < grid.size(); ++r) {
    out << std::left << std::setw(static_cast<int>(name_w)) << names[r]
        << std::right;
    for (std::size_t c = 0; c < headers.size(); ++c)
      out << "  " << std::setw(static_cast<int>(col_w[c])) << grid[r][c];
    out << "\n";
  }
  return 0;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
  const ConnectionSet& S = *cfg.set;
  Spectrum sp;
  bool integral = false;
  if (cfg.method == "babai") {
    sp = babai_spectrum(S);
    integral = sp.exact;
  } else if (cfg.method == "brute") {
    sp = brute_spectrum(S);
    integral = true;
    for (const Spectrum::Entry& e : sp.entries)
      if (std::abs(e.value - std::round(e.value)) > kEigenvalueGroupTol)
        integral = false;
  } else {  // exact
    const auto o = exact_integer_spectrum(S);
    integral = o.has_value();
    if (o) {
      sp = *o;
    } else {
      sp.exact = false;
      sp.n = S.n;
      sp.set_size = S.size();
    }
  }

  if (cfg.json) {
    ordered_json o;
    o["n"] = S.n;
    o["set"] = set_to_json(S);
    o["method"] = cfg.method;
    o["integral"] = integral;
    o["spectrum"] = spectrum_to_json(sp);
    out << o.dump(2) << "\n";
    return 0;
  }

  out << "n = " << S.n << ", |S| = " << S.size() << ", method = " << cfg.method
      << "\n";
  if (cfg.method == "exact" && !integral)
    out << "spectrum: (no exact integer spectrum: graph is not integral)\n";
  else
    out << "spectrum: " << sp.str() << "\n";
  out << "integral: " << (integral ? "yes" : "no") << "\n";
  return 0;
}

int run_check(const RunConfig& cfg, std::ostream& out) {
  const ConnectionSet& S = *cfg.set;
  const IntegralityReport rep = decide(S);

  if (cfg.json) {
    ordered_json o;
    o["n"] = S.n;
    o["set"] = set_to_json(S);
    ordered_json body = report_to_json(rep);
    o.update(body);
    out << o.dump(2) << "\n";
    return 0;
  }

  out << "n = " << S.n << ", S = {" << format_set(S) << "}, |S| = " << S.size()
      << "\n";
  out << "verdict: " << (rep.integral ? "integral" : "not integral") << "\n";
  out << "criterion: " << rep.criterion << "\n";
  print_items(out, rep.boolean_checks);
  print_items(out, rep.linear);
  print_items(out, rep.quadratic);
  return 0;
}

int run_boolean(const RunConfig& cfg, std::ostream& out) {
  const int m = cfg.order;
  std::vector<int> T;
  T.reserve(cfg.exponents.size());
  for (int t : cfg.exponents) T.push_back(((t % m) + m) % m);
  std::sort(T.begin(), T.end());
  T.erase(std::unique(T.begin(), T.end()), T.end());

  const bool member = is_integral_set_cyclic(T, m);  // cross-checked internally

  struct AtomRow {
    int divisor;
    std::vector<int> exponents;
    bool contained;
    bool intersects;
  };
  std::vector<AtomRow> atoms;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    AtomRow row{d, boolean_atom(m, d), false, false};
    row.contained = std::all_of(row.exponents.begin(), row.exponents.end(),
                                [&](int e) { return std::binary_search(T.begin(), T.end(), e); });
    row.intersects = std::any_of(row.exponents.begin(), row.exponents.end(),
                                 [&](int e) { return std::binary_search(T.begin(), T.end(), e); });
    atoms.push_back(std::move(row));
  }

  if (cfg.json) {
    ordered_json o;
    o["order"] = m;
    o["set"] = T;
    o["member"] = member;
    ordered_json arr = ordered_json::array();
    for (const AtomRow& a : atoms) {
      ordered_json row;
      row["divisor"] = a.divisor;
      row["exponents"] = a.exponents;
      row["contained"] = a.contained;
      row["intersects"] = a.intersects;
      arr.push_back(std::move(row));
    }
    o["atoms"] = std::move(arr);
    out << o.dump(2) << "\n";
    return 0;
  }

  out << "cyclic group Z_" << m << ", T = {";
  for (std::size_t t = 0; t < T.size(); ++t) out << (t ? "," : "") << T[t];
  out << "}\n";
  out << "member of B(Z_" << m << "): " << (member ? "yes" : "no") << "\n";
  for (const AtomRow& a : atoms) {
    if (!a.intersects) continue;
    out << "  atom(order " << a.divisor << ") = {";
    for (std::size_t t = 0; t < a.exponents.size(); ++t)
      out << (t ? "," : "") << a.exponents[t];
    out << "}: " << (a.contained ? "contained" : "partially covered") << "\n";
  }
  return 0;
}

int run_family(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto id = parse_family_id(cfg.family_id);
  if (!id) throw UsageError("--id: unknown family '" + cfg.family_id + "'");
  const FamilySpec spec = family(*id, cfg.param);

  bool verified = false;
  std::string detail;
  if (cfg.verify) verified = verify_family(spec, &detail);

  if (cfg.json) {
    ordered_json o;
    o["id"] = family_id_name(spec.id);
    o["param"] = spec.parameter;
    o["n"] = spec.n;
    o["degree"] = spec.set.size();
    o["set"] = set_to_json(spec.set);
    o["predicted"] = spectrum_to_json(spec.predicted);
    if (cfg.verify) o["verified"] = verified;
    out << o.dump(2) << "\n";
  } else {
    out << "family " << family_id_name(spec.id) << ", parameter "
        << spec.parameter << " (n = " << spec.n << ", " << 6 * spec.n
        << " vertices, " << spec.set.size() << "-regular)\n";
    out << "S = {" << format_set(spec.set) << "}\n";
    out << "predicted spectrum: " << spec.predicted.str() << "\n";
    if (cfg.verify)
      out << "verified: " << (verified ? "yes" : "NO") << "\n";
  }
  if (cfg.verify && !verified) {
    err << detail;
    return 2;
  }
  return 0;
}

int run_search(const RunConfig& cfg, std::ostream& out) {
  CensusOptions opts;
  opts.connected_only = cfg.connected_only;
  opts.sample_count = cfg.sample_count;
  opts.seed = cfg.seed;
  const std::vector<CensusRow> rows = census(cfg.n, opts);

  if (cfg.json) {
    ordered_json arr = ordered_json::array();
    for (const CensusRow& r : rows) {
      ordered_json o;
      o["set"] = r.set;
      o["size"] = r.size;
      o["connected"] = r.connected;
      o["integral"] = r.integral;
      o["criterion"] = r.criterion;
      if (r.spectrum)
        o["spectrum"] = spectrum_to_json(*r.spectrum);
      else
        o["spectrum"] = nullptr;
      arr.push_back(std::move(o));
    }
    out << arr.dump(2) << "\n";
    return 0;
  }

  out << "set,size,connected,integral,criterion,spectrum\n";
  for (const CensusRow& r : rows) {
    out << "\"" << r.set << "\"," << r.size << ","
        << (r.connected ? "true" : "false") << ","
        << (r.integral ? "true" : "false") << "," << r.criterion << ","
        << (r.spectrum ? spectrum_csv(*r.spectrum) : "") << "\n";
  }
  return 0;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"integral Cayley graphs over U_6n", "u6ncay"};
  app.require_subcommand(1);

  std::string exponent_literal;
  int sample_count = 0;

  auto* table = app.add_subcommand("table", "print the character table of U_6n");
  table->add_option("--n", cfg.n, "group parameter n (group order 6n)")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_flag("--json", cfg.json, "JSON output");

  auto* spectrum =
      app.add_subcommand("spectrum", "spectrum of the Cayley graph Cay(U_6n, S)");
  spectrum->add_option("--n", cfg.n, "group parameter n")
      ->required()
      ->check(CLI::PositiveNumber);
  spectrum
      ->add_option("--set", cfg.set_literal,
                   "connection set, e.g. \"a^1,a^3,b^1,b^2\"")
      ->required();
  spectrum->add_option("--method", cfg.method, "babai | brute | exact")
      ->check(CLI::IsMember({"babai", "brute", "exact"}));
  spectrum->add_flag("--json", cfg.json, "JSON output");

  auto* check = app.add_subcommand("check", "decide integrality of Cay(U_6n, S)");
  check->add_option("--n", cfg.n, "group parameter n")
      ->required()
      ->check(CLI::PositiveNumber);
  check->add_option("--set", cfg.set_literal, "connection set")->required();
  check->add_flag("--json", cfg.json, "JSON output");

  auto* boolean = app.add_subcommand(
      "boolean", "Boolean-algebra membership for a subset of a cyclic group");
  boolean->add_option("--order", cfg.order, "cyclic group order m")
      ->required()
      ->check(CLI::PositiveNumber);
  boolean->add_option("--set", exponent_literal,
                      "exponent list, e.g. \"1,3\" (empty set if omitted)");
  boolean->add_flag("--json", cfg.json, "JSON output");

  auto* fam = app.add_subcommand("family", "build one of the integral families");
  fam->add_option("--id", cfg.family_id, "cor-3x | 4-first | 4-second | 4-third")
      ->required();
  fam->add_option("--param", cfg.param, "p for cor-3x, n otherwise")->required();
  fam->add_flag("--verify", cfg.verify,
                "verify predicted spectrum against both spectral oracles");
  fam->add_flag("--json", cfg.json, "JSON output");

  auto* search = app.add_subcommand("search", "census of connection sets");
  search->add_option("--n", cfg.n, "group parameter n")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_flag("--connected-only", cfg.connected_only,
                   "keep only generating sets");
  auto* sample_opt =
      search->add_option("--sample", sample_count, "sample COUNT random sets")
          ->check(CLI::PositiveNumber);
  search->add_option("--seed", cfg.seed, "seed for --sample (default 0)");
  auto* csv_flag = search->add_flag("--csv", cfg.csv, "CSV output (default)");
  auto* json_flag = search->add_flag("--json", cfg.json, "JSON output");
  csv_flag->excludes(json_flag);

  std::vector<std::string> argv_strings;
  argv_strings.reserve(args.size() + 1);
  argv_strings.push_back("u6ncay");
  for (const std::string& a : args) argv_strings.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(argv_strings.size());
  for (const std::string& a : argv_strings) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    help << app.help();
    throw HelpRequested{help.str()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (app.got_subcommand(table)) cfg.cmd = RunConfig::Cmd::table;
  if (app.got_subcommand(spectrum)) cfg.cmd = RunConfig::Cmd::spectrum;
  if (app.got_subcommand(check)) cfg.cmd = RunConfig::Cmd::check;
  if (app.got_subcommand(boolean)) cfg.cmd = RunConfig::Cmd::boolean_alg;
  if (app.got_subcommand(fam)) cfg.cmd = RunConfig::Cmd::family;
  if (app.got_subcommand(search)) cfg.cmd = RunConfig::Cmd::search;

  if (cfg.cmd == RunConfig::Cmd::spectrum || cfg.cmd == RunConfig::Cmd::check) {
    try {
      cfg.set = parse_set(cfg.n, cfg.set_literal);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--set: ") + e.what());
    }
  }
  if (cfg.cmd == RunConfig::Cmd::boolean_alg && !exponent_literal.empty())
    cfg.exponents = parse_exponent_list(exponent_literal);
  if (cfg.cmd == RunConfig::Cmd::search && sample_opt->count() > 0)
    cfg.sample_count = sample_count;

  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.cmd) {
      case RunConfig::Cmd::table: return run_table(cfg, out);
      case RunConfig::Cmd::spectrum: return run_spectrum(cfg, out);
      case RunConfig::Cmd::check: return run_check(cfg, out);
      case RunConfig::Cmd::boolean_alg: return run_boolean(cfg, out);
      case RunConfig::Cmd::family: return run_family(cfg, out, err);
      case RunConfig::Cmd::search: return run_search(cfg, out);
    }
  } catch (const internal_consistency_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
  for (int t = 1; t < argc; ++t) args.emplace_back(argv[t]);
  try {
    const RunConfig cfg = parse_args(args);
    return run(cfg, std::cout, std::cerr);
  } catch (const HelpRequested& h) {
    std::cout << h.text;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nrun 'u6ncay --help' for usage\n";
    return 1;
  } catch (const internal_consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace u6ncay::cli

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dforge/constructions.hpp"
#include "dforge/counting.hpp"
#include "dforge/dessin.hpp"
#include "dforge/error.hpp"
#include "dforge/group.hpp"
#include "dforge/search.hpp"

#ifndef DFORGE_DEFAULT_FIXTURE
#define DFORGE_DEFAULT_FIXTURE "data/witness_tables.json"
#endif

namespace dforge::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for a failed check that should still print its report.
struct CheckFailed {};

struct Config {
  std::string format = "json";
  std::string output;
  unsigned threads = 0; // 0: DESSIN_FORGE_THREADS or 1
  std::size_t guard = 14;

  std::string passport;
  std::size_t b = 0, q = 0, m = 0, n = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 1000;

  std::string dessin; // JSON text or path, "-" for stdin
  std::string x, y;
  std::string family;
  std::size_t a = 0, p = 0;
  std::string fixture = DFORGE_DEFAULT_FIXTURE;
  bool tables = false;
};

unsigned thread_count(const Config &config) {
  if (config.threads)
    return config.threads;
  if (const char *env = std::getenv("DESSIN_FORGE_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0 && v <= 1024)
        return static_cast<unsigned>(v);
    } catch (const std::exception &) {
    }
    throw InvalidInput(std::string("DESSIN_FORGE_THREADS must be a positive integer, got '") +
                       env + "'");
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Dessin I/O

Json dessin_json(const Dessin &d) {
  Json j;
  j["n"] = d.degree();
  j["x"] = print_cycles(d.x());
  j["y"] = print_cycles(d.y());
  return j;
}

std::string read_all(std::istream &in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Dessin dessin_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("x") || !j.contains("y"))
    throw InvalidInput("dessin JSON needs fields n, x, y");
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    throw InvalidInput("dessin JSON: n must be a positive integer");
  if (!j["x"].is_string() || !j["y"].is_string())
    throw InvalidInput("dessin JSON: x and y must be cycle strings");
  const auto n = j["n"].get<std::size_t>();
  return Dessin(parse_cycles(j["x"].get<std::string>(), n),
                parse_cycles(j["y"].get<std::string>(), n));
}

Dessin input_dessin(const Config &config) {
  if (!config.x.empty() || !config.y.empty()) {
    if (config.n == 0)
      throw InvalidInput("--x/--y need --n");
    return Dessin(parse_cycles(config.x.empty() ? "()" : config.x, config.n),
                  parse_cycles(config.y.empty() ? "()" : config.y, config.n));
  }
  if (config.dessin.empty())
    throw InvalidInput("no dessin given (use --dessin JSON|FILE|- or --n/--x/--y)");
  std::string text;
  if (config.dessin == "-") {
    text = read_all(std::cin);
  } else if (config.dessin.find('{') != std::string::npos) {
    text = config.dessin;
  } else {
    std::ifstream in(config.dessin);
    if (!in)
      throw InvalidInput("cannot read " + config.dessin);
    text = read_all(in);
  }
  try {
    return dessin_from_json(Json::parse(text));
  } catch (const nlohmann::json::exception &e) {
    throw InvalidInput(std::string("dessin JSON: ") + e.what());
  }
}

/// Graph view: one black node per x-cycle, one white node per y-cycle, one
/// edge per point. The cyclic order around vertices is not drawn.
std::string dot_graph(const Dessin &d) {
  const std::size_t n = d.degree();
  const auto xc = d.x().cycles(), yc = d.y().cycles();
  std::vector<std::size_t> black_of(n), white_of(n);
  for (std::size_t i = 0; i < xc.size(); ++i)
    for (Point e : xc[i])
      black_of[e] = i;
  for (std::size_t i = 0; i < yc.size(); ++i)
    for (Point e : yc[i])
      white_of[e] = i;

  std::ostringstream os;
  os << "graph dessin {\n";
  os << "  // passport " << d.passport().to_string() << "\n";
  for (std::size_t i = 0; i < xc.size(); ++i)
    os << "  b" << i << " [shape=circle, style=filled, fillcolor=black, label=\"\"];\n";
  for (std::size_t i = 0; i < yc.size(); ++i)
    os << "  w" << i << " [shape=circle, style=filled, fillcolor=white, label=\"\"];\n";
  for (Point e = 0; e < n; ++e)
    os << "  b" << black_of[e] << " -- w" << white_of[e] << " [label=\"" << e + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

Json block_divisor_json(const Dessin &d) {
  const auto gens = d.generators();
  return block_divisors(gens);
}

Json analysis(const Dessin &d) {
  const PermGroup group({d.x(), d.y()});
  const auto aut = automorphism_group(d);
  const Passport p = d.passport();
  Json j;
  j["passport"] = p.to_string();
  j["genus"] = p.genus();
  j["uniform"] = p.is_uniform();
  j["order"] = group.order().get_str();
  j["aut_order"] = aut.size();
  j["regular"] = group.order() == static_cast<unsigned long>(d.degree());
  j["primitive"] = is_primitive(d);
  j["block_divisors"] = block_divisor_json(d);
  return j;
}

// ---------------------------------------------------------------------------
// Output

void emit(const Config &config, std::ostream &out, const std::string &text) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output);
  if (!file)
    throw InvalidInput("cannot write " + config.output);
  file << text;
}

void emit_json(const Config &config, std::ostream &out, const Json &j) {
  emit(config, out, j.dump(2) + "\n");
}

std::string text_lines(const Json &j) {
  std::ostringstream os;
  for (const auto &[key, value] : j.items())
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return os.str();
}

void require_format(const Config &config, std::initializer_list<const char *> allowed) {
  for (const char *f : allowed) {
    if (config.format == f)
      return;
  }
  throw InvalidInput("format '" + config.format + "' is not supported by this subcommand");
}

void emit_report(const Config &config, std::ostream &out, const Json &j) {
  require_format(config, {"json", "text"});
  if (config.format == "text")
    emit(config, out, text_lines(j));
  else
    emit_json(config, out, j);
}

std::string rational(const mpq_class &v) { return v.get_str(); }

// ---------------------------------------------------------------------------
// Subcommands

void cmd_analyze(const Config &config, std::ostream &out) {
  emit_report(config, out, analysis(input_dessin(config)));
}

void cmd_export_dot(const Config &config, std::ostream &out) {
  emit(config, out, dot_graph(input_dessin(config)));
}

void cmd_enumerate(const Config &config, std::ostream &out) {
  if (config.passport.empty())
    throw InvalidInput("enumerate needs --passport");
  const Passport p = Passport::parse(config.passport);
  const auto dessins = enumerate_dessins(p, {config.guard, thread_count(config)});
  Json list = Json::array();
  std::vector<std::size_t> aut_orders;
  for (const auto &d : dessins) {
    Json j = dessin_json(d);
    const Json a = analysis(d);
    j["order"] = a["order"];
    j["aut_order"] = a["aut_order"];
    j["regular"] = a["regular"];
    j["primitive"] = a["primitive"];
    aut_orders.push_back(a["aut_order"].get<std::size_t>());
    list.push_back(std::move(j));
  }
  require_format(config, {"json", "text", "dot"});
  if (config.format == "dot") {
    std::string text;
    for (const auto &d : dessins)
      text += dot_graph(d);
    emit(config, out, text);
    return;
  }
  if (config.format == "text") {
    std::ostringstream os;
    os << "passport " << p.to_string() << " genus " << p.genus() << ": " << dessins.size()
       << " dessin(s)\n";
    for (const auto &j : list)
      os << "  x=" << j["x"].get<std::string>() << " y=" << j["y"].get<std::string>()
         << " order=" << j["order"].get<std::string>() << " aut=" << j["aut_order"].dump()
         << "\n";
    emit(config, out, os.str());
    return;
  }
  Json report;
  report["passport"] = p.to_string();
  report["genus"] = p.genus();
  report["count"] = dessins.size();
  report["aut_orders"] = aut_orders;
  report["dessins"] = std::move(list);
  emit_json(config, out, report);
}

void cmd_count(const Config &config, std::ostream &out) {
  if (config.b == 0 || config.q == 0)
    throw InvalidInput("count needs --b and --q");
  const CountReport r = count_report(config.b, config.q);
  Json j;
  j["n"] = r.n;
  j["b"] = r.b;
  j["q"] = r.q;
  j["T"] = r.t.get_str();
  j["N"] = r.n_count.get_str();
  Json im = Json::object();
  for (const auto &[m, value] : r.i_m) {
    if (config.m == 0 || config.m == m)
      im[std::to_string(m)] = value.get_str();
  }
  if (config.m != 0 && im.empty())
    throw InvalidInput("--m " + std::to_string(config.m) + " is not a divisor of n with 2 <= m < n");
  j["I_m"] = std::move(im);
  j["N_over_T"] = rational(r.n_over_t);
  j["sum_I_over_T"] = rational(r.i_over_t);
  j["bound"] = rational(r.bound);
  j["is_passport"] = r.is_passport;
  if (r.is_passport) {
    j["bound_holds"] = r.bound_holds;
    j["bound_tight"] = r.bound_tight;
  }
  emit_report(config, out, j);
  if (r.is_passport && !r.bound_holds)
    throw CheckFailed{};
}

Json certificate_json(const WitnessCertificate &c) {
  Json j;
  j["b"] = c.b;
  j["q"] = c.q;
  j["n"] = c.degree();
  j["y"] = print_cycles(c.y);
  j["conclusion"] = std::string(to_string(c.conclusion));
  if (c.word)
    j["word"] = c.word->to_string();
  if (c.prime)
    j["prime"] = *c.prime;
  if (c.w)
    j["w"] = print_cycles(*c.w);
  if (c.order)
    j["order"] = c.order->get_str();
  return j;
}

void cmd_verify_tables(const Config &config, std::ostream &out) {
  const auto rows = load_witness_tables(config.fixture);
  Json results = Json::array();
  std::size_t passed = 0;
  for (const auto &row : rows) {
    const CertifyResult r = certify(row);
    Json j;
    j["table"] = row.table;
    j["b"] = row.b;
    j["q"] = row.q;
    j["pass"] = r.accepted;
    if (r.failed) {
      j["failed_step"] = std::string(to_string(*r.failed));
      j["detail"] = r.detail;
    }
    if (r.computed_order)
      j["order"] = r.computed_order->get_str();
    if (r.aut_order)
      j["aut_order"] = *r.aut_order;
    passed += r.accepted;
    results.push_back(std::move(j));
  }
  require_format(config, {"json", "text"});
  if (config.format == "text") {
    std::ostringstream os;
    for (const auto &j : results) {
      os << (j["pass"].get<bool>() ? "PASS" : "FAIL") << " table " << j["table"].dump()
         << " (b,q)=(" << j["b"].dump() << "," << j["q"].dump() << ")";
      if (j.contains("failed_step"))
        os << " " << j["failed_step"].get<std::string>() << ": "
           << j["detail"].get<std::string>();
      os << "\n";
    }
    os << passed << "/" << rows.size() << " rows pass\n";
    emit(config, out, os.str());
  } else {
    Json report;
    report["rows"] = rows.size();
    report["passed"] = passed;
    report["results"] = std::move(results);
    emit_json(config, out, report);
  }
  if (passed != rows.size())
    throw CheckFailed{};
}

void cmd_search(const Config &config, std::ostream &out) {
  if (config.b == 0 || config.q == 0)
    throw InvalidInput("search needs --b and --q");
  SearchOptions options;
  options.threads = thread_count(config);
  const SearchResult r = search_trivial_aut(config.b, config.q, config.seed, config.budget, options);
  Json j;
  j["b"] = config.b;
  j["q"] = config.q;
  j["seed"] = config.seed;
  j["budget"] = config.budget;
  j["status"] = r.certificate ? "found" : "exhausted";
  j["draws"] = r.draws;
  j["face_ok"] = r.face_ok;
  j["primitive_ok"] = r.primitive_ok;
  if (r.certificate) {
    j["winning_draw"] = r.winning_draw;
    j["certificate"] = certificate_json(*r.certificate);
  }
  emit_report(config, out, j);
  if (!r.certificate)
    throw CheckFailed{};
}

void cmd_construct(const Config &config, std::ostream &out) {
  std::optional<Dessin> d;
  if (config.family == "star" || config.family == "polygon") {
    if (config.n == 0)
      throw InvalidInput("--family " + config.family + " needs --n");
    d = genus0_dessin(config.family == "star" ? Genus0Kind::Star : Genus0Kind::Polygon,
                      config.n);
  } else if (config.family == "alternating") {
    d = alternating_witness(config.n);
  } else if (config.family == "tree") {
    TreeSpec spec{config.a, config.p, config.b, config.q};
    if (!config.passport.empty()) {
      const Passport p = Passport::parse(config.passport);
      if (!p.black().is_uniform() || !p.white().is_uniform() ||
          p.face() != CycleType{p.degree()})
        throw InvalidInput("tree passport must be [a^p,b^q,n], got " + p.to_string());
      spec = {p.black().largest(), p.black().length(), p.white().largest(), p.white().length()};
    }
    d = regular_tree_dessin(spec);
    if (!d) {
      Json j;
      j["passport"] = spec.to_string();
      j["regular_tree_dessin"] = nullptr;
      j["reason"] = "gcd(p, q) > 1";
      emit_report(config, out, j);
      throw CheckFailed{};
    }
  } else {
    throw InvalidInput("--family must be tree, star, polygon or alternating");
  }
  require_format(config, {"json", "dot", "text"});
  if (config.format == "dot") {
    emit(config, out, dot_graph(*d));
    return;
  }
  Json j = dessin_json(*d);
  j["passport"] = d->passport().to_string();
  if (config.format == "text")
    emit(config, out, text_lines(j));
  else
    emit_json(config, out, j);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Config config;
  CLI::App app{"dessin-forge: dessins d'enfants as permutation pairs"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--format", config.format, "json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--output", config.output, "write to a file instead of stdout");
    sub->add_option("--threads", config.threads, "worker cap (default $DESSIN_FORGE_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));
  };
  auto add_dessin_input = [&](CLI::App *sub) {
    sub->add_option("--dessin", config.dessin, "dessin JSON {n,x,y}, a file holding it, or -");
    sub->add_option("--n", config.n, "degree (with --x/--y)");
    sub->add_option("--x", config.x, "x in cycle notation");
    sub->add_option("--y", config.y, "y in cycle notation");
  };

  auto *analyze = app.add_subcommand("analyze", "group, Aut, regularity and primitivity of a dessin");
  add_common(analyze);
  add_dessin_input(analyze);

  auto *export_dot = app.add_subcommand("export-dot", "bipartite graph of a dessin as DOT");
  add_common(export_dot);
  add_dessin_input(export_dot);

  auto *enumerate = app.add_subcommand("enumerate", "all dessins of a passport up to isomorphism");
  add_common(enumerate);
  enumerate->add_option("--passport", config.passport, "e.g. \"[6,3^2,6]\"");
  enumerate->add_option("--guard", config.guard, "largest degree to enumerate")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("passport_pos", config.passport)->excludes("--passport");

  auto *count = app.add_subcommand("count", "T, N, I_m and the N/T bound for (b, q)");
  add_common(count);
  count->add_option("--b", config.b)->required()->check(CLI::PositiveNumber);
  count->add_option("--q", config.q)->required()->check(CLI::PositiveNumber);
  count->add_option("--m", config.m, "report only this divisor");

  auto *verify = app.add_subcommand("verify", "certify the shipped witness tables");
  add_common(verify);
  verify->add_flag("--tables", config.tables, "verify every fixture row")->required();
  verify->add_option("--fixture", config.fixture, "witness fixture path");

  auto *verify_tables = app.add_subcommand("verify-tables", "same as verify --tables");
  add_common(verify_tables);
  verify_tables->add_option("--fixture", config.fixture, "witness fixture path");

  auto *search = app.add_subcommand("search", "random search for a trivial-Aut dessin [n,b^q,n]");
  add_common(search);
  search->add_option("--b", config.b)->required()->check(CLI::PositiveNumber);
  search->add_option("--q", config.q)->required()->check(CLI::PositiveNumber);
  search->add_option("--seed", config.seed);
  search->add_option("--budget", config.budget, "number of candidate draws");

  auto *construct = app.add_subcommand("construct", "build a dessin from a named family");
  add_common(construct);
  construct->add_option("--family", config.family, "tree, star, polygon or alternating")
      ->required()
      ->check(CLI::IsMember({"tree", "star", "polygon", "alternating"}));
  construct->add_option("--n", config.n);
  construct->add_option("--passport", config.passport, "tree passport [a^p,b^q,n]");
  construct->add_option("--a", config.a);
  construct->add_option("--p", config.p);
  construct->add_option("--b", config.b);
  construct->add_option("--q", config.q);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*analyze)
      cmd_analyze(config, out);
    else if (*export_dot)
      cmd_export_dot(config, out);
    else if (*enumerate)
      cmd_enumerate(config, out);
    else if (*count)
      cmd_count(config, out);
    else if (*verify || *verify_tables)
      cmd_verify_tables(config, out);
    else if (*search)
      cmd_search(config, out);
    else if (*construct)
      cmd_construct(config, out);
  } catch (const CheckFailed &) {
    return kCheckFailed;
  } catch (const InfeasibleSize &e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InvalidInput &e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InternalError &e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}

} // namespace dforge::cli

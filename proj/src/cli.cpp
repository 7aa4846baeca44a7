#include "pec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "pec/aspgen.hpp"
#include "pec/engine.hpp"
#include "pec/syntax.hpp"

namespace pec::cli {

namespace {

/// Reported to the user and mapped to an exit code by run().
struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsageError, "cannot read '" + path + "'"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

DomainDescription load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_domain(text);
  } catch (const ParseError& e) {
    throw Failure{kUsageError, path + ":" + e.what()};
  } catch (const InvalidDomain& e) {
    const auto& all = e.diagnostics();
    std::ostringstream os;
    os << path << ": invalid domain description (" << all.size() << " problem"
       << (all.size() == 1 ? "" : "s") << ")";
    for (const auto& d : e.diagnostics()) {
      os << "\n" << path << ":" << d.where.line << ":" << d.where.column
         << ": [" << violation_tag(d.kind) << "] " << d.message;
    }
    throw Failure{kSemanticError, os.str()};
  }
}

IFormula query_formula(const std::string& text, const Signature& sig,
                       const char* flag) {
  try {
    return parse_query(text, sig);
  } catch (const ParseError& e) {
    throw Failure{kUsageError, std::string(flag) + ": " + e.what()};
  } catch (const RangeError& e) {
    throw Failure{kUsageError, std::string(flag) + ": " + e.what()};
  }
}

int precision_from_env(int fallback) {
  const char* env = std::getenv("PEC_PRECISION");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 100) {
    throw Failure{kUsageError, "PEC_PRECISION must be an integer in [0, 100]"};
  }
  return static_cast<int>(v);
}

std::string node_label(const Signature& sig, const FluentState& s) {
  std::vector<std::string> parts;
  for (SymbolId f = 0; f < sig.fluent_count(); ++f) {
    parts.push_back(sig.name(f) + "=" + sig.value_name(f, s[f]));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

std::string action_label(const Signature& sig,
                         const std::vector<ValueId>& actions) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    if (actions[k] == kTrue) names.push_back(sig.name(sig.action_symbol(k)));
  }
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t k = 0; k < names.size(); ++k) {
    out += (k ? ", " : "") + names[k];
  }
  return out + "}";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// ---------------------------------------------------------------------------

void cmd_check(const std::string& file, std::ostream& out) {
  DomainDescription dd = load(file);
  const Signature& sig = dd.sig();
  out << file << ": valid\n"
      << "  fluents: " << sig.fluent_count()
      << ", actions: " << sig.action_count()
      << ", maxinst: " << sig.maxinst() << "\n"
      << "  propositions: " << dd.vprops.size() << " v, " << dd.cprops.size()
      << " c, 1 i, " << dd.pprops.size() << " p\n";
}

struct QueryOptions {
  std::string file;
  std::string query;
  std::optional<std::string> given;
  std::optional<int> precision;
  bool exact = false;
};

void cmd_query(const QueryOptions& o, std::ostream& out) {
  const int digits = o.precision ? *o.precision : precision_from_env(6);
  DomainDescription dd = load(o.file);
  IFormula phi = query_formula(o.query, dd.sig(), "-q");
  std::optional<IFormula> psi;
  if (o.given) psi = query_formula(*o.given, dd.sig(), "--given");

  Model model(dd);
  Probability p;
  try {
    p = psi ? model.conditional(phi, *psi) : model.marginal(phi);
  } catch (const ConditionZero& e) {
    throw Failure{kSemanticError, e.what()};
  }
  out << (o.exact ? format_fraction(p) : format_decimal(p, digits)) << "\n";
}

struct TranslateOptions {
  std::string file;
  std::optional<std::string> output;
  bool with_axioms = false;
};

void cmd_translate(const TranslateOptions& o, std::ostream& out) {
  DomainDescription dd = load(o.file);
  std::string text;
  try {
    text = emit(dd, o.with_axioms);
  } catch (const NameCollision& e) {
    throw Failure{kSemanticError, e.what()};
  }
  if (o.output && *o.output == "-") {
    out << text;
    return;
  }
  const std::string path =
      o.output ? *o.output
               : std::filesystem::path(o.file).stem().string() + ".lp";
  std::ofstream file(path, std::ios::binary);
  if (!(file << text) || !file.flush()) {
    throw Failure{kUsageError, "cannot write '" + path + "'"};
  }
  out << "wrote " << path << "\n";
}

void cmd_graph(const std::string& file, std::ostream& out) {
  DomainDescription dd = load(file);
  const Signature& sig = dd.sig();
  TransitionGraph g = transition_graph(dd);

  std::vector<std::string> nodes;
  for (const auto& n : g.nodes) nodes.push_back(node_label(sig, n));
  std::sort(nodes.begin(), nodes.end());

  std::vector<std::tuple<std::string, std::string, std::string, std::string>>
      edges;
  for (const auto& e : g.edges) {
    edges.emplace_back(node_label(sig, e.source), action_label(sig, e.actions),
                       node_label(sig, e.target), format_fraction(e.prob));
  }
  std::sort(edges.begin(), edges.end());

  out << "digraph transitions {\n";
  for (const auto& n : nodes) out << "  " << quoted(n) << ";\n";
  for (const auto& [from, actions, to, prob] : edges) {
    out << "  " << quoted(from) << " -> " << quoted(to)
        << " [label=" << quoted(actions + ", " + prob) << "];\n";
  }
  out << "}\n";
}

struct SampleOptions {
  std::string file;
  long long count = 0;
  std::uint64_t seed = 1;
  std::string query;
};

void cmd_sample(const SampleOptions& o, std::ostream& out) {
  if (o.count <= 0) {
    throw Failure{kUsageError, "sample count must be positive"};
  }
  DomainDescription dd = load(o.file);
  IFormula phi = query_formula(o.query, dd.sig(), "-q");
  WorldSampler sampler(dd, o.seed);
  long long hits = 0;
  for (long long k = 0; k < o.count; ++k) {
    if (satisfies(sampler.next(), phi)) ++hits;
  }
  Probability freq(hits);
  freq /= o.count;
  out << "samples: " << o.count << "\n"
      << "hits: " << hits << "\n"
      << "frequency: " << format_decimal(freq, 6) << "\n"
      << "exact: " << format_decimal(Model(dd).marginal(phi), 6) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact reasoning for probabilistic event calculus domains", "pec"};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Validate a domain description");
  check->add_option("file", check_file, "Domain file")->required();

  QueryOptions q;
  auto* query = app.add_subcommand("query", "Probability of an i-formula");
  query->add_option("file", q.file, "Domain file")->required();
  query->add_option("-q,--query", q.query, "I-formula, e.g. \"[Coin=Heads]@2\"")
      ->required();
  query->add_option("--given", q.given, "Condition on this i-formula");
  query->add_option("--precision", q.precision, "Decimal digits (default 6)")
      ->check(CLI::Range(0, 100));
  query->add_flag("--exact", q.exact, "Print the exact fraction");

  TranslateOptions t;
  auto* translate = app.add_subcommand("translate", "Emit an ASP program");
  translate->add_option("file", t.file, "Domain file")->required();
  translate->add_option("-o,--output", t.output,
                        "Output path ('-' for stdout; default <stem>.lp)");
  translate->add_flag("--with-axioms", t.with_axioms,
                      "Append the domain-independent axioms");

  std::string graph_file;
  std::string graph_format = "dot";
  auto* graph = app.add_subcommand("graph", "Export the transition function");
  graph->add_option("file", graph_file, "Domain file")->required();
  graph->add_option("--format", graph_format, "Output format")
      ->check(CLI::IsMember({"dot"}));

  SampleOptions s;
  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of a query");
  sample->add_option("file", s.file, "Domain file")->required();
  sample->add_option("-n,--count", s.count, "Number of sampled worlds")
      ->required();
  sample->add_option("--seed", s.seed, "Random seed (default 1)");
  sample->add_option("-q,--query", s.query, "I-formula")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*check) cmd_check(check_file, out);
    if (*query) cmd_query(q, out);
    if (*translate) cmd_translate(t, out);
    if (*graph) cmd_graph(graph_file, out);
    if (*sample) cmd_sample(s, out);
  } catch (const Failure& f) {
    err << "pec: " << f.message << "\n";
    return f.code;
  } catch (const ConcurrentActivation& e) {
    err << "pec: " << e.what() << "\n";
    return kSemanticError;
  } catch (const std::exception& e) {
    err << "pec: " << e.what() << "\n";
    return kUsageError;
  }
  return kOk;
}

}  // namespace pec::cli

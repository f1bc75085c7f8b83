#include "schutz/error.hpp"
#include "schutz/report.hpp"
#include "schutz/text_format.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace schutz;

namespace {

// Missing or unreadable input files count as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Substitution load_substitution(const std::string& path) {
  const std::string text = read_file(path);
  if (looks_like_endomorphism(text)) throw PreconditionError(path + " holds a free-group endomorphism, not a substitution");
  return parse_substitution(text);
}

std::optional<Connection> parse_connection(const Substitution& s, const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw UsageError("--connection expects u,v");
  Connection c{parse_word(s.alphabet(), spec.substr(0, comma)), parse_word(s.alphabet(), spec.substr(comma + 1)), 0};
  const auto order = connection_order(s, c.u, c.v);
  if (!order) throw PreconditionError("not a connection: no power fixes the suffix u and the prefix v");
  c.order = *order;
  validate_connection(s, c);
  return c;
}

void write_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

// Periodic input presents Z-hat; callers print that and stop.
bool periodic(const Substitution& s) {
  if (!is_primitive_substitution(s)) throw PreconditionError("substitution is not primitive");
  const Periodicity p = classify_periodicity(s);
  if (p.kind == Periodicity::Kind::Unknown) throw PreconditionError("periodicity could not be decided within the bound");
  return p.kind == Periodicity::Kind::Periodic;
}

PronilDescriptor substitution_descriptor(const Substitution& s, const std::optional<Connection>& c) {
  if (!c && structural_flags(s).proper) return pronil_descriptor(s);
  return pronil_descriptor(return_substitution(s, c ? *c : default_connection(s)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pronilpotent quotients of Schützenberger groups of primitive substitutions"};
  app.require_subcommand(1);

  std::string file, connection_spec, json_path, group_spec;
  std::size_t max_len = 2;
  std::uint64_t budget_steps = SearchBudget{}.max_steps;
  bool exhaustive = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input file")->required();
    cmd->add_option("--json", json_path, "write a JSON report to this path");
  };
  auto* analyze = app.add_subcommand("analyze", "full report for a substitution");
  add_common(analyze);
  analyze->add_option("--connection", connection_spec, "connection u,v");
  analyze->add_option("--max-len", max_len, "longest |u|, |v| listed")->check(CLI::PositiveNumber);

  auto* returns = app.add_subcommand("returns", "return words and return substitution");
  add_common(returns);
  auto* ret_conn = returns->add_option("--connection", connection_spec, "connection u,v");
  returns->add_option("--max-len", max_len, "longest |u|, |v| listed")->check(CLI::PositiveNumber)->excludes(ret_conn);

  auto* nil = app.add_subcommand("nilquotient", "maximal pronilpotent quotient");
  add_common(nil);
  nil->add_option("--connection", connection_spec, "connection u,v");

  auto* freeness = app.add_subcommand("freeness", "freeness tests");
  add_common(freeness);
  freeness->add_option("--connection", connection_spec, "connection u,v");

  auto* quotient = app.add_subcommand("quotient", "finite quotient search");
  add_common(quotient);
  quotient->add_option("--group", group_spec, "sl2:n, perm:<cycles>,... or cyclic:m")->required();
  auto* budget_opt = quotient->add_option("--budget", budget_steps, "action steps outside exhaustive mode");
  quotient->add_flag("--exhaustive", exhaustive, "fail unless the whole of H^A can be searched")->excludes(budget_opt);

  auto* invariants = app.add_subcommand("invariants", "flow invariants");
  add_common(invariants);
  invariants->add_option("--connection", connection_spec, "connection u,v");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      const Substitution s = load_substitution(file);
      const AnalysisReport r = build_report(s, parse_connection(s, connection_spec), max_len);
      std::cout << render_report(r);
      write_json(json_path, to_json(r));
    } else if (returns->parsed()) {
      const Substitution s = load_substitution(file);
      if (periodic(s)) throw PreconditionError("return substitutions need an aperiodic substitution");
      const std::optional<Connection> chosen = parse_connection(s, connection_spec);
      Json j = Json::object();
      if (!chosen) {
        const auto all = find_connections(s, max_len);
        std::cout << "connections with |u|,|v| <= " << max_len << ": " << all.size() << "\n";
        Json list = Json::array();
        for (const Connection& c : all) {
          std::cout << "  " << render_connection(s.alphabet(), c) << "\n";
          list.push_back(to_json(s.alphabet(), c));
        }
        j["connections"] = list;
      }
      const ConnectionAnalysis ca = analyze_connection(s, chosen ? *chosen : default_connection(s));
      std::cout << render_returns(s.alphabet(), ca.returns);
      std::cout << "return reciprocal polynomial: " << to_string(ca.return_rev) << "\n";
      std::cout << "xi1: " << to_string(ca.xi.xi1) << "\nxi2: " << to_string(ca.xi.xi2) << "\nm: " << ca.m << "\n";
      j["analysis"] = to_json(ca, s.alphabet());
      write_json(json_path, j);
    } else if (nil->parsed()) {
      const std::string text = read_file(file);
      Json j;
      if (looks_like_endomorphism(text)) {
        const PronilDescriptor d = pronil_descriptor(parse_endomorphism(text));
        std::cout << render_descriptor(d);
        j = to_json(d);
      } else {
        const Substitution s = parse_substitution(text);
        if (periodic(s)) {
          std::cout << "periodic substitution\ngroup: " << periodic_group() << "\n";
          j = {{"classification", periodic_group()}};
        } else {
          const PronilDescriptor d = substitution_descriptor(s, parse_connection(s, connection_spec));
          std::cout << render_descriptor(d);
          j = to_json(d);
        }
      }
      write_json(json_path, j);
    } else if (freeness->parsed()) {
      const Substitution s = load_substitution(file);
      if (periodic(s)) {
        std::cout << "periodic substitution\ngroup: " << periodic_group() << "\n";
        write_json(json_path, {{"classification", periodic_group()}});
      } else {
        const FreenessReport f = freeness_report(s, parse_connection(s, connection_spec));
        std::cout << render_freeness(f);
        write_json(json_path, to_json(f));
      }
    } else if (quotient->parsed()) {
      const std::string text = read_file(file);
      const FreeGroupEndo e =
          looks_like_endomorphism(text) ? parse_endomorphism(text) : FreeGroupEndo(parse_substitution(text));
      const auto h = parse_group_spec(group_spec);
      SearchBudget budget;
      budget.max_steps = budget_steps;
      budget.require_exhaustive = exhaustive;
      const QuotientResult r = quotient_search(e, *h, budget);
      if (r.certificate && !certificate_check(e, *r.certificate, *h))
        throw InvariantError("quotient certificate failed its own check");
      std::cout << "perfect: " << (perfectness_test(e) ? "yes" : "no") << "\n";
      std::cout << render_certificate(*h, e.alphabet(), r);
      write_json(json_path, to_json(*h, r));
    } else if (invariants->parsed()) {
      const Substitution s = load_substitution(file);
      if (periodic(s)) throw PreconditionError("flow invariants need an aperiodic substitution");
      const std::optional<Connection> chosen = parse_connection(s, connection_spec);
      const ConnectionAnalysis ca = analyze_connection(s, chosen ? *chosen : default_connection(s));
      const FlowInvariants f = flow_invariants(ca, s);
      std::cout << "connection " << render_connection(s.alphabet(), ca.returns.connection) << "\n"
                << render_flow(f) << "m: " << ca.m << "\n";
      Json j = to_json(f);
      j["connection"] = to_json(s.alphabet(), ca.returns.connection);
      j["m"] = ca.m;
      write_json(json_path, j);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "semilat/semilat.hpp"

namespace semilat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Command> kCommands = {
    {"idempotents", Command::Idempotents},  {"et", Command::Et},
    {"verify", Command::Verify},            {"maximal", Command::Maximal},
    {"reduce", Command::Reduce},            {"order", Command::Order},
    {"enumerate", Command::Enumerate},      {"spectrum", Command::Spectrum},
    {"make-size", Command::MakeSize},       {"verify-theorem", Command::VerifyTheorem},
};

std::size_t parse_cap(const std::string& text) {
  std::size_t used = 0;
  std::size_t v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw UsageError("SEMILAT_CAP must be a positive integer, got '" + text + "'");
  return v;
}

void validate(const RunConfig& c) {
  auto needs_n = [&] {
    switch (c.command) {
      case Command::Idempotents: case Command::Et: case Command::Enumerate:
      case Command::Spectrum: case Command::MakeSize: case Command::VerifyTheorem:
        return true;
      default:
        return false;
    }
  }();
  if (needs_n && (c.n < 1 || c.n > kMaxPoints))
    throw UsageError("--n must be in [1, " + std::to_string(kMaxPoints) + "]");
  if (c.t && needs_n && *c.t >= c.n)
    throw UsageError("--t " + std::to_string(*c.t) + " outside [0, " + std::to_string(c.n) + ")");
  if (c.u && needs_n && *c.u >= c.n)
    throw UsageError("--u " + std::to_string(*c.u) + " outside [0, " + std::to_string(c.n) + ")");
  if (c.workers < 1) throw UsageError("--workers must be at least 1");
  if (c.cap < 1 || c.cap > kHardEnumerationCap)
    throw UsageError("enumeration cap " + std::to_string(c.cap) + " outside [1, " +
                     std::to_string(kHardEnumerationCap) + "]");
  if (c.format == Format::Csv && c.command != Command::Spectrum)
    throw UsageError("--format csv is only available for spectrum");
  if (c.command == Command::MakeSize) {
    const auto full = std::size_t{1} << (c.n - 1);
    if (*c.m < 1 || *c.m > full)
      throw UsageError("--m " + std::to_string(*c.m) + " outside [1, " + std::to_string(full) + "]");
  }
}

io::TransformationFile read_input(const RunConfig& c) {
  if (!c.input_path || *c.input_path == "-") return io::read_transformations(std::cin);
  std::ifstream in(*c.input_path);
  if (!in) throw UsageError("cannot read '" + *c.input_path + "'");
  try {
    return io::read_transformations(in);
  } catch (const io::ParseError& e) {
    throw UsageError(*c.input_path + ": " + e.what());
  }
}

SearchOptions search_options(const RunConfig& c) { return {c.cap, c.workers}; }

void check_enumeration_cap(const RunConfig& c) {
  if (c.n > c.cap)
    throw UsageError("n = " + std::to_string(c.n) + " exceeds the enumeration cap of " +
                     std::to_string(c.cap) + " (hard maximum " +
                     std::to_string(kHardEnumerationCap) + ", override with --cap or SEMILAT_CAP)");
}

io::json violation_json(const Violation& v) {
  io::json j{{"axiom", v.axiom()}};
  if (v.first) j["first"] = io::to_json(*v.first);
  if (v.second) j["second"] = io::to_json(*v.second);
  if (v.product) j["product"] = io::to_json(*v.product);
  return j;
}

std::string violation_text(const Violation& v) {
  std::string s = "invalid: " + v.axiom() + " fails";
  if (v.kind == Violation::Kind::Empty) return s + " (no transformations)\n";
  if (v.first) s += "\n  a = " + io::format_transformation(*v.first);
  if (v.second) s += "\n  b = " + io::format_transformation(*v.second);
  if (v.kind == Violation::Kind::Commutativity) {
    s += "\n  ab = " + io::format_transformation(compose(*v.first, *v.second));
    s += "\n  ba = " + io::format_transformation(compose(*v.second, *v.first));
  }
  if (v.kind == Violation::Kind::Idempotence)
    s += "\n  aa = " + io::format_transformation(compose(*v.first, *v.first));
  if (v.product) s += "\n  ab = " + io::format_transformation(*v.product) + " is missing";
  return s + "\n";
}

/// Loads --in and verifies it; on failure writes the violation and returns
/// nullopt.
std::optional<Semilattice> load_semilattice(const RunConfig& c, std::ostream& out) {
  auto file = read_input(c);
  if (file.elements.empty()) {
    Violation v{Violation::Kind::Empty, {}, {}, {}};
    if (c.format == Format::Json) out << io::dump({{"valid", false}, {"violation", violation_json(v)}});
    else out << violation_text(v);
    return std::nullopt;
  }
  auto r = verify_semilattice(*file.n, file.elements);
  if (auto* v = std::get_if<Violation>(&r)) {
    if (c.format == Format::Json) out << io::dump({{"valid", false}, {"violation", violation_json(*v)}});
    else out << violation_text(*v);
    return std::nullopt;
  }
  return std::get<Semilattice>(std::move(r));
}

std::string matrix_text(const std::vector<std::string>& labels,
                        const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += std::to_string(i) + ": " + labels[i] + "\n";
  s += "leq:\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (j) s += ' ';
      s += leq(i, j) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

int cmd_idempotents(const RunConfig& c, std::ostream& out) {
  const auto all = enumerate_idempotents(c.n);
  if (c.format == Format::Json) {
    io::json arr = io::json::array();
    for (const auto& e : all) arr.push_back(io::to_json(e));
    out << io::dump({{"n", c.n}, {"count", all.size()}, {"idempotents", std::move(arr)}});
    return kExitOk;
  }
  out << "n=" << c.n << " count=" << all.size() << "\n";
  for (const auto& e : all) out << io::format_transformation(e) << "\n";
  return kExitOk;
}

int cmd_et(const RunConfig& c, std::ostream& out) {
  const auto t = c.t.value_or(0);
  const auto s = make_Et(c.n, t);
  if (c.format == Format::Json) out << io::dump(io::to_json(s));
  else out << io::format_semilattice_text(s, t);
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  auto s = load_semilattice(c, out);
  if (!s) return kExitFail;
  if (c.format == Format::Json) out << io::dump({{"valid", true}, {"semilattice", io::to_json(*s)}});
  else out << "valid: n=" << s->n() << " size=" << s->size() << "\n";
  return kExitOk;
}

int cmd_maximal(const RunConfig& c, std::ostream& out) {
  auto s = load_semilattice(c, out);
  if (!s) return kExitFail;
  const auto verdict = is_maximal(*s, enumerate_idempotents(s->n()));
  if (c.format == Format::Json) {
    io::json j{{"maximal", verdict.maximal}, {"semilattice", io::to_json(*s)}};
    if (verdict.witness) j["witness"] = io::to_json(*verdict.witness);
    out << io::dump(j);
  } else {
    out << "maximal: " << (verdict.maximal ? "true" : "false") << "\n";
    if (verdict.witness) out << "witness: " << io::format_transformation(*verdict.witness) << "\n";
  }
  return verdict.maximal ? kExitOk : kExitFail;
}

int cmd_reduce(const RunConfig& c, std::ostream& out) {
  auto s = load_semilattice(c, out);
  if (!s) return kExitFail;
  if (s->n() < 2) throw UsageError("reduce needs at least 2 points");
  if (c.t.has_value() != c.u.has_value()) throw UsageError("--t and --u go together");
  if (c.t && !is_anchor(*s, {*c.t, *c.u}))
    throw UsageError("(t, u) = (" + std::to_string(*c.t) + ", " + std::to_string(*c.u) +
                     ") is not an anchor of the input");
  const auto r = c.t ? reduce(*s, {*c.t, *c.u}) : reduce(*s);
  if (c.format == Format::Json) {
    out << io::dump(io::to_json(r));
    return kExitOk;
  }
  out << "anchor t=" << r.anchor.t << " u=" << r.anchor.u << "\n";
  out << "sizes S=" << r.source_size << " S_star=" << r.star_image.size()
      << " S_star_u=" << r.restricted.size() << "\n";
  out << "star:\n" << io::format_semilattice_text(r.star_image);
  out << "restricted:\n" << io::format_semilattice_text(r.restricted);
  return kExitOk;
}

int cmd_order(const RunConfig& c, std::ostream& out) {
  auto s = load_semilattice(c, out);
  if (!s) return kExitFail;
  if (c.transitivity) {
    const auto rel = transitivity_order(*s);
    if (c.format == Format::Json) {
      out << io::dump(io::to_json(rel));
    } else {
      std::vector<std::string> labels;
      for (auto x : rel.carrier()) labels.push_back(std::to_string(x));
      out << "transitivity order on " << s->n() << " points\n"
          << matrix_text(labels, [&](auto i, auto j) { return rel.leq(i, j); });
    }
    return kExitOk;
  }
  const auto rel = natural_order(*s);
  if (c.format == Format::Json) {
    out << io::dump(io::to_json(rel));
  } else {
    std::vector<std::string> labels;
    for (const auto& e : rel.carrier()) labels.push_back(io::format_transformation(e));
    out << "natural order on " << s->size() << " elements\n"
        << matrix_text(labels, [&](auto i, auto j) { return rel.leq(i, j); });
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  check_enumeration_cap(c);
  const auto all = enumerate_maximal_semilattices(c.n, search_options(c));
  if (c.format == Format::Json) {
    io::json arr = io::json::array();
    for (const auto& s : all) arr.push_back(io::to_json(s));
    out << io::dump({{"n", c.n}, {"count", all.size()}, {"semilattices", std::move(arr)}});
    return kExitOk;
  }
  out << "n=" << c.n << " maximal=" << all.size() << "\n";
  for (const auto& s : all) out << "\n" << io::format_semilattice_text(s);
  return kExitOk;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  check_enumeration_cap(c);
  const auto r = spectrum(c.n, search_options(c));
  switch (c.format) {
    case Format::Json: out << io::dump(io::to_json(r)); break;
    case Format::Csv: out << io::spectrum_csv(r); break;
    case Format::Text:
      out << "n=" << r.n << " total_maximal=" << r.total << " max_size=" << r.max_size << "\n";
      out << "size count\n";
      for (const auto& [size, e] : r.entries) out << size << " " << e.count << "\n";
      break;
  }
  return kExitOk;
}

int cmd_make_size(const RunConfig& c, std::ostream& out) {
  const auto t = c.t.value_or(0);
  const auto s = semilattice_of_size(c.n, t, *c.m);
  if (c.format == Format::Json) out << io::dump(io::to_json(s));
  else out << io::format_semilattice_text(s, t);
  return kExitOk;
}

int cmd_verify_theorem(const RunConfig& c, std::ostream& out) {
  check_enumeration_cap(c);
  const auto n = c.n;
  const auto bound = std::size_t{1} << (n - 1);
  const auto bound_text = std::to_string(bound) + " = 2^" + std::to_string(n - 1);
  const auto all = enumerate_maximal_semilattices(n, search_options(c));
  std::vector<Semilattice> top;
  for (const auto& s : all)
    if (s.size() == all.front().size()) top.push_back(s);

  bool ok = true;
  io::json clauses = io::json::array();
  std::string text;
  auto clause = [&](bool pass, const std::string& what) {
    ok = ok && pass;
    text += std::string(pass ? "PASS" : "FAIL") + ": " + what + "\n";
    clauses.push_back({{"pass", pass}, {"clause", what}});
  };

  const auto max_size = all.front().size();
  clause(max_size == bound, "max size " + std::to_string(max_size) +
                                (max_size == bound ? " = " : " != ") + "2^" + std::to_string(n - 1));
  clause(top.size() == n, "count " + std::to_string(top.size()) + (top.size() == n ? " = " : " != ") + "n");

  std::vector<Semilattice> expected;
  for (std::size_t t = 0; t < n; ++t) expected.push_back(make_Et(n, t));
  sort_canonical(expected);
  clause(top == expected, "maximum-size semilattices are exactly E_0..E_" + std::to_string(n - 1));

  bool boolean = std::all_of(top.begin(), top.end(), [&](const Semilattice& s) {
    auto v = is_boolean_lattice(s);
    return v.is_boolean && v.atoms.size() == n - 1;
  });
  clause(boolean, "each maximum-size semilattice is Boolean with " + std::to_string(n - 1) + " atoms");

  bool smaller = std::all_of(all.begin(), all.end(), [&](const Semilattice& s) {
    return std::binary_search(expected.begin(), expected.end(), s, canonical_less) ||
           s.size() < bound;
  });
  clause(smaller, "every other maximal semilattice has fewer than " + bound_text + " elements");

  if (n >= 2) {
    bool chain = std::all_of(all.begin(), all.end(), [](const Semilattice& s) {
      const auto r = reduce(s);
      return r.source_size <= 2 * r.star_image.size() &&
             r.star_image.size() == r.restricted.size() && r.restricted.n() == s.n() - 1;
    });
    clause(chain, "reduction |S| <= 2|S*| = 2|S*_u| on all " + std::to_string(all.size()) +
                      " maximal semilattices");
  }

  if (c.format == Format::Json) out << io::dump({{"n", n}, {"pass", ok}, {"clauses", clauses}});
  else out << text;
  return ok ? kExitOk : kExitFail;
}

}  // namespace

ParseOutcome parse_args(const std::vector<std::string>& args, std::optional<std::string> env_cap) {
  RunConfig c;
  CLI::App app{"Subsemilattices of the full transformation semigroup T(n)", "semilat"};
  app.require_subcommand(1);

  std::string format = "text";
  std::optional<std::size_t> cap;
  std::map<CLI::App*, Command> subs;

  auto add = [&](const std::string& name, const std::string& desc) {
    auto* sub = app.add_subcommand(name, desc);
    subs[sub] = kCommands.at(name);
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", c.output_path, "Write output to a file");
    return sub;
  };
  auto with_in = [&](CLI::App* sub) {
    sub->add_option("--in", c.input_path, "Transformation file ('-' for stdin)");
    return sub;
  };
  auto with_search = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "Search threads")->check(CLI::PositiveNumber);
    sub->add_option("--cap", cap, "Enumeration cap (at most 6)");
    return sub;
  };

  add("idempotents", "List the idempotents of T(n)")->add_option("--n", c.n)->required();
  {
    auto* et = add("et", "Emit E_t");
    et->add_option("--n", c.n)->required();
    et->add_option("--t", c.t)->required();
  }
  with_in(add("verify", "Check the semilattice axioms"));
  with_in(add("maximal", "Maximality verdict with an extending idempotent"));
  {
    auto* red = with_in(add("reduce", "Anchor, S* and S*_u"));
    red->add_option("--t", c.t, "Common fixed point (with --u)");
    red->add_option("--u", c.u, "Point sent to itself or t (with --t)");
  }
  with_in(add("order", "Natural or transitivity order"))
      ->add_flag("--transitivity", c.transitivity, "Order on points instead of elements");
  with_search(add("enumerate", "All maximal semilattices"))->add_option("--n", c.n)->required();
  with_search(add("spectrum", "Cardinalities of maximal semilattices"))
      ->add_option("--n", c.n)
      ->required();
  {
    auto* ms = add("make-size", "Subsemilattice of E_t with m elements");
    ms->add_option("--n", c.n)->required();
    ms->add_option("--t", c.t)->required();
    ms->add_option("--m", c.m)->required();
  }
  with_search(add("verify-theorem", "Check the maximum-cardinality results for n"))
      ->add_option("--n", c.n)
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return std::string("help:") + app.help();
  } catch (const CLI::ParseError& e) {
    return std::string(e.what());
  }

  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) c.command = cmd;
  c.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

  try {
    if (cap) c.cap = *cap;
    else if (env_cap) c.cap = parse_cap(*env_cap);
    validate(c);
  } catch (const UsageError& e) {
    return std::string(e.what());
  }
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output_path) {
    file.open(*config.output_path);
    if (!file) {
      err << "error: cannot write '" << *config.output_path << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }
  try {
    switch (config.command) {
      case Command::Idempotents: return cmd_idempotents(config, *sink);
      case Command::Et: return cmd_et(config, *sink);
      case Command::Verify: return cmd_verify(config, *sink);
      case Command::Maximal: return cmd_maximal(config, *sink);
      case Command::Reduce: return cmd_reduce(config, *sink);
      case Command::Order: return cmd_order(config, *sink);
      case Command::Enumerate: return cmd_enumerate(config, *sink);
      case Command::Spectrum: return cmd_spectrum(config, *sink);
      case Command::MakeSize: return cmd_make_size(config, *sink);
      case Command::VerifyTheorem: return cmd_verify_theorem(config, *sink);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::optional<std::string> env_cap,
               std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(args, std::move(env_cap));
  if (auto* msg = std::get_if<std::string>(&parsed)) {
    if (msg->rfind("help:", 0) == 0) {
      out << msg->substr(5);
      return kExitOk;
    }
    err << "error: " << *msg << "\n";
    return kExitUsage;
  }
  return run(std::get<RunConfig>(parsed), out, err);
}

}  // namespace semilat::cli

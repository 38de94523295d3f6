// Command-line front end. Talks to the library only through tourn/tourn.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tourn/tourn.h"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitViolations = 2;

struct InputFailure {
  std::string message;
};

void check(tourn_status status) {
  if (status != TOURN_OK) throw InputFailure{tourn_last_error()};
}

struct TournamentDeleter {
  void operator()(tourn_tournament* t) const { tourn_tournament_free(t); }
};
struct FamilyDeleter {
  void operator()(tourn_family* f) const { tourn_family_free(f); }
};
struct StringDeleter {
  void operator()(char* s) const { tourn_string_free(s); }
};
using TournamentPtr = std::unique_ptr<tourn_tournament, TournamentDeleter>;
using FamilyPtr = std::unique_ptr<tourn_family, FamilyDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InputFailure{"cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TournamentPtr read_tournament(const std::string& path) {
  tourn_tournament* t = nullptr;
  check(tourn_tournament_parse(slurp(path).c_str(), &t));
  return TournamentPtr(t);
}

FamilyPtr parse_family(const std::string& text, int ambient) {
  tourn_family* f = nullptr;
  check(tourn_family_parse(text.c_str(), ambient, &f));
  return FamilyPtr(f);
}

std::string take(char* raw) {
  StringPtr owned(raw);
  return owned.get();
}

std::pair<int, int> parse_range(const std::string& text, const char* option) {
  auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      std::size_t used_a = 0, used_b = 0;
      auto tail = text.substr(dots + 2);
      int a = std::stoi(text.substr(0, dots), &used_a);
      int b = std::stoi(tail, &used_b);
      if (used_a == dots && used_b == tail.size() && a <= b) return {a, b};
    }
  } catch (const std::exception&) {
  }
  throw InputFailure{std::string(option) + ": malformed range '" + text + "' (expected a..b)"};
}

int emit_line(const char* line, void*) {
  std::fputs(line, stdout);
  std::fputc('\n', stdout);
  return 0;
}

const char* json_bool(int v) { return v ? "true" : "false"; }

struct Options {
  int jobs = 1;
  int max_n = 0;
  bool unsafe = false;

  // --max-n raises the library guard and is only honored with --unsafe.
  int guard() const {
    if (max_n > 0 && !unsafe) throw InputFailure{"--max-n " + std::to_string(max_n) + " requires --unsafe"};
    return max_n;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tournaments from reversed pairings: construction, checks, enumeration, verification"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--jobs", opts.jobs, "Worker threads for census and verify")->check(CLI::PositiveNumber);
  app.add_option("--max-n", opts.max_n, "Raise the enumeration size guard (needs --unsafe)");
  app.add_flag("--unsafe", opts.unsafe, "Allow --max-n to override size guards");

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a tournament in text form");
  gen->require_subcommand(1);
  int gen_n = 0;
  std::string gen_pairs;
  auto* gen_transitive = gen->add_subcommand("transitive", "Total order on 0..N-1");
  gen_transitive->add_option("N", gen_n, "Order")->required();
  auto* gen_inv = gen->add_subcommand("inv", "Total order on 0..N-1 with the given pairs reversed");
  gen_inv->add_option("N", gen_n, "Order")->required();
  gen_inv->add_option("--pairs", gen_pairs, "Pairs to reverse, e.g. \"0-2,1-4\"")->required();

  // check
  auto* chk = app.add_subcommand("check", "Decide a property; prints a JSON verdict");
  chk->require_subcommand(1);
  std::string input_path;
  std::string set_text, check_pairs;
  int check_n = -1;
  auto* chk_indec = chk->add_subcommand("indecomposable", "Tournament read from standard input");
  chk_indec->add_option("--input", input_path, "Read the tournament from a file instead");
  auto* chk_module = chk->add_subcommand("module", "Whether --set is a module of the input tournament");
  chk_module->add_option("--set", set_text, "Vertex set, e.g. \"{0,3}\"")->required();
  chk_module->add_option("--input", input_path, "Read the tournament from a file instead");
  auto* chk_irred = chk->add_subcommand("irreducible", "Irreducibility of a pairing or quasi-pairing");
  chk_irred->add_option("--pairs", check_pairs, "Pair family, e.g. \"0-2,1-3\"")->required();
  chk_irred->add_option("--n", check_n, "Ambient size (default: max vertex + 1)");

  // enumerate / census
  int enum_n = 0;
  std::string enum_kind;
  bool irreducible_only = false, indecomposable_only = false, include_empty = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream families as JSON lines");
  enumerate->add_option("--n", enum_n, "Ambient size")->required();
  enumerate->add_option("--kind", enum_kind, "pairing | partial-pairing | quasi | partial-quasi")->required();
  auto* irr_flag = enumerate->add_flag("--irreducible-only", irreducible_only, "Keep irreducible families");
  enumerate->add_flag("--indecomposable-only", indecomposable_only, "Keep families whose Inv is indecomposable")
      ->excludes(irr_flag);
  enumerate->add_flag("--include-empty", include_empty, "Also emit the empty family (pairing kinds)");

  auto* census = app.add_subcommand("census", "Families whose Inv is indecomposable, with isomorphism classes");
  census->add_option("--n", enum_n, "Ambient size")->required();
  census->add_option("--kind", enum_kind, "pairing | partial-pairing | quasi | partial-quasi")->required();

  // count
  auto* count = app.add_subcommand("count", "Exhaustive counts as a JSON table");
  count->require_subcommand(1);
  std::string m_range;
  auto* count_irr = count->add_subcommand("irreducible-pairings", "Irreducible pairings of 0..m-1");
  count_irr->add_option("--m-range", m_range, "Even bounds a..b")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive theorem check; exit 2 on violations");
  int theorem = 0;
  bool corollaries = false;
  std::string n_range;
  auto* theorem_opt = verify->add_option("--theorem", theorem, "1, 2 or 3")->check(CLI::Range(1, 3));
  verify->add_flag("--corollaries", corollaries, "Check the corollaries on full families instead")
      ->excludes(theorem_opt);
  verify->add_option("--n-range", n_range, "a..b")->required();

  // export
  auto* exp = app.add_subcommand("export", "Convert a tournament read from standard input");
  exp->require_subcommand(1);
  auto* exp_dot = exp->add_subcommand("dot", "Graphviz digraph");
  exp_dot->add_option("--input", input_path, "Read the tournament from a file instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (gen->parsed()) {
      tourn_tournament* raw = nullptr;
      check(tourn_transitive(gen_n, &raw));
      TournamentPtr t(raw);
      if (gen_inv->parsed()) {
        auto pairs = parse_family(gen_pairs, gen_n);
        check(tourn_reverse_pairs(t.get(), pairs.get(), &raw));
        t.reset(raw);
      }
      char* text = nullptr;
      check(tourn_tournament_format(t.get(), &text));
      std::cout << take(text);
      return 0;
    }

    if (chk->parsed()) {
      if (chk_indec->parsed()) {
        auto t = read_tournament(input_path);
        int verdict = 0;
        check(tourn_is_indecomposable(t.get(), &verdict));
        std::cout << "{\"indecomposable\":" << json_bool(verdict) << "}\n";
      } else if (chk_module->parsed()) {
        auto t = read_tournament(input_path);
        std::size_t size = 0;
        check(tourn_vertex_set_parse(set_text.c_str(), nullptr, 0, &size));
        std::vector<int> vertices(size);
        check(tourn_vertex_set_parse(set_text.c_str(), vertices.data(), vertices.size(), &size));
        int verdict = 0;
        check(tourn_is_module(t.get(), vertices.data(), vertices.size(), &verdict));
        std::cout << "{\"module\":" << json_bool(verdict) << "}\n";
      } else {
        auto f = parse_family(check_pairs, check_n);
        tourn_family_class cls{};
        check(tourn_family_classify(f.get(), &cls));
        if (cls == TOURN_CLASS_NEITHER) {
          throw InputFailure{"'" + check_pairs + "' is neither a pairing nor a quasi-pairing"};
        }
        int verdict = 0;
        check(tourn_family_is_irreducible(f.get(), &verdict));
        std::cout << "{\"kind\":\"" << (cls == TOURN_CLASS_PAIRING ? "pairing" : "quasi-pairing")
                  << "\",\"irreducible\":" << json_bool(verdict) << "}\n";
      }
      return 0;
    }

    if (enumerate->parsed() || census->parsed()) {
      tourn_enum_options o{};
      o.n = enum_n;
      check(tourn_kind_parse(enum_kind.c_str(), &o.kind));
      o.filter = irreducible_only ? TOURN_FILTER_IRREDUCIBLE
                 : indecomposable_only ? TOURN_FILTER_INDECOMPOSABLE
                                       : TOURN_FILTER_ALL;
      o.include_empty = include_empty ? 1 : 0;
      o.max_n = opts.guard();
      o.jobs = opts.jobs;
      check(enumerate->parsed() ? tourn_enumerate(&o, emit_line, nullptr)
                                : tourn_census(&o, emit_line, nullptr));
      return 0;
    }

    if (count->parsed()) {
      auto [a, b] = parse_range(m_range, "--m-range");
      for (int m : {a, b}) {
        if (m % 2 != 0) throw InputFailure{"--m-range: odd m = " + std::to_string(m)};
      }
      std::string out = "{";
      for (int m = a; m <= b; m += 2) {
        std::uint64_t c = 0;
        check(tourn_count_irreducible_pairings(m, &c));
        if (out.size() > 1) out += ',';
        out += "\"" + std::to_string(m) + "\":" + std::to_string(c);
      }
      std::cout << out << "}\n";
      return 0;
    }

    if (verify->parsed()) {
      if (!corollaries && theorem == 0) throw InputFailure{"verify: give --theorem 1|2|3 or --corollaries"};
      auto [a, b] = parse_range(n_range, "--n-range");
      char* report = nullptr;
      std::size_t violations = 0;
      int guard = opts.guard();
      check(corollaries ? tourn_verify_corollaries(a, b, opts.jobs, guard, &report, &violations)
                        : tourn_verify(theorem, a, b, opts.jobs, guard, &report, &violations));
      std::cout << take(report) << '\n';
      return violations == 0 ? 0 : kExitViolations;
    }

    if (exp_dot->parsed()) {
      auto t = read_tournament(input_path);
      char* dot = nullptr;
      check(tourn_tournament_dot(t.get(), &dot));
      std::cout << take(dot);
      return 0;
    }
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitInput;
  }
  return kExitInput;
}

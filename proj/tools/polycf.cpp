#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polycf/automata/builders.hpp"
#include "polycf/automata/recognizer.hpp"
#include "polycf/check/selftest.hpp"
#include "polycf/diophantine.hpp"
#include "polycf/groups/families.hpp"
#include "polycf/stratify.hpp"
#include "polycf/witness/gc_pipeline.hpp"
#include "polycf/witness/parikh.hpp"

#ifndef POLYCF_VERSION
#define POLYCF_VERSION "dev"
#endif

using namespace polycf;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Prefixes parse errors with the file they came from.
template <class F>
auto from_file(const std::string& path, F parse) {
  auto text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string header(const std::string& what, const std::vector<std::pair<std::string, std::string>>& params) {
  std::string h = "# polycf " POLYCF_VERSION " " + what;
  for (const auto& [k, v] : params) h += " " + k + "=" + v;
  return h + "\n";
}

void emit(const std::string& text, const std::string& report) {
  if (report.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(report);
  if (!out) throw Error("cannot write " + report);
  out << text;
  std::cout << "report written to " << report << "\n";
}

std::string yes(bool b) { return b ? "true" : "false"; }

SemilinearSet load_set(const std::string& path) { return from_file(path, parse_semilinear); }

std::vector<SemilinearSet> load_sets(const std::vector<std::string>& paths) {
  std::vector<SemilinearSet> out;
  for (const auto& p : paths) out.push_back(load_set(p));
  return out;
}

// zk:K | dyck | free:N | one-counter | wreath:K | abc:K
KcfRecognizer builtin(const std::string& name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  std::size_t arg = 0;
  if (colon != std::string::npos) {
    try {
      arg = std::stoul(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw PreconditionViolation("bad builtin argument in " + name);
    }
  }
  auto need_arg = [&] {
    if (arg == 0) throw PreconditionViolation(kind + " needs a positive argument, as in " + kind + ":2");
  };
  if (kind == "zk") {
    need_arg();
    return zk_recognizer(arg);
  }
  if (kind == "dyck") return KcfRecognizer({dyck_pda()});
  if (kind == "one-counter") return KcfRecognizer({one_counter_pda("x", "X")});
  if (kind == "free") {
    need_arg();
    std::vector<Symbol> gens;
    for (std::size_t i = 1; i <= arg; ++i) gens.push_back("x" + std::to_string(i));
    return KcfRecognizer({free_group_pda(gens)});
  }
  if (kind == "wreath" || kind == "abc") {
    need_arg();
    return kind == "wreath" ? build_Mk_wreath(arg) : build_Mk_abc(arg);
  }
  throw PreconditionViolation("unknown builtin " + name + " (zk:K, dyck, one-counter, free:N, wreath:K, abc:K)");
}

KcfRecognizer load_recognizer(const std::vector<std::string>& machines, const std::string& name,
                              const std::string& dfa) {
  if (machines.empty() == name.empty()) throw PreconditionViolation("give either --machine files or --builtin");
  KcfRecognizer r;
  if (!name.empty()) {
    r = builtin(name);
  } else {
    std::vector<Npda> pdas;
    for (const auto& m : machines) pdas.push_back(from_file(m, parse_pda));
    r = KcfRecognizer(std::move(pdas));
  }
  if (!dfa.empty()) r = intersect_regular(r, from_file(dfa, parse_dfa));
  return r;
}

std::string format_vectors(const std::vector<Vec0>& vs) {
  std::string out;
  for (const auto& v : vs) out += format_vector(v) + "\n";
  return out;
}

struct Options {
  std::vector<std::string> inputs;
  std::string vector, report, word, other, group, builtin_name, dfa, emit_kind = "slset", c, suite;
  std::vector<std::string> machines;
  std::size_t n = 1, k = 1, depth = 12, levels = 6, limit = 1024;
  unsigned box = 5;
  long p = 2;
  std::string cap = "4096";
  std::uint64_t seed = 1;
};

Int parse_cap(const std::string& text) {
  Int c = parse_int(text);
  if (c <= 0) throw PreconditionViolation("--cap must be positive");
  return c;
}

int run(int argc, char** argv) {
  CLI::App app{"Semilinear sets, k-CF recognizers and word-problem witnesses"};
  app.set_version_flag("--version", POLYCF_VERSION);
  app.require_subcommand(1);
  Options o;

  auto* slset = app.add_subcommand("slset", "Semilinear set operations")->require_subcommand(1);
  auto* sl_member = slset->add_subcommand("member", "Membership with a replayable certificate");
  sl_member->add_option("--in", o.inputs, "Set file")->required()->expected(1);
  sl_member->add_option("--vector", o.vector, "Vector, e.g. \"2 3\"")->required();
  auto* sl_inter = slset->add_subcommand("intersect", "Presentation of the intersection");
  sl_inter->add_option("--in", o.inputs, "Set files")->required();
  auto* sl_union = slset->add_subcommand("union", "Union of presentations");
  sl_union->add_option("--in", o.inputs, "Set files")->required();
  auto* sl_dim = slset->add_subcommand("dim", "Dimension of each component");
  sl_dim->add_option("--in", o.inputs, "Set file")->required()->expected(1);
  auto* sl_strat = slset->add_subcommand("stratify", "Stratification check, partition and perp basis");
  sl_strat->add_option("--in", o.inputs, "Set file")->required()->expected(1);
  auto* sl_remove = slset->add_subcommand("removable", "First period whose removal keeps the intersection");
  sl_remove->add_option("--in", o.inputs, "Zero-constant linear sets")->required();
  auto* sl_box = slset->add_subcommand("box", "Members inside [0,box]^r");
  sl_box->add_option("--in", o.inputs, "Set file")->required()->expected(1);
  sl_box->add_option("--box", o.box, "Box bound")->check(CLI::Range(0u, 64u));

  auto* dioph = app.add_subcommand("dioph", "Nonnegative solutions of linear systems")->require_subcommand(1);
  auto* dio_hilbert = dioph->add_subcommand("hilbert", "Minimal solutions (Hilbert basis, inhomogeneous constants)");
  dio_hilbert->add_option("--in", o.inputs, "System file")->required()->expected(1);

  auto* family = app.add_subcommand("family", "The S(n,k) family");
  family->add_option("--n", o.n, "Repetitions")->check(CLI::PositiveNumber);
  family->add_option("--k", o.k, "Blocks")->check(CLI::PositiveNumber);
  family->add_option("--emit", o.emit_kind, "slset | cover | predicate-check")
      ->check(CLI::IsMember({"slset", "cover", "predicate-check"}));
  family->add_option("--box", o.box, "Box for predicate-check")->check(CLI::Range(0u, 64u));

  auto* pda = app.add_subcommand("pda", "Pushdown automata and k-CF recognizers")->require_subcommand(1);
  auto add_machine = [&](CLI::App* sub) {
    sub->add_option("--machine", o.machines, "PDA files, intersected");
    sub->add_option("--builtin", o.builtin_name, "zk:K | dyck | one-counter | free:N | wreath:K | abc:K");
    sub->add_option("--dfa", o.dfa, "DFA file intersected with the last component");
  };
  auto* pda_run = pda->add_subcommand("run", "Decide membership of a word");
  add_machine(pda_run);
  pda_run->add_option("--word", o.word, "Word over the input alphabet")->required();
  auto* pda_emit = pda->add_subcommand("emit", "Print the component PDAs");
  add_machine(pda_emit);
  auto* pda_cfg = pda->add_subcommand("cfg", "Grammar of a single PDA");
  pda_cfg->add_option("--machine", o.machines, "PDA file")->required()->expected(1);

  auto* group = app.add_subcommand("group", "Word problems of the group families")->require_subcommand(1);
  auto* grp_eval = group->add_subcommand("eval", "Evaluate a word");
  grp_eval->add_option("--group", o.group, "free:n | zn:k | bs:m,n | wreath:p=P|Z | gc:c0,..,cs | abc:p=P")
      ->required();
  grp_eval->add_option("--word", o.word, "Word; uppercase letters are inverses")->required();
  auto* grp_equal = group->add_subcommand("equal", "Compare two words");
  grp_equal->add_option("--group", o.group, "Group descriptor")->required();
  grp_equal->add_option("--word", o.word, "First word")->required();
  grp_equal->add_option("--other", o.other, "Second word")->required();
  auto* grp_rel = group->add_subcommand("relators", "Defining relators and their evaluation");
  grp_rel->add_option("--group", o.group, "Group descriptor")->required();

  auto* parikh = app.add_subcommand("parikh", "Bounded Parikh images of W(G) n M_k")->require_subcommand(1);
  for (auto* sub : {parikh->add_subcommand("wreath", "C_p wr Z (p = 0 for Z wr Z)"),
                    parikh->add_subcommand("abc", "The abc group over C_p")}) {
    sub->add_option("--p", o.p, "Prime, or 0 for Z (wreath only)");
    sub->add_option("--k", o.k, "Blocks")->check(CLI::PositiveNumber);
    sub->add_option("--cap", o.cap, "Exponent cap");
    sub->add_option("--report", o.report, "Write the report here");
  }

  auto* witness = app.add_subcommand("witness", "Non-semilinearity witnesses")->require_subcommand(1);
  auto* wit_gc = witness->add_subcommand("gc", "Matrix pipeline and witness family for G(c)");
  wit_gc->add_option("--c", o.c, "Coefficients c0,..,cs")->required();
  wit_gc->add_option("--depth", o.depth, "Pipeline depth K")->check(CLI::PositiveNumber);
  wit_gc->add_option("--levels", o.levels, "Witness levels t = 1..levels")->check(CLI::PositiveNumber);
  wit_gc->add_option("--cap", o.cap, "Search cap for b");
  wit_gc->add_option("--report", o.report, "Write the report here");
  auto* wit_refute = witness->add_subcommand("refute", "Refute a presentation of {(n, 2^n)}");
  wit_refute->add_option("--in", o.inputs, "Set file in N_0^2")->required()->expected(1);
  wit_refute->add_option("--limit", o.limit, "Largest n in the target set")->check(CLI::PositiveNumber);
  wit_refute->add_option("--cap", o.cap, "Search cap for b");
  wit_refute->add_option("--report", o.report, "Write the report here");

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");
  selftest->add_option("--box", o.box, "Scale")->check(CLI::Range(1u, 8u));
  selftest->add_option("--seed", o.seed, "Random seed");
  selftest->add_option("--suite", o.suite, "Only suites with this name prefix");
  selftest->add_option("--report", o.report, "Write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // list the flags of the innermost subcommand that was reached
    const CLI::App* at = &app;
    for (auto subs = at->get_subcommands(); !subs.empty(); subs = at->get_subcommands()) at = subs.front();
    std::cerr << "usage error: " << e.what() << "\n\n" << at->help();
    return 2;
  }

  std::ostringstream out;
  if (sl_member->parsed()) {
    auto s = load_set(o.inputs[0]);
    auto v = parse_vector_line("v: " + o.vector);
    auto cert = member_certificate(v, s);
    out << "member: " << yes(cert.has_value()) << "\n";
    if (cert) {
      out << "component: " << cert->component + 1 << "\nalpha:";
      for (const auto& a : cert->alpha) out << " " << a.get_str();
      out << "\n";
    }
  } else if (sl_inter->parsed()) {
    out << format_semilinear(intersect(load_sets(o.inputs)));
  } else if (sl_union->parsed()) {
    auto sets = load_sets(o.inputs);
    SemilinearSet acc = sets[0];
    for (std::size_t i = 1; i < sets.size(); ++i) acc = set_union(acc, sets[i]);
    out << format_semilinear(acc);
  } else if (sl_dim->parsed()) {
    auto s = load_set(o.inputs[0]);
    for (std::size_t i = 0; i < s.components().size(); ++i)
      out << "component " << i + 1 << ": dimension " << dimension(s.components()[i]) << "\n";
  } else if (sl_strat->parsed()) {
    auto s = load_set(o.inputs[0]);
    for (std::size_t i = 0; i < s.components().size(); ++i) {
      const auto& l = s.components()[i];
      auto c = check_stratified(l.periods());
      out << "component " << i + 1 << ": " << c.describe(l.periods()) << "\n";
      if (!c.ok()) continue;
      out << "  partition " << to_string(partition_PiL(l)) << "\n";
      if (!l.constant().is_zero()) continue;
      for (const auto& q : perp_block_basis(l)) {
        out << "  perp";
        for (const auto& x : q) out << " " << x.get_str();
        out << "\n";
      }
    }
  } else if (sl_remove->parsed()) {
    std::vector<LinearSet> ls;
    for (const auto& s : load_sets(o.inputs)) {
      if (s.components().size() != 1) throw PreconditionViolation("removable takes single linear sets");
      ls.push_back(s.components()[0]);
    }
    auto rep = find_removable_period(ls);
    out << "dim intersection: " << rep.dim_intersection << "\ndim rational: " << rep.dim_rational << "\n";
    if (rep.removable)
      out << "removable: set " << rep.removable->set + 1 << " period " << rep.removable->period + 1 << " ("
          << format_vector(rep.removable->vector) << ")\n";
    else
      out << "removable: none\n";
  } else if (sl_box->parsed()) {
    auto s = load_set(o.inputs[0]);
    auto g = BoxGrid::of(s, o.box);
    for (std::size_t i = 0; i < g.cells(); ++i)
      if (g.at_index(i)) out << format_vector(g.point(i)) << "\n";
  } else if (dio_hilbert->parsed()) {
    auto ps = from_file(o.inputs[0], parse_system);
    if (ps.rhs) {
      auto sol = solve_system(ps.sys, *ps.rhs);
      out << "constants\n" << format_vectors(sol.constants) << "periods\n" << format_vectors(sol.periods);
    } else {
      out << format_vectors(hilbert_basis(ps.sys));
    }
  } else if (family->parsed()) {
    auto f = build_Snk(o.n, o.k);
    if (o.emit_kind == "slset") {
      out << format_semilinear(SemilinearSet(f.presentation));
    } else if (o.emit_kind == "cover") {
      if (o.n != 1) throw PreconditionViolation("the cover is defined for n = 1");
      for (const auto& l : build_Sk_cover(o.k)) out << format_linear(l) << "\n";
    } else {
      out << header("family predicate-check",
                    {{"n", std::to_string(o.n)}, {"k", std::to_string(o.k)}, {"box", std::to_string(o.box)}});
      auto grid = BoxGrid::of(SemilinearSet(f.presentation), o.box);
      auto pred = BoxGrid::from_predicate(f.dim_ambient(), o.box, [&](const Vec0& v) { return f.predicate(v); });
      out << "points: " << grid.cells() << "\nmembers: " << grid.count() << "\nagree: " << yes(grid == pred) << "\n";
      if (!(grid == pred)) {
        emit(out.str(), o.report);
        return 1;
      }
    }
  } else if (pda_run->parsed()) {
    auto r = load_recognizer(o.machines, o.builtin_name, o.dfa);
    out << "accepted: " << yes(kcf_accepts(r, tokenize(o.word, r.alphabet()))) << "\n";
  } else if (pda_emit->parsed()) {
    auto r = load_recognizer(o.machines, o.builtin_name, o.dfa);
    for (const auto& a : r.pdas()) out << format_pda(a);
  } else if (pda_cfg->parsed()) {
    auto a = from_file(o.machines[0], parse_pda);
    auto g = pda_to_cfg(a);
    out << g.to_text();
    out << "# cnf rules: " << to_cnf(g).num_rules() << "\n";
  } else if (grp_eval->parsed()) {
    auto g = make_group(o.group);
    auto w = tokenize(o.word, g->alphabet());
    out << "identity: " << yes(g->is_trivial(w)) << "\n";
    out << "normal form: " << g->normal_form(w) << "\n";
  } else if (grp_equal->parsed()) {
    auto g = make_group(o.group);
    out << "equal: " << yes(g->equal(tokenize(o.word, g->alphabet()), tokenize(o.other, g->alphabet()))) << "\n";
  } else if (grp_rel->parsed()) {
    auto g = make_group(o.group);
    for (const auto& r : g->relators()) out << format_word(r) << "\t" << (g->is_trivial(r) ? "ok" : "FAILED") << "\n";
  } else if (parikh->parsed()) {
    const bool wreath = parikh->got_subcommand("wreath");
    const Int cap = parse_cap(o.cap);
    if (!cap.fits_uint_p()) throw PreconditionViolation("--cap too large");
    const std::size_t n = wreath ? 2 : 4;
    out << header(std::string("parikh ") + (wreath ? "wreath" : "abc"),
                  {{"p", std::to_string(o.p)}, {"k", std::to_string(o.k)}, {"cap", o.cap}});
    auto phi = wreath ? wreath_Lk_phi(o.p, o.k, static_cast<unsigned>(cap.get_ui()))
                      : abc_Lk_phi(o.p, o.k, static_cast<unsigned>(cap.get_ui()));
    out << format_vectors(phi);
    auto st = phi_structure(phi, n, o.k);
    out << "members: " << phi.size() << "\ninside S(" << n << "," << o.k << "): " << yes(st.inside_Snk)
        << "\nincreasing: " << yes(st.increasing) << "\ndifference rank: " << st.difference_rank << "\n";
  } else if (wit_gc->parsed()) {
    auto spec = parse_gc_spec(o.c);
    const Int cap = parse_cap(o.cap);
    out << header("witness gc", {{"c", o.c}, {"depth", std::to_string(o.depth)},
                                 {"levels", std::to_string(o.levels)}, {"cap", o.cap}});
    auto st = gc_pipeline(spec, o.depth);
    out << st.to_text();
    auto lang = gc_witness_language(st, o.levels, cap);
    std::vector<std::size_t> levels;
    for (std::size_t t = 1; t <= o.levels; ++t) levels.push_back(t);
    auto rep = check_witness_family(lang.family, levels, cap);
    out << "witness family: " << lang.family.description << "\n" << rep.to_text();
    emit(out.str(), o.report);
    return rep.passed() ? 0 : 1;
  } else if (wit_refute->parsed()) {
    auto s = load_set(o.inputs[0]);
    auto w = check::power_of_two_family(o.limit);
    const Int cap = parse_cap(o.cap);
    out << header("witness refute", {{"limit", std::to_string(o.limit)}, {"cap", o.cap}});
    auto cert = refute_presentation(s, w, cap);
    out << "kind: " << to_string(cert.kind) << "\n";
    if (cert.kind != RefutationCertificate::Kind::Indeterminate) {
      out << "point: " << to_string(cert.point) << "\nlevel: " << cert.level << "\nC: " << cert.C.get_str()
          << "\n";
      if (cert.s_membership) {
        out << "component: " << cert.s_membership->component + 1 << "\nalpha:";
        for (const auto& a : cert.s_membership->alpha) out << " " << a.get_str();
        out << "\n";
      }
    }
    if (!cert.note.empty()) out << "note: " << cert.note << "\n";
    const bool ok = verify_refutation(s, w, cert);
    out << "replayed: " << yes(ok) << "\n";
    emit(out.str(), o.report);
    return ok ? 0 : 1;
  } else if (selftest->parsed()) {
    check::SuiteConfig cfg;
    cfg.box = o.box;
    cfg.seed = o.seed;
    out << header("selftest", {{"box", std::to_string(o.box)}, {"seed", std::to_string(o.seed)}});
    auto results = check::run_selftest(cfg, o.suite);
    if (results.empty()) throw PreconditionViolation("no suite matches " + o.suite);
    bool all = true;
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " checks=" << r.checks;
      if (!r.passed) out << " : " << r.detail;
      out << "\n";
      all = all && r.passed;
    }
    out << (all ? "all suites passed" : "some suites failed") << "\n";
    emit(out.str(), o.report);
    return all ? 0 : 1;
  }
  emit(out.str(), o.report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

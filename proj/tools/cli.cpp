#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "bvl/boolalg.hpp"
#include "bvl/error.hpp"
#include "bvl/forcing.hpp"
#include "bvl/fuzz.hpp"
#include "bvl/io.hpp"
#include "bvl/proof.hpp"
#include "bvl/semantics.hpp"
#include "bvl/syntax.hpp"
#include "bvl/zfc.hpp"

namespace bvl::cli {

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_parse(const std::string& file, std::ostream& out) {
  auto named = zfc::parse(io::read_file(file));
  auto f = zfc::elaborate(named);
  out << "closed=" << bool_text(bounded_by(f, 0)) << "\n";
  out << "size=" << f.size() << "\n";
  out << "sexpr=" << to_sexpr(f, zfc::lzfc()) << "\n";
  return kOk;
}

int cmd_print(const std::string& file, std::ostream& out) {
  auto f = parse_formula(io::read_file(file), zfc::lzfc());
  out << "free=" << f.free_bound() << "\n";
  out << "text=" << zfc::print(f) << "\n";
  return kOk;
}

int cmd_check_proof(const std::string& proof_file, const std::string& ctx_file,
                    const std::string& goal_file, const std::string& language, std::ostream& out) {
  auto lang = io::load_language(language);
  auto proof = kernel::parse_proof(io::read_file(proof_file), lang);
  auto ctx = kernel::parse_context(io::read_file(ctx_file), lang);
  auto goal = parse_formula(io::read_file(goal_file), lang);
  auto result = kernel::check(proof, ctx, goal);
  out << "ok=" << bool_text(result.ok) << "\n";
  out << "rules=" << proof.size() << "\n";
  if (!result.ok) {
    out << "path=" << result.path << "\n";
    out << "reason=" << result.reason << "\n";
    return kFailure;
  }
  return kOk;
}

int cmd_eval(const std::string& structure_file, const std::string& sentence_file,
             std::optional<std::size_t> gamma_index, std::ostream& out) {
  auto s = io::load_structure(structure_file);
  auto f = parse_formula(io::read_file(sentence_file), s.language());
  if (f.arity() != 0) fail(ErrorCode::Invalid, "eval: expected a formula, got a preformula");
  // Open formulas are evaluated through their universal closure.
  std::size_t closed_over = f.free_bound();
  for (std::size_t i = 0; i < closed_over; ++i) f = Formula::all(f);
  const auto& alg = s.algebra();
  auto gamma = gamma_index ? alg.element(*gamma_index) : alg.top();
  auto diag = semantics::validate_structure(s);
  out << "valid=" << bool_text(diag.ok) << "\n";
  if (!diag.ok) out << "failure=" << diag.failure << "\n";
  auto value = semantics::realize(s, f);
  out << "closed_over=" << closed_over << "\n";
  out << "value=" << alg.label(value) << "\n";
  out << "index=" << alg.index(value) << "\n";
  out << "gamma=" << alg.label(gamma) << "\n";
  out << "forces=" << bool_text(semantics::forces(s, gamma, f)) << "\n";
  return kOk;
}

int cmd_ro(const std::string& file, std::ostream& out) {
  auto space = boolalg::FinTopSpace::from_text(io::read_file(file));
  out << boolalg::regular_open_algebra(space).dump();
  return kOk;
}

int cmd_cohen(std::size_t ground_size, bool density, const std::string& antichain_file,
              std::ostream& out) {
  auto ground = forcing::standard_ground(ground_size);
  out << "ground=" << ground_size << "\n";
  if (!antichain_file.empty()) {
    auto conditions = forcing::parse_conditions(io::read_file(antichain_file));
    auto report = forcing::cohen_antichain(conditions, ground);
    out << "conditions=" << conditions.size() << "\n";
    for (std::size_t i = 0; i < conditions.size(); ++i) {
      std::string row;
      for (std::size_t j = 0; j < conditions.size(); ++j) row += report.incompatible[i][j] ? '1' : '0';
      out << "row=" << i << " condition=" << forcing::format_condition(conditions[i])
          << " incompatible=" << row << "\n";
    }
    out << "matches_clash_rule=" << bool_text(report.matches_clash_rule) << "\n";
    out << "antichain=" << bool_text(report.pairwise_incompatible) << "\n";
    return report.matches_clash_rule ? kOk : kFailure;
  }
  if (density) {
    auto report = forcing::cohen_density_check(ground);
    out << "conditions=" << report.conditions << "\n";
    out << "nonzero=" << bool_text(report.nonzero) << "\n";
    out << "dense=" << bool_text(report.dense) << "\n";
    out << "cross_checked=" << bool_text(report.cross_checked) << "\n";
    return report.ok() ? kOk : kFailure;
  }
  auto totals = forcing::total_specifications(ground);
  auto report = forcing::cohen_antichain(totals, ground);
  out << "conditions=" << forcing::all_conditions(ground).size() << "\n";
  out << "total_specifications=" << totals.size() << "\n";
  out << "totals_antichain=" << bool_text(report.pairwise_incompatible) << "\n";
  if (ground_size <= 2) {
    auto alg = boolalg::FinCBA::powerset(std::size_t{1} << ground_size);
    out << "max_antichain=" << boolalg::max_antichain(alg).size << "\n";
  }
  return report.pairwise_incompatible ? kOk : kFailure;
}

int cmd_delta(const std::string& file, std::size_t target, std::ostream& out) {
  auto family = forcing::parse_family(io::read_file(file));
  std::size_t k = 0;
  for (const auto& s : family) k = std::max(k, s.size());
  out << "family=" << family.size() << "\n";
  out << "max_set_size=" << k << "\n";
  out << "bound=" << forcing::sunflower_bound(k, target) << "\n";
  auto found = forcing::delta_extract(family, target);
  out << "found=" << bool_text(found.has_value()) << "\n";
  if (!found) return kFailure;
  std::string idx;
  for (auto i : found->indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
  out << "indices=" << idx << "\n";
  out << "root=" << forcing::format_set(found->root) << "\n";
  bool valid = forcing::is_delta_system(family, found->indices, found->root);
  out << "validated=" << bool_text(valid) << "\n";
  return valid ? kOk : kFailure;
}

int cmd_fuzz(std::uint64_t seed, std::size_t trials, std::ostream& out) {
  require_size(trials <= 100000, "fuzz-soundness: more than 100000 trials");
  auto summary = fuzz::fuzz_soundness(seed, trials);
  out << fuzz::format_summary(summary, seed);
  return summary.violations == 0 ? kOk : kFailure;
}

void emit_sentence(const std::string& name, const Formula& f, std::ostream& out) {
  out << "name=" << name << "\n";
  out << "closed=" << bool_text(bounded_by(f, 0)) << "\n";
  out << "text=" << zfc::print(f) << "\n";
  out << "sexpr=" << to_sexpr(f, zfc::lzfc()) << "\n";
}

int cmd_corpus(const std::string& axiom, bool ch, std::ostream& out) {
  if (ch) {
    out << "source=" << zfc::ch_source() << "\n";
    emit_sentence("ch", zfc::ch_sentence(), out);
    return kOk;
  }
  if (!axiom.empty()) {
    emit_sentence(axiom, zfc::axiom(axiom), out);
    return kOk;
  }
  for (const auto& [name, f] : zfc::zfc_axioms()) {
    out << "axiom=" << name << " closed=" << bool_text(bounded_by(f, 0)) << " size=" << f.size()
        << "\n";
  }
  return kOk;
}

int code_for(ErrorCode c) { return c == ErrorCode::SizeGuard ? kSizeGuard : kFailure; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Logic kernel, Boolean-valued semantics and forcing combinatorics"};
  app.require_subcommand(1);

  std::string file_a, file_b, file_c, language = "builtin:corpus";
  std::optional<std::size_t> gamma;
  std::size_t ground = 0, target = 0, trials = 0;
  std::uint64_t seed = 0;
  bool density = false, ch = false;
  std::string antichain_file, axiom_name;

  auto* parse = app.add_subcommand("parse", "Elaborate a surface formula to de Bruijn form");
  parse->add_option("FILE", file_a, "Surface-syntax formula")->required();

  auto* print = app.add_subcommand("print", "Print a de Bruijn formula in surface syntax");
  print->add_option("FILE", file_a, "Formula S-expression over the set-theory language")->required();

  auto* check = app.add_subcommand("check-proof", "Check a proof tree");
  check->add_option("PROOF", file_a, "Proof S-expression")->required();
  check->add_option("CTX", file_b, "Context: zero or more formula S-expressions")->required();
  check->add_option("GOAL", file_c, "Goal formula S-expression")->required();
  check->add_option("--language", language, "builtin:corpus, builtin:zfc or a language file");

  auto* eval = app.add_subcommand("eval", "Realize a sentence in a structure");
  eval->add_option("STRUCTURE", file_a, "Structure file")->required();
  eval->add_option("SENTENCE", file_b, "Formula S-expression")->required();
  eval->add_option("--gamma", gamma, "Context element index (default top)");

  auto* ro = app.add_subcommand("ro", "Dump the regular open algebra of a finite space");
  ro->add_option("TOPOLOGY", file_a, "Topology file")->required();

  auto* cohen = app.add_subcommand("cohen", "Cohen poset demos on a finite ground");
  cohen->add_option("--ground", ground, "Number of ground pairs")->required();
  auto* dens = cohen->add_flag("--density", density, "Check density of the image");
  cohen->add_option("--antichain", antichain_file, "Conditions file")->excludes(dens);

  auto* delta = app.add_subcommand("delta", "Extract a Delta-system");
  delta->add_option("FAMILY", file_a, "Family file")->required();
  delta->add_option("--target", target, "Number of members wanted")->required();

  auto* fuzz = app.add_subcommand("fuzz-soundness", "Check corpus proofs in random structures");
  fuzz->add_option("--seed", seed, "Seed")->required();
  fuzz->add_option("--trials", trials, "Number of structures")->required();

  auto* corpus = app.add_subcommand("corpus", "Emit elaborated set-theory sentences");
  auto* ax = corpus->add_option("--axiom", axiom_name, "Axiom name");
  corpus->add_flag("--ch", ch, "The continuum hypothesis")->excludes(ax);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(file_a, out);
    if (print->parsed()) return cmd_print(file_a, out);
    if (check->parsed()) return cmd_check_proof(file_a, file_b, file_c, language, out);
    if (eval->parsed()) return cmd_eval(file_a, file_b, gamma, out);
    if (ro->parsed()) return cmd_ro(file_a, out);
    if (cohen->parsed()) return cmd_cohen(ground, density, antichain_file, out);
    if (delta->parsed()) return cmd_delta(file_a, target, out);
    if (fuzz->parsed()) return cmd_fuzz(seed, trials, out);
    if (corpus->parsed()) return cmd_corpus(axiom_name, ch, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << " " << e.what() << "\n";
    return code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: internal " << e.what() << "\n";
    return kFailure;
  }
  err << "error: usage no subcommand\n";
  return kUsage;
}

}  // namespace bvl::cli

#include "treeadic/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "treeadic/conversion.hpp"
#include "treeadic/errors.hpp"
#include "treeadic/machine_file.hpp"
#include "treeadic/vanderput.hpp"

namespace treeadic {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MachineFile load(const std::string& path, std::ostream& err) {
  MachineFile file = parse_machine_file(slurp(path));
  for (const std::string& warning : file.warnings) err << "warning: " << warning << "\n";
  return file;
}

/// Re-roots a Mealy machine at a named state when --state is given.
MealyMachine with_state(MealyMachine m, const std::optional<std::string>& state) {
  if (state) {
    m.initial = m.state_index(*state);
    m.validate();
  }
  return m;
}

void print_ep_row(std::ostream& out, const std::vector<EPWord>& row, bool rational) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i].str();
  out << "\n";
  if (rational) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? " " : "") << rational_str(row[i].to_rational());
    out << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mealy tree endomorphisms, Moore-generated d-adic sequences, and exact van der Put analysis"};
  app.require_subcommand(1);
  std::function<void()> action;

  // vdp
  auto* vdp_cmd = app.add_subcommand("vdp", "Reduced van der Put coefficients of a Mealy machine");
  std::string vdp_file;
  std::optional<std::string> vdp_state;
  std::uint64_t vdp_count = 8;
  bool vdp_schikhof = false, vdp_rational = false;
  vdp_cmd->add_option("file", vdp_file, "Mealy machine file")->required();
  vdp_cmd->add_option("--state", vdp_state, "state inducing the endomorphism (default: start state)");
  vdp_cmd->add_option("--count", vdp_count, "number of coefficients");
  vdp_cmd->add_flag("--schikhof", vdp_schikhof, "use the Schikhof numbering of index 0");
  vdp_cmd->add_flag("--rational", vdp_rational, "also print the rational values");
  vdp_cmd->callback([&] {
    action = [&] {
      MealyMachine m = with_state(load(vdp_file, err).mealy(), vdp_state);
      Variant variant = vdp_schikhof ? Variant::schikhof : Variant::mahler;
      std::vector<EPWord> row;
      for (std::uint64_t n = 0; n < vdp_count; ++n)
        row.push_back(vdp_coefficient(m, m.initial, n, variant));
      print_ep_row(out, row, vdp_rational);
    };
  });

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "Convert between Mealy and Moore automata");
  convert_cmd->require_subcommand(1);
  std::string conv_file;
  std::optional<std::string> conv_state;
  bool conv_minimize = false, conv_dot = false;
  auto* m2m = convert_cmd->add_subcommand(
      "mealy-to-moore", "Moore automaton generating the coefficient sequence");
  auto* w2m = convert_cmd->add_subcommand(
      "moore-to-mealy", "Mealy automaton whose coefficients are the generated sequence");
  for (auto* cmd : {m2m, w2m}) {
    cmd->add_option("file", conv_file, "machine file")->required();
    cmd->add_flag("--minimize", conv_minimize, "minimize the result");
    cmd->add_flag("--dot", conv_dot, "emit a DOT diagram instead of a machine file");
  }
  m2m->add_option("--state", conv_state, "state inducing the endomorphism (default: start state)");
  m2m->callback([&] {
    action = [&] {
      MealyMachine m = with_state(load(conv_file, err).mealy(), conv_state);
      MealyToMooreResult result = mealy_to_moore(m, conv_minimize);
      out << (conv_dot ? render_dot(result.machine) : print_machine_file(result.machine));
    };
  });
  w2m->callback([&] {
    action = [&] {
      MooreMachine b = load(conv_file, err).moore();
      MooreToMealyResult result = moore_to_mealy(b, conv_minimize);
      out << (conv_dot ? render_dot(result.machine) : print_machine_file(result.machine));
    };
  });

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Apply a machine to a point or index");
  eval_cmd->require_subcommand(1);
  auto* eval_mealy = eval_cmd->add_subcommand("mealy", "image of a point under the endomorphism");
  std::string em_file, em_input;
  std::optional<std::string> em_state;
  bool em_rational = false;
  eval_mealy->add_option("file", em_file, "Mealy machine file")->required();
  eval_mealy
      ->add_option("input", em_input,
                   "eventually periodic point `u(v)` or a finite digit word")
      ->required();
  eval_mealy->add_option("--state", em_state, "state to run from (default: start state)");
  eval_mealy->add_flag("--rational", em_rational, "also print the rational value");
  eval_mealy->callback([&] {
    action = [&] {
      MealyMachine m = with_state(load(em_file, err).mealy(), em_state);
      if (em_input.find('(') != std::string::npos) {
        EPWord image = apply_ep(m, m.initial, EPWord::parse(em_input, m.radix));
        out << image.str();
        if (em_rational) out << " " << rational_str(image.to_rational());
        out << "\n";
      } else {
        out << word_str(apply_finite(m, m.initial, parse_word(em_input, m.radix))) << "\n";
      }
    };
  });
  auto* eval_moore = eval_cmd->add_subcommand("moore", "term n of the generated sequence");
  std::string eo_file;
  std::uint64_t eo_index = 0;
  std::optional<std::string> eo_state;
  bool eo_rational = false;
  eval_moore->add_option("file", eo_file, "Moore machine file")->required();
  eval_moore->add_option("n", eo_index, "sequence index")->required();
  eval_moore->add_option("--state", eo_state, "section state to evaluate from");
  eval_moore->add_flag("--rational", eo_rational, "also print the rational value");
  eval_moore->callback([&] {
    action = [&] {
      MooreMachine b = load(eo_file, err).moore();
      int q = eo_state ? b.state_index(*eo_state) : b.initial;
      EPWord value = evaluate_from(b, q, eo_index);
      out << value.str();
      if (eo_rational) out << " " << rational_str(value.to_rational());
      out << "\n";
    };
  });

  // seq
  auto* seq_cmd = app.add_subcommand("seq", "Prefix of the sequence generated by a Moore machine");
  std::string seq_file;
  std::uint64_t seq_count = 16;
  bool seq_rational = false;
  seq_cmd->add_option("file", seq_file, "Moore machine file")->required();
  seq_cmd->add_option("--count", seq_count, "number of terms");
  seq_cmd->add_flag("--rational", seq_rational, "also print the rational values");
  seq_cmd->callback([&] {
    action = [&] {
      MooreMachine b = load(seq_file, err).moore();
      print_ep_row(out, sequence_prefix(b, seq_count), seq_rational);
    };
  });

  // portrait
  auto* portrait_cmd = app.add_subcommand("portrait", "Tree portrait of a coefficient sequence");
  std::string por_file;
  std::optional<std::string> por_state;
  std::size_t por_depth = 3;
  bool por_schikhof = false, por_dot = false;
  portrait_cmd->add_option("file", por_file, "machine file (Mealy: its coefficients; Moore: its sequence)")
      ->required();
  portrait_cmd->add_option("--state", por_state, "Mealy state inducing the endomorphism");
  portrait_cmd->add_option("--depth", por_depth, "tree depth");
  portrait_cmd->add_flag("--schikhof", por_schikhof, "use the Schikhof numbering (Mealy input)");
  portrait_cmd->add_flag("--dot", por_dot, "emit DOT instead of text");
  portrait_cmd->callback([&] {
    action = [&] {
      MachineFile file = load(por_file, err);
      CoefficientSource source = [&]() -> CoefficientSource {
        if (file.is_mealy()) {
          MealyMachine m = with_state(file.mealy(), por_state);
          return coefficients_of(m, m.initial,
                                 por_schikhof ? Variant::schikhof : Variant::mahler);
        }
        if (por_schikhof) throw SemanticError("--schikhof applies to Mealy input only");
        return coefficients_of(file.moore());
      }();
      int radix = file.is_mealy() ? file.mealy().radix : file.moore().radix;
      Portrait p = portrait_of(source, radix, por_depth);
      out << render_portrait(p, por_dot ? OutputFormat::dot : OutputFormat::text);
    };
  });

  // minimize
  auto* minimize_cmd = app.add_subcommand("minimize", "Minimize a machine file");
  std::string min_file;
  minimize_cmd->add_option("file", min_file, "machine file")->required();
  minimize_cmd->callback([&] {
    action = [&] {
      MachineFile file = load(min_file, err);
      if (file.is_mealy())
        out << print_machine_file(minimize_mealy(file.mealy()));
      else
        out << print_machine_file(minimize_moore(file.moore()));
    };
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "Structural checks");
  check_cmd->require_subcommand(1);
  auto* cover_cmd = check_cmd->add_subcommand(
      "cover", "verify that the conversion output covers the input's underlying graph");
  std::string cover_file;
  cover_cmd->add_option("file", cover_file, "machine file")->required();
  cover_cmd->callback([&] {
    action = [&] {
      MachineFile file = load(cover_file, err);
      LabeledDigraph big, small;
      std::vector<int> projection;
      if (file.is_mealy()) {
        MealyToMooreResult result = mealy_to_moore(file.mealy());
        big = underlying_graph(result.machine);
        small = underlying_graph(file.mealy());
        for (const auto& label : result.labels) projection.push_back(label.section);
      } else {
        MooreToMealyResult result = moore_to_mealy(file.moore());
        big = underlying_graph(result.machine);
        small = underlying_graph(file.moore());
        for (const auto& label : result.labels) projection.push_back(label.kernel_state);
      }
      bool ok = verify_covering(big, small, projection);
      out << covering_witness(big, small, projection);
      out << "covering: " << (ok ? "true" : "false") << "\n";
      if (!ok) throw SemanticError("covering verification failed");
    };
  });
  auto* roundtrip_cmd =
      check_cmd->add_subcommand("roundtrip", "convert there and back, compare minimized machines");
  std::string rt_file;
  roundtrip_cmd->add_option("file", rt_file, "Mealy machine file")->required();
  roundtrip_cmd->callback([&] {
    action = [&] {
      bool ok = roundtrip_check(load(rt_file, err).mealy());
      out << "roundtrip: " << (ok ? "true" : "false") << "\n";
      if (!ok) throw SemanticError("roundtrip check failed");
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    action();
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace treeadic

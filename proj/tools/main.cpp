#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxiter/errors.hpp"
#include "coxiter/json_io.hpp"
#include "coxiter/selfcheck.hpp"

namespace {

using coxiter::json;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNonRational = 4;
constexpr int kExitUnclassifiable = 5;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw coxiter::ParseError("", "cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
}

void emit_error(int code, const std::string& message,
                const std::string& field = "") {
  json err{{"code", code}, {"error", message}};
  if (!field.empty()) err["field"] = field;
  std::cerr << err.dump() << "\n";
}

coxiter::DatumDocument load_datum(const std::string& input_path) {
  json j;
  try {
    j = json::parse(read_input(input_path));
  } catch (const json::parse_error& e) {
    throw coxiter::ParseError("", e.what());
  }
  return coxiter::parse_datum_document(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis and Cox ring iteration of trinomial rings"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  std::string format = "json";
  std::size_t max_steps = 8;
  long long max_x = 0;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "input file (default stdin)");
    cmd->add_option("--output", output, "output file (default stdout)");
    cmd->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "report gcds, rationality, bpt, class group, relations");
  add_io(analyze);

  CLI::App* iterate =
      app.add_subcommand("iterate", "run the Cox ring iteration chain");
  add_io(iterate);
  iterate->add_option("--max-steps", max_steps, "step limit (default 8)");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "classify all bpt chains with entries up to --max-x");
  enumerate->add_option("--output", output, "output file (default stdout)");
  enumerate->add_option("--max-x", max_x, "largest triple entry (>= 2)")
      ->required();

  CLI::App* convert =
      app.add_subcommand("convert", "embed a Type 1 datum into Type 2");
  add_io(convert);

  CLI::App* selfcheck = app.add_subcommand(
      "selfcheck", "run the built-in invariant suites on fixtures");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      coxiter::DatumDocument doc = load_datum(input);
      if (format == "table")
        write_output(output, coxiter::analysis_table(doc.datum));
      else
        write_output(output, coxiter::analysis_report(doc.datum).dump() + "\n");
    } else if (iterate->parsed()) {
      coxiter::DatumDocument doc = load_datum(input);
      coxiter::IterationChain chain =
          coxiter::iterate_chain(doc.datum, max_steps);
      coxiter::ChainFamily family = coxiter::classify_chain(chain);
      if (format == "table")
        write_output(output, coxiter::chain_table(chain, family));
      else
        write_output(output,
                     coxiter::chain_document(chain, family).dump() + "\n");
    } else if (enumerate->parsed()) {
      if (max_x < 2) {
        emit_error(kExitValidation, "--max-x must be at least 2", "max-x");
        return kExitValidation;
      }
      json sequences = json::array();
      for (const coxiter::BptSequence& seq :
           coxiter::enumerate_bpt_chains(max_x)) {
        json bpts = json::array();
        for (const auto& t : seq) bpts.push_back({t[0], t[1], t[2]});
        coxiter::RingDatum d =
            coxiter::make_type2({{seq[0][0]}, {seq[0][1]}, {seq[0][2]}});
        coxiter::ChainFamily family =
            coxiter::classify_chain(coxiter::iterate_chain(d));
        sequences.push_back(
            json{{"bpts", bpts}, {"family", family.to_string()}});
      }
      write_output(output,
                   json{{"max_x", max_x}, {"sequences", sequences}}.dump() +
                       "\n");
    } else if (convert->parsed()) {
      coxiter::DatumDocument doc = load_datum(input);
      if (doc.datum.type != coxiter::RingType::type1) {
        emit_error(kExitValidation, "convert expects a Type 1 datum", "type");
        return kExitValidation;
      }
      coxiter::DatumDocument out;
      out.datum = coxiter::type1_to_type2(doc.datum);
      out.metadata = doc.metadata;
      out.metadata["notice"] = coxiter::kRepresentativeNotice;
      write_output(output, coxiter::to_json(out).dump() + "\n");
    } else if (selfcheck->parsed()) {
      return coxiter::run_selfcheck(std::cout) ? 0 : 1;
    }
  } catch (const coxiter::ParseError& e) {
    emit_error(kExitParse, e.what(), e.field_path);
    return kExitParse;
  } catch (const coxiter::NonRationalStepError& e) {
    emit_error(kExitNonRational, e.what(),
               "step " + std::to_string(e.step_index));
    return kExitNonRational;
  } catch (const coxiter::UnclassifiableChainError& e) {
    emit_error(kExitUnclassifiable, e.what());
    return kExitUnclassifiable;
  } catch (const coxiter::Error& e) {
    emit_error(kExitValidation, e.what());
    return kExitValidation;
  }
  return 0;
}

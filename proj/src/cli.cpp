#include "scop/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scop/completion.hpp"
#include "scop/core.hpp"
#include "scop/dataset.hpp"
#include "scop/errors.hpp"
#include "scop/poset.hpp"
#include "scop/poset_io.hpp"
#include "scop/rating.hpp"
#include "scop/scop_json.hpp"
#include "scop/ttest.hpp"

namespace scop::cli {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot write file: " + out_path);
  f << text;
}

lattice::OrthoPoset poset_from_flags(const std::vector<std::string>& generators,
                                     const std::vector<std::string>& zeros) {
  std::vector<std::string> gens;
  for (const auto& g : generators)
    for (const auto& part : split(g, ','))
      if (!part.empty()) gens.push_back(part);
  std::vector<std::pair<lattice::Term, lattice::Term>> zero_meets;
  for (const auto& z : zeros) {
    auto parts = split(z, '^');
    if (parts.size() != 2)
      throw InputError("zero-meet flag must look like lit^lit: " + z);
    zero_meets.emplace_back(lattice::Term::parse_literal(parts[0]),
                            lattice::Term::parse_literal(parts[1]));
  }
  return lattice::generate_context_lattice(gens, zero_meets);
}

ordered_json report_to_json(const lattice::VerificationReport& r) {
  ordered_json doc;
  doc["partial_order_ok"] = r.partial_order_ok;
  doc["involution_ok"] = r.involution_ok;
  doc["antitone_ok"] = r.antitone_ok;
  doc["complement_laws_ok"] = r.complement_laws_ok;
  doc["missing_meets"] = ordered_json::array();
  for (const auto& [a, b] : r.missing_meets)
    doc["missing_meets"].push_back({a.str(), b.str()});
  doc["missing_joins"] = ordered_json::array();
  for (const auto& [a, b] : r.missing_joins)
    doc["missing_joins"].push_back({a.str(), b.str()});
  doc["counterexamples"] = ordered_json::array();
  for (const auto& w : r.counterexamples) {
    ordered_json j;
    j["axiom"] = w.axiom;
    j["terms"] = ordered_json::array();
    for (const auto& t : w.terms) j["terms"].push_back(t.str());
    doc["counterexamples"].push_back(j);
  }
  return doc;
}

std::vector<double> read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::vector<double> values;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed;
    for (char c : line)
      if (c != ' ' && c != '\t') trimmed.push_back(c);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    try {
      values.push_back(std::stod(trimmed));
    } catch (const std::exception&) {
      throw ParseError(path + ":" + std::to_string(ln) +
                       ": not a number: " + line);
    }
  }
  if (values.empty()) throw InputError(path + ": no samples");
  return values;
}

struct ScopSource {
  std::string scop_file;
  std::string fixtures_dir = "data";

  Scop load() const {
    if (!scop_file.empty()) {
      std::ifstream in(scop_file);
      if (!in) throw InputError("cannot open file: " + scop_file);
      return load_scop(in);
    }
    return ingest::build_scop(ingest::load_dataset(fixtures_dir));
  }
};

void add_scop_source(CLI::App* cmd, ScopSource& src) {
  cmd->add_option("--scop", src.scop_file, "system JSON file");
  cmd->add_option("--fixtures", src.fixtures_dir,
                  "directory with the bundled rating fixtures");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"state-context-property systems and their context lattices"};
  app.require_subcommand(1);

  // ----- lattice ------------------------------------------------------
  auto* lattice_cmd = app.add_subcommand("lattice", "symbolic context lattices");
  lattice_cmd->require_subcommand(1);

  struct LatticeFlags {
    std::vector<std::string> generators, zeros;
    std::string format;
    std::string out_path;
  };
  LatticeFlags gen_flags{{}, {}, "json", ""};
  LatticeFlags export_flags{{}, {}, "dot", ""};
  LatticeFlags verify_flags{{}, {}, "json", ""};
  LatticeFlags complete_flags{{}, {}, "json", ""};

  auto add_lattice_flags = [](CLI::App* cmd, LatticeFlags& f) {
    cmd->add_option("-g,--generators", f.generators,
                    "comma-separated generator names")
        ->required();
    cmd->add_option("-z,--zero", f.zeros,
                    "literal pair with zero meet (lit^lit)");
    cmd->add_option("--format", f.format, "output format: json or dot");
    cmd->add_option("--out", f.out_path, "write output to a file");
  };

  auto* gen_cmd = lattice_cmd->add_subcommand("gen", "generate the lattice");
  add_lattice_flags(gen_cmd, gen_flags);
  auto* export_cmd =
      lattice_cmd->add_subcommand("export", "generate and export the lattice");
  add_lattice_flags(export_cmd, export_flags);
  auto* verify_cmd = lattice_cmd->add_subcommand(
      "verify", "check partial-order and orthocomplementation axioms");
  add_lattice_flags(verify_cmd, verify_flags);
  auto* complete_cmd = lattice_cmd->add_subcommand(
      "complete", "Dedekind-MacNeille completion");
  add_lattice_flags(complete_cmd, complete_flags);

  // ----- scop ---------------------------------------------------------
  auto* scop_cmd = app.add_subcommand("scop", "concept system queries");
  scop_cmd->require_subcommand(1);

  ScopSource rank_src, weights_src, eigen_src, super_src;
  std::string rank_context;
  auto* rank_cmd = scop_cmd->add_subcommand(
      "rank", "rank exemplars by frequency under a context");
  rank_cmd->add_option("--context", rank_context, "context id")->required();
  add_scop_source(rank_cmd, rank_src);

  std::string weights_state, weights_property;
  auto* weights_cmd =
      scop_cmd->add_subcommand("weights", "property weights of a state");
  weights_cmd->add_option("--state", weights_state, "state id")->required();
  weights_cmd->add_option("--property", weights_property,
                          "single property id (default: all)");
  add_scop_source(weights_cmd, weights_src);

  std::string eigen_context, eigen_state;
  auto* eigen_cmd = scop_cmd->add_subcommand(
      "eigen", "eigenstates of a context, or test one state");
  eigen_cmd->add_option("--context", eigen_context, "context id")->required();
  eigen_cmd->add_option("--state", eigen_state, "state id to test");
  add_scop_source(eigen_cmd, eigen_src);

  std::string super_state, super_contexts;
  auto* super_cmd = scop_cmd->add_subcommand(
      "super", "test whether a state is a superposition over contexts");
  super_cmd->add_option("--state", super_state, "state id")->required();
  super_cmd->add_option("--contexts", super_contexts,
                        "comma-separated context ids")
      ->required();
  add_scop_source(super_cmd, super_src);

  std::string b_contexts, b_exemplars, b_properties, b_labels, b_freqs, b_wts,
      b_fixtures, b_out;
  auto* build_cmd =
      scop_cmd->add_subcommand("build", "build a system JSON from rating data");
  build_cmd->add_option("--contexts", b_contexts, "context id/label csv");
  build_cmd->add_option("--exemplars", b_exemplars, "exemplar rating csv (wide)");
  build_cmd->add_option("--properties", b_properties,
                        "property rating csv (wide)");
  build_cmd->add_option("--property-labels", b_labels,
                        "property id/label csv");
  build_cmd->add_option("--freqs", b_freqs, "published frequency csv (wide)");
  build_cmd->add_option("--wts", b_wts, "published weight csv (wide)");
  build_cmd->add_option("--fixtures", b_fixtures,
                        "load every table from this fixture directory");
  build_cmd->add_option("--out", b_out, "write the system JSON to a file");

  // ----- stats --------------------------------------------------------
  auto* stats_cmd = app.add_subcommand("stats", "statistical utilities");
  stats_cmd->require_subcommand(1);
  std::string tt_a, tt_b;
  auto* ttest_cmd = stats_cmd->add_subcommand(
      "ttest", "paired two-sample t test for means");
  ttest_cmd->add_option("--a", tt_a, "first sample file (one value per line)")
      ->required();
  ttest_cmd->add_option("--b", tt_b, "second sample file")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));

    if (gen_cmd->parsed() || export_cmd->parsed()) {
      const LatticeFlags& f = gen_cmd->parsed() ? gen_flags : export_flags;
      auto poset = poset_from_flags(f.generators, f.zeros);
      emit(export_poset(poset, lattice::parse_export_format(f.format)),
           f.out_path, out);
      return 0;
    }
    if (verify_cmd->parsed()) {
      auto poset = poset_from_flags(verify_flags.generators, verify_flags.zeros);
      auto report = lattice::verify_axioms(poset);
      emit(report_to_json(report).dump(2) + "\n", verify_flags.out_path, out);
      return report.all_ok() ? 0 : 2;
    }
    if (complete_cmd->parsed()) {
      auto poset =
          poset_from_flags(complete_flags.generators, complete_flags.zeros);
      auto report = lattice::verify_axioms(poset);
      auto cuts = lattice::dedekind_macneille(poset);
      ordered_json doc;
      doc["input_elements"] = poset.size();
      doc["completion_size"] = cuts.size();
      doc["already_complete"] =
          report.missing_meets.empty() && report.missing_joins.empty();
      doc["embedding"] = ordered_json::array();
      for (std::size_t i = 0; i < poset.size(); ++i)
        doc["embedding"].push_back(
            {{"term", poset.element(i).str()}, {"cut", cuts.embed(i)}});
      emit(doc.dump(2) + "\n", complete_flags.out_path, out);
      return 0;
    }

    if (rank_cmd->parsed()) {
      Scop s = rank_src.load();
      std::ostringstream os;
      for (const auto& [name, freq] : ingest::rank_exemplars(s, rank_context)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", freq);
        os << name << " " << buf << "\n";
      }
      out << os.str();
      return 0;
    }
    if (weights_cmd->parsed()) {
      Scop s = weights_src.load();
      if (!weights_property.empty()) {
        out << format_number(s.property_weight(weights_state, weights_property))
            << "\n";
      } else {
        for (const Labeled& a : s.properties())
          out << a.id << " "
              << format_number(s.property_weight(weights_state, a.id)) << "\n";
      }
      return 0;
    }
    if (eigen_cmd->parsed()) {
      Scop s = eigen_src.load();
      if (!eigen_state.empty()) {
        out << (s.is_eigenstate(eigen_state, eigen_context) ? "true" : "false")
            << "\n";
      } else {
        for (const auto& id : s.eigenstate_set(eigen_context)) out << id << "\n";
      }
      return 0;
    }
    if (super_cmd->parsed()) {
      Scop s = super_src.load();
      std::vector<std::string> ctxs;
      for (const auto& c : split(super_contexts, ','))
        if (!c.empty()) ctxs.push_back(c);
      out << (s.is_superposition_state(super_state, ctxs) ? "true" : "false")
          << "\n";
      return 0;
    }
    if (build_cmd->parsed()) {
      Scop s = [&] {
        if (!b_fixtures.empty())
          return ingest::build_scop(ingest::load_dataset(b_fixtures));
        if (b_contexts.empty() || b_exemplars.empty() || b_properties.empty())
          throw InputError(
              "scop build needs --fixtures or all of --contexts, --exemplars, "
              "--properties");
        ingest::Dataset d{
            ingest::LabelTable::from_csv_file(b_contexts),
            ingest::LabelTable{},
            ingest::RatingTable::from_csv_file(b_exemplars,
                                               ingest::Layout::wide),
            std::nullopt,
            ingest::RatingTable::from_csv_file(b_properties,
                                               ingest::Layout::wide),
            std::nullopt};
        if (!b_labels.empty())
          d.properties = ingest::LabelTable::from_csv_file(b_labels);
        else
          for (const auto& row : d.property_rates.row_labels())
            d.properties.entries.emplace_back(row, row);
        if (!b_freqs.empty())
          d.exemplar_freqs = ingest::RatingTable::from_csv_file(
              b_freqs, ingest::Layout::wide);
        if (!b_wts.empty())
          d.property_weights = ingest::RatingTable::from_csv_file(
              b_wts, ingest::Layout::wide);
        return ingest::build_scop(d);
      }();
      emit(to_json_string(s), b_out, out);
      return 0;
    }
    if (ttest_cmd->parsed()) {
      auto a = read_sample_file(tt_a);
      auto b = read_sample_file(tt_b);
      auto r = stats::paired_t_test(a, b);
      out << "t " << format_number(r.t) << "\n";
      out << "df " << r.degrees_of_freedom << "\n";
      out << "p " << format_number(r.p_value) << "\n";
      if (r.degenerate) out << "degenerate true\n";
      return 0;
    }
    err << "error: no command selected\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace scop::cli

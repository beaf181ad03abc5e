// Command-line front-end: validation, expansion, representation checking and
// isomorphism verification over the JSON interchange formats.
//
// Exit codes: 0 = success / check passed, 1 = a check failed, 2 = malformed
// input, 3 = expansion cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "grpd/algebra.hpp"
#include "grpd/br.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/io.hpp"
#include "grpd/kpar.hpp"
#include "grpd/partial_rep.hpp"
#include "grpd/scalar.hpp"

namespace {

struct Options {
  std::string input;
  std::string field = "Q";
  std::uint64_t cap = grpd::kDefaultBrCap;
  std::optional<std::size_t> max_len;
  std::string output;
  std::uint64_t seed = 0;  // reserved for fuzzing drivers
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw grpd::ParseError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw grpd::ParseError("cannot write output file '" + output + "'");
  out << text;
}

int cmd_validate(const Options& opt) {
  grpd::FiniteGroupoid g = grpd::parse_groupoid_raw(read_file(opt.input));
  grpd::ValidationReport report = grpd::validate(g);
  emit(grpd::validation_report_json(report), opt.output);
  return report.ok() ? 0 : 1;
}

int cmd_expand(const Options& opt) {
  grpd::FiniteGroupoid g = grpd::parse_groupoid(read_file(opt.input));
  grpd::BRGroupoid brg = grpd::build_br_groupoid(g, opt.cap);
  emit(grpd::serialize_br(brg, g), opt.output);
  return 0;
}

int cmd_dims(const Options& opt) {
  grpd::FiniteGroupoid g = grpd::parse_groupoid(read_file(opt.input));
  nlohmann::ordered_json j;
  j["arrows"] = g.arrow_count();
  j["objects"] = g.object_count();
  j["br_closed_form"] = grpd::br_count(g);
  j["br_enumerated"] = grpd::enumerate_br(g, opt.cap).size();
  emit(j.dump(2) + "\n", opt.output);
  return 0;
}

int cmd_verify(const Options& opt) {
  grpd::FiniteGroupoid g = grpd::parse_groupoid(read_file(opt.input));
  grpd::IsoCertificate cert = grpd::with_field(opt.field, [&](auto field) {
    return grpd::verify_iso(g, field, opt.cap, opt.max_len);
  });
  emit(grpd::certificate_json(cert), opt.output);
  return cert.passed() ? 0 : 1;
}

int cmd_rep_check(const Options& opt) {
  std::filesystem::path base = std::filesystem::path(opt.input).parent_path();
  grpd::RepFileData data = grpd::parse_rep_file(read_file(opt.input), [&](const std::string& ref) {
    return read_file((base / ref).string());
  });
  grpd::ValidationReport report = grpd::with_field(data.field_spec, [&](auto field) {
    using F = decltype(field);
    std::vector<grpd::Matrix<F>> images;
    images.reserve(data.entries.size());
    for (const auto& flat : data.entries) {
      grpd::Matrix<F> m(field, data.dim, data.dim);
      for (std::size_t i = 0; i < data.dim; ++i)
        for (std::size_t j = 0; j < data.dim; ++j)
          m.at(i, j) = field.from_string(flat[i * data.dim + j]);
      images.push_back(std::move(m));
    }
    grpd::PartialRep<F> rep =
        grpd::make_partial_rep(data.groupoid, field, data.dim, std::move(images));
    return grpd::check_partial_rep(rep);
  });
  emit(grpd::validation_report_json(report), opt.output);
  return report.ok() ? 0 : 1;
}

int cmd_iso_table(const Options& opt) {
  grpd::FiniteGroupoid g = grpd::parse_groupoid(read_file(opt.input));
  grpd::IsoTableData table = grpd::with_field(opt.field, [&](auto field) {
    using F = decltype(field);
    grpd::BRGroupoid brg = grpd::build_br_groupoid(g, opt.cap);
    grpd::IsoTableData t;
    t.field_spec = field.name();

    std::vector<grpd::AlgebraElement<F>> basis;
    grpd::MonomialBasis<F> mb = grpd::monomial_basis(g, brg, field, opt.max_len);
    if (mb.complete) {
      basis = std::move(mb.elements);
      for (const auto& w : mb.words) t.labels.push_back(grpd::word_label(g, w));
    } else {
      for (grpd::ArrowId a = 0; a < brg.base().arrow_count(); ++a) {
        basis.push_back(grpd::AlgebraElement<F>::basis(brg.base(), field, a));
        t.labels.push_back(brg.base().arrow_label(a));
      }
    }
    for (const auto& b : basis) t.elements.push_back(b.str());
    t.dimension = basis.size();

    auto constants = grpd::structure_constants(brg.base(), field, basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (!field.is_zero(constants[i][j][k]))
            t.entries.push_back({i, j, k, field.to_string(constants[i][j][k])});
    return t;
  });
  emit(grpd::iso_table_json(table), opt.output);
  return 0;
}

int cmd_fixture(const std::string& name, const Options& opt) {
  grpd::FiniteGroupoid g = grpd::build_pair_groupoid(1);
  if (name == "ex1")
    g = grpd::build_ex1();
  else if (name == "z2")
    g = grpd::build_cyclic_group(2);
  else if (name == "z3")
    g = grpd::build_cyclic_group(3);
  else if (name == "pair2")
    g = grpd::build_pair_groupoid(2);
  else if (name == "pair3")
    g = grpd::build_pair_groupoid(3);
  else if (name == "z2-disjoint-z2")
    g = grpd::disjoint_union(grpd::build_cyclic_group(2), grpd::build_cyclic_group(2));
  else {
    std::cerr << "unknown fixture '" << name
              << "'; available: ex1, z2, z3, pair2, pair3, z2-disjoint-z2\n";
    return 2;
  }
  emit(grpd::serialize_groupoid(g), opt.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupoids, Birget-Rhodes expansions and partial representations"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--field", opt.field, "scalar field: Q (default) or Fp:<p>");
  app.add_option("--cap", opt.cap, "expansion pair-count cap")->check(CLI::PositiveNumber);
  std::size_t max_len_raw = 0;
  auto* max_len_opt =
      app.add_option("--max-len", max_len_raw, "normal-form word length bound override");
  app.add_option("--output", opt.output, "write the artifact to this file instead of stdout");
  app.add_option("--seed", opt.seed, "seed (reserved for fuzzing drivers)");

  auto* validate = app.add_subcommand("validate", "check the groupoid axioms of a table");
  auto* expand = app.add_subcommand("expand", "emit the Birget-Rhodes expansion");
  auto* dims = app.add_subcommand("dims", "emit arrow/object/expansion counts");
  auto* verify = app.add_subcommand("verify", "emit the isomorphism certificate");
  auto* rep_check = app.add_subcommand("rep-check", "check a partial representation file");
  auto* iso_table = app.add_subcommand("iso-table", "emit expansion structure constants");
  auto* fixture = app.add_subcommand("fixture", "emit a named example groupoid");

  for (CLI::App* sub : {validate, expand, dims, verify, rep_check, iso_table})
    sub->add_option("input", opt.input, "input file")->required();
  std::string fixture_name;
  fixture->add_option("name", fixture_name, "fixture name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (max_len_opt->count() > 0) opt.max_len = max_len_raw;

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (expand->parsed()) return cmd_expand(opt);
    if (dims->parsed()) return cmd_dims(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (rep_check->parsed()) return cmd_rep_check(opt);
    if (iso_table->parsed()) return cmd_iso_table(opt);
    if (fixture->parsed()) return cmd_fixture(fixture_name, opt);
  } catch (const grpd::CapExceededError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const grpd::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}

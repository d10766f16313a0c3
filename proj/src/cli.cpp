#include "fiatcells/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fiatcells/bimodule.hpp"
#include "fiatcells/cells.hpp"
#include "fiatcells/constructors.hpp"
#include "fiatcells/interchange.hpp"
#include "fiatcells/kazhdan_lusztig.hpp"
#include "fiatcells/permutation.hpp"
#include "fiatcells/report.hpp"
#include "fiatcells/robinson_schensted.hpp"
#include "fiatcells/strong_cells.hpp"

namespace fiatcells {

namespace {

struct Options {
  std::string input;
  std::string kind = "right";
  bool json = false;
  int n = 0;
  int max_n = 5;
  std::string cartan;
  std::size_t max_dim = default_tensor_cap;
  std::string perm;
  std::optional<std::uint64_t> seed;
  std::string x;
  std::string w;
  std::string algebras;
  std::string m_file;
  std::string n_file;
  std::string of;
  std::string what;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt)
      : in_(in), out_(out), err_(err), opt_(opt) {}

  std::string read(const std::string& path) {
    if (path.empty()) {
      throw InputError("missing input file");
    }
    if (path == "-") {
      if (stdin_used_) {
        throw InputError("stdin can be read only once");
      }
      stdin_used_ = true;
      std::ostringstream buffer;
      buffer << in_.rdbuf();
      return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }

  // Reads the table argument and remembers its text for the report hash.
  MultiCat table() {
    input_text_ = read(opt_.input);
    return load_multicat(*input_text_);
  }

  void emit(std::string_view command, Json result, const std::string& text) {
    if (opt_.json) {
      std::optional<std::string_view> input;
      if (input_text_) {
        input = *input_text_;
      }
      out_ << envelope(command, input, opt_.seed, std::move(result)).dump(2) << "\n";
    } else {
      out_ << text;
    }
  }

  // Validates first; an invalid table ends the command with the report on stderr.
  std::optional<MultiCat> valid_table(std::string_view command) {
    auto cat = table();
    auto report = validate(cat);
    if (!report.ok()) {
      if (opt_.json) {
        emit(command, Json{{"validation", validation_json(cat, report)}}, "");
      }
      err_ << validation_text(cat, report);
      return std::nullopt;
    }
    return cat;
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }
  const Options& opt() const { return opt_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  const Options& opt_;
  bool stdin_used_ = false;
  std::optional<std::string> input_text_;
};

int cmd_validate(Session& s) {
  auto cat = s.table();
  auto report = validate(cat);
  s.emit("validate", validation_json(cat, report), validation_text(cat, report));
  return report.ok() ? exit_ok : exit_violations;
}

int cmd_cells(Session& s) {
  auto cat = s.valid_table("cells");
  if (!cat) {
    return exit_input_error;
  }
  CellEngine engine(*cat);
  const auto& partition = engine.cells(parse_cell_kind(s.opt().kind));
  s.emit("cells", partition_json(*cat, partition), partition_text(*cat, partition));
  return exit_ok;
}

int cmd_order(Session& s) {
  auto cat = s.valid_table("order");
  if (!cat) {
    return exit_input_error;
  }
  CellEngine engine(*cat);
  const auto& partition = engine.cells(parse_cell_kind(s.opt().kind));
  auto doc = partition_json(*cat, partition);
  Json pairs = Json::array();
  for (std::size_t a = 0; a < partition.size(); ++a) {
    for (std::size_t b = 0; b < partition.size(); ++b) {
      if (a != b && partition.order[a][b]) {
        pairs.push_back(Json::array({a + 1, b + 1}));
      }
    }
  }
  doc["comparable"] = std::move(pairs);
  auto factorization = engine.verify_order_factorization();
  doc["factorization_holds"] = factorization.holds;
  std::string text = order_text(*cat, partition);
  text += std::string("order factorization: ") + (factorization.holds ? "holds" : "fails") + "\n";
  if (!factorization.holds) {
    text += "  " + factorization.detail + "\n";
  }
  s.emit("order", std::move(doc), text);
  return exit_ok;
}

int cmd_annihilator(Session& s) {
  auto cat = s.valid_table("annihilator");
  if (!cat) {
    return exit_input_error;
  }
  if (s.opt().of.empty()) {
    throw InputError("annihilator needs --of <morph label>");
  }
  CellEngine engine(*cat);
  auto g = cat->morph_by_label(s.opt().of);
  auto killers = engine.annihilator_of_simple(g);
  Json doc;
  doc["simple"] = cat->label(g);
  Json list = Json::array();
  std::string text = "annihilator of L_" + cat->label(g) + ":";
  for (auto f : killers) {
    list.push_back(cat->label(f));
    text += " " + cat->label(f);
  }
  if (killers.empty()) {
    text += " none";
  }
  doc["annihilator"] = std::move(list);
  s.emit("annihilator", std::move(doc), text + "\n");
  return exit_ok;
}

int cmd_analyze(Session& s) {
  auto cat = s.table();
  auto analysis = report_analyze(cat);
  s.emit("analyze", analysis.document, analysis.text);
  if (!analysis.valid) {
    return exit_input_error;
  }
  return analysis.lint_passes ? exit_ok : exit_violations;
}

int cmd_lint(Session& s) {
  auto cat = s.table();
  auto report = fiat_lint(cat);
  s.emit("lint", lint_json(report), lint_text(report));
  return report.all_pass() ? exit_ok : exit_violations;
}

MultiCat ca_from_options(Session& s) {
  if (s.opt().cartan.empty()) {
    throw InputError("ca needs --cartan <file>");
  }
  return make_CA(parse_cartan_data(s.read(s.opt().cartan)));
}

MultiCat hecke_from_options(Session& s) {
  if (s.opt().n == 0) {
    throw InputError("hecke needs --n <int>");
  }
  return make_hecke(s.opt().n, s.opt().max_n);
}

int cmd_gen(Session& s) {
  const auto& what = s.opt().what;
  MultiCat cat;
  if (what == "s2") {
    cat = make_s2();
  } else if (what == "sl2") {
    cat = make_sl2_singular();
  } else if (what == "ca") {
    cat = ca_from_options(s);
  } else if (what == "hecke") {
    cat = hecke_from_options(s);
  } else {
    throw InputError("gen: unknown table '" + what + "' (expected s2, sl2, ca or hecke)");
  }
  s.out() << serialize_multicat(cat);
  return exit_ok;
}

std::vector<int> word_option(const std::string& text, const char* name) {
  if (text.empty()) {
    throw InputError(std::string("klpoly needs ") + name + " <word>");
  }
  return parse_word(text);
}

int cmd_klpoly(Session& s) {
  const int n = s.opt().n;
  if (n < 1 || n > 8) {
    throw InputError("klpoly needs --n between 1 and 8");
  }
  auto x = word_to_permutation(n, word_option(s.opt().x, "--x"));
  auto w = word_to_permutation(n, word_option(s.opt().w, "--w"));
  auto p = kl_polynomial(n, x, w);
  Json doc;
  doc["n"] = n;
  doc["x"] = format_permutation(x);
  doc["w"] = format_permutation(w);
  doc["polynomial"] = p.to_string("q");
  Json coefficients = Json::object();
  for (const auto& [d, c] : p.terms()) {
    coefficients[std::to_string(d)] = integer_json(c);
  }
  doc["coefficients"] = std::move(coefficients);
  s.emit("klpoly", std::move(doc),
         "P(" + format_permutation(x) + ", " + format_permutation(w) + ") = " + p.to_string("q") +
             "\n");
  return exit_ok;
}

std::string shape_text(const std::vector<int>& sh) {
  std::string out;
  for (std::size_t i = 0; i < sh.size(); ++i) {
    out += (i ? " " : "") + std::to_string(sh[i]);
  }
  return out;
}

int cmd_rs(Session& s) {
  if (!s.opt().perm.empty()) {
    auto w = parse_permutation(s.opt().perm);
    auto pair = robinson_schensted(w);
    Json doc;
    doc["perm"] = format_permutation(w);
    doc["insertion"] = pair.p;
    doc["recording"] = pair.q;
    doc["shape"] = shape(pair.p);
    s.emit("rs", std::move(doc),
           "P: " + format_tableau(pair.p) + "\nQ: " + format_tableau(pair.q) +
               "\nshape: " + shape_text(shape(pair.p)) + "\n");
    return exit_ok;
  }
  if (s.opt().n == 0) {
    throw InputError("rs needs --perm \"<ints>\" or --n <int>");
  }
  auto report = rs_cell_check(s.opt().n, s.opt().max_n);
  Json doc;
  doc["n"] = report.n;
  doc["right_cells"] = report.right_cells;
  doc["left_cells"] = report.left_cells;
  doc["two_sided_cells"] = report.two_sided_cells;
  doc["standard_tableaux"] = report.standard_tableaux;
  doc["right_cells_by"] = report.right_cells_by;
  doc["left_cells_by"] = report.left_cells_by;
  doc["two_sided_by_shape"] = report.two_sided_by_shape;
  doc["consistent"] = report.consistent();
  std::ostringstream text;
  text << "n: " << report.n << "\n"
       << "right cells: " << report.right_cells << "\n"
       << "left cells: " << report.left_cells << "\n"
       << "two-sided cells: " << report.two_sided_cells << "\n"
       << "standard tableaux: " << report.standard_tableaux << "\n"
       << "right cells are fibers of the " << report.right_cells_by << " tableau\n"
       << "left cells are fibers of the " << report.left_cells_by << " tableau\n"
       << "two-sided cells are fibers of the shape: "
       << (report.two_sided_by_shape ? "yes" : "no") << "\n"
       << "consistent: " << (report.consistent() ? "yes" : "no") << "\n";
  s.emit("rs", std::move(doc), text.str());
  return report.consistent() ? exit_ok : exit_violations;
}

Json matrices_json(const std::vector<Matrix>& list) {
  Json out = Json::array();
  for (const auto& m : list) {
    Json rowsj = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& x : row) {
        r.push_back(to_string(x));
      }
      rowsj.push_back(std::move(r));
    }
    out.push_back(std::move(rowsj));
  }
  return out;
}

int cmd_bimod(Session& s) {
  const auto& what = s.opt().what;
  if (what == "verify-quiver" || what == "verify-exm2") {
    auto report = verify_dual_numbers_quiver();
    Json doc;
    Json checks = Json::array();
    std::ostringstream text;
    for (const auto& c : report.checks) {
      checks.push_back(Json{{"relation", c.name}, {"holds", c.holds}, {"detail", c.detail}});
      text << (c.holds ? "PASS " : "FAIL ") << c.name << "\n";
    }
    doc["relations"] = std::move(checks);
    doc["hom_dimensions"] = Json{{"End(F)", report.end_f},
                                 {"Hom(F,1)", report.hom_f_1},
                                 {"Hom(1,F)", report.hom_1_f},
                                 {"End(1)", report.end_1}};
    doc["all_hold"] = report.all_hold();
    text << "dim End(F) = " << report.end_f << ", dim Hom(F,1) = " << report.hom_f_1
         << ", dim Hom(1,F) = " << report.hom_1_f << ", dim End(1) = " << report.end_1 << "\n";
    s.emit("bimod verify-quiver", std::move(doc), text.str());
    return report.all_hold() ? exit_ok : exit_violations;
  }
  if (what == "realize-ca") {
    if (s.opt().algebras.empty()) {
      throw InputError("realize-ca needs --algebras <file>");
    }
    auto realized = realize_CA(parse_algebra_list(s.read(s.opt().algebras)), s.opt().max_dim);
    s.out() << serialize_multicat(realized.cat);
    return exit_ok;
  }
  if (what == "hom") {
    if (s.opt().m_file.empty() || s.opt().n_file.empty()) {
      throw InputError("hom needs --m <file> and --n <file>");
    }
    auto m = parse_bimodule(s.read(s.opt().m_file));
    auto n = parse_bimodule(s.read(s.opt().n_file));
    auto basis = hom_space(m, n);
    Json doc;
    doc["dimension"] = basis.size();
    doc["basis"] = matrices_json(basis);
    std::string text = "dim Hom = " + std::to_string(basis.size()) + "\n";
    for (const auto& b : basis) {
      text += "  " + format_matrix(b) + "\n";
    }
    s.emit("bimod hom", std::move(doc), text);
    return exit_ok;
  }
  throw InputError("bimod: unknown action '" + what +
                   "' (expected verify-quiver, realize-ca or hom)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cell structure of finite based categories with involution", "fiatcells"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Emit a JSON document");
    sub->add_option("--seed", opt.seed, "Seed recorded in the report");
  };
  auto table_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("table", opt.input, "Table file, or - for stdin")->required();
    common(sub);
    return sub;
  };

  auto* validate_cmd = table_command("validate", "Check the table axioms");
  auto* cells_cmd = table_command("cells", "Left, right or two-sided cells");
  cells_cmd->add_option("--kind", opt.kind, "left, right or two-sided")
      ->check(CLI::IsMember({"left", "right", "two-sided"}));
  auto* order_cmd = table_command("order", "Partial order on cells");
  order_cmd->add_option("--kind", opt.kind, "left, right or two-sided")
      ->check(CLI::IsMember({"left", "right", "two-sided"}));
  auto* annihilator_cmd = table_command("annihilator", "Morphs killing a simple");
  annihilator_cmd->add_option("--of", opt.of, "Label of G for the simple L_G")->required();
  auto* analyze_cmd = table_command("analyze", "Full cell analysis");
  auto* lint_cmd = table_command("lint", "Necessary conditions for a fiat table");

  auto* gen_cmd = app.add_subcommand("gen", "Emit a builtin table");
  gen_cmd->add_option("what", opt.what, "s2, sl2, ca or hecke")->required();
  gen_cmd->add_option("--cartan", opt.cartan, "Cartan data file for ca");
  gen_cmd->add_option("--n", opt.n, "Rank for hecke");
  gen_cmd->add_option("--max-n", opt.max_n, "Largest rank accepted for hecke");
  common(gen_cmd);

  auto* ca_cmd = app.add_subcommand("ca", "Projective-functor table from Cartan data");
  ca_cmd->add_option("--cartan", opt.cartan, "Cartan data file")->required();
  common(ca_cmd);
  auto* hecke_cmd = app.add_subcommand("hecke", "Hecke table of S_n");
  hecke_cmd->add_option("--n", opt.n, "Rank")->required();
  hecke_cmd->add_option("--max-n", opt.max_n, "Largest rank accepted");
  common(hecke_cmd);

  auto* kl_cmd = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial P_{x,w}");
  kl_cmd->add_option("--n", opt.n, "Rank")->required();
  kl_cmd->add_option("--x", opt.x, "Word for x, e.g. \"1 2\" or e")->required();
  kl_cmd->add_option("--w", opt.w, "Word for w")->required();
  common(kl_cmd);

  auto* rs_cmd = app.add_subcommand("rs", "Robinson-Schensted tableaux and cell check");
  rs_cmd->add_option("--perm", opt.perm, "One-line permutation, e.g. \"3 1 2\"");
  rs_cmd->add_option("--n", opt.n, "Compare cells of S_n with tableaux");
  rs_cmd->add_option("--max-n", opt.max_n, "Largest rank accepted");
  common(rs_cmd);

  auto* bimod_cmd = app.add_subcommand("bimod", "Bimodule computations");
  bimod_cmd->add_option("action", opt.what, "verify-quiver, realize-ca or hom")->required();
  bimod_cmd->add_option("--algebras", opt.algebras, "Algebra list for realize-ca");
  bimod_cmd->add_option("--m", opt.m_file, "Source bimodule for hom");
  bimod_cmd->add_option("--n", opt.n_file, "Target bimodule for hom");
  bimod_cmd->add_option("--max-dim", opt.max_dim, "Tensor dimension cap")
      ->check(CLI::PositiveNumber);
  common(bimod_cmd);

  std::vector<std::string> owned{"fiatcells"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : owned) {
    argv.push_back(a.data());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << tool_version << "\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "fiatcells: " << e.what() << "\n";
    return exit_input_error;
  }
  if (opt.max_n < 1) {
    err << "fiatcells: --max-n must be positive\n";
    return exit_input_error;
  }

  Session session(in, out, err, opt);
  try {
    if (validate_cmd->parsed()) return cmd_validate(session);
    if (cells_cmd->parsed()) return cmd_cells(session);
    if (order_cmd->parsed()) return cmd_order(session);
    if (annihilator_cmd->parsed()) return cmd_annihilator(session);
    if (analyze_cmd->parsed()) return cmd_analyze(session);
    if (lint_cmd->parsed()) return cmd_lint(session);
    if (gen_cmd->parsed()) return cmd_gen(session);
    if (ca_cmd->parsed()) {
      out << serialize_multicat(ca_from_options(session));
      return exit_ok;
    }
    if (hecke_cmd->parsed()) {
      out << serialize_multicat(hecke_from_options(session));
      return exit_ok;
    }
    if (kl_cmd->parsed()) return cmd_klpoly(session);
    if (rs_cmd->parsed()) return cmd_rs(session);
    if (bimod_cmd->parsed()) return cmd_bimod(session);
  } catch (const DimensionCapExceeded& e) {
    err << "fiatcells: cap exceeded: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "fiatcells: " << e.what() << "\n";
    return exit_input_error;
  }
  err << "fiatcells: no command given\n";
  return exit_input_error;
}

}  // namespace fiatcells

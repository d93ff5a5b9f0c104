#include "cli.hpp"

#include "qwb/repthy.hpp"
#include "qwb/special.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qwb::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  int r = 1;
  int s = 1;
  std::string field = "generic";
  std::string format = "text";
  std::string cache_dir;
  int max_size = 0;
  // command arguments
  int f = 0;
  std::string lambda;
  bool gram = false;
  bool check_gram = false;
  int a_min = 0;
  int a_max = 0;
  bool a_set = false;
};

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Run {
  std::string field;
  json data;
  Table table;
  std::vector<std::string> notes;
  bool pass = true;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

EnginePtr engine(const Config& cfg, const FieldPtr& field) {
  EngineOptions opts;
  opts.max_size = cfg.max_size;
  if (cfg.cache_dir.empty()) return AlgebraEngine::build(cfg.r, cfg.s, field, opts);
  const fs::path dir(cfg.cache_dir);
  fs::create_directories(dir);
  const fs::path file = dir / ("engine-r" + std::to_string(cfg.r) + "-s" + std::to_string(cfg.s) + "-" +
                               sanitize(field->spec()) + "-v" + kCodeVersion + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    auto eng = AlgebraEngine::from_json(json::parse(in));
    if (eng->r() == cfg.r && eng->s() == cfg.s && eng->field()->spec() == field->spec()) return eng;
  }
  auto eng = AlgebraEngine::build(cfg.r, cfg.s, field, opts);
  std::ofstream(file) << eng->to_json().dump();
  return eng;
}

CellularPtr cellular(const Config& cfg, const FieldPtr& field) { return CellularBasis::build(engine(cfg, field)); }

CellLabel parse_label(const Config& cfg) {
  Bipartition lam;
  try {
    lam = Bipartition::parse(cfg.lambda);
  } catch (const std::exception& e) {
    throw UsageError("invalid bipartition '" + cfg.lambda + "': " + e.what());
  }
  const int f = cfg.f;
  if (f < 0 || f > std::min(cfg.r, cfg.s) || lam.first.size() != cfg.r - f || lam.second.size() != cfg.s - f)
    throw UsageError("(" + std::to_string(f) + ", " + lam.to_string() + ") is not a label of B_{" + std::to_string(cfg.r) +
                     "," + std::to_string(cfg.s) + "}: need 0 <= f <= min(r,s) and |lambda| = (r-f, s-f)");
  return {f, lam};
}

json label_json(const CellLabel& l) { return {{"f", l.f}, {"lambda", l.lambda.to_string()}}; }

Table check_table(const CheckReport& rep) {
  Table t{{"check", "result", "detail"}, {}};
  for (const auto& c : rep.checks) t.rows.push_back({c.name, pass_fail(c.pass), c.detail});
  return t;
}

Run cmd_dims(const Config& cfg, const FieldPtr& field) {
  Run run;
  auto eng = engine(cfg, field);
  const long long expected = static_cast<long long>(factorial(cfg.r + cfg.s));
  long long squares = 0;
  run.table.headers = {"label", "dim", "dim^2"};
  json labels = json::array();
  for (const auto& l : cell_labels(cfg.r, cfg.s)) {
    const long long d = cell_dim(cfg.r, cfg.s, l);
    squares += d * d;
    labels.push_back({{"label", label_json(l)}, {"dim", d}, {"dim_squared", d * d}});
    run.table.rows.push_back({l.to_string(), std::to_string(d), std::to_string(d * d)});
  }
  run.pass = eng->dim() == expected && squares == expected;
  run.data = {{"dim", eng->dim()}, {"expected", expected}, {"sum_of_squares", squares}, {"labels", labels}};
  run.notes.push_back("total " + std::to_string(eng->dim()) + " (expected " + std::to_string(expected) +
                      "), sum of squares " + std::to_string(squares));
  return run;
}

Run cmd_relations(const Config& cfg, const FieldPtr& field) {
  Run run;
  const CheckReport rep = verify_relations(*engine(cfg, field));
  run.data = to_json(rep);
  run.table = check_table(rep);
  run.pass = rep.all_pass();
  run.notes.push_back(std::to_string(rep.checks.size()) + " identities, " + std::to_string(rep.failures()) + " failures");
  return run;
}

Run cmd_cellular(const Config& cfg, const FieldPtr& field) {
  Run run;
  auto cb = cellular(cfg, field);
  const CheckReport rep = validate_cell_datum(*cb);
  run.data = to_json(rep);
  run.data["dim"] = cb->dim();
  run.data["labels"] = static_cast<int>(cb->blocks().size());
  run.table = check_table(rep);
  run.pass = rep.all_pass();
  return run;
}

Run cmd_gram(const Config& cfg, const FieldPtr& field) {
  const CellLabel label = parse_label(cfg);
  Run run;
  CellModule mod(cellular(cfg, field), label);
  const Matrix g = mod.gram();
  const auto entries = g.to_strings();
  const auto det = g.determinant();
  const auto rr = radical_rank(g);
  run.data = {{"label", label_json(label)}, {"size", g.rows()},         {"matrix", entries},
              {"det", det.to_string()},     {"rank", rr.rank}, {"radical_dim", rr.radical_dim}};
  for (int j = 0; j < g.cols(); ++j) run.table.headers.push_back("c" + std::to_string(j));
  run.table.rows = entries;
  run.notes.push_back("det = " + det.to_string() + ", rank " + std::to_string(rr.rank) + " of " + std::to_string(g.rows()));
  return run;
}

Run cmd_central(const Config& cfg, const FieldPtr& field) {
  Run run;
  json rows = json::array();
  run.table.headers = {"label", "scalar", "matches action"};
  for (const auto& cc : central_character_table(cellular(cfg, field))) {
    rows.push_back(to_json(cc));
    run.table.rows.push_back({cc.label.to_string(), cc.scalar.to_string(), yes_no(cc.matches_action.value_or(false))});
    run.pass = run.pass && cc.matches_action.value_or(false);
  }
  run.data = {{"characters", rows}};
  return run;
}

Run cmd_simples(const Config& cfg, const FieldPtr& field) {
  Run run;
  const auto simples = classify_simples(cfg.r, cfg.s, field);
  json list = json::array();
  run.table.headers = {"label"};
  for (const auto& l : simples) {
    list.push_back(label_json(l));
    run.table.rows.push_back({l.to_string()});
  }
  run.data = {{"simples", list},
              {"count", simples.size()},
              {"e", quantum_characteristic(*field).to_string()},
              {"quasi_hereditary", is_quasi_hereditary(cfg.r, cfg.s, field)}};
  if (cfg.check_gram) {
    auto by_gram = simples_by_gram(cellular(cfg, field));
    auto key = [](std::vector<CellLabel> v) {
      std::vector<std::string> out;
      for (const auto& l : v) out.push_back(l.to_string());
      std::sort(out.begin(), out.end());
      return out;
    };
    run.pass = key(simples) == key(by_gram);
    run.data["gram_count"] = by_gram.size();
    run.data["gram_agrees"] = run.pass;
    run.notes.push_back("Gram-rank cross-check: " + pass_fail(run.pass));
  }
  return run;
}

Run cmd_semisimple(const Config& cfg, const FieldPtr& field) {
  Run run;
  const auto mode = cfg.gram ? SemisimpleMode::Both : SemisimpleMode::ClosedForm;
  CellularPtr cb;
  if (cfg.gram && quantum_characteristic(*field).exceeds(std::max(cfg.r, cfg.s))) cb = cellular(cfg, field);
  const auto v = semisimplicity(cfg.r, cfg.s, field, mode, cb);
  run.data = to_json(v);
  run.table.headers = {"semisimple", "reason", "witnesses"};
  std::string wit;
  for (const auto& l : v.witnesses) wit += (wit.empty() ? "" : " ") + l.to_string();
  run.table.rows.push_back({yes_no(v.semisimple), to_string(v.reason), wit});
  if (v.coincidence) run.notes.push_back("rho^2 = q^" + std::to_string(2 * *v.coincidence));
  return run;
}

Run cmd_branch(const Config& cfg, const FieldPtr& field) {
  const CellLabel label = parse_label(cfg);
  if (cfg.r < 2) throw UsageError("branch needs r >= 2");
  Run run;
  Config small = cfg;
  small.r = cfg.r - 1;
  const auto rep = branching_check(cellular(cfg, field), label, cellular(small, field));
  run.data = to_json(rep);
  run.table.headers = {"section", "label", "dim"};
  for (std::size_t k = 0; k < rep.sections.size(); ++k)
    run.table.rows.push_back({std::to_string(k + 1), rep.sections[k].to_string(), std::to_string(rep.section_dims[k])});
  for (const auto& c : rep.checks.checks) run.notes.push_back(c.name + ": " + pass_fail(c.pass) + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  run.pass = rep.checks.all_pass();
  return run;
}

Run cmd_sweep(const Config& cfg) {
  Run run;
  const int lo = cfg.a_set ? cfg.a_min : -(cfg.r + cfg.s), hi = cfg.a_set ? cfg.a_max : cfg.r + cfg.s;
  run.table.headers = {"a", "rho", "semisimple", "reason"};
  if (cfg.gram) run.table.headers.push_back("gram agrees");
  json points = json::array();
  for (int a = lo; a <= hi; ++a)
    for (int sign : {1, -1}) {
      auto field = Field::one_variable(a, sign);
      auto v = semisimplicity(cfg.r, cfg.s, field, SemisimpleMode::ClosedForm);
      json p = {{"a", a}, {"sign", sign}, {"field", field->spec()}, {"verdict", to_json(v)}};
      std::vector<std::string> row{std::to_string(a), std::string(sign > 0 ? "q^" : "-q^") + std::to_string(a),
                                   yes_no(v.semisimple), to_string(v.reason)};
      if (cfg.gram) {
        Config c = cfg;
        auto g = semisimplicity(cfg.r, cfg.s, field, SemisimpleMode::Gram, cellular(c, field));
        const bool agree = g.semisimple == v.semisimple;
        p["gram"] = to_json(g);
        p["agrees"] = agree;
        row.push_back(yes_no(agree));
        run.pass = run.pass && agree;
      }
      points.push_back(p);
      run.table.rows.push_back(row);
    }
  run.data = {{"a_range", {lo, hi}}, {"points", points}};
  return run;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_text(std::ostream& out, const std::string& command, const Config& cfg, const std::vector<Run>& runs) {
  for (const auto& run : runs) {
    out << command << " (r,s) = (" << cfg.r << "," << cfg.s << ") field " << run.field << "\n";
    std::vector<std::size_t> width(run.table.headers.size(), 0);
    for (std::size_t j = 0; j < width.size(); ++j) width[j] = run.table.headers[j].size();
    for (const auto& row : run.table.rows)
      for (std::size_t j = 0; j < row.size() && j < width.size(); ++j) width[j] = std::max(width[j], row[j].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t j = 0; j < cells.size(); ++j) {
        out << (j ? "  " : "  ") << cells[j];
        if (j + 1 < cells.size()) out << std::string(width[j] - cells[j].size(), ' ');
      }
      out << "\n";
    };
    if (!run.table.headers.empty()) line(run.table.headers);
    for (const auto& row : run.table.rows) line(row);
    for (const auto& n : run.notes) out << "  " << n << "\n";
    out << "  result: " << pass_fail(run.pass) << "\n";
  }
}

void print_csv(std::ostream& out, const std::vector<Run>& runs) {
  if (runs.empty()) return;
  out << "field";
  for (const auto& h : runs.front().table.headers) out << "," << csv_escape(h);
  out << "\n";
  for (const auto& run : runs)
    for (const auto& row : run.table.rows) {
      out << csv_escape(run.field);
      for (const auto& c : row) out << "," << csv_escape(c);
      out << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the quantized walled Brauer algebra B_{r,s}", "qwb"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--r", cfg.r, "Number of unstarred strands")->check(CLI::PositiveNumber);
    sub->add_option("--s", cfg.s, "Number of starred strands")->check(CLI::PositiveNumber);
    sub->add_option("--field", cfg.field,
                    "generic | q-power:<n>[:neg] | rho2:<a> | delta-zero[:neg] | rational:<q>,<rho> | gfp:<p>,<q>,<rho> | "
                    "cyclotomic:<m>,<n>[:neg]");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "Directory for cached engines");
    sub->add_option("--max-size", cfg.max_size, "Override the largest accepted r + s");
  };
  auto label_args = [&](CLI::App* sub) {
    sub->add_option("f", cfg.f, "Number of arcs")->required();
    sub->add_option("lambda", cfg.lambda, "Bipartition such as [[2],[1]]")->required();
  };

  struct Command {
    CLI::App* app;
    std::function<Run(const FieldPtr&)> body;
    bool per_field = true;
  };
  std::vector<Command> commands;
  auto add = [&](const char* name, const char* help, std::function<Run(const FieldPtr&)> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    commands.push_back({sub, std::move(body)});
    return sub;
  };
  add("dims", "Basis and cell-module dimension table", [&](const FieldPtr& F) { return cmd_dims(cfg, F); });
  add("relations", "Defining relations and derived identities", [&](const FieldPtr& F) { return cmd_relations(cfg, F); });
  add("cellular", "Cell-datum axioms", [&](const FieldPtr& F) { return cmd_cellular(cfg, F); });
  label_args(add("gram", "Gram matrix and determinant of a cell module", [&](const FieldPtr& F) { return cmd_gram(cfg, F); }));
  add("central", "Central scalars against the action of c_{r,s}", [&](const FieldPtr& F) { return cmd_central(cfg, F); });
  add("simples", "Labels of the simple modules", [&](const FieldPtr& F) { return cmd_simples(cfg, F); })
      ->add_flag("--check-gram", cfg.check_gram, "Compare with the labels of nonzero Gram rank");
  add("semisimple", "Semisimplicity criterion", [&](const FieldPtr& F) { return cmd_semisimple(cfg, F); })
      ->add_flag("--gram", cfg.gram, "Also compute every Gram determinant and compare");
  label_args(add("branch", "Restriction of a cell module to B_{r-1,s}", [&](const FieldPtr& F) { return cmd_branch(cfg, F); }));
  CLI::App* sweep = add("sweep", "Semisimplicity over rho = +-q^a", [&](const FieldPtr&) { return cmd_sweep(cfg); });
  commands.back().per_field = false;
  sweep->add_flag("--gram", cfg.gram, "Cross-check every point with Gram determinants");
  sweep->add_option("--a-min", cfg.a_min, "Smallest exponent (default -(r+s))");
  sweep->add_option("--a-max", cfg.a_max, "Largest exponent (default r+s)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qwb: " << e.what() << "\n";
    return kUsage;
  }
  cfg.a_set = sweep->count("--a-min") > 0 || sweep->count("--a-max") > 0;
  if (cfg.a_set) {
    if (sweep->count("--a-min") == 0) cfg.a_min = -(cfg.r + cfg.s);
    if (sweep->count("--a-max") == 0) cfg.a_max = cfg.r + cfg.s;
  }

  const Command* cmd = nullptr;
  for (const auto& c : commands)
    if (c.app->parsed()) cmd = &c;
  const std::string name = cmd->app->get_name();

  std::vector<Run> runs;
  try {
    if (cmd->per_field) {
      for (const auto& F : parse_field_specs(cfg.field)) {
        Run r = cmd->body(F);
        r.field = F->spec();
        runs.push_back(std::move(r));
      }
    } else {
      Run r = cmd->body(nullptr);
      r.field = "q-power:a";
      runs.push_back(std::move(r));
    }
  } catch (const IntegrityError& e) {
    err << "qwb: integrity error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const UsageError& e) {
    err << "qwb: " << e.what() << "\n";
    return kUsage;
  } catch (const EngineError& e) {
    err << "qwb: refused: " << e.what() << "\n";
    return kUsage;
  } catch (const CombinatError& e) {
    err << "qwb: " << e.what() << "\n";
    return kUsage;
  } catch (const FieldError& e) {
    err << "qwb: field: " << e.what() << "\n";
    return kUsage;
  }

  bool pass = std::all_of(runs.begin(), runs.end(), [](const Run& r) { return r.pass; });
  if (cfg.format == "json") {
    json runs_json = json::array();
    for (const auto& r : runs) runs_json.push_back({{"field", r.field}, {"pass", r.pass}, {"result", r.data}});
    json doc = {{"schema_version", kSchemaVersion}, {"code_version", kCodeVersion}, {"command", name},
                {"r", cfg.r},                       {"s", cfg.s},                   {"runs", runs_json},
                {"pass", pass}};
    out << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    print_csv(out, runs);
  } else {
    print_text(out, name, cfg, runs);
  }
  return pass ? kOk : kVerificationFailed;
}

}  // namespace qwb::cli

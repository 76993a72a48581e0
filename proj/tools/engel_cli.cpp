// engel: command-line driver for the Engel graph library.
//
// Exit status: 0 everything matched, 1 no expectation and the property did
// not hold, 2 a result disagreed with its tabulated expectation, 3 the group,
// table or data file could not be built or read.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "engel/class_algebra.hpp"
#include "engel/connectivity.hpp"
#include "engel/engel.hpp"
#include "engel/group_spec.hpp"
#include "engel/monster.hpp"

#ifndef ENGEL_DATA_DIR
#define ENGEL_DATA_DIR "data"
#endif

namespace {

using namespace engel;
using nlohmann::json;

enum Exit : int { kOk = 0, kNotHeld = 1, kMismatch = 2, kDataError = 3 };

struct RunConfig {
  std::vector<std::string> group;
  unsigned n_cap = 8;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string cache_dir;
  std::string format = "json";
  std::string data_dir = ENGEL_DATA_DIR;
  bool timing = false;
};

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

class Session {
 public:
  explicit Session(const RunConfig& cfg) : cfg_(cfg) {
    if (!cfg.cache_dir.empty()) {
      std::filesystem::create_directories(cfg.cache_dir);
      cache_ = std::make_unique<GroupCache>(cfg.cache_dir);
    }
  }

  GroupSpec spec() const {
    if (cfg_.group.empty()) throw std::invalid_argument("--group is required");
    return parse_group_spec(join(cfg_.group));
  }
  Group build(const GroupSpec& s) const { return build_group(s, cfg_.data_dir, cache_.get()); }

  bool json_out() const { return cfg_.format == "json"; }
  void emit(const json& j) const { std::cout << j.dump() << "\n"; }
  void text(const std::string& line) const { std::cout << line << "\n"; }

  const RunConfig& cfg() const { return cfg_; }

 private:
  const RunConfig& cfg_;
  std::unique_ptr<GroupCache> cache_;
};

std::string orders_string(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

int cmd_group(const Session& s, const std::vector<std::string>& words) {
  const GroupSpec spec = parse_group_spec(join(words));
  const Group G = s.build(spec);
  const auto spectrum = order_spectrum(G);
  if (s.json_out()) {
    json j{{"group", spec.label()},
           {"order", G.order()},
           {"degree", G.degree()},
           {"classes", G.classes().size()},
           {"spectrum", spectrum}};
    json sizes = json::array();
    for (const auto& c : G.classes()) sizes.push_back({{"order", c.element_order}, {"size", c.size()}});
    j["class_sizes"] = sizes;
    s.emit(j);
  } else {
    s.text(spec.label() + ": order " + std::to_string(G.order()) + ", degree " + std::to_string(G.degree()) + ", " +
           std::to_string(G.classes().size()) + " classes, element orders " + orders_string(spectrum));
  }
  return kOk;
}

ConnectivityReport run_min_n(const Session& s, const GroupSpec& spec, const Group& G) {
  ConnectivityReport r;
  r.group = spec.label();
  r.order = G.order();
  r.result = min_strong_n(G, s.cfg().n_cap, s.cfg().threads);
  r.prediction = predict_for(spec);
  return r;
}

std::string report_line(const ConnectivityReport& r) {
  std::ostringstream os;
  os << r.group << " |G|=" << r.order << ": ";
  if (r.result.outcome == MinNOutcome::Found)
    os << "min n = " << r.result.n;
  else
    os << to_string(r.result.outcome) << " (cap " << r.result.cap << ")";
  if (r.prediction) os << ", expected " << r.prediction->value_string() << (*r.match() ? " [match]" : " [MISMATCH]");
  return os.str();
}

int min_n_status(const ConnectivityReport& r) {
  if (r.prediction) return *r.match() ? kOk : kMismatch;
  return r.result.outcome == MinNOutcome::Found ? kOk : kNotHeld;
}

int cmd_min_n(const Session& s) {
  const GroupSpec spec = s.spec();
  const Group G = s.build(spec);
  const auto r = run_min_n(s, spec, G);
  if (s.json_out())
    s.emit(r.to_json(s.cfg().timing));
  else
    s.text(report_line(r));
  return min_n_status(r);
}

int cmd_check(const Session& s, unsigned n) {
  const GroupSpec spec = s.spec();
  const Group G = s.build(spec);
  const auto lv = check_level(G, n, s.cfg().threads);
  if (s.json_out()) {
    json j{{"group", spec.label()},
           {"order", G.order()},
           {"n", n},
           {"vertices", lv.vertices},
           {"engel_elements", lv.engel_elements},
           {"forward_reached", lv.connectivity.forward_reached},
           {"backward_reached", lv.connectivity.backward_reached},
           {"strongly_connected", lv.connectivity.strongly_connected}};
    if (s.cfg().timing) j["seconds"] = lv.seconds;
    s.emit(j);
  } else {
    s.text(spec.label() + ": Gamma_" + std::to_string(n) + " on " + std::to_string(lv.vertices) + " vertices is " +
           (lv.connectivity.strongly_connected ? "strongly connected" : "not strongly connected"));
  }
  return lv.connectivity.strongly_connected ? kOk : kNotHeld;
}

int cmd_depth(const Session& s, ElementId x, ElementId y) {
  const GroupSpec spec = s.spec();
  const Group G = s.build(spec);
  if (x >= G.order() || y >= G.order()) throw std::invalid_argument("element index out of range");
  const auto d = engel_depth(G, x, y);
  if (s.json_out())
    s.emit({{"group", spec.label()},
            {"x", x},
            {"y", y},
            {"x_cycles", G.element(x).to_string()},
            {"y_cycles", G.element(y).to_string()},
            {"depth", d.is_infinite() ? json(nullptr) : json(d.value)}});
  else
    s.text("depth(" + std::to_string(x) + ", " + std::to_string(y) + ") = " + d.to_string());
  return kOk;
}

int cmd_graph(const Session& s, unsigned n) {
  const GroupSpec spec = s.spec();
  const Group G = s.build(spec);
  if (G.order() > EngelGraphView::kMaterializeLimit)
    throw std::invalid_argument("graph output is limited to groups of order <= " +
                                std::to_string(EngelGraphView::kMaterializeLimit));
  const EngelGraphView view(G, n);
  if (view.vertex_count() == 0) throw std::invalid_argument("Gamma_" + std::to_string(n) + " has no vertices");
  if (s.cfg().format == "dot") {
    std::cout << to_dot(view);
  } else if (s.json_out()) {
    s.emit(to_json(view));
  } else {
    const auto d = view.materialize();
    const auto scc = tarjan_scc(d);
    s.text(spec.label() + ": Gamma_" + std::to_string(n) + " has " + std::to_string(d.vertex_count()) +
           " vertices, " + std::to_string(d.arc_count()) + " arcs (loops included), " + std::to_string(scc.count) +
           " strong components");
  }
  return kOk;
}

int cmd_criterion(const Session& s, unsigned n) {
  const GroupSpec spec = s.spec();
  const Group G = s.build(spec);
  const auto r = corollary_criterion(G, n, s.cfg().seed);
  if (s.json_out()) {
    json j = to_json(r, G);
    j["group"] = spec.label();
    j["n"] = n;
    s.emit(j);
  } else {
    s.text(spec.label() + ": criterion at n=" + std::to_string(n) + " " + to_string(r.status) +
           (r.reason.empty() ? "" : " (" + r.reason + ")"));
  }
  return r.status == CriterionStatus::Holds ? kOk : kNotHeld;
}

int cmd_table1(const Session& s, std::uint64_t max_q, bool extras) {
  std::vector<GroupSpec> rows;
  for (std::uint64_t q = 4; q <= max_q; ++q)
    if (util::prime_power(q).first != 0) rows.push_back({"psl2", q, ""});
  if (extras) {
    rows.push_back({"m10", 0, ""});
    rows.push_back({"psl3", 4, ""});
  }
  std::size_t mismatches = 0;
  for (const auto& spec : rows) {
    const Group G = s.build(spec);
    const auto r = run_min_n(s, spec, G);
    if (!*r.match()) ++mismatches;
    if (s.json_out())
      s.emit(r.to_json(s.cfg().timing));
    else
      s.text(report_line(r));
  }
  if (s.json_out())
    s.emit({{"suite", "table1"}, {"rows", rows.size()}, {"mismatches", mismatches}});
  else
    s.text("table1: " + std::to_string(rows.size() - mismatches) + "/" + std::to_string(rows.size()) + " rows match");
  return mismatches == 0 ? kOk : kMismatch;
}

int cmd_sporadic(const Session& s, std::size_t budget) {
  const GroupSpec spec = s.spec();
  const auto rows = table2_rows(spec);
  if (!rows) throw std::invalid_argument("no sporadic rows for " + spec.label() + " (available: m11, m12, m22)");
  const Group G = s.build(spec);
  const auto r = sporadic_check(G, *rows, s.cfg().seed, budget, s.cfg().threads);
  if (s.json_out()) {
    json j = to_json(r);
    j["group"] = spec.label();
    s.emit(j);
  } else {
    for (const auto& p : r.primes)
      s.text(spec.label() + " p=" + std::to_string(p.prime) + ": " + p.strategy);
    s.text(spec.label() + ": " + (r.success ? "every odd component reaches Omega both ways" : "FAILED"));
  }
  return r.success ? kOk : kMismatch;
}

CharacterTable table_or_default(const Session& s, const GroupSpec& spec, const std::string& table) {
  if (!table.empty()) return load_character_table(table);
  const auto p = table_for(spec, s.cfg().data_dir);
  if (!p) throw TableError("no shipped character table for " + spec.label() + "; pass --table");
  return load_character_table(p->string());
}

int cmd_crosscheck(const Session& s, const std::string& table) {
  const GroupSpec spec = s.spec();
  const Group G = s.build(spec);
  const CharacterTable T = table_or_default(s, spec, table);
  const auto r = crosscheck_class_constants(G, T);
  if (s.json_out()) {
    json mm = json::array();
    for (const auto& m : r.mismatches)
      mm.push_back({{"i", T.classes[m.i].name},
                    {"j", T.classes[m.j].name},
                    {"v", T.classes[m.v].name},
                    {"brute", m.brute},
                    {"formula", m.formula.str()}});
    s.emit({{"group", spec.label()}, {"table", T.name}, {"triples", r.triples}, {"mismatches", mm}});
  } else {
    s.text(spec.label() + " vs table " + T.name + ": " + std::to_string(r.triples - r.mismatches.size()) + "/" +
           std::to_string(r.triples) + " class constants agree");
  }
  return r.ok() ? kOk : kMismatch;
}

int cmd_slices(const Session& s) {
  const GroupSpec spec = s.spec();
  const Group G = s.build(spec);
  ElementId iota = Group::kNone;
  for (const auto& c : G.classes())
    if (c.element_order == 2) {
      iota = c.representative;
      break;
    }
  if (iota == Group::kNone) throw std::invalid_argument(spec.label() + " has no involution");
  const auto r = slice_sizes(G, iota);
  if (s.json_out()) {
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"class", row.group_class},
                      {"order", G.classes()[row.group_class].element_order},
                      {"direct", row.direct},
                      {"m", row.m},
                      {"via_constant", row.via_constant.str()}});
    s.emit({{"group", spec.label()}, {"involution_class_size", r.class_size}, {"rows", rows}, {"ok", r.all_equal()}});
  } else {
    s.text(spec.label() + ": slice sizes " + (r.all_equal() ? "agree with m_Y|Y|/|I|" : "DISAGREE"));
  }
  return r.all_equal() ? kOk : kMismatch;
}

int cmd_monster(const Session& s, std::string path) {
  if (path.empty()) path = (std::filesystem::path(s.cfg().data_dir) / "monster.txt").string();
  const auto r = monster_check(load_monster_constants(path));
  if (s.json_out()) {
    s.emit(to_json(r));
  } else {
    std::size_t pass = 0;
    for (const auto& id : r.identities) {
      pass += id.pass;
      s.text("(" + id.label + ") " + id.statement + ": " + (id.pass ? "pass" : "FAIL"));
    }
    s.text(std::to_string(pass) + "/" + std::to_string(r.identities.size()) + " identities pass");
  }
  return r.all_pass() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Engel graphs of finite groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "group: alt N, sym N, psl2 Q, pgl2 Q, psl3 Q, m10, m11, m12, m22, sz8, file PATH")
        ->expected(1, 2);
    sub->add_option("--n-cap", cfg.n_cap, "largest n tried by min-n")->check(CLI::Range(2u, 64u));
    sub->add_option("--seed", cfg.seed, "seed for every randomised step");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--cache-dir", cfg.cache_dir, "directory for enumerated-group caches");
    sub->add_option("--format", cfg.format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--data-dir", cfg.data_dir, "data directory (gens/, chartab/, monster.txt)");
    sub->add_flag("--timing", cfg.timing, "include wall-clock seconds in JSON");
  };

  std::vector<std::string> group_words;
  auto* group = app.add_subcommand("group", "order, classes and element orders");
  group->add_option("spec", group_words, "group specification")->required();
  add_common(group);

  auto* engel = app.add_subcommand("engel", "Engel graph computations");
  engel->require_subcommand(1);
  auto* min_n = engel->add_subcommand("min-n", "smallest n with Gamma_n strongly connected");
  unsigned level = 2;
  auto* check = engel->add_subcommand("check", "is Gamma_n strongly connected");
  check->add_option("n", level)->required()->check(CLI::PositiveNumber);
  ElementId x = 0, y = 0;
  auto* depth = engel->add_subcommand("depth", "Engel depth of element indices x, y");
  depth->add_option("x", x)->required();
  depth->add_option("y", y)->required();
  auto* graph = engel->add_subcommand("graph", "emit Gamma_n (order <= 2000)");
  graph->add_option("n", level)->required()->check(CLI::PositiveNumber);
  auto* criterion = engel->add_subcommand("criterion", "component criterion at level n");
  criterion->add_option("n", level)->required()->check(CLI::PositiveNumber);
  for (auto* sub : {min_n, check, depth, graph, criterion}) add_common(sub);

  std::uint64_t max_q = 31;
  bool psl2_only = false;
  auto* table1 = app.add_subcommand("table1", "PSL2(q) rows up to --max-q, plus M10 and PSL3(4)");
  table1->add_option("--max-q", max_q)->check(CLI::Range(4, 200));
  table1->add_flag("--psl2-only", psl2_only, "skip the M10 and PSL3(4) rows");
  add_common(table1);

  std::size_t budget = 1000;
  auto* sporadic = app.add_subcommand("sporadic", "odd prime-graph components of m11, m12, m22");
  sporadic->add_option("--budget", budget, "random involutions tried per prime");
  add_common(sporadic);

  std::string table;
  auto* classalg = app.add_subcommand("classalg", "character-table checks");
  classalg->require_subcommand(1);
  auto* crosscheck = classalg->add_subcommand("crosscheck", "class constants: table formula vs enumeration");
  crosscheck->add_option("--table", table, "character table file (default: shipped table)");
  auto* slices = classalg->add_subcommand("slices", "|X_Y| counted vs m_Y|Y|/|I|");
  for (auto* sub : {crosscheck, slices}) add_common(sub);

  std::string constants;
  auto* monster = app.add_subcommand("monster", "exact check of the printed Monster constants");
  monster->add_option("--constants", constants, "constants file (default: DATA/monster.txt)");
  add_common(monster);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    Session s(cfg);
    if (*group) return cmd_group(s, group_words);
    if (*min_n) return cmd_min_n(s);
    if (*check) return cmd_check(s, level);
    if (*depth) return cmd_depth(s, x, y);
    if (*graph) return cmd_graph(s, level);
    if (*criterion) return cmd_criterion(s, level);
    if (*table1) return cmd_table1(s, max_q, !psl2_only);
    if (*sporadic) return cmd_sporadic(s, budget);
    if (*crosscheck) return cmd_crosscheck(s, table);
    if (*slices) return cmd_slices(s);
    if (*monster) return cmd_monster(s, constants);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kDataError;
}

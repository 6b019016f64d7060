#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permgrid/bounds.hpp"
#include "permgrid/classes.hpp"
#include "permgrid/decomposition.hpp"
#include "permgrid/error.hpp"
#include "permgrid/extensions.hpp"
#include "permgrid/gridding.hpp"
#include "permgrid/pins.hpp"
#include "permgrid/plot.hpp"
#include "permgrid/structures.hpp"
#include "permgrid/verify.hpp"

namespace permgrid::cli {

namespace {

using nlohmann::json;

Symmetry parse_orient(const std::string& name) {
  auto g = Symmetry::from_name(name);
  if (!g) throw Error(ErrorCode::Param, "unknown orientation: " + name);
  return *g;
}

Chirality parse_chirality(const std::string& s) {
  if (s == "cw" || s == "clockwise") return Chirality::Clockwise;
  if (s == "ccw" || s == "counterclockwise") return Chirality::Counterclockwise;
  throw Error(ErrorCode::Param, "chirality must be cw or ccw");
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    std::istringstream parts(token);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      if (piece.empty()) continue;
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(piece, &used));
        if (used != piece.size()) throw std::invalid_argument(piece);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "not an integer: " + piece);
      }
    }
  }
  return out;
}

/// "pin:type:placement" items separated by commas or spaces.
std::vector<ExtensionSpec> parse_extension_specs(const std::string& text) {
  std::vector<ExtensionSpec> out;
  std::string item;
  std::istringstream in(text);
  while (in >> item) {
    std::istringstream parts(item);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      if (piece.empty()) continue;
      ExtensionSpec s;
      char c1 = 0, c2 = 0;
      std::istringstream f(piece);
      if (!(f >> s.pin >> c1 >> s.type >> c2 >> s.placement) || c1 != ':' || c2 != ':') {
        throw Error(ErrorCode::Parse, "extension must look like pin:type:placement, got " + piece);
      }
      out.push_back(s);
    }
  }
  return out;
}

json pins_json(const PinSequence& seq) {
  json dirs = json::array();
  for (Direction d : seq.directions) dirs.push_back(std::string(to_string(d)));
  const SpiralClass sc = classify_spiral(seq);
  json spiral = sc.spiral ? json{{"chirality", std::string(to_string(sc.chirality))},
                                 {"phase", std::string(to_string(sc.phase))}}
                          : json(nullptr);
  return {{"points", seq.positions},
          {"directions", dirs},
          {"turns", count_turns(seq)},
          {"spiral", spiral}};
}

std::string pins_text(const PinSequence& seq) {
  std::ostringstream o;
  for (int k = 0; k < seq.size(); ++k) {
    o << (k ? " " : "") << seq.positions[k];
    if (seq.directions[k] != Direction::None) o << to_char(seq.directions[k]);
  }
  o << "  turns=" << count_turns(seq);
  const SpiralClass sc = classify_spiral(seq);
  if (sc.spiral) o << "  spiral=" << to_string(sc.chirality);
  return o.str();
}

json extension_json(const ExtensionRecord& r) {
  json j{{"pin", r.pin}, {"type", r.type}, {"points", r.points}};
  if (r.type == 2) j["branches"] = {{"one", r.branch_one}, {"two", r.branch_two}};
  return j;
}

std::string half(int gap) { return std::to_string(gap) + ".5"; }

// Everything a subcommand callback needs.
struct Context {
  std::ostream& out;
  bool json_mode = false;
};

void emit(Context& ctx, const json& j, const std::string& text) {
  if (ctx.json_mode) {
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << text << '\n';
  }
}

// ---------------------------------------------------------------------------

void add_gen(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("gen", "Generate a named structure");
  struct Args {
    std::string kind{};
    std::string orient = "identity";
    std::string chirality = "cw";
    std::string ext{};
    int param = 0;
    int type = 1;
    int variant = 1;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("kind", a->kind,
                  "sum21 | skew12 | parallel-sawtooth | wedge-sawtooth | sliced-wedge | "
                  "oscillation | spiral")
      ->required();
  cmd->add_option("param", a->param, "k, m, n or spiral length")->required();
  cmd->add_option("--orient", a->orient, "symmetry applied to the canonical instance");
  cmd->add_option("--type", a->type, "sliced wedge type (1-3)");
  cmd->add_option("--variant", a->variant, "oscillation variant (1-2)");
  cmd->add_option("--chirality", a->chirality, "spiral chirality: cw or ccw");
  cmd->add_option("--ext", a->ext, "spiral extensions as pin:type:placement,...");
  cmd->callback([&ctx, a] {
    const Symmetry g = parse_orient(a->orient);
    if (a->kind == "spiral") {
      const auto x = gen_spiral_with_extensions(parse_chirality(a->chirality), a->param,
                                                parse_extension_specs(a->ext));
      json exts = json::array();
      for (const auto& r : x.extensions) exts.push_back(extension_json(r));
      emit(ctx, {{"kind", a->kind}, {"param", a->param}, {"perm", x.perm.to_string()},
                 {"pins", pins_json(x.spiral)}, {"extensions", exts}},
           x.perm.to_string());
      return;
    }
    Permutation p;
    if (a->kind == "sum21") {
      p = g.apply(sum_of_21(a->param));
    } else if (a->kind == "skew12") {
      p = g.apply(skew_of_12(a->param));
    } else if (a->kind == "parallel-sawtooth") {
      if (a->param < 1) throw Error(ErrorCode::Param, "m must be positive");
      p = gen_parallel_sawtooth(a->param, g);
    } else if (a->kind == "wedge-sawtooth") {
      if (a->param < 1) throw Error(ErrorCode::Param, "m must be positive");
      p = gen_wedge_sawtooth(a->param, g);
    } else if (a->kind == "sliced-wedge") {
      p = gen_sliced_wedge(a->param, a->type, g);
    } else if (a->kind == "oscillation") {
      p = g.apply(gen_increasing_oscillation(a->param, a->variant));
    } else {
      throw CLI::ValidationError("kind", "unknown structure: " + a->kind);
    }
    emit(ctx, {{"kind", a->kind}, {"param", a->param}, {"perm", p.to_string()}}, p.to_string());
  });
}

void add_detect(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("detect", "Largest structure of a kind in a permutation");
  struct Args {
    std::string kind{};
    std::string perm{};
    std::string orient = "identity";
    int type = 1;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("kind",
                  a->kind,
                  "sum21 | skew12 | parallel-sawtooth | wedge-sawtooth | sliced-wedge | "
                  "oscillation | rho | simple")
      ->required();
  cmd->add_option("perm", a->perm, "permutation, e.g. \"2 4 1 3\"")->required();
  cmd->add_option("--orient", a->orient, "orientation of the sawtooth");
  cmd->add_option("--type", a->type, "sliced wedge type (1-3)");
  cmd->callback([&ctx, a] {
    const Permutation p = parse_permutation(a->perm);
    const Symmetry g = parse_orient(a->orient);
    if (a->kind == "simple") {
      ctx.out << json{{"simple", is_simple(p)}}.dump() << '\n';
      return;
    }
    if (a->kind == "rho") {
      ctx.out << json{{"kind", "rho"}, {"value", rho(p)}}.dump() << '\n';
      return;
    }
    Detection d;
    if (a->kind == "sum21") {
      d = longest_sum21(p);
    } else if (a->kind == "skew12") {
      d = longest_skew12(p);
    } else if (a->kind == "parallel-sawtooth") {
      d = max_sawtooth(p, StructureKind::ParallelSawtooth, g);
    } else if (a->kind == "wedge-sawtooth") {
      d = max_sawtooth(p, StructureKind::WedgeSawtooth, g);
    } else if (a->kind == "sliced-wedge") {
      d = max_sliced_wedge(p, a->type, g);
    } else if (a->kind == "oscillation") {
      d = max_increasing_oscillation(p);
    } else {
      throw CLI::ValidationError("kind", "unknown structure: " + a->kind);
    }
    ctx.out << json{{"kind", a->kind}, {"max", d.max}, {"witness", d.witness}}.dump() << '\n';
  });
}

void add_decompose(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("decompose", "Substitution decomposition");
  struct Args {
    std::string perm{};
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("perm", a->perm, "permutation")->required();
  cmd->callback([&ctx, a] {
    const Decomposition d = substitution_decompose(parse_permutation(a->perm));
    json parts = json::array(), blocks = json::array();
    std::string text;
    for (std::size_t k = 0; k < d.parts.size(); ++k) {
      parts.push_back(d.parts[k].to_string());
      blocks.push_back({d.blocks[k].first, d.blocks[k].last});
      text += (k ? " | " : "") + d.parts[k].to_string();
    }
    const std::string skeleton =
        d.kind == SkeletonKind::Simple
            ? d.skeleton.to_string()
            : std::string(to_string(d.kind)) + "(" + std::to_string(d.skeleton.size()) + ")";
    emit(ctx,
         {{"kind", std::string(to_string(d.kind))}, {"skeleton", skeleton}, {"parts", parts},
          {"blocks", blocks}},
         "skeleton: " + skeleton + "\nparts: " + text);
  });
}

void add_pins(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("pins", "Proper pin sequences");
  struct Args {
    std::string perm{};
    std::string start_word{};
    std::string letters{};
    std::string pin_list{};
    std::vector<int> start{};
    int max_len = 6;
  };
  auto a = std::make_shared<Args>();
  cmd->require_subcommand(1);

  auto* en = cmd->add_subcommand("enumerate", "All proper pin sequences from a start pair");
  en->add_option("perm", a->perm, "host permutation")->required();
  en->add_option("--start", a->start, "positions of p1 and p2")->expected(2)->required();
  en->add_option("--max-len", a->max_len, "longest sequence to list");
  en->callback([&ctx, a] {
    const Permutation host = parse_permutation(a->perm);
    const auto seqs = enumerate_pin_sequences(host, a->start[0], a->start[1], a->max_len);
    json arr = json::array();
    std::string text;
    for (const auto& s : seqs) {
      arr.push_back(pins_json(s));
      text += (text.empty() ? "" : "\n") + pins_text(s);
    }
    emit(ctx, {{"host", host.to_string()}, {"sequences", arr}}, text);
  });

  auto* word = cmd->add_subcommand("word", "Realize a pin word");
  word->add_option("start", a->start_word, "12 or 21")->required();
  word->add_option("letters", a->letters, "directions over L, R, U, D")->default_val("");
  word->callback([&ctx, a] {
    const RealizedPins r = realize_pin_word(parse_pin_word(a->start_word, a->letters));
    json j = pins_json(r.sequence);
    j["perm"] = r.perm.to_string();
    emit(ctx, j, r.perm.to_string());
  });

  auto* rr = cmd->add_subcommand("right-reach", "Shortest right-reaching pin sequence");
  rr->add_option("perm", a->perm, "host permutation")->required();
  rr->add_option("--start", a->start, "positions of p1 and p2")->expected(2)->required();
  rr->callback([&ctx, a] {
    const Permutation host = parse_permutation(a->perm);
    const PinSequence s = right_reaching(host, a->start[0], a->start[1]);
    emit(ctx, pins_json(s), pins_text(s));
  });

  auto* ex = cmd->add_subcommand("extensions", "Extensions of a spiral pin sequence");
  ex->add_option("perm", a->perm, "host permutation")->required();
  ex->add_option("--pins", a->pin_list, "spiral pin positions in order")->required();
  ex->callback([&ctx, a] {
    const Permutation host = parse_permutation(a->perm);
    const auto checked = validate_pin_sequence(host, parse_ints(a->pin_list));
    if (const auto* v = std::get_if<PinViolation>(&checked)) {
      throw Error(ErrorCode::Param, "not a proper pin sequence: " +
                                        std::string(to_string(v->clause)) + " fails at pin " +
                                        std::to_string(v->index));
    }
    const auto records = find_extensions(host, std::get<PinSequence>(checked));
    json arr = json::array();
    std::string text;
    for (const auto& r : records) {
      arr.push_back(extension_json(r));
      text += "pin " + std::to_string(r.pin) + " type " + std::to_string(r.type) + ":";
      for (int p : r.points) text += " " + std::to_string(p);
      text += "\n";
    }
    text += "extended pins: " + std::to_string(count_extended_pins(records));
    emit(ctx, {{"extensions", arr}, {"extended_pins", count_extended_pins(records)}}, text);
  });
}

void add_grid(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("grid", "Search for a monotone gridding");
  struct Args {
    std::string perm{};
    int h = 0;
    int v = 0;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("perm", a->perm, "permutation")->required();
  cmd->set_help_flag("--help", "Print this help message and exit");
  cmd->add_option("--h", a->h, "horizontal lines allowed");
  cmd->add_option("--v", a->v, "vertical lines allowed");
  cmd->callback([&ctx, a] {
    const Permutation p = parse_permutation(a->perm);
    const auto g = find_monotone_gridding(p, a->h, a->v);
    if (!g) {
      emit(ctx, {{"found", false}}, "NONE");
      return;
    }
    json hc = json::array(), vc = json::array(), cells = json::array();
    std::string text = "vertical cuts:";
    for (int c : g->v_cuts) {
      vc.push_back(c + 0.5);
      text += " " + half(c);
    }
    text += "\nhorizontal cuts:";
    for (int c : g->h_cuts) {
      hc.push_back(c + 0.5);
      text += " " + half(c);
    }
    text += "\ncells (columns left to right, rows bottom to top):";
    for (int col = 0; col < g->columns(); ++col) {
      json column = json::array();
      text += "\n ";
      for (int row = 0; row < g->rows(); ++row) {
        column.push_back(std::string(to_string(g->cell(col, row))));
        text += " " + std::string(to_string(g->cell(col, row)));
      }
      cells.push_back(column);
    }
    emit(ctx, {{"found", true}, {"h_cuts", hc}, {"v_cuts", vc}, {"cells", cells}}, text);
  });
}

void add_class(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("class", "Scans of finitely based classes");
  struct Args {
    std::string basis{};
    std::string report{};
    std::string cache_dir{};
    int max_len = 8;
    int pin_budget = 10;
  };
  auto a = std::make_shared<Args>();
  cmd->require_subcommand(1);

  auto* scan = cmd->add_subcommand("scan", "Obstruction maxima among simple members");
  scan->add_option("--basis", a->basis, "basis, e.g. \"321;2143\"")->required();
  scan->add_option("--max-len", a->max_len, "longest members to enumerate");
  scan->add_option("--report", a->report, "write the JSON report here");
  scan->add_option("--pin-budget", a->pin_budget, "longest pin sequences searched for turns");
  scan->add_option("--cache", a->cache_dir, "enumeration cache directory");
  scan->callback([&ctx, a] {
    const ClassSpec spec = ClassSpec::parse(a->basis);
    std::optional<EnumerationCache> cache;
    ScanOptions options;
    options.pin_budget = a->pin_budget;
    if (!a->cache_dir.empty()) {
      cache.emplace(a->cache_dir);
      options.enumeration.cache = &*cache;
    }
    const auto rows = obstruction_scan(spec, a->max_len, options);
    const json j = to_json(spec, rows, a->pin_budget);
    if (!a->report.empty()) {
      std::ofstream f(a->report);
      if (!f) throw Error(ErrorCode::Param, "cannot write " + a->report);
      f << j.dump(2) << '\n';
    }
    std::ostringstream t;
    t << "n  members  simples  sum21  skew12  parallel  sliced1  sliced2  sliced3  turns>=  ext>=";
    for (const auto& r : rows) {
      t << '\n'
        << r.n << "  " << r.members << "  " << r.simples << "  " << r.sum21.max << "  "
        << r.skew12.max << "  " << r.parallel_sawtooth.max << "  " << r.sliced_wedge[0].max
        << "  " << r.sliced_wedge[1].max << "  " << r.sliced_wedge[2].max << "  "
        << r.turns.max << "  " << r.extensions.max;
    }
    emit(ctx, j, t.str());
  });

  auto* crit = cmd->add_subcommand("criterion", "Longest sums of 21 and skew sums of 12");
  crit->add_option("--basis", a->basis, "basis, e.g. \"123\"")->required();
  crit->add_option("--max-len", a->max_len, "longest members to enumerate");
  crit->callback([&ctx, a] {
    const ClassSpec spec = ClassSpec::parse(a->basis);
    json arr = json::array();
    std::ostringstream t;
    t << "n  max_sum21  max_skew12";
    for (const auto& r : criterion_scan(spec, a->max_len)) {
      const auto w = [](const Witnessed& x) {
        return x.perm ? json{{"perm", x.perm->to_string()}, {"positions", x.positions}}
                      : json(nullptr);
      };
      arr.push_back({{"n", r.n},
                     {"max_sum21", r.sum21.max},
                     {"max_skew12", r.skew12.max},
                     {"witnesses", {{"sum21", w(r.sum21)}, {"skew12", w(r.skew12)}}}});
      t << '\n' << r.n << "  " << r.sum21.max << "  " << r.skew12.max;
    }
    json basis_json = json::array();
    for (const auto& b : spec.basis()) basis_json.push_back(b.to_string());
    emit(ctx, {{"basis", basis_json}, {"lengths", arr}}, t.str());
  });
}

void add_bounds(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("bounds", "Exact values of the bound functions");
  struct Args {
    std::string which{};
    std::vector<long> args{};
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("which", a->which, "g M S | f N | h M P S | rect L M")->required();
  cmd->add_option("args", a->args, "arguments")->required();
  cmd->callback([&ctx, a] {
    const std::map<std::string, std::size_t> arity{{"g", 2}, {"f", 1}, {"h", 3}, {"rect", 2}};
    const auto it = arity.find(a->which);
    if (it == arity.end()) throw CLI::ValidationError("which", "unknown bound: " + a->which);
    if (a->args.size() != it->second) {
      throw CLI::ValidationError("args", a->which + " takes " + std::to_string(it->second) +
                                             " arguments");
    }
    BoundValue v;
    if (a->which == "g") v = bound_g(a->args[0], a->args[1]);
    if (a->which == "f") v = bound_f(a->args[0]);
    if (a->which == "h") v = bound_h(a->args[0], a->args[1], a->args[2]);
    if (a->which == "rect") v = bound_rect(a->args[0], a->args[1]);
    const std::string s = to_string(v);
    emit(ctx, {{"bound", a->which}, {"args", a->args}, {"value", s}}, s);
  });
}

void add_verify(CLI::App& app, Context& ctx, int& status) {
  auto* cmd = app.add_subcommand("verify", "Run a lemma suite");
  struct Args {
    std::string suite{};
    int max_len = 0;
    int jobs = 1;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("suite", a->suite,
                  "decomposition | pins | turns | intervals | slicing | corners | extensions | all")
      ->required();
  cmd->add_option("--max-len", a->max_len, "override the suite's size limit");
  cmd->add_option("--jobs", a->jobs, "worker threads");
  cmd->callback([&ctx, &status, a] {
    const auto results = run_suite(a->suite, {a->max_len, a->jobs});
    json arr = json::array();
    std::ostringstream t;
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.passed();
      json j{{"name", r.name}, {"claim", r.claim}, {"checked", r.checked},
             {"failures", r.failures}, {"seconds", r.seconds}};
      if (r.counterexample) j["counterexample"] = *r.counterexample;
      if (!r.note.empty()) j["note"] = r.note;
      arr.push_back(j);
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
      t << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checked, "
        << r.failures << " failures (" << secs << " s)";
      if (r.counterexample) t << "\n     first counterexample: " << *r.counterexample;
      if (!r.note.empty()) t << "\n     note: " << r.note;
      t << '\n';
    }
    if (ctx.json_mode) {
      ctx.out << json{{"suite", a->suite}, {"results", arr}, {"passed", ok}}.dump() << '\n';
    } else {
      ctx.out << t.str();
    }
    if (!ok) status = 1;
  });
}

void add_plot(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("plot", "SVG plot with overlays");
  struct Args {
    std::string perm{};
    std::string pins{};
    std::string hollow{};
    std::string output{};
    std::string rects{};
    std::vector<int> grid{};
    int size = 400;
    bool mark_extensions = false;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("perm", a->perm, "permutation")->required();
  cmd->add_option("--pins", a->pins, "pin positions in order (drawn as arrows)");
  cmd->add_flag("--extensions", a->mark_extensions, "hollow markers on the spiral's extensions");
  cmd->add_option("--hollow", a->hollow, "positions drawn hollow");
  cmd->add_option("--rect", a->rects, "rectangles as x1,x2,y1,y2;...");
  cmd->add_option("--grid", a->grid, "overlay a gridding found with H V lines")->expected(2);
  cmd->add_option("--size", a->size, "width and height in pixels");
  cmd->add_option("-o,--output", a->output, "write to a file instead of standard output");
  cmd->callback([&ctx, a] {
    PlotSpec spec;
    spec.perm = parse_permutation(a->perm);
    spec.size = a->size;
    spec.hollow = parse_ints(a->hollow);
    if (!a->pins.empty()) {
      const auto positions = parse_ints(a->pins);
      for (int p : positions) {
        if (p < 1 || p > spec.perm.size()) throw Error(ErrorCode::Plot, "pin outside the permutation");
      }
      const auto checked = validate_pin_sequence(spec.perm, positions);
      if (const auto* s = std::get_if<PinSequence>(&checked)) {
        spec.pins = *s;
      } else {
        spec.pins = PinSequence{positions, std::vector<Direction>(positions.size(), Direction::None)};
      }
      if (a->mark_extensions) {
        if (!std::holds_alternative<PinSequence>(checked) || !classify_spiral(*spec.pins).spiral) {
          throw Error(ErrorCode::Param, "--extensions needs a proper spiral");
        }
        for (const auto& r : find_extensions(spec.perm, *spec.pins)) {
          spec.hollow.insert(spec.hollow.end(), r.points.begin(), r.points.end());
        }
        std::sort(spec.hollow.begin(), spec.hollow.end());
        spec.hollow.erase(std::unique(spec.hollow.begin(), spec.hollow.end()), spec.hollow.end());
      }
    } else if (a->mark_extensions) {
      throw Error(ErrorCode::Param, "--extensions needs --pins");
    }
    std::istringstream rs(a->rects);
    std::string item;
    while (std::getline(rs, item, ';')) {
      if (item.find_first_not_of(" ") == std::string::npos) continue;
      const auto v = parse_ints(item);
      if (v.size() != 4) throw Error(ErrorCode::Parse, "rectangle needs x1,x2,y1,y2");
      spec.rectangles.push_back({v[0], v[1], v[2], v[3]});
    }
    if (!a->grid.empty()) {
      const auto g = find_monotone_gridding(spec.perm, a->grid[0], a->grid[1]);
      if (!g) throw Error(ErrorCode::NotFound, "no gridding with that many lines");
      spec.h_lines = g->h_cuts;
      spec.v_lines = g->v_cuts;
    }
    const std::string svg = plot_svg(spec);
    if (a->output.empty()) {
      ctx.out << svg;
    } else {
      std::ofstream f(a->output);
      if (!f) throw Error(ErrorCode::Param, "cannot write " + a->output);
      f << svg;
    }
  });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple permutations, pin sequences and monotone griddability", "permgrid"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out};
  int status = 0;
  app.add_flag("--json", ctx.json_mode, "machine-readable output");
  add_gen(app, ctx);
  add_detect(app, ctx);
  add_decompose(app, ctx);
  add_pins(app, ctx);
  add_grid(app, ctx);
  add_class(app, ctx);
  add_bounds(app, ctx);
  add_verify(app, ctx, status);
  add_plot(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    err << json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}
               .dump()
        << '\n';
    return 1;
  }
  return status;
}

}  // namespace permgrid::cli

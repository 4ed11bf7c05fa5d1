#include "brauer/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "brauer/covering.hpp"
#include "brauer/graph_io.hpp"
#include "brauer/homotopy.hpp"
#include "brauer/models.hpp"
#include "brauer/moves.hpp"

namespace brauer {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

GraphFile load(const std::string& path, bool require_valid = true) {
  GraphFile f = parse_graph(read_file(path));
  if (require_valid) {
    const auto violations = validate(f.graph);
    if (!violations.empty()) throw Error("invalid graph: " + describe(f.graph, violations.front()));
  }
  return f;
}

std::string join(const std::multiset<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Grading grading_for(const GraphFile& f, const std::string& choice, const HalfEdgeSet& subset) {
  if (choice == "file") {
    if (!f.grading) throw Error("the file has no grading section");
    if (!grading_is_valid(f.graph, *f.grading)) throw Error("the grading in the file is not admissible");
    return *f.grading;
  }
  if (choice == "default") return default_grading(f.graph, subset);
  if (f.grading) return grading_for(f, "file", subset);
  return default_grading(f.graph, subset);
}

std::string complex_text(const AlgebraTable& a, const Complex& c) {
  auto sum = [&](const std::vector<int>& vs) {
    if (vs.empty()) return std::string("0");
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : " + ") + ("P" + a.vertex_labels()[v]);
    return s;
  };
  return sum(c.minus_one) + " -> " + sum(c.zero);
}

struct Options {
  bool json = false;
  std::string file;
  std::string dot;
  std::string edges;
  std::string delta;
  std::string grading = "auto";
  std::string output;
  bool verify = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file, false);
  const auto violations = validate(f.graph);
  if (o.json) {
    json j{{"valid", violations.empty()}, {"violations", json::array()}};
    for (const auto& v : violations) j["violations"].push_back(describe(f.graph, v));
    out << j.dump(2) << "\n";
  } else if (violations.empty()) {
    out << "valid\n";
  } else {
    for (const auto& v : violations) out << describe(f.graph, v) << "\n";
  }
  return violations.empty() ? 0 : 1;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const OZInvariants z = oz_invariants(f.graph);
  if (o.json) {
    json j{{"edges", z.edge_count},
           {"circ_vertices", z.circ_vertex_count},
           {"cross_vertices", z.cross_vertex_count},
           {"multiplicities", std::vector<int>(z.multiplicities.begin(), z.multiplicities.end())},
           {"bipartite", z.bipartite}};
    if (z.face_count >= 0) {
      j["faces"] = z.face_count;
      j["perimeters"] = std::vector<int>(z.perimeters.begin(), z.perimeters.end());
    } else {
      j["faces"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "edges: " << z.edge_count << "\n";
  out << "circ vertices: " << z.circ_vertex_count << "\n";
  out << "cross vertices: " << z.cross_vertex_count << "\n";
  if (z.face_count >= 0) {
    out << "faces: " << z.face_count << "\n";
    out << "perimeters:" << (z.perimeters.empty() ? "" : " ") << join(z.perimeters) << "\n";
  } else {
    out << "faces: undefined for skew graphs\n";
  }
  out << "multiplicities: " << join(z.multiplicities) << "\n";
  out << "bipartite: " << (z.bipartite ? "true" : "false") << "\n";
  return 0;
}

int cmd_quiver(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const Presentation p = presentation(f.graph);
  if (!o.dot.empty()) {
    write_output(o.dot, quiver_dot(p), out);
    if (o.dot == "-") return 0;
  }
  if (o.json) {
    json j{{"vertices", json::array()}, {"arrows", json::array()}};
    for (const auto& v : p.quiver.vertices) j["vertices"].push_back(v.label);
    for (const auto& a : p.quiver.arrows)
      j["arrows"].push_back({{"label", a.label},
                             {"source", p.quiver.vertices[a.source].label},
                             {"target", p.quiver.vertices[a.target].label}});
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "vertices:";
  for (const auto& v : p.quiver.vertices) out << " " << v.label;
  out << "\narrows:\n";
  for (const auto& a : p.quiver.arrows)
    out << "  " << a.label << ": " << p.quiver.vertices[a.source].label << " -> " << p.quiver.vertices[a.target].label
        << "\n";
  return 0;
}

int cmd_relations(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const Presentation p = presentation(f.graph);
  if (o.json) {
    json j = json::array();
    for (const auto& r : p.relations) j.push_back(format_relation(p.quiver, r));
    out << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& r : p.relations) out << format_relation(p.quiver, r) << "\n";
  return 0;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const int dim = algebra_model(f.graph).table.dim();
  const int formula = f.graph.is_skew() ? truncation_dimension_formula(cover({f.graph, zero_grading(f.graph)}))
                                        : bga_dimension_formula(f.graph);
  if (o.json) {
    out << json{{"dim", dim}, {"formula", formula}}.dump(2) << "\n";
  } else {
    out << "dim: " << dim << "\n";
    out << (f.graph.is_skew() ? "covering formula: " : "vertex formula: ") << formula << "\n";
  }
  return 0;
}

int cmd_cartan(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const AlgebraTable a = algebra_model(f.graph).table;
  const auto c = cartan(a);
  if (o.json) {
    out << json{{"vertices", a.vertex_labels()}, {"cartan", c}, {"det", cartan_determinant(a)}}.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 3;
  for (const auto& l : a.vertex_labels()) width = std::max(width, l.size() + 1);
  auto pad = [&](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  out << pad("");
  for (const auto& l : a.vertex_labels()) out << pad(l);
  out << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << pad(a.vertex_labels()[i]);
    for (int x : c[i]) out << pad(std::to_string(x));
    out << "\n";
  }
  out << "det: " << cartan_determinant(a) << "\n";
  return 0;
}

int cmd_move(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const HalfEdgeSet subset = parse_edge_list(f, o.edges);
  const Grading d = grading_for(f, o.grading, subset);
  const GradedGraph moved = move_set(GradedGraph{f.graph, d}, subset);
  GraphFile result{moved.graph, moved.grading, f.edge_aliases};
  write_output(o.output, emit_graph(result), out);
  return 0;
}

int cmd_cover(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const CoveredGraph c = cover({f.graph, grading_for(f, o.grading, {})});
  write_output(o.output, emit_graph(GraphFile{c.total, std::nullopt, {}}), out);
  return 0;
}

int cmd_check_commute(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const HalfEdgeSet subset = parse_edge_list(f, o.edges);
  const CommuteReport r = check_cover_commutes({f.graph, grading_for(f, o.grading, subset)}, subset);
  if (o.json) {
    out << json{{"commutes", r.commutes}, {"detail", r.detail}}.dump(2) << "\n";
  } else {
    out << "commutes: " << (r.commutes ? "true" : "false") << "\n";
    if (!r.commutes && !r.detail.empty()) out << r.detail << "\n";
  }
  return r.commutes ? 0 : 1;
}

int cmd_mutate(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const HalfEdgeSet subset = parse_edge_list(f, o.edges);
  const AlgebraModel model = algebra_model(f.graph);
  const auto t = mutation_object(model.table, moved_vertices(f.graph, model.quiver, subset));
  json j{{"summands", json::array()}};
  std::ostringstream text;
  for (const auto& c : t) {
    j["summands"].push_back({{"label", c.label}, {"complex", complex_text(model.table, c)}});
    text << "T[" << c.label << "] = " << complex_text(model.table, c) << "\n";
  }
  int code = 0;
  if (o.verify) {
    const MutationReport r = verify_mutation(f.graph, subset);
    auto yes = [](bool b) { return b ? "true" : "false"; };
    j["silting"] = r.silting;
    j["tilting"] = r.tilting;
    j["approximations_minimal"] = r.approximations;
    j["end_dim"] = r.end_dimension;
    j["moved_dim"] = r.moved_dimension;
    j["cartan_equal"] = r.cartan_equal;
    j["symmetric"] = r.symmetric;
    j["associative"] = r.laws;
    j["ok"] = r.ok();
    text << "silting: " << yes(r.silting) << "\n";
    text << "tilting: " << yes(r.tilting) << "\n";
    text << "approximations minimal: " << yes(r.approximations) << "\n";
    text << "dim End(T): " << r.end_dimension << "\n";
    text << "dim of the moved graph's algebra: " << r.moved_dimension << "\n";
    text << "cartan equal: " << yes(r.cartan_equal) << "\n";
    text << "cartan symmetric: " << yes(r.symmetric) << "\n";
    text << "End(T) associative: " << yes(r.laws) << "\n";
    text << "verified: " << yes(r.ok()) << "\n";
    if (!r.ok()) {
      text << r.detail << "\n";
      code = 1;
    }
  }
  out << (o.json ? j.dump(2) + "\n" : text.str());
  return code;
}

int cmd_cut(const Options& o, std::ostream& out) {
  const GraphFile f = load(o.file);
  const HalfEdgeSet delta = parse_halfedge_list(f.graph, o.delta);
  const Presentation cut = admissible_cut(f.graph, delta);
  const PathQuotient algebra(cut, nonzero_path_bound(f.graph) + 1);
  const int triv = trivial_extension(algebra.table()).dim();
  const int whole = algebra_model(f.graph).table.dim();
  const CoverCut covering = cover_cut(cover({f.graph, zero_grading(f.graph)}), delta);
  const bool gentle = is_gentle(covering.presentation);
  if (o.json) {
    json j{{"arrows", json::array()}, {"relations", json::array()}, {"dim_cut", algebra.dim()},
           {"dim_trivial_extension", triv}, {"dim_algebra", whole}, {"covering_cut_gentle", gentle}};
    for (const auto& a : cut.quiver.arrows) j["arrows"].push_back(a.label);
    for (const auto& r : cut.relations) j["relations"].push_back(format_relation(cut.quiver, r));
    out << j.dump(2) << "\n";
  } else {
    out << "arrows:";
    for (const auto& a : cut.quiver.arrows) out << " " << a.label;
    out << "\nrelations:\n";
    for (const auto& r : cut.relations) out << "  " << format_relation(cut.quiver, r) << "\n";
    out << "dim of the cut algebra: " << algebra.dim() << "\n";
    out << "dim of its trivial extension: " << triv << "\n";
    out << "dim of the graph algebra: " << whole << "\n";
    out << "covering cut gentle: " << (gentle ? "true" : "false") << "\n";
  }
  return triv == whole && gentle ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Brauer graphs, Kauer moves and their algebras", "brauer"};
  app.add_flag("--json", o.json, "Machine-readable output and errors");
  app.require_subcommand(1);

  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Graph file")->required();
    return sub;
  };
  auto* validate_cmd = file_command("validate", "Report violated graph axioms");
  auto* invariants_cmd = file_command("invariants", "Edges, vertices, faces, multiplicities, bipartiteness");
  auto* quiver_cmd = file_command("quiver", "Quiver of the algebra");
  quiver_cmd->add_option("--dot", o.dot, "Write DOT to this path ('-' for standard output)");
  auto* relations_cmd = file_command("relations", "Generating relations");
  auto* dim_cmd = file_command("dim", "Dimension of the algebra");
  auto* cartan_cmd = file_command("cartan", "Cartan matrix");
  auto* move_cmd = file_command("move", "Graded Kauer move of the listed edges");
  move_cmd->add_option("--edges", o.edges, "Comma-separated edge names")->required();
  move_cmd->add_option("--grading", o.grading, "default or file (file when present, else default)")
      ->check(CLI::IsMember({"auto", "default", "file"}));
  move_cmd->add_option("-o,--output", o.output, "Output path");
  auto* cover_cmd = file_command("cover", "Covering graph of the graded graph");
  cover_cmd->add_option("--grading", o.grading, "default or file")->check(CLI::IsMember({"auto", "default", "file"}));
  cover_cmd->add_option("-o,--output", o.output, "Output path");
  auto* commute_cmd = file_command("check-commute", "Check that covering commutes with the move");
  commute_cmd->add_option("--edges", o.edges, "Comma-separated edge names")->required();
  commute_cmd->add_option("--grading", o.grading, "default or file")->check(CLI::IsMember({"auto", "default", "file"}));
  auto* mutate_cmd = file_command("mutate", "Left mutation at the projectives of the listed edges");
  mutate_cmd->add_option("--edges", o.edges, "Comma-separated edge names")->required();
  mutate_cmd->add_flag("--verify", o.verify, "Check tilting and compare End(T) with the moved graph");
  auto* cut_cmd = file_command("cut", "Admissible cut and trivial extension check");
  cut_cmd->add_option("--delta", o.delta, "Comma-separated half-edges, one per σ-orbit")->required();

  std::vector<const char*> argv{"brauer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  const bool json_errors = std::find(args.begin(), args.end(), "--json") != args.end();
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (json_errors && e.get_exit_code() != 0) {
      err << json{{"error", e.what()}}.dump() << "\n";
      return 2;
    }
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (invariants_cmd->parsed()) return cmd_invariants(o, out);
    if (quiver_cmd->parsed()) return cmd_quiver(o, out);
    if (relations_cmd->parsed()) return cmd_relations(o, out);
    if (dim_cmd->parsed()) return cmd_dim(o, out);
    if (cartan_cmd->parsed()) return cmd_cartan(o, out);
    if (move_cmd->parsed()) return cmd_move(o, out);
    if (cover_cmd->parsed()) return cmd_cover(o, out);
    if (commute_cmd->parsed()) return cmd_check_commute(o, out);
    if (mutate_cmd->parsed()) return cmd_mutate(o, out);
    if (cut_cmd->parsed()) return cmd_cut(o, out);
  } catch (const ParseError& e) {
    if (o.json) err << json{{"error", e.what()}, {"line", e.line()}, {"column", e.column()}}.dump() << "\n";
    else err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (o.json) err << json{{"error", e.what()}}.dump() << "\n";
    else err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace brauer

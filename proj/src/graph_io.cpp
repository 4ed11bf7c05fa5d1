#include "brauer/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace brauer {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '=' && c != ',' &&
         c != '#' && c != ':';
}

const std::vector<std::string> kSections{"halfedges", "pairing", "orientation", "multiplicity", "grading", "edges"};

struct Section {
  Token keyword;
  std::vector<std::vector<Token>> lines;  // tokens grouped by source line
};

std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> sections;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < raw.size();) {
      const char c = raw[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (is_name_char(c)) {
        std::size_t j = i;
        while (j < raw.size() && is_name_char(raw[j])) ++j;
        tokens.push_back({raw.substr(i, j - i), line_no, static_cast<int>(i) + 1});
        i = j;
      } else {
        tokens.push_back({std::string(1, c), line_no, static_cast<int>(i) + 1});
        ++i;
      }
    }
    if (tokens.empty()) continue;
    if (tokens.size() >= 2 && tokens[1].text == ":") {
      const Token& key = tokens[0];
      if (std::find(kSections.begin(), kSections.end(), key.text) == kSections.end())
        throw ParseError("unknown section '" + key.text + "'", key.line, key.column);
      for (const auto& s : sections)
        if (s.keyword.text == key.text) throw ParseError("section '" + key.text + "' repeated", key.line, key.column);
      sections.push_back({key, {}});
      tokens.erase(tokens.begin(), tokens.begin() + 2);
      if (tokens.empty()) continue;
    }
    if (sections.empty()) throw ParseError("expected a section keyword", tokens[0].line, tokens[0].column);
    sections.back().lines.push_back(std::move(tokens));
  }
  return sections;
}

const Section* find(const std::vector<Section>& sections, const std::string& key) {
  for (const auto& s : sections)
    if (s.keyword.text == key) return &s;
  return nullptr;
}

HalfEdge lookup(const std::map<std::string, HalfEdge>& names, const Token& t) {
  auto it = names.find(t.text);
  if (it == names.end()) throw ParseError("unknown half-edge '" + t.text + "'", t.line, t.column);
  return it->second;
}

// Product of disjoint cycles, as images of each index.
std::vector<int> parse_cycles(const Section* s, const std::map<std::string, HalfEdge>& names, int n) {
  std::vector<int> image(n);
  for (int k = 0; k < n; ++k) image[k] = k;
  if (!s) return image;
  std::vector<bool> seen(n, false);
  std::vector<Token> tokens;
  for (const auto& line : s->lines) tokens.insert(tokens.end(), line.begin(), line.end());
  for (std::size_t i = 0; i < tokens.size();) {
    if (tokens[i].text != "(") throw ParseError("expected '('", tokens[i].line, tokens[i].column);
    std::vector<HalfEdge> cycle;
    ++i;
    while (i < tokens.size() && tokens[i].text != ")") {
      if (tokens[i].text == "(" || tokens[i].text == "=" || tokens[i].text == ",")
        throw ParseError("unexpected '" + tokens[i].text + "'", tokens[i].line, tokens[i].column);
      HalfEdge h = lookup(names, tokens[i]);
      if (seen[h]) throw ParseError("cycles are not disjoint at '" + tokens[i].text + "'", tokens[i].line, tokens[i].column);
      seen[h] = true;
      cycle.push_back(h);
      ++i;
    }
    if (i == tokens.size()) throw ParseError("unclosed cycle", tokens.back().line, tokens.back().column);
    if (cycle.empty()) throw ParseError("empty cycle", tokens[i].line, tokens[i].column);
    for (std::size_t k = 0; k < cycle.size(); ++k) image[cycle[k]] = cycle[(k + 1) % cycle.size()];
    ++i;
  }
  return image;
}

struct Assignment {
  Token name;
  Token value;
};

std::vector<Assignment> parse_assignments(const Section* s) {
  std::vector<Assignment> out;
  if (!s) return out;
  for (const auto& line : s->lines) {
    if (line.size() != 3 || line[1].text != "=")
      throw ParseError("expected 'name = value'", line[0].line, line[0].column);
    out.push_back({line[0], line[2]});
  }
  return out;
}

long parse_integer(const Token& t) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size() || t.text.empty()) throw ParseError("expected an integer, got '" + t.text + "'", t.line, t.column);
  return v;
}

std::string format_cycles(const Cycles& cycles) {
  std::string s;
  for (const auto& c : cycles) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + c[k];
    s += ")";
  }
  return s;
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
  const auto sections = split_sections(text);
  std::vector<std::string> names;
  std::map<std::string, HalfEdge> index;
  if (const Section* s = find(sections, "halfedges")) {
    for (const auto& line : s->lines)
      for (const Token& t : line) {
        if (!is_name_char(t.text[0])) throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
        if (!index.emplace(t.text, static_cast<int>(names.size())).second)
          throw ParseError("half-edge '" + t.text + "' declared twice", t.line, t.column);
        names.push_back(t.text);
      }
  } else if (!sections.empty()) {
    throw ParseError("missing 'halfedges' section", sections[0].keyword.line, sections[0].keyword.column);
  }
  const int n = static_cast<int>(names.size());
  const Permutation pairing(parse_cycles(find(sections, "pairing"), index, n));
  const Permutation orientation(parse_cycles(find(sections, "orientation"), index, n));

  std::vector<int> multiplicity(n, 1);
  std::vector<int> set_on_line(n, 0);
  for (const auto& a : parse_assignments(find(sections, "multiplicity"))) {
    const HalfEdge h = lookup(index, a.name);
    const long m = parse_integer(a.value);
    if (m <= 0) throw ParseError("bad multiplicity " + a.value.text, a.value.line, a.value.column);
    for (HalfEdge x : orientation.orbit(h)) {
      if (set_on_line[x] && multiplicity[x] != m)
        throw ParseError("bad multiplicity: conflicts with line " + std::to_string(set_on_line[x]) + " on the σ-orbit",
                         a.value.line, a.value.column);
      multiplicity[x] = static_cast<int>(m);
      set_on_line[x] = a.value.line;
    }
  }
  GraphFile file{BrauerGraph(names, pairing, orientation, multiplicity), std::nullopt, {}};

  if (const Section* s = find(sections, "grading")) {
    Grading d{grading_modulus(file.graph), std::vector<int>(n, 0)};
    for (const auto& a : parse_assignments(s)) {
      const long k = parse_integer(a.value);
      d.degrees[lookup(index, a.name)] = static_cast<int>(((k % d.modulus) + d.modulus) % d.modulus);
    }
    file.grading = std::move(d);
  }
  for (const auto& a : parse_assignments(find(sections, "edges"))) {
    if (!file.edge_aliases.emplace(a.name.text, lookup(index, a.value)).second)
      throw ParseError("edge alias '" + a.name.text + "' repeated", a.name.line, a.name.column);
  }
  return file;
}

std::string emit_graph(const GraphFile& file) {
  const BrauerGraph& g = file.graph;
  std::ostringstream out;
  out << "halfedges:";
  for (const auto& name : g.names()) out << " " << name;
  out << "\npairing: " << format_cycles(to_cycles(g, g.pairing())) << "\n";
  out << "orientation: " << format_cycles(to_cycles(g, g.orientation())) << "\n";
  bool any = false;
  for (HalfEdge h = 0; h < g.size(); ++h)
    if (g.multiplicity(h) != 1) {
      if (!any) out << "multiplicity:\n";
      any = true;
      out << "  " << g.name(h) << " = " << g.multiplicity(h) << "\n";
    }
  if (file.grading) {
    out << "grading:\n";
    for (HalfEdge h = 0; h < g.size(); ++h)
      if (file.grading->degrees[h] != 0) out << "  " << g.name(h) << " = " << file.grading->degrees[h] << "\n";
  }
  if (!file.edge_aliases.empty()) {
    out << "edges:\n";
    for (const auto& [alias, h] : file.edge_aliases) out << "  " << alias << " = " << g.name(h) << "\n";
  }
  return out.str();
}

std::map<std::string, int> edge_names(const GraphFile& file) {
  std::map<std::string, int> out;
  for (const auto& [alias, h] : file.edge_aliases) out.emplace(alias, file.graph.edge_of(h));
  const auto edges = file.graph.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) out.emplace(file.graph.edge_label(edges[e]), e);
  return out;
}

HalfEdgeSet parse_edge_list(const GraphFile& file, const std::string& list) {
  const auto names = edge_names(file);
  const auto edges = file.graph.edges();
  HalfEdgeSet out;
  for (const auto& item : split_list(list)) {
    auto it = names.find(item);
    if (it == names.end()) throw Error("unknown edge '" + item + "'");
    out.insert(edges[it->second].first);
    out.insert(edges[it->second].second);
  }
  return out;
}

HalfEdgeSet parse_halfedge_list(const BrauerGraph& g, const std::string& list) {
  HalfEdgeSet out;
  for (const auto& item : split_list(list)) out.insert(g.index(item));
  return out;
}

std::string quiver_dot(const Presentation& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(name) << "\" {\n";
  out << "  // relations\n";
  for (const auto& r : p.relations) out << "  // " << format_relation(p.quiver, r) << "\n";
  for (std::size_t v = 0; v < p.quiver.vertices.size(); ++v)
    out << "  v" << v << " [label=\"" << dot_escape(p.quiver.vertices[v].label) << "\"];\n";
  for (const auto& a : p.quiver.arrows)
    out << "  v" << a.source << " -> v" << a.target << " [label=\"" << dot_escape(a.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace brauer

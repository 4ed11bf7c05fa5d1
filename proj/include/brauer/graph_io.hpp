#pragma once

#include <map>
#include <optional>
#include <string>

#include "brauer/graph.hpp"
#include "brauer/quiver.hpp"

namespace brauer {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Contents of a graph file: the graph, its grading when the file has one,
// and extra names for edges.
struct GraphFile {
  BrauerGraph graph;
  std::optional<Grading> grading;
  std::map<std::string, HalfEdge> edge_aliases;  // alias -> some half-edge of the edge
};

// Sections start with `keyword:` and run until the next keyword:
//   halfedges:    names separated by blanks
//   pairing:      disjoint cycles such as (1+ 1-)(2+ 2-); unlisted names are ι-fixed
//   orientation:  disjoint cycles; unlisted names are σ-fixed
//   multiplicity: lines `name = k`, setting the multiplicity of the whole σ-orbit
//   grading:      lines `name = k`, degrees reduced modulo the grading modulus
//   edges:        lines `alias = name`, naming the edge that contains `name`
// `#` starts a comment.
GraphFile parse_graph(const std::string& text);
std::string emit_graph(const GraphFile& file);

// Name of every edge: the aliases from the file first, then the label with
// the +/- suffix stripped.
std::map<std::string, int> edge_names(const GraphFile& file);
// All half-edges of the named edges; throws for unknown names.
HalfEdgeSet parse_edge_list(const GraphFile& file, const std::string& list);
HalfEdgeSet parse_halfedge_list(const BrauerGraph& g, const std::string& list);

std::string quiver_dot(const Presentation& p, const std::string& name = "quiver");

}  // namespace brauer

#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyac/json_io.hpp"
#include "polyac/poly.hpp"

namespace polyac {

/// Labelled circuit DAG: an arithmetic circuit minus its edge labels.
/// Edge order is significant; an EdgeAssignment supplies the labels.
class CircuitGraph {
 public:
  enum class GateKind { InputVar, ConstOne, Sum, Product, Output };

  struct Gate {
    std::string id;
    GateKind kind;
    int var = -1;  // InputVar only
  };

  struct Edge {
    int src;
    int dst;
  };

  CircuitGraph(std::vector<Gate> nodes, std::vector<Edge> edges,
               std::vector<int> outputs, int ninputs = -1)
      : nodes_(std::move(nodes)),
        edges_(std::move(edges)),
        outputs_(std::move(outputs)) {
    ninputs_ = 0;
    for (const auto& g : nodes_)
      if (g.kind == GateKind::InputVar) {
        if (g.var < 0) throw InvalidParams("input gate without variable index");
        ninputs_ = std::max(ninputs_, g.var + 1);
      }
    if (ninputs >= 0) {
      if (ninputs < ninputs_) throw InvalidParams("ninputs below max var index");
      ninputs_ = ninputs;
    }
    validate();
  }

  int ninputs() const { return ninputs_; }
  int noutputs() const { return static_cast<int>(outputs_.size()); }
  const std::vector<Gate>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& outputs() const { return outputs_; }

  /// Number of edges.
  int size() const { return static_cast<int>(edges_.size()); }

  /// Length of the longest directed path, in edges.
  int depth() const {
    std::vector<int> d(nodes_.size(), 0);
    for (int v : topo_) {
      for (const auto& e : in_.at(v))
        d[v] = std::max(d[v], d[edges_[e].src] + 1);
    }
    int m = 0;
    for (int x : d) m = std::max(m, x);
    return m;
  }

  /// Inductive degrees: constant 0, variable 1, sum = max, product = sum.
  std::vector<int> node_syntactic_degrees() const {
    std::vector<int> deg(nodes_.size(), 0);
    for (int v : topo_) {
      switch (nodes_[v].kind) {
        case GateKind::ConstOne:
          deg[v] = 0;
          break;
        case GateKind::InputVar:
          deg[v] = 1;
          break;
        case GateKind::Sum:
        case GateKind::Output: {
          int m = 0;
          for (const auto& e : in_.at(v)) m = std::max(m, deg[edges_[e].src]);
          deg[v] = m;
          break;
        }
        case GateKind::Product: {
          int s = 0;
          for (const auto& e : in_.at(v)) s += deg[edges_[e].src];
          deg[v] = s;
          break;
        }
      }
    }
    return deg;
  }

  int syntactic_degree() const {
    int m = 0;
    for (int d : node_syntactic_degrees()) m = std::max(m, d);
    return m;
  }

  /// Every child of every sum gate has the same syntactic degree.
  bool is_homogeneous() const {
    const auto deg = node_syntactic_degrees();
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      if (nodes_[v].kind != GateKind::Sum) continue;
      int d = -1;
      for (const auto& e : in_.at(v)) {
        const int cd = deg[edges_[e].src];
        if (d < 0) d = cd;
        if (cd != d) return false;
      }
    }
    return true;
  }

  /// Phi_G(a): the m-tuple computed at the ordered output gates when the
  /// ordered edges carry the labels a.  Each edge contributes label times
  /// the polynomial of its source.
  PolyMap evaluate(const std::vector<FieldElem>& labels) const {
    if (labels.size() != edges_.size())
      throw LengthMismatch("edge assignment length != edge count");
    std::vector<Poly> val(nodes_.size(), Poly(ninputs_));
    for (int v : topo_) {
      switch (nodes_[v].kind) {
        case GateKind::ConstOne:
          val[v] = Poly::constant(ninputs_, FieldElem(1));
          break;
        case GateKind::InputVar:
          val[v] = Poly::variable(ninputs_, nodes_[v].var);
          break;
        case GateKind::Sum:
        case GateKind::Output: {
          Poly s(ninputs_);
          for (const auto& e : in_.at(v))
            s += val[edges_[e].src] * labels[e];
          val[v] = std::move(s);
          break;
        }
        case GateKind::Product: {
          Poly p = Poly::constant(ninputs_, FieldElem(1));
          for (const auto& e : in_.at(v))
            p *= val[edges_[e].src] * labels[e];
          val[v] = std::move(p);
          break;
        }
      }
    }
    std::vector<Poly> comps;
    for (int o : outputs_) comps.push_back(val[o]);
    return PolyMap(std::move(comps));
  }

  /// Gamma_G(a) = H^r_{n,m}(Phi_G(a)) with r the syntactic degree.
  std::vector<FieldElem> gamma(const std::vector<FieldElem>& labels) const {
    return coeff_vector(evaluate(labels), syntactic_degree());
  }

  std::string to_dot() const {
    std::string s = "digraph circuit {\n";
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      std::string label;
      switch (nodes_[v].kind) {
        case GateKind::InputVar: label = "X" + std::to_string(nodes_[v].var + 1); break;
        case GateKind::ConstOne: label = "1"; break;
        case GateKind::Sum: label = "+"; break;
        case GateKind::Product: label = "*"; break;
        case GateKind::Output: label = "out"; break;
      }
      s += "  \"" + nodes_[v].id + "\" [label=\"" + label + "\"];\n";
    }
    for (std::size_t e = 0; e < edges_.size(); ++e)
      s += "  \"" + nodes_[edges_[e].src].id + "\" -> \"" +
           nodes_[edges_[e].dst].id + "\" [label=\"y" + std::to_string(e + 1) +
           "\"];\n";
    s += "}\n";
    return s;
  }

  static CircuitGraph from_json(const Json& j) {
    std::vector<Gate> nodes;
    std::map<std::string, int> index;
    for (const auto& nj : j.at("nodes")) {
      Gate g;
      g.id = nj.at("id").get<std::string>();
      const std::string kind = nj.at("kind").get<std::string>();
      if (kind == "input") {
        g.kind = GateKind::InputVar;
        g.var = nj.at("var").get<int>();
      } else if (kind == "one") {
        g.kind = GateKind::ConstOne;
      } else if (kind == "sum") {
        g.kind = GateKind::Sum;
      } else if (kind == "product") {
        g.kind = GateKind::Product;
      } else if (kind == "output") {
        g.kind = GateKind::Output;
      } else {
        throw InvalidParams("unknown gate kind: " + kind);
      }
      if (index.count(g.id)) throw InvalidParams("duplicate node id " + g.id);
      index[g.id] = static_cast<int>(nodes.size());
      nodes.push_back(std::move(g));
    }
    std::vector<Edge> edges;
    for (const auto& ej : j.at("edges"))
      edges.push_back({index.at(ej.at(0).get<std::string>()),
                       index.at(ej.at(1).get<std::string>())});
    std::vector<int> outputs;
    for (const auto& oj : j.at("outputs"))
      outputs.push_back(index.at(oj.get<std::string>()));
    int ninputs = j.contains("ninputs") ? j.at("ninputs").get<int>() : -1;
    return CircuitGraph(std::move(nodes), std::move(edges), std::move(outputs),
                        ninputs);
  }

  Json to_json() const {
    Json nodes = Json::array();
    for (const auto& g : nodes_) {
      Json nj{{"id", g.id}};
      switch (g.kind) {
        case GateKind::InputVar:
          nj["kind"] = "input";
          nj["var"] = g.var;
          break;
        case GateKind::ConstOne: nj["kind"] = "one"; break;
        case GateKind::Sum: nj["kind"] = "sum"; break;
        case GateKind::Product: nj["kind"] = "product"; break;
        case GateKind::Output: nj["kind"] = "output"; break;
      }
      nodes.push_back(std::move(nj));
    }
    Json edges = Json::array();
    for (const auto& e : edges_)
      edges.push_back({nodes_[e.src].id, nodes_[e.dst].id});
    Json outputs = Json::array();
    for (int o : outputs_) outputs.push_back(nodes_[o].id);
    return Json{{"nodes", nodes},
                {"edges", edges},
                {"outputs", outputs},
                {"ninputs", ninputs_}};
  }

 private:
  std::vector<Gate> nodes_;
  std::vector<Edge> edges_;
  std::vector<int> outputs_;
  std::vector<int> topo_;
  std::map<int, std::vector<std::size_t>> in_;  // node -> incoming edge indices
  int ninputs_;

  void validate() {
    const int nn = static_cast<int>(nodes_.size());
    std::vector<int> indeg(nn, 0), outdeg(nn, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& [src, dst] = edges_[e];
      if (src < 0 || src >= nn || dst < 0 || dst >= nn)
        throw InvalidParams("edge endpoint out of range");
      ++outdeg[src];
      ++indeg[dst];
      in_[dst].push_back(e);
    }
    for (int v = 0; v < nn; ++v) in_.try_emplace(v);
    for (int v = 0; v < nn; ++v) {
      const auto k = nodes_[v].kind;
      if ((k == GateKind::InputVar || k == GateKind::ConstOne) && indeg[v] != 0)
        throw InvalidParams("input gate " + nodes_[v].id + " has incoming edges");
    }
    for (int o : outputs_)
      if (o < 0 || o >= nn) throw InvalidParams("output index out of range");
    // Kahn topological sort
    std::vector<int> deg = indeg;
    std::vector<int> queue;
    for (int v = 0; v < nn; ++v)
      if (deg[v] == 0) queue.push_back(v);
    topo_.clear();
    std::vector<std::vector<int>> out_adj(nn);
    for (const auto& e : edges_) out_adj[e.src].push_back(e.dst);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      topo_.push_back(v);
      for (int w : out_adj[v])
        if (--deg[w] == 0) queue.push_back(w);
    }
    if (static_cast<int>(topo_.size()) != nn)
      throw CyclicGraph("circuit graph contains a directed cycle");
  }
};

}  // namespace polyac

#pragma once

// The Bass-Serre tree of H_2 = H_P *_{H_E} H_M.
//
// P-vertices are the cosets w H_P (reducing spheres, the vertices of the
// complex of reducing spheres), M-vertices are the cosets w H_M (barycentres
// of its 2-simplices) and edges are the cosets w H_E. A vertex is stored by
// the normal form of its coset representative with the H_E tail dropped
// and, if the last syllable lies in the stabiliser of the vertex, that
// syllable dropped as well. So a P-vertex label is empty or ends in an
// M-syllable, and an M-vertex label is empty or ends in a P-syllable.
//
// Two P-vertices span an edge of the complex of reducing spheres (their
// intersection number is 4) exactly when their tree distance is 2.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "goeritz/amalgam.hpp"
#include "goeritz/words.hpp"

namespace goeritz {

  enum class VertexKind : std::uint8_t { P, M };

  class Vertex {
   public:
    Vertex() = default;

    // Base vertex v_P or v_M.
    explicit Vertex(VertexKind kind) : _kind(kind) {}

    // The vertex x v_P or x v_M.
    Vertex(AmalgamElem const& x, VertexKind kind);

    VertexKind kind() const noexcept {
      return _kind;
    }

    std::vector<Syllable> const& label() const noexcept {
      return _label;
    }

    bool is_base() const noexcept {
      return _label.empty();
    }

    // The label as a group element (identity H_E tail).
    AmalgamElem representative() const;

    friend bool operator==(Vertex const&, Vertex const&) = default;
    friend bool operator<(Vertex const& x, Vertex const& y);

   private:
    VertexKind            _kind = VertexKind::P;
    std::vector<Syllable> _label;
  };

  inline Vertex const& v_p() {
    static Vertex const v{VertexKind::P};
    return v;
  }

  inline Vertex const& v_m() {
    static Vertex const v{VertexKind::M};
    return v;
  }

  Vertex vertex_of(Word const& w, VertexKind kind);

  // The image g v.
  Vertex translate(AmalgamElem const& g, Vertex const& v);

  std::size_t distance(Vertex const& u, Vertex const& v);

  // The unique path from u to v, both endpoints included.
  std::vector<Vertex> geodesic(Vertex const& u, Vertex const& v);

  // For an M-vertex w v_M: the three vertices w v_P, w delta v_P,
  // w delta^2 v_P. For a P-vertex w v_P: w beta^n v_M for -bound <= n <= bound
  // in increasing n. Throws precondition_error if twist_bound == 0.
  std::vector<Vertex> neighbors(Vertex const& v, std::size_t twist_bound);

  // Distance 2 between P-vertices. Throws precondition_error on M-vertices.
  bool gamma_adjacent(Vertex const& u, Vertex const& v);

  // The three P-vertices of the 2-simplex with barycentre m.
  std::array<Vertex, 3> triangle(Vertex const& m);

  struct Descent {
    Vertex u;     // the unique Gamma-neighbour of v closer to the target
    Vertex mate;  // third vertex of the 2-simplex spanned by v and u
  };

  // Requires P-vertices with distance(v, target) >= 4; throws
  // precondition_error otherwise.
  Descent descend(Vertex const& v, Vertex const& target);

  // Breadth first search from v_P through neighbors(., twist_bound).
  struct TreeBall {
    std::size_t radius      = 0;
    std::size_t twist_bound = 1;

    // In discovery order; vertices[0] is v_P.
    std::vector<Vertex>           vertices;
    std::vector<std::size_t>      parent;  // parent[0] == 0
    std::vector<std::size_t>      depth;
    std::map<Vertex, std::size_t> index;

    // Pairs (x, y) where y was already known when reached from x through a
    // non-parent edge. Empty for a tree.
    std::vector<std::pair<std::size_t, std::size_t>> cycle_witnesses;

    bool contains(Vertex const& v) const {
      return index.count(v) != 0;
    }

    std::size_t size() const noexcept {
      return vertices.size();
    }
  };

  TreeBall enumerate_ball(std::size_t radius, std::size_t twist_bound);

  // "P:<word>" or "M:<word>", the word in the usual grammar.
  Vertex      parse_vertex(std::string_view text);
  std::string to_string(Vertex const& v);

  // {"kind":"P","label":<amalgam JSON of the label>}
  nlohmann::ordered_json to_json(Vertex const& v);

}  // namespace goeritz

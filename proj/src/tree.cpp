#include "goeritz/tree.hpp"

#include <algorithm>
#include <deque>

#include "goeritz/errors.hpp"

namespace goeritz {

  namespace {
    Factor stabiliser(VertexKind kind) {
      return kind == VertexKind::P ? Factor::P : Factor::M;
    }

    std::size_t count_factor(std::vector<Syllable> const& s, Factor f) {
      return static_cast<std::size_t>(
          std::count_if(s.begin(), s.end(), [f](Syllable const& x) {
            return x.factor == f;
          }));
    }

    // The label of v relative to u, i.e. the label of u_rep^-1 v.
    std::vector<Syllable> relative_label(Vertex const& u, Vertex const& v) {
      if (u.is_base()) {
        return v.label();
      }
      return Vertex(inverse(u.representative()) * v.representative(),
                    v.kind())
          .label();
    }

    void require_kind(Vertex const& v, VertexKind kind, char const* what) {
      if (v.kind() != kind) {
        throw precondition_error(std::string(what) + ": expected "
                                 + (kind == VertexKind::P ? "a P" : "an M")
                                 + "-vertex, got " + to_string(v));
      }
    }
  }  // namespace

  Vertex::Vertex(AmalgamElem const& x, VertexKind kind)
      : _kind(kind), _label(x.syllables()) {
    if (!_label.empty() && _label.back().factor == stabiliser(kind)) {
      _label.pop_back();
    }
  }

  AmalgamElem Vertex::representative() const {
    AmalgamElem x;
    for (auto const& s : _label) {
      x.push(s);
    }
    return x;
  }

  bool operator<(Vertex const& x, Vertex const& y) {
    if (x._kind != y._kind) {
      return x._kind < y._kind;
    }
    return std::lexicographical_compare(
        x._label.begin(), x._label.end(), y._label.begin(), y._label.end());
  }

  Vertex vertex_of(Word const& w, VertexKind kind) {
    return Vertex(normal_form(w), kind);
  }

  Vertex translate(AmalgamElem const& g, Vertex const& v) {
    return Vertex(g * v.representative(), v.kind());
  }

  // Relative to a base vertex u, every syllable of the stabiliser factor of
  // u's opposite kind moves the path two edges further out; syllables of
  // u's own stabiliser only select which edge leaves the current vertex. A
  // far endpoint of the other kind adds the final odd edge.
  std::size_t distance(Vertex const& u, Vertex const& v) {
    auto const   label = relative_label(u, v);
    Factor const moves = u.kind() == VertexKind::P ? Factor::M : Factor::P;
    std::size_t  d     = 2 * count_factor(label, moves);
    if (u.kind() != v.kind()) {
      ++d;
    }
    return d;
  }

  std::vector<Vertex> geodesic(Vertex const& u, Vertex const& v) {
    auto const        label = relative_label(u, v);
    AmalgamElem const base  = u.representative();
    AmalgamElem       prefix;

    std::vector<Vertex> path{u};
    auto emit = [&](VertexKind kind) {
      path.push_back(Vertex(base * prefix, kind));
    };

    Factor const moves = u.kind() == VertexKind::P ? Factor::M : Factor::P;
    VertexKind const here  = u.kind();
    VertexKind const there = here == VertexKind::P ? VertexKind::M
                                                   : VertexKind::P;
    for (auto const& s : label) {
      if (s.factor == moves) {
        // prefix * there-vertex is fixed by s, then step across it.
        emit(there);
        prefix.push(s);
        emit(here);
      } else {
        prefix.push(s);
      }
    }
    if (v.kind() != u.kind()) {
      emit(there);
    }
    return path;
  }

  std::vector<Vertex> neighbors(Vertex const& v, std::size_t twist_bound) {
    if (twist_bound == 0) {
      throw precondition_error("neighbors: twist bound must be positive");
    }
    AmalgamElem const   rep = v.representative();
    std::vector<Vertex> result;
    if (v.kind() == VertexKind::M) {
      for (std::uint8_t k = 0; k < 3; ++k) {
        AmalgamElem x = rep;
        x.push(MElem{k, false, false});
        result.emplace_back(x, VertexKind::P);
      }
    } else {
      Integer const bound(twist_bound);
      for (Integer n = -bound; n <= bound; ++n) {
        AmalgamElem x = rep;
        x.push(PElem{n, false, false});
        result.emplace_back(x, VertexKind::M);
      }
    }
    return result;
  }

  bool gamma_adjacent(Vertex const& u, Vertex const& v) {
    require_kind(u, VertexKind::P, "gamma_adjacent");
    require_kind(v, VertexKind::P, "gamma_adjacent");
    return distance(u, v) == 2;
  }

  std::array<Vertex, 3> triangle(Vertex const& m) {
    require_kind(m, VertexKind::M, "triangle");
    auto n = neighbors(m, 1);
    return {n[0], n[1], n[2]};
  }

  Descent descend(Vertex const& v, Vertex const& target) {
    require_kind(v, VertexKind::P, "descend");
    require_kind(target, VertexKind::P, "descend");
    auto const path = geodesic(v, target);
    if (path.size() < 5) {
      throw precondition_error("descend: distance from " + to_string(v)
                               + " to " + to_string(target) + " is "
                               + std::to_string(path.size() - 1)
                               + ", need at least 4");
    }
    Vertex const& barycentre = path[1];
    Vertex const& u          = path[2];
    for (auto const& w : triangle(barycentre)) {
      if (w != v && w != u) {
        return {u, w};
      }
    }
    throw invariant_error("descend: degenerate triangle at "
                          + to_string(barycentre));
  }

  TreeBall enumerate_ball(std::size_t radius, std::size_t twist_bound) {
    TreeBall ball;
    ball.radius      = radius;
    ball.twist_bound = twist_bound;
    ball.vertices.push_back(v_p());
    ball.parent.push_back(0);
    ball.depth.push_back(0);
    ball.index.emplace(v_p(), 0);

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t const x = queue.front();
      queue.pop_front();
      if (ball.depth[x] == radius) {
        continue;
      }
      for (auto& y : neighbors(ball.vertices[x], twist_bound)) {
        auto it = ball.index.find(y);
        if (it != ball.index.end()) {
          if (x == 0 || it->second != ball.parent[x]) {
            ball.cycle_witnesses.emplace_back(x, it->second);
          }
          continue;
        }
        std::size_t const id = ball.vertices.size();
        ball.index.emplace(y, id);
        ball.vertices.push_back(std::move(y));
        ball.parent.push_back(x);
        ball.depth.push_back(ball.depth[x] + 1);
        queue.push_back(id);
      }
    }
    return ball;
  }

  Vertex parse_vertex(std::string_view text) {
    if (text.size() < 2 || text[1] != ':'
        || (text[0] != 'P' && text[0] != 'M')) {
      throw parse_error("malformed vertex literal '" + std::string(text)
                            + "' (expected P:<word> or M:<word>)",
                        0);
    }
    VertexKind const kind = text[0] == 'P' ? VertexKind::P : VertexKind::M;
    try {
      return vertex_of(parse_word(text.substr(2)), kind);
    } catch (parse_error const& e) {
      throw parse_error(e.what(), e.position() + 2);
    }
  }

  std::string to_string(Vertex const& v) {
    std::string result = v.kind() == VertexKind::P ? "P:" : "M:";
    return result + render(render(v.representative()));
  }

  nlohmann::ordered_json to_json(Vertex const& v) {
    nlohmann::ordered_json j;
    j["kind"]  = v.kind() == VertexKind::P ? "P" : "M";
    j["label"] = to_json(v.representative());
    return j;
  }

}  // namespace goeritz

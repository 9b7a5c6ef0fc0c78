// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "goeritz/amalgam.hpp"
#include "goeritz/cli.hpp"
#include "goeritz/factors.hpp"
#include "goeritz/homology.hpp"
#include "goeritz/tree.hpp"
#include "goeritz/words.hpp"

using namespace goeritz;

namespace {

  struct Check {
    std::vector<std::string> failures;

    void operator()(bool ok, std::string const& what) {
      if (!ok && failures.size() < 5) {
        failures.push_back(what);
      }
      if (!ok) {
        ++count;
      }
    }

    std::size_t count = 0;
  };

  Word w(std::string_view s) {
    return parse_word(s);
  }

  template <typename T, typename Mul>
  std::vector<T> closure(std::vector<T> const& gens, T const& one, Mul mul) {
    std::vector<T>  seen{one};
    std::deque<T>   queue{one};
    while (!queue.empty()) {
      T const x = queue.front();
      queue.pop_front();
      for (auto const& g : gens) {
        T const y = mul(x, g);
        if (std::find(seen.begin(), seen.end(), y) == seen.end()) {
          seen.push_back(y);
          queue.push_back(y);
        }
      }
    }
    return seen;
  }

  void relator_suite(Check& check) {
    std::size_t n = 0;
    for (auto const& f : relator_families()) {
      for (auto const& r : f.relators) {
        check(normal_form(r.word).is_identity(), f.name + " " + r.name);
        ++n;
      }
    }
    auto const fams = relator_families();
    check(fams.size() == 4 && fams[0].relators.size() == 8
              && fams[1].relators.size() == 5 && fams[2].relators.size() == 6
              && fams[3].relators.size() == 3,
          "family sizes 8, 5, 6, 3");
    check(n == 22, "22 relators");
    std::ostringstream out, err;
    check(cli::run({"relcheck"}, out, err) == 0, "relcheck exit code");
  }

  void constants(Check& check) {
    auto const he = closure<EElem>({{true, false}, {false, true}}, EElem{},
                                   [](EElem x, EElem y) { return x * y; });
    check(he.size() == 4, "|H_E| = 4");
    auto const hm = closure<MElem>(
        {*letter_image_m(Letter::alpha), *letter_image_m(Letter::gamma),
         *letter_image_m(Letter::delta)},
        MElem{},
        [](MElem x, MElem y) { return x * y; });
    check(hm.size() == 12, "|H_M| = 12");
    std::set<std::size_t> orders;
    for (auto const& x : hm) {
      orders.insert(element_order(x));
    }
    check(orders == std::set<std::size_t>{1, 2, 3, 6}, "H_M orders");
    check(order(w("a")) == 2u, "order(a)");
    check(order(w("g")) == 2u, "order(g)");
    check(order(w("ag")) == 2u, "order(ag)");
    check(order(w("d")) == 3u, "order(d)");
    check(!order(w("b")).has_value(), "order(b) infinite");
  }

  void normal_forms(Check& check) {
    std::mt19937_64                       rng(20240611);
    std::uniform_int_distribution<std::size_t> len(0, 40);
    for (std::uint64_t i = 0; i < 10000; ++i) {
      Word const u  = random_word(len(rng), rng());
      Word const v  = random_word(len(rng), rng());
      auto const nu = normal_form(u);
      check(normal_form(u * v) == nu * normal_form(v),
            "product " + render(u) + " " + render(v));
      check(normal_form(u * inverse(u)).is_identity(),
            "inverse " + render(u));
      check(normal_form(render(nu)) == nu, "render " + render(u));
      check(parse_word(render(render(nu))) == render(nu),
            "re-parse " + render(u));
    }
  }

  std::vector<std::vector<std::size_t>> adjacency(TreeBall const& ball) {
    std::vector<std::vector<std::size_t>> adj(ball.size());
    for (std::size_t i = 0; i < ball.size(); ++i) {
      for (auto const& n : neighbors(ball.vertices[i], ball.twist_bound)) {
        auto const it = ball.index.find(n);
        if (it != ball.index.end()) {
          adj[i].push_back(it->second);
        }
      }
    }
    return adj;
  }

  std::vector<std::size_t> bfs(
      std::vector<std::vector<std::size_t>> const& adj, std::size_t s) {
    std::vector<std::size_t> d(adj.size(), static_cast<std::size_t>(-1));
    std::deque<std::size_t>  q{s};
    d[s] = 0;
    while (!q.empty()) {
      auto const x = q.front();
      q.pop_front();
      for (auto y : adj[x]) {
        if (d[y] == static_cast<std::size_t>(-1)) {
          d[y] = d[x] + 1;
          q.push_back(y);
        }
      }
    }
    return d;
  }

  void tree_metric(Check& check, TreeBall const& big) {
    check(big.cycle_witnesses.empty(), "ball(8, 3) has no cycle witness");
    for (auto const& v : big.vertices) {
      auto const n = neighbors(v, 3);
      std::set<Vertex> const distinct(n.begin(), n.end());
      if (v.kind() == VertexKind::M) {
        check(n.size() == 3 && distinct.size() == 3,
              "degree 3 at " + to_string(v));
      } else {
        check(n.size() == 7 && distinct.size() == 7,
              "star size 7 at " + to_string(v));
      }
    }

    auto const small = enumerate_ball(6, 2);
    auto const adj   = adjacency(small);
    check(small.size() == 1096, "ball(6, 2) size");
    for (std::size_t i = 0; i < small.size(); ++i) {
      auto const d = bfs(adj, i);
      for (std::size_t j = 0; j < small.size(); ++j) {
        check(distance(small.vertices[i], small.vertices[j]) == d[j],
              "distance " + to_string(small.vertices[i]) + " "
                  + to_string(small.vertices[j]));
      }
    }
  }

  void descent(Check& check, TreeBall const& big) {
    std::size_t checked = 0;
    for (auto const& v : big.vertices) {
      if (v.kind() != VertexKind::P) {
        continue;
      }
      auto const d = distance(v, v_p());
      if (d < 4) {
        continue;
      }
      ++checked;
      try {
        auto const [u, mate] = descend(v, v_p());
        check(distance(u, v_p()) + 2 == d, "drop " + to_string(v));
        check(distance(mate, v_p()) == d, "mate level " + to_string(v));
        check(gamma_adjacent(mate, u), "mate adjacent " + to_string(v));
        std::size_t closer = 0, level = 0, other = 0;
        for (auto const& m : neighbors(v, big.twist_bound)) {
          for (auto const& x : triangle(m)) {
            if (x == v) {
              continue;
            }
            auto const dx = distance(x, v_p());
            if (dx + 2 == d) {
              ++closer;
              check(x == u, "unique closer " + to_string(v));
            } else if (dx == d) {
              ++level;
              check(x == mate, "unique mate " + to_string(v));
            } else {
              check(dx == d + 2, "farther by 2 " + to_string(v));
              ++other;
            }
          }
        }
        check(closer == 1 && level == 1 && other == 4 * big.twist_bound,
              "neighbour counts " + to_string(v));
      } catch (std::exception const& e) {
        check(false, "exception at " + to_string(v) + ": " + e.what());
      }
    }
    check(checked == 168 + 2016 + 24192, "number of vertices checked");
  }

  void homology(Check& check) {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
      Word const x = random_word(40, seed);
      check(represent(x) == represent(render(normal_form(x))),
            "homrep " + render(x));
    }
    for (auto const& f : relator_families()) {
      for (auto const& r : f.relators) {
        check(represent(r.word) == HomMatrix::identity(),
              "homrep relator " + r.name);
      }
    }
    try {
      auto const j = invariant_form();
      check(determinant(j) != 0, "det J");
      check(j.transpose() == -j, "J antisymmetric");
      for (Letter l : all_letters) {
        auto const m = generator_matrix(l);
        check(m.transpose() * j * m == j, "J invariant");
      }
    } catch (std::exception const& e) {
      check(false, e.what());
    }
  }

  void theta(Check& check) {
    for (auto const& f : relator_families()) {
      for (auto const& r : f.relators) {
        check(normal_form(theta_twist(r.word)).is_identity(),
              "theta " + f.name + " " + r.name);
      }
    }
    check(equal(theta_twist(w("ab")), w("aab")), "theta(ab)");
  }

  void geodesics(Check& check) {
    check(distance(v_p(), parse_vertex("P:d")) == 2, "dist(P:, P:d)");
    check(distance(v_p(), v_m()) == 1, "dist(P:, M:)");
    auto const path = geodesic(v_p(), parse_vertex("P:dbd"));
    std::vector<std::string> names;
    for (auto const& v : path) {
      names.push_back(to_string(v));
    }
    check(names
              == std::vector<std::string>{"P:", "M:", "P:d", "M:db",
                                          "P:dbd"},
          "geodesic(P:, P:dbd)");
  }

}  // namespace

int main() {
  auto const start = std::chrono::steady_clock::now();
  TreeBall const big = enumerate_ball(8, 3);

  struct Criterion {
    char const*                 name;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> const criteria{
      {"relator suite", relator_suite},
      {"exact constants", constants},
      {"normal form soundness", normal_forms},
      {"tree acyclicity and metric",
       [&](Check& c) { tree_metric(c, big); }},
      {"descent", [&](Check& c) { descent(c, big); }},
      {"homology oracle", homology},
      {"theta twist", theta},
      {"geodesic spot checks", geodesics},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].run(check);
    } catch (std::exception const& e) {
      check(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %zu. %s", check.count == 0 ? "PASS" : "FAIL", i + 1,
                criteria[i].name);
    if (check.count != 0) {
      ++failed;
      std::printf(" (%zu failures)", check.count);
    }
    std::printf("\n");
    for (auto const& f : check.failures) {
      std::printf("       %s\n", f.c_str());
    }
  }
  auto const secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  std::printf("%zu/%zu criteria passed in %.2fs\n",
              criteria.size() - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}

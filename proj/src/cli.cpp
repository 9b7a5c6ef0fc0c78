#include "goeritz/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "goeritz/amalgam.hpp"
#include "goeritz/errors.hpp"
#include "goeritz/homology.hpp"
#include "goeritz/tree.hpp"
#include "goeritz/words.hpp"

namespace goeritz::cli {

  namespace {
    using json = nlohmann::ordered_json;

    // Shells drop empty arguments, so "1" also spells the identity.
    Word word_arg(std::string const& s) {
      return s == "1" ? Word{} : parse_word(s);
    }

    Vertex vertex_arg(std::string const& s) {
      if (s.size() == 3 && s.substr(1) == ":1") {
        return parse_vertex(s.substr(0, 2));
      }
      return parse_vertex(s);
    }

    std::string word_text(Word const& w) {
      return w.empty() ? "1" : render(w);
    }

    std::string order_text(element_order_type const& o) {
      return o ? std::to_string(*o) : "infinite";
    }

    json order_json(element_order_type const& o) {
      return o ? json(*o) : json("infinite");
    }

    json matrix_json(HomMatrix const& m) {
      json rows = json::array();
      for (auto const& r : m.rows()) {
        rows.push_back(json(r));
      }
      return rows;
    }

    std::string matrix_text(HomMatrix const& m) {
      std::ostringstream os;
      for (auto const& r : m.rows()) {
        for (std::size_t j = 0; j < 4; ++j) {
          os << (j == 0 ? "" : " ") << std::setw(3) << r[j];
        }
        os << "\n";
      }
      return os.str();
    }

    json vertices_json(std::vector<Vertex> const& vs) {
      json a = json::array();
      for (auto const& v : vs) {
        a.push_back(to_json(v));
      }
      return a;
    }

    struct Options {
      bool        as_json = false;
      std::string w1, w2;
      std::size_t twist  = 1;
      std::size_t radius = 0;
    };

    // Each handler writes its result and returns the exit code.
    using Handler = std::function<int(Options const&, std::ostream&)>;

    int do_nf(Options const& o, std::ostream& out) {
      auto const x = normal_form(word_arg(o.w1));
      if (o.as_json) {
        out << to_json(x).dump() << "\n";
      } else {
        out << word_text(render(x)) << "\n";
      }
      return ok;
    }

    int do_eq(Options const& o, std::ostream& out) {
      bool const e = equal(word_arg(o.w1), word_arg(o.w2));
      if (o.as_json) {
        out << json{{"equal", e}}.dump() << "\n";
      } else {
        out << (e ? "true" : "false") << "\n";
      }
      return ok;
    }

    int do_order(Options const& o, std::ostream& out) {
      auto const k = order(word_arg(o.w1));
      if (o.as_json) {
        out << json{{"order", order_json(k)}}.dump() << "\n";
      } else {
        out << order_text(k) << "\n";
      }
      return ok;
    }

    int do_member(Options const& o, std::ostream& out) {
      auto const m = to_string(membership(word_arg(o.w1)));
      if (o.as_json) {
        out << json{{"membership", m}}.dump() << "\n";
      } else {
        out << m << "\n";
      }
      return ok;
    }

    int do_dist(Options const& o, std::ostream& out) {
      auto const d = distance(vertex_arg(o.w1), vertex_arg(o.w2));
      if (o.as_json) {
        out << json{{"distance", d}}.dump() << "\n";
      } else {
        out << d << "\n";
      }
      return ok;
    }

    int do_geodesic(Options const& o, std::ostream& out) {
      auto const path = geodesic(vertex_arg(o.w1), vertex_arg(o.w2));
      if (o.as_json) {
        json j;
        j["length"]   = path.size() - 1;
        j["vertices"] = vertices_json(path);
        out << j.dump() << "\n";
      } else {
        for (auto const& v : path) {
          out << to_string(v) << "\n";
        }
      }
      return ok;
    }

    int do_neighbors(Options const& o, std::ostream& out) {
      auto const v  = vertex_arg(o.w1);
      auto const ns = neighbors(v, o.twist);
      if (o.as_json) {
        json j;
        j["vertex"]    = to_json(v);
        j["twist"]     = o.twist;
        j["neighbors"] = vertices_json(ns);
        out << j.dump() << "\n";
      } else {
        for (auto const& n : ns) {
          out << to_string(n) << "\n";
        }
      }
      return ok;
    }

    int do_descend(Options const& o, std::ostream& out) {
      auto const [u, mate] = descend(vertex_arg(o.w1), vertex_arg(o.w2));
      if (o.as_json) {
        json j;
        j["u"]    = to_json(u);
        j["mate"] = to_json(mate);
        out << j.dump() << "\n";
      } else {
        out << "u: " << to_string(u) << "\n"
            << "mate: " << to_string(mate) << "\n";
      }
      return ok;
    }

    int do_ball(Options const& o, std::ostream& out) {
      if (o.twist == 0) {
        throw precondition_error("ball: twist bound must be positive");
      }
      auto const ball = enumerate_ball(o.radius, o.twist);

      std::vector<std::size_t> per_depth(o.radius + 1, 0);
      std::size_t              p_count = 0;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        ++per_depth[ball.depth[i]];
        p_count += ball.vertices[i].kind() == VertexKind::P;
      }
      if (o.as_json) {
        json j;
        j["radius"]          = o.radius;
        j["twist"]           = o.twist;
        j["vertices"]        = ball.size();
        j["p_vertices"]      = p_count;
        j["m_vertices"]      = ball.size() - p_count;
        j["per_depth"]       = per_depth;
        j["cycle_witnesses"] = ball.cycle_witnesses.size();
        out << j.dump() << "\n";
      } else {
        out << "radius " << o.radius << ", twist bound " << o.twist << "\n"
            << "vertices: " << ball.size() << " (P: " << p_count
            << ", M: " << ball.size() - p_count << ")\n";
        for (std::size_t d = 0; d < per_depth.size(); ++d) {
          out << "depth " << d << ": " << per_depth[d] << "\n";
        }
        out << "cycle witnesses: " << ball.cycle_witnesses.size() << "\n";
      }
      return ball.cycle_witnesses.empty() ? ok : invariant_breach;
    }

    int do_relcheck(Options const& o, std::ostream& out) {
      auto const  families = relator_families();
      std::size_t total = 0, passed = 0;
      json        jf    = json::array();
      std::ostringstream table;
      table << std::left << std::setw(8) << "family" << std::setw(14)
            << "relation" << std::setw(8) << "relator" << std::setw(13)
            << "normal-form" << "homology\n";
      for (auto const& f : families) {
        json jr = json::array();
        for (auto const& r : f.relators) {
          bool const nf_ok  = normal_form(r.word).is_identity();
          bool const hom_ok = represent(r.word) == HomMatrix::identity();
          ++total;
          passed += nf_ok && hom_ok;
          table << std::setw(8) << f.name << std::setw(14) << r.name
                << std::setw(8) << render(r.word) << std::setw(13)
                << (nf_ok ? "ok" : "FAIL") << (hom_ok ? "ok" : "FAIL")
                << "\n";
          json j;
          j["relation"]    = r.name;
          j["relator"]     = render(r.word);
          j["normal_form"] = nf_ok;
          j["homology"]    = hom_ok;
          jr.push_back(std::move(j));
        }
        json j;
        j["family"]   = f.name;
        j["relators"] = std::move(jr);
        jf.push_back(std::move(j));
      }
      if (o.as_json) {
        json j;
        j["families"] = std::move(jf);
        j["total"]    = total;
        j["passed"]   = passed;
        j["ok"]       = passed == total;
        out << j.dump() << "\n";
      } else {
        out << table.str() << passed << "/" << total << " relators ok\n";
      }
      return passed == total ? ok : invariant_breach;
    }

    int do_homrep(Options const& o, std::ostream& out) {
      auto const m = represent(word_arg(o.w1));
      if (o.as_json) {
        out << json{{"matrix", matrix_json(m)}}.dump() << "\n";
      } else {
        out << matrix_text(m);
      }
      return ok;
    }

    int do_theta(Options const& o, std::ostream& out) {
      auto const w = theta_twist(word_arg(o.w1));
      if (o.as_json) {
        out << json{{"word", render(w)}}.dump() << "\n";
      } else {
        out << word_text(w) << "\n";
      }
      return ok;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Normal forms, word problem and tree geometry for the genus "
                 "two Goeritz group",
                 "goeritz"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_flag("--json", opts.as_json, "Emit JSON instead of text");

    Handler handler;
    auto    sub = [&](char const* name, char const* help, Handler h) {
      auto* s = app.add_subcommand(name, help);
      s->callback([&handler, h] { handler = h; });
      return s;
    };
    auto word = [](CLI::App* s, std::string& dst, char const* name) {
      s->add_option(name, dst, "Word over a A b B g G d D (\"1\" = identity)")
          ->required();
    };
    auto vertex = [](CLI::App* s, std::string& dst, char const* name) {
      s->add_option(name, dst, "Vertex literal P:<word> or M:<word>")
          ->required();
    };

    word(sub("nf", "Amalgam normal form of a word", do_nf), opts.w1, "word");
    {
      auto* s = sub("eq", "Decide whether two words are equal", do_eq);
      word(s, opts.w1, "w1");
      word(s, opts.w2, "w2");
    }
    word(sub("order", "Order of a word (finite orders are 1, 2, 3, 6)",
             do_order),
         opts.w1,
         "word");
    word(sub("member", "Membership in H_E, H_P, H_M", do_member),
         opts.w1,
         "word");
    {
      auto* s = sub("dist", "Tree distance between two vertices", do_dist);
      vertex(s, opts.w1, "v1");
      vertex(s, opts.w2, "v2");
    }
    {
      auto* s = sub("geodesic", "Path between two vertices", do_geodesic);
      vertex(s, opts.w1, "v1");
      vertex(s, opts.w2, "v2");
    }
    {
      auto* s = sub("neighbors", "Neighbours of a vertex", do_neighbors);
      vertex(s, opts.w1, "v");
      s->add_option("--twist", opts.twist, "Bound on |beta exponent|")
          ->check(CLI::PositiveNumber);
    }
    {
      auto* s = sub("descend",
                    "Gamma-neighbour of v closer to target, and its mate",
                    do_descend);
      vertex(s, opts.w1, "v");
      vertex(s, opts.w2, "target");
    }
    {
      auto* s = sub("ball", "Enumerate a truncated ball around v_P", do_ball);
      s->add_option("--radius", opts.radius, "Radius in edges")->required();
      s->add_option("--twist", opts.twist, "Bound on |beta exponent|")
          ->check(CLI::PositiveNumber);
    }
    sub("relcheck", "Check every relator family", do_relcheck);
    word(sub("homrep", "Action on H_1 in the basis [B],[Z],[C],[Y]",
             do_homrep),
         opts.w1,
         "word");
    word(sub("theta", "Theta twist of a word", do_theta), opts.w1, "word");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return parse_failure;
    }

    try {
      return handler(opts, out);
    } catch (parse_error const& e) {
      err << "error: " << e.what() << "\n";
      return parse_failure;
    } catch (precondition_error const& e) {
      err << "error: " << e.what() << "\n";
      return precondition_fails;
    } catch (invariant_error const& e) {
      err << "internal error: " << e.what() << "\n";
      return invariant_breach;
    }
  }

}  // namespace goeritz::cli

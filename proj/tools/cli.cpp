#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "torelli/config.hpp"
#include "torelli/drags.hpp"
#include "torelli/error.hpp"
#include "torelli/lattice.hpp"
#include "torelli/magnus.hpp"
#include "torelli/rewriter.hpp"
#include "torelli/serialize.hpp"
#include "torelli/word.hpp"

namespace torelli::cli {

  namespace {

    struct Options {
      std::string config, word, other, drag, images, boundary, vectors, factor, dot;
      std::string format   = "json";
      std::size_t n        = 0;
      long        bound    = 1;
      bool        reduced  = false;
      bool        relations = false, membership = false, all = false;
      bool        homology = false;
    };

    PartitionConfig load_config(std::string const& text) {
      auto const first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && text[first] == '{') {
        return parse_config(text);
      }
      std::ifstream in(text);
      if (!in) {
        throw DomainError("cannot read config file '" + text + "'");
      }
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_config(ss.str());
    }

    std::pair<int, int> parse_boundary(std::string const& text) {
      std::istringstream is(text);
      int                r = 0, s = 0;
      char               comma = 0;
      if (!(is >> r >> comma >> s) || comma != ',' || !(is >> std::ws).eof()) {
        throw ParseError("boundary must be 'r,s'", 0);
      }
      return {r, s};
    }

    std::vector<Word> parse_images(std::string const& text, std::size_t n) {
      std::vector<Word> out;
      std::size_t       pos = 0;
      while (pos <= text.size()) {
        std::size_t const end = std::min(text.find(';', pos), text.size());
        try {
          out.push_back(parse_word(text.substr(pos, end - pos), n));
        } catch (ParseError const& e) {
          throw ParseError(e.what(), pos + e.position());
        }
        pos = end + 1;
      }
      if (out.size() != n) {
        throw DomainError("expected " + std::to_string(n) + " images, got "
                          + std::to_string(out.size()));
      }
      return out;
    }

    json check(std::string identity, bool holds) {
      return {{"identity", std::move(identity)}, {"holds", holds}};
    }

    void relation_checks(PartitionConfig const& cfg, json& checks) {
      for (int j = 1; j <= cfg.n; ++j) {
        auto const r = verify_pd_relation(cfg, j);
        checks.push_back(check("PD relation j=" + std::to_string(j), r.holds));
        checks.push_back(check("PD tau sum j=" + std::to_string(j), r.tau_sum_holds));
      }
      for (std::size_t r = 1; r <= cfg.block_count(); ++r) {
        for (int i = 1; i <= cfg.n; ++i) {
          for (int j = i + 1; j <= cfg.n; ++j) {
            auto const rep = verify_bcd_relation(cfg, static_cast<int>(r), i, j);
            std::string const tag = " r=" + std::to_string(r) + " i=" + std::to_string(i)
                                    + " j=" + std::to_string(j);
            checks.push_back(check("BCD relation" + tag, rep.holds));
            checks.push_back(check("BCD tau sum" + tag, rep.tau_sum_zero));
          }
        }
      }
      for (int i = 1; i <= cfg.n; ++i) {
        for (int j = 1; j <= cfg.n; ++j) {
          for (int k = j + 1; k <= cfg.n; ++k) {
            if (i != j && i != k) {
              auto const rep = verify_cd_identity(cfg, i, j, k);
              checks.push_back(check("CD identity i=" + std::to_string(i) + " j="
                                         + std::to_string(j) + " k=" + std::to_string(k)
                                         + ": " + rep.expression,
                                     rep.holds));
            }
          }
        }
      }
    }

    void membership_checks(PartitionConfig const& cfg, json& checks) {
      CappedBasis const basis(cfg);
      for (auto const& g : all_generators(cfg)) {
        checks.push_back(check("IO^P membership " + to_string(g),
                               membership_iop(basis, realize(basis, g))));
      }
    }

    json run_verify(Options const& o) {
      json checks = json::array();
      if (o.all) {
        for (int n : {2, 3}) {
          for (int b = 0; b <= 3; ++b) {
            std::vector<std::vector<std::vector<int>>> parts
                = b == 0 ? std::vector<std::vector<std::vector<int>>>{{}} : ordered_partitions(b);
            for (auto const& p : parts) {
              PartitionConfig const cfg{n, b, p};
              json                  local = json::array();
              relation_checks(cfg, local);
              membership_checks(cfg, local);
              auto const rr = abelianization_rank(cfg);
              local.push_back(check("rank " + std::to_string(rr.computed_rank) + " = "
                                        + std::to_string(rr.formula_rank),
                                    rr.match()));
              for (auto& c : local) {
                c["config"] = to_json(cfg);
                checks.push_back(std::move(c));
              }
            }
          }
        }
      } else {
        if (o.config.empty()) {
          throw CLI::RequiredError("--config (or --all)");
        }
        PartitionConfig const cfg = load_config(o.config);
        bool const both = !o.relations && !o.membership;
        if (o.relations || both) {
          relation_checks(cfg, checks);
        }
        if (o.membership || both) {
          membership_checks(cfg, checks);
        }
      }
      bool all_hold = true;
      for (auto const& c : checks) {
        all_hold &= c["holds"].get<bool>();
      }
      return {{"checks", checks}, {"count", checks.size()}, {"all_hold", all_hold}};
    }

    json run_fs(Options const& o) {
      FsGraph const g = fs_graph(o.n, o.bound);
      json          vertices = json::array();
      for (auto const& v : g.vertices) {
        vertices.push_back(to_json(v.v));
      }
      std::vector<std::vector<std::size_t>> adj(g.vertices.size());
      for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
      for (auto& row : adj) {
        std::sort(row.begin(), row.end());
      }
      json out = {{"n", o.n},
                  {"bound", o.bound},
                  {"vertex_count", g.vertices.size()},
                  {"edge_count", g.edges.size()},
                  {"vertices", vertices},
                  {"adjacency", adj},
                  {"connected", fs_connected(o.n, o.bound)}};
      if (o.homology) {
        out["triangle_count"] = fs_triangle_count(o.n, o.bound);
        out["h1_rank"]        = fs_h1_rank(o.n, o.bound);
      }
      if (!o.dot.empty()) {
        std::ofstream f(o.dot);
        if (!f) {
          throw DomainError("cannot write DOT file '" + o.dot + "'");
        }
        f << fs_dot(g);
      }
      return out;
    }

    json run_complete_basis(Options const& o) {
      json in;
      try {
        in = json::parse(o.vectors);
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("vectors JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
      }
      auto const vs = vectors_from_json(in);
      if (vs.empty() && o.n == 0) {
        throw DomainError("empty vector list needs --n");
      }
      IntMatrix const m = complete_basis(vs, o.n);
      return {{"matrix", to_json(m)}, {"determinant", to_json(determinant(m))}};
    }

    void print(json const& result, std::string const& format, std::ostream& out) {
      if (format == "json") {
        out << result.dump() << '\n';
        return;
      }
      for (auto const& [key, value] : result.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
      }
    }

  }  // namespace

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partitioned Torelli groups of free groups: drags, Johnson images, "
                 "relations, Tomaszewski rewriting and the free summand complex."};
    app.name("torelli");
    app.require_subcommand(1);

    Options                    o;
    std::function<json()>      action;
    auto add_format = [&](CLI::App* sub) {
      sub->add_option("--format", o.format, "Output mode")
          ->check(CLI::IsMember({"json", "human"}));
    };
    auto add_config = [&](CLI::App* sub) {
      return sub->add_option("--config", o.config, "Config as inline JSON or a file path");
    };

    auto* word = app.add_subcommand("word", "Free group word operations");
    word->require_subcommand(1);
    auto* reduce_cmd = word->add_subcommand("reduce", "Freely reduce a word");
    auto* mul_cmd    = word->add_subcommand("mul", "Product of two words");
    auto* inv_cmd    = word->add_subcommand("inv", "Inverse of a word");
    for (auto* sub : {reduce_cmd, mul_cmd, inv_cmd}) {
      sub->add_option("--n", o.n, "Rank of the free group")->required();
      sub->add_option("--word", o.word, "Word, e.g. \"x1 x2^-1\"")->required();
      add_format(sub);
    }
    mul_cmd->add_option("--other", o.other, "Right factor")->required();
    reduce_cmd->callback([&] {
      action = [&] { return json{{"word", to_string(parse_word(o.word, o.n))}}; };
    });
    mul_cmd->callback([&] {
      action = [&] {
        return json{{"word", to_string(mul(parse_word(o.word, o.n), parse_word(o.other, o.n)))}};
      };
    });
    inv_cmd->callback([&] {
      action = [&] { return json{{"word", to_string(inv(parse_word(o.word, o.n)))}}; };
    });

    auto* rho_cmd = app.add_subcommand("rho", "Degree-2 Magnus image of a commutator word");
    rho_cmd->add_option("--n", o.n, "Rank")->required();
    rho_cmd->add_option("--word", o.word, "Word in [F_n, F_n]")->required();
    add_format(rho_cmd);
    rho_cmd->callback([&] {
      action = [&] {
        return json{{"coeffs", to_json(rho(parse_word(o.word, o.n)))["coeffs"]}};
      };
    });

    auto* tau_cmd = app.add_subcommand("tau", "Johnson image of a drag word or explicit map");
    add_config(tau_cmd);
    tau_cmd->add_option("--drag", o.drag, "Drag word (with --config)");
    tau_cmd->add_option("--n", o.n, "Rank (with --images)");
    tau_cmd->add_option("--images", o.images, "Images of x1..xn separated by ';'");
    add_format(tau_cmd);
    tau_cmd->callback([&] {
      action = [&] {
        if (!o.config.empty()) {
          CappedBasis const basis(load_config(o.config));
          return to_json(tau_star(basis, parse_drag_word(o.drag)));
        }
        if (o.n == 0 || o.images.empty()) {
          throw CLI::RequiredError("--config with --drag, or --n with --images");
        }
        return to_json(tau(GroupMap(parse_images(o.images, o.n))));
      };
    });

    auto* gens_cmd = app.add_subcommand("gens", "List the drag generators");
    add_config(gens_cmd)->required();
    gens_cmd->add_flag("--reduced", o.reduced, "Only the reduced generating set");
    add_format(gens_cmd);
    gens_cmd->callback([&] {
      action = [&] {
        auto const cfg  = load_config(o.config);
        auto const gens = o.reduced ? reduced_generating_set(cfg) : all_generators(cfg);
        json       list = json::array();
        for (auto const& g : gens) {
          list.push_back(to_string(g));
        }
        return json{{"count", gens.size()}, {"generators", list}};
      };
    });

    auto* realize_cmd = app.add_subcommand("realize", "Realize a drag word on the capped basis");
    add_config(realize_cmd)->required();
    realize_cmd->add_option("--drag", o.drag, "Drag word")->required();
    add_format(realize_cmd);
    realize_cmd->callback([&] {
      action = [&] {
        CappedBasis const basis(load_config(o.config));
        GroupMap const    f = realize_word(basis, parse_drag_word(o.drag));
        return json{{"basis", to_json(basis)},
                    {"images", to_json(f)},
                    {"inverse", to_json(f.inverse())}};
      };
    });

    auto* verify_cmd = app.add_subcommand("verify", "Check relations and IO^P membership");
    add_config(verify_cmd);
    verify_cmd->add_flag("--relations", o.relations, "PD, BCD and CD relations");
    verify_cmd->add_flag("--membership", o.membership, "Membership of every generator");
    verify_cmd->add_flag("--all", o.all, "Everything, over the full test grid");
    add_format(verify_cmd);
    verify_cmd->callback([&] { action = [&] { return run_verify(o); }; });

    auto* rank_cmd = app.add_subcommand("rank", "Abelianization rank from tau");
    add_config(rank_cmd)->required();
    add_format(rank_cmd);
    bool factors = false;
    rank_cmd->add_flag("--factors", factors, "Also print the Smith invariant factors");
    rank_cmd->callback([&] {
      action = [&] {
        auto const r   = abelianization_rank(load_config(o.config));
        json       out = {{"computed_rank", r.computed_rank},
                          {"formula_rank", r.formula_rank},
                          {"match", r.match()}};
        if (factors) {
          out["reduced_size"]      = r.reduced_size;
          out["invariant_factors"] = to_json(r.invariant_factors);
        }
        return out;
      };
    });

    auto* rewrite_cmd = app.add_subcommand("rewrite", "Tomaszewski factorization");
    rewrite_cmd->add_option("--n", o.n, "Rank");
    rewrite_cmd->add_option("--word", o.word, "Word in [F_n, F_n]");
    rewrite_cmd->add_option("--factor", o.factor, "Expand one factor T:i,j:[d_i,...,d_n]");
    add_format(rewrite_cmd);
    rewrite_cmd->callback([&] {
      action = [&] {
        if (!o.factor.empty()) {
          auto const f = parse_factor(o.factor);
          return json{{"factor", to_string(f)}, {"word", to_string(factor_word(f))}};
        }
        if (o.n == 0 || o.word.empty()) {
          throw CLI::RequiredError("--n with --word, or --factor");
        }
        auto const f = tomaszewski_factor(parse_word(o.word, o.n));
        return json{{"word", to_string(f.word())}, {"factors", to_json(f)}};
      };
    });

    auto* push_cmd   = app.add_subcommand("push", "Push a boundary around a loop word");
    auto* pushf_cmd  = app.add_subcommand("push-factor", "Drag word for a pushed commutator");
    for (auto* sub : {push_cmd, pushf_cmd}) {
      add_config(sub)->required();
      sub->add_option("--boundary", o.boundary, "Boundary address r,s")->required();
      sub->add_option("--word", o.word, "Word in the loop generators x1..xn")->required();
      add_format(sub);
    }
    push_cmd->callback([&] {
      action = [&] {
        auto const        cfg = load_config(o.config);
        CappedBasis const basis(cfg);
        auto const [r, s]     = parse_boundary(o.boundary);
        GroupMap const f      = push_boundary(basis, r, s, parse_word(o.word, cfg.n));
        return json{{"images", to_json(f)},
                    {"homology_sign", push_homology_sign(cfg, r, s)},
                    {"membership", membership_iop(basis, f)}};
      };
    });
    pushf_cmd->callback([&] {
      action = [&] {
        auto const        cfg = load_config(o.config);
        CappedBasis const basis(cfg);
        auto const [r, s]     = parse_boundary(o.boundary);
        Word const     w      = parse_word(o.word, cfg.n);
        DragWord const d      = push_factorization(basis, r, s, w);
        bool const     ok     = realize_word(basis, d) == push_boundary(basis, r, s, w);
        return json{{"drag", to_string(d)}, {"length", d.size()}, {"verified", ok}};
      };
    });

    auto* fs_cmd = app.add_subcommand("fs", "Truncated complex of free summands of Z^n");
    fs_cmd->add_option("--n", o.n, "Ambient rank")->required()->check(CLI::Range(1, 8));
    fs_cmd->add_option("--bound", o.bound, "Max-norm truncation bound B >= 1");
    fs_cmd->add_flag("--homology", o.homology, "Also compute H_1 of the truncation");
    fs_cmd->add_option("--dot", o.dot, "Write the 1-skeleton as a DOT file");
    add_format(fs_cmd);
    fs_cmd->callback([&] { action = [&] { return run_fs(o); }; });

    auto* cb_cmd = app.add_subcommand("complete-basis", "Extend a summand basis to a basis of Z^n");
    cb_cmd->add_option("--vectors", o.vectors, "JSON rows, e.g. [[2,3]]")->required();
    cb_cmd->add_option("--n", o.n, "Ambient rank (needed for an empty list)");
    add_format(cb_cmd);
    cb_cmd->callback([&] { action = [&] { return run_complete_basis(o); }; });

    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    }

    try {
      json const result = action();
      print(result, o.format, out);
      // verify reports failures in its output and through the exit code.
      if (result.contains("all_hold") && !result["all_hold"].get<bool>()) {
        return 1;
      }
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    } catch (ParseError const& e) {
      err << "parse error at position " << e.position() << ": " << e.what() << '\n';
      return 2;
    } catch (DomainError const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }

}  // namespace torelli::cli

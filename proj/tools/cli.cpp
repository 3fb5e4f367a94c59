#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "krullkit/cardinal_engine.hpp"
#include "krullkit/chain_lab.hpp"
#include "krullkit/error.hpp"
#include "krullkit/json_io.hpp"
#include "krullkit/lex_groups.hpp"
#include "krullkit/random.hpp"
#include "krullkit/spectra_lpa.hpp"

namespace krullkit::cli {

namespace {

using io::json;

// Raised while reading JSON inputs; maps to exit 65.
struct BadJson : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by a failed check after its report was printed; maps to exit 2.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

json read_json(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return json::parse(in);
    std::ifstream f(path);
    if (!f) throw BadJson("cannot open " + path);
    return json::parse(f);
  } catch (const json::exception& e) {
    throw BadJson(std::string("malformed JSON: ") + e.what());
  }
}

chains::SubsetChain read_chain(const std::string& path, std::istream& in) {
  json j = read_json(path, in);
  try {
    return io::chain_from_json(j);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TooLarge) throw;
    throw BadJson(e.what());
  }
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::vector<Rational> parse_probes(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& p : split(text, ',')) out.push_back(Rational::parse(p));
  return out;
}

bool is_finite_poset(const std::string& text) {
  return text.rfind("chain:", 0) == 0 || text.rfind("antichain:", 0) == 0 || text.rfind("chains:", 0) == 0;
}

// ---------------------------------------------------------------------------
// Axiom flags shared by the card subcommands.

struct ModeFlags {
  std::string axioms = "table";
  std::string table_path;
  std::string preset;
};

void add_mode_flags(CLI::App* sub, ModeFlags& m) {
  sub->add_option("--axioms", m.axioms, "gch or table")->check(CLI::IsMember({"gch", "table"}));
  sub->add_option("--table", m.table_path, "continuum table JSON");
  sub->add_option("--preset", m.preset, "named table")->check(CLI::IsMember({"cohen"}));
}

card::AxiomMode resolve_mode(const ModeFlags& m, std::istream& in) {
  if (m.axioms == "gch") {
    if (!m.table_path.empty() || !m.preset.empty()) {
      throw CLI::ValidationError("--axioms gch", "cannot be combined with --table or --preset");
    }
    return card::AxiomMode::gch();
  }
  if (!m.table_path.empty() && !m.preset.empty()) {
    throw CLI::ValidationError("--table", "cannot be combined with --preset");
  }
  if (m.preset == "cohen") return card::AxiomMode::cohen();
  if (!m.table_path.empty()) {
    json j = read_json(m.table_path, in);
    try {
      return io::axiom_mode_from_json(j);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InconsistentTable) throw;
      throw BadJson(e.what());
    }
  }
  return card::AxiomMode::empty_table();
}

// ---------------------------------------------------------------------------

struct Context {
  std::ostream& out;
  std::istream& in;
  std::function<void()> action;
};

void add_group(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("group", "ordered groups and isolated subgroups");
  group->require_subcommand(1);

  {
    auto* sub = group->add_subcommand("rank", "rank of a lexicographic group");
    auto name = std::make_shared<std::string>();
    auto members = std::make_shared<bool>(false);
    sub->add_option("group", *name, "zlex(n), zrevlex(n) or ztree(n)")->required();
    sub->add_flag("--members", *members, "list the isolated subgroups");
    sub->callback([&ctx, name, members] {
      ctx.action = [&ctx, name, members] {
        auto r = lex::rank(lex::parse_group(*name));
        ctx.out << r.type_string() << "\n";
        if (*members)
          for (const auto& label : r.elements()) ctx.out << label << "\n";
      };
    });
  }
  {
    auto* sub = group->add_subcommand("tree", "the binary tree group of depth n");
    auto n = std::make_shared<std::size_t>(0);
    auto leaves = std::make_shared<bool>(false);
    auto check = std::make_shared<bool>(false);
    auto trials = std::make_shared<std::size_t>(lex::kDefaultTrials);
    auto bound = std::make_shared<std::int64_t>(lex::kDefaultBound);
    auto seed = std::make_shared<std::uint64_t>(default_seed());
    sub->add_option("n", *n, "depth")->required();
    sub->add_flag("--leaves", *leaves, "print every leaf subgroup");
    sub->add_flag("--check", *check, "sample the isolation condition for each leaf");
    sub->add_option("--trials", *trials);
    sub->add_option("--bound", *bound);
    sub->add_option("--seed", *seed);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto t = lex::tree_group(*n);
        ctx.out << "depth " << t.depth << ": " << t.leaves.size() << " leaves, " << t.distinct_segments()
                << " distinct segments\n";
        if (*leaves)
          for (const auto& [leaf, h] : t.leaves) ctx.out << leaf << " " << h.to_string() << "\n";
        ctx.out << "monotone: " << (t.monotone() ? "yes" : "no") << "\n";
        bool ok = t.monotone();
        if (*check) {
          std::size_t passed = 0;
          for (const auto& [leaf, h] : t.leaves) {
            auto s = lex::is_isolated_sample(h, *trials, *bound, *seed);
            if (s.passed) {
              ++passed;
            } else {
              ok = false;
              ctx.out << "counterexample at " << leaf << ": h = " << s.counterexample->first.to_string(t.group)
                      << ", x = " << s.counterexample->second.to_string(t.group) << "\n";
            }
          }
          ctx.out << "isolation: " << passed << "/" << t.leaves.size() << " passed " << *trials << " trials\n";
        }
        if (!ok) throw CheckFailed("tree check failed");
      };
    });
  }
  {
    auto* sub = group->add_subcommand("spectrum", "prime spectrum of the valuation ring");
    auto name = std::make_shared<std::string>();
    auto as_json = std::make_shared<bool>(false);
    sub->add_option("group", *name)->required();
    sub->add_flag("--json", *as_json);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto s = lex::valuation_spectrum(lex::parse_group(*name));
        if (*as_json) {
          print_json(ctx.out, io::to_json(s));
          return;
        }
        ctx.out << s.to_string() << "\n";
        for (std::size_t i = 0; i < s.primes.size(); ++i)
          ctx.out << s.primes.at(i) << " <-> " << s.subgroups[i].to_string() << "\n";
        ctx.out << "krull dimension " << s.krull_dimension() << "\n";
      };
    });
  }
  {
    auto* sub = group->add_subcommand("check-concat", "rank of a lexicographic sum vs concatenated ranks");
    auto names = std::make_shared<std::vector<std::string>>();
    auto seed = std::make_shared<std::uint64_t>(default_seed());
    auto trials = std::make_shared<std::size_t>(2000);
    auto as_json = std::make_shared<bool>(false);
    sub->add_option("groups", *names)->required();
    sub->add_option("--seed", *seed);
    sub->add_option("--trials", *trials, "random pairs for the projection check");
    sub->add_flag("--json", *as_json);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        std::vector<lex::LexGroup> groups;
        for (const auto& n : *names) groups.push_back(lex::parse_group(n));
        auto r = lex::check_concatenation_theorem(groups, *seed, *trials);
        if (*as_json) {
          print_json(ctx.out, io::to_json(r));
        } else {
          ctx.out << "lhs: " << r.lhs.type_string() << "\n";
          ctx.out << "rhs: " << r.rhs.type_string() << "\n";
          if (r.witness) {
            ctx.out << "witness:\n";
            for (const auto& label : r.lhs.elements()) ctx.out << "  " << label << " -> " << (*r.witness)(label) << "\n";
          }
          ctx.out << "projection monotone: " << (r.projection_monotone ? "yes" : "no") << "\n";
          ctx.out << "holds: " << (r.holds() ? "yes" : "no") << "\n";
        }
        if (!r.holds()) throw CheckFailed("concatenation check failed");
      };
    });
  }
  {
    auto* sub = group->add_subcommand("cmp", "compare two elements");
    auto name = std::make_shared<std::string>();
    auto f = std::make_shared<std::string>();
    auto g = std::make_shared<std::string>();
    sub->add_option("group", *name)->required();
    sub->add_option("f", *f)->required();
    sub->add_option("g", *g)->required();
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto o = lex::cmp(lex::parse_group(*name), lex::GroupElement::parse(*f), lex::GroupElement::parse(*g));
        ctx.out << (o < 0 ? "less" : o > 0 ? "greater" : "equal") << "\n";
      };
    });
  }
  {
    auto* sub = group->add_subcommand("abs", "absolute value");
    auto name = std::make_shared<std::string>();
    auto f = std::make_shared<std::string>();
    sub->add_option("group", *name)->required();
    sub->add_option("f", *f)->required();
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto g = lex::parse_group(*name);
        ctx.out << lex::abs(g, lex::GroupElement::parse(*f)).to_string(g) << "\n";
      };
    });
  }
  {
    auto* sub = group->add_subcommand("hull", "smallest isolated subgroup containing f");
    auto name = std::make_shared<std::string>();
    auto f = std::make_shared<std::string>();
    sub->add_option("group", *name)->required();
    sub->add_option("f", *f)->required();
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        ctx.out << lex::isolated_hull(lex::parse_group(*name), lex::GroupElement::parse(*f)).to_string() << "\n";
      };
    });
  }
  {
    auto* sub = group->add_subcommand("isolated", "sample the isolation condition of a segment");
    auto name = std::make_shared<std::string>();
    auto segment = std::make_shared<std::string>();
    auto trials = std::make_shared<std::size_t>(lex::kDefaultTrials);
    auto bound = std::make_shared<std::int64_t>(lex::kDefaultBound);
    auto seed = std::make_shared<std::uint64_t>(default_seed());
    sub->add_option("group", *name)->required();
    sub->add_option("segment", *segment, "comma-separated index labels")->required();
    sub->add_option("--trials", *trials);
    sub->add_option("--bound", *bound);
    sub->add_option("--seed", *seed);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto g = lex::parse_group(*name);
        std::string body = *segment;
        if (!body.empty() && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
        auto labels = split(body, ',');
        lex::IsolatedSubgroup h(g, std::set<order::Label>(labels.begin(), labels.end()));
        auto s = lex::is_isolated_sample(h, *trials, *bound, *seed);
        if (!s.passed) {
          ctx.out << "counterexample: h = " << s.counterexample->first.to_string(g)
                  << ", x = " << s.counterexample->second.to_string(g) << "\n";
          throw CheckFailed("isolation failed");
        }
        ctx.out << "isolated: " << h.to_string() << " passed " << s.trials << " trials\n";
      };
    });
  }
}

void add_chain(CLI::App& app, Context& ctx) {
  auto* chain = app.add_subcommand("chain", "chains of subsets and cuts");
  chain->require_subcommand(1);

  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = chain->add_subcommand(name, help);
    auto path = std::make_shared<std::string>("-");
    sub->add_option("input", *path, "chain JSON file, - for stdin");
    return std::make_pair(sub, path);
  };

  {
    auto [sub, path] = file_cmd("corder", "the induced strict order");
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] { print_json(ctx.out, io::corder_json(read_chain(*path, ctx.in))); };
    });
  }
  {
    auto [sub, path] = file_cmd("separate", "a maximal separated subset");
    auto hint = std::make_shared<std::string>();
    sub->add_option("--hint", *hint, "comma-separated element order");
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto c = read_chain(*path, ctx.in);
        print_json(ctx.out, io::to_json(chains::max_separated(c, split(*hint, ','))));
      };
    });
  }

  auto to_dense = [&ctx](const std::string& path, const std::string& probes) {
    auto c = read_chain(path, ctx.in);
    auto qs = probes.empty() ? chains::default_probes() : parse_probes(probes);
    print_json(ctx.out, io::to_json(chains::chain_to_dense(c, qs)));
  };
  auto to_chain = [&ctx](const std::string& path) {
    json j = read_json(path, ctx.in);
    if (!j.is_object() || !j.contains("order") || !j["order"].is_array() ||
        (j.contains("dense") && !j["dense"].is_array())) {
      throw BadJson("expected {\"order\": [...], \"dense\": [...]}");
    }
    std::vector<order::Label> order, dense;
    try {
      order = j["order"].get<std::vector<order::Label>>();
      if (j.contains("dense")) dense = j["dense"].get<std::vector<order::Label>>();
    } catch (const json::exception& e) {
      throw BadJson(e.what());
    }
    print_json(ctx.out, io::to_json(chains::dense_to_chain(order::FiniteLinOrder(order), dense)));
  };

  {
    auto [sub, path] = file_cmd("to-dense", "cuts of S' x Q realizing the chain");
    auto probes = std::make_shared<std::string>();
    sub->add_option("--probes", *probes, "comma-separated rationals");
    sub->callback([=, &ctx] { ctx.action = [=] { to_dense(*path, *probes); }; });
  }
  {
    auto* sub = chain->add_subcommand("ded", "longest chain of subsets of an n-set");
    auto n = std::make_shared<std::size_t>(0);
    auto witness_only = std::make_shared<bool>(false);
    auto as_json = std::make_shared<bool>(false);
    sub->add_option("n", *n)->required();
    sub->add_flag("--witness-only", *witness_only);
    sub->add_flag("--json", *as_json);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto d = chains::ded_finite(*n, *witness_only);
        if (*as_json) print_json(ctx.out, io::to_json(d));
        else ctx.out << d.links << "\n";
      };
    });
  }
  {
    auto [sub, path] = file_cmd("convert", "either direction of the chain / dense order correspondence");
    auto direction = std::make_shared<std::string>();
    auto probes = std::make_shared<std::string>();
    sub->add_option("--direction", *direction)->required()->check(CLI::IsMember({"to-dense", "to-chain"}));
    sub->add_option("--probes", *probes, "comma-separated rationals");
    sub->callback([=, &ctx] {
      ctx.action = [=] {
        if (*direction == "to-dense") to_dense(*path, *probes);
        else to_chain(*path);
      };
    });
  }
}

void add_spec(CLI::App& app, Context& ctx) {
  auto* spec = app.add_subcommand("spec", "graphs E_P and the completion");
  spec->require_subcommand(1);

  {
    auto* sub = spec->add_subcommand("ep", "the graph E_P");
    auto poset = std::make_shared<std::string>();
    auto mult = std::make_shared<std::string>("omega");
    auto dot = std::make_shared<bool>(false);
    sub->add_option("poset", *poset, "chain:n, antichain:n or chains:a,b,...")->required();
    sub->add_option("--mult", *mult, "edge multiplicity: a positive integer or omega");
    sub->add_flag("--dot", *dot);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto g = lpa::build_ep(lpa::parse_poset(*poset), lpa::Multiplicity::parse(*mult));
        if (*dot) {
          ctx.out << lpa::export_dot(g);
          return;
        }
        ctx.out << "vertices:";
        for (std::size_t v = 0; v < g.vertices().size(); ++v) ctx.out << " " << g.vertex_name(v);
        ctx.out << "\narcs:\n";
        for (const auto& a : g.arcs()) {
          ctx.out << "  " << g.vertex_name(a.source) << " -> " << g.vertex_name(a.range) << " x"
                  << a.mult.to_string() << "\n";
        }
        ctx.out << "regular:";
        for (const auto& v : lpa::regular_vertices(g)) ctx.out << " " << v;
        ctx.out << "\npaths: " << lpa::count_paths(g).to_string() << "\nrelations:\n";
        for (const auto& r : g.relations()) ctx.out << "  " << r << "\n";
      };
    });
  }
  {
    auto* sub = spec->add_subcommand("at", "the completion of a poset or chain");
    auto poset = std::make_shared<std::string>();
    auto fragment = std::make_shared<bool>(false);
    auto probes = std::make_shared<std::string>();
    sub->add_option("poset", *poset, "finite poset or one of rats, ints, omega, omega_op")->required();
    sub->add_flag("--fragment", *fragment, "allow the finitely described fragment for symbolic chains");
    sub->add_option("--probes", *probes, "comma-separated chain values");
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        if (is_finite_poset(*poset)) {
          print_json(ctx.out, io::to_json(lpa::at_finite(lpa::parse_poset(*poset))));
          return;
        }
        if (!*fragment) throw CLI::ValidationError("--fragment", "symbolic chains need --fragment");
        auto c = order::SymbolicChain::parse(*poset);
        auto qs = probes->empty() ? lpa::default_fd_probes(c) : parse_probes(*probes);
        print_json(ctx.out, io::to_json(lpa::at_fd(c, qs)));
      };
    });
  }
  {
    auto* sub = spec->add_subcommand("spectrum", "prime spectrum of L_K(E_P)");
    auto poset = std::make_shared<std::string>();
    sub->add_option("poset", *poset)->required();
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto s = is_finite_poset(*poset) ? lpa::spectrum_order(lpa::parse_poset(*poset))
                                         : lpa::spectrum_order(order::SymbolicChain::parse(*poset));
        print_json(ctx.out, io::to_json(s));
      };
    });
  }
  {
    auto* sub = spec->add_subcommand("inject", "the map from cuts of Q into the completion of Q");
    auto probes = std::make_shared<std::string>();
    sub->add_option("--probes", *probes, "comma-separated rationals");
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto c = order::SymbolicChain::rats();
        auto qs = probes->empty() ? lpa::default_fd_probes(c) : parse_probes(*probes);
        auto d = lpa::dense_cor_injection(lpa::at_fd(c, qs));
        print_json(ctx.out, io::to_json(d));
        if (!(d.injective && d.preserving && d.reflecting)) throw CheckFailed("injection check failed");
      };
    });
  }
  {
    auto* sub = spec->add_subcommand("berry", "disjoint union of chains, or the symbolic family");
    auto what = std::make_shared<std::string>();
    sub->add_option("lengths", *what, "comma-separated lengths or a limit cardinal")->required();
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        if (what->rfind("aleph", 0) == 0) {
          print_json(ctx.out, io::to_json(card::catalog("berry(" + *what + ")", card::AxiomMode::empty_table())));
          return;
        }
        std::vector<std::size_t> lengths;
        for (const auto& s : split(*what, ',')) lengths.push_back(std::stoul(s));
        print_json(ctx.out, io::to_json(lpa::berry_family(lengths)));
      };
    });
  }
  {
    auto* sub = spec->add_subcommand("lpa-dims", "cardinality and dimensions of L_K(E_P) for a chain");
    auto chain = std::make_shared<std::string>();
    auto field = std::make_shared<std::string>("aleph(0)");
    auto modes = std::make_shared<ModeFlags>();
    sub->add_option("chain", *chain, "rats, ints, omega, omega_op or chain:n")->required();
    sub->add_option("--field", *field, "cardinality of K");
    add_mode_flags(sub, *modes);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto mode = resolve_mode(*modes, ctx.in);
        print_json(ctx.out, io::to_json(card::catalog("lpa(" + *chain + "," + *field + ")", mode)));
      };
    });
  }
}

void add_card(CLI::App& app, Context& ctx) {
  auto* cardc = app.add_subcommand("card", "cardinal arithmetic and ring existence");
  cardc->require_subcommand(1);

  auto unary = [&](const char* name, const char* help,
                   std::function<void(std::ostream&, const card::Cardinal&, const card::AxiomMode&)> body) {
    auto* sub = cardc->add_subcommand(name, help);
    auto k = std::make_shared<std::string>();
    auto modes = std::make_shared<ModeFlags>();
    sub->add_option("kappa", *k)->required();
    add_mode_flags(sub, *modes);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] { body(ctx.out, card::Cardinal::parse(*k), resolve_mode(*modes, ctx.in)); };
    });
  };
  unary("ded", "bounds on ded(kappa)",
        [](std::ostream& out, const card::Cardinal& k, const card::AxiomMode& m) {
          print_json(out, io::to_json(card::ded_bounds(k, m)));
        });
  unary("cf", "cofinality", [](std::ostream& out, const card::Cardinal& k, const card::AxiomMode&) {
    out << card::cofinality(k).to_string() << "\n";
  });
  unary("exp2", "2^kappa in the axiom mode",
        [](std::ostream& out, const card::Cardinal& k, const card::AxiomMode& m) {
          out << card::card_exp2(k, m).to_string() << "\n";
        });
  unary("predicates", "regularity, PSL and strong-limit status",
        [](std::ostream& out, const card::Cardinal& k, const card::AxiomMode& m) {
          print_json(out, io::to_json(card::predicates(k, m)));
        });
  unary("tower", "the strong limit above kappa",
        [](std::ostream& out, const card::Cardinal& k, const card::AxiomMode&) {
          auto t = card::strong_limit_tower(k);
          out << t.symbol << "\n";
          for (const auto& s : t.stages) out << "  " << s << "\n";
        });

  {
    auto* sub = cardc->add_subcommand("exists", "is there a ring of cardinality K and Krull dimension L");
    auto k = std::make_shared<std::string>();
    auto l = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>("any");
    auto modes = std::make_shared<ModeFlags>();
    sub->add_option("kappa", *k)->required();
    sub->add_option("lambda", *l, "cardinal or 2^cardinal")->required();
    sub->add_option("--kind", *kind)->check(CLI::IsMember({"any", "valuation"}));
    add_mode_flags(sub, *modes);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto v = card::exists_ring(card::Cardinal::parse(*k), card::CardExpr::parse(*l), resolve_mode(*modes, ctx.in),
                                   *kind == "valuation" ? card::RingKindFilter::Valuation : card::RingKindFilter::Any);
        print_json(ctx.out, io::to_json(v));
      };
    });
  }
  {
    auto* sub = cardc->add_subcommand("catalog", "computed dimensions of a known construction");
    auto desc = std::make_shared<std::string>();
    auto modes = std::make_shared<ModeFlags>();
    sub->add_option("descriptor", *desc)->required();
    add_mode_flags(sub, *modes);
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] { print_json(ctx.out, io::to_json(card::catalog(*desc, resolve_mode(*modes, ctx.in)))); };
    });
  }
  for (const char* op : {"add", "mul"}) {
    auto* sub = cardc->add_subcommand(op, std::string("cardinal ") + (op[0] == 'a' ? "sum" : "product"));
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("a", *a)->required();
    sub->add_option("b", *b)->required();
    bool add = op[0] == 'a';
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] {
        auto x = card::Cardinal::parse(*a), y = card::Cardinal::parse(*b);
        ctx.out << (add ? card::card_add(x, y) : card::card_mul(x, y)).to_string() << "\n";
      };
    });
  }
  {
    auto* sub = cardc->add_subcommand("witness-poly", "prime ideals of a polynomial ring from cuts of Q");
    auto cuts = std::make_shared<std::vector<std::string>>();
    sub->add_option("cuts", *cuts, "q for everything below q, q+ to include q")->required();
    sub->callback([=, &ctx] {
      ctx.action = [=, &ctx] { print_json(ctx.out, io::to_json(card::witness_chain_poly(*cuts))); };
    });
  }
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge: return kExitTooLarge;
    default: return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"krullkit: ordered groups, chains of subsets, poset completions and cardinal Krull dimension"};
  app.name("krullkit");
  app.require_subcommand(1);
  app.set_version_flag("--version", "krullkit 0.3.0");
  Context ctx{out, in, {}};
  add_group(app, ctx);
  add_chain(app, ctx);
  add_spec(app, ctx);
  add_card(app, ctx);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (ctx.action) ctx.action();
    return kExitOk;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadJson& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadJson;
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace krullkit::cli

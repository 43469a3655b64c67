#include "linetrees/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "linetrees/acceptance.hpp"
#include "linetrees/arborescence.hpp"
#include "linetrees/crit_group.hpp"
#include "linetrees/db_codec.hpp"
#include "linetrees/json_io.hpp"
#include "linetrees/line_bijection.hpp"

namespace linetrees::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  bool json = false;
  EnumerationLimit limit;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

json read_json(const std::string& path, std::istream& in) {
  try {
    return json::parse(read_text(path, in));
  } catch (const json::parse_error& e) {
    throw JsonShapeError(std::string("malformed JSON: ") + e.what());
  }
}

struct GraphSource {
  std::string file;
  std::string family;
  unsigned m = 0;
  unsigned n = 0;

  void attach(CLI::App* sub) {
    sub->add_option("--graph", file, "Edge list or JSON graph file ('-' for stdin)");
    sub->add_option("--family", family, "Generated family instead of a file")->check(CLI::IsMember({"db", "kautz"}));
    sub->add_option("-m", m, "Alphabet parameter");
    sub->add_option("-n", n, "String length");
  }

  DiGraph load(std::istream& in) const {
    if (!family.empty()) {
      if (m == 0 || n == 0) throw UsageError("--family needs -m and -n");
      return family_graph({family == "db" ? FamilyKind::DeBruijn : FamilyKind::Kautz, m, n});
    }
    if (file.empty()) throw UsageError("give --graph FILE or --family db|kautz -m M -n N");
    std::string text = read_text(file, in);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      try {
        return graph_from_json(json::parse(text));
      } catch (const json::parse_error& e) {
        throw JsonShapeError(std::string("malformed JSON: ") + e.what());
      }
    }
    std::istringstream stream(text);
    return read_edge_list(stream);
  }
};

void write_graph(Io& io, const DiGraph& g, const std::string& format) {
  if (io.json || format == "json") {
    io.out << graph_to_json(g).dump() << "\n";
  } else if (format == "dot") {
    write_dot(io.out, g);
  } else {
    write_edge_list(io.out, g);
  }
}

json terms_to_json(const GenPoly& p, const DiGraph& g) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json vars = json::array();
    for (auto v : m.vars()) vars.push_back(g.edge_name(EdgeId{v}));
    terms.push_back({{"vars", vars}, {"coefficient", big_to_json(c)}});
  }
  return terms;
}

std::string read_bits(const std::string& arg, std::istream& in) {
  std::string raw = arg.empty() ? read_text("-", in) : arg;
  std::string bits;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) bits += c;
  }
  return bits;
}

EdgeOrder order_for(const DiGraph& g, const std::optional<std::uint64_t>& seed) {
  return seed ? EdgeOrder::shuffled(g.num_edges(), *seed) : EdgeOrder::identity(g.num_edges());
}

std::optional<std::uint64_t> bound_from_environment() {
  const char* raw = std::getenv("LINETREES_ENUM_BOUND");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) throw UsageError("LINETREES_ENUM_BOUND must be a positive integer");
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning trees of directed line graphs, de Bruijn sequence codec and critical groups", "linetrees"};
  app.require_subcommand(1);
  app.fallthrough();
  Io io{in, out, false, {}};
  app.add_flag("--json", io.json, "Machine-readable output");

  std::function<void()> action;
  GraphSource src;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a de Bruijn or Kautz graph");
  std::string family_name;
  unsigned gen_m = 0, gen_n = 0;
  std::string format = "edges";
  gen->add_option("--family", family_name)->required()->check(CLI::IsMember({"db", "kautz"}));
  gen->add_option("-m", gen_m)->required()->check(CLI::Range(2u, 36u));
  gen->add_option("-n", gen_n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--format", format)->check(CLI::IsMember({"edges", "dot", "json"}));
  gen->callback([&] {
    action = [&] {
      write_graph(io, family_graph({family_name == "db" ? FamilyKind::DeBruijn : FamilyKind::Kautz, gen_m, gen_n}), format);
    };
  });

  // linegraph
  auto* lg = app.add_subcommand("linegraph", "Directed line graph of a graph");
  src.attach(lg);
  lg->add_option("--format", format)->check(CLI::IsMember({"edges", "dot", "json"}));
  lg->callback([&] { action = [&] { write_graph(io, line_graph(src.load(in)).graph, format); }; });

  // trees
  auto* trees = app.add_subcommand("trees", "Oriented spanning trees")->require_subcommand(1);
  std::optional<std::string> root_name;
  auto* count = trees->add_subcommand("count", "Count spanning trees by determinant");
  src.attach(count);
  count->add_option("--root", root_name, "Count only trees rooted here");
  count->callback([&] {
    action = [&] {
      DiGraph g = src.load(in);
      BigInt total;
      if (root_name) {
        auto r = g.find_vertex(*root_name);
        if (!r) throw std::invalid_argument("unknown vertex '" + *root_name + "'");
        total = count_trees_rooted(g, *r);
      } else {
        total = count_trees(g);
      }
      if (io.json) {
        json j = {{"count", total.get_str()}};
        if (root_name) j["root"] = *root_name;
        out << j.dump() << "\n";
      } else {
        out << total << "\n";
      }
    };
  });

  auto* enumerate = trees->add_subcommand("enumerate", "List every spanning tree");
  src.attach(enumerate);
  enumerate->callback([&] {
    action = [&] {
      DiGraph g = src.load(in);
      json all = json::array();
      for_each_spanning_tree(
          g,
          [&](const SpanningTree& t) {
            if (io.json) {
              all.push_back(spanning_tree_to_json(g, t));
              return;
            }
            out << "root " << g.vertex_name(t.root) << ":";
            for (const auto& e : t.out_edge) {
              if (e) out << " " << g.edge_name(*e);
            }
            out << "\n";
          },
          io.limit);
      if (io.json) out << all.dump() << "\n";
    };
  });

  auto* identity = trees->add_subcommand("identity-check", "Compare the line graph generating function with its product form");
  src.attach(identity);
  bool evaluate = false;
  std::uint64_t seed = 1;
  std::size_t trials = 8;
  identity->add_flag("--evaluate", evaluate, "Probabilistic check at random integer points, no expansion");
  identity->add_option("--seed", seed);
  identity->add_option("--trials", trials)->check(CLI::PositiveNumber);
  identity->callback([&] {
    action = [&] {
      DiGraph g = src.load(in);
      bool holds = false;
      if (evaluate) {
        EvaluationReport r = verify_identity_by_evaluation(g, seed, trials);
        holds = r.holds;
        if (io.json) {
          out << json{{"holds", r.holds}, {"probabilistic", true}, {"trials", r.trials},
                      {"lhs", r.lhs.get_str()}, {"rhs", r.rhs.get_str()}}.dump()
              << "\n";
        } else {
          out << (r.holds ? "holds" : "FAILS") << " at " << r.trials << " random points (probabilistic)\n";
        }
      } else {
        IdentityReport r = verify_identity(g, io.limit);
        holds = r.holds;
        auto name = [&](std::uint32_t v) { return g.edge_name(EdgeId{v}); };
        if (io.json) {
          json witness = nullptr;
          if (r.witness) {
            json vars = json::array();
            for (auto v : r.witness->monomial.vars()) vars.push_back(name(v));
            witness = {{"vars", vars},
                       {"lhs_coefficient", big_to_json(r.witness->lhs_coefficient)},
                       {"rhs_coefficient", big_to_json(r.witness->rhs_coefficient)}};
          }
          out << json{{"lhs_terms", terms_to_json(r.lhs, g)}, {"rhs_terms", terms_to_json(r.rhs, g)},
                      {"holds", r.holds}, {"witness", witness}}.dump()
              << "\n";
        } else {
          out << (r.holds ? "holds" : "FAILS") << ": " << r.lhs.num_terms() << " monomials, value "
              << r.lhs.evaluate_at_ones() << " at all ones\n";
          out << "lhs: " << r.lhs.to_string(name) << "\n";
          if (r.witness) out << "first difference at " << to_string(r.witness->monomial, name) << "\n";
        }
      }
      if (!holds) throw CheckFailed("identity does not hold");
    };
  });

  auto* knuth = trees->add_subcommand("knuth-check", "Compare tree counts of G and its line graph");
  src.attach(knuth);
  knuth->callback([&] {
    action = [&] {
      KnuthReport r = knuth_check(src.load(in));
      if (io.json) {
        out << json{{"holds", r.holds}, {"line_graph_trees", r.line_graph_trees.get_str()},
                    {"graph_trees", r.graph_trees.get_str()}, {"degree_factor", r.degree_factor.get_str()}}.dump()
            << "\n";
      } else {
        out << (r.holds ? "holds" : "FAILS") << ": " << r.line_graph_trees << " = " << r.graph_trees << " * "
            << r.degree_factor << "\n";
      }
      if (!r.holds) throw CheckFailed("tree count formula does not hold");
    };
  });

  // bijection
  auto* bijection = app.add_subcommand("bijection", "Tree arrays and spanning trees of the line graph")->require_subcommand(1);
  std::string input = "-";
  std::optional<std::uint64_t> order_seed;
  auto* sig = bijection->add_subcommand("sigma", "Tree array (JSON) to line graph spanning tree");
  auto* pi_cmd = bijection->add_subcommand("pi", "Line graph spanning tree (JSON) to tree array");
  auto* roundtrip = bijection->add_subcommand("roundtrip", "Check both compositions over every tree array");
  for (auto* sub : {sig, pi_cmd, roundtrip}) {
    src.attach(sub);
    sub->add_option("--order-seed", order_seed, "Shuffle the edge order with this seed");
  }
  sig->add_option("--input", input, "Tree array JSON ('-' for stdin)");
  pi_cmd->add_option("--input", input, "Line graph tree JSON ('-' for stdin)");
  sig->callback([&] {
    action = [&] {
      DiGraph g = src.load(in);
      LineTreeBijection bij(g, order_for(g, order_seed));
      SpanningTree t = bij.sigma(tree_array_from_json(g, read_json(input, in)));
      out << line_tree_to_json(bij, t).dump() << "\n";
    };
  });
  pi_cmd->callback([&] {
    action = [&] {
      DiGraph g = src.load(in);
      LineTreeBijection bij(g, order_for(g, order_seed));
      TreeArray a = bij.pi(line_tree_from_json(bij, read_json(input, in)));
      out << tree_array_to_json(g, a).dump() << "\n";
    };
  });
  roundtrip->callback([&] {
    action = [&] {
      DiGraph g = src.load(in);
      LineTreeBijection bij(g, order_for(g, order_seed));
      std::size_t arrays = 0, trees_seen = 0, bad = 0;
      for_each_tree_array(
          g,
          [&](const TreeArray& a) {
            ++arrays;
            if (bij.pi(bij.sigma(a)) != a) ++bad;
          },
          io.limit);
      for_each_spanning_tree(
          bij.line_graph(),
          [&](const SpanningTree& t) {
            ++trees_seen;
            if (bij.sigma(bij.pi(t)) != t) ++bad;
          },
          io.limit);
      bool holds = bad == 0 && arrays == trees_seen;
      if (io.json) {
        out << json{{"holds", holds}, {"tree_arrays", arrays}, {"line_graph_trees", trees_seen}, {"mismatches", bad}}.dump()
            << "\n";
      } else {
        out << (holds ? "holds" : "FAILS") << ": " << arrays << " tree arrays, " << trees_seen
            << " line graph trees, " << bad << " mismatches\n";
      }
      if (!holds) throw CheckFailed("bijection roundtrip failed");
    };
  });

  // codec
  auto* codec = app.add_subcommand("codec", "Binary de Bruijn sequences to bit strings and back")->require_subcommand(1);
  unsigned degree = 0;
  std::string bits_arg;
  auto* enc = codec->add_subcommand("encode", "Sequence of length 2^n to a string of length 2^(n-1)");
  auto* dec = codec->add_subcommand("decode", "String of length 2^(n-1) to a sequence of length 2^n");
  auto* list = codec->add_subcommand("enumerate", "All sequences of a degree up to 4");
  for (auto* sub : {enc, dec, list}) sub->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
  for (auto* sub : {enc, dec}) sub->add_option("bits", bits_arg, "Bits (read from stdin when omitted)");
  enc->callback([&] {
    action = [&] {
      DeBruijnSequence b = make_sequence(read_bits(bits_arg, in), degree);
      std::string code = encode(b);
      if (io.json) {
        out << json{{"degree", degree}, {"sequence", b.bits}, {"valid", true}, {"code", code}}.dump() << "\n";
      } else {
        out << code << "\n";
      }
    };
  });
  dec->callback([&] {
    action = [&] {
      std::string code = read_bits(bits_arg, in);
      DeBruijnSequence b = decode(code, degree);
      if (io.json) {
        out << json{{"degree", degree}, {"code", code}, {"sequence", b.bits}, {"valid", is_de_bruijn(b.bits, degree)}}.dump()
            << "\n";
      } else {
        out << b.bits << "\n";
      }
    };
  });
  list->callback([&] {
    action = [&] {
      auto all = enumerate_db_sequences(degree);
      if (io.json) {
        json seqs = json::array();
        for (const auto& b : all) seqs.push_back(b.bits);
        out << json{{"degree", degree}, {"count", all.size()}, {"sequences", seqs}}.dump() << "\n";
      } else {
        for (const auto& b : all) out << b.bits << "\n";
      }
    };
  });

  // group
  auto* group = app.add_subcommand("group", "Critical groups and their closed forms")->require_subcommand(1);
  std::optional<std::string> sink_name;
  auto* compute = group->add_subcommand("compute", "Critical (or sandpile) group by Smith normal form");
  auto* formula = group->add_subcommand("formula", "Closed-form critical group of a family");
  auto* order = group->add_subcommand("order", "Closed-form group order of a family");
  auto* verify = group->add_subcommand("verify", "Computed group against the closed forms");
  src.attach(compute);
  compute->add_option("--sink", sink_name, "Sandpile group at this sink instead of the critical group");
  for (auto* sub : {formula, order, verify}) {
    sub->add_option("--family", src.family)->required()->check(CLI::IsMember({"db", "kautz"}));
    sub->add_option("-m", src.m)->required()->check(CLI::Range(2u, 36u));
    sub->add_option("-n", src.n)->required()->check(CLI::PositiveNumber);
  }
  auto family_formula = [&] {
    return src.family == "db" ? db_formula(src.m, src.n) : kautz_formula(src.m, src.n);
  };
  auto family_order = [&] {
    return src.family == "db" ? group_order_db(src.m, src.n) : group_order_kautz(src.m, src.n);
  };
  compute->callback([&] {
    action = [&] {
      DiGraph g = src.load(in);
      AbelianGroup k;
      if (sink_name) {
        auto r = g.find_vertex(*sink_name);
        if (!r) throw std::invalid_argument("unknown vertex '" + *sink_name + "'");
        k = sandpile_group(g, *r);
      } else {
        k = critical_group(g);
      }
      std::optional<bool> matches;
      if (!src.family.empty() && !sink_name) matches = k == family_formula().normalize();
      if (io.json) {
        json j = group_to_json(k);
        j["matches_formula"] = matches ? json(*matches) : json(nullptr);
        out << j.dump() << "\n";
      } else {
        out << k.to_string() << "\n";
      }
    };
  });
  formula->callback([&] {
    action = [&] {
      GroupFormula f = family_formula();
      AbelianGroup k = f.normalize();
      if (io.json) {
        json summands = json::array();
        for (const auto& [modulus, multiplicity] : f.summands) {
          summands.push_back({{"modulus", big_to_json(modulus)}, {"multiplicity", big_to_json(multiplicity)}});
        }
        json j = group_to_json(k);
        j["summands"] = summands;
        out << j.dump() << "\n";
      } else {
        out << k.to_string() << "\n";
      }
    };
  });
  order->callback([&] {
    action = [&] {
      BigInt o = family_order();
      if (io.json) {
        out << json{{"order", o.get_str()}}.dump() << "\n";
      } else {
        out << o << "\n";
      }
    };
  });
  verify->callback([&] {
    action = [&] {
      DiGraph g = family_graph({src.family == "db" ? FamilyKind::DeBruijn : FamilyKind::Kautz, src.m, src.n});
      AbelianGroup k = critical_group(g, true);
      bool matches = k == family_formula().normalize();
      bool order_ok = k.is_finite() && k.order() == family_order();
      if (io.json) {
        json j = group_to_json(k);
        j["matches_formula"] = matches;
        j["matches_order"] = order_ok;
        out << j.dump() << "\n";
      } else {
        out << k.to_string() << "\n"
            << "formula " << (matches ? "matches" : "DIFFERS") << ", order " << (order_ok ? "matches" : "DIFFERS") << "\n";
      }
      if (!matches || !order_ok) throw CheckFailed("critical group disagrees with the closed form");
    };
  });

  // verify-all
  auto* verify_all = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify_all->callback([&] {
    action = [&] {
      AcceptanceOptions options;
      options.enumeration_bound = std::max<std::uint64_t>(options.enumeration_bound, io.limit.max_steps);
      bool ok = true;
      json results = json::array();
      run_acceptance(options, [&](const CriterionResult& r) {
        ok = ok && r.passed;
        if (io.json) {
          results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        } else {
          out << format_result(r) << std::endl;
        }
      });
      if (io.json) out << json{{"passed", ok}, {"criteria", results}}.dump() << "\n";
      if (!ok) throw CheckFailed("acceptance suite failed");
    };
  });

  std::vector<const char*> argv{"linetrees"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (auto bound = bound_from_environment()) io.limit.max_steps = *bound;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    action();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CheckFailed& e) {
    err << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace linetrees::cli

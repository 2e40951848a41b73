// wtb: command-line front end for the wiretap bound library.
//
// exit codes: 0 ok, 1 usage, 2 bad input, 3 instance too large,
// 4 verify found a disagreement

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wtb/wtb.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kTooLarge = 3;
constexpr int kMismatch = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// Human-readable lines first, then a key=value block.
struct Output {
  std::ostringstream human;
  std::vector<std::pair<std::string, std::string>> kv;

  void put(const std::string& k, const std::string& v) { kv.emplace_back(k, v); }
  void put(const std::string& k, std::size_t v) { kv.emplace_back(k, std::to_string(v)); }

  std::string str() const {
    std::string out = human.str();
    out += "\n";
    for (const auto& [k, v] : kv) out += k + "=" + v + "\n";
    return out;
  }
};

struct Loaded {
  wtb::LabeledNetwork ln;
  wtb::WiretapCollection coll;
};

wtb::LabeledNetwork load_network(const std::string& path) { return wtb::parse_network(slurp(path)); }

Loaded load(const std::string& net_path, const std::string& sets_path) {
  auto ln = load_network(net_path);
  auto pre = wtb::parse_collection(slurp(sets_path), ln);
  for (const auto& w : pre.warnings) std::cerr << "warning: " << w << "\n";
  return {std::move(ln), std::move(pre.collection)};
}

std::string cut_list(const std::vector<wtb::Cut>& cuts, const wtb::LabeledNetwork& ln) {
  std::string out;
  for (std::size_t i = 0; i < cuts.size(); ++i) out += (i ? ";" : "") + wtb::format_edges(cuts[i].edges, ln);
  return out;
}

std::vector<wtb::EdgeSet> edge_sets(const wtb::WiretapCollection& coll) {
  std::vector<wtb::EdgeSet> out;
  for (const auto& w : coll.sets) out.push_back(w.edges);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on the alphabet size of secure network codes for wiretap networks"};
  app.require_subcommand(1);

  std::string net_path, sets_path, report_path, dot_path, target, out_prefix, out_path;
  std::string mode = "nmax", select = "cardinality";
  bool regularize = false;
  std::optional<std::uint64_t> seed;
  std::size_t n = 0, k = 0, r = 0;
  std::uint64_t cap = wtb::kDefaultCollectionCap;

  auto* bound = app.add_subcommand("bound", "compute N_max (and optionally N)");
  bound->add_option("net", net_path)->required();
  bound->add_option("wsets", sets_path)->required();
  bound->add_option("--mode", mode)->check(CLI::IsMember({"nmax", "n", "both"}));
  bound->add_flag("--regularize", regularize, "replace each set by its primary minimum cut first");
  bound->add_option("--select", select)->check(CLI::IsMember({"cardinality", "mincut"}));
  bound->add_option("--seed", seed, "random tie-break seed");
  bound->add_option("--report", report_path, "also write the output here");

  auto* classes = app.add_subcommand("classes", "list equivalence classes with their primary cuts");
  classes->add_option("net", net_path)->required();
  classes->add_option("wsets", sets_path)->required();

  auto* hasse = app.add_subcommand("hasse", "class domination diagram");
  hasse->add_option("net", net_path)->required();
  hasse->add_option("wsets", sets_path)->required();
  hasse->add_option("--dot", dot_path, "write DOT here (default: stdout)");

  auto* primary = app.add_subcommand("primary-cut", "primary minimum cut of an edge set");
  primary->add_option("net", net_path)->required();
  primary->add_option("--target", target, "comma-separated edge labels")->required();

  auto* mincut = app.add_subcommand("mincut", "minimum cut capacity of an edge set");
  mincut->add_option("net", net_path)->required();
  mincut->add_option("--target", target, "comma-separated edge labels")->required();

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  auto* comb = gen->add_subcommand("combination", "combination network with distinct-node wiretap sets");
  comb->add_option("--n", n)->required();
  comb->add_option("--k", k)->required();
  comb->add_option("--r", r)->required();
  comb->add_option("--out-prefix", out_prefix)->required();
  comb->add_option("--cap", cap);
  auto* rwt = gen->add_subcommand("rwiretap", "all edge subsets of size at most r");
  rwt->add_option("net", net_path)->required();
  rwt->add_option("--r", r)->required();
  rwt->add_option("--out", out_path)->required();
  rwt->add_option("--cap", cap);

  auto* verify = app.add_subcommand("verify", "cross-check the fast algorithms against brute force");
  verify->add_option("net", net_path)->required();
  verify->add_option("wsets", sets_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    Output out;

    if (*bound) {
      auto [ln, coll] = load(net_path, sets_path);
      wtb::BoundOptions opt;
      opt.mode = mode == "nmax" ? wtb::BoundMode::NMax : mode == "n" ? wtb::BoundMode::NOnly : wtb::BoundMode::Both;
      opt.select = select == "mincut" ? wtb::SelectRule::MinCut : wtb::SelectRule::Cardinality;
      opt.regularize = regularize;
      opt.tie_seed = seed;
      auto rep = wtb::compute_bound(ln.net, coll, opt);

      out.human << "wiretap sets: " << rep.collection_size << "\n";
      if (rep.n_classes) out.human << "equivalence classes N: " << *rep.n_classes << "\n";
      if (rep.n_max) out.human << "maximal classes N_max: " << *rep.n_max << "\n";
      out.human << "primary cuts:\n";
      for (const auto& c : rep.cuts) out.human << "  " << wtb::format_edges(c.edges, ln) << "\n";
      out.human << "recommended alphabet size: >= " << rep.recommended_alphabet_size
                << (rep.sink_term_included ? " (larger of bound + 1 and the sink count)" : " (bound + 1)") << "\n";

      out.put("sets", rep.collection_size);
      if (rep.n_classes) out.put("n", *rep.n_classes);
      if (rep.n_max) out.put("n_max", *rep.n_max);
      out.put("cuts", cut_list(rep.cuts, ln));
      out.put("alphabet", rep.recommended_alphabet_size);
      std::cout << out.str();
      if (!report_path.empty()) spit(report_path, out.str());
      return 0;
    }

    if (*classes) {
      auto [ln, coll] = load(net_path, sets_path);
      auto parts = wtb::partition_classes(ln.net, coll);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out.human << "Cl" << i + 1 << " cut=" << wtb::format_edges(parts[i].primary_cut.edges, ln) << " members:";
        for (std::size_t m : parts[i].members) out.human << " " << wtb::format_edges(coll[m].edges, ln);
        out.human << "\n";
      }
      out.put("classes", parts.size());
      std::vector<wtb::Cut> cuts;
      for (const auto& p : parts) cuts.push_back(p.primary_cut);
      out.put("class_cuts", cut_list(cuts, ln));
      std::cout << out.str();
      return 0;
    }

    if (*hasse) {
      auto [ln, coll] = load(net_path, sets_path);
      auto d = wtb::class_hasse(ln.net, coll);
      auto dot = wtb::export_hasse_dot(d, ln);
      if (dot_path.empty()) {
        std::cout << dot;
      } else {
        spit(dot_path, dot);
        std::cout << "classes=" << d.classes.size() << "\ncovers=" << d.covers.size()
                  << "\nmaximal=" << d.maximal.size() << "\n";
      }
      return 0;
    }

    if (*primary || *mincut) {
      auto ln = load_network(net_path);
      auto set = wtb::parse_edge_list(target, ln);
      if (*mincut) {
        auto c = wtb::mincut_capacity(ln.net, set);
        out.human << "mincut(s, " << wtb::format_edges(set, ln) << ") = " << c << "\n";
        out.put("mincut", c);
      } else {
        auto cut = wtb::primary_min_cut(ln.net, set);
        out.human << "primary minimum cut of " << wtb::format_edges(set, ln) << ": "
                  << wtb::format_edges(cut.edges, ln) << "\n";
        out.put("capacity", cut.capacity);
        out.put("cut", wtb::format_edges(cut.edges, ln));
      }
      std::cout << out.str();
      return 0;
    }

    if (*comb) {
      auto g = wtb::gen_combination(n, k, r, cap);
      spit(out_prefix + ".net", wtb::serialize_network(g.network));
      spit(out_prefix + ".wsets", wtb::serialize_edge_sets(g.sets, g.network));
      out.human << "wrote " << out_prefix << ".net and " << out_prefix << ".wsets\n";
      out.put("edges", g.network.net.edge_count());
      out.put("sinks", g.network.net.sinks()->size());
      out.put("sets", g.sets.size());
      std::cout << out.str();
      return 0;
    }

    if (*rwt) {
      auto ln = load_network(net_path);
      auto sets = wtb::gen_r_wiretap(ln.net, r, cap);
      spit(out_path, wtb::serialize_edge_sets(sets, ln));
      out.human << "wrote " << out_path << "\n";
      out.put("sets", sets.size());
      std::cout << out.str();
      return 0;
    }

    if (*verify) {
      auto [ln, coll] = load(net_path, sets_path);
      auto sets = edge_sets(coll);
      auto ob = wtb::oracle::oracle_bounds(ln.net, sets);
      wtb::BoundOptions opt;
      opt.mode = wtb::BoundMode::Both;
      auto rep = wtb::compute_bound(ln.net, coll, opt);
      auto parts = wtb::partition_classes(ln.net, coll);

      std::size_t bad = 0;
      auto check = [&](bool ok, const std::string& what) {
        if (!ok) {
          ++bad;
          out.human << "MISMATCH " << what << "\n";
        }
      };
      for (std::size_t i = 0; i < coll.size(); ++i) {
        const auto& fam = ob.families[i];
        check(fam.capacity == coll[i].mincut, "mincut of " + wtb::format_edges(coll[i].edges, ln));
        check(wtb::oracle::primary_of(ln.net, fam).edges == wtb::primary_min_cut(ln.net, coll[i].edges).edges,
              "primary cut of " + wtb::format_edges(coll[i].edges, ln));
      }
      std::vector<std::vector<std::size_t>> fast_classes;
      for (const auto& p : parts) fast_classes.push_back(p.members);
      check(fast_classes == ob.classes, "equivalence partition");
      check(*rep.n_classes == ob.n_classes(), "N");
      check(*rep.n_max == ob.n_max(), "N_max");
      std::vector<wtb::EdgeSet> fast_b, oracle_b;
      for (const auto& c : rep.cuts) fast_b.push_back(c.edges);
      for (const auto& c : ob.maximal_primary_cuts) oracle_b.push_back(c.edges);
      check(fast_b == oracle_b, "primary cuts of the maximal classes");

      out.human << (bad ? "verification FAILED" : "verification passed") << ": N=" << ob.n_classes()
                << " N_max=" << ob.n_max() << "\n";
      out.put("n", ob.n_classes());
      out.put("n_max", ob.n_max());
      out.put("mismatches", bad);
      std::cout << out.str();
      return bad ? kMismatch : 0;
    }
  } catch (const wtb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == wtb::Errc::InstanceTooLarge || e.code() == wtb::Errc::CollectionTooLarge ? kTooLarge : kInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}

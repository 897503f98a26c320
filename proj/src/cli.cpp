#include "plumbcalc/cli.hpp"

#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "plumbcalc/calculus.hpp"
#include "plumbcalc/constructions.hpp"
#include "plumbcalc/contfrac.hpp"
#include "plumbcalc/graded_root.hpp"
#include "plumbcalc/graph_io.hpp"
#include "plumbcalc/invariants.hpp"
#include "plumbcalc/seifert.hpp"
#include "plumbcalc/sweep.hpp"

namespace plumbcalc::cli {

namespace {

constexpr int kOk = 0, kFalse = 1, kInvalid = 2, kUnknown = 3;

nlohmann::json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

struct Output {
  std::ostream& out;
  std::string path;
  void emit(const std::string& text) const {
    if (path.empty())
      out << text;
    else
      write_text_file(path, text);
  }
};

std::string render_graph(const PlumbingGraph& g, const std::string& format) {
  if (format == "json") return dump_json(to_json(g));
  if (format == "dot") return to_dot(g);
  throw std::invalid_argument("unknown format '" + format + "'");
}

std::string sole_arrow(const PlumbingGraph& g, const std::string& which) {
  if (g.arrows().size() != 1)
    throw std::invalid_argument(which + " has " + std::to_string(g.arrows().size()) +
                                " arrows; pass the label explicitly");
  return g.arrows()[0].label;
}

nlohmann::json diagram_json(const SpliceDiagram& d) {
  nlohmann::json nodes = nlohmann::json::array(), inc = nlohmann::json::array(), edges = nlohmann::json::array();
  for (std::size_t k = 0; k < d.node_count(); ++k) {
    nlohmann::json leaves = nlohmann::json::array();
    for (const auto& w : d.leaf_weights[k]) {
      leaves.push_back(big(w));
      inc.push_back({{"node", k}, {"direction", "leaf"}, {"weight", big(w)}});
    }
    nodes.push_back({{"index", k}, {"vertex", d.node_ids[k]}, {"leaf_weights", leaves}});
  }
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const auto& x = d.edges[e];
    inc.push_back({{"node", x.a}, {"direction", "node " + std::to_string(x.b)}, {"weight", big(x.weight_a)}});
    inc.push_back({{"node", x.b}, {"direction", "node " + std::to_string(x.a)}, {"weight", big(x.weight_b)}});
    edges.push_back({{"a", x.a},
                     {"b", x.b},
                     {"weight_a", big(x.weight_a)},
                     {"weight_b", big(x.weight_b)},
                     {"determinant", big(edge_determinant(d, e))}});
  }
  return {{"nodes", nodes}, {"incidences", inc}, {"edges", edges}, {"canonical", d.canonical()}};
}

PlumbingGraph build_family(const std::string& name, std::int64_t n, std::int64_t k, CutData ab, CutData cd,
                           std::int64_t p, std::int64_t q, std::int64_t r) {
  if (name == "X") return family_X(n);
  if (name == "Y") return family_Y(n);
  if (name == "Z") return family_Z(n);
  if (name == "W") return family_W(n);
  if (name == "gm") return family_gm(k, ab, cd);
  if (name == "sigma1") return sigma1(n);
  if (name == "sigma2") return sigma2(n);
  if (name == "brieskorn") return brieskorn_plumbing(BrieskornTriple::make(p, q, r));
  throw std::invalid_argument("unknown family '" + name + "'");
}

PlumbingGraph arrowed_brieskorn(const BrieskornTriple& t, const std::string& arrow) {
  PlumbingGraph g = brieskorn_plumbing(t);
  if (arrow.empty()) return g;
  std::int64_t alpha = 0;
  if (arrow == "p")
    alpha = t.p;
  else if (arrow == "q")
    alpha = t.q;
  else if (arrow == "r")
    alpha = t.r;
  else
    throw std::invalid_argument("--arrow must be p, q or r");
  const std::string end = leg_end(g, alpha);
  return with_arrow(std::move(g), end, "K(" + std::to_string(alpha) + ")");
}

void dispatch(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> argv_store{"plumbcalc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  app.parse(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"plumbcalc: exact plumbing calculus for graph homology spheres"};
  app.require_subcommand(1);
  int code = kOk;

  std::string output, format = "json";

  // family
  auto* fam = app.add_subcommand("family", "Build a family graph");
  std::string fam_name, fam_arrow;
  std::int64_t fam_n = 1, fam_k = 1, fa = 1, fb = 1, fc = 1, fd = 1, fp = 2, fq = 3, fr = 5;
  fam->add_option("--name", fam_name, "X, Y, Z, W, gm, sigma1, sigma2, brieskorn")->required();
  fam->add_option("--n", fam_n);
  fam->add_option("--k", fam_k);
  fam->add_option("--a", fa);
  fam->add_option("--b", fb);
  fam->add_option("--c", fc);
  fam->add_option("--d", fd);
  fam->add_option("--p", fp);
  fam->add_option("--q", fq);
  fam->add_option("--r", fr);
  fam->add_option("--arrow", fam_arrow, "brieskorn only: p, q or r");
  fam->add_option("-o,--output", output);
  fam->add_option("--format", format);
  fam->callback([&] {
    PlumbingGraph g = fam_name == "brieskorn"
                          ? arrowed_brieskorn(BrieskornTriple::make(fp, fq, fr), fam_arrow)
                          : build_family(fam_name, fam_n, fam_k, {fa, fb}, {fc, fd}, fp, fq, fr);
    Output{out, output}.emit(render_graph(g, format));
  });

  // brieskorn
  auto* bri = app.add_subcommand("brieskorn", "Canonical negative-definite plumbing of a Brieskorn sphere");
  std::int64_t bp = 0, bq = 0, br = 0;
  std::string b_arrow;
  bri->add_option("--p", bp)->required();
  bri->add_option("--q", bq)->required();
  bri->add_option("--r", br)->required();
  bri->add_option("--arrow", b_arrow, "p, q or r");
  bri->add_option("-o,--output", output);
  bri->add_option("--format", format);
  bri->callback([&] {
    Output{out, output}.emit(render_graph(arrowed_brieskorn(BrieskornTriple::make(bp, bq, br), b_arrow), format));
  });

  // splice
  auto* spl = app.add_subcommand("splice", "Splice two arrowed graphs");
  std::string sa, sb, arrow_a, arrow_b;
  spl->add_option("a", sa)->required();
  spl->add_option("b", sb)->required();
  spl->add_option("--arrow-a", arrow_a);
  spl->add_option("--arrow-b", arrow_b);
  spl->add_option("-o,--output", output);
  spl->add_option("--format", format);
  spl->callback([&] {
    const auto g1 = read_graph_file(sa), g2 = read_graph_file(sb);
    const std::string la = arrow_a.empty() ? sole_arrow(g1, "first graph") : arrow_a;
    const std::string lb = arrow_b.empty() ? sole_arrow(g2, "second graph") : arrow_b;
    Output{out, output}.emit(render_graph(splice(g1, la, g2, lb), format));
  });

  // splice-diagram
  auto* sd = app.add_subcommand("splice-diagram", "Splice diagram of a ZHS tree");
  std::string sd_in;
  sd->add_option("input", sd_in)->required();
  sd->add_option("-o,--output", output);
  sd->callback([&] { Output{out, output}.emit(dump_json(diagram_json(splice_diagram(read_graph_file(sd_in))))); });

  // reduce
  auto* red = app.add_subcommand("reduce", "Apply blow-downs and zero-chain absorption to a fixpoint");
  std::string red_in;
  red->add_option("input", red_in)->required();
  red->add_option("-o,--output", output);
  red->add_option("--format", format);
  red->callback([&] {
    const auto g = read_graph_file(red_in);
    if (!g.is_tree()) throw std::invalid_argument("reduce requires a tree");
    Output{out, output}.emit(render_graph(reduce(g), format));
  });

  // invariants
  auto* inv = app.add_subcommand("invariants", "Invariant report");
  std::string inv_in;
  inv->add_option("input", inv_in)->required();
  inv->add_option("-o,--output", output);
  inv->callback([&] { Output{out, output}.emit(dump_json(to_json(invariant_report(read_graph_file(inv_in))))); });

  // equiv
  auto* eq = app.add_subcommand("equiv", "Decide equivalence of two ZHS trees");
  std::string ea, eb;
  eq->add_option("a", ea)->required();
  eq->add_option("b", eb)->required();
  eq->callback([&] {
    const auto v = equivalent(read_graph_file(ea), read_graph_file(eb));
    nlohmann::json j{{"verdict", to_string(v.tag)}};
    if (v.witness)
      j["witness"] = {{"invariant", v.witness->invariant}, {"a", v.witness->left}, {"b", v.witness->right}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    out << dump_json(j);
    code = v.tag == Verdict::Equivalent ? kOk : (v.tag == Verdict::Distinct ? kFalse : kUnknown);
  });

  // graded-root
  auto* gr = app.add_subcommand("graded-root", "Tau sequence, graded root and d-invariants");
  std::int64_t gp = 0, gq = 0, grr = 0;
  std::string emit_root, dot_path;
  gr->add_option("--p", gp)->required();
  gr->add_option("--q", gq)->required();
  gr->add_option("--r", grr)->required();
  gr->add_option("--emit-root", emit_root);
  gr->add_option("--dot", dot_path);
  gr->callback([&] {
    const auto t = BrieskornTriple::make(gp, gq, grr);
    const auto tau = tau_sequence(t);
    const auto root = graded_root(tau);
    const auto ds = involutive_ds(root);
    const auto sub = monotone_subroot(root);
    nlohmann::json j{{"triple", {t.p, t.q, t.r}},
                     {"center", tau.center},
                     {"window", tau.raw.size() - 1},
                     {"shift", tau.shift},
                     {"min_tau_raw", tau.min_raw()},
                     {"min_tau", tau.min_normalized()},
                     {"certified", tau.certified},
                     {"symmetric", tau.symmetric},
                     {"leaves", root.leaves().size()},
                     {"d", d_invariant(root)},
                     {"dbar", ds.dbar},
                     {"dunder", ds.dunder},
                     {"monotone_leaves", sub.leaves().size()},
                     {"monotone_trivial", sub.is_trivial()}};
    out << dump_json(j);
    if (!emit_root.empty()) write_text_file(emit_root, dump_json(to_json(root)));
    if (!dot_path.empty()) write_text_file(dot_path, to_dot(root));
  });

  // cf
  auto* cf = app.add_subcommand("cf", "Hirzebruch-Jung continued fractions");
  cf->require_subcommand(1);
  auto* cf_expand = cf->add_subcommand("expand", "p/q -> [c1,...,ck]");
  std::string cf_in;
  cf_expand->add_option("value", cf_in)->required();
  cf_expand->callback([&] {
    // p and q are taken as written so that non-coprime input is rejected, not reduced.
    const auto slash = cf_in.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("expected p/q");
    const Rational p = parse_rational(cf_in.substr(0, slash)), q = parse_rational(cf_in.substr(slash + 1));
    if (denominator(p) != 1 || denominator(q) != 1) throw std::invalid_argument("p and q must be integers");
    const auto e = hj_expand(to_int64(numerator(p)), to_int64(numerator(q)));
    out << to_string(numerator(p)) << "/" << to_string(numerator(q)) << " = " << format_expansion(e) << "\n";
  });
  auto* cf_eval_cmd = cf->add_subcommand("eval", "[c1,...,ck] -> p/q");
  std::string cf_expr;
  cf_eval_cmd->add_option("expansion", cf_expr)->required();
  cf_eval_cmd->callback([&] { out << to_string(cf_eval(parse_expansion(cf_expr))) << "\n"; });

  // sweep
  auto* sw = app.add_subcommand("sweep", "Run a family check over a range of n");
  std::string check;
  std::int64_t from = 1, to = 1;
  bool as_json = false;
  sw->add_option("--check", check, "theorem2, mubar, dinv, casson, families, cf")->required();
  sw->add_option("--from", from);
  sw->add_option("--to", to);
  sw->add_flag("--json", as_json);
  sw->add_option("-o,--output", output);
  sw->callback([&] {
    const auto report = run_sweep(check, from, to, configured_threads());
    Output{out, output}.emit(as_json ? dump_json(to_json(report)) : format_table(report));
    code = report.pass() ? kOk : kFalse;
  });

  // export
  auto* ex = app.add_subcommand("export", "Re-emit a graph as json or dot");
  std::string ex_in;
  ex->add_option("input", ex_in)->required();
  ex->add_option("--format", format);
  ex->add_option("-o,--output", output);
  ex->callback([&] {
    const auto g = read_graph_file(ex_in);
    validate(g);
    Output{out, output}.emit(render_graph(g, format));
  });

  try {
    dispatch(app, args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "plumbcalc: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "plumbcalc: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    err << "plumbcalc: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    err << "plumbcalc: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "plumbcalc: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "plumbcalc: internal error: " << e.what() << "\n";
    return kFalse;
  }
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace plumbcalc::cli

// chiral: command-line front end for the chiral-block toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cb/connection/connection.hpp"
#include "cb/zhu/zhu.hpp"

using namespace cb;
using Json = nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kBadInput = 3, kUnstable = 4, kInternal = 5 };

struct Outcome {
  Json report = Json::object();
  bool failed = false;
  bool unstable = false;
};

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

Json check_json(const CheckResult& r) {
  Json j;
  j["verdict"] = verdict(r.pass);
  j["cases"] = r.cases;
  if (!r.pass) j["witness"] = r.witness;
  return j;
}

void render(const Json& j, std::ostream& os, const std::string& indent) {
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      os << indent << key << ":\n";
      render(v, os, indent + "  ");
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      os << indent << key << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          std::ostringstream sub;
          render(x, sub, indent + "    ");
          std::string s = sub.str();
          s.replace(indent.size(), 2, "- ");
          os << s;
        } else {
          os << indent << "  - " << x.dump() << "\n";
        }
      }
    } else if (v.is_array()) {
      os << indent << key << ": ";
      for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      os << "\n";
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      os << indent << key << ":\n";
      std::istringstream in(v.get<std::string>());
      for (std::string line; std::getline(in, line);) os << indent << "  " << line << "\n";
    } else {
      os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json problem_json(const CovacuaProblem& p) {
  Json pts = Json::array();
  for (const auto& pt : p.points)
    pts.push_back({{"coordinate", pt.coord ? to_string(*pt.coord) : std::string("inf")}, {"module", pt.module->label()}});
  return pts;
}

std::vector<ModulePtr> probe_modules(int p, int q) {
  std::vector<ModulePtr> out;
  for (const auto& l : distinct_labels(p, q)) out.push_back(simple_module(l));
  out.push_back(dual_module(out.back()));
  return out;
}

// ---- verbs

struct AxiomArgs {
  int p = 2, q = 5;
  int depth = 4;
  int samples = 200;
  int exhaustive_weight = 3;
  int sample_weight = 6;
  int mode_range = 3;
  std::uint64_t seed = 7;
};

Outcome run_axioms(const AxiomArgs& a) {
  validate_model(a.p, a.q);
  Outcome o;
  o.report["verb"] = "verify-axioms";
  o.report["model"] = std::to_string(a.p) + "/" + std::to_string(a.q);
  o.report["central_charge"] = to_string(central_charge(a.p, a.q));
  o.report["probe_depth"] = a.depth;
  o.report["seed"] = a.seed;
  AxiomSuiteConfig cfg;
  cfg.depth = a.depth;
  cfg.samples = a.samples;
  cfg.exhaustive_weight = a.exhaustive_weight;
  cfg.sample_weight = a.sample_weight;
  cfg.mode_range = a.mode_range;
  cfg.seed = a.seed;
  ModeEngine& e = shared_engine(central_charge(a.p, a.q));
  Json axioms = Json::object();
  for (const auto& t : run_axiom_suite(e, probe_modules(a.p, a.q), cfg)) {
    axioms[t.name] = check_json(t.result);
    o.failed = o.failed || !t.result.pass;
  }
  o.report["axioms"] = axioms;
  o.report["verdict"] = verdict(!o.failed);
  return o;
}

Outcome run_module(const std::string& desc, int depth) {
  ModulePtr m = parse_module(desc);
  Outcome o;
  o.report["verb"] = "module";
  o.report["module"] = m->label();
  o.report["central_charge"] = to_string(m->c());
  o.report["weight"] = to_string(m->h());
  o.report["depth"] = depth;
  o.report["graded_dimensions"] = m->graded_dims(depth);
  auto dd = dual_module(dual_module(m));
  bool same = dd->graded_dims(depth) == m->graded_dims(depth);
  o.report["double_dual_dimensions"] = verdict(same);
  o.failed = !same;
  return o;
}

Outcome run_zhu(int p, int q, int depth, bool omap) {
  validate_model(p, q);
  Outcome o;
  o.report["verb"] = "zhu";
  o.report["model"] = std::to_string(p) + "/" + std::to_string(q);
  o.report["max_depth"] = depth;
  ModeEngine& e = shared_engine(central_charge(p, q));
  ZhuPresentation z;
  for (int d = 2; d <= depth; ++d) {
    z = zhu_algebra(e, d);
    if (z.stabilized) break;
  }
  o.report["depth"] = z.depth;
  o.report["stabilized"] = z.stabilized;
  o.report["dimension"] = z.dimension;
  o.report["minimal_polynomial"] = z.minpoly.str("x");
  Json roots = Json::array();
  for (const auto& [r, m] : z.roots.roots) roots.push_back(m > 1 ? to_string(r) + "^" + std::to_string(m) : to_string(r));
  o.report["roots"] = roots;
  Json hs = Json::array();
  for (const Q& h : distinct_weights(p, q)) hs.push_back(to_string(h));
  o.report["conformal_weights"] = hs;
  bool match = static_cast<int>(z.roots.roots.size()) == static_cast<int>(distinct_weights(p, q).size());
  if (match) {
    auto ws = distinct_weights(p, q);
    std::sort(ws.begin(), ws.end());
    for (std::size_t i = 0; i < ws.size(); ++i) match = match && z.roots.roots[i].first == ws[i] && z.roots.roots[i].second == 1;
  }
  o.report["roots_match_weights"] = verdict(match);
  const bool sf = !z.minpoly.is_zero() && zero_mode_semisimple(z.minpoly);
  o.report["squarefree"] = verdict(sf);
  o.failed = !match || !sf;
  if (omap) {
    ZhuQuotient zq(e, z.depth);
    std::vector<ModulePtr> simples;
    for (const auto& l : distinct_labels(p, q)) simples.push_back(simple_module(l));
    OMapReport r = verify_o_map(e, zq, simples, 40, 6, 7);
    o.report["o_map"] = {{"star", check_json(r.star)}, {"circ", check_json(r.circ)}, {"dimension", check_json(r.dimension)}};
    o.failed = o.failed || !r.pass();
  }
  o.unstable = !z.stabilized;
  return o;
}

struct BlocksArgs {
  std::string file;
  int depth = 8;
  int weight_bound = 3;
  std::vector<std::string> checks;
  int split = 2;
  std::vector<std::string> insert;
  bool relations = false;
  int q_order = 4;
  int samples = 10;
  std::uint64_t seed = 7;
};

Q fresh_coordinate(const CovacuaProblem& p, std::vector<Q>& taken) {
  for (int k = 2;; ++k) {
    Q x(k);
    bool used = std::find(taken.begin(), taken.end(), x) != taken.end();
    for (const auto& pt : p.points) used = used || (pt.coord && *pt.coord == x);
    if (!used) {
      taken.push_back(x);
      return x;
    }
  }
}

Outcome run_blocks(const BlocksArgs& a) {
  CovacuaProblem p = parse_problem(read_file(a.file));
  p.weight_bound = a.weight_bound;
  p.validate();
  StabilizationConfig cfg;
  cfg.max_depth = a.depth;
  cfg.start_depth = std::min(cfg.start_depth, a.depth);
  Outcome o;
  o.report["verb"] = "blocks";
  o.report["problem"] = problem_json(p);
  o.report["max_depth"] = a.depth;
  o.report["weight_bound"] = a.weight_bound;
  BlockSpace b = block_dimension(p, cfg);
  o.report["dimension"] = b.dimension;
  o.report["depth"] = b.depth;
  o.report["stabilized"] = b.stabilized;
  Json hist = Json::array();
  for (const auto& [d, w, x] : b.history) hist.push_back({{"depth", d}, {"weight_bound", w}, {"dimension", x}});
  o.report["history"] = hist;
  o.report["relation_rows"] = b.stats.rows;
  o.report["dropped_rows"] = b.stats.dropped;
  o.unstable = !b.stabilized;
  if (a.relations) {
    ModeEngine& e = shared_engine(p.central_charge());
    CovacuaAssembler as(e, p, p.weight_bound);
    o.report["relations"] = as.assemble(*b.layout, Exec::Parallel).to_text();
  }
  Json checks = Json::object();
  for (const auto& c : a.checks) {
    if (c == "propagation") {
      std::vector<Q> extra, taken;
      for (const auto& s : a.insert) extra.push_back(parse_rational(s));
      if (extra.empty()) extra.push_back(fresh_coordinate(p, taken));
      auto r = check_propagation_of_vacua(p, extra, cfg);
      Json ins = Json::array();
      for (const Q& x : extra) ins.push_back(to_string(x));
      checks["propagation"] = {{"inserted", ins}, {"base", r.base}, {"extended", r.extended},
                               {"stabilized", r.stabilized}, {"verdict", verdict(r.pass())}};
      o.failed = o.failed || (r.stabilized && !r.pass());
      o.unstable = o.unstable || !r.stabilized;
    } else if (c == "decomposition") {
      CovacuaProblem fin = p;
      if (int ia = p.infinity_index(); ia >= 0) fin.points.erase(fin.points.begin() + ia);
      auto r = check_decomposition(fin, {}, cfg);
      Json ch = Json::array();
      for (std::size_t i = 0; i < r.channels.size(); ++i)
        ch.push_back({{"channel", r.channels[i]->label()}, {"weight", to_string(r.channels[i]->h())},
                      {"eigen_multiplicity", r.multiplicities[i]}, {"direct", r.direct[i]}});
      checks["decomposition"] = {{"fusion_dimension", r.fusion_dimension}, {"depth", r.depth},
                                 {"stabilized", r.stabilized}, {"channels", ch}, {"verdict", verdict(r.pass())}};
      o.failed = o.failed || (r.stabilized && !r.pass());
      o.unstable = o.unstable || !r.stabilized;
    } else if (c == "factorization") {
      auto r = check_factorization(p, a.split, {}, cfg);
      bool stab = r.direct_stabilized;
      for (const auto& t : r.terms) stab = stab && t.stabilized;
      checks["factorization"] = {{"split", a.split}, {"table", r.str()}, {"direct", r.direct},
                                 {"channel_sum", r.channel_sum()}, {"verdict", verdict(r.pass())}};
      o.failed = o.failed || (stab && !r.pass());
      o.unstable = o.unstable || !stab;
    } else if (c == "sewing") {
      ModeEngine& e = shared_engine(p.central_charge());
      Json s = Json::object();
      std::vector<std::string> seen;
      for (const auto& pt : p.points) {
        ModulePtr m = pt.module;
        if (auto* d = dynamic_cast<ContragredientModule*>(m.get())) m = d->base();
        if (std::find(seen.begin(), seen.end(), m->label()) != seen.end()) continue;
        seen.push_back(m->label());
        auto r = sewing_element_check(e, m, a.q_order, sample_modes(e, a.samples, 5, 3, a.seed));
        s[m->label()] = check_json(r);
        o.failed = o.failed || !r.pass;
      }
      checks["sewing"] = s;
    } else {
      throw std::invalid_argument("unknown check '" + c + "'");
    }
  }
  if (!a.checks.empty()) o.report["checks"] = checks;
  return o;
}

struct ConnectionArgs {
  std::string file;
  int movable = -1;
  int flat_with = -1;
  int depth = 0;
  int samples = 3;
  int degree_cap = 32;
  int max_depth = 8;
  std::string export_path;
};

Outcome run_connection(const ConnectionArgs& a) {
  CovacuaProblem p = parse_problem(read_file(a.file));
  p.validate();
  Outcome o;
  o.report["verb"] = "connection";
  o.report["problem"] = problem_json(p);
  int movable = a.movable;
  if (movable < 0)
    for (int i = static_cast<int>(p.points.size()) - 1; i >= 0 && movable < 0; --i)
      if (!p.points[i].at_infinity()) movable = i;
  if (movable < 0 || movable >= static_cast<int>(p.points.size()) || p.points[movable].at_infinity())
    throw std::invalid_argument("movable point must be a finite marked point");
  int depth = a.depth;
  if (depth <= 0) {
    StabilizationConfig cfg;
    cfg.max_depth = a.max_depth;
    BlockSpace b = block_dimension(p, cfg);
    o.report["stabilized"] = b.stabilized;
    o.unstable = !b.stabilized;
    depth = b.depth;
  }
  o.report["depth"] = depth;
  o.report["movable"] = movable;
  ConnectionMatrix m = connection_matrix(p, movable, depth);
  o.report["dimension"] = m.dimension();
  o.report["basis"] = m.basis_labels;
  Json rows = Json::array();
  for (int i = 0; i < m.dimension(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dimension(); ++j) row.push_back(to_string(m.matrix(i, j)));
    rows.push_back(row);
  }
  o.report["matrix"] = rows;
  auto st = connection_depth_stability(p, movable, depth);
  auto eu = euler_check(p, depth);
  o.report["depth_stability"] = check_json(st);
  o.report["euler"] = check_json(eu);
  o.failed = !st.pass || !eu.pass;
  InterpolationConfig ic;
  ic.holdout = a.samples;
  ic.degree_cap = a.degree_cap;
  if (a.flat_with >= 0) {
    auto f = flatness_check(p, movable, a.flat_with, depth, ic);
    o.report["flatness"] = {{"directions", Json::array({movable, a.flat_with})}, {"degree", f.degree},
                            {"result", check_json(f.result)}};
    o.failed = o.failed || !f.result.pass;
  }
  if (!a.export_path.empty()) {
    auto ex = export_ode(p, movable, depth, ic);
    std::ofstream out(a.export_path);
    out << ex.document << "\n";
    o.report["export"] = {{"path", a.export_path}, {"singularities_at_marked_points", ex.singularities_at_marked_points}};
    o.failed = o.failed || !ex.singularities_at_marked_points;
  }
  return o;
}

Outcome run_sew(const std::string& label, int q_order, int samples, int max_weight, std::uint64_t seed) {
  ModulePtr m = parse_module(label);
  ModeEngine& e = shared_engine(m->c());
  Outcome o;
  o.report["verb"] = "sew";
  o.report["module"] = m->label();
  o.report["q_order"] = q_order;
  o.report["samples"] = samples;
  o.report["seed"] = seed;
  auto r = sewing_element_check(e, m, q_order, sample_modes(e, samples, max_weight, 3, seed));
  o.report["identity"] = check_json(r);
  o.failed = !r.pass;
  return o;
}

Outcome run_conditions(int p, int q, int zhu_depth, int c2_depth, int induced_depth) {
  Outcome o;
  ConditionReport r = condition_report(p, q, zhu_depth, c2_depth, induced_depth);
  o.report["verb"] = "conditions";
  o.report["model"] = std::to_string(p) + "/" + std::to_string(q);
  o.report["depths"] = {{"zhu", zhu_depth}, {"c2", c2_depth}, {"induced", induced_depth}};
  o.report["condition_I"] = {{"c2_dimension", r.c2.total}, {"slices", r.c2.slices}, {"verdict", verdict(r.condition1())}};
  o.report["condition_II"] = {{"minimal_polynomial", r.zhu.minpoly.str("x")}, {"verdict", verdict(r.condition2())}};
  Json ind = Json::array();
  for (const auto& i : r.induced)
    ind.push_back({{"module", i.label.str()}, {"checked_depth", i.checked_depth}, {"simple", i.simple}});
  o.report["condition_III"] = {{"modules", ind}, {"verdict", verdict(r.condition3())}};
  o.failed = !r.condition1() || !r.condition2() || !r.condition3();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chiral: conformal blocks of Virasoro minimal models in exact arithmetic"};
  app.require_subcommand(1);
  std::string format = "table";
  int threads = 0;
  app.add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--threads", threads, "worker thread cap (CB_THREADS also applies)");

  AxiomArgs ax;
  auto* c_ax = app.add_subcommand("verify-axioms", "axiom suite on the vacuum VOA and its simple modules");
  c_ax->add_option("--p", ax.p);
  c_ax->add_option("--q", ax.q);
  c_ax->add_option("--depth", ax.depth, "module depth probed");
  c_ax->add_option("--seed", ax.seed);
  c_ax->add_option("--samples", ax.samples);
  c_ax->add_option("--exhaustive-weight", ax.exhaustive_weight);
  c_ax->add_option("--sample-weight", ax.sample_weight);
  c_ax->add_option("--mode-range", ax.mode_range);

  std::string mod_desc;
  int mod_depth = 6;
  auto* c_mod = app.add_subcommand("module", "graded dimensions of a simple module");
  c_mod->add_option("descriptor", mod_desc, "p/q/r/s or c=..,h=..")->required();
  c_mod->add_option("--depth", mod_depth);

  int zp = 2, zq = 5, zdepth = 8;
  bool zomap = false;
  auto* c_zhu = app.add_subcommand("zhu", "zero-mode algebra presentation");
  c_zhu->add_option("--p", zp);
  c_zhu->add_option("--q", zq);
  c_zhu->add_option("--depth", zdepth);
  c_zhu->add_flag("--o-map", zomap, "also verify the o-map on top levels");

  BlocksArgs bl;
  auto* c_bl = app.add_subcommand("blocks", "dimension of the space of covacua");
  c_bl->add_option("problem", bl.file)->required();
  c_bl->add_option("--depth", bl.depth, "maximal truncation depth");
  c_bl->add_option("--weight-bound", bl.weight_bound);
  c_bl->add_option("--check", bl.checks, "propagation, decomposition, factorization, sewing")
      ->check(CLI::IsMember({"propagation", "decomposition", "factorization", "sewing"}));
  c_bl->add_option("--split", bl.split, "size of the left group for factorization");
  c_bl->add_option("--insert", bl.insert, "coordinates for vacuum insertion");
  c_bl->add_flag("--relations", bl.relations, "print the relation matrix");
  c_bl->add_option("--q-order", bl.q_order);
  c_bl->add_option("--samples", bl.samples);
  c_bl->add_option("--seed", bl.seed);

  ConnectionArgs cn;
  auto* c_cn = app.add_subcommand("connection", "connection matrices on the block bundle");
  c_cn->add_option("problem", cn.file)->required();
  c_cn->add_option("--movable", cn.movable);
  c_cn->add_option("--flat-with", cn.flat_with, "second direction for the flatness check");
  c_cn->add_option("--depth", cn.depth, "truncation depth (0: stabilization search)");
  c_cn->add_option("--max-depth", cn.max_depth);
  c_cn->add_option("--samples", cn.samples, "held-out interpolation samples");
  c_cn->add_option("--degree-cap", cn.degree_cap);
  c_cn->add_option("--export", cn.export_path, "write the ODE system as JSON");

  std::string sew_label = "2/5/1/2";
  int sew_order = 4, sew_samples = 10, sew_weight = 5;
  std::uint64_t sew_seed = 7;
  auto* c_sew = app.add_subcommand("sew", "sewing identity for Omega(L)");
  c_sew->add_option("--label", sew_label);
  c_sew->add_option("--q-order", sew_order);
  c_sew->add_option("--samples", sew_samples);
  c_sew->add_option("--max-weight", sew_weight);
  c_sew->add_option("--seed", sew_seed);

  int cp = 2, cq = 5, czhu = 8, cc2 = 8, cind = 8;
  auto* c_cond = app.add_subcommand("conditions", "Conditions I, II, III");
  c_cond->add_option("--p", cp);
  c_cond->add_option("--q", cq);
  c_cond->add_option("--zhu-depth", czhu);
  c_cond->add_option("--c2-depth", cc2);
  c_cond->add_option("--induced-depth", cind);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (threads > 0) set_worker_threads(threads);

  Outcome o;
  try {
    if (*c_ax) o = run_axioms(ax);
    else if (*c_mod) o = run_module(mod_desc, mod_depth);
    else if (*c_zhu) o = run_zhu(zp, zq, zdepth, zomap);
    else if (*c_bl) o = run_blocks(bl);
    else if (*c_cn) o = run_connection(cn);
    else if (*c_sew) o = run_sew(sew_label, sew_order, sew_samples, sew_weight, sew_seed);
    else if (*c_cond) o = run_conditions(cp, cq, czhu, cc2, cind);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  if (format == "json") {
    std::cout << o.report.dump(2) << "\n";
  } else {
    render(o.report, std::cout, "");
  }
  if (o.failed) return kCheckFailed;
  if (o.unstable) return kUnstable;
  return kOk;
}

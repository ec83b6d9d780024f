// Command-line front end: file-driven validation, duality, hyperspace
// construction, embedding, flow verification and search, with JSON reports.
// Exit codes: 0 all checks pass, 1 a modeled check failed, 2 malformed input.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alextop/flow.hpp"
#include "alextop/hyperspace.hpp"
#include "alextop/io.hpp"
#include "alextop/space.hpp"

using namespace alextop;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Report {
  std::string command;
  json inputs = json::array();
  json checks = json::array();
  json extra = json::object();
  bool text = false;
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void input(const std::string& path, const std::string& bytes) {
    inputs.push_back({{"path", path}, {"digest", digest(bytes)}});
  }
  void check(const std::string& name, bool pass, json detail = json::object()) {
    json c = {{"name", name}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
  int emit() {
    const bool ok = all_pass();
    if (text) {
      for (const auto& c : checks)
        std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ")
                  << c["name"].get<std::string>()
                  << (c.contains("detail") ? "  " + c["detail"].dump() : "") << "\n";
      for (const auto& [k, v] : extra.items()) std::cout << k << ": " << v.dump() << "\n";
    } else {
      json out = {{"schema_version", kSchemaVersion},
                  {"command", command},
                  {"inputs", inputs},
                  {"checks", checks},
                  {"ok", ok}};
      for (const auto& [k, v] : extra.items()) out[k] = v;
      if (timing)
        out["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
      std::cout << out.dump(2) << "\n";
    }
    return ok ? 0 : 1;
  }
};

FiniteSpace load_space(const std::string& path, Report& report) {
  const std::string bytes = read_file(path);
  report.input(path, bytes);
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw FormatError("malformed JSON in " + path);
  return parse_space(j);
}

std::string dirname_of(const std::string& path) {
  const auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string{} : path.substr(0, pos);
}

json witness_json(const FiniteSpace& s, const FlowWitness& w) {
  json out = {{"axiom", w.axiom}, {"detail", w.detail}};
  if (w.s) out["s"] = w.s->str();
  if (w.t) out["t"] = w.t->str();
  if (w.x) out["x"] = s.labels[*w.x];
  if (w.open_set) out["open_set"] = mask_to_string(s, *w.open_set);
  return out;
}

int cmd_validate(const std::string& path, Report& report) {
  FiniteSpace s;
  try {
    s = load_space(path, report);
  } catch (const SpaceError& e) {
    json detail = {{"defect", e.what()}};
    if (e.defect == SpaceDefect::NotClosedUnderUnion ||
        e.defect == SpaceDefect::NotClosedUnderIntersection)
      detail["witness"] = {e.witness_a, e.witness_b};
    report.check("topology_axioms", false, detail);
    return report.emit();
  }
  report.check("topology_axioms", true);
  const Preorder p = specialization_preorder(s);
  report.check("t0", true, {{"value", is_T0(s)}, {"definitional_equals_antisymmetry", true}});
  report.check("t1", true, {{"value", is_T1(s)}, {"definitional_equals_discreteness", true}});
  report.check("discrete", true, {{"value", is_discrete(s)}});
  json neighborhoods = json::object();
  for (int x = 0; x < s.size(); ++x)
    neighborhoods[s.labels[x]] = mask_to_string(s, p.below[x]);
  report.extra["minimal_neighborhoods"] = neighborhoods;
  return report.emit();
}

std::string hasse_dot(const FiniteSpace& s) {
  const Preorder p = specialization_preorder(s);
  std::string dot = "digraph hasse {\n";
  for (int x = 0; x < s.size(); ++x) dot += "  \"" + s.labels[x] + "\";\n";
  for (int y = 0; y < s.size(); ++y)
    for (int x = 0; x < s.size(); ++x) {
      if (x == y || !p.leq(y, x) || p.leq(x, y)) continue;
      bool covered = true;  // y -> x only when no z sits strictly between
      for (int z = 0; z < s.size() && covered; ++z)
        if (z != x && z != y && p.leq(y, z) && p.leq(z, x) && !p.leq(z, y) && !p.leq(x, z))
          covered = false;
      if (covered) dot += "  \"" + s.labels[y] + "\" -> \"" + s.labels[x] + "\";\n";
    }
  dot += "}\n";
  return dot;
}

int cmd_order(const std::string& path, const std::string& dot_path, bool require_poset,
              Report& report) {
  const FiniteSpace s = load_space(path, report);
  const Preorder p = specialization_preorder(s);
  if (require_poset && !p.antisymmetric()) {
    report.check("antisymmetric", false,
                 {{"note", "specialization preorder is not a partial order"}});
    return report.emit();
  }
  const std::string dot = hasse_dot(s);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    out << dot;
    report.check("dot_written", static_cast<bool>(out), {{"path", dot_path}});
    return report.emit();
  }
  std::cout << dot;
  return 0;
}

json hyper_verification(const Hyperspace& h) {
  json checks = json::array();
  auto add = [&](const std::string& name, bool pass) {
    checks.push_back({{"name", name}, {"pass", pass}});
  };
  add("carrier_is_alexandroff_t0", is_T0(h.space));
  const Preorder order = hyper_order(h);
  const bool lower_like = h.variant != HyperspaceVariant::Upper &&
                          h.variant != HyperspaceVariant::FiniteUpper;
  bool min_ok = true, order_ok = true;
  for (std::size_t i = 0; i < h.carrier.size(); ++i) {
    const Mask c = h.carrier[i];
    Mask expected = 0;
    for (std::size_t jj = 0; jj < h.carrier.size(); ++jj) {
      const Mask d = h.carrier[jj];
      const bool related = lower_like ? (c & ~d) == 0 : (d & ~c) == 0;
      if (related) expected |= Mask{1} << jj;
    }
    if (minimal_hyper_neighborhood(h, c) != expected) min_ok = false;
    if (order.below[static_cast<int>(i)] != expected) order_ok = false;
  }
  add(lower_like ? "minimal_neighborhood_is_supersets" : "minimal_neighborhood_is_subsets",
      min_ok);
  add(lower_like ? "order_is_reverse_inclusion" : "order_is_inclusion", order_ok);
  if (lower_like) {
    const Mask top = Mask{1} << h.point_index(h.base.full());
    add("intersection_of_opens_is_full_base_set", intersection_of_all_opens(h) == top);
  }
  return checks;
}

int cmd_hyper(const std::string& path, const std::string& variant_arg,
              const std::string& out_path, Report& report) {
  const FiniteSpace base = load_space(path, report);
  const HyperspaceVariant variant = parse_variant(variant_arg);
  const Hyperspace h = build_hyperspace(base, variant);
  const json provenance = {{"variant", variant_name(variant)}, {"base", base.labels}};
  for (const auto& c : hyper_verification(h))
    report.check(c["name"].get<std::string>(), c["pass"].get<bool>());
  if (!out_path.empty()) {
    std::ofstream space_out(out_path);
    space_out << space_to_json(h.space).dump(2) << "\n";
    std::ofstream prov_out(out_path + ".provenance.json");
    prov_out << provenance.dump(2) << "\n";
    report.extra["written"] = {out_path, out_path + ".provenance.json"};
  } else {
    report.extra["space"] = space_to_json(h.space);
    report.extra["provenance"] = provenance;
  }
  return report.emit();
}

int cmd_embed(const std::string& path, const std::string& out_path, Report& report) {
  const FiniteSpace s = load_space(path, report);
  const Embedding e = embed_into_upper(s);
  json map = json::object();
  for (int x = 0; x < s.size(); ++x)
    map[s.labels[x]] = e.hyper.space.labels[e.map.image[x]];
  bool injective = true;
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y)
      if (e.map.image[x] == e.map.image[y]) injective = false;
  report.check("injective", injective);
  const Preorder p = specialization_preorder(s);
  const Preorder q = hyper_order(e.hyper);
  bool order_embedding = true;
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (p.leq(x, y) != q.leq(e.map.image[x], e.map.image[y])) order_embedding = false;
  report.check("order_embedding", order_embedding);
  std::vector<Mask> induced;
  for (Mask o : e.hyper.space.opens) {
    Mask back = 0;
    for (int x = 0; x < s.size(); ++x)
      if (bit(o, e.map.image[x])) back |= Mask{1} << x;
    induced.push_back(back);
  }
  std::sort(induced.begin(), induced.end());
  induced.erase(std::unique(induced.begin(), induced.end()), induced.end());
  report.check("subspace_homeomorphism", induced == s.opens);
  report.extra["map"] = map;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << space_to_json(e.hyper.space).dump(2) << "\n";
    report.extra["written"] = out_path;
  }
  return report.emit();
}

int cmd_flow_verify(const std::string& path, Report& report) {
  const std::string bytes = read_file(path);
  report.input(path, bytes);
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw FormatError("malformed JSON in " + path);
  const FlowCandidate c = parse_flow(j, dirname_of(path));

  const FlowVerdict v = is_flow(c);
  auto axiom = [&](const std::string& name, const AxiomResult& r) {
    json detail = json::object();
    if (r.witness) detail["witness"] = witness_json(c.space, *r.witness);
    report.check(name, r.pass, detail);
  };
  axiom("identity_at_zero", v.identity_at_zero);
  axiom("group_law", v.group_law);
  axiom("continuity", v.continuity);
  report.extra["trivial"] = is_trivial(c);
  json radii = json::object();
  for (int x = 0; x < c.space.size(); ++x) {
    const StabilityRadius r = local_stability_radius(c, x);
    radii[c.space.labels[x]] = r.kind == StabilityRadius::Kind::Unbounded ? "unbounded"
                               : r.kind == StabilityRadius::Kind::None    ? "none"
                                                                          : r.value.str();
  }
  report.extra["stability_radius"] = radii;
  if (v.identity_at_zero.pass && v.continuity.pass && !v.group_law.pass)
    report.extra["note"] =
        "identity and continuity hold but the group law fails; repairing this shape of "
        "schedule would need a nonconstant homomorphism from the reals onto a finite "
        "group of self-maps, which no step schedule can express";
  return report.emit();
}

int cmd_flow_search(const std::string& path, const std::string& pool_arg, int max_bp,
                    bool homeo_only, Report& report) {
  const FiniteSpace s = load_space(path, report);
  FlowSearchOptions opt;
  opt.max_breakpoints = max_bp;
  opt.homeo_only = homeo_only;
  std::stringstream ss(pool_arg);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) opt.pool.push_back(parse_rational(item));

  const auto found = search_flows(s, opt);
  json out = json::array();
  bool all_trivial = true;
  for (const FlowCandidate& c : found) {
    json cand;
    json bps = json::array();
    for (const Rat& b : c.schedule.breakpoints) bps.push_back(b.str());
    cand["breakpoints"] = bps;
    json pieces = json::array();
    for (int i = 0; i < c.schedule.piece_count(); ++i) {
      json img = json::object();
      for (int x = 0; x < s.size(); ++x)
        img[s.labels[x]] = s.labels[c.piece_map(i)(x)];
      pieces.push_back(img);
    }
    cand["pieces"] = pieces;
    cand["trivial"] = is_trivial(c);
    if (!is_trivial(c)) all_trivial = false;
    out.push_back(std::move(cand));
  }
  report.extra["flows"] = out;
  if (is_T0(s)) {
    report.check("only_trivial_flows", all_trivial,
                 {{"note", all_trivial ? "only trivial flows found" : "unexpected flow"}});
  } else {
    report.extra["advisory"] =
        "space is not T0: flows beyond step-schedule expressivity exist but cannot be "
        "witnessed at desk scale";
  }
  return report.emit();
}

int cmd_props(int max_n, Report& report) {
  static const long kTopologyCounts[] = {0, 1, 4, 29, 355};
  static const long kPosetCounts[] = {0, 1, 3, 19, 219};
  for (int n = 1; n <= max_n; ++n) {
    const auto topologies = enumerate_topologies(n);
    report.check("topology_count_n" + std::to_string(n),
                 static_cast<long>(topologies.size()) == kTopologyCounts[n],
                 {{"count", topologies.size()}});
    bool roundtrip = true, lemma1 = true, lemma2 = true;
    long t0 = 0;
    for (const FiniteSpace& t : topologies) {
      const Preorder p = specialization_preorder(t);
      if (!(topology_from_preorder(p, t.labels) == t)) roundtrip = false;
      if (is_T0(t) != p.antisymmetric()) lemma1 = false;
      if (is_T1(t) != is_discrete(t)) lemma2 = false;
      if (is_T0(t)) ++t0;
    }
    report.check("duality_roundtrip_n" + std::to_string(n), roundtrip);
    report.check("lemma1_t0_iff_partial_order_n" + std::to_string(n), lemma1);
    report.check("lemma2_t1_iff_discrete_n" + std::to_string(n), lemma2);
    report.check("t0_count_n" + std::to_string(n), t0 == kPosetCounts[n], {{"count", t0}});
  }
  for (int n = 1; n <= std::min(max_n, 3); ++n) {
    FiniteSpace base;
    for (int i = 0; i < n; ++i) base.labels.push_back(std::to_string(i + 1));
    for (Mask m = 0; m <= ((Mask{1} << n) - 1); ++m) base.opens.push_back(m);
    const Hyperspace sl = build_hyperspace(base, HyperspaceVariant::StrongLower);
    const Hyperspace lo = build_hyperspace(base, HyperspaceVariant::Lower);
    const Hyperspace up = build_hyperspace(base, HyperspaceVariant::Upper);
    bool props_ok = true;
    for (const auto& c : hyper_verification(sl))
      if (!c["pass"].get<bool>()) props_ok = false;
    for (const auto& c : hyper_verification(up))
      if (!c["pass"].get<bool>()) props_ok = false;
    report.check("hyperspace_props_base" + std::to_string(n), props_ok);
    report.check("strong_lower_equals_lower_base" + std::to_string(n),
                 compare_topologies(sl.space, lo.space) == TopologyOrder::Equal);
    report.check("upper_order_opposite_base" + std::to_string(n),
                 hyper_order(up) == hyper_order(sl).opposite());
  }
  {
    const FiniteSpace pair = validate_space({"x", "y"}, {0b00, 0b11});
    const FlowVerdict v = is_flow(swap_candidate(pair, 0, 1));
    report.check("corollary_swap_identity_and_continuity",
                 v.identity_at_zero.pass && v.continuity.pass);
    report.check("corollary_swap_group_law_fails", !v.group_law.pass);
    if (v.group_law.witness)
      report.extra["corollary_witness"] = witness_json(pair, *v.group_law.witness);
  }
  return report.emit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for finite Alexandroff spaces, hyperspaces and flows"};
  app.require_subcommand(1);
  bool text = false, timing = false;
  app.add_flag("--text", text, "plain-text report instead of JSON");
  app.add_flag("--timing", timing, "include elapsed time in the report");

  std::string space_path, dot_path, variant = "sl", out_path, flow_path;
  std::string pool = "-1,0,1";
  int max_bp = 1, max_n = 3;
  bool require_poset = false, homeo_only = false;

  auto* validate = app.add_subcommand("validate", "check the topology axioms of a space file");
  validate->add_option("file", space_path)->required();

  auto* order = app.add_subcommand("order", "emit the Hasse diagram of the specialization order");
  order->add_option("file", space_path)->required();
  order->add_option("--dot", dot_path, "write DOT here instead of stdout");
  order->add_flag("--require-poset", require_poset);

  auto* hyper = app.add_subcommand("hyper", "build a hyperspace over a discrete base");
  hyper->add_option("file", space_path)->required();
  hyper->add_option("--variant", variant, "lower|sl|upper|fl|fu");
  hyper->add_option("--out", out_path, "write the hyperspace space file here");

  auto* embed = app.add_subcommand("embed", "embed a T0 space into its upper hyperspace");
  embed->add_option("file", space_path)->required();
  embed->add_option("--out", out_path);

  auto* flow = app.add_subcommand("flow", "flow axiom verification and search");
  flow->require_subcommand(1);
  auto* verify = flow->add_subcommand("verify", "decide the three flow axioms for a flow file");
  verify->add_option("file", flow_path)->required();
  auto* search = flow->add_subcommand("search", "exhaustive flow search over step schedules");
  search->add_option("file", space_path)->required();
  search->add_option("--pool", pool, "comma-separated rational breakpoint pool");
  search->add_option("--max-bp", max_bp, "maximum number of breakpoints");
  search->add_flag("--homeo-only", homeo_only, "draw piece maps from homeomorphisms only");

  auto* props = app.add_subcommand("props", "run the desk-scale property suite");
  props->add_option("--max-n", max_n)->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report report;
  report.text = text;
  report.timing = timing;
  try {
    if (validate->parsed()) { report.command = "validate"; return cmd_validate(space_path, report); }
    if (order->parsed()) { report.command = "order"; return cmd_order(space_path, dot_path, require_poset, report); }
    if (hyper->parsed()) { report.command = "hyper"; return cmd_hyper(space_path, variant, out_path, report); }
    if (embed->parsed()) { report.command = "embed"; return cmd_embed(space_path, out_path, report); }
    if (verify->parsed()) { report.command = "flow verify"; return cmd_flow_verify(flow_path, report); }
    if (search->parsed()) { report.command = "flow search"; return cmd_flow_search(space_path, pool, max_bp, homeo_only, report); }
    if (props->parsed()) { report.command = "props"; return cmd_props(max_n, report); }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SpaceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    // NotDiscrete, NotT0, CarrierMismatch, BudgetExceeded: modeled failures.
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

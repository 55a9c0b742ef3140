#include "fcg/report.hpp"

#include "fcg/crosscheck.hpp"
#include "fcg/oracle.hpp"
#include "fcg/theorems.hpp"
#include "json.hpp"

namespace fcg {

using Json = nlohmann::json;  // std::map keys, so dumps are sorted

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"analyze", "check-chain", "tower", "neumann", "solvable", "oracle"};
  return c;
}

namespace {

Json element_json(const Group& g, const Element& x) {
  Json j;
  j["text"] = g.format(x);
  if (x.backend() == Backend::FinitePermutation) {
    j["images"] = x.perm().one_based();
  } else {
    j["t"] = x.affine().translation;
    j["f"] = g.finite_element(x.affine().finite).one_based();
  }
  return j;
}

Json index_json(const IndexValue& v, const std::string& method) {
  Json j;
  if (v.is_finite())
    j["value"] = v.value();
  else
    j["value"] = "infinite";
  j["method"] = method;
  return j;
}

std::string order_method(const Subgroup& s) {
  return s.backend() == Backend::FinitePermutation ? "schreier-sims" : "lattice-rank";
}

Json subgroup_json(const Subgroup& s) {
  Json j;
  j["description"] = s.describe();
  j["generators"] = Json::array();
  for (const auto& g : s.generators()) j["generators"].push_back(element_json(s.group(), g));
  j["order"] = index_json(s.order(), order_method(s));
  return j;
}

Json bound_json(const Group& g, const BoundCertificate& b) {
  Json j;
  j["value"] = b.bound;
  j["method"] = to_string(b.method);
  j["attaining"] = element_json(g, b.attaining);
  j["samples_checked"] = b.samples_checked;
  return j;
}

Json chain_json(const FCChain& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["valid"] = c.valid();
  j["length"] = c.length();
  j["levels"] = Json::array();
  for (const auto& l : c.levels) {
    Json lj;
    lj["subgroup"] = subgroup_json(l.subgroup);
    lj["flags"] = {{"normal", l.normal}, {"increasing", l.increasing}, {"inside_fc", l.inside_fc}, {"bounded", l.bounded}};
    if (l.bound) lj["bound"] = bound_json(c.group, *l.bound);
    lj["diagnostics"] = l.diagnostics;
    j["levels"].push_back(lj);
  }
  return j;
}

Json decomposition_json(const Group& g, const Decomposition& d) {
  Json j;
  j["subgroup"] = subgroup_json(d.subgroup);
  j["modulus"] = subgroup_json(d.modulus);
  j["derived"] = subgroup_json(d.derived);
  j["derived_order"] = index_json(d.derived_order, "exact-index");
  j["centralizer"] = subgroup_json(d.centralizer);
  j["centralizer_index"] = index_json(d.centralizer_index, "exact-index");
  j["nilpotency_class"] = {{"value", d.nilpotency_class}, {"method", "upper-central-series"}};
  j["bound"] = bound_json(g, d.bound);
  return j;
}

Json tower_json(const TowerTrace& t) {
  Json j;
  j["n"] = t.n;
  j["success"] = t.success;
  j["F"] = subgroup_json(t.f);
  j["index"] = index_json(t.index, "exact-index");
  j["nilpotency_class"] = {{"value", t.nilpotency_class}, {"method", "upper-central-series"}};
  j["class_bound"] = t.class_bound;
  j["steps"] = Json::array();
  for (const auto& s : t.steps) {
    Json sj;
    sj["i"] = s.i;
    sj["modulus"] = subgroup_json(s.modulus);
    sj["level"] = subgroup_json(s.level);
    if (s.level_bound) sj["level_bound"] = bound_json(t.group, *s.level_bound);
    sj["fc_part"] = subgroup_json(s.fc_part);
    sj["fc_part_index"] = index_json(s.fc_part_index, "exact-index");
    sj["X"] = subgroup_json(s.x);
    sj["X_index"] = index_json(s.x_index, "exact-index");
    sj["X_representatives"] = Json::array();
    for (const auto& r : s.x_representatives) sj["X_representatives"].push_back(element_json(t.group, r));
    sj["F"] = subgroup_json(s.f);
    sj["F_index"] = index_json(s.f_index, "exact-index");
    sj["centralizer_index"] = index_json(s.centralizer_index, "exact-index");
    sj["odd_factor_index"] = index_json(s.odd_factor_index, "exact-index");
    sj["H"] = Json::array();
    for (const auto& h : s.h) sj["H"].push_back(subgroup_json(h));
    const auto& f = s.flags;
    sj["flags"] = {{"hypothesis", f.hypothesis},       {"symmetry", f.symmetry},
                   {"x_finite", f.x_finite},           {"centralizer_finite", f.centralizer_finite},
                   {"centrality", f.centrality},       {"containment", f.containment},
                   {"odd_factor_finite", f.odd_factor_finite}, {"finite_index", f.finite_index}};
    j["steps"].push_back(sj);
  }
  return j;
}

const io::NamedChain* pick_chain(const io::GroupFile& g, const std::optional<io::NamedChain>& given,
                                 std::optional<ChainKind> kind) {
  if (given) return &*given;
  for (const auto& c : g.chains)
    if (!kind || c.kind == *kind) return &c;
  return nullptr;
}

FCChain validate(const io::NamedChain& c) {
  FCChain chain = c.to_chain();
  return c.kind == ChainKind::Nilpotent ? check_bounded_fc_nilpotent_chain(std::move(chain))
                                        : check_bounded_fc_solvable_chain(std::move(chain));
}

struct Outcome {
  ExitCode exit = ExitCode::Ok;
  std::string summary;
};

Outcome analyze(const io::GroupFile& gf, Json& res) {
  const Group& g = gf.group;
  const Subgroup whole = Subgroup::whole(g);
  const Modulus one = Modulus::trivial(g);
  const Subgroup fc = fc_centralizer_subgroup(whole, whole, one);
  res["fc_subgroup"] = subgroup_json(fc);
  res["fc_index"] = index_json(subgroup_index(whole, fc), "exact-index");
  res["fc_bound"] = bound_json(g, *fc_bound(fc, whole, one));
  if (fc == whole) {
    res["neumann"] = decomposition_json(g, neumann_decompose(whole));
  } else {
    for (const auto& x : whole.generators())
      if (!fc.contains(x)) {
        res["neumann"] = {{"applicable", false}, {"infinite_class", element_json(g, x)}};
        break;
      }
  }
  const UpperCentralSeries ucs = upper_central_series(whole);
  res["upper_central_series"] = {{"nilpotent", ucs.nilpotent},
                                 {"class", ucs.nilpotency_class},
                                 {"terms", ucs.terms.size()},
                                 {"method", "upper-central-series"}};
  const auto ds = derived_series(whole);
  res["derived_series"] = {{"length", ds.size() - 1}, {"solvable", ds.back().is_trivial()}, {"method", "derived-series"}};
  res["chains"] = Json::array();
  for (const auto& c : gf.chains) {
    Json cj = chain_json(validate(c));
    cj["name"] = c.name;
    res["chains"].push_back(cj);
  }
  return {ExitCode::Ok, "FC index " + subgroup_index(whole, fc).to_string()};
}

Outcome check_chain(const io::GroupFile& gf, const std::optional<io::NamedChain>& given, Json& res) {
  std::vector<const io::NamedChain*> chains;
  if (given)
    chains.push_back(&*given);
  else
    for (const auto& c : gf.chains) chains.push_back(&c);
  if (chains.empty()) return {ExitCode::ValidationFailure, "no chain to check"};
  bool all = true;
  res["chains"] = Json::array();
  for (const auto* c : chains) {
    FCChain v = validate(*c);
    all = all && v.valid();
    Json cj = chain_json(v);
    cj["name"] = c->name;
    res["chains"].push_back(cj);
  }
  return {all ? ExitCode::Ok : ExitCode::ValidationFailure, all ? "all chains valid" : "invalid chain"};
}

Outcome tower(const io::GroupFile& gf, const std::optional<io::NamedChain>& given, Json& res) {
  const auto* c = pick_chain(gf, given, ChainKind::Nilpotent);
  if (!c || c->kind != ChainKind::Nilpotent) return {ExitCode::ValidationFailure, "no nilpotent chain"};
  FCChain v = validate(*c);
  res["chain"] = chain_json(v);
  if (!v.valid()) return {ExitCode::ValidationFailure, "chain is not bounded FC-nilpotent"};
  const TowerTrace t = nilpotent_tower(v);
  res["tower"] = tower_json(t);
  return {ExitCode::Ok, "F index " + t.index.to_string() + ", class " + std::to_string(t.nilpotency_class)};
}

Outcome neumann(const io::GroupFile& gf, Json& res) {
  const Decomposition d = neumann_decompose(Subgroup::whole(gf.group));
  res["neumann"] = decomposition_json(gf.group, d);
  return {ExitCode::Ok, "H' order " + d.derived_order.to_string() + ", index " + d.centralizer_index.to_string()};
}

Outcome solvable(const io::GroupFile& gf, const std::optional<io::NamedChain>& given, Json& res) {
  const auto* c = pick_chain(gf, given, ChainKind::Solvable);
  if (!c || c->kind != ChainKind::Solvable) return {ExitCode::ValidationFailure, "no solvable chain"};
  FCChain v = validate(*c);
  res["chain"] = chain_json(v);
  if (!v.valid()) return {ExitCode::ValidationFailure, "chain is not bounded FC-solvable"};
  const SolvableResult r = solvable_resolve(v);
  Json j;
  j["S"] = subgroup_json(r.s);
  j["index"] = index_json(r.index, "exact-index");
  j["derived_length"] = {{"value", r.derived_length}, {"method", "derived-series"}};
  j["derived_series"] = Json::array();
  for (const auto& d : r.derived_series) j["derived_series"].push_back(subgroup_json(d));
  j["levels"] = Json::array();
  for (const auto& l : r.levels)
    j["levels"].push_back({{"factor", decomposition_json(gf.group, l.factor)},
                           {"core", subgroup_json(l.core)},
                           {"S", subgroup_json(l.s)},
                           {"index", index_json(l.index, "exact-index")}});
  res["solvable"] = j;
  return {ExitCode::Ok, "S index " + r.index.to_string() + ", derived length " + std::to_string(r.derived_length)};
}

Outcome oracle_cmd(const io::GroupFile& gf, std::size_t radius, Json& res) {
  const Group& g = gf.group;
  const Subgroup whole = Subgroup::whole(g);
  const Modulus one = Modulus::trivial(g);
  // Every element of the radius-2 ball, under the whole group, modulo 1.
  const auto ball = oracle::ball_enumerate(g, g.generators(), 2);
  std::size_t agree = 0, total = 0;
  res["checks"] = Json::array();
  for (const auto& x : ball.elements()) {
    for (const auto& c : cross_check(whole, one, x, radius)) {
      ++total;
      agree += c.agree;
      res["checks"].push_back({{"property", oracle::to_string(c.property)},
                               {"element", element_json(g, x)},
                               {"closed_form", c.closed_form},
                               {"oracle_counts", c.oracle_counts},
                               {"stabilized", c.stabilized},
                               {"agree", c.agree},
                               {"method", "ball-oracle"}});
    }
  }
  res["radius"] = radius;
  res["agreements"] = agree;
  res["total"] = total;
  return {agree == total ? ExitCode::Ok : ExitCode::ValidationFailure,
          std::to_string(agree) + "/" + std::to_string(total) + " oracle checks agree"};
}

}  // namespace

RunResult run_analysis(const std::string& command, const io::GroupFile& group,
                       const std::optional<io::NamedChain>& chain, const std::optional<std::string>& chain_digest,
                       const RunOptions& opts) {
  Json report;
  report["schema"] = "fc-report/1";
  report["command"] = command;
  report["input"] = {{"group", group.name}, {"sha256", group.digest}, {"backend", to_string(group.group.backend())}};
  if (chain_digest) report["input"]["chain_sha256"] = *chain_digest;
  Json res = Json::object();
  Outcome out;
  try {
    if (command == "analyze")
      out = analyze(group, res);
    else if (command == "check-chain")
      out = check_chain(group, chain, res);
    else if (command == "tower")
      out = tower(group, chain, res);
    else if (command == "neumann")
      out = neumann(group, res);
    else if (command == "solvable")
      out = solvable(group, chain, res);
    else if (command == "oracle")
      out = oracle_cmd(group, opts.max_ball_radius, res);
    else
      throw InputError("unknown command " + command);
  } catch (const HypothesisError& e) {
    out = {ExitCode::ValidationFailure, e.what()};
    res["error"] = {{"kind", "hypothesis"}, {"message", e.what()}, {"witness", e.witness()}};
  } catch (const PreconditionError& e) {
    out = {ExitCode::ValidationFailure, e.what()};
    res["error"] = {{"kind", "precondition"}, {"message", e.what()}};
  } catch (const ProofStepFailure& e) {
    out = {ExitCode::ComputationAbort, e.what()};
    res["error"] = {{"kind", "proof-step"}, {"step", e.step()}, {"message", e.what()}};
  } catch (const ComputationError& e) {
    out = {ExitCode::ComputationAbort, e.what()};
    res["error"] = {{"kind", "computation"}, {"message", e.what()}};
  }
  static const char* status[] = {"ok", "", "validation-failure", "computation-abort", "io-or-schema"};
  report["status"] = status[static_cast<int>(out.exit)];
  report["results"] = res;
  return RunResult{out.exit, report.dump(2) + "\n", out.summary};
}

}  // namespace fcg

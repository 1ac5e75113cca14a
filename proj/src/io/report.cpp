#include "stpsw/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "stpsw/analysis.hpp"
#include "stpsw/attractors.hpp"
#include "stpsw/errors.hpp"
#include "stpsw/graph_export.hpp"
#include "stpsw/oracle.hpp"
#include "stpsw/realization.hpp"
#include "stpsw/set_reachability.hpp"

namespace stpsw {

using Json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::vector<std::size_t> parse_index_list(const std::string& spec, std::optional<std::size_t> infinity_value) {
  std::vector<std::size_t> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (infinity_value && (token == "inf" || token == "INF" || token == "infinity")) {
      out.push_back(*infinity_value);
    } else {
      std::size_t pos = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(token, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != token.size() || token[0] == '-') throw std::invalid_argument("not a positive integer: '" + token + "'");
      out.push_back(static_cast<std::size_t>(v));
    }
    token.clear();
  };
  for (char c : spec) {
    if (c == ',' || c == ' ' || c == '\t' || c == '(' || c == ')') flush();
    else token += c;
  }
  flush();
  if (out.empty()) throw std::invalid_argument("empty list '" + spec + "'");
  return out;
}

std::vector<std::vector<std::size_t>> parse_subset_class(const std::string& spec) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = spec.find('|', start);
    out.push_back(parse_index_list(spec.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

namespace {

std::string tuple(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string set_str(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

const SwitchedLinearSystem& need_modes(const SystemDescription& d) {
  if (!d.sls) throw DimensionError("this command needs a [modes] section");
  return *d.sls;
}

SearchOptions search_options(const RunRequest& r, const SystemDescription& d) {
  SearchOptions o;
  o.t_max = r.t_max ? r.t_max : d.t_max;
  o.strict = r.strict;
  o.max_sequences = r.max_sequences;
  return o;
}

Property parse_property(const std::string& s) {
  if (s == "reachability") return Property::Reachability;
  if (s == "controllability") return Property::Controllability;
  if (s == "observability") return Property::Observability;
  if (s == "reconstructibility") return Property::Reconstructibility;
  throw std::invalid_argument("unknown property '" + s + "'");
}

Json verdict_json(const PropertyVerdict& v) {
  Json j;
  j["property"] = to_string(v.property);
  j["holds"] = v.holds;
  j["horizon"] = v.horizon;
  j["strict"] = v.strict;
  j["checked_alphas"] = v.checked_alphas;
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  j["witnesses_at_horizon"] = v.witnesses_at_horizon;
  Json pa = Json::object();
  for (const auto& [a, d] : v.per_alpha)
    pa[std::to_string(a)] = {{"span_rank", d.span_rank},
                             {"contained", d.contained},
                             {"passes", d.passes},
                             {"terminal_theta", d.terminal_theta}};
  j["per_alpha"] = pa;
  j["sequences_examined"] = v.sequences_examined;
  return j;
}

void verdict_text(std::ostringstream& os, const PropertyVerdict& v) {
  os << to_string(v.property) << ": " << (v.holds ? "holds" : "does not hold") << " (T = " << v.horizon
     << ", checked alpha = " << set_str(v.checked_alphas) << (v.strict ? ", strict" : "") << ")\n";
  if (v.witness) {
    os << "  witness: " << tuple(*v.witness) << "\n";
    os << "  passing sequences at T = " << v.horizon << ":";
    for (const auto& w : v.witnesses_at_horizon) os << " " << tuple(w);
    os << "\n";
  }
  for (const auto& [a, d] : v.per_alpha)
    os << "  alpha " << a << ": span rank " << d.span_rank << ", " << (d.passes ? "passes" : "fails")
       << ", terminal state " << d.terminal_theta << "\n";
}

AnalysisReport cmd_analyze(const RunRequest& r, const SystemDescription& d) {
  const auto& sls = need_modes(d);
  std::vector<Property> props;
  if (r.subcommand == "all" || r.subcommand.empty())
    props = {Property::Reachability, Property::Controllability, Property::Observability, Property::Reconstructibility};
  else
    props = {parse_property(r.subcommand)};
  std::optional<MergedSystem> primal, dual;
  AnalysisReport rep;
  Json arr = Json::array();
  std::ostringstream os;
  bool all = true;
  for (Property p : props) {
    auto& ms = is_dual_property(p) ? dual : primal;
    if (!ms) ms = is_dual_property(p) ? merge_dual(sls, d.net) : merge(sls, d.net);
    PropertyVerdict v = check_property(*ms, p, search_options(r, d));
    all = all && v.holds;
    arr.push_back(verdict_json(v));
    verdict_text(os, v);
  }
  rep.data["verdicts"] = arr;
  rep.text = os.str();
  rep.exit_code = all ? kHolds : kNegative;
  return rep;
}

Json attractor_json(const ControlAttractor& a) {
  return {{"kind", a.kind == AttractorKind::FixedPoint ? "fixed_point" : "cycle"},
          {"states", a.states},
          {"inputs", a.inputs},
          {"basin", a.basin},
          {"steering_depth", a.steering_depth}};
}

void attractor_text(std::ostringstream& os, const ControlAttractor& a) {
  os << "  " << (a.kind == AttractorKind::FixedPoint ? "fixed point " : "cycle ") << tuple(a.states) << " inputs "
     << tuple(a.inputs) << " basin " << set_str(a.basin) << " depth " << a.steering_depth << "\n";
}

AnalysisReport cmd_attractors(const SystemDescription& d) {
  ControlAttractorReport ar = control_attractors(d.net);
  AnalysisReport rep;
  std::ostringstream os;
  Json fps = Json::array(), cycles = Json::array(), sel = Json::array();
  os << "fixed points:\n";
  for (const auto& a : ar.fixed_points) {
    fps.push_back(attractor_json(a));
    attractor_text(os, a);
  }
  os << "cycles:" << (ar.cycles_truncated ? " (truncated)" : "") << "\n";
  for (const auto& a : ar.cycles) {
    cycles.push_back(attractor_json(a));
    attractor_text(os, a);
  }
  os << "selected:\n";
  for (const auto& a : ar.selected) {
    sel.push_back(attractor_json(a));
    attractor_text(os, a);
  }
  rep.data["fixed_points"] = fps;
  rep.data["cycles"] = cycles;
  rep.data["cycles_truncated"] = ar.cycles_truncated;
  rep.data["selected"] = sel;
  rep.data["checked_states"] = ar.checked_states();
  rep.text = os.str();
  return rep;
}

SubsetClass subset_class(const std::string& spec, const char* what) {
  if (spec.empty()) throw std::invalid_argument(std::string("missing ") + what);
  std::vector<InputStateSubset> subsets;
  for (auto& members : parse_subset_class(spec)) subsets.emplace_back(std::move(members));
  return SubsetClass(std::move(subsets));
}

AnalysisReport cmd_setreach(const RunRequest& r, const SystemDescription& d) {
  if (r.ell < 1) throw std::invalid_argument("path length must be at least 1");
  SubsetClass initial = subset_class(r.omega0, "--omega0");
  SubsetClass terminal = subset_class(r.omegad, "--omegad");
  const std::size_t mn = d.net.input_states();
  for (const auto* cls : {&initial, &terminal})
    for (const auto& s : cls->subsets())
      for (std::size_t j : s.members())
        if (j > mn) throw IndexError("input-state index " + std::to_string(j) + " exceeds MN = " + std::to_string(mn));
  BooleanMatrix c = set_reachability_matrix(d.net, initial, terminal, r.ell);
  SetReachabilityVerdicts v = set_reachability_verdicts(c);
  AnalysisReport rep;
  std::ostringstream os;
  Json bool_rows = Json::array();
  for (std::size_t i = 0; i < c.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < c.cols(); ++j) row.push_back(c(i, j) ? 1 : 0);
    bool_rows.push_back(row);
  }
  rep.data["ell"] = r.ell;
  rep.data["reachability"] = bool_rows;
  os << "C_" << r.ell << " = " << c.str() << "\n";
  if (r.quantitative) {
    Matrix counts = set_reachability_counts(d.net, initial, terminal, r.ell);
    Json rows = Json::array();
    for (std::size_t i = 0; i < counts.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < counts.cols(); ++j) row.push_back(counts.at(i, j).str());
      rows.push_back(row);
    }
    rep.data["path_counts"] = rows;
    os << "path counts = [" << counts.str() << "]\n";
  }
  std::vector<bool> ra = v.reachable_at, gr = v.globally_reachable;
  rep.data["reachable_from_initial"] = ra;
  rep.data["globally_reachable_terminal"] = gr;
  rep.data["fully_reachable"] = v.fully_reachable;
  for (std::size_t i = 0; i < gr.size(); ++i)
    os << "terminal subset " << i + 1 << ": " << (gr[i] ? "reachable from every initial subset" : "not globally reachable")
       << "\n";
  os << (v.fully_reachable ? "every terminal subset is reachable from every initial subset\n"
                           : "some terminal subset is unreachable from some initial subset\n");
  rep.exit_code = v.fully_reachable ? kHolds : kNegative;
  rep.text = os.str();
  return rep;
}

std::string duration_str(std::size_t d) { return d == FotSpec::infinity ? "inf" : std::to_string(d); }

AnalysisReport realization_report(const RealizationVerdict& v, const std::vector<std::size_t>& durations,
                                  const char* what) {
  AnalysisReport rep;
  std::ostringstream os;
  Json sigs = Json::array();
  for (const auto& s : v.signals) {
    Json j;
    j["signal"] = s.sigma;
    j["duration"] = duration_str(durations[s.sigma - 1]);
    j["requires_escape"] = s.requires_escape;
    j["requires_stay"] = s.requires_stay;
    j["failing_escape"] = s.failing_escape;
    j["failing_stay"] = s.failing_stay;
    j["signal_unreachable"] = s.signal_unreachable;
    j["satisfied"] = s.satisfied;
    sigs.push_back(j);
    os << "signal " << s.sigma << " (" << what << " " << duration_str(durations[s.sigma - 1])
       << "): " << (s.satisfied ? "ok" : "violated");
    if (!s.failing_escape.empty()) os << "; cannot leave from " << set_str(s.failing_escape);
    if (!s.failing_stay.empty()) os << "; cannot stay from " << set_str(s.failing_stay);
    os << "\n";
  }
  for (const auto& w : v.warnings) os << "warning: " << w << "\n";
  os << (v.realizable ? "realizable\n" : "not realizable\n");
  rep.data["realizable"] = v.realizable;
  rep.data["signals"] = sigs;
  rep.data["warnings"] = v.warnings;
  rep.text = os.str();
  rep.exit_code = v.realizable ? kHolds : kNegative;
  return rep;
}

AnalysisReport cmd_realize(const RunRequest& r, const SystemDescription& d) {
  if (r.subcommand == "fot") {
    FotSpec spec{r.durations};
    return realization_report(check_fot_realizable(d.net, spec), r.durations, "operating time");
  }
  if (r.subcommand == "dwell")
    return realization_report(check_dwell_time_realizable(d.net, r.min_dwell), r.min_dwell, "minimum dwell");
  throw std::invalid_argument("unknown realize subcommand '" + r.subcommand + "'");
}

AnalysisReport cmd_track(const RunRequest& r, const SystemDescription& d) {
  TrackingVerdict v = check_trackable(d.net, TrackingProblem{r.theta0, r.reference});
  AnalysisReport rep;
  std::ostringstream os;
  rep.data["theta0"] = r.theta0;
  rep.data["reference"] = r.reference;
  rep.data["trackable"] = v.trackable;
  rep.data["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  rep.data["first_failing_t"] = v.first_failing_t ? Json(*v.first_failing_t) : Json(nullptr);
  rep.data["frontier_sizes"] = v.frontier_sizes;
  if (v.trackable)
    os << "trackable; input sequence " << tuple(*v.witness) << "\n";
  else
    os << "not trackable; fails at t = " << *v.first_failing_t << "\n";
  rep.text = os.str();
  rep.exit_code = v.trackable ? kHolds : kNegative;
  return rep;
}

AnalysisReport cmd_graph(const RunRequest& r, const SystemDescription& d) {
  std::string dot = input_state_graph_dot(d.net);
  AnalysisReport rep;
  rep.data["nodes"] = d.net.input_states();
  rep.data["edges"] = d.net.input_states() * d.net.inputs();
  if (r.out_path.empty()) {
    rep.data["dot"] = dot;
    rep.text = dot;
  } else {
    std::ofstream out(r.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + r.out_path + "'");
    out << dot;
    rep.data["out"] = r.out_path;
    rep.text = "wrote " + r.out_path + "\n";
  }
  return rep;
}

AnalysisReport cmd_oracle(const RunRequest& r, const SystemDescription& d) {
  AnalysisReport rep;
  std::ostringstream os;
  EnumerationBudget budget;
  budget.max_sequences = r.max_sequences;
  if (r.subcommand == "kalman" || r.subcommand.empty()) {
    const auto& sls = need_modes(d);
    SearchOptions opts = search_options(r, d);
    std::vector<std::size_t> alphas = checked_alphas(d.net, opts);
    opts.alphas = alphas;
    const std::size_t t_max = opts.t_max.value_or(sls.n());
    MergedSystem primal = merge(sls, d.net);
    MergedSystem dual = merge_dual(sls, d.net);
    Json arr = Json::array();
    bool agree = true;
    for (Property p : {Property::Reachability, Property::Controllability, Property::Observability,
                       Property::Reconstructibility}) {
      PropertyVerdict o = kalman_oracle(sls, d.net, p, alphas, t_max, budget);
      PropertyVerdict b = check_property(is_dual_property(p) ? dual : primal, p, opts);
      bool same = o.holds == b.holds && o.witnesses_at_horizon == b.witnesses_at_horizon &&
                  (!o.holds || o.horizon == b.horizon);
      agree = agree && same;
      arr.push_back({{"property", to_string(p)},
                     {"oracle_holds", o.holds},
                     {"block_form_holds", b.holds},
                     {"oracle_witness", o.witness ? Json(*o.witness) : Json(nullptr)},
                     {"agree", same}});
      os << to_string(p) << ": oracle " << (o.holds ? "holds" : "fails") << ", block form "
         << (b.holds ? "holds" : "fails") << (same ? " (agree)" : " (DISAGREE)") << "\n";
    }
    rep.data["checked_alphas"] = alphas;
    rep.data["comparisons"] = arr;
    rep.data["agree"] = agree;
    rep.exit_code = agree ? kHolds : kNegative;
  } else if (r.subcommand == "paths") {
    auto from = parse_index_list(r.from);
    auto to = parse_index_list(r.to);
    std::size_t n = count_paths(d.net, from, to, r.ell, budget);
    rep.data["from"] = from;
    rep.data["to"] = to;
    rep.data["ell"] = r.ell;
    rep.data["paths"] = n;
    os << n << " paths of length " << r.ell << " from " << set_str(from) << " to " << set_str(to) << "\n";
  } else if (r.subcommand == "sequences") {
    auto seqs = enumerate_switching_sequences(d.net, r.alpha, r.horizon, budget);
    Json arr = Json::array();
    for (const auto& s : seqs) {
      arr.push_back({{"gammas", s.gammas}, {"sigmas", s.sigmas}});
      os << tuple(s.gammas) << " -> " << tuple(s.sigmas) << "\n";
    }
    rep.data["alpha"] = r.alpha;
    rep.data["horizon"] = r.horizon;
    rep.data["sequences"] = arr;
  } else {
    throw std::invalid_argument("unknown oracle subcommand '" + r.subcommand + "'");
  }
  rep.text = os.str();
  return rep;
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

AnalysisReport run(const RunRequest& request, const SystemDescription& description) {
  if (description.tolerance) set_float_tolerance(*description.tolerance);
  auto start = std::chrono::steady_clock::now();
  AnalysisReport body;
  const std::string& c = request.command;
  if (c == "analyze") body = cmd_analyze(request, description);
  else if (c == "attractors") body = cmd_attractors(description);
  else if (c == "setreach") body = cmd_setreach(request, description);
  else if (c == "realize") body = cmd_realize(request, description);
  else if (c == "track") body = cmd_track(request, description);
  else if (c == "graph") body = cmd_graph(request, description);
  else if (c == "oracle") body = cmd_oracle(request, description);
  else throw std::invalid_argument("unknown command '" + c + "'");
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  AnalysisReport rep;
  rep.exit_code = body.exit_code;
  rep.data["tool"] = "stpsw";
  rep.data["version"] = kToolVersion;
  rep.data["command"] = request.subcommand.empty() ? c : c + " " + request.subcommand;
  rep.data["input_digest"] = fnv1a_hex(format_description(description));
  for (auto& [k, v] : body.data.items()) rep.data[k] = v;
  rep.data["exit_code"] = body.exit_code;
  std::ostringstream head;
  head << "stpsw " << kToolVersion << " | " << rep.data["command"].get<std::string>() << " | input "
       << rep.data["input_digest"].get<std::string>() << "\n";
  if (request.timestamp) {
    rep.data["generated_at"] = utc_now();
    rep.data["elapsed_ms"] = elapsed;
    head << "generated " << utc_now() << " in " << std::fixed << std::setprecision(3) << elapsed << " ms\n";
  }
  rep.text = head.str() + body.text;
  return rep;
}

std::string render(const AnalysisReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report.data.dump(2) + "\n";
  return report.text;
}

}  // namespace stpsw

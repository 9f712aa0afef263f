#include "ringtsp/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ringtsp/bench.hpp"
#include "ringtsp/hamiltonian.hpp"
#include "ringtsp/instance_io.hpp"
#include "ringtsp/isometric.hpp"
#include "ringtsp/oracle.hpp"
#include "ringtsp/report.hpp"
#include "ringtsp/tsp.hpp"

namespace ringtsp::cli {

namespace {

// Bad flag combinations found after CLI11 has accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceFlags {
  std::string matrix, upper, coords;
  std::vector<std::string> random;
};

struct Common {
  SourceFlags src;
  std::string format = "text";
  std::string out;
};

void add_source(CLI::App* sub, SourceFlags& f) {
  sub->add_option("--matrix", f.matrix, "full-matrix instance file")->group("Instance");
  sub->add_option("--upper", f.upper, "upper-row instance file")->group("Instance");
  sub->add_option("--coords", f.coords, "coordinate instance file (rounded Euclidean)")->group("Instance");
  sub->add_option("--random", f.random, "random instance: n=<n> seed=<s> [lo=<lo> hi=<hi>]")
      ->expected(1, 4)
      ->group("Instance");
}

void add_output(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", c.out, "write output to this file instead of stdout");
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || p != v.data() + v.size()) throw UsageError("--random: bad value for " + key + ": '" + v + "'");
  return x;
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  std::int64_t x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || p != v.data() + v.size()) throw UsageError("--random: bad value for " + key + ": '" + v + "'");
  return x;
}

RandomSpec parse_random(const std::vector<std::string>& tokens) {
  RandomSpec spec;
  bool have_n = false, have_seed = false;
  for (const auto& raw : tokens) {
    std::stringstream parts(raw);
    std::string tok;
    while (std::getline(parts, tok, ',')) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw UsageError("--random expects key=value, got '" + tok + "'");
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "n") {
        spec.n = to_uint(key, val);
        have_n = true;
      } else if (key == "seed") {
        spec.seed = to_uint(key, val);
        have_seed = true;
      } else if (key == "lo") {
        spec.lo = to_int(key, val);
      } else if (key == "hi") {
        spec.hi = to_int(key, val);
      } else {
        throw UsageError("--random: unknown key '" + key + "'");
      }
    }
  }
  if (!have_n || !have_seed) throw UsageError("--random needs n=<n> and seed=<s>");
  if (spec.lo > spec.hi || spec.lo < 0) throw UsageError("--random: need 0 <= lo <= hi");
  return spec;
}

std::optional<InstanceSource> pick_source(const SourceFlags& f, bool required = true) {
  std::vector<InstanceSource> found;
  if (!f.matrix.empty()) found.emplace_back(MatrixFile{f.matrix});
  if (!f.upper.empty()) found.emplace_back(UpperRowFile{f.upper});
  if (!f.coords.empty()) found.emplace_back(CoordinateFile{f.coords});
  if (!f.random.empty()) found.emplace_back(parse_random(f.random));
  if (found.size() > 1) throw UsageError("give exactly one of --matrix, --upper, --coords, --random");
  if (found.empty()) {
    if (required) throw UsageError("an instance source is required (--matrix, --upper, --coords or --random)");
    return std::nullopt;
  }
  return found.front();
}

InstanceDescriptor descriptor(const InstanceSource& src, const CompleteInstance& inst) {
  InstanceDescriptor d{describe(src), inst.order(), std::nullopt};
  if (const auto* r = std::get_if<RandomSpec>(&src)) d.seed = r->seed;
  return d;
}

std::vector<std::size_t> parse_index_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  std::stringstream s(text);
  std::string tok;
  while (std::getline(s, tok, ',')) {
    std::size_t x = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size()) {
      throw UsageError(std::string(flag) + ": bad list entry '" + tok + "'");
    }
    out.push_back(x);
  }
  return out;
}

Beam beam_flag(const std::string& text) {
  try {
    return Beam::parse(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--beam: ") + e.what());
  }
}

std::string fmt_num(double w) {
  std::ostringstream o;
  o << std::setprecision(15) << w;
  return o.str();
}

nlohmann::json edges_json(const EdgeSet& s) { return s.ids(); }

nlohmann::json frontier_json(const Frontier& f) {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : f.candidates) {
    nlohmann::json origins = nlohmann::json::array();
    for (const auto& o : c.origins) origins.push_back({{"parent", o.parent}, {"triangle", o.triangle}});
    nlohmann::json jc = {{"edges", edges_json(c.edges)}, {"order", c.order}, {"weight", c.weight}, {"origins", origins}};
    if (c.label) jc["label"] = c.label;
    cands.push_back(std::move(jc));
  }
  return {{"length", f.length}, {"candidates", cands}};
}

nlohmann::json tour_trace_json(const TourResult& t) {
  nlohmann::json j;
  if (t.seed) {
    j["seed"] = {{"quad", t.seed->quad}, {"label", t.seed->label}, {"edges", edges_json(t.seed->cycle)},
                 {"weight", t.seed->weight}};
  }
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"triangle", s.triangle}, {"edges", edges_json(s.cycle)}, {"weight", s.weight}});
  }
  j["steps"] = steps;
  return j;
}

ReportResult tour_result(const TourResult& t) { return {t.tour, t.edges.ids(), t.weight, {}, {}, {}, {}, {}}; }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string text_tour_block(const TourResult& t) {
  std::ostringstream o;
  if (t.seed) {
    o << "seed z" << t.seed->label << " = " << to_string(t.seed->cycle) << " <-> " << format_vertex_set(t.seed->quad)
      << " = " << fmt_num(t.seed->weight) << '\n';
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
      o << "  + c" << t.steps[k].triangle << " -> " << to_string(t.steps[k].cycle) << " = "
        << fmt_num(t.steps[k].weight) << '\n';
    }
  }
  o << "tour " << format_tour(t.tour) << '\n';
  o << "edges " << to_string(t.edges) << '\n';
  o << "weight " << fmt_num(t.weight) << '\n';
  return o.str();
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InstanceError(InstanceError::Kind::io, "cannot write " + c.out);
  f << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ---- subcommands ----

struct SolveFlags {
  Common c;
  std::string beam = "all-ties";
  bool trace = false;
  int threads = 0;
};

std::string cmd_solve(const SolveFlags& f) {
  const auto src = *pick_source(f.c.src);
  const SolveOptions opt{beam_flag(f.beam), f.threads};
  const auto inst = load_instance(src);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = solve(inst, opt);
  RunReport rep;
  rep.command = "solve";
  rep.instance = descriptor(src, inst);
  rep.parameters = {{"beam", opt.beam.to_string()}, {"method", "ring-sum heuristic"}};
  rep.result = tour_result(r.tour);
  rep.elapsed_ms = ms_since(t0);
  rep.trace = tour_trace_json(r.tour);
  if (f.trace) {
    nlohmann::json fr = nlohmann::json::array();
    for (const auto& fx : r.frontiers) fr.push_back(frontier_json(fx));
    rep.trace["frontiers"] = fr;
  }
  if (f.c.format == "json") return dump(to_json(rep));

  std::ostringstream o;
  o << "instance " << rep.instance.source << " (n=" << inst.order() << ")\n";
  o << "heuristic (beam " << opt.beam.to_string() << ")\n";
  if (f.trace) {
    for (std::size_t i = 0; i < r.frontiers.size(); ++i) {
      o << format_frontier(r.frontiers[i], i ? &r.frontiers[i - 1] : nullptr);
    }
  }
  o << text_tour_block(r.tour);
  return o.str();
}

std::string cmd_compare(const SolveFlags& f) {
  const auto src = *pick_source(f.c.src);
  const SolveOptions opt{beam_flag(f.beam), f.threads};
  const auto inst = load_instance(src);
  if (inst.order() > held_karp_limit) {
    throw DomainError("compare: n = " + std::to_string(inst.order()) + " exceeds the oracle limit " +
                      std::to_string(held_karp_limit));
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = solve(inst, opt);
  const auto exact = exact_optimum(inst);
  RunReport rep;
  rep.command = "compare";
  rep.instance = descriptor(src, inst);
  rep.parameters = {{"beam", opt.beam.to_string()}};
  rep.result = tour_result(r.tour);
  rep.result.optimum = exact.optimum;
  rep.result.ratio = exact.optimum > 0 ? r.tour.weight / exact.optimum : 1.0;
  rep.result.match = r.tour.weight == exact.optimum;
  rep.result.oracle = exact.method;
  rep.result.optimal_count = exact.optimal_count;
  rep.elapsed_ms = ms_since(t0);
  if (f.c.format == "json") {
    auto j = to_json(rep);
    j["optimum"] = exact.optimum;
    j["heuristic"] = r.tour.weight;
    j["ratio"] = *rep.result.ratio;
    j["match"] = *rep.result.match;
    return dump(j);
  }
  std::ostringstream o;
  o << "instance " << rep.instance.source << " (n=" << inst.order() << ")\n";
  o << "heuristic " << fmt_num(r.tour.weight) << ' ' << format_tour(r.tour.tour) << '\n';
  o << "optimum   " << fmt_num(exact.optimum) << ' ' << format_tour(exact.tour) << " [" << exact.method << "]\n";
  o << "ratio     " << std::setprecision(6) << *rep.result.ratio << '\n';
  o << "match     " << (*rep.result.match ? "yes" : "no") << '\n';
  return o.str();
}

struct GenFlags {
  Common c;
  std::string layout = "matrix";
};

std::string cmd_gen(const GenFlags& f) {
  const auto inst = load_instance(*pick_source(f.c.src));
  std::ostringstream o;
  if (f.layout == "matrix") {
    write_full_matrix(o, inst);
  } else {
    write_upper_row(o, inst);
  }
  return o.str();
}

struct GraphFlags {
  Common c;
  std::string graph;
  std::size_t complete = 0;
  std::string remove;
};

GeneralGraph pick_graph(const GraphFlags& f) {
  if (!f.graph.empty() == (f.complete != 0)) throw UsageError("give exactly one of --graph or --complete");
  if (!f.graph.empty()) return load_edge_list(f.graph);
  if (f.complete < 3) throw UsageError("--complete needs n >= 3");
  return GeneralGraph::complete(f.complete);
}

nlohmann::json cycles_json(const IsometricCycleSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < s.cycles.size(); ++i) {
    arr.push_back({{"index", i + 1}, {"edges", edges_json(s.cycles[i].edges())}, {"vertices", s.cycles[i].vertices()}});
  }
  return arr;
}

std::string cmd_cycles(const GraphFlags& f) {
  const auto g = pick_graph(f);
  const auto s = isometric_cycles(g);
  const auto pv = pass_vectors(s);
  if (f.c.format == "json") {
    return dump({{"vertices", g.order()},
                 {"edges", g.edge_count()},
                 {"count", s.cycles.size()},
                 {"cycles", cycles_json(s)},
                 {"p_e", pv.p_e},
                 {"p_v", pv.p_v}});
  }
  std::ostringstream o;
  o << s.cycles.size() << " isometric cycles (n=" << g.order() << ", m=" << g.edge_count() << ")\n";
  for (std::size_t i = 0; i < s.cycles.size(); ++i) o << describe_cycle(s.cycles[i], i + 1) << '\n';
  o << "P_e = " << format_vector(pv.p_e) << '\n';
  o << "P_v = " << format_vector(pv.p_v) << '\n';
  return o.str();
}

std::string cmd_maclane(const GraphFlags& f) {
  const auto g = pick_graph(f);
  const auto s = isometric_cycles(g);
  const auto order = f.remove.empty() ? std::vector<std::size_t>{} : parse_index_list(f.remove, "--remove");
  const auto trace = deletion_trace(s, order);
  const auto pv = pass_vectors(s);
  if (f.c.format == "json") {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : trace) {
      steps.push_back({{"removed", st.removed ? nlohmann::json(*st.removed) : nlohmann::json(nullptr)},
                       {"p_e", st.pass.p_e},
                       {"f2", st.f2}});
    }
    return dump({{"count", s.cycles.size()},
                 {"p_e", pv.p_e},
                 {"p_v", pv.p_v},
                 {"f1", maclane_f1(pv)},
                 {"f2", maclane_f2(pv)},
                 {"deletions", steps}});
  }
  std::ostringstream o;
  o << s.cycles.size() << " isometric cycles\n";
  o << "P_e = " << format_vector(pv.p_e) << '\n';
  o << "F1 = " << maclane_f1(pv) << '\n';
  o << "F2 = " << maclane_f2(pv) << '\n';
  for (std::size_t k = 1; k < trace.size(); ++k) {
    o << "remove c" << *trace[k].removed << ": P_e = " << format_vector(trace[k].pass.p_e) << ", F2 = " << trace[k].f2
      << '\n';
  }
  return o.str();
}

struct HamFlags {
  Common c;
  std::size_t complete = 0;
  std::uint64_t start = 1;
  std::string sequence;
};

std::string cmd_hamiltonian(const HamFlags& f) {
  const auto src = pick_source(f.c.src, false);
  if (src.has_value() == (f.complete != 0)) throw UsageError("give exactly one instance source or --complete");
  InstanceSource source = src ? *src : InstanceSource{RandomSpec{f.complete, 0, 1, 1}};
  const auto inst = load_instance(source);
  const auto t0 = std::chrono::steady_clock::now();
  TourResult t;
  if (f.sequence.empty()) {
    t = build_hamiltonian(inst, f.start);
  } else {
    const auto seq = parse_index_list(f.sequence, "--sequence");
    const std::vector<std::uint64_t> ids(seq.begin(), seq.end());
    t = build_hamiltonian_from(inst, ids);
  }
  if (f.c.format == "json") {
    RunReport rep;
    rep.command = "hamiltonian";
    rep.instance = src ? descriptor(source, inst) : InstanceDescriptor{"complete:n=" + std::to_string(f.complete), inst.order(), {}};
    rep.parameters = {{"start", std::to_string(t.steps.front().triangle)}};
    if (!f.sequence.empty()) rep.parameters["sequence"] = f.sequence;
    rep.result = tour_result(t);
    rep.elapsed_ms = ms_since(t0);
    rep.trace = tour_trace_json(t);
    return dump(to_json(rep));
  }
  return format_hamiltonian_trace(t, inst);
}

struct BenchFlags {
  Common c;
  std::string sizes = "50,100,200,400";
  std::size_t seeds = 3;
  std::uint64_t base_seed = 1;
  std::string beam = "all-ties";
  int threads = 0;
};

std::string cmd_bench(const BenchFlags& f) {
  const auto sizes = parse_index_list(f.sizes, "--sizes");
  for (std::size_t n : sizes) {
    if (n < 4) throw UsageError("--sizes entries must be at least 4");
  }
  const auto table = run_bench(sizes, f.seeds, f.base_seed, SolveOptions{beam_flag(f.beam), f.threads});
  if (f.c.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"n", r.n},
                      {"seeds", r.seeds},
                      {"runtime_ms", r.runtime_ms},
                      {"weights", r.weights},
                      {"median_ms", r.median_ms},
                      {"predicted_ops", r.predicted_ops}});
    }
    return dump({{"rows", rows}, {"slope", table.slope}, {"predicted_slope", table.predicted_slope}});
  }
  std::ostringstream o;
  o << "n,median_ms,predicted_ops";
  for (std::size_t s = 0; s < f.seeds; ++s) o << ",ms_seed" << f.base_seed + s;
  o << '\n';
  o << std::fixed << std::setprecision(3);
  for (const auto& r : table.rows) {
    o << r.n << ',' << r.median_ms << ',' << std::setprecision(0) << r.predicted_ops << std::setprecision(3);
    for (double ms : r.runtime_ms) o << ',' << ms;
    o << '\n';
  }
  o << "# loglog slope measured " << table.slope << ", predicted " << table.predicted_slope << '\n';
  return o.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ring-sum cycle algebra: Hamiltonian cycles and a TSP heuristic for complete graphs", "ringtsp"};
  app.require_subcommand(1);

  SolveFlags solve_f, compare_f;
  GenFlags gen_f;
  GraphFlags cycles_f, maclane_f;
  HamFlags ham_f;
  BenchFlags bench_f;

  auto* s = app.add_subcommand("solve", "run the heuristic on one instance");
  add_source(s, solve_f.c.src);
  add_output(s, solve_f.c);
  s->add_option("--beam", solve_f.beam, "frontier rule: all-ties or a positive width");
  s->add_flag("--trace", solve_f.trace, "print every frontier");
  s->add_option("--threads", solve_f.threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);

  auto* cmp = app.add_subcommand("compare", "heuristic against the exact oracle");
  add_source(cmp, compare_f.c.src);
  add_output(cmp, compare_f.c);
  cmp->add_option("--beam", compare_f.beam, "frontier rule: all-ties or a positive width");
  cmp->add_option("--threads", compare_f.threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand("gen", "write an instance file");
  add_source(gen, gen_f.c.src);
  gen->add_option("--out", gen_f.c.out, "output file (stdout if omitted)");
  gen->add_option("--layout", gen_f.layout, "file layout")->check(CLI::IsMember({"matrix", "upper"}));

  auto* cyc = app.add_subcommand("cycles", "list isometric cycles of a graph");
  auto* mac = app.add_subcommand("maclane", "pass vectors and MacLane functionals");
  for (auto [sub, fl] : {std::pair{cyc, &cycles_f}, std::pair{mac, &maclane_f}}) {
    sub->add_option("--graph", fl->graph, "edge-list file (first line: n m)");
    sub->add_option("--complete", fl->complete, "use K_n");
    add_output(sub, fl->c);
  }
  mac->add_option("--remove", maclane_f.remove, "comma-separated cycle indices to delete in order");

  auto* ham = app.add_subcommand("hamiltonian", "build a Hamiltonian cycle from touching triangles");
  add_source(ham, ham_f.c.src);
  add_output(ham, ham_f.c);
  ham->add_option("--complete", ham_f.complete, "unit-weight K_n instead of an instance file");
  ham->add_option("--start", ham_f.start, "starting triangle id")->check(CLI::PositiveNumber);
  ham->add_option("--sequence", ham_f.sequence, "explicit comma-separated triangle ids");

  auto* bench = app.add_subcommand("bench", "runtime scaling on seeded random instances");
  add_output(bench, bench_f.c);
  bench->add_option("--sizes", bench_f.sizes, "comma-separated instance sizes");
  bench->add_option("--seeds", bench_f.seeds, "instances per size")->check(CLI::PositiveNumber);
  bench->add_option("--base-seed", bench_f.base_seed, "first seed");
  bench->add_option("--beam", bench_f.beam, "frontier rule: all-ties or a positive width");
  bench->add_option("--threads", bench_f.threads, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*s) emit(solve_f.c, cmd_solve(solve_f), out);
    if (*cmp) emit(compare_f.c, cmd_compare(compare_f), out);
    if (*gen) emit(gen_f.c, cmd_gen(gen_f), out);
    if (*cyc) emit(cycles_f.c, cmd_cycles(cycles_f), out);
    if (*mac) emit(maclane_f.c, cmd_maclane(maclane_f), out);
    if (*ham) emit(ham_f.c, cmd_hamiltonian(ham_f), out);
    if (*bench) emit(bench_f.c, cmd_bench(bench_f), out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

}  // namespace ringtsp::cli

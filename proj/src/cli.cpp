#include "dds/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "dds/amplitude.hpp"
#include "dds/automaton.hpp"
#include "dds/automorphism.hpp"
#include "dds/emergence.hpp"
#include "dds/errors.hpp"
#include "dds/field_poly.hpp"
#include "dds/ising.hpp"
#include "dds/local_quantum.hpp"
#include "dds/local_rule.hpp"
#include "dds/phase_portrait.hpp"
#include "dds/relation_io.hpp"
#include "dds/representation.hpp"

namespace dds::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

Graph load_graph(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    auto in = open_input(spec.substr(5));
    return read_graph(in);
  }
  return graphs::by_name(spec);
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

ojson labels_json(const Relation& r) { return r.domain().labels(); }

// ---- relation ----

struct RelationArgs {
  std::string file;
  int wolfram = -1;
  bool life = false;
};

void relation_decompose(const RelationArgs& a, std::ostream& out) {
  const int chosen = !a.file.empty() + (a.wolfram >= 0) + a.life;
  if (chosen != 1) throw InputError("give exactly one of --file, --wolfram, --life");
  Relation r;
  if (!a.file.empty()) {
    auto in = open_input(a.file);
    r = read_relation(in);
  } else if (a.wolfram >= 0) {
    r = eca_relation(static_cast<std::uint32_t>(a.wolfram));
  } else {
    r = life_relation();
  }
  auto d = canonical_decompose(r);
  if (!reconstructs(*d)) throw InvariantViolation("decomposition does not reconstruct the relation");
  emit(out, decomposition_json(*d));
}

void eca_survey(unsigned workers, std::ostream& out) {
  std::vector<char> reducible(256), prime(256);
  parallel_chunks(256, workers, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (auto n = b; n < e; ++n) {
      auto r = eca_relation(static_cast<std::uint32_t>(n));
      reducible[n] = is_reducible(r);
      prime[n] = is_prime(r);
    }
  });
  ojson j;
  std::size_t red = 0;
  ojson primes = ojson::array();
  for (std::size_t n = 0; n < 256; ++n) {
    red += reducible[n] != 0;
    if (prime[n]) primes.push_back(n);
  }
  j["reducible"] = red;
  j["irreducible"] = 256 - red;
  j["prime"] = primes;
  emit(out, j);
}

// ---- life ----

void life_analyze(std::ostream& out) {
  const Relation r = life_relation();
  const auto d = canonical_decompose(r);
  ojson j;
  j["rule"] = "B3/S23";
  j["domain"] = labels_json(r);
  j["members"] = r.count();
  j["functional_in_last"] = is_functional(r, r.domain().size() - 1);
  j["reducible"] = d->reducible;
  j["reconstructs"] = reconstructs(*d);
  ojson cons = ojson::array();
  for (auto& c : d->consequences) {
    auto faces = ojson::object();
    faces["domain"] = labels_json(c);
    faces["members"] = c.count();
    faces["polynomial"] = interpolate(c, 2).to_string();
    cons.push_back(faces);
  }
  j["consequences"] = cons;
  j["principal_factor_members"] = d->principal_factor.count();
  j["polynomial"] = interpolate(r, 2).to_string();
  emit(out, j);
}

struct LifeRunArgs {
  std::string cells;
  std::uint32_t size = 8;
  std::size_t steps = 4;
};

void life_run(const LifeRunArgs& a, std::ostream& out) {
  if (a.size < 3 || std::uint64_t{a.size} * a.size > 64) throw InputError("torus side must be in 3..8");
  auto in = open_input(a.cells);
  std::vector<std::uint32_t> cells(a.size * a.size, 0);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long x = 0, y = 0;
    if (!(ls >> x)) continue;
    if (!(ls >> y)) throw InputError("expected 'x y' per live cell");
    const long n = a.size;
    cells[static_cast<std::size_t>(((x % n + n) % n) + n * ((y % n + n) % n))] = 1;
  }
  const Graph g = graphs::torus_moore(a.size);
  const Automaton life(LocalRule::from_bs_string("B3/S23", 8), g);
  const State start = pack_cells(cells, 2);
  auto traj = life.trajectory(start, a.steps);
  ojson j;
  j["size"] = a.size;
  ojson frames = ojson::array();
  for (std::size_t t = 0; t < traj.size(); ++t) {
    ojson live = ojson::array();
    auto v = unpack_cells(traj[t], g.vertex_count(), 2);
    for (std::uint32_t i = 0; i < v.size(); ++i)
      if (v[i]) live.push_back({i % a.size, i / a.size});
    frames.push_back({{"t", t}, {"live", live}});
  }
  j["frames"] = frames;
  const PermGroup group = automorphisms(g);
  try {
    auto rec = orbit_recurrence(life, start, group, a.steps);
    j["recurrence"] = {{"t0", rec.t0}, {"t1", rec.t1}, {"witness", rec.witness.cycle_string()}};
  } catch (const InputError&) {
    j["recurrence"] = nullptr;
  }
  emit(out, j);
}

// ---- portrait ----

struct PortraitArgs {
  std::string graph = "cube";
  long rule = -1;
  std::string bs;
  std::uint32_t q = 2;
};

void portrait(const PortraitArgs& a, unsigned workers, std::ostream& out) {
  if (a.q != 2) throw InputError("rule numbers and B/S lists describe binary rules; use --q 2");
  if ((a.rule >= 0) == !a.bs.empty()) throw InputError("give exactly one of --rule, --bs");
  const Graph g = load_graph(a.graph);
  const int valence = g.regular_valence();
  if (valence <= 0) throw InputError("graph is not regular");
  const auto k = static_cast<std::uint32_t>(valence);
  const LocalRule rule = a.rule >= 0 ? LocalRule::from_symmetric_number(static_cast<std::uint64_t>(a.rule), k)
                                     : LocalRule::from_bs_string(a.bs, k);
  const Automaton automaton(rule, g);
  const PermGroup group = automorphisms(g);
  SweepOptions opts;
  opts.workers = workers;
  auto p = phase_portrait(automaton, group, opts);
  ojson j;
  j["graph"] = g.name;
  j["rule"] = rule.symmetric_number();
  j["bs"] = rule.bs_string();
  j["group_order"] = group.order();
  const ojson body = p.to_json();
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = *it;
  emit(out, j);
}

// ---- ising ----

struct IsingArgs {
  std::string graph = "dodecahedron";
  long j = 1, b = 0;
  bool intruders = false;
  bool json = false;
  bool brute = false;
};

void ising(const IsingArgs& a, unsigned workers, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const auto model = SpinModel::uniform(g, a.j, a.b);
  SweepOptions opts;
  opts.workers = workers;
  MicroTable table;
  if (a.brute) {
    table = micro_table_brute(model, false, opts);
  } else {
    const PermGroup group = automorphisms(g);
    InternalSymmetry internal;
    if (a.b == 0) internal.generators.push_back(Perm({1, 0}));  // global spin flip
    table = micro_table(model, group, internal, false, opts);
  }
  if (table.total() != state_count(g.vertex_count(), 2)) throw InvariantViolation("microstate counts do not sum to 2^N");
  if (a.intruders) {
    emit(out, intruder_json(convex_intruders(table), g.vertex_count()));
  } else if (a.json) {
    ojson j;
    j["graph"] = g.name;
    j["total"] = table.total();
    ojson rows = ojson::array();
    for (auto& pt : entropy_curve(table)) rows.push_back({{"E", pt.energy}, {"omega", table.omega.at(pt.energy)}});
    j["omega"] = rows;
    emit(out, j);
  } else {
    out << micro_table_csv(table);
  }
}

// ---- quantum ----

struct WalkArgs {
  long t = 20;
  std::uint32_t m = 4;
  std::string sources = "0:0";
};

void quantum_walk(const WalkArgs& a, unsigned workers, std::ostream& out) {
  SweepOptions opts;
  opts.workers = workers;
  out << interference_csv(interference(parse_sources(a.sources), a.t, a.m, opts));
}

struct EmbedArgs {
  double alpha = 0, beta = 0;
};

void quantum_embed(const EmbedArgs& a, std::ostream& out) {
  auto report = s3_embedding_check(a.alpha, a.beta);
  ojson j = report.to_json();
  auto table = CharTable::s3();
  auto checks = char_table_checks(table);
  j["character_table"] = {{"orthogonal", checks.rows_orthogonal},
                          {"dimension_sum", checks.dimension_sum},
                          {"dimensions", checks.dimensions}};
  // natural 3-point action: class characters e, transposition, 3-cycle
  auto mult = multiplicities(table, {3.0, 1.0, 0.0});
  ojson m = ojson::array();
  for (double x : mult) m.push_back(std::lround(x));
  j["natural_multiplicities"] = m;
  emit(out, j);
  if (!report.ok() || !checks.ok()) throw InvariantViolation("embedding check failed");
}

struct LocalArgs {
  std::string graph = "buckyball";
  std::uint32_t t = 2;
  std::uint32_t start = 0;
  long end = -1;
  std::uint32_t max_order = 0;
};

void quantum_local(const LocalArgs& a, unsigned workers, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const PermGroup group = automorphisms(g);
  auto cls = arc_orbits(g, group);
  std::uint32_t classes = 0;
  for (auto& row : cls)
    for (auto c : row) classes = std::max(classes, c + 1);
  if (classes > 2) throw InputError("more than two directed-edge orbits; only symbols v, w are available");
  std::vector<Poly2> weights = {Poly2::monomial(1, 1, 0), Poly2::monomial(1, 0, 1)};
  weights.resize(classes);
  auto model = LocalQuantumModel::from_classes(g, group, weights);
  auto amps = model.amplitudes(a.start, a.t);
  ojson j;
  j["graph"] = g.name;
  j["group_order"] = group.order();
  j["arc_orbits"] = classes;
  ojson sym = ojson::array();
  for (std::size_t s = 0; s < g.neighbors(a.start).size(); ++s) sym.push_back(model.weight(a.start, s).to_string());
  j["start_weights"] = sym;
  j["t"] = a.t;
  if (a.end >= 0) {
    if (static_cast<std::size_t>(a.end) >= g.vertex_count()) throw InputError("end vertex out of range");
    const auto& amp = amps[static_cast<std::size_t>(a.end)];
    j["end"] = a.end;
    j["amplitude"] = amp.to_string();
    if (a.max_order > 0) {
      SweepOptions opts;
      opts.workers = workers;
      ojson hits = ojson::array();
      if (!amp.is_zero())
        for (auto& h : quantizing_pairs(amp, a.max_order, a.max_order, opts))
          hits.push_back({{"Mv", h.mv}, {"Mw", h.mw}, {"b", h.b}});
      j["quantizing_pairs"] = hits;
    }
  } else {
    ojson all = ojson::array();
    for (std::size_t x = 0; x < amps.size(); ++x)
      if (!amps[x].is_zero()) all.push_back({{"vertex", x}, {"amplitude", amps[x].to_string()}});
    j["amplitudes"] = all;
  }
  emit(out, j);
}

// ---- emergence ----

struct CompareArgs {
  long t = 200;
  double v = 0;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite dynamical systems toolkit", "dds"};
  app.require_subcommand(1);
  unsigned workers = 1;
  app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));

  auto* rel = app.add_subcommand("relation", "relation tools")->require_subcommand(1);
  RelationArgs rel_args;
  auto* rel_dec = rel->add_subcommand("decompose", "canonical decomposition as JSON");
  rel_dec->add_option("--file", rel_args.file, "relation text file");
  rel_dec->add_option("--wolfram", rel_args.wolfram, "elementary rule number")->check(CLI::Range(0, 255));
  rel_dec->add_flag("--life", rel_args.life, "Game of Life relation");

  auto* eca = app.add_subcommand("eca", "elementary automata")->require_subcommand(1);
  auto* eca_sv = eca->add_subcommand("survey", "classify all 256 local relations");

  auto* life = app.add_subcommand("life", "Game of Life")->require_subcommand(1);
  auto* life_an = life->add_subcommand("analyze", "relation, decomposition and polynomial");
  LifeRunArgs life_args;
  auto* life_rn = life->add_subcommand("run", "evolve live cells on a torus");
  life_rn->add_option("--cells", life_args.cells, "file of 'x y' live cells")->required();
  life_rn->add_option("--size", life_args.size, "torus side (3..8)");
  life_rn->add_option("--steps", life_args.steps, "generations");

  PortraitArgs portrait_args;
  auto* por = app.add_subcommand("portrait", "orbit-quotient phase portrait");
  por->add_option("--graph", portrait_args.graph, "named graph or file:PATH");
  por->add_option("--rule", portrait_args.rule, "symmetric rule number");
  por->add_option("--bs", portrait_args.bs, "birth/survival text, e.g. B3/S23");
  por->add_option("--q", portrait_args.q, "states per cell");

  IsingArgs ising_args;
  auto* isg = app.add_subcommand("ising", "microcanonical table");
  isg->add_option("--graph", ising_args.graph, "named graph or file:PATH");
  isg->add_option("--j", ising_args.j, "coupling");
  isg->add_option("--b", ising_args.b, "field");
  isg->add_flag("--intruders", ising_args.intruders, "JSON convex-intruder report");
  isg->add_flag("--brute", ising_args.brute, "enumerate every state instead of orbits");
  auto* isg_json = isg->add_flag("--json", ising_args.json, "JSON table");
  isg->add_flag("--csv", "CSV table (default)")->excludes(isg_json);

  auto* qu = app.add_subcommand("quantum", "path amplitudes")->require_subcommand(1);
  WalkArgs walk_args;
  auto* qwalk = qu->add_subcommand("walk", "interference pattern");
  qwalk->add_option("--t", walk_args.t, "time");
  qwalk->add_option("--m", walk_args.m, "order of the root of unity");
  qwalk->add_option("--sources", walk_args.sources, "position:phase,...");
  EmbedArgs embed_args;
  auto* qembed = qu->add_subcommand("embed", "S3 embedding report");
  qembed->add_option("--alpha", embed_args.alpha, "global phase");
  qembed->add_option("--beta", embed_args.beta, "phase of the third column");
  LocalArgs local_args;
  auto* qlocal = qu->add_subcommand("local", "local quantum model on a graph");
  qlocal->add_option("--graph", local_args.graph, "named graph or file:PATH");
  qlocal->add_option("--t", local_args.t, "time");
  qlocal->add_option("--start", local_args.start, "start vertex");
  qlocal->add_option("--end", local_args.end, "end vertex");
  qlocal->add_option("--max-order", local_args.max_order, "search quantizing pairs up to this order");

  auto* em = app.add_subcommand("emergence", "Bernoulli walk")->require_subcommand(1);
  CompareArgs cmp_args;
  auto* em_cmp = em->add_subcommand("compare", "exact against Gaussian, CSV");
  em_cmp->add_option("--t", cmp_args.t, "time");
  em_cmp->add_option("--v", cmp_args.v, "drift");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::input_error;
  }

  try {
    if (rel_dec->parsed()) relation_decompose(rel_args, out);
    else if (eca_sv->parsed()) eca_survey(workers, out);
    else if (life_an->parsed()) life_analyze(out);
    else if (life_rn->parsed()) life_run(life_args, out);
    else if (por->parsed()) portrait(portrait_args, workers, out);
    else if (isg->parsed()) ising(ising_args, workers, out);
    else if (qwalk->parsed()) quantum_walk(walk_args, workers, out);
    else if (qembed->parsed()) quantum_embed(embed_args, out);
    else if (qlocal->parsed()) quantum_local(local_args, workers, out);
    else if (em_cmp->parsed()) out << compare_csv(compare_exact_gauss(cmp_args.t, cmp_args.v));
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return Exit::cap_exceeded;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return Exit::invariant_violation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return Exit::input_error;
  } catch (const std::length_error& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return Exit::cap_exceeded;
  }
  return Exit::ok;
}

}  // namespace dds::cli

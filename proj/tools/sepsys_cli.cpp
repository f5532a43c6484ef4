#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sepsys/bounds.hpp"
#include "sepsys/constructions.hpp"
#include "sepsys/families.hpp"
#include "sepsys/oracle.hpp"
#include "sepsys/outerplanar.hpp"
#include "sepsys/system.hpp"
#include "sepsys/tree_alg.hpp"
#include "sepsys/tree_enum.hpp"
#include "sepsys/tree_systems.hpp"
#include "sepsys/verify.hpp"

namespace {

using namespace sepsys;

// exit codes: 0 success/valid, 1 invalid certificate, 2 usage error,
// 3 resource cap, 4 internal self-check failure
int code_of(errc c) {
  switch (c) {
    case errc::parse_error:
      return 1;
    case errc::too_large:
    case errc::timeout:
      return 3;
    case errc::self_check:
      return 4;
    default:
      return 2;
  }
}

graph gen_graph(const std::string& cls, const std::vector<long long>& params,
                unsigned long long seed) {
  if (cls == "tree") {
    if (params.size() != 1) fail(errc::bad_params, "tree: params must be n");
    return gen_random_tree(static_cast<int>(params[0]), seed);
  }
  if (cls == "outerplanar") {
    if (params.size() != 1) fail(errc::bad_params, "outerplanar: params must be n");
    return gen_random_maximal_outerplanar(static_cast<int>(params[0]), seed).first;
  }
  if (cls == "tight-tree") {
    if (params.size() != 1) fail(errc::bad_params, "tight-tree: params must be h");
    return gen_tight_tree(static_cast<int>(params[0])).g;
  }
  auto f = family_from_name(cls);
  if (!f || *f == family::custom)
    fail(errc::unknown_class, "no generator named '" + cls + "'");
  return gen_family(*f, params);
}

separating_system run_method(const graph& g, const std::string& method) {
  if (method == "auto") return construct_system(g);
  if (method == "interval") return interval_system(g);
  if (method == "complete") return complete_system(g);
  if (method == "hypercube") return hypercube_system(g);
  if (method == "biclique") return biclique_system(g);
  if (method == "grid") return grid_system(g);
  if (method == "fan") return fan_system(g);
  if (method == "tight-tree") return tight_tree_system(g);
  if (method == "outerplanar") return outerplanar_system(g);
  if (method == "radius-tree") return radius_tree_system(g);
  if (method == "centroid-tree") return centroid_tree_system(g);
  if (method == "graph-tree") return graph_tree_system(g);
  fail(errc::bad_params, "unknown method '" + method + "'");
}

struct gen_args {
  std::string cls;
  std::vector<long long> params;
  unsigned long long seed = 0;
  std::string out;
};

int run_gen(const gen_args& a) {
  graph g = gen_graph(a.cls, a.params, a.seed);
  if (!a.out.empty()) save_graph_file(g, a.out);
  std::cout << g.n << " " << g.edges.size() << "\n";
  return 0;
}

struct construct_args {
  std::string cls;
  std::vector<long long> params;
  unsigned long long seed = 0;
  std::string graph_file;
  std::string method = "auto";
  std::string out;
};

int run_construct(const construct_args& a) {
  if (a.cls.empty() == a.graph_file.empty())
    fail(errc::bad_params, "need exactly one of --class and --graph");
  graph g = a.cls.empty() ? load_graph_file(a.graph_file) : gen_graph(a.cls, a.params, a.seed);
  separating_system s = run_method(g, a.method);
  certificate c = make_certificate(g, std::move(s), {{"method", a.method}});
  if (!a.out.empty()) save_certificate_file(c, a.out);
  std::cout << "n " << g.n << " size " << c.system.size() << "\n";
  return 0;
}

struct verify_args {
  std::string cert_file;
  bool require_cover = false;
  bool allow_trivial = true;
};

int run_verify(const verify_args& a) {
  certificate c = load_certificate_file(a.cert_file);
  verify_options opt;
  opt.require_cover = a.require_cover;
  opt.allow_trivial = a.allow_trivial;
  verification_report r = verify(c, opt);
  bool claim_ok = !c.claimed_bound ||
                  static_cast<long long>(c.system.size()) <= *c.claimed_bound;
  if (r.valid && claim_ok) {
    std::cout << "valid: " << c.system.size() << " elements separate " << c.g.n
              << " vertices\n";
    return 0;
  }
  std::cout << "invalid\n";
  for (int i : r.bad_elements) std::cout << "  element " << i << " is not in the graph\n";
  for (size_t i = 0; i < r.unseparated.size() && i < 10; ++i)
    std::cout << "  vertices " << r.unseparated[i].first << " and "
              << r.unseparated[i].second << " are not separated\n";
  if (!r.distinct_ok) std::cout << "  elements are not pairwise distinct\n";
  if (a.require_cover && !r.covered) std::cout << "  some vertex is uncovered\n";
  if (!claim_ok)
    std::cout << "  system has " << c.system.size() << " elements, more than the claimed "
              << *c.claimed_bound << "\n";
  return 1;
}

struct exact_args {
  std::string graph_file;
  std::string kind = "path";
  long long budget = 200'000'000;
  std::string out;
};

int run_exact(const exact_args& a) {
  graph g = load_graph_file(a.graph_file);
  oracle_options opt;
  if (a.kind == "path")
    opt.kind = element_kind::path;
  else if (a.kind == "tree")
    opt.kind = element_kind::tree;
  else
    fail(errc::bad_params, "kind must be path or tree");
  opt.node_budget = a.budget;
  oracle_result r = exact_f(g, opt);
  std::cout << r.value << "\n";
  if (!a.out.empty()) {
    separating_system s;
    s.kind = opt.kind;
    s.elements = r.witness;
    certificate c = make_certificate(g, std::move(s),
                                     {{"nodes", std::to_string(r.nodes)}, {"optimal", "true"}});
    save_certificate_file(c, a.out);
  }
  return 0;
}

struct bounds_args {
  std::string cls;
  std::vector<long long> params;
};

std::string bound_line(const std::optional<long long>& value, const std::string& text) {
  if (!value) return text.empty() ? "-" : text;
  std::string s = std::to_string(*value);
  if (!text.empty()) s += " (" + text + ")";
  return s;
}

int run_bounds(const bounds_args& a) {
  bounds_row r = known_bounds(a.cls, a.params);
  std::cout << "class " << r.cls;
  for (size_t i = 0; i < r.params.size(); ++i)
    std::cout << (i ? "," : " ") << r.params[i];
  std::cout << "\n";
  std::cout << "lower " << bound_line(r.lower, r.lower_text) << "\n";
  std::cout << "upper " << bound_line(r.upper, r.upper_text)
            << (r.upper_is_construction_count ? "  [construction count]" : "") << "\n";
  std::cout << "source " << r.source << "\n";
  return 0;
}

// ---- bench ----

struct bench_args {
  std::string suite;
  long long max_n = 64;
  std::string format = "tsv";
  unsigned long long seed = 0;
  std::string out;
};

struct bench_row_data {
  std::string cls;
  std::string params;
  long long n = 0;
  std::optional<long long> size, lower, upper, oracle;
  long long ms = 0;
};

std::string cell(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "-";
}

void emit_row(std::ostream& os, const bench_row_data& r) {
  // hard invariant: lower <= oracle <= size <= upper wherever present
  auto chk = [&](const std::optional<long long>& a, const std::optional<long long>& b,
                 const char* rel) {
    if (a && b && *a > *b)
      fail(errc::self_check, "bench row " + r.cls + " " + r.params + " violates " + rel +
                                 " (" + std::to_string(*a) + " > " + std::to_string(*b) + ")");
  };
  chk(r.lower, r.oracle, "lower <= oracle");
  chk(r.lower, r.size, "lower <= size");
  chk(r.oracle, r.size, "oracle <= size");
  chk(r.size, r.upper, "size <= upper");
  os << r.cls << "\t" << r.params << "\t" << r.n << "\t" << cell(r.size) << "\t"
     << cell(r.lower) << "\t" << cell(r.upper) << "\t" << cell(r.oracle) << "\t" << r.ms
     << "\n";
}

std::string join_params(const std::vector<long long>& ps) {
  std::string s;
  for (size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::to_string(ps[i]);
  return s;
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Construction row for a generated family; oracle filled within its caps.
bench_row_data family_row(const std::string& cls, const std::vector<long long>& params) {
  graph g = gen_graph(cls, params, 0);
  bench_row_data r;
  r.cls = cls;
  r.params = join_params(params);
  r.n = g.n;
  auto t0 = std::chrono::steady_clock::now();
  separating_system s = construct_system(g);
  r.ms = ms_since(t0);
  make_certificate(g, s);  // self-verifies
  r.size = static_cast<long long>(s.size());
  bounds_row kb = known_bounds(cls, params);
  r.lower = kb.lower;
  r.upper = kb.upper;
  if (g.n <= 12) r.oracle = exact_f(g).value;
  return r;
}

int run_bench(const bench_args& a) {
  if (a.format != "tsv") fail(errc::bad_params, "only tsv output is supported");
  std::ostringstream body;
  body << "class\tparams\tn\tsize\tlower\tupper\toracle\tms\n";

  if (a.suite == "table1") {
    for (long long n = 4; n <= a.max_n; n *= 2) emit_row(body, family_row("path", {n}));
    for (long long n = 4; n <= a.max_n; n *= 2) emit_row(body, family_row("cycle", {n}));
    for (long long n = 4; n <= a.max_n && n <= 4096; n *= 2)
      emit_row(body, family_row("complete", {n}));
    for (long long d = 2; (1LL << d) <= a.max_n; ++d)
      emit_row(body, family_row("hypercube", {d}));
    for (long long m = 2; m * m <= a.max_n; m *= 2)
      emit_row(body, family_row("grid", {m, m}));
    for (long long n = 8; n <= a.max_n; n *= 2) emit_row(body, family_row("fan", {n}));
    for (long long m = 2; 2 * m <= a.max_n; m *= 2)
      emit_row(body, family_row("biclique", {m, m}));
  } else if (a.suite == "trees") {
    long long cap = std::min<long long>(a.max_n, 12);
    for (int n = 3; n <= cap; ++n) {
      std::vector<graph> ts = enumerate_trees(n);
      for (size_t i = 0; i < ts.size(); ++i) {
        bench_row_data r;
        r.cls = "tree";
        r.params = std::to_string(n) + "," + std::to_string(i);
        r.n = n;
        r.lower = known_bounds("tree", {n}).lower;  // n/4 + 1 floor
        auto t0 = std::chrono::steady_clock::now();
        r.oracle = exact_f(ts[i]).value;
        r.ms = ms_since(t0);
        emit_row(body, r);
      }
    }
  } else if (a.suite == "outerplanar") {
    for (long long n : {20LL, 50LL, 100LL, 200LL, 500LL, 1000LL, 2000LL}) {
      if (n > a.max_n) break;
      for (unsigned long long s = 0; s < 5; ++s) {
        graph g = gen_random_maximal_outerplanar(static_cast<int>(n), a.seed + s).first;
        bench_row_data r;
        r.cls = "outerplanar";
        r.params = std::to_string(n) + ",seed" + std::to_string(a.seed + s);
        r.n = n;
        auto t0 = std::chrono::steady_clock::now();
        separating_system sys = outerplanar_system(g);
        r.ms = ms_since(t0);
        make_certificate(g, sys);
        r.size = static_cast<long long>(sys.size());
        r.lower = ceil_log2(n);
        emit_row(body, r);
      }
    }
  } else if (a.suite == "tree-systems") {
    for (long long n : {10LL, 30LL, 100LL, 300LL, 1000LL, 2000LL}) {
      if (n > a.max_n) break;
      graph t = gen_random_tree(static_cast<int>(n), a.seed);
      auto [c, radius] = center_radius(t);
      (void)c;
      for (const char* method : {"radius-tree", "centroid-tree"}) {
        bench_row_data r;
        r.cls = method;
        r.params = std::to_string(n) + ",seed" + std::to_string(a.seed);
        r.n = n;
        auto t0 = std::chrono::steady_clock::now();
        separating_system sys = std::string(method) == "radius-tree"
                                    ? radius_tree_system(t)
                                    : centroid_tree_system(t);
        r.ms = ms_since(t0);
        make_certificate(t, sys);
        r.size = static_cast<long long>(sys.size());
        r.lower = ceil_log2(n);
        r.upper = std::string(method) == "radius-tree"
                      ? radius + 2LL * ceil_log2(n) + 1
                      : n / 2 + ceil_log2(n) + 1;
        if (n <= 10) r.oracle = exact_f(t, {element_kind::tree}).value;
        emit_row(body, r);
      }
    }
  } else {
    fail(errc::bad_params, "unknown suite '" + a.suite +
                               "' (table1, trees, outerplanar, tree-systems)");
  }

  if (a.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) fail(errc::io_error, "cannot write " + a.out);
    f << body.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separating path and tree systems: generators, constructions, verifier, exact solver"};
  app.require_subcommand(1);

  gen_args ga;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("--class", ga.cls, "graph class")->required();
  gen->add_option("--params", ga.params, "comma-separated class parameters")->delimiter(',');
  gen->add_option("--seed", ga.seed, "random seed (default 0)");
  gen->add_option("--out", ga.out, "output graph file");

  construct_args ca;
  CLI::App* con = app.add_subcommand("construct", "build a separating system certificate");
  con->add_option("--class", ca.cls, "graph class (generate in place)");
  con->add_option("--params", ca.params, "class parameters")->delimiter(',');
  con->add_option("--seed", ca.seed, "random seed (default 0)");
  con->add_option("--graph", ca.graph_file, "input graph file");
  con->add_option("--method", ca.method, "construction method (default: by class tag)");
  con->add_option("--out", ca.out, "output certificate file");

  verify_args va;
  CLI::App* ver = app.add_subcommand("verify", "check a certificate");
  ver->add_option("certificate", va.cert_file, "certificate file")->required();
  ver->add_flag("--require-cover", va.require_cover, "demand every vertex covered");
  ver->add_flag("--allow-trivial,!--no-allow-trivial", va.allow_trivial,
                "permit single-vertex elements (default on)");

  exact_args ea;
  CLI::App* exa = app.add_subcommand("exact", "minimum system size by exhaustive search");
  exa->add_option("--graph", ea.graph_file, "input graph file")->required();
  exa->add_option("--kind", ea.kind, "path or tree (default path)");
  exa->add_option("--budget", ea.budget, "search node budget");
  exa->add_option("--out", ea.out, "write the optimal certificate here");

  bounds_args ba;
  CLI::App* bou = app.add_subcommand("bounds", "known lower/upper bounds for a class");
  bou->add_option("--class", ba.cls, "graph class")->required();
  bou->add_option("--params", ba.params, "class parameters")->delimiter(',');

  bench_args ha;
  CLI::App* ben = app.add_subcommand("bench", "size/bound tables");
  ben->add_option("--suite", ha.suite, "table1, trees, outerplanar, or tree-systems")->required();
  ben->add_option("--max-n", ha.max_n, "instance size limit (default 64)");
  ben->add_option("--format", ha.format, "output format (tsv)");
  ben->add_option("--seed", ha.seed, "random seed (default 0)");
  ben->add_option("--out", ha.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(ga);
    if (con->parsed()) return run_construct(ca);
    if (ver->parsed()) return run_verify(va);
    if (exa->parsed()) return run_exact(ea);
    if (bou->parsed()) return run_bounds(ba);
    if (ben->parsed()) return run_bench(ha);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code_of(e.code);
  }
  return 0;
}

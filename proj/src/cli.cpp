#include "kord/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kord/errors.hpp"
#include "kord/families.hpp"
#include "kord/four_ordered.hpp"
#include "kord/graph_gen.hpp"
#include "kord/io.hpp"
#include "kord/k_ordered.hpp"
#include "kord/oracle.hpp"
#include "kord/ordered_cycle.hpp"

namespace kord {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_no = 2;
constexpr int exit_bug = 3;

std::vector<int> parse_seq(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    require_arg(!item.empty() && pos == item.size(),
                "sequence entry '" + item + "' is not an integer");
    out.push_back(v);
  }
  require_arg(!out.empty(), "sequence must not be empty");
  return out;
}

Graph load_graph(const std::string& input, const std::string& gen) {
  require_arg(input.empty() != gen.empty(),
              "give exactly one of --input or --gen");
  if (!gen.empty()) return generate(gen);
  std::ifstream f(input);
  require_arg(f.good(), "cannot open '" + input + "'");
  return read_edge_list(f);
}

template <typename Writer>
void emit(const std::string& path, std::ostream& out, Writer writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream f(path);
  require_arg(f.good(), "cannot open '" + path + "'");
  writer(f);
  require_arg(!f.fail(), "failed writing '" + path + "'");
}

// Vertices of a path graph in walk order from the smaller endpoint, for
// hosts whose labels are not already 0..n-1 along the path.
std::optional<std::vector<int>> path_order(const Graph& g) {
  int n = g.n();
  if (n == 1) return std::vector<int>{0};
  if (n < 1 || g.edge_count() != n - 1 || !g.connected()) return std::nullopt;
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) == 1 && start == -1) start = v;
  }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int nb : g.neighbors(cur))
      if (nb != prev) next = nb;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

// Vertices of a cycle graph in walk order: start at 0, first step toward
// the smaller neighbor.
std::optional<std::vector<int>> cycle_order(const Graph& g) {
  int n = g.n();
  if (n < 3 || g.edge_count() != n || !g.connected()) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int nb : g.neighbors(cur))
      if (nb != prev && (next == -1 || nb < next)) next = nb;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

CycleCertificate relabel(const CycleCertificate& inner,
                         const std::vector<int>& order,
                         const std::vector<int>& anchors) {
  CycleCertificate cert = inner;
  cert.cycle.clear();
  for (int c : inner.cycle) cert.cycle.push_back(order[c]);
  cert.anchors = anchors;
  require_invariant(anchors_in_cyclic_order(cert.cycle, cert.anchors),
                    "anchors out of cyclic order after relabeling");
  return cert;
}

CycleCertificate run_family(const Graph& g, const std::vector<int>& anchors,
                            std::string& fam, const std::string& ham_csv) {
  if (fam == "auto") {
    if (anchors.size() == 4)
      fam = "four";
    else if (anchors.size() == 5 && cycle_order(g))
      fam = "cycle5";
    else if (path_order(g))
      fam = "path";
    else
      fam = "general";
  }
  for (int a : anchors)
    require_arg(a >= 0 && a < g.n(), "anchor out of range");
  if (fam == "general") return ordered_hamiltonian(g, anchors);
  if (fam == "four") return four_ordered_hamiltonian(g, anchors);
  if (fam == "path") {
    auto order = path_order(g);
    require_arg(order.has_value(), "--family path needs a path graph");
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[(*order)[i]] = i;
    std::vector<int> mapped;
    for (int a : anchors) mapped.push_back(pos[a] + 1);
    return relabel(path_ordered_hamiltonian(g.n(), mapped), *order, anchors);
  }
  if (fam == "cycle5") {
    auto order = cycle_order(g);
    require_arg(order.has_value(), "--family cycle5 needs a cycle graph");
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[(*order)[i]] = i;
    std::vector<int> mapped;
    for (int a : anchors) mapped.push_back(pos[a]);
    return relabel(cycle_five_ordered(g.n(), mapped), *order, anchors);
  }
  require_arg(fam == "host5", "unknown family '" + fam + "'");
  require_arg(!ham_csv.empty(), "--family host5 needs --ham");
  return host_five_ordered(g, parse_seq(ham_csv), anchors);
}

int report_oracle(const OracleResult& res, int n, int max_n, std::ostream& out,
                  std::ostream& err) {
  switch (res.status) {
    case OracleStatus::bound_exceeded:
      err << "bound exceeded: n = " << n << " > --max-n " << max_n << '\n';
      return exit_usage;
    case OracleStatus::found:
      out << "found";
      for (int v : res.witness) out << ' ' << v;
      out << '\n';
      return exit_ok;
    default:
      out << "not-found\n";
      return exit_no;
  }
}

int confirm_witness(const WitnessInstance& wi, int max_n, std::ostream& out,
                    std::ostream& err) {
  err << "n " << wi.base.n() << " power " << wi.power << '\n';
  out << "anchors";
  for (int a : wi.anchors) out << ' ' << a;
  out << '\n';
  OracleResult res = oracle_cycle(power(wi.base, wi.power), wi.anchors,
                                  /*require_hamiltonian=*/false, max_n);
  if (res.status == OracleStatus::bound_exceeded) {
    err << "bound exceeded: n = " << wi.base.n() << " > --max-n " << max_n
        << '\n';
    return exit_usage;
  }
  if (res.status == OracleStatus::found) {
    out << "unconfirmed";
    for (int v : res.witness) out << ' ' << v;
    out << '\n';
    return exit_no;
  }
  out << "confirmed\n";
  return exit_ok;
}

// Smallest cycle length whose witness the oracle refutes, from 3m+2 upward.
int confirm_cycle_witness_sweep(int m, int max_n, std::ostream& out,
                                std::ostream& err) {
  for (int n = 3 * m + 2; n <= max_n; ++n) {
    WitnessInstance wi = witness_cycle_lower(m, n);
    OracleResult res = oracle_cycle(power(wi.base, wi.power), wi.anchors,
                                    /*require_hamiltonian=*/false, max_n);
    if (res.status == OracleStatus::not_found) {
      err << "n " << n << " power " << wi.power << '\n';
      out << "anchors";
      for (int a : wi.anchors) out << ' ' << a;
      out << '\n';
      out << "confirmed\n";
      return exit_ok;
    }
  }
  err << "no confirming n <= " << max_n << '\n';
  out << "unconfirmed\n";
  return exit_no;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"ordered Hamiltonian cycles in powers of sparse graphs"};
  app.name("kordered");
  app.require_subcommand(1);
  static const char* gen_help =
      "generator: path:N, cycle:N, rand-tree:N:SEED or rand-conn:N:M:SEED";

  std::string input, gen, output, seq_csv, ham_csv, cert_path;
  std::string family = "auto";
  int power_p = 1, oracle_p = 1, oracle_max_n = 24, witness_max_n = 24;
  int bench_k = 3, bench_max_n = 12, wit_k = 4, wit_m = 3, wit_n = 11;
  bool any_cycle = false, csv = false;

  auto add_graph_source = [&](CLI::App* sc) {
    sc->add_option("--input", input, "edge-list file");
    sc->add_option("--gen", gen, gen_help);
  };

  auto* sc_power = app.add_subcommand("power", "write the edge list of g^p");
  add_graph_source(sc_power);
  sc_power->add_option("--p", power_p, "power")
      ->required()
      ->check(CLI::PositiveNumber);
  sc_power->add_option("--output", output, "output file (default stdout)");

  auto* sc_order =
      app.add_subcommand("order", "build an ordered Hamiltonian certificate");
  add_graph_source(sc_order);
  sc_order->add_option("--seq", seq_csv, "anchor sequence, comma separated")
      ->required();
  sc_order->add_option("--family", family, "construction family")
      ->check(
          CLI::IsMember({"auto", "general", "four", "path", "cycle5", "host5"}));
  sc_order->add_option("--ham", ham_csv,
                       "Hamiltonian cycle of the host, for --family host5");
  sc_order->add_option("--output", output, "output file (default stdout)");

  auto* sc_verify =
      app.add_subcommand("verify", "check a certificate against its graph");
  add_graph_source(sc_verify);
  sc_verify->add_option("--cert", cert_path, "certificate file")->required();

  auto* sc_oracle = app.add_subcommand(
      "oracle", "complete search for an ordered cycle in g^p");
  add_graph_source(sc_oracle);
  sc_oracle->add_option("--seq", seq_csv, "anchor sequence, comma separated")
      ->required();
  sc_oracle->add_option("--p", oracle_p, "power to search in (default 1)")
      ->check(CLI::PositiveNumber);
  sc_oracle->add_flag("--any-cycle", any_cycle,
                      "accept non-Hamiltonian cycles");
  sc_oracle->add_option("--max-n", oracle_max_n,
                        "refuse graphs larger than this (default 24)");

  auto* sc_witness =
      app.add_subcommand("witness", "check lower-bound witness instances");
  sc_witness->require_subcommand(1);
  auto* sw_path = sc_witness->add_subcommand(
      "path-lower", "path power that cannot order k interleaved anchors");
  sw_path->add_option("--k", wit_k, "anchor count (>= 4)")->required();
  sw_path->add_option("--max-n", witness_max_n, "oracle size cap");
  auto* sw_cycle = sc_witness->add_subcommand(
      "cycle-lower", "cycle power that is not 2m-ordered");
  sw_cycle->add_option("--m", wit_m, "power and half the anchor count");
  sw_cycle->add_option("--n", wit_n,
                       "check this length only (default: search upward)");
  sw_cycle->add_option("--max-n", witness_max_n, "oracle size cap");

  auto* sc_bench = app.add_subcommand("bench", "measurement helpers");
  sc_bench->require_subcommand(1);
  auto* sb_pk = sc_bench->add_subcommand(
      "pk", "sweep the smallest power that is k-ordered Hamiltonian");
  add_graph_source(sb_pk);
  sb_pk->add_option("--k", bench_k, "anchor count")->required();
  sb_pk->add_option("--max-n", bench_max_n,
                    "refuse graphs larger than this (default 12)");
  sb_pk->add_flag("--csv", csv, "machine-readable rows");

  std::vector<const char*> argv{"kordered"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (sc_power->parsed()) {
      Graph gp = power(load_graph(input, gen), power_p);
      emit(output, out, [&](std::ostream& o) { write_edge_list(o, gp); });
      return exit_ok;
    }
    if (sc_order->parsed()) {
      Graph g = load_graph(input, gen);
      std::vector<int> anchors = parse_seq(seq_csv);
      std::string fam = family;
      CycleCertificate cert = run_family(g, anchors, fam, ham_csv);
      err << "family " << fam << '\n';
      err << "power " << cert.power << '\n';
      emit(output, out, [&](std::ostream& o) { write_certificate(o, cert); });
      return exit_ok;
    }
    if (sc_verify->parsed()) {
      Graph g = load_graph(input, gen);
      std::ifstream cf(cert_path);
      require_arg(cf.good(), "cannot open '" + cert_path + "'");
      CycleCertificate cert = read_certificate(cf);
      VerifyResult vr = verify_certificate(g, cert);
      if (vr.ok()) {
        out << "valid\n";
        return exit_ok;
      }
      out << "invalid: " << vr.first_violation << '\n';
      return exit_no;
    }
    if (sc_oracle->parsed()) {
      Graph g = load_graph(input, gen);
      std::vector<int> anchors = parse_seq(seq_csv);
      Graph gp = oracle_p == 1 ? g : power(g, oracle_p);
      OracleResult res = oracle_cycle(gp, anchors, !any_cycle, oracle_max_n);
      return report_oracle(res, g.n(), oracle_max_n, out, err);
    }
    if (sw_path->parsed())
      return confirm_witness(witness_path_lower(wit_k), witness_max_n, out,
                             err);
    if (sw_cycle->parsed()) {
      if (sw_cycle->count("--n") > 0)
        return confirm_witness(witness_cycle_lower(wit_m, wit_n),
                               witness_max_n, out, err);
      return confirm_cycle_witness_sweep(wit_m, witness_max_n, out, err);
    }
    if (sb_pk->parsed()) {
      Graph g = load_graph(input, gen);
      SweepResult res = sweep_pk(g, bench_k, bench_max_n);
      if (csv) {
        out << "power,all_pass\n";
        for (const auto& row : res.rows)
          out << row.power << ',' << (row.all_pass ? 1 : 0) << '\n';
      } else {
        for (const auto& row : res.rows)
          out << "power " << row.power << (row.all_pass ? " pass" : " fail")
              << '\n';
        out << "p_k " << res.p_k << '\n';
      }
      return exit_ok;
    }
    require_invariant(false, "no subcommand dispatched");
  } catch (const invariant_violation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return exit_bug;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}

}  // namespace kord

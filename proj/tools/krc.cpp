#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "krc/bench.hpp"
#include "krc/charge.hpp"
#include "krc/energy.hpp"
#include "krc/error.hpp"
#include "krc/io.hpp"
#include "krc/kyoto.hpp"
#include "krc/qpoly.hpp"
#include "krc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct ShapeArgs {
  std::string type;
  int n = 0;
  std::string mu;
  std::string heights;

  void attach(CLI::App* cmd, bool allow_heights = true) {
    cmd->add_option("-t,--type", type, "A or C")->required()->check(CLI::IsMember({"A", "C"}));
    cmd->add_option("-n", n, "number of unbarred letters")->required();
    auto* m = cmd->add_option("--mu", mu, "partition, e.g. 2,2,1");
    if (allow_heights) {
      auto* h = cmd->add_option("--heights", heights, "column heights left to right, e.g. 2,2,1,1");
      m->excludes(h);
    }
  }

  krc::CartanType cartan() const {
    return krc::CartanType(type == "A" ? krc::Family::A : krc::Family::C, n);
  }

  std::optional<krc::Partition> partition() const {
    if (mu.empty()) return std::nullopt;
    return krc::parse_int_list(mu);
  }

  std::vector<int> column_heights() const {
    if (!heights.empty()) return krc::parse_int_list(heights);
    if (mu.empty()) throw CLI::ValidationError("shape", "one of --mu or --heights is required");
    return krc::column_heights(*partition(), cartan());
  }
};

bool internal_error(krc::ErrorCode code) {
  using krc::ErrorCode;
  switch (code) {
    case ErrorCode::ComponentCorrupt:
    case ErrorCode::NoMatchingComponent:
    case ErrorCode::TargetUnreachable:
    case ErrorCode::ChargeInvariant:
    case ErrorCode::OddArmSum:
    case ErrorCode::NonDemazureArrow:
    case ErrorCode::BarredResidue:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy and charge on tensor products of single-column KR crystals"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  ShapeArgs enum_shape;
  bool enum_stats = false;
  auto* enumerate = app.add_subcommand("enumerate", "list every element of the tensor product");
  enum_shape.attach(enumerate);
  enumerate->add_flag("--stats", enum_stats, "append charge and D (heights must weakly decrease)");
  enumerate->callback([&] {
    const auto ct = enum_shape.cartan();
    krc::for_each_element(ct, enum_shape.column_heights(), [&](const krc::TensorElement& b) {
      std::cout << krc::serialize_filling(b);
      if (enum_stats) std::cout << "\tcharge=" << krc::charge(b) << "\tD=" << krc::energy(b);
      std::cout << '\n';
    });
  });

  std::string charge_text;
  bool charge_detail = false;
  auto* charge = app.add_subcommand("charge", "charge of a filling");
  charge->add_option("filling", charge_text, "e.g. \"A6; 3,5,6 | 2,3,4 | 1,2,4 | 2\"")->required();
  charge->add_flag("--detail", charge_detail, "show the charge word and circ-ord filling");
  charge->callback([&] {
    const auto b = krc::parse_filling(charge_text);
    if (!charge_detail) {
      std::cout << krc::charge(b) << '\n';
      return;
    }
    const auto c = krc::circ_ord(b);
    std::cout << "charge word: " << krc::charge_word(b).lower_str() << '\n';
    std::cout << "circ-ord:\n";
    for (int i = 0; i < c.row_count(); ++i) {
      std::cout << ' ';
      for (const auto& x : c.row(i)) std::cout << ' ' << x.str();
      std::cout << '\n';
    }
    std::cout << "descents:";
    for (const auto& d : c.descents) {
      std::cout << " (" << d.column + 1 << ',' << d.row + 1 << "; arm " << c.arm(d) << ')';
    }
    std::cout << "\narm sum: " << c.arm_sum() << "\ncharge: " << krc::charge(b) << '\n';
  });

  std::string energy_text;
  bool energy_detail = false;
  auto* energy = app.add_subcommand("energy", "energy D = D^L of a filling");
  energy->add_option("filling", energy_text)->required();
  energy->add_flag("--detail", energy_detail, "show D^L, D^R and every local term");
  energy->callback([&] {
    const auto b = krc::parse_filling(energy_text);
    if (!energy_detail) {
      std::cout << krc::energy(b) << '\n';
      return;
    }
    const auto r = krc::energy_report(b);
    auto terms = [](const std::vector<krc::EnergyTerm>& ts) {
      std::string out;
      for (const auto& t : ts) {
        out += " H(" + std::to_string(t.j) + "," + std::to_string(t.i) + ")=" + std::to_string(t.value);
      }
      return out;
    };
    std::cout << "D^L: " << r.d_left << "\nterms:" << terms(r.left_terms) << '\n';
    std::cout << "D^R: " << r.d_right << "\nterms:" << terms(r.right_terms) << '\n';
  });

  ShapeArgs verify_shape;
  bool verify_json = false;
  bool verify_charge_only = false;
  int verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "exhaustive D = -charge and invariant suites");
  verify_shape.attach(verify);
  verify->add_flag("--json", verify_json, "print the JSON report");
  verify->add_flag("--charge-only", verify_charge_only, "skip the invariant suites");
  verify->add_option("-j,--jobs", verify_jobs, "worker threads, 0 for all cores");
  verify->callback([&] {
    krc::VerifyOptions opts;
    opts.jobs = verify_jobs;
    opts.properties = !verify_charge_only;
    auto r = krc::run_verify(verify_shape.cartan(), verify_shape.column_heights(), opts);
    if (auto mu = verify_shape.partition()) r.mu = *mu;
    std::cout << (verify_json ? krc::verify_report_json(r) + "\n" : krc::verify_report_text(r));
    if (!r.passed()) exit_code = kExitFailed;
  });

  ShapeArgs gs_shape;
  auto* gs = app.add_subcommand("ground-states", "ground states of B ⊗ B(Λ0)");
  gs_shape.attach(gs);
  gs->callback([&] {
    const auto ct = gs_shape.cartan();
    for (const auto& g : krc::ground_states(ct, gs_shape.column_heights())) {
      std::cout << 'L' << g.weight << '\t' << krc::serialize_filling(g.element) << '\n';
    }
  });

  ShapeArgs walk_shape;
  std::size_t walk_state = 1;
  auto* walk = app.add_subcommand("walk", "Demazure walk from a type C ground state");
  walk_shape.attach(walk);
  walk->add_option("--state", walk_state, "1-based position in the ground-states listing");
  walk->callback([&] {
    const auto states = krc::ground_states(walk_shape.cartan(), walk_shape.column_heights());
    if (walk_state < 1 || walk_state > states.size()) {
      throw CLI::ValidationError("--state", "there are " + std::to_string(states.size()) + " ground states");
    }
    const auto& g = states[walk_state - 1];
    const auto w = krc::demazure_walk(g);
    std::cout << "v0: " << krc::serialize_filling(g.element) << '\n';
    for (const auto& step : w.steps) {
      std::cout << "F" << step.j << " (" << step.shape.str() << "): " << krc::word_str(step.word) << '\n';
      std::cout << "v" << step.j + 1 << ": " << krc::serialize_filling(step.result) << '\n';
    }
    std::cout << "final: " << krc::serialize_filling(w.final_element) << '\n';
    std::cout << "cut:   " << krc::serialize_filling(krc::cut_construction(g)) << '\n';
  });

  ShapeArgs mac_shape;
  int mac_jobs = 1;
  bool mac_energy = false;
  auto* mac = app.add_subcommand("macdonald", "P_mu(x; q, 0) as a sparse polynomial");
  mac_shape.attach(mac, false);
  mac->add_option("-j,--jobs", mac_jobs, "worker threads, 0 for all cores");
  mac->add_flag("--energy", mac_energy, "use q^{-D} instead of q^{charge}");
  mac->callback([&] {
    const auto mu = mac_shape.partition();
    if (!mu) throw CLI::ValidationError("--mu", "required");
    const auto ct = mac_shape.cartan();
    const auto p = mac_energy ? krc::macdonald_p_q0_energy(*mu, ct, mac_jobs)
                              : krc::macdonald_p_q0(*mu, ct, mac_jobs);
    std::cout << p.str() << '\n';
  });

  int kf_n = 0;
  std::string kf_lambda, kf_mu;
  auto* kostka = app.add_subcommand("kostka", "Kostka–Foulkes polynomial K_{λ'μ'}(q), type A");
  kostka->add_option("-n", kf_n, "number of letters")->required();
  kostka->add_option("--lambda", kf_lambda, "weight partition")->required();
  kostka->add_option("--mu", kf_mu, "shape partition")->required();
  kostka->callback([&] {
    const auto p = krc::kostka_foulkes(krc::parse_int_list(kf_lambda), krc::parse_int_list(kf_mu),
                                       krc::CartanType::A(kf_n));
    std::cout << p.str() << '\n';
  });

  ShapeArgs x_shape;
  std::string x_weight;
  auto* onedim = app.add_subcommand("one-dim-sum", "X = sum of q^D over highest elements of a weight");
  x_shape.attach(onedim);
  onedim->add_option("--weight", x_weight, "content vector, e.g. 2,1,0")->required();
  onedim->callback([&] {
    const auto ct = x_shape.cartan();
    const krc::ClassicalWeight w{krc::parse_int_list(x_weight)};
    if (static_cast<int>(w.content.size()) != ct.n) {
      throw CLI::ValidationError("--weight", "needs exactly n entries");
    }
    std::cout << krc::one_dim_sum_X(w, x_shape.column_heights(), ct).str() << '\n';
  });

  ShapeArgs graph_shape;
  bool graph_classical = false;
  auto* graph = app.add_subcommand("graph", "crystal graph in DOT");
  graph_shape.attach(graph);
  graph->add_flag("--classical", graph_classical, "omit 0-edges");
  graph->callback([&] {
    const auto g = krc::crystal_graph(graph_shape.cartan(), graph_shape.column_heights(), !graph_classical);
    std::cout << krc::crystal_graph_dot(g);
  });

  ShapeArgs bench_shape;
  krc::BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "time charge against the energy on random elements");
  bench_shape.attach(bench);
  bench->add_option("--samples", bench_opts.samples, "sampled elements");
  bench->add_option("--trials", bench_opts.trials, "timed passes; medians are reported");
  bench->add_option("--seed", bench_opts.seed, "mt19937_64 seed");
  bench->callback([&] {
    const auto r = krc::run_bench(bench_shape.cartan(), bench_shape.column_heights(), bench_opts);
    std::cout << krc::bench_report_text(r);
    if (r.mismatches != 0) exit_code = kExitFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const krc::Error& e) {
    std::cerr << "error: " << krc::to_string(e.code()) << ": " << e.what() << '\n';
    return internal_error(e.code()) ? kExitFailed : kExitUsage;
  }
  return exit_code;
}

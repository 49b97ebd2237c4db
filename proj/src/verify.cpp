#include "krc/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "krc/charge.hpp"
#include "krc/energy.hpp"
#include "krc/error.hpp"
#include "krc/io.hpp"
#include "krc/parallel.hpp"

namespace krc {

namespace {

enum Suite : std::size_t {
  kChargeIsMinusEnergy,
  kChargeAlgorithms,
  kChargeClassical,
  kChargeZeroArrow,
  kEnergyTau,
  kEnergyZeroArrow,
  kCommutor,
  kInvolution,
  kGrading,
  kSuiteCount,
};

struct Tally {
  std::vector<PropertyResult> props;
  int max_discrepancy = 0;

  void check(Suite s, bool ok, const TensorElement& b) {
    auto& p = props[s];
    ++p.checked;
    if (ok) return;
    if (p.failures++ == 0) p.first_failure = serialize_filling(b);
  }
};

Tally empty_tally(bool with_properties) {
  Tally t;
  const auto& names = verify_property_names();
  const std::size_t count = with_properties ? names.size() : 1;
  for (std::size_t s = 0; s < count; ++s) t.props.push_back({names[s], 0, 0, {}});
  return t;
}

void visit(Tally& t, const TensorElement& b, bool with_properties) {
  const int c = charge(b);
  const int d = energy_DL(b);
  t.max_discrepancy = std::max(t.max_discrepancy, std::abs(d + c));
  t.check(kChargeIsMinusEnergy, d == -c, b);
  if (!with_properties) return;

  const CartanType& ct = b.cartan();
  t.check(kChargeAlgorithms, charge_by_selection(b) == c, b);
  for (int i = 1; i <= ct.top_index(); ++i) {
    if (auto y = f(i, b)) t.check(kChargeClassical, charge(*y) == c, b);
  }
  const auto ep = eps_phi(0, b);
  if (ep.phi >= 1 && ep.eps >= 1) t.check(kChargeZeroArrow, charge(*e(0, b)) == c - 1, b);

  const int dr = energy_DR(b);
  t.check(kEnergyTau, dr == energy_DL(tau(b)), b);
  if (ep.eps >= 1) {
    if (auto y = f(0, b)) t.check(kEnergyZeroArrow, energy_DR(*y) == dr + 1, b);
  }

  const auto& cols = b.factors();
  for (std::size_t p = 0; p + 1 < cols.size(); ++p) {
    t.check(kCommutor, commutor(cols[p], cols[p + 1], ct) == combinatorial_r(cols[p], cols[p + 1], ct), b);
  }
  t.check(kInvolution, lusztig_involution(lusztig_involution(b)) == b, b);

  const auto g = demazure_grading_oracle(b);
  t.check(kGrading, g.min_e0 == dr - energy_DR(g.target), b);
}

void merge(Tally& out, const Tally& part) {
  out.max_discrepancy = std::max(out.max_discrepancy, part.max_discrepancy);
  for (std::size_t s = 0; s < out.props.size(); ++s) {
    auto& o = out.props[s];
    const auto& p = part.props[s];
    if (o.failures == 0 && p.failures > 0) o.first_failure = p.first_failure;
    o.checked += p.checked;
    o.failures += p.failures;
  }
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

const std::vector<std::string>& verify_property_names() {
  static const std::vector<std::string> names = {
      "D=-charge",          "charge-algorithms-agree", "charge-classical-invariance",
      "charge-e0-lowers",   "DR=DL-tau",               "DR-f0-raises",
      "commutor=R-matrix",  "S-involution",            "grading-oracle=DR-difference",
  };
  return names;
}

bool VerifyReport::passed() const {
  return max_discrepancy == 0 &&
         std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed(); });
}

VerifyReport run_verify(const CartanType& ct, const std::vector<int>& heights,
                        const VerifyOptions& opts) {
  if (!std::is_sorted(heights.begin(), heights.end(), std::greater<>())) {
    throw Error(ErrorCode::HeightsNotSorted, "verify needs weakly decreasing column heights");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto elems = all_elements(ct, heights, opts.budget);
  const bool with = opts.properties;
  Tally total = parallel_fold(
      elems, opts.jobs, empty_tally(with),
      [with](Tally& t, const TensorElement& b) { visit(t, b, with); }, merge);
  const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;

  VerifyReport r;
  r.cartan = ct;
  r.heights = heights;
  r.element_count = elems.size();
  r.max_discrepancy = total.max_discrepancy;
  r.elapsed_ms = std::round(took.count() * 1000.0) / 1000.0;
  r.properties = std::move(total.props);
  return r;
}

std::string verify_report_json(const VerifyReport& r, int indent) {
  nlohmann::ordered_json j;
  j["schema_version"] = kVerifySchemaVersion;
  j["type"] = r.cartan.name();
  j["mu"] = r.mu;
  j["heights"] = r.heights;
  j["element_count"] = r.element_count;
  j["max_discrepancy"] = r.max_discrepancy;
  j["elapsed_ms"] = r.elapsed_ms;
  j["passed"] = r.passed();
  j["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : r.properties) {
    nlohmann::ordered_json q;
    q["name"] = p.name;
    q["checked"] = p.checked;
    q["failures"] = p.failures;
    q["passed"] = p.passed();
    q["first_failure"] = p.first_failure;
    j["properties"].push_back(std::move(q));
  }
  return j.dump(indent);
}

std::string verify_report_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "type: " << r.cartan.name() << '\n';
  os << "mu: " << (r.mu.empty() ? "-" : join(r.mu)) << '\n';
  os << "heights: " << join(r.heights) << '\n';
  os << "elements: " << r.element_count << '\n';
  os << "max |D + charge|: " << r.max_discrepancy << '\n';
  os << "elapsed: " << fixed3(r.elapsed_ms) << " ms\n";
  for (const auto& p : r.properties) {
    os << (p.passed() ? "PASS " : "FAIL ") << p.name << "  checked " << p.checked << "  failures "
       << p.failures;
    if (!p.first_failure.empty()) os << "  first: " << p.first_failure;
    os << '\n';
  }
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace krc

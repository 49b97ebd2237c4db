#pragma once

#include <utility>
#include <vector>

namespace krc {

/// Outcome of the signature rule on a sequence of factors.
struct Signature {
  int phi = 0;
  int eps = 0;
  int f_position = -1;  ///< factor that f_i acts on, -1 when f_i is undefined
  int e_position = -1;  ///< factor that e_i acts on, -1 when e_i is undefined
};

/// Signature rule for the tensor convention
///   f_i(b1 ⊗ b2) = f_i(b1) ⊗ b2  iff  eps_i(b1) >= phi_i(b2).
/// Each factor contributes +^phi -^eps, read left to right; a '-' cancels a
/// later '+'. f acts on the rightmost surviving '+', e on the leftmost
/// surviving '-'.
template <class PhiEpsAt>
Signature signature_rule(int count, PhiEpsAt&& phi_eps_at) {
  Signature out;
  // (factor, number of open minuses)
  std::vector<std::pair<int, int>> open;
  for (int t = 0; t < count; ++t) {
    auto [plus, minus] = phi_eps_at(t);
    while (plus > 0 && !open.empty()) {
      const int take = plus < open.back().second ? plus : open.back().second;
      plus -= take;
      open.back().second -= take;
      if (open.back().second == 0) open.pop_back();
    }
    if (plus > 0) {
      out.phi += plus;
      out.f_position = t;
    }
    if (minus > 0) open.emplace_back(t, minus);
  }
  for (const auto& [t, m] : open) out.eps += m;
  if (!open.empty()) out.e_position = open.front().first;
  return out;
}

}  // namespace krc

// Root data for the two quantum algebras, and lattice-configuration packing.
//
// Two algebras drive everything here:
//
//   A2: U_q(gl₃), simple roots α₁, α₂ with (αᵢ,αᵢ) = 2, (α₁,α₂) = -1.
//       The 3-dimensional fundamental representation carries one site of the
//       two-species process: site states 0 (empty), 1, 2 (the two species).
//
//   C2: U_q(sp₄), α₁ short, α₂ long: (α₁,α₁) = 2, (α₂,α₂) = 4,
//       (α₁,α₂) = -2.  The 4-dimensional fundamental representation carries
//       site states 0 (empty), 1, 2 plus a fourth state ⊤ ("doubly
//       occupied"), written T in dumps.  Markov configurations use {0,1,2}
//       only; ⊤ appears in the auxiliary sector of the tensor space.
//
// Cartan integers a_ij = 2(α_i,α_j)/(α_i,α_i) and the scaling d_i with
// q_i = q^{d_i} = q^{(α_i,α_i)/2} follow.  Lattice configurations
// (s₁,…,s_L) pack row-major with site 1 most significant:
// index = Σ s_i · d^{L-i}.

#pragma once

#include <string>
#include <vector>

namespace qgdual {

enum class Alg { A2, C2 };

[[nodiscard]] constexpr int site_dim(Alg a) { return a == Alg::A2 ? 3 : 4; }

[[nodiscard]] constexpr const char* alg_name(Alg a) { return a == Alg::A2 ? "A2" : "C2"; }

// (α_i, α_j) for i, j ∈ {1, 2}.
[[nodiscard]] constexpr int root_pairing(Alg a, int i, int j) {
  if (i == j) {
    if (a == Alg::C2 && i == 2) return 4;
    return 2;
  }
  return a == Alg::A2 ? -1 : -2;
}

// a_ij = 2 (α_i, α_j) / (α_i, α_i).
[[nodiscard]] constexpr int cartan_a(Alg a, int i, int j) {
  return 2 * root_pairing(a, i, j) / root_pairing(a, i, i);
}

// q_i = q^{d_i}.
[[nodiscard]] constexpr int d_i(Alg a, int i) { return root_pairing(a, i, i) / 2; }

[[nodiscard]] inline char state_char(int s) {
  static constexpr char names[] = {'0', '1', '2', 'T'};
  return names[s];
}

// Site-state tuples <-> flat index, row-major with site 1 most significant.
struct Basis {
  Alg alg;
  int L;

  [[nodiscard]] int dim() const {
    int d = 1;
    for (int i = 0; i < L; ++i) d *= site_dim(alg);
    return d;
  }

  [[nodiscard]] int pack(const std::vector<int>& states) const {
    int idx = 0;
    for (int s : states) idx = idx * site_dim(alg) + s;
    return idx;
  }

  [[nodiscard]] std::vector<int> unpack(int idx) const {
    std::vector<int> states(static_cast<size_t>(L));
    for (int i = L - 1; i >= 0; --i) {
      states[static_cast<size_t>(i)] = idx % site_dim(alg);
      idx /= site_dim(alg);
    }
    return states;
  }

  [[nodiscard]] std::string state_str(int idx) const {
    std::string s;
    for (int v : unpack(idx)) s.push_back(state_char(v));
    return s;
  }
};

// Enumerate {0,…,d-1}^L in lexicographic (= packed index) order.
[[nodiscard]] std::vector<std::vector<int>> all_configs(int d, int L);

// Configurations over {0,1,2} embed into the C2 tensor basis verbatim
// (state values agree; ⊤ = 3 simply never occurs).  These helpers classify
// the C2 basis accordingly.
[[nodiscard]] bool is_markov_config(const std::vector<int>& states);

}  // namespace qgdual

// Fundamental representations, coproducts, and lattice (L-fold) operators.
//
// A SiteRep packages the one-site action of the Chevalley generators
// e₁, e₂, f₁, f₂ together with the weight of each basis state, from which
// every Cartan element k_μ = q^{⟨μ, wt⟩} is a diagonal matrix.  Basis states
// are indexed by particle content (see algebra.hpp):
//
//   A2 (dim 3):  0 ↔ empty, 1 ↔ species 1, 2 ↔ species 2, with weights
//                wt(0) = ε₃, wt(1) = ε₁, wt(2) = ε₂ in gl₃ coordinates, so
//                k_{(a,b,c)} = diag(q^c, q^a, q^b).
//                e₁: 2 ↦ 1,   e₂: 0 ↦ 2   (f_i transpose).
//
//   C2 (dim 4):  0 ↔ empty, 1 ↔ species 1, 2 ↔ species 2, 3 ↔ ⊤, with
//                weights wt(0) = -ε₁, wt(1) = ε₂, wt(2) = -ε₂, wt(3) = ε₁
//                in sp₄ coordinates, so k_{(a,b)} = diag(q⁻ᵃ, qᵇ, q⁻ᵇ, qᵃ).
//                e₁: 1 ↦ ⊤ and 0 ↦ 2,   e₂: 2 ↦ 1   (f_i transpose).
//
// Lattice operators act on V^{⊗L} through the coproduct
//   Δ(e) = e⊗1 + k⊗e,   Δ(f) = 1⊗f + f⊗k⁻¹,   Δ(k) = k⊗k,
// iterated to
//   Δ⁽ᴸ⁾(e_i) = Σ_j k_i^{⊗(j-1)} ⊗ e_i ⊗ 1^{⊗(L-j)},
//   Δ⁽ᴸ⁾(f_i) = Σ_j 1^{⊗(j-1)} ⊗ f_i ⊗ (k_i⁻¹)^{⊗(L-j)},
//   Δ⁽ᴸ⁾(k_μ) = k_μ^{⊗L}.
// Words of generators act right-to-left: the rightmost factor applies first.

#pragma once

#include <qgdual/algebra.hpp>
#include <qgdual/report.hpp>
#include <qgdual/sparse.hpp>

#include <string>
#include <vector>

namespace qgdual {

enum class GenSym { E1, E2, F1, F2 };

[[nodiscard]] const char* gen_name(GenSym g);

// Cartan weight vector μ: length 3 for A2 (gl₃ diagonal), length 2 for C2.
struct KVec {
  std::vector<int> mu;
};

struct SiteRep {
  Alg alg;
  LMat e1, e2, f1, f2;
  std::vector<std::vector<int>> wt;  // weight of each basis state

  [[nodiscard]] const LMat& gen(GenSym g) const;

  // k_μ = diag(q^{⟨μ, wt(s)⟩}); pass negate=true for k_μ⁻¹.
  [[nodiscard]] LMat k(const KVec& mu, bool inverse = false) const;

  // The Chevalley Cartan elements k₁, k₂ (so that k_i x k_i⁻¹ = q^{(α_i,·)} x).
  [[nodiscard]] KVec k1_vec() const;
  [[nodiscard]] KVec k2_vec() const;
  [[nodiscard]] KVec k_of(int i) const { return i == 1 ? k1_vec() : k2_vec(); }
};

[[nodiscard]] SiteRep fundamental_rep(Alg alg);

// Two-site coproduct matrices (dim² × dim²).
[[nodiscard]] LMat coproduct(const SiteRep& rep, GenSym g);
[[nodiscard]] LMat coproduct_k(const SiteRep& rep, const KVec& mu);

// L-fold lattice operators (L ≥ 1; throws std::domain_error otherwise).
[[nodiscard]] LMat lfold(const SiteRep& rep, GenSym g, int L);
[[nodiscard]] LMat lfold_k(const SiteRep& rep, const KVec& mu, int L, bool inverse = false);

// Verifies the full defining-relation suite exactly on V^{⊗L}:
//   * k_μ k_ν = k_ν k_μ and k_i e_j k_i⁻¹ = q^{(α_i,α_j)} e_j (likewise f),
//   * (q_i - q_i⁻¹)[e_i, f_i] = k_i - k_i⁻¹ and [e_i, f_j] = 0 for i ≠ j,
//   * quantum Serre relations
//       Σ_{r=0}^{n} (-1)^r binom(n,r)_{q_i} e_i^r e_j e_i^{n-r} = 0,
//     n = 1 - a_ij, in the base q_i = q^{d_i} (and the same for f).
// Also records, informationally, whether the plain commutator [e₁,e₂]
// vanishes (it does not in general; the Serre relation is the true identity).
[[nodiscard]] Report verify_relations(const SiteRep& rep, int L);

// CSV dump of a symbolic matrix:
//   # dim=<n> ring=<exact|float> basis=<A2|C2> L=<L>
//   row_index,col_index,value
// Exact entries print in canonical text form; float entries via %.17g.
[[nodiscard]] std::string dump_matrix_csv(const LMat& m, Alg alg, int L);
[[nodiscard]] std::string dump_matrix_csv(const DMat& m, Alg alg, int L);

}  // namespace qgdual

#include <qgdual/repkit.hpp>

#include <qgdual/qcomb.hpp>

#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qgdual {

const char* gen_name(GenSym g) {
  switch (g) {
    case GenSym::E1: return "e1";
    case GenSym::E2: return "e2";
    case GenSym::F1: return "f1";
    case GenSym::F2: return "f2";
  }
  return "?";
}

const LMat& SiteRep::gen(GenSym g) const {
  switch (g) {
    case GenSym::E1: return e1;
    case GenSym::E2: return e2;
    case GenSym::F1: return f1;
    case GenSym::F2: return f2;
  }
  throw std::logic_error("gen: bad symbol");
}

LMat SiteRep::k(const KVec& mu, bool inverse) const {
  const int d = static_cast<int>(wt.size());
  if (mu.mu.size() != wt[0].size()) throw std::domain_error("k: weight-vector length mismatch");
  LMat m(d, d);
  for (int s = 0; s < d; ++s) {
    int e = std::inner_product(mu.mu.begin(), mu.mu.end(), wt[static_cast<size_t>(s)].begin(), 0);
    m.set(s, s, qp(inverse ? -e : e));
  }
  return m;
}

KVec SiteRep::k1_vec() const {
  return alg == Alg::A2 ? KVec{{1, -1, 0}} : KVec{{1, -1}};
}

KVec SiteRep::k2_vec() const {
  return alg == Alg::A2 ? KVec{{0, 1, -1}} : KVec{{0, 2}};
}

SiteRep fundamental_rep(Alg alg) {
  SiteRep rep;
  rep.alg = alg;
  const int d = site_dim(alg);
  rep.e1 = LMat(d, d);
  rep.e2 = LMat(d, d);
  rep.f1 = LMat(d, d);
  rep.f2 = LMat(d, d);
  const LaurentPoly one(1);
  if (alg == Alg::A2) {
    // e₁ raises species 2 to species 1; e₂ fills an empty site with species 2.
    rep.e1.set(1, 2, one);
    rep.e2.set(2, 0, one);
    rep.f1.set(2, 1, one);
    rep.f2.set(0, 2, one);
    rep.wt = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  } else {
    // e₁ promotes species 1 to ⊤ and fills an empty site with species 2;
    // e₂ raises species 2 to species 1.
    rep.e1.set(3, 1, one);
    rep.e1.set(2, 0, one);
    rep.e2.set(1, 2, one);
    rep.f1.set(1, 3, one);
    rep.f1.set(0, 2, one);
    rep.f2.set(2, 1, one);
    rep.wt = {{-1, 0}, {0, 1}, {0, -1}, {1, 0}};
  }
  return rep;
}

LMat coproduct(const SiteRep& rep, GenSym g) { return lfold(rep, g, 2); }

LMat coproduct_k(const SiteRep& rep, const KVec& mu) { return lfold_k(rep, mu, 2); }

LMat lfold(const SiteRep& rep, GenSym g, int L) {
  if (L < 1) throw std::domain_error("lfold: L must be >= 1");
  const bool raising = (g == GenSym::E1 || g == GenSym::E2);
  const int i = (g == GenSym::E1 || g == GenSym::F1) ? 1 : 2;
  const LMat& x = rep.gen(g);
  const LMat k = rep.k(rep.k_of(i), /*inverse=*/!raising);
  const LMat id = LMat::identity(x.rows());

  // Σ_j (left)^{⊗(j-1)} ⊗ x ⊗ (right)^{⊗(L-j)}, with left = k_i, right = 1
  // for raising generators and left = 1, right = k_i⁻¹ for lowering ones.
  const LMat& left = raising ? k : id;
  const LMat& right = raising ? id : k;
  LMat acc;
  LMat prefix = LMat::identity(1);
  for (int j = 1; j <= L; ++j) {
    LMat term = kron(prefix, x);
    for (int t = j + 1; t <= L; ++t) term = kron(term, right);
    acc = (j == 1) ? term : acc + term;
    prefix = kron(prefix, left);
  }
  return acc;
}

LMat lfold_k(const SiteRep& rep, const KVec& mu, int L, bool inverse) {
  if (L < 1) throw std::domain_error("lfold_k: L must be >= 1");
  const LMat k = rep.k(mu, inverse);
  LMat acc = k;
  for (int j = 2; j <= L; ++j) acc = kron(acc, k);
  return acc;
}

// ===== relation verification =====

namespace {

LMat mat_pow(const LMat& m, int n) {
  LMat acc = LMat::identity(m.rows());
  for (int i = 0; i < n; ++i) acc = acc * m;
  return acc;
}

// Σ_{r=0}^{n} (-1)^r binom(n,r)_{q_i} x_i^r x_j x_i^{n-r},  n = 1 - a_ij.
LMat serre_combination(Alg alg, const LMat& xi, const LMat& xj, int i, int j) {
  const int n = 1 - cartan_a(alg, i, j);
  const int di = d_i(alg, i);
  LMat acc(xi.rows(), xi.cols());
  for (int r = 0; r <= n; ++r) {
    LaurentPoly c = q_binomial(n, r).subst_q_power(di);
    if (r % 2 == 1) c = -c;
    acc = acc + (mat_pow(xi, r) * xj * mat_pow(xi, n - r)).scaled(c);
  }
  return acc;
}

}  // namespace

Report verify_relations(const SiteRep& rep, int L) {
  Report rep_out;
  rep_out.kind = "relations";
  rep_out.algebra = alg_name(rep.alg);
  rep_out.L = L;

  const Alg alg = rep.alg;
  LMat e[3], f[3], k[3], kinv[3];
  for (int i = 1; i <= 2; ++i) {
    e[i] = lfold(rep, i == 1 ? GenSym::E1 : GenSym::E2, L);
    f[i] = lfold(rep, i == 1 ? GenSym::F1 : GenSym::F2, L);
    k[i] = lfold_k(rep, rep.k_of(i), L);
    kinv[i] = lfold_k(rep, rep.k_of(i), L, /*inverse=*/true);
  }

  rep_out.check_zero("k1_k2_commute", commutator(k[1], k[2]));

  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const int pair = root_pairing(alg, i, j);
      std::ostringstream ne, nf;
      ne << "k" << i << "_e" << j;
      nf << "k" << i << "_f" << j;
      rep_out.check_zero(ne.str(), k[i] * e[j] - (e[j] * k[i]).scaled(qp(pair)));
      rep_out.check_zero(nf.str(), k[i] * f[j] - (f[j] * k[i]).scaled(qp(-pair)));
    }

  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      std::ostringstream name;
      name << "e" << i << "_f" << j << (i == j ? "_cartan" : "_commute");
      if (i == j) {
        // Cross-multiplied form avoids dividing by q_i - q_i⁻¹.
        const LaurentPoly qi_diff = qp(d_i(alg, i)) - qp(-d_i(alg, i));
        rep_out.check_zero(name.str(),
                           commutator(e[i], f[i]).scaled(qi_diff) - (k[i] - kinv[i]));
      } else {
        rep_out.check_zero(name.str(), commutator(e[i], f[j]));
      }
    }

  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      if (i == j) continue;
      std::ostringstream se, sf;
      se << "serre_e" << i << "_e" << j;
      sf << "serre_f" << i << "_f" << j;
      rep_out.check_zero(se.str(), serre_combination(alg, e[i], e[j], i, j));
      rep_out.check_zero(sf.str(), serre_combination(alg, f[i], f[j], i, j));
    }

  // Not a defining relation: the raising generators do not commute in
  // general.  Recorded for information only.
  {
    LMat c = commutator(e[1], e[2]);
    int r = 0, cc = 0;
    LaurentPoly v;
    if (c.first_nonzero(&r, &cc, &v)) {
      std::ostringstream note;
      note << "[e1,e2] != 0; first entry (" << r << "," << cc << ") = " << v.str();
      rep_out.add_info("plain_commutator_e1_e2", note.str());
    } else {
      rep_out.add_info("plain_commutator_e1_e2", "[e1,e2] == 0");
    }
  }

  return rep_out;
}

// ===== CSV dumps =====

namespace {

template <class R, class Fmt>
std::string dump_csv_impl(const SparseMat<R>& m, Alg alg, int L, const char* ring, Fmt fmt) {
  std::ostringstream os;
  os << "# dim=" << m.rows() << " ring=" << ring << " basis=" << alg_name(alg) << " L=" << L
     << "\n";
  os << "row_index,col_index,value\n";
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i)) os << i << "," << c << "," << fmt(v) << "\n";
  return os.str();
}

}  // namespace

std::string dump_matrix_csv(const LMat& m, Alg alg, int L) {
  return dump_csv_impl(m, alg, L, "exact", [](const LaurentPoly& v) {
    // Quote: canonical text contains no commas today, but guard anyway.
    return "\"" + v.str() + "\"";
  });
}

std::string dump_matrix_csv(const DMat& m, Alg alg, int L) {
  return dump_csv_impl(m, alg, L, "float", [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  });
}

}  // namespace qgdual

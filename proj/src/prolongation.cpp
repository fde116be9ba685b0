#include "cliffconn/prolongation.hpp"

#include <algorithm>
#include <map>

namespace cliffconn {

namespace {

SparseVector from_map(const std::map<std::size_t, Rational>& m) {
  SparseVector out;
  out.reserve(m.size());
  for (const auto& [i, v] : m) {
    if (sgn(v) != 0) out.emplace_back(i, v);
  }
  return out;
}

// Equations [B, G] = 0 in the unknowns vec(B), index r*N + c.
void add_commutation_rows(RowEchelon& system, const RationalMatrix& g) {
  const std::size_t n = g.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::map<std::size_t, Rational> row;
      for (std::size_t x = 0; x < n; ++x) {
        if (sgn(g(x, c)) != 0) row[r * n + x] += g(x, c);
        if (sgn(g(r, x)) != 0) row[x * n + c] -= g(r, x);
      }
      SparseVector sparse = from_map(row);
      if (!sparse.empty()) system.insert(std::move(sparse));
    }
  }
}

// The generator affinors: the images of the grade-1 blades.
std::vector<RationalMatrix> generator_affinors(const GroupSpec& spec,
                                               const std::vector<RationalMatrix>& affinors) {
  const BladeBasis basis(spec.sig());
  std::vector<RationalMatrix> out;
  for (int g = 0; g < spec.sig().generators(); ++g) out.push_back(affinors[basis.generator_index(g)]);
  return out;
}

// Sign s with I F I = s F, or 0 if neither sign matches.
int conjugation_sign(const RationalMatrix& i, const RationalMatrix& f) {
  const RationalMatrix p = i * f * i;
  if (p == f) return 1;
  if (p == -f) return -1;
  return 0;
}

using SparseKron = std::map<std::pair<std::size_t, std::size_t>, Rational>;

// acc += factor * (a (x) b) for square a, b of size n.
void add_kron(SparseKron& acc, int factor, const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  for (std::size_t r1 = 0; r1 < n; ++r1) {
    for (std::size_t c1 = 0; c1 < n; ++c1) {
      if (sgn(a(r1, c1)) == 0) continue;
      for (std::size_t r2 = 0; r2 < n; ++r2) {
        for (std::size_t c2 = 0; c2 < n; ++c2) {
          if (sgn(b(r2, c2)) == 0) continue;
          Rational v = a(r1, c1) * b(r2, c2);
          if (factor < 0) v = -v;
          auto key = std::make_pair(r1 * n + r2, c1 * n + c2);
          auto [it, inserted] = acc.try_emplace(key, v);
          if (!inserted) {
            it->second += v;
            if (sgn(it->second) == 0) acc.erase(it);
          }
        }
      }
    }
  }
}

}  // namespace

std::string to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::Clifford: return "clifford";
    case Flavor::Cliffordian: return "cliffordian";
    case Flavor::FullLinear: return "full";
  }
  return "?";
}

Flavor flavor_from_string(const std::string& name) {
  if (name == "clifford") return Flavor::Clifford;
  if (name == "cliffordian") return Flavor::Cliffordian;
  if (name == "full") return Flavor::FullLinear;
  throw InvalidInput("unknown flavor: " + name);
}

std::string to_string(AffinorSide side) { return side == AffinorSide::Right ? "right" : "left"; }

AffinorSide side_from_string(const std::string& name) {
  if (name == "right") return AffinorSide::Right;
  if (name == "left") return AffinorSide::Left;
  throw InvalidInput("unknown affinor side: " + name);
}

GroupSpec::GroupSpec(Signature sig, int m, Flavor flavor, AffinorSide side)
    : sig_(sig), m_(m), flavor_(flavor), side_(side) {
  if (m < 1) throw InvalidInput("m must be positive");
  if (flavor == Flavor::Clifford && sig.generators() == 0) {
    throw InvalidInput("the Clifford flavor needs at least one generator");
  }
  if (flavor == Flavor::FullLinear && sig.generators() != 0) {
    throw InvalidInput("the full linear control case is defined on Cl(0,0) only");
  }
}

std::vector<RationalMatrix> structure_affinors(const GroupSpec& spec) {
  const RepSet rep = spec.side() == AffinorSide::Right ? right_regular_rep(spec.sig())
                                                       : left_regular_rep(spec.sig());
  std::vector<RationalMatrix> out;
  out.reserve(rep.matrices.size());
  for (const auto& f : rep.matrices) out.push_back(block_diagonal(f, spec.m()));
  return out;
}

LieAlgebraBasis lie_algebra_basis(const GroupSpec& spec) {
  const std::size_t n = spec.model_dimension();
  const std::vector<RationalMatrix> affinors = structure_affinors(spec);

  RowEchelon system(n * n);
  for (const auto& g : generator_affinors(spec, affinors)) add_commutation_rows(system, g);

  LieAlgebraBasis out{spec, {}};
  RowEchelon span(n * n);
  for (const auto& v : system.nullspace()) {
    span.insert(v);
    out.basis.push_back(from_flat(n, n, to_dense(v, n * n)));
  }
  if (spec.flavor() == Flavor::Cliffordian) {
    // gl(1, O) overlaps gl(m, O) in the centre of O; keep only new directions.
    for (const auto& f : affinors) {
      if (span.insert_dense(f.entries())) out.basis.push_back(f);
    }
  }
  return out;
}

std::vector<SparseVector> membership_constraints(const LieAlgebraBasis& g) {
  const std::size_t n = g.spec.model_dimension();
  RowEchelon span(n * n);
  for (const auto& b : g.basis) span.insert_dense(b.entries());
  return span.nullspace();
}

namespace {

// Unknowns t_{abc} with a <= b, index pair(a,b)*N + c.
class SymmetricIndex {
 public:
  explicit SymmetricIndex(std::size_t n) : n_(n), pair_(n * n) {
    std::size_t next = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        pair_[a * n + b] = next;
        pair_[b * n + a] = next;
        ++next;
      }
    }
    pairs_ = next;
  }

  std::size_t unknowns() const { return pairs_ * n_; }
  std::size_t operator()(std::size_t a, std::size_t b, std::size_t c) const { return pair_[a * n_ + b] * n_ + c; }

 private:
  std::size_t n_;
  std::vector<std::size_t> pair_;
  std::size_t pairs_ = 0;
};

std::vector<BilinearMap> prolongation_from_constraints(std::size_t n, const std::vector<SparseVector>& constraints) {
  const SymmetricIndex index(n);
  RowEchelon system(index.unknowns());
  for (std::size_t slot = 0; slot < n; ++slot) {
    for (const auto& w : constraints) {
      // <w, vec(T_slot)> with (T_slot)_{cb} = t(e_b, e_slot)_c.
      SparseVector row;
      row.reserve(w.size());
      for (const auto& [flat, v] : w) {
        const std::size_t c = flat / n;
        const std::size_t b = flat % n;
        row.emplace_back(index(b, slot, c), v);
      }
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      system.insert(std::move(row));
    }
  }

  std::vector<BilinearMap> out;
  for (const auto& v : system.nullspace()) {
    const std::vector<Rational> dense = to_dense(v, index.unknowns());
    BilinearMap t(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) t(a, b, c) = dense[index(a, b, c)];
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<BilinearMap> first_prolongation(const LieAlgebraBasis& g) {
  return prolongation_from_constraints(g.spec.model_dimension(), membership_constraints(g));
}

SignVector epsilon_signs(const RepSet& rep) {
  const BladeBasis basis(rep.sig);
  const std::size_t k = basis.size();
  const auto names = basis.names();
  if (rep.matrices.size() != k) throw DimensionMismatch("representation size does not match signature");

  SignVector eps{std::vector<int>(k, 0)};
  eps.signs[0] = 1;
  // Canonical order is by ascending grade, so every lower factor is known.
  for (std::size_t l = 1; l < k; ++l) {
    const Blade b = basis[l];
    int value = 0;
    for (int g : b.generators()) {
      const std::size_t lower = basis.index_of(Blade{b.mask & ~generator_blade(g).mask});
      const int s = conjugation_sign(rep.matrices[basis.generator_index(g)], rep.matrices[l]);
      if (s == 0) {
        throw InconsistentPropagation("I F I is not +-F for F = " + names[l] + ", I = " +
                                      names[basis.generator_index(g)]);
      }
      const int candidate = s * eps.signs[lower];
      if (value == 0) {
        value = candidate;
      } else if (value != candidate) {
        throw InconsistentPropagation("factorisations of " + names[l] + " force opposite signs");
      }
    }
    eps.signs[l] = value;
  }
  return eps;
}

bool IdentityReport::exact() const {
  return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.exact; });
}

bool IdentityReport::hull() const {
  return std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.hull; });
}

IdentityReport check_sa_identity(const RepSet& rep, const SignVector& eps) {
  const BladeBasis basis(rep.sig);
  const std::size_t k = rep.matrices.size();
  if (eps.size() != k) throw DimensionMismatch("sign vector length does not match representation");
  const std::size_t n = k == 0 ? 0 : rep.matrices[0].rows();

  RowEchelon hull_span(n * n);
  for (const auto& f : rep.matrices) hull_span.insert_dense(f.entries());

  IdentityReport report;
  for (int g = 0; g < rep.sig.generators(); ++g) {
    const RationalMatrix& gen = rep.matrices[basis.generator_index(g)];
    SparseKron defect;
    for (std::size_t i = 0; i < k; ++i) {
      add_kron(defect, eps[i], rep.matrices[i] * gen, rep.matrices[i]);
      add_kron(defect, -eps[i], rep.matrices[i], gen * rep.matrices[i]);
    }

    // Defect(A, X, Y)_z = sum A_p X_x Y_q K[(p,z),(x,q)]. Fixing A = e_p and
    // Y = e_q leaves the matrix W_pq(z, x) acting on X.
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> slices;
    for (const auto& [key, v] : defect) {
      const std::size_t p = key.first / n;
      const std::size_t z = key.first % n;
      const std::size_t x = key.second / n;
      const std::size_t q = key.second % n;
      slices[{p, q}][z * n + x] = v;
    }
    bool hull = true;
    for (const auto& [pq, entries] : slices) {
      if (!hull_span.contains(from_map(entries))) {
        hull = false;
        break;
      }
    }
    report.generators.push_back({g, defect.empty(), hull});
  }
  return report;
}

BilinearMap s_xi_element(std::span<const RationalMatrix> affinors, const SignVector& eps, const OneForm& xi) {
  if (affinors.size() != eps.size()) throw DimensionMismatch("sign vector length does not match affinors");
  const std::size_t n = xi.dim();
  BilinearMap t(n);
  for (std::size_t i = 0; i < affinors.size(); ++i) {
    const RationalMatrix& f = affinors[i];
    if (f.rows() != n || f.cols() != n) throw DimensionMismatch("one-form length does not match affinors");
    // u[a] = xi(F_i e_a)
    std::vector<Rational> u(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t d = 0; d < n; ++d) {
        if (sgn(f(d, a)) != 0 && sgn(xi.components[d]) != 0) u[a] += xi.components[d] * f(d, a);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const bool ua = sgn(u[a]) != 0;
        const bool ub = sgn(u[b]) != 0;
        if (!ua && !ub) continue;
        for (std::size_t c = 0; c < n; ++c) {
          Rational v;
          if (ua && sgn(f(c, b)) != 0) v += u[a] * f(c, b);
          if (ub && sgn(f(c, a)) != 0) v += u[b] * f(c, a);
          if (sgn(v) == 0) continue;
          if (eps[i] < 0) v = -v;
          t(a, b, c) += v;
        }
      }
    }
  }
  return t;
}

BilinearMap s_xi_element(const GroupSpec& spec, const SignVector& eps, const OneForm& xi) {
  if (xi.dim() != spec.model_dimension()) throw DimensionMismatch("one-form length must be k*m");
  const auto affinors = structure_affinors(spec);
  return s_xi_element(affinors, eps, xi);
}

SignVector structure_signs(const GroupSpec& spec) {
  return epsilon_signs(spec.side() == AffinorSide::Right ? right_regular_rep(spec.sig())
                                                         : left_regular_rep(spec.sig()));
}

Prolongation::Prolongation(GroupSpec spec)
    : affinors_(structure_affinors(spec)),
      algebra_(lie_algebra_basis(spec)),
      constraints_(membership_constraints(algebra_)),
      basis_(prolongation_from_constraints(spec.model_dimension(), constraints_)),
      span_(spec.model_dimension() * spec.model_dimension() * spec.model_dimension()) {
  for (const auto& t : basis_) span_.insert_dense(t.coefficients());
}

bool Prolongation::in_algebra(const RationalMatrix& b) const {
  const std::vector<Rational> flat = flatten(b);
  for (const auto& w : constraints_) {
    Rational dot;
    for (const auto& [i, v] : w) {
      if (sgn(flat[i]) != 0) dot += v * flat[i];
    }
    if (sgn(dot) != 0) return false;
  }
  return true;
}

bool Prolongation::contains(const BilinearMap& t) const {
  if (t.dim() != model_dimension()) throw DimensionMismatch("bilinear map dimension");
  return span_.contains(to_sparse(t.coefficients()));
}

std::optional<std::vector<Rational>> Prolongation::coordinates(const BilinearMap& t) const {
  if (t.dim() != model_dimension()) throw DimensionMismatch("bilinear map dimension");
  const std::size_t len = t.coefficients().size();
  RationalMatrix a(len, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const auto coeffs = basis_[j].coefficients();
    for (std::size_t i = 0; i < len; ++i) a(i, j) = coeffs[i];
  }
  return solve(a, t.coefficients());
}

SxiMembership verify_sxi_membership(const Prolongation& p, const SignVector& eps, const OneForm& xi) {
  const BilinearMap s = s_xi_element(p.affinors(), eps, xi);
  SxiMembership out;
  out.symmetric = s.is_symmetric();
  out.slots_in_algebra = true;
  for (std::size_t a = 0; a < s.dim() && out.slots_in_algebra; ++a) {
    out.slots_in_algebra = p.in_algebra(s.matrix_fixing_first(a));
  }
  out.in_prolongation = p.contains(s);
  return out;
}

SxiMembership verify_sxi_membership(const GroupSpec& spec, const OneForm& xi) {
  if (spec.flavor() != Flavor::Cliffordian) throw InvalidInput("S^xi membership is defined for the Cliffordian flavor");
  const Prolongation p(spec);
  return verify_sxi_membership(p, structure_signs(spec), xi);
}

std::size_t sxi_rank(const GroupSpec& spec, const SignVector& eps) {
  const auto affinors = structure_affinors(spec);
  const std::size_t n = spec.model_dimension();
  RowEchelon e(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    e.insert_dense(s_xi_element(affinors, eps, OneForm::basis(n, a)).coefficients());
  }
  return e.rank();
}

}  // namespace cliffconn

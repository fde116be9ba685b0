#include "cliffconn/representation.hpp"

#include <random>

#include "cliffconn/echelon.hpp"

namespace cliffconn {

namespace {

using SparseRows = std::vector<SparseVector>;

SparseRows sparse_rows(const RationalMatrix& m) {
  SparseRows out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = to_sparse(m.row(r));
  return out;
}

SparseRows sparse_mul(const SparseRows& a, const SparseRows& b) {
  SparseRows out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    SparseVector acc;
    for (const auto& [x, v] : a[r]) acc = axpy(acc, -v, b[x]);
    out[r] = std::move(acc);
  }
  return out;
}

bool sparse_equals(const SparseRows& a, const SparseRows& b, int sign) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != b[r].size()) return false;
    for (std::size_t i = 0; i < a[r].size(); ++i) {
      if (a[r][i].first != b[r][i].first) return false;
      if (sign > 0 ? a[r][i].second != b[r][i].second : a[r][i].second != -b[r][i].second) return false;
    }
  }
  return true;
}

bool sparse_sum_is_zero(const SparseRows& a, const SparseRows& b) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (!axpy(a[r], -1, b[r]).empty()) return false;
  }
  return true;
}

RepSet regular_rep(const Signature& sig, RepKind kind) {
  const BladeBasis basis(sig);
  const std::size_t k = basis.size();
  RepSet rep{sig, kind, {}};
  rep.matrices.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    RationalMatrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      const SignedBlade p = kind == RepKind::RightRegular ? blade_mul(basis[j], basis[i], sig)
                                                          : blade_mul(basis[i], basis[j], sig);
      m(basis.index_of(p.blade), j) = p.sign;
    }
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

// Generator images of the full construction, innermost factor first.
struct GeneratorImages {
  std::vector<RationalMatrix> matrices;
  std::size_t size = 1;
};

GeneratorImages periodicity_generators(const DecompositionRecipe& recipe) {
  GeneratorImages images;
  for (auto it = recipe.factors.rbegin(); it != recipe.factors.rend(); ++it) {
    const std::vector<RationalMatrix> outer = base_generators(*it);
    const std::size_t d = it->dimension();
    if (images.matrices.empty()) {
      images.matrices = outer;
      images.size = d;
      continue;
    }
    RationalMatrix volume = RationalMatrix::identity(images.size);
    for (const auto& g : images.matrices) volume = volume * g;
    std::vector<RationalMatrix> next;
    const RationalMatrix id = RationalMatrix::identity(d);
    for (const auto& g : images.matrices) next.push_back(kron(id, g));
    for (const auto& a : outer) next.push_back(kron(a, volume));
    images.matrices = std::move(next);
    images.size *= d;
  }
  return images;
}

}  // namespace

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::LeftRegular: return "left";
    case RepKind::RightRegular: return "right";
    case RepKind::Periodicity: return "periodicity";
  }
  return "?";
}

RepKind rep_kind_from_string(const std::string& name) {
  if (name == "left") return RepKind::LeftRegular;
  if (name == "right") return RepKind::RightRegular;
  if (name == "periodicity") return RepKind::Periodicity;
  throw InvalidInput("unknown representation kind: " + name);
}

const RationalMatrix& RepSet::generator(int g) const {
  return matrices.at(BladeBasis(sig).generator_index(g));
}

DecompositionRecipe classify(const Signature& sig) {
  if (sig.generators() == 0) throw InvalidInput("scalar algebra Cl(0,0) has no decomposition");
  DecompositionRecipe recipe{sig, 'c', {}};
  const int s = sig.s();
  const int t = sig.t();
  const int d = s > t ? s - t : t - s;
  const int p = d / 4;
  const int r = d % 4;
  if (s > t) {
    recipe.case_label = 'a';
    switch (r) {
      case 1: recipe.factors = {Signature(1, 0)}; break;
      case 2: recipe.factors = {Signature(2, 0)}; break;
      case 3: recipe.factors = {Signature(0, 1), Signature(2, 0)}; break;
      default: break;
    }
    for (int i = 0; i < p; ++i) {
      recipe.factors.push_back(Signature(0, 2));
      recipe.factors.push_back(Signature(2, 0));
    }
  } else if (s < t) {
    recipe.case_label = 'b';
    switch (r) {
      case 1: recipe.factors = {Signature(0, 1)}; break;
      case 2: recipe.factors = {Signature(0, 2)}; break;
      case 3: recipe.factors = {Signature(1, 0), Signature(0, 2)}; break;
      default: break;
    }
    for (int i = 0; i < p; ++i) {
      recipe.factors.push_back(Signature(2, 0));
      recipe.factors.push_back(Signature(0, 2));
    }
  }
  for (int i = 0; i < std::min(s, t); ++i) recipe.factors.push_back(Signature(1, 1));
  return recipe;
}

std::vector<RationalMatrix> base_generators(const Signature& base) {
  if (base == Signature(1, 0)) return {RationalMatrix::from_rows({{0, 1}, {1, 0}})};
  if (base == Signature(0, 1)) return {RationalMatrix::from_rows({{0, 1}, {-1, 0}})};
  if (base == Signature(2, 0)) {
    return {RationalMatrix::from_rows({{0, -1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
            RationalMatrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}})};
  }
  if (base == Signature(0, 2) || base == Signature(1, 1)) {
    const RepSet rep = left_regular_rep(base);
    return {rep.generator(0), rep.generator(1)};
  }
  throw InvalidInput("not a base algebra of the periodicity construction: " + base.label());
}

RepSet left_regular_rep(const Signature& sig) { return regular_rep(sig, RepKind::LeftRegular); }

RepSet right_regular_rep(const Signature& sig) { return regular_rep(sig, RepKind::RightRegular); }

RepSet periodicity_rep(const Signature& sig) {
  const GeneratorImages images = periodicity_generators(classify(sig));

  // Relabel: complex units (square -E) become I_1.., product units J_1..,
  // each in order of appearance.
  const RationalMatrix id = RationalMatrix::identity(images.size);
  std::vector<RationalMatrix> ordered(sig.generators());
  int next_i = 0;
  int next_j = sig.t();
  for (const auto& g : images.matrices) {
    const RationalMatrix sq = g * g;
    if (sq == -id) {
      if (next_i >= sig.t()) throw Error("periodicity construction produced too many complex units");
      ordered[next_i++] = g;
    } else if (sq == id) {
      if (next_j >= sig.generators()) throw Error("periodicity construction produced too many product units");
      ordered[next_j++] = g;
    } else {
      throw Error("periodicity generator does not square to +-E");
    }
  }

  const BladeBasis basis(sig);
  RepSet rep{sig, RepKind::Periodicity, {}};
  rep.matrices.reserve(basis.size());
  for (Blade b : basis.blades()) {
    RationalMatrix m = id;
    for (int g : b.generators()) m = m * ordered[g];
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

std::vector<RationalMatrix> periodicity_tensor_basis(const Signature& sig) {
  const DecompositionRecipe recipe = classify(sig);
  std::vector<RationalMatrix> out{RationalMatrix::identity(1)};
  for (const Signature& factor : recipe.factors) {
    const std::vector<RationalMatrix> gens = base_generators(factor);
    const BladeBasis fb(factor);
    std::vector<RationalMatrix> factor_basis;
    for (Blade b : fb.blades()) {
      RationalMatrix m = RationalMatrix::identity(factor.dimension());
      for (int g : b.generators()) m = m * gens[g];
      factor_basis.push_back(std::move(m));
    }
    std::vector<RationalMatrix> next;
    for (const auto& a : out) {
      for (const auto& f : factor_basis) next.push_back(kron(a, f));
    }
    out = std::move(next);
  }
  return out;
}

RepSet make_rep(const Signature& sig, RepKind kind) {
  switch (kind) {
    case RepKind::LeftRegular: return left_regular_rep(sig);
    case RepKind::RightRegular: return right_regular_rep(sig);
    case RepKind::Periodicity: return periodicity_rep(sig);
  }
  throw InvalidInput("unknown representation kind");
}

VerificationReport verify_relations(const RepSet& rep) {
  VerificationReport report;
  const BladeBasis basis(rep.sig);
  const std::size_t k = basis.size();
  const auto names = basis.names();

  if (rep.matrices.size() != k) {
    report.violations.push_back({Violation::Kind::Shape, 0, 0,
                                 "expected " + std::to_string(k) + " matrices, got " +
                                     std::to_string(rep.matrices.size())});
    return report;
  }
  const std::size_t dim = rep.matrices[0].rows();
  for (std::size_t i = 0; i < k; ++i) {
    if (rep.matrices[i].rows() != dim || rep.matrices[i].cols() != dim) {
      report.violations.push_back({Violation::Kind::Shape, i, i, names[i] + " is not " +
                                                                     std::to_string(dim) + "x" +
                                                                     std::to_string(dim)});
    }
  }
  if (!report.ok()) return report;

  std::vector<SparseRows> sparse;
  sparse.reserve(k);
  for (const auto& m : rep.matrices) sparse.push_back(sparse_rows(m));
  const SparseRows identity = sparse_rows(RationalMatrix::identity(dim));

  if (!sparse_equals(sparse[0], identity, 1)) {
    report.violations.push_back({Violation::Kind::Identity, 0, 0, "F_1 is not the identity"});
  }

  const int n = rep.sig.generators();
  for (int g = 0; g < n; ++g) {
    const std::size_t gi = basis.generator_index(g);
    const SparseRows sq = sparse_mul(sparse[gi], sparse[gi]);
    if (!sparse_equals(sq, identity, rep.sig.square(g))) {
      report.violations.push_back({Violation::Kind::Square, gi, gi,
                                   names[gi] + "^2 != " + (rep.sig.square(g) > 0 ? "+E" : "-E")});
    }
  }
  for (int g = 0; g < n; ++g) {
    for (int h = g + 1; h < n; ++h) {
      const std::size_t gi = basis.generator_index(g);
      const std::size_t hi = basis.generator_index(h);
      if (!sparse_sum_is_zero(sparse_mul(sparse[gi], sparse[hi]), sparse_mul(sparse[hi], sparse[gi]))) {
        report.violations.push_back({Violation::Kind::Anticommutation, gi, hi,
                                     names[gi] + names[hi] + " != -" + names[hi] + names[gi]});
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const SignedBlade p = rep.kind == RepKind::RightRegular ? blade_mul(basis[j], basis[i], rep.sig)
                                                              : blade_mul(basis[i], basis[j], rep.sig);
      const std::size_t l = basis.index_of(p.blade);
      if (!sparse_equals(sparse_mul(sparse[i], sparse[j]), sparse[l], p.sign)) {
        report.violations.push_back({Violation::Kind::Product, i, j,
                                     "F(" + names[i] + ") F(" + names[j] + ") != " +
                                         (p.sign > 0 ? "+" : "-") + "F(" + names[l] + ")"});
      }
    }
  }
  return report;
}

RationalMatrix generic_element(const RepSet& rep, std::span<const Rational> coeffs) {
  if (coeffs.size() != rep.matrices.size()) {
    throw DimensionMismatch("generic_element: expected " + std::to_string(rep.matrices.size()) +
                            " coefficients, got " + std::to_string(coeffs.size()));
  }
  if (rep.matrices.empty()) return {};
  RationalMatrix out(rep.matrices[0].rows(), rep.matrices[0].cols());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) out += coeffs[i] * rep.matrices[i];
  }
  return out;
}

bool monomial_check(const RepSet& rep) {
  if (rep.matrices.empty()) return false;
  const std::size_t n = rep.matrices[0].rows();
  if (rep.matrices.size() != n) return false;
  std::vector<std::vector<bool>> taken(n, std::vector<bool>(n, false));  // [col][row]
  for (const auto& m : rep.matrices) {
    if (m.rows() != n || m.cols() != n) return false;
    std::vector<int> row_count(n, 0);
    std::vector<int> col_count(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(m(r, c)) == 0) continue;
        ++row_count[r];
        ++col_count[c];
        if (taken[c][r]) return false;
        taken[c][r] = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (row_count[i] != 1 || col_count[i] != 1) return false;
    }
  }
  return true;
}

SpanWitness span_witness(const RepSet& rep, std::uint64_t seed) {
  const std::size_t k = rep.matrices.size();
  if (k == 0) throw NoWitness("empty representation");
  const std::size_t n = rep.matrices[0].rows();

  auto try_vector = [&](const std::vector<Rational>& x, std::string source) -> std::optional<SpanWitness> {
    RationalMatrix cert(n, k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto col = mat_vec(rep.matrices[i], x);
      for (std::size_t r = 0; r < n; ++r) cert(r, i) = col[r];
    }
    const std::size_t rk = rank(cert);
    if (rk != k) return std::nullopt;
    return SpanWitness{x, rk, std::move(cert), std::move(source)};
  };

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    if (auto w = try_vector(e, "e" + std::to_string(j + 1))) return *w;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Rational> x(n);
    for (auto& v : x) v = static_cast<long>(rng() % 7) - 3;
    if (auto w = try_vector(x, "random")) return *w;
  }
  throw NoWitness("no vector X with rank <F_i X> = " + std::to_string(k) + " found");
}

}  // namespace cliffconn

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hym/compound.hpp"
#include "hym/det.hpp"
#include "hym/error.hpp"
#include "hym/hypermatrix.hpp"
#include "hym/stp.hpp"

namespace hym {

/// Carrier description of GL(n^s): hypersquares n x mids x n with Det != 0.
struct GlSignature {
  std::size_t n = 1;
  Dims mids;

  Shape shape() const { return make_shape(n, mids, n); }
  std::size_t slice_count() const { return product(mids); }
};

template <class T>
bool gl_contains(const GlSignature& sig, const Hypermatrix<T>& a) {
  return a.shape() == sig.shape() && is_nonsingular(a);
}

/// T^{-1} ⊛ A ⊛ T; slicewise T_i^{-1} A_i T_i.
template <class T>
Hypermatrix<T> similar_transform(const Hypermatrix<T>& t, const Hypermatrix<T>& a) {
  detail::require_hypersquare(a.shape());
  if (!(t.shape() == a.shape()))
    fail(Errc::ShapeMismatch, "similarity needs T and A of the same shape");
  if (!is_nonsingular(t)) fail(Errc::Singular, "similarity transform T is singular");
  return stph(stph(inverse(t), a), t);
}

/// lambda (one scalar per slice) with eigenvector hypermatrix X of shape
/// n x mids x 1.
template <class T>
struct EigenPair {
  std::vector<T> lambdas;
  Hypermatrix<T> x;
};

/// A ⊛ X == lambda ⊛ X, with lambda acting slicewise: A_i X_i == lambda_i X_i.
template <class T>
bool verify_eigenpair(const Hypermatrix<T>& a, const EigenPair<T>& p) {
  detail::require_hypersquare(a.shape());
  const std::size_t n = a.shape().front();
  const Dims mids = a.order() >= 3 ? a.shape().mids() : Dims{};
  if (!(p.x.shape() == make_shape(n, mids, 1)))
    fail(Errc::ShapeMismatch, "eigenvector must have shape n x mids x 1");
  const std::size_t s = a.slice_count();
  if (p.lambdas.size() != s)
    fail(Errc::ShapeMismatch, "need one eigenvalue per slice");
  for (std::size_t i = 0; i < s; ++i) {
    const Matrix<T> xi = p.x.slice(i);
    if (std::all_of(xi.data().begin(), xi.data().end(),
                    [](const T& v) { return FieldTraits<T>::is_zero(v); }))
      fail(Errc::ZeroSliceVector, "eigenvector slice " + std::to_string(i + 1) + " is zero");
  }
  const Hypermatrix<T> ax = stph(a, p.x);
  for (std::size_t i = 0; i < s; ++i) {
    if (!(ax.slice(i) == p.lambdas[i] * p.x.slice(i))) return false;
  }
  return true;
}

/// Roots of the characteristic polynomial of a real n x n matrix, n <= 3, in
/// closed form followed by a Newton polish.
std::vector<std::complex<double>> eig_small(const Matrix<double>& a);

enum class AxiomStatus { Pass, Fail };

struct AxiomResult {
  std::string axiom;
  AxiomStatus status = AxiomStatus::Pass;
  std::size_t checks = 0;
  /// Sample indices (0-based) of the first violation.
  std::optional<std::vector<std::size_t>> witness;
};

struct GroupReport {
  GlSignature signature;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> axioms;

  bool passed() const {
    for (const auto& a : axioms)
      if (a.status == AxiomStatus::Fail) return false;
    return true;
  }
};

/// Sample-based verification of the group axioms of GL(sig): closure, two-sided
/// identity J_n^s, two-sided inverses and associativity over `triples` seeded
/// random triples drawn from `samples`. Throws NotMember if a sample is not in
/// GL(sig).
template <class T>
GroupReport check_group_axioms(const GlSignature& sig, const std::vector<Hypermatrix<T>>& samples,
                               std::uint64_t seed, std::size_t triples = 100) {
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (!gl_contains(sig, samples[i]))
      fail(Errc::NotMember, "sample " + std::to_string(i) + " is not in GL(" +
                                std::to_string(sig.n) + "^s)");
  GroupReport report{sig, seed, {}};
  const Hypermatrix<T> j = identity_hypersquare<T>(sig.n, sig.mids);

  auto record = [](AxiomResult& r, bool ok, std::vector<std::size_t> w) {
    ++r.checks;
    if (!ok && r.status == AxiomStatus::Pass) {
      r.status = AxiomStatus::Fail;
      r.witness = std::move(w);
    }
  };

  AxiomResult identity, inverse_law, closure, assoc;
  identity.axiom = "identity";
  inverse_law.axiom = "inverse";
  closure.axiom = "closure";
  assoc.axiom = "associativity";
  record(identity, gl_contains(sig, j), {});
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& a = samples[i];
    record(identity, stph(a, j) == a && stph(j, a) == a, {i});
    const Hypermatrix<T> ai = inverse(a);
    record(inverse_law, stph(a, ai) == j && stph(ai, a) == j, {i});
  }

  if (!samples.empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
    for (std::size_t t = 0; t < triples; ++t) {
      const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
      const auto& a = samples[x];
      const auto& b = samples[y];
      const auto& c = samples[z];
      const Hypermatrix<T> ab = stph(a, b);
      record(closure, gl_contains(sig, ab), {x, y});
      record(assoc, stph(ab, c) == stph(a, stph(b, c)), {x, y, z});
    }
  }
  report.axioms = {closure, identity, inverse_law, assoc};
  return report;
}

/// For B = T^{-1} ⊛ A ⊛ T, checks that the witness W = T^(k) carries both
/// compounds across: W^{-1} ⊛ A^(k) ⊛ W == B^(k) and W^{-1} ⊛ A^[k] ⊛ W == B^[k].
template <class T>
bool compounds_preserve_similarity(const Hypermatrix<T>& a, const Hypermatrix<T>& b,
                                   const Hypermatrix<T>& t, std::size_t k) {
  if (!is_nonsingular(t)) fail(Errc::Singular, "similarity transform T is singular");
  if (!(a.shape() == b.shape()) || !(a.shape() == t.shape()))
    fail(Errc::ShapeMismatch, "A, B and T must share one hypersquare shape");
  const Hypermatrix<T> w = mult_compound_hyper(t, k);
  const Hypermatrix<T> w_inv = inverse(w);
  const bool mult = stph(stph(w_inv, mult_compound_hyper(a, k)), w) == mult_compound_hyper(b, k);
  const bool add = stph(stph(w_inv, add_compound_hyper(a, k)), w) == add_compound_hyper(b, k);
  return mult && add;
}

}  // namespace hym

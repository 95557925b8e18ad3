#include "hym/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hym/algebra.hpp"
#include "hym/compound.hpp"
#include "hym/det.hpp"
#include "hym/io.hpp"
#include "hym/random.hpp"
#include "hym/stp.hpp"

namespace hym::verify {

namespace {

using json = nlohmann::json;
using Q = Rational;
using HM = Hypermatrix<Q>;
using random::Rng;

// A trial returns nullopt on success or a JSON description of the failure.
using Trial = std::function<std::optional<json>(Rng&, std::uint64_t trial)>;

struct Budget {
  std::size_t max_dim;
  std::size_t max_mid_volume;
};

Budget size_budget(const Options& o) {
  Budget b{4, 4};
  if (!o.dims.empty()) b.max_dim = std::max<std::size_t>(1, o.dims[0]);
  if (o.dims.size() > 1) b.max_mid_volume = std::max<std::size_t>(1, o.dims[1]);
  return b;
}

json operands(std::initializer_list<const HM*> xs) {
  json out = json::array();
  for (const HM* x : xs) out.push_back(io::to_json(*x));
  return out;
}

std::optional<json> assoc_trial(Rng& rng, Budget b) {
  const HM a = random::hypermatrix(rng, random::mixed_shape(rng, b.max_dim, b.max_mid_volume));
  const HM bb = random::hypermatrix(rng, random::mixed_shape(rng, b.max_dim, b.max_mid_volume));
  const HM c = random::hypermatrix(rng, random::mixed_shape(rng, b.max_dim, b.max_mid_volume));
  if (stph(a, stph(bb, c)) == stph(stph(a, bb), c)) return std::nullopt;
  return json{{"law", "A*(B*C) == (A*B)*C"}, {"operands", operands({&a, &bb, &c})}};
}

std::optional<json> bilinear_trial(Rng& rng, Budget b) {
  const HM a = random::hypermatrix(rng, random::mixed_shape(rng, b.max_dim, b.max_mid_volume));
  const Shape s = random::mixed_shape(rng, b.max_dim, b.max_mid_volume);
  const HM x = random::hypermatrix(rng, s);
  const HM y = random::hypermatrix(rng, s);
  const Q alpha = random::rational(rng), beta = random::rational(rng);
  const HM comb = alpha * x + beta * y;
  const bool right = stph(a, comb) == alpha * stph(a, x) + beta * stph(a, y);
  const bool left = stph(comb, a) == alpha * stph(x, a) + beta * stph(y, a);
  if (left && right) return std::nullopt;
  return json{{"law", right ? "left linearity" : "right linearity"},
              {"alpha", alpha.get_str()},
              {"beta", beta.get_str()},
              {"operands", operands({&a, &x, &y})}};
}

std::optional<json> cauchy_binet_trial(Rng& rng, Budget b) {
  const std::size_t n = random::uniform(rng, 1, b.max_dim);
  const std::size_t m = random::uniform(rng, 1, b.max_dim);
  const std::size_t p = random::uniform(rng, 1, b.max_dim);
  const Matrix<Q> ma = random::matrix(rng, n, m), mb = random::matrix(rng, m, p);
  const Matrix<Q> prod = ma * mb;
  for (std::size_t k = 1; k <= std::min({n, m, p}); ++k) {
    if (!(mult_compound_matrix(prod, k) == mult_compound_matrix(ma, k) * mult_compound_matrix(mb, k))) {
      const HM ha = HM::from_matrix(ma), hb = HM::from_matrix(mb);
      return json{{"law", "(AB)^(k) == A^(k) B^(k)"}, {"k", k}, {"operands", operands({&ha, &hb})}};
    }
  }
  const Dims mids = random::mids(rng, b.max_mid_volume);
  const HM a = random::hypermatrix(rng, make_shape(n, mids, m));
  const HM bb = random::hypermatrix(rng, make_shape(m, mids, p));
  const HM ab = stph(a, bb);
  for (std::size_t k = 1; k <= std::min({n, m, p}); ++k) {
    if (!(mult_compound_hyper(ab, k) == stph(mult_compound_hyper(a, k), mult_compound_hyper(bb, k))))
      return json{{"law", "(A*B)^(k) == A^(k) * B^(k)"}, {"k", k}, {"operands", operands({&a, &bb})}};
  }
  return std::nullopt;
}

std::optional<json> inverse_law_trial(Rng& rng, Budget b) {
  const std::size_t n = random::uniform(rng, 1, b.max_dim);
  const std::size_t p = random::uniform(rng, 1, b.max_dim);
  const Matrix<Q> ma = random::invertible_matrix(rng, n), mb = random::invertible_matrix(rng, p);
  if (!(inverse(stp_matrix(ma, mb)) == stp_matrix(inverse(mb), inverse(ma)))) {
    const HM ha = HM::from_matrix(ma), hb = HM::from_matrix(mb);
    return json{{"law", "(A|x B)^-1 == B^-1 |x A^-1"}, {"operands", operands({&ha, &hb})}};
  }
  const HM a = random::nonsingular(rng, n, random::mids(rng, b.max_mid_volume));
  const HM bb = random::nonsingular(rng, p, random::mids(rng, b.max_mid_volume));
  if (stph_inverse_law_check(a, bb)) return std::nullopt;
  return json{{"law", "(A*B)^-1 == B^-1 * A^-1"}, {"operands", operands({&a, &bb})}};
}

std::optional<json> group_trial(Rng& rng, const GlSignature& sig, std::uint64_t seed,
                                std::map<std::string, std::size_t>& checks) {
  std::vector<HM> samples;
  for (int i = 0; i < 3; ++i) samples.push_back(random::nonsingular(rng, sig.n, sig.mids));
  const GroupReport report = check_group_axioms(sig, samples, seed, 1);
  for (const auto& a : report.axioms) checks[a.axiom] += a.checks;
  if (report.passed()) return std::nullopt;
  return json{{"report", io::to_json(report)},
              {"operands", operands({&samples[0], &samples[1], &samples[2]})}};
}

std::optional<json> compound_eig_trial(Rng& rng, Budget b) {
  const std::size_t n = random::uniform(rng, 1, std::min<std::size_t>(b.max_dim, 4));
  const Dims mids = random::mids(rng, b.max_mid_volume);
  const std::size_t s = product(mids);
  std::vector<Matrix<Q>> vs, slices_a;
  std::vector<std::vector<Q>> spectra;
  for (std::size_t i = 0; i < s; ++i) {
    Matrix<Q> v = random::invertible_matrix(rng, n);
    std::vector<Q> lam(n);
    Matrix<Q> d(n, n);
    for (std::size_t c = 0; c < n; ++c) d(c, c) = lam[c] = random::rational(rng);
    slices_a.push_back(v * d * inverse(v));
    vs.push_back(std::move(v));
    spectra.push_back(std::move(lam));
  }
  const HM a = from_slices<Q>(n, mids, n, slices_a);

  std::vector<std::size_t> all_rows(n);
  for (std::size_t t = 0; t < n; ++t) all_rows[t] = t;

  // Planted eigenpairs of A itself.
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Matrix<Q>> xs;
    std::vector<Q> lam;
    for (std::size_t i = 0; i < s; ++i) {
      xs.push_back(vs[i].submatrix(all_rows, std::vector<std::size_t>{c}));
      lam.push_back(spectra[i][c]);
    }
    if (!verify_eigenpair(a, EigenPair<Q>{lam, from_slices<Q>(n, mids, 1, xs)}))
      return json{{"law", "planted eigenpair"}, {"column", c}, {"operands", operands({&a})}};
  }

  for (std::size_t k = 1; k <= n; ++k) {
    const HM mult = mult_compound_hyper(a, k);
    const HM add = add_compound_hyper(a, k);
    const auto subsets = combinations(n, k);
    for (std::size_t r = 0; r < subsets.size(); ++r) {
      std::vector<Matrix<Q>> ws;
      std::vector<Q> lam_mult, lam_add;
      for (std::size_t i = 0; i < s; ++i) {
        const std::vector<Q> w = compound_eigvec(vs[i].submatrix(all_rows, subsets[r]), k);
        ws.emplace_back(w.size(), 1, w);
        lam_mult.push_back(predict_compound_eigs<Q>(spectra[i], k, CompoundMode::Multiplicative)[r]);
        lam_add.push_back(predict_compound_eigs<Q>(spectra[i], k, CompoundMode::Additive)[r]);
      }
      const bool nonzero = std::all_of(ws.begin(), ws.end(), [](const Matrix<Q>& w) {
        return std::any_of(w.data().begin(), w.data().end(), [](const Q& x) { return sgn(x) != 0; });
      });
      if (!nonzero) continue;
      const HM x = from_slices<Q>(ws.front().rows(), mids, 1, ws);
      if (!verify_eigenpair(mult, EigenPair<Q>{lam_mult, x}) ||
          !verify_eigenpair(add, EigenPair<Q>{lam_add, x}))
        return json{{"law", "compound eigenpair"}, {"k", k}, {"alpha_rank", r + 1},
                    {"operands", operands({&a})}};
    }
  }
  return std::nullopt;
}

std::optional<json> det_laws_trial(Rng& rng, Budget b) {
  const std::size_t n3 = random::uniform(rng, 2, 3);
  const HM cube = random::hypermatrix(rng, Shape{n3, n3, n3});
  if (sgn(cdet(cube)) != 0)
    return json{{"law", "cdet vanishes for odd order"}, {"operands", operands({&cube})}};

  const std::size_t n2 = random::uniform(rng, 1, std::min<std::size_t>(b.max_dim, 4));
  const HM sq = random::hypermatrix(rng, Shape{n2, n2});
  if (ddet(sq) != det(sq.as_matrix()))
    return json{{"law", "ddet == det for order 2"}, {"operands", operands({&sq})}};

  const HM quart = random::hypermatrix(rng, Shape{2, 2, 2, 2});
  if (ddet(quart) != cdet(quart))
    return json{{"law", "ddet == cdet for even order"}, {"operands", operands({&quart})}};

  const std::size_t n = random::uniform(rng, 1, b.max_dim);
  const Dims mids = random::mids(rng, b.max_mid_volume);
  const HM a = random::hypermatrix(rng, make_shape(n, mids, n));
  const HM bb = random::hypermatrix(rng, make_shape(n, mids, n));
  if (sdet(stph(a, bb)) != sdet(a) * sdet(bb))
    return json{{"law", "Det(A*B) == Det(A) Det(B)"}, {"operands", operands({&a, &bb})}};
  return std::nullopt;
}

GlSignature group_signature(const Options& o) {
  if (o.dims.empty()) return GlSignature{2, {2}};
  return GlSignature{std::max<std::size_t>(1, o.dims[0]), Dims(o.dims.begin() + 1, o.dims.end())};
}

}  // namespace

json Report::to_json() const {
  json out{{"suite", suite},   {"trials", trials}, {"passed", passed},
           {"failed", failed}, {"seed", seed},     {"status", ok() ? "pass" : "fail"}};
  if (counterexample) out["counterexample"] = *counterexample;
  if (!details.is_null()) out["details"] = details;
  return out;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "assoc", "bilinear", "cauchy-binet", "inverse-law", "group", "compound-eig", "det-laws"};
  return names;
}

Report run_suite(std::string_view name, const Options& options) {
  const Budget budget = size_budget(options);
  const GlSignature sig = group_signature(options);
  std::map<std::string, std::size_t> group_checks;

  Trial trial;
  if (name == "assoc") {
    trial = [&](Rng& rng, std::uint64_t) { return assoc_trial(rng, budget); };
  } else if (name == "bilinear") {
    trial = [&](Rng& rng, std::uint64_t) { return bilinear_trial(rng, budget); };
  } else if (name == "cauchy-binet") {
    trial = [&](Rng& rng, std::uint64_t) { return cauchy_binet_trial(rng, budget); };
  } else if (name == "inverse-law") {
    trial = [&](Rng& rng, std::uint64_t) { return inverse_law_trial(rng, budget); };
  } else if (name == "group") {
    trial = [&](Rng& rng, std::uint64_t t) {
      return group_trial(rng, sig, options.seed ^ t, group_checks);
    };
  } else if (name == "compound-eig") {
    trial = [&](Rng& rng, std::uint64_t) { return compound_eig_trial(rng, budget); };
  } else if (name == "det-laws") {
    trial = [&](Rng& rng, std::uint64_t) { return det_laws_trial(rng, budget); };
  } else {
    fail(Errc::UnknownSuite, "unknown verification suite '" + std::string(name) + "'");
  }

  Report report;
  report.suite = std::string(name);
  report.trials = options.trials;
  report.seed = options.seed;
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    Rng rng = random::trial_rng(options.seed, t);
    if (auto failure = trial(rng, t)) {
      ++report.failed;
      if (!report.counterexample) {
        (*failure)["trial"] = t;
        report.counterexample = std::move(*failure);
      }
    } else {
      ++report.passed;
    }
  }
  if (name == "group") {
    report.details = json{{"signature", {{"n", sig.n}, {"mids", sig.mids}}},
                          {"checks", group_checks}};
  }
  return report;
}

}  // namespace hym::verify

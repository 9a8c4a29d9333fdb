#include "bosonorder/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bosonorder/closed_forms.hpp"
#include "bosonorder/fock.hpp"
#include "bosonorder/normal_order.hpp"
#include "bosonorder/oracle.hpp"
#include "bosonorder/transforms.hpp"

namespace bosonorder {

namespace {

constexpr double kRelTolerance = 1e-9;
constexpr double kAbsFloor = 1e-12;
constexpr double kSqueezeTolerance = 1e-6;

using Rng = std::mt19937_64;

std::vector<Ladder> random_word(Rng& rng, unsigned min_len, unsigned max_len) {
  std::uniform_int_distribution<unsigned> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<Ladder> word(len_dist(rng));
  for (auto& l : word) l = bit(rng) ? Ladder::Dag : Ladder::Ann;
  return word;
}

OperatorExpr word_expr(const std::vector<Ladder>& word) {
  std::vector<OperatorExpr> factors;
  factors.reserve(word.size());
  for (const Ladder l : word)
    factors.push_back(l == Ladder::Ann ? OperatorExpr::ann()
                                       : OperatorExpr::dag());
  if (factors.empty()) return OperatorExpr::scalar(ScalarPoly(1));
  return OperatorExpr::product(std::move(factors));
}

void corrupt_form(NormalForm& form) {
  if (form.is_zero()) {
    form.add_term({0, 0}, ScalarPoly(1));
    return;
  }
  form.add_term(form.terms().begin()->first, ScalarPoly(1));
}

void record_exact(SuiteResult& res, bool ok, const std::string& what) {
  ++res.cases;
  if (!ok && res.passed) {
    res.passed = false;
    res.note = what;
  }
}

void record_numeric(SuiteResult& res, double relative_dev,
                    double tolerance, const std::string& what) {
  ++res.cases;
  res.max_deviation = std::max(res.max_deviation, relative_dev);
  if (relative_dev > tolerance && res.passed) {
    res.passed = false;
    std::ostringstream os;
    os << what << " (deviation " << relative_dev << ")";
    res.note = os.str();
  }
}

/// Relative deviation of nf against expr on the exactness block.
double relative_compare(const NormalForm& nf, const OperatorExpr& expr,
                        const ComplexBindings& bindings, unsigned max_occ,
                        unsigned degree) {
  const double dev = compare(nf, expr, bindings, max_occ, degree);
  const TruncatedRep rep(required_dim(degree, max_occ));
  const Eigen::MatrixXcd ref = evaluate(expr, bindings, rep);
  const unsigned cols = std::min(rep.dim, max_occ + 1);
  const unsigned rows = std::min(rep.dim, max_occ + degree + 1);
  const double scale =
      std::max(1.0, ref.topLeftCorner(rows, cols).cwiseAbs().maxCoeff());
  return dev / scale;
}

SuiteResult rewrite_suite(const VerifyOptions& opts) {
  SuiteResult res{"rewrite"};
  Rng rng(opts.seed ^ 0x5265777269746531ULL);
  const unsigned max_len = std::clamp(opts.max_n, 1u, 10u);
  for (unsigned i = 0; i < 160; ++i) {
    const auto word = random_word(rng, 1, max_len);
    const OperatorExpr expr = word_expr(word);
    NormalForm nf = normal_order(expr);
    if (opts.corrupt && i == 0) corrupt_form(nf);
    const double dev =
        relative_compare(nf, expr, {}, 3, static_cast<unsigned>(word.size()));
    record_numeric(res, dev, kRelTolerance, "random word vs matrix oracle");
  }
  return res;
}

SuiteResult lemma4_suite(const VerifyOptions& opts) {
  SuiteResult res{"lemma4"};
  for (unsigned j = 0; j <= opts.max_n; ++j) {
    for (unsigned k = 0; k <= opts.max_n; ++k) {
      NormalForm closed = ann_dag_product(j, k);
      if (opts.corrupt && j == 0 && k == 0) corrupt_form(closed);
      const OperatorExpr expr = OperatorExpr::product(
          {OperatorExpr::power(OperatorExpr::ann(), j),
           OperatorExpr::power(OperatorExpr::dag(), k)});
      std::ostringstream what;
      what << "a^" << j << " ad^" << k << " closed form vs rewriting";
      record_exact(res, closed == normal_order(expr), what.str());
    }
  }
  // Numeric spot checks through the matrix oracle on the smaller corner.
  for (unsigned j = 0; j <= std::min(opts.max_n, 5u); ++j) {
    for (unsigned k = 0; k <= std::min(opts.max_n, 5u); ++k) {
      const OperatorExpr expr = OperatorExpr::product(
          {OperatorExpr::power(OperatorExpr::ann(), j),
           OperatorExpr::power(OperatorExpr::dag(), k)});
      const double dev =
          relative_compare(ann_dag_product(j, k), expr, {}, 3, j + k);
      record_numeric(res, dev, kRelTolerance, "lemma4 vs matrix oracle");
    }
  }
  return res;
}

SuiteResult lemma5_suite(const VerifyOptions& opts) {
  SuiteResult res{"lemma5"};
  const unsigned limit = std::min(opts.max_n, 6u);
  for (unsigned j = 0; j <= limit; ++j) {
    for (unsigned k = 0; k <= limit; ++k) {
      AntinormalForm anti = dag_ann_antinormal(j, k);
      if (opts.corrupt && j == 0 && k == 0)
        anti.add_term({0, 0}, Rat(1));
      const NormalForm round_trip = normal_order(to_operator_expr(anti));
      std::ostringstream what;
      what << "antinormal round trip for ad^" << j << " a^" << k;
      record_exact(res, round_trip == NormalForm::word(j, k), what.str());
    }
  }
  return res;
}

SuiteResult theorem1_suite(const VerifyOptions& opts) {
  SuiteResult res{"theorem1"};
  Rng rng(opts.seed ^ 0x5468656f72656d31ULL);
  const Symbol x("x"), y("y");
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (unsigned n = 0; n <= opts.max_n; ++n) {
    const OperatorExpr literal = OperatorExpr::power(
        OperatorExpr::sum(
            {OperatorExpr::product(
                 {OperatorExpr::ann(), OperatorExpr::scalar(ScalarPoly(x))}),
             OperatorExpr::product(
                 {OperatorExpr::dag(), OperatorExpr::scalar(ScalarPoly(y))})}),
        n);
    NormalForm closed = expand_power(n, x, y);
    if (opts.corrupt && n == 0) corrupt_form(closed);
    std::ostringstream what;
    what << "(ax+ad y)^" << n << " closed form vs rewriting";
    record_exact(res, closed == normal_order(literal), what.str());

    for (int trial = 0; trial < 3; ++trial) {
      const ComplexBindings bindings{{x, {coord(rng), coord(rng)}},
                                     {y, {coord(rng), coord(rng)}}};
      const double dev = relative_compare(closed, literal, bindings, 3, n);
      record_numeric(res, dev, kRelTolerance, "theorem1 vs matrix oracle");
    }
  }
  return res;
}

SuiteResult theorem2_suite(const VerifyOptions& opts) {
  SuiteResult res{"theorem2"};
  Rng rng(opts.seed ^ 0x5468656f72656d32ULL);
  const Symbol x("x"), y("y");
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);

  for (unsigned n = 0; n <= 12; ++n) {
    // Route 1: the full normal-ordered expansion applied to |0> at random
    // rational slots. Route 2: the vacuum form evaluated and applied as
    // pure a†-powers.
    const Rat xi(num(rng), den(rng));
    const Rat eta(num(rng), den(rng));
    const FockVector via_form = apply_form(expand_power(n, x, y),
                                           FockVector::basis(0),
                                           {{x, xi}, {y, eta}});
    FockVector via_vacuum;
    auto expansion = vacuum_expansion(n, x, y);
    if (opts.corrupt && n == 0)
      expansion[0] += ScalarPoly(1);
    for (const auto& [m, poly] : expansion) {
      const Rat weight = poly.evaluate({{x, xi}, {y, eta}});
      const FockVector raised = apply_normal_word(n - 2 * m, 0, 0);
      for (const auto& [occ, amp] : raised.amplitudes())
        via_vacuum.add(occ, amp * RadicalSum(weight));
    }
    std::ostringstream what;
    what << "vacuum expansion vs apply_form at n=" << n;
    record_exact(res, via_form == via_vacuum, what.str());
  }

  // Hermite explicit sum vs the three-term recurrence.
  std::vector<std::vector<Rat>> rec;
  rec.push_back({Rat(1)});
  rec.push_back({Rat(0), Rat(1)});
  for (unsigned n = 0; n <= 20; ++n) {
    if (n >= 2) {
      // He_n = t·He_{n−1} − (n−1)·He_{n−2}
      std::vector<Rat> next(n + 1, Rat(0));
      for (unsigned i = 0; i < rec[n - 1].size(); ++i)
        next[i + 1] += rec[n - 1][i];
      for (unsigned i = 0; i < rec[n - 2].size(); ++i)
        next[i] -= Rat(static_cast<int>(n - 1)) * rec[n - 2][i];
      rec.push_back(next);
    }
    const HermiteHe he = hermite_he(n);
    std::ostringstream what;
    what << "He_" << n << " explicit sum vs recurrence";
    record_exact(res, he.coeffs == rec[n], what.str());
  }
  return res;
}

SuiteResult fock_suite(const VerifyOptions& opts) {
  SuiteResult res{"fock"};
  Rng rng(opts.seed ^ 0x466f636b20202020ULL);
  std::uniform_int_distribution<unsigned> small(0, 5);
  std::uniform_int_distribution<unsigned> occ(0, 8);

  const auto word_matrix = [](const TruncatedRep& rep, bool antinormal,
                              unsigned first, unsigned second) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
    const Eigen::MatrixXcd& left = antinormal ? rep.ann : rep.dag;
    const Eigen::MatrixXcd& right = antinormal ? rep.dag : rep.ann;
    for (unsigned i = 0; i < first; ++i) out = out * left;
    for (unsigned i = 0; i < second; ++i) out = out * right;
    return out;
  };

  for (unsigned i = 0; i < 120; ++i) {
    const bool antinormal = i % 2 == 1;
    const unsigned first = small(rng), second = small(rng), m = occ(rng);
    FockVector v = antinormal ? apply_antinormal_word(first, second, m)
                              : apply_normal_word(first, second, m);
    if (opts.corrupt && i == 0) v.add(0, RadicalSum(Rat(1)));
    const TruncatedRep rep(required_dim(first + second, m));
    const Eigen::MatrixXcd word = word_matrix(rep, antinormal, first, second);
    const double scale = std::max(1.0, word.col(m).cwiseAbs().maxCoeff());
    double dev = 0.0;
    for (unsigned row = 0; row < rep.dim; ++row) {
      dev = std::max(dev, std::abs(word(row, m) -
                                   v.amplitude(row).to_double()));
    }
    record_numeric(res, dev / scale, kRelTolerance,
                   antinormal ? "lemma7 word vs matrix column"
                              : "lemma6 word vs matrix column");
  }

  // Moments of random 3-term superpositions.
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  const Int radicands[] = {1, 2, 3, 5};
  std::uniform_int_distribution<int> rad_pick(0, 3);
  std::uniform_int_distribution<unsigned> pq(0, 4);
  for (unsigned i = 0; i < 60; ++i) {
    FockVector state;
    while (state.amplitudes().size() < 3) {
      const int n = num(rng);
      if (n == 0) continue;
      state.add(occ(rng), RadicalSum(RadicalScalar(Rat(n, den(rng))) *
                                     RadicalScalar::sqrt_of(
                                         radicands[rad_pick(rng)])));
    }
    const unsigned p = pq(rng), q = pq(rng);
    RadicalSum value = moment(p, q, state);
    if (opts.corrupt && i == 0) value += RadicalSum(Rat(1));

    const unsigned top = state.amplitudes().rbegin()->first;
    const TruncatedRep rep(required_dim(p + q, top));
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(rep.dim);
    for (const auto& [m, amp] : state.amplitudes()) psi(m) = amp.to_double();
    const Eigen::MatrixXcd word = word_matrix(rep, false, p, q);
    const std::complex<double> expected = psi.dot(word * psi);
    const double scale = std::max(1.0, std::abs(expected));
    record_numeric(res, std::abs(expected - value.to_double()) / scale,
                   kRelTolerance, "moment vs matrix oracle");
  }
  return res;
}

SuiteResult transforms_suite(const VerifyOptions& opts) {
  SuiteResult res{"transforms"};
  Rng rng(opts.seed ^ 0x5472616e73666f72ULL);
  const TransformSpec disp = TransformSpec::displacement();
  const TransformSpec sq = TransformSpec::squeeze();
  const unsigned limit = std::min(opts.max_n, 6u);

  // Displacement against the literal (a + alpha)^n rewrite.
  for (unsigned n = 0; n <= limit; ++n) {
    NormalForm closed = conjugate_power(disp, Ladder::Ann, n);
    if (opts.corrupt && n == 0) corrupt_form(closed);
    const OperatorExpr literal = OperatorExpr::power(
        OperatorExpr::sum({OperatorExpr::ann(),
                           OperatorExpr::scalar(ScalarPoly(disp.alpha()))}),
        n);
    std::ostringstream what;
    what << "displacement conjugation vs rewrite at n=" << n;
    record_exact(res, closed == normal_order(literal), what.str());
  }

  // Unitarity shadow: dagger intertwines the two conjugation directions.
  for (unsigned n = 0; n <= limit; ++n) {
    const NormalForm lhs =
        nf_dagger(conjugate_power(sq, Ladder::Ann, n), sq.conjugations());
    const NormalForm rhs = conjugate_power(sq, Ladder::Dag, n);
    std::ostringstream what;
    what << "squeeze dagger shadow at n=" << n;
    record_exact(res, lhs == rhs, what.str());
  }

  // Composition: D†a^nD = (D†aD)^n.
  const NormalForm step = conjugate_power(disp, Ladder::Ann, 1);
  NormalForm iterated = NormalForm::identity();
  for (unsigned n = 0; n <= limit; ++n) {
    std::ostringstream what;
    what << "displacement composition at n=" << n;
    record_exact(res, iterated == conjugate_power(disp, Ladder::Ann, n),
                 what.str());
    iterated = nf_mul(iterated, step);
  }

  // Numeric squeeze checks through the matrix exponential.
  std::uniform_real_distribution<double> r_dist(0.05, 0.5);
  std::uniform_real_distribution<double> phi_dist(0.0, 3.14159);
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned trial = 0; trial < 8; ++trial) {
      const double r = r_dist(rng), phi = phi_dist(rng);
      const Ladder which = trial % 2 == 0 ? Ladder::Dag : Ladder::Ann;
      const unsigned max_occ = 3;
      const unsigned dim = 4 * required_dim(n, max_occ);
      const TruncatedRep rep(dim);
      const Eigen::MatrixXcd S = squeeze_matrix(r, phi, dim);
      Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(dim, dim);
      const Eigen::MatrixXcd& ladder =
          which == Ladder::Dag ? rep.dag : rep.ann;
      for (unsigned i = 0; i < n; ++i) op = op * ladder;
      const Eigen::MatrixXcd lhs = S.adjoint() * op * S;

      const std::complex<double> phase =
          std::exp(std::complex<double>(0.0, 2.0 * phi));
      const ComplexBindings bindings{{sq.cosh_sym(), std::cosh(r)},
                                     {sq.sinh_sym(), std::sinh(r)},
                                     {sq.phase_sym(), phase},
                                     {sq.phase_conj_sym(), 1.0 / phase}};
      const Eigen::MatrixXcd rhs =
          evaluate(conjugate_power(sq, which, n), bindings, rep);

      const unsigned rows = max_occ + n + 1, cols = max_occ + 1;
      const double scale = std::max(
          1.0, rhs.topLeftCorner(rows, cols).cwiseAbs().maxCoeff());
      const double dev =
          (lhs - rhs).topLeftCorner(rows, cols).cwiseAbs().maxCoeff();
      record_numeric(res, dev / scale, kSqueezeTolerance,
                     "squeeze conjugation vs matrix exponential");
    }
  }
  return res;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "rewrite", "lemma4", "lemma5", "theorem1",
      "theorem2", "fock",   "transforms"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "rewrite") return rewrite_suite(opts);
  if (name == "lemma4") return lemma4_suite(opts);
  if (name == "lemma5") return lemma5_suite(opts);
  if (name == "theorem1") return theorem1_suite(opts);
  if (name == "theorem2") return theorem2_suite(opts);
  if (name == "fock") return fock_suite(opts);
  if (name == "transforms") return transforms_suite(opts);
  throw std::invalid_argument("unknown verify suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
  std::vector<SuiteResult> results;
  for (const auto& name : verify_suite_names())
    results.push_back(run_suite(name, opts));
  return results;
}

}  // namespace bosonorder

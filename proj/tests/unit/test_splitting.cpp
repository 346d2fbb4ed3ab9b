// Copyright 2026 The splitlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "splitlab/splitting.hpp"

using namespace splitlab;

namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::BadArgs;
}

oracle::Mat to_oracle(const MatrixFq& M) {
  oracle::Mat out(M.rows(), oracle::Vec(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) out[i][j] = M.at(i, j);
  }
  return out;
}

// S via ordered tuples and |GL_m|, using only the oracle's own field model.
std::uint64_t oracle_S(std::uint64_t p, unsigned m, unsigned n, const oracle::Poly& f) {
  const auto T = oracle::mult_matrix({0, 1}, f, p);
  return oracle::splitting_tuples(T, m, n, p) / oracle::count_invertible(m, p);
}

SubspaceBasis span_of(const SplitInstance& inst, const std::vector<FieldElement>& xs) {
  std::vector<RowVec> rows;
  for (const auto& x : xs) rows.push_back(inst.tower().coords_of(x));
  return SubspaceBasis::from_rows(inst.base(), inst.tower().degree(), rows);
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(ssc_formula(2, 2, 2) == 20);
  CHECK(ssc_formula(3, 2, 2) == 90);
  CHECK(ssc_formula(2, 2, 3) == 336);
  CHECK(ssc_formula(2, 3, 2) == 576);
  CHECK(ssc_formula(5, 3, 1) == 1);
  CHECK(ssc_status(2, 5) == FormulaStatus::proved);
  CHECK(ssc_status(3, 1) == FormulaStatus::proved);
  CHECK(ssc_status(3, 2) == FormulaStatus::conjectural);
  CHECK(splitting_lower_bound(2, 2, 2) == 5);
  CHECK(splitting_lower_bound(7, 3, 1) == 1);
  CHECK(splitting_lower_bound(2, 1, 3) == 7);
  CHECK(nobases_formula(2, 2) == 120);
  CHECK(nobases_formula(3, 2) == 4320);
  CHECK(nobases_formula(2, 1) == 6);
  CHECK(two_by_two_count(2) == 20);
  CHECK(two_by_two_count(3) == 90);
}

TEST_CASE("instances reject non-generators and wrong shapes") {
  const auto tower = build_extension(build_field(2, 1), 4);
  CHECK(error_code([&] { SplitInstance(tower, 2, 2, tower->one()); }) == Errc::NotGenerator);
  CHECK(error_code([&] { SplitInstance(tower, 3, 2); }) == Errc::DimensionMismatch);
  // alpha^5 lies in F_4, a proper subfield
  CHECK(error_code([&] { SplitInstance(tower, 2, 2, tower->pow(tower->alpha(), 5)); }) == Errc::NotGenerator);
}

TEST_CASE("a scalar never splits when n > 1") {
  const auto tower = build_extension(build_field(3, 1), 4);
  const SplittingTester scalar(multiplication_matrix(*tower, tower->from_base(2)), 2, 2);
  for_each_subspace(tower->base_ptr(), 4, 2, [&](const SubspaceBasis& W) { CHECK_FALSE(scalar.test(W)); });
}

TEST_CASE("power subspace is splitting and W = L + L/alpha is not") {
  const auto inst = make_instance(2, 2, 2);
  CHECK(is_alpha_splitting(inst, power_subspace(inst)));
  const auto& T = inst.tower();
  const auto ainv = T.inv(inst.alpha());
  for (std::uint64_t c = 1; c < 16; ++c) {
    const auto v = T.from_code(c);
    CHECK_FALSE(is_alpha_splitting(inst, span_of(inst, {v, T.mul(v, ainv)})));
  }
  CHECK(error_code([&] { is_alpha_splitting(inst, SubspaceBasis::from_rows(inst.base(), 4, std::vector<RowVec>{{1, 0, 0, 0}})); }) ==
        Errc::DimensionMismatch);
}

TEST_CASE("brute counts agree with the tuple oracle") {
  struct Case {
    std::uint64_t q;
    unsigned m, n;
    std::uint64_t expected;
  };
  for (const auto& c : std::vector<Case>{{2, 2, 2, 20}, {3, 2, 2, 90}, {2, 2, 3, 336}, {2, 1, 2, 3}, {2, 2, 1, 1}, {3, 1, 3, 13}}) {
    CAPTURE(c.q);
    CAPTURE(c.m);
    CAPTURE(c.n);
    const auto inst = make_instance(c.q, c.m, c.n);
    const auto& f = inst.tower().defining_poly().coeffs();
    const auto report = count_splitting(inst);
    CHECK(report.brute_count == c.expected);
    CHECK(report.brute_count == oracle_S(c.q, c.m, c.n, oracle::Poly(f.begin(), f.end())));
    CHECK(report.verdict == Match::match);
    CHECK(report.brute_count >= splitting_lower_bound(c.q, c.m, c.n));
  }
}

TEST_CASE("m = n = 2 closed form") {
  for (std::uint64_t q : {2, 3}) {
    const auto report = count_splitting(make_instance(q, 2, 2));
    CHECK(report.brute_count == two_by_two_count(q));
    REQUIRE(report.notes.size() == 1);
  }
}

TEST_CASE("non-prime base field") {
  const auto report = count_splitting(make_instance(4, 2, 2));
  CHECK(report.brute_count == 272);
  CHECK(report.verdict == Match::match);
}

TEST_CASE("range counts partition the stream") {
  const auto inst = make_instance(2, 2, 3);
  const std::uint64_t total = 651;
  BigInt sum = 0;
  for (std::uint64_t b = 0; b < total; b += 100) sum += count_splitting_range(inst, b, b + 100);
  CHECK(sum == 336);
}

TEST_CASE("scan bound is enforced") {
  Bounds tight;
  tight.scan = 100;
  CHECK(error_code([&] { count_splitting(make_instance(2, 2, 3), tight); }) == Errc::ScanBoundExceeded);
}

TEST_CASE("translation by a unit permutes splitting subspaces") {
  const auto inst = make_instance(2, 2, 2);
  const auto& T = inst.tower();
  const SplittingTester tester(inst.alpha_matrix(), 2, 2);
  const auto all = splitting_witnesses(inst, 1000);
  REQUIRE(all.size() == 20);
  for (std::uint64_t c = 1; c < 16; ++c) {
    const auto beta = multiplication_matrix(T, T.from_code(c));
    std::set<std::vector<Code>> images;
    for (const auto& W : all) {
      const auto moved = SubspaceBasis::from_rows(inst.base(), 4, std::vector<RowVec>{row_times(W.basis().row(0), beta),
                                                                                      row_times(W.basis().row(1), beta)});
      CHECK(tester.test(moved));
      images.insert(moved.basis().entries());
    }
    CHECK(images.size() == 20);
  }
}

TEST_CASE("pointed counts") {
  const auto inst = make_instance(2, 2, 2);
  CHECK(count_pointed(inst, inst.tower().one()) == 4);
  CHECK(error_code([&] { count_pointed(inst, inst.tower().zero()); }) == Errc::ZeroBasePoint);

  const auto report = pointed_consistency(inst);
  CHECK(report.exhaustive);
  CHECK(report.per_point.size() == 15);
  for (const auto& [x, count] : report.per_point) CHECK(count == 4);
  CHECK(report.identity_holds);

  const auto line = make_instance(2, 1, 2);
  for (std::uint64_t c = 1; c < 4; ++c) CHECK(count_pointed(line, line.tower().from_code(c)) == 1);
  CHECK(pointed_consistency(line).identity_holds);

  const auto whole = make_instance(2, 2, 1);
  CHECK(count_pointed(whole, whole.tower().from_code(3)) == 1);
  CHECK(pointed_consistency(whole).identity_holds);
}

TEST_CASE("ordered splitting bases") {
  const auto r = count_splitting_bases(make_instance(2, 2, 2));
  REQUIRE(r.direct.has_value());
  CHECK(*r.direct == 120);
  CHECK(r.product == 120);
  CHECK(r.value() == nobases_formula(2, 2));

  CHECK(count_splitting_bases(make_instance(2, 1, 2)).value() == 3);
  CHECK(count_splitting_bases(make_instance(3, 1, 1)).value() == 2);
  const auto r3 = count_splitting_bases(make_instance(3, 2, 2));
  CHECK(r3.consistent());
  CHECK(r3.value() == 4320);
}

TEST_CASE("T-splitting") {
  const auto inst = make_instance(2, 2, 2);
  const auto& A = inst.alpha_matrix();
  for_each_subspace(inst.base(), 4, 2, [&](const SubspaceBasis& W) {
    CHECK(is_T_splitting(A, W, 2, 2) == is_alpha_splitting(inst, W));
  });
  const auto F2 = inst.base();
  CHECK(count_T_splitting(MatrixFq::identity(F2, 4), 2, 2) == 0);
  CHECK(count_T_splitting(MatrixFq::identity(F2, 2), 1, 2) == 0);
  CHECK(count_T_splitting(MatrixFq::identity(F2, 3), 3, 1) == 1);
  CHECK(count_T_splitting(companion_matrix(parse_poly_literal(F2, "0,1,1")), 1, 2) == 1);
  const auto line = make_instance(2, 1, 2);
  CHECK(count_T_splitting(line.alpha_matrix(), 1, 2) == 3);
  CHECK(error_code([&] { count_T_splitting(MatrixFq::identity(F2, 3), 1, 2); }) == Errc::DimensionMismatch);
}

TEST_CASE("T-splitting counts for a few hundred multiplication maps") {
  const auto tower = build_extension(build_field(3, 1), 4);
  for (std::uint64_t c = 1; c < tower->order(); c += 13) {
    const auto beta = tower->from_code(c);
    if (!generates(*tower, beta)) continue;
    const auto M = multiplication_matrix(*tower, beta);
    CHECK(count_T_splitting(M, 2, 2) == 90);
  }
}

TEST_CASE("endomorphism formula") {
  const auto F2 = build_field(2, 1);
  CHECK(endo_formula(parse_poly_literal(F2, "0,1,1")) == 1);
  CHECK(endo_formula(parse_poly_literal(F2, "1,1,1")) == 3);
  CHECK(endo_formula(parse_poly_literal(build_field(3, 1), "0,1")) == 1);
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_monic(F2, n, [&](const Poly& f) {
      const auto C = companion_matrix(f);
      const BigInt brute = count_T_splitting(C, 1, n);
      CHECK(endo_formula(f) == brute);
      CHECK(brute == oracle::splitting_tuples(to_oracle(C), 1, n, 2));
    });
  }
  const auto F3 = build_field(3, 1);
  for_each_monic(F3, 3, [&](const Poly& f) { CHECK(endo_formula(f) == count_T_splitting(companion_matrix(f), 1, 3)); });
}

TEST_CASE("Moebius images of alpha give equal counts") {
  const auto inst = make_instance(2, 2, 2);
  CHECK(weak_ssc_check(inst, 1, 1, 0, 1, 0).count_beta == 20);
  CHECK(weak_ssc_check(inst, 0, 1, 1, 0, 0).verdict == Match::match);
  CHECK(weak_ssc_check(inst, 1, 0, 0, 1, 1).verdict == Match::match);
  const auto r = weak_ssc_check(inst, 1, 1, 1, 0, 1);
  CHECK(r.verdict == Match::match);
  const auto& T = inst.tower();
  const auto aq = T.pow(inst.alpha(), 2);
  CHECK(r.beta == T.div(T.add(aq, T.one()), aq));
  CHECK(error_code([&] { weak_ssc_check(inst, 1, 1, 1, 1, 0); }) == Errc::SingularMoebius);

  const auto inst3 = make_instance(3, 2, 2);
  CHECK(weak_ssc_check(inst3, 2, 0, 0, 1, 0).verdict == Match::match);
  CHECK(weak_ssc_check(inst3, 1, 2, 1, 1, 1).verdict == Match::match);

  // in a degree-1 tower alpha is a base element, so c*alpha + d can vanish
  const auto point = make_instance(3, 1, 1);
  const Code a0 = point.tower().coords_of(point.alpha())[0];
  const Code d = point.tower().base().neg(a0);
  const Code b = a0 == 0 ? 1 : 0;
  CHECK(error_code([&] { weak_ssc_check(point, 1, b, 1, d, 0); }) == Errc::ZeroDenominator);
}

TEST_CASE("every generator of F_16 gives the same count") {
  const auto tower = build_extension(build_field(2, 1), 4);
  const auto sweep = generator_sweep(tower, 2, 2);
  CHECK(sweep.size() == 12);
  for (const auto& [code, count] : sweep) CHECK(count == 20);
}

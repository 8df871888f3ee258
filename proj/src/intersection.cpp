#include "wtpr/intersection.hpp"

namespace wtpr {

namespace {

bool near_half_integer(double x) { return near_integer(2.0 * x); }

bool near_value(double x, double v) { return std::abs(x - v) <= kIntegralityGuard; }

}  // namespace

Admissibility admissible(const HgParams& p) {
  Admissibility a;
  auto& v = a.violations;
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || !std::isfinite(p.gamma)) {
    v.emplace_back("non-finite parameter");
    return a;
  }
  const std::array<double, 5> c = {p.c0(), p.c1(), p.c2(), p.c3(), p.c4()};
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (near_integer(c[j])) v.push_back("c" + std::to_string(j) + " integral");
  }
  if (near_half_integer(p.alpha)) v.emplace_back("alpha in (1/2)Z");
  if (near_half_integer(p.beta)) v.emplace_back("beta in (1/2)Z");
  if (near_half_integer(p.gamma - p.alpha)) v.emplace_back("gamma-alpha in (1/2)Z");
  if (near_half_integer(p.gamma - p.beta)) v.emplace_back("gamma-beta in (1/2)Z");
  if (near_value(p.c1(), -1.0) || near_value(p.c1(), 0.0) || near_value(p.c1(), 1.0)) {
    v.emplace_back("c1 in {-1,0,1}");
  }
  if (near_value(p.c2(), 0.0)) v.emplace_back("c2 zero");
  if (near_value(p.c3(), 0.0)) v.emplace_back("c3 zero");
  if (near_value(p.gamma, -1.0) || near_value(p.gamma, 0.0) || near_value(p.gamma, 1.0)) {
    v.emplace_back("gamma in {-1,0,1}");
  }
  return a;
}

void require_admissible(const HgParams& p) {
  auto a = admissible(p);
  if (!a) throw admissibility_error(std::move(a.violations));
}

ComplexMatrix homology_H(const HgParams& p) {
  require_admissible(p);
  const cplx e0 = unit_phase(p.c0());
  const cplx e1 = unit_phase(p.c1());
  const cplx e2 = unit_phase(p.c2());
  const cplx e3 = unit_phase(p.c3());
  const cplx e4 = unit_phase(p.c4());
  const cplx e12 = unit_phase(p.c1() + p.c2());
  const cplx e23 = unit_phase(p.c2() + p.c3());
  const cplx e34 = unit_phase(p.c3() + p.c4());
  const cplx em0 = unit_phase(-p.c0());

  ComplexMatrix h(4, 4);
  h(0, 0) = (1.0 - e12) / ((1.0 - e1) * (1.0 - e2));
  h(0, 1) = -1.0 / (1.0 - e2);
  h(0, 3) = e1 * (1.0 - em0) / (1.0 - e1);
  h(1, 0) = -e2 / (1.0 - e2);
  h(1, 1) = (1.0 - e23) / ((1.0 - e2) * (1.0 - e3));
  h(1, 2) = -1.0 / (1.0 - e3);
  h(2, 1) = -e3 / (1.0 - e3);
  h(2, 2) = (1.0 - e34) / ((1.0 - e3) * (1.0 - e4));
  h(3, 0) = (1.0 - e0) / (1.0 - e1);
  h(3, 3) = (1.0 - e0) * (e0 - e1) / (e0 * (1.0 - e1));
  return h;
}

cplx cohomology_c22(const HgParams& p, const ThetaConstants& tc) {
  const double c1 = p.c1(), c2 = p.c2(), c3 = p.c3(), c4 = p.c4();
  const cplx t3sq = tc.th3_0 * tc.th3_0;
  const cplx bracket = -c1 * tc.th1ppp_0 / tc.th1p_0 - c2 * tc.th2pp_0 / tc.th2_0 -
                       c3 * tc.th3pp_0 / tc.th3_0 + (2.0 * c1 - c4) * tc.th4pp_0 / tc.th4_0;
  return bracket / (kPi * kPi * t3sq * t3sq * (c1 - 1.0) * (c1 + 1.0));
}

ComplexMatrix cohomology_C(const HgParams& p, const ThetaConstants& tc) {
  require_admissible(p);
  const double c1 = p.c1(), c2 = p.c2(), c3 = p.c3();
  ComplexMatrix c(4, 4);
  c(0, 1) = 1.0 / (c1 + 1.0);
  c(1, 0) = 1.0 / (c1 - 1.0);
  c(1, 1) = cohomology_c22(p, tc);
  c(2, 2) = (c1 + c2) / (c1 * c2);
  c(2, 3) = 1.0 / c1;
  c(3, 2) = 1.0 / c1;
  c(3, 3) = (c1 + c3) / (c1 * c3);
  return (2.0 * kPi * kI) * c;
}

ComplexMatrix BasisChange::rows(Sign eps) const {
  const auto& k = (eps == Sign::plus) ? coeffs_plus : coeffs_minus;
  ComplexMatrix m(2, 4);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = k[r][c];
  return m;
}

ComplexMatrix BasisChange::full() const {
  ComplexMatrix m(4, 4);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) {
      m(r, c) = coeffs_minus[r][c];
      m(r + 2, c) = coeffs_plus[r][c];
    }
  return m;
}

BasisChange basis_change(const HgParams& p) {
  require_admissible(p);
  const double a = p.alpha, b = p.beta, g = p.gamma;
  BasisChange bc{};
  for (Sign eps : {Sign::minus, Sign::plus}) {
    const double s = sign_value(eps);
    auto& k = (eps == Sign::plus) ? bc.coeffs_plus : bc.coeffs_minus;
    // sigma_{1 eps} = -+ 1/(2 e(g-a)) ( -(1 +- e(g-a)) sigma_1 + sigma_4 )
    const cplx k1 = -s / (2.0 * unit_phase(g - a));
    k[0] = {k1 * -(1.0 + s * unit_phase(g - a)), 0.0, 0.0, k1};
    // sigma_{2 eps} = +- 1/(2 e(b+g)) ( (1-e(2a-g))/e(2a-2g) sigma_1 + (1-e(g)) sigma_2
    //                                    + e(2b)(1 +- e(g-b)) sigma_3 + e(g) sigma_4 )
    const cplx k2 = s / (2.0 * unit_phase(b + g));
    k[1] = {k2 * (1.0 - unit_phase(2.0 * a - g)) / unit_phase(2.0 * a - 2.0 * g),
            k2 * (1.0 - unit_phase(g)),
            k2 * unit_phase(2.0 * b) * (1.0 + s * unit_phase(g - b)),
            k2 * unit_phase(g)};
  }
  return bc;
}

EigenBlocks block_H_prime(const HgParams& p) {
  require_admissible(p);
  const double a = p.alpha, b = p.beta, g = p.gamma;
  const cplx front = (1.0 - unit_phase(g)) / 2.0;
  auto make = [&](double s) {
    ComplexMatrix m(2, 2);
    m(0, 0) = front / ((1.0 - s * unit_phase(g - a)) * (1.0 - s * unit_phase(a)));
    m(1, 1) = -front / ((1.0 - s * unit_phase(g - b)) * (1.0 - s * unit_phase(b)));
    return m;
  };
  return {make(-1.0), make(1.0)};
}

EigenBlocks block_C(const HgParams& p, const ThetaConstants& tc) {
  require_admissible(p);
  const double a = p.alpha, b = p.beta, g = p.gamma;
  const cplx two_pi_i = 2.0 * kPi * kI;
  ComplexMatrix minus{{0.0, 1.0 / (2.0 * a + 1.0)}, {1.0 / (2.0 * a - 1.0), cohomology_c22(p, tc)}};
  ComplexMatrix plus{{2.0 * g / (2.0 * a * (2.0 * g - 2.0 * a)), 1.0 / (2.0 * a)},
                     {1.0 / (2.0 * a), (2.0 * b - 2.0 * a) / (2.0 * a * 2.0 * b)}};
  return {two_pi_i * minus, two_pi_i * plus};
}

}  // namespace wtpr

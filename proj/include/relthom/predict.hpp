#ifndef RELTHOM_PREDICT_HPP
#define RELTHOM_PREDICT_HPP

#include <cstdint>
#include <vector>

#include "relthom/profile.hpp"

namespace relthom {

/// Result of one counting prediction: the substitution value, the
/// boundary correction, and their sum, all in the ring of the matched
/// correction row.
struct Prediction {
  SingTypeId id;
  int m = 0, n = 0;
  std::string correction_case;
  Ring ring = Ring::integers();
  Coeff naive, correction, total;

  json to_json() const {
    json j;
    j["type"] = render_sing_name(id.name);
    j["category"] = render_category(id.category);
    j["m"] = m;
    j["n"] = n;
    j["ring"] = ring.name();
    j["correction_case"] = correction_case;
    j["naive"] = naive.as_integer();
    j["correction"] = correction.as_integer();
    j["total"] = total.as_integer();
    return j;
  }
};

/// Evaluate a correction row against a profile: integer arithmetic first,
/// reduction into the row's ring at the very end.
inline std::int64_t correction_value(const CorrectionRow& row,
                                     const PrescribedProfile& prescribed,
                                     std::optional<std::int64_t> ak_override =
                                         std::nullopt) {
  std::int64_t total = 0;
  for (const CorrectionTerm& term :
       row.materialize(prescribed.m, prescribed.n, ak_override)) {
    total = detail::checked_add(
        total,
        detail::checked_mul(term.coeff, prescribed.invariant(term.invariant)));
  }
  return total;
}

/// The counting prediction: pair the absolute class with the extension's
/// relative characteristic numbers, evaluate the matched correction row on
/// the prescribed boundary data, and sum in the row's ring.  Predictions
/// over Z reject non-integer substitution values.
inline Prediction predict_count(const SingTypeId& id,
                                const PrescribedProfile& prescribed,
                                const ExtensionProfile& extension,
                                std::optional<std::int64_t> ak_override =
                                    std::nullopt) {
  if (id.category != prescribed.category)
    throw input_error("profile category does not match the queried type");
  const int m = prescribed.m, n = prescribed.n;
  GradedPoly tp = lookup_tp(id, m, n);
  const int q = codimension(id, m, n);
  auto numbers = extension.numbers(tp.ring(), m, q);
  Coeff naive_raw = tp.evaluate(q, numbers, extension.vanishing_defaults);

  const CorrectionRow& row =
      lookup_correction(id, m, n, prescribed.boundary.kind);
  std::int64_t corr = correction_value(row, prescribed, ak_override);

  Prediction p;
  p.id = id;
  p.m = m;
  p.n = n;
  p.correction_case = row.case_tag;
  p.ring = row.ring;
  p.naive = naive_raw.cast_to(row.ring);
  p.correction = Coeff::of(row.ring, corr);
  p.total = p.naive + p.correction;
  return p;
}

inline Prediction predict_count(const PredictionRequest& request) {
  return predict_count(request.id(), request.prescribed, request.extension,
                       request.smale_override);
}

/// Coefficient of the lone degree-q generator of a family in a
/// polynomial; zero if the degree is not a multiple of the generator
/// spacing.  Used to read off frame sensitivities.
inline Coeff single_generator_coefficient(const GradedPoly& p, Family family,
                                          Side side, int q) {
  int spacing = family == Family::SW ? 1 : family == Family::Chern ? 2 : 4;
  if (family == Family::Euler)
    throw input_error("no indexed Euler generator to read off");
  if (q % spacing != 0) return Coeff::zero(p.ring());
  int index = q / spacing;
  Generator g = family == Family::SW ? Generator::sw(index, side)
               : family == Family::Chern ? Generator::chern(index, side)
                                         : Generator::pontryagin(index, side);
  return p.coefficient(Monomial::of(g));
}

/// How a correction vector responds to changing the source/target frames:
/// each component shifts by a*d_source + b*d_target, where a and b are the
/// type's sensitivities to the two frames.
inline std::vector<std::int64_t> frame_change(std::vector<std::int64_t> alpha,
                                              std::int64_t d_source,
                                              std::int64_t d_target,
                                              std::int64_t a_eta,
                                              std::int64_t b_eta) {
  std::int64_t shift =
      detail::checked_add(detail::checked_mul(a_eta, d_source),
                          detail::checked_mul(b_eta, d_target));
  for (std::int64_t& a : alpha) a = detail::checked_add(a, shift);
  return alpha;
}

/// Correction difference of two maps sharing their boundary data: the
/// jet difference class minus the frame sensitivity times the frame
/// difference class.  Vanishes for regularly homotopic maps.
inline std::int64_t map_compare(std::int64_t d_eta, std::int64_t d_q,
                                std::int64_t a_eta) {
  return detail::checked_add(d_eta, detail::checked_neg(
                                        detail::checked_mul(a_eta, d_q)));
}

/// p1-number relative to a spin framing minus three times the signature.
inline std::int64_t hirzebruch_defect(std::int64_t p1_rel_spin,
                                      std::int64_t signature) {
  return detail::checked_add(p1_rel_spin,
                             detail::checked_mul(-3, signature));
}

/// (3(sigma - tau) + a2_count) / 2, asserting the bracket is even.
inline std::int64_t saeki_szucs_takase(std::int64_t signature,
                                       std::int64_t tau,
                                       std::int64_t a2_count) {
  std::int64_t bracket = detail::checked_add(
      detail::checked_mul(3, detail::checked_add(signature,
                                                 detail::checked_neg(tau))),
      a2_count);
  if (detail::floor_mod(bracket, 2) != 0)
    throw consistency_error("parity violation: 3(sigma - tau) + #A2 = " +
                            std::to_string(bracket) + " is odd");
  return bracket / 2;
}

/// (3(sigma - mu) + sigma2_count) / 2 reduced mod 24, asserting parity.
inline std::int64_t takase_T(std::int64_t signature, std::int64_t mu,
                             std::int64_t sigma2_count) {
  std::int64_t bracket = detail::checked_add(
      detail::checked_mul(3,
                          detail::checked_add(signature, detail::checked_neg(mu))),
      sigma2_count);
  if (detail::floor_mod(bracket, 2) != 0)
    throw consistency_error("parity violation: 3(sigma - mu) + #Sigma2 = " +
                            std::to_string(bracket) + " is odd");
  return detail::floor_mod(bracket / 2, 24);
}

/// Recover the regular-homotopy invariant from a cusp count: subtract the
/// substitution value of the dual class from the count and divide by the
/// normal-form constant a_k(2k-1)!.  This inverts predict_count on row
/// (vii) exactly, whatever the Pontryagin number: the count minus the
/// dual-class number is the only combination independent of the choice of
/// bounding manifold.  pk_number is the relative number of the degree-4k
/// Pontryagin generator; decomposable products are paired with the
/// vanishing-defaults convention.
inline std::int64_t smale_from_singularities(int k, std::int64_t pk_number,
                                             std::int64_t a2_count,
                                             std::optional<std::int64_t>
                                                 ak_override = std::nullopt) {
  if (k < 1) throw input_error("k must be positive");
  const int m = 4 * k, n = 6 * k - 1;
  GradedPoly tp = lookup_tp({SingName::A2, Category::RealOriented}, m, n);
  std::map<Monomial, Coeff> numbers{
      {Monomial::of(Generator::pontryagin(k)),
       Coeff::of(tp.ring(), pk_number)}};
  Coeff naive = tp.evaluate(4 * k, numbers, /*vanishing_defaults=*/true);
  std::int64_t bracket =
      detail::checked_add(a2_count, detail::checked_neg(naive.as_integer()));
  std::int64_t divisor = detail::checked_mul(smale_coefficient(k, ak_override),
                                             odd_factorial_bound(k));
  if (bracket % divisor != 0)
    throw consistency_error(
        "inconsistent profile: bracket " + std::to_string(bracket) +
        " is not divisible by " + std::to_string(divisor));
  return bracket / divisor;
}

}  // namespace relthom

#endif  // RELTHOM_PREDICT_HPP

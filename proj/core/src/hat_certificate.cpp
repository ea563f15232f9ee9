#include "hatkit/hat_certificate.hpp"

#include <stdexcept>

namespace hatkit {

std::string to_string(HatConclusion conclusion)
{
  switch (conclusion) {
  case HatConclusion::half_arc_transitive_action:
    return "half_arc_transitive_action";
  case HatConclusion::fails_generation:
    return "fails_generation";
  case HatConclusion::fails_valency:
    return "fails_valency";
  case HatConclusion::fails_asymmetry:
    return "fails_asymmetry";
  }
  return "unknown";
}

HatCertificate certify_hat_action(PermGroup const &x, EnumeratedSubgroup const &y,
                                  Permutation const &s)
{
  if (s.degree() != x.degree() || y.degree() != x.degree())
    throw std::invalid_argument("certify_hat_action: degree mismatch");
  if (y.contains(s))
    throw std::invalid_argument("certify_hat_action: s lies in Y");

  HatCertificate cert;
  auto gens = y.group().generators();
  gens.push_back(s);
  bool inside = x.contains(s);
  for (auto const &g : y.group().generators())
    inside = inside && x.contains(g);
  cert.generated_order = schreier_sims(gens, x.degree()).order();
  cert.ambient_order = x.order();
  cert.generation_ok = inside && cert.generated_order == cert.ambient_order;

  auto const s_inv = inverse(s);
  // Y ∩ s^-1 Y s has the same order as Y ∩ s Y s^-1 conjugated by s^-1.
  cert.intersection_index = y.order() / conjugate_intersection_order(y, s_inv);
  cert.asymmetry_ok = !double_coset_contains(y, s, s_inv);
  cert.double_coset_size = double_coset_size(y, s);
  cert.inverse_double_coset_size = double_coset_size(y, s_inv);

  Permutation const pair[] = {s, s_inv};
  cert.valency = static_cast<std::size_t>(union_double_coset_size(y, pair) / y.order());

  if (!cert.generation_ok)
    cert.conclusion = HatConclusion::fails_generation;
  else if (cert.intersection_index != 2)
    cert.conclusion = HatConclusion::fails_valency;
  else if (!cert.asymmetry_ok)
    cert.conclusion = HatConclusion::fails_asymmetry;
  else
    cert.conclusion = HatConclusion::half_arc_transitive_action;
  return cert;
}

HatCertificate certify_hat_action(PermGroup const &x, PermGroup const &y, Permutation const &s,
                                  std::size_t bound)
{
  return certify_hat_action(x, EnumeratedSubgroup(y, bound), s);
}

} // namespace hatkit

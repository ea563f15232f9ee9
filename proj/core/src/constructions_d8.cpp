#include <string>

#include "hatkit/constructions.hpp"
#include "hatkit/double_coset.hpp"
#include "hatkit/group_invariants.hpp"
#include "hatkit/presets.hpp"

namespace hatkit {

namespace {

struct D8Data
{
  PermGroup ambient;
  PermGroup subgroup;
  Permutation s;
  Permutation s_inverse;
};

D8Data load_d8_data()
{
  auto const ambient = preset_group("groups/d8_in_a10_ambient.grp");
  auto const subgroup = preset_group("groups/d8_in_a10_subgroup.grp");
  auto const reps = preset_group("groups/d8_in_a10_reps.grp");
  return {PermGroup(ambient.degree, ambient.generators),
          PermGroup(subgroup.degree, subgroup.generators), reps.generators.at(0),
          reps.generators.at(1)};
}

std::string sizes_string(std::vector<std::size_t> const &sizes)
{
  std::string out = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i)
    out += (i ? "," : "") + std::to_string(sizes[i]);
  return out + "]";
}

} // namespace

ExampleArtifacts example_d8()
{
  auto data = load_d8_data();
  ExampleArtifacts out;
  out.name = "d8";
  out.report = Report("D8 in A10");
  auto &r = out.report;

  r.check("reps_are_inverse", data.s * data.s_inverse == Permutation(10),
          "shipped representatives are s and s^-1");
  r.check("s_even", parity(data.s) == Parity::even, "s = " + to_cycle_string(data.s));

  auto gens = data.subgroup.generators();
  gens.push_back(data.s);
  auto generated = schreier_sims(gens, 10);
  r.check("natural_alternating", is_natural_alternating(generated),
          "<H, s> has order " + to_string(generated.order()));

  EnumeratedSubgroup const h(data.subgroup);
  auto const cert = certify_hat_action(data.ambient, h, data.s);
  r.check("generation", cert.generation_ok,
          "|<H, s>| = " + to_string(cert.generated_order) + ", |A10| = " +
            to_string(cert.ambient_order));
  r.check("intersection_index", cert.intersection_index == 2,
          "|H : H ∩ s^-1 H s| = " + std::to_string(cert.intersection_index));
  r.check("asymmetry", cert.asymmetry_ok, "s^-1 not in HsH");
  r.check("inverse_double_coset_sizes", cert.double_coset_size == cert.inverse_double_coset_size,
          "|HsH| = " + to_string(cert.double_coset_size) + ", |Hs^-1H| = " +
            to_string(cert.inverse_double_coset_size));
  r.check("valency", cert.valency == 4, std::to_string(cert.valency));
  r.check("conclusion", cert.holds(), to_string(cert.conclusion));

  auto const fp = fingerprint(data.subgroup);
  r.check("stabilizer_d8", fp.order == 8 && !fp.abelian && fp.exponent == 4,
          "order " + to_string(fp.order) + (fp.abelian ? ", abelian" : ", nonabelian") +
            ", exponent " + std::to_string(fp.exponent));

  Permutation const pair[] = {data.s, data.s_inverse};
  auto const parts = right_coset_representatives(h, pair);
  auto const orbits = neighborhood_orbits(h, parts);
  r.check("neighborhood_orbits", orbits == std::vector<std::size_t>{2, 2},
          sizes_string(orbits));
  r.note("the intersection index is read as |H : H ∩ s^-1 H s|");

  out.certificate = cert;
  out.groups.emplace("G", data.ambient);
  out.groups.emplace("H", data.subgroup);
  out.elements.emplace("s", data.s);
  return out;
}

CosetGraph build_sigma_d8(std::size_t max_vertices)
{
  auto const data = load_d8_data();
  Permutation const reps[] = {data.s, data.s_inverse};
  return build_coset_graph(data.ambient, data.subgroup, reps, max_vertices);
}

} // namespace hatkit

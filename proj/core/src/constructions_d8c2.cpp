#include <algorithm>
#include <stdexcept>
#include <string>

#include "hatkit/constructions.hpp"
#include "hatkit/double_coset.hpp"
#include "hatkit/errors.hpp"
#include "hatkit/group_invariants.hpp"
#include "hatkit/todd_coxeter.hpp"

namespace hatkit {

namespace {

void check_rank(std::size_t m)
{
  if (m < 4 || m > 8)
    throw std::out_of_range("D8 x C2^(m-3) construction: m must be in 4..8, got " +
                            std::to_string(m));
}

Word commutator(std::size_t i, std::size_t j)
{
  return Word::generator(i, -1) * Word::generator(j, -1) * Word::generator(i) *
         Word::generator(j);
}

// An element map given by generator images, extended through normal forms.
class NormalFormMap
{
public:
  NormalFormMap(D8C2Group const &g, std::vector<std::uint32_t> images)
  : _g(g), _images(std::move(images))
  {}

  std::uint32_t operator()(std::uint32_t p) const
  {
    auto const i = p & 3u;
    auto const j = (p >> 2) & 1u;
    auto const v = p >> 3;
    std::uint32_t result = 0;
    for (std::uint32_t k = 0; k < i; ++k)
      result = _g.multiply(result, _images[0]);
    if (j)
      result = _g.multiply(result, _images[1]);
    for (std::size_t k = 0; k < _g.c_count(); ++k) {
      if (v >> k & 1u)
        result = _g.multiply(result, _images[2 + k]);
    }
    return result;
  }

private:
  D8C2Group const &_g;
  std::vector<std::uint32_t> _images;
};

// tau on K, extended through a^(2i) b^j c^v.
class KMap
{
public:
  KMap(D8C2Group const &g, std::vector<std::uint32_t> images)
  : _g(g), _images(std::move(images))
  {}

  std::uint32_t operator()(std::uint32_t p) const
  {
    std::uint32_t result = 0;
    if (p & 2u)
      result = _g.multiply(result, _images[0]);
    if ((p >> 2) & 1u)
      result = _g.multiply(result, _images[1]);
    auto const v = p >> 3;
    for (std::size_t k = 0; k < _g.c_count(); ++k) {
      if (v >> k & 1u)
        result = _g.multiply(result, _images[2 + k]);
    }
    return result;
  }

private:
  D8C2Group const &_g;
  std::vector<std::uint32_t> _images;
};

Permutation transposition(std::size_t degree, Point p, Point q)
{
  return Permutation::from_cycles(degree, {{p, q}});
}

std::string sizes_string(std::vector<std::size_t> const &sizes)
{
  std::string out = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i)
    out += (i ? "," : "") + std::to_string(sizes[i]);
  return out + "]";
}

} // namespace

D8C2Group::D8C2Group(std::size_t m)
: _m(m)
{
  check_rank(m);
}

std::uint32_t D8C2Group::multiply(std::uint32_t g, std::uint32_t h) const
{
  auto const i = g & 3u;
  auto const j = (g >> 2) & 1u;
  auto const k = h & 3u;
  auto const l = (h >> 2) & 1u;
  // b a^k = a^-k b.
  auto const ni = (i + (j ? 4u - k : k)) & 3u;
  return ni | ((j ^ l) << 2) | (((g >> 3) ^ (h >> 3)) << 3);
}

std::uint32_t D8C2Group::inverse(std::uint32_t g) const
{
  for (std::uint32_t h = 0; h < order(); ++h) {
    if (multiply(g, h) == 0)
      return h;
  }
  throw std::logic_error("D8C2Group: element without inverse");
}

std::uint32_t D8C2Group::c(long k) const
{
  if (k <= 0)
    return 0;
  if (static_cast<std::size_t>(k) > c_count())
    throw std::out_of_range("D8C2Group: no generator c_" + std::to_string(k));
  return 8u << (k - 1);
}

Permutation D8C2Group::regular(std::uint32_t g) const
{
  std::vector<Point> images(order());
  for (std::uint32_t p = 0; p < order(); ++p)
    images[p] = multiply(p, g);
  return Permutation::from_images(std::move(images));
}

std::string D8C2Group::label(std::uint32_t g) const
{
  std::string out;
  auto const i = g & 3u;
  if (i == 1)
    out += "a";
  else if (i > 1)
    out += "a^" + std::to_string(i);
  if ((g >> 2) & 1u)
    out += "b";
  for (std::size_t k = 0; k < c_count(); ++k) {
    if ((g >> 3) >> k & 1u)
      out += "c" + std::to_string(k + 1);
  }
  return out.empty() ? "1" : out;
}

Presentation D8C2Group::presentation() const
{
  std::size_t const gens = 2 + c_count();
  std::vector<Word> relators{Word::generator(0, 4), Word::generator(1, 2),
                             (Word::generator(0) * Word::generator(1)).power(2)};
  for (std::size_t k = 2; k < gens; ++k) {
    relators.push_back(Word::generator(k, 2));
    for (std::size_t j = 0; j < k; ++j)
      relators.push_back(commutator(j, k));
  }
  return Presentation(gens, std::move(relators));
}

Presentation D8C2Group::k_presentation() const
{
  std::size_t const gens = 2 + c_count();
  std::vector<Word> relators;
  for (std::size_t k = 0; k < gens; ++k) {
    relators.push_back(Word::generator(k, 2));
    for (std::size_t j = 0; j < k; ++j)
      relators.push_back(commutator(j, k));
  }
  return Presentation(gens, std::move(relators));
}

D8C2Data d8c2_data(std::size_t m)
{
  D8C2Group const g(m);
  auto const mul = [&](std::uint32_t p, std::uint32_t q) { return g.multiply(p, q); };
  auto const a = g.a();
  auto const b = g.b();
  auto const a2 = mul(a, a);
  auto const c = [&](long k) { return g.c(k); };
  long const n = static_cast<long>(m);
  long const last_pair = n >= 5 ? (n - 5) / 2 : -1; // floor((m-5)/2)

  D8C2Data d;
  d.m = m;
  d.x_images = {g.inverse(a), mul(a, b)};
  d.tau_images = {b, a2};
  for (long k = 1; k <= n - 3; ++k) {
    d.x_images.push_back(c(k));
    d.tau_images.push_back(c(k));
  }
  for (long i = 0; i <= last_pair; ++i) {
    d.x_images[2 + 2 * i] = c(2 * i + 1);
    d.x_images[2 + 2 * i + 1] = mul(mul(a2, c(2 * i + 1)), c(2 * i + 2));
    d.tau_images[2 + 2 * i] = mul(mul(c(2 * i - 1), c(2 * i)), c(2 * i + 2));
    d.tau_images[2 + 2 * i + 1] = mul(mul(c(2 * i - 1), c(2 * i)), c(2 * i + 1));
  }
  if (m % 2 == 0) {
    d.x_images[2 + (n - 4)] = mul(a2, c(n - 3));
    d.tau_images[2 + (n - 4)] = c(n - 3);
  }

  d.h = a;
  for (long i = 0; i <= (n - 4) / 2; ++i) // ceil((m-5)/2) for m >= 4
    d.h = mul(d.h, c(2 * i + 1));
  d.y_twist = m % 2 == 0 ? c(n - 3) : 0;
  d.z_twist = d.y_twist;
  return d;
}

std::vector<D8C2Mutation> d8c2_mutations(std::size_t m)
{
  auto const base = d8c2_data(m);
  D8C2Group const g(m);
  auto const n = static_cast<std::uint32_t>(g.order());
  std::vector<D8C2Mutation> out;
  using Kind = D8C2Mutation::Kind;
  auto add = [&](Kind kind, std::string description, D8C2Data data) {
    D8C2Mutation mut;
    mut.kind = kind;
    mut.description = std::move(description);
    mut.data = std::move(data);
    out.push_back(std::move(mut));
  };

  static char const *const x_names[] = {"a", "b"};
  for (std::size_t k = 0; k < base.x_images.size(); ++k) {
    auto const gen = k < 2 ? std::string(x_names[k]) : "c" + std::to_string(k - 1);
    for (std::uint32_t e = 0; e < n; ++e) {
      if (e == base.x_images[k])
        continue;
      auto d = base;
      d.x_images[k] = e;
      add(Kind::x_image, "x: " + gen + " -> " + g.label(e), d);
    }
  }
  static char const *const k_names[] = {"a^2", "b"};
  for (std::size_t k = 0; k < base.tau_images.size(); ++k) {
    auto const gen = k < 2 ? std::string(k_names[k]) : "c" + std::to_string(k - 1);
    for (std::uint32_t e = 0; e < n; e += 2) {
      if (e == base.tau_images[k])
        continue;
      auto d = base;
      d.tau_images[k] = e;
      add(Kind::tau_image, "tau: " + gen + " -> " + g.label(e), d);
    }
  }
  for (std::uint32_t e = 0; e < n; ++e) {
    if (e != base.h) {
      auto d = base;
      d.h = e;
      add(Kind::h, "h -> " + g.label(e), d);
    }
    if (e != base.y_twist) {
      auto d = base;
      d.y_twist = e;
      add(Kind::y_twist, "y twist -> " + g.label(e), d);
    }
    if (e != base.z_twist) {
      auto d = base;
      d.z_twist = e;
      add(Kind::z_twist, "z twist -> " + g.label(e), d);
    }
  }

  auto const relator_count = g.presentation().relators().size();
  for (std::size_t r = 0; r < relator_count; ++r) {
    D8C2Mutation mut;
    mut.kind = Kind::relator;
    mut.description = "relator " + std::to_string(r + 1) + " squared";
    mut.data = base;
    mut.squared_relator = r;
    out.push_back(std::move(mut));
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> const swaps{
    {0, 1}, {1, 2}, {2, 3}, {1, n - 1}, {n / 2, n - 1}, {3, n / 2 + 1}};
  for (char const which : {'x', 'y', 'z'}) {
    for (auto const &[p, q] : swaps) {
      D8C2Mutation mut;
      mut.kind = Kind::transposition;
      mut.description = std::string(1, which) + " composed with (" + g.label(p) + " " +
                        g.label(q) + ")";
      mut.data = base;
      mut.permutation = which;
      mut.swap_first = p;
      mut.swap_second = q;
      out.push_back(std::move(mut));
    }
  }
  return out;
}

ExampleArtifacts example_d8_c2(std::size_t m)
{
  return example_d8_c2(d8c2_data(m));
}

ExampleArtifacts example_d8_c2(D8C2Data const &data)
{
  D8C2Mutation mut;
  mut.data = data;
  return example_d8_c2(mut);
}

ExampleArtifacts example_d8_c2(D8C2Mutation const &mutation)
{
  auto const &data = mutation.data;
  std::size_t const m = data.m;
  D8C2Group const g(m);
  std::size_t const n = g.order();
  auto const mul = [&](std::uint32_t p, std::uint32_t q) { return g.multiply(p, q); };

  ExampleArtifacts out;
  out.name = "d8c2 m=" + std::to_string(m);
  out.report = Report("D8 x C2^" + std::to_string(m - 3) + " (m=" + std::to_string(m) + ")");
  auto &r = out.report;

  // The presentation and the normal-form multiplication describe one group.
  auto presentation = g.presentation();
  if (mutation.squared_relator) {
    auto relators = presentation.relators();
    auto &rel = relators.at(*mutation.squared_relator);
    rel = rel.power(2);
    presentation = Presentation(presentation.generator_count(), std::move(relators));
  }
  std::vector<Permutation> gen_images{g.regular(g.a()), g.regular(g.b())};
  for (std::size_t k = 1; k <= g.c_count(); ++k)
    gen_images.push_back(g.regular(g.c(static_cast<long>(k))));
  std::size_t enumerated = 0;
  try {
    enumerated = todd_coxeter(presentation, {}, 64 * n).coset_count;
  } catch (BudgetExceeded const &) {
  }
  r.check("presentation_order", enumerated == n && verify_homomorphism(presentation, gen_images),
          enumerated ? "|H| = " + std::to_string(enumerated) : "enumeration exceeded its bound");

  auto const rh = schreier_sims(gen_images, n);
  std::vector<Permutation> k_gens{g.regular(mul(g.a(), g.a())), g.regular(g.b())};
  for (std::size_t k = 1; k <= g.c_count(); ++k)
    k_gens.push_back(g.regular(g.c(static_cast<long>(k))));
  auto const rk = schreier_sims(k_gens, n);
  out.groups.emplace("R(H)", rh);
  out.groups.emplace("R(K)", rk);

  r.check("h_outside_k", !g.in_k(data.h), "h = " + g.label(data.h));

  // x as an element map.
  NormalFormMap const x_map(g, data.x_images);
  std::vector<Point> x_images(n);
  std::vector<bool> hit(n, false);
  for (std::uint32_t p = 0; p < n; ++p) {
    x_images[p] = x_map(p);
    hit[x_images[p]] = true;
  }
  bool x_hom = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  for (std::uint32_t p = 0; p < n && x_hom; ++p) {
    for (std::uint32_t q = 0; q < n && x_hom; ++q)
      x_hom = x_images[mul(p, q)] == mul(x_images[p], x_images[q]);
  }
  std::vector<Permutation> x_gen_images;
  for (auto const e : data.x_images)
    x_gen_images.push_back(g.regular(e));
  bool const x_relations = verify_homomorphism(g.presentation(), x_gen_images) &&
                           schreier_sims(x_gen_images, n).order() == n;
  r.check("x_automorphism", x_hom && x_relations,
          "images satisfy the relations and generate H");

  // tau on K.
  KMap const tau(g, data.tau_images);
  bool tau_ok = std::all_of(data.tau_images.begin(), data.tau_images.end(),
                            [&](std::uint32_t e) { return g.in_k(e); });
  std::vector<bool> k_hit(n, false);
  for (std::uint32_t p = 0; p < n && tau_ok; p += 2)
    k_hit[tau(p)] = true;
  for (std::uint32_t p = 0; p < n && tau_ok; p += 2)
    tau_ok = k_hit[p];
  std::vector<Permutation> tau_gen_images;
  for (auto const e : data.tau_images)
    tau_gen_images.push_back(g.regular(e));
  tau_ok = tau_ok && verify_homomorphism(g.k_presentation(), tau_gen_images) &&
           schreier_sims(tau_gen_images, n).order() == n / 2;
  r.check("tau_automorphism", tau_ok, "images lie in K, satisfy the relations and generate K");

  // y: g^y = g^tau and (hg)^y = h g^tau twist for g in K.
  if (g.in_k(data.h)) {
    r.check("y_defined", false, "h lies in K, so H = K ⊔ hK fails");
    return out;
  }
  auto const h_inv = g.inverse(data.h);
  std::vector<Point> y_images(n);
  std::fill(hit.begin(), hit.end(), false);
  for (std::uint32_t p = 0; p < n; ++p) {
    y_images[p] = g.in_k(p) ? tau(p) : mul(mul(data.h, tau(mul(h_inv, p))), data.y_twist);
    hit[y_images[p]] = true;
  }
  bool const y_bijective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  r.check("y_defined", y_bijective, "y permutes H");
  if (!x_hom || !y_bijective)
    return out;

  auto x = Permutation::from_images(std::move(x_images));
  auto y = Permutation::from_images(std::move(y_images));
  auto const twist = [&](char which, Permutation &p) {
    if (mutation.permutation == which)
      p = p * transposition(n, mutation.swap_first, mutation.swap_second);
  };
  twist('x', x);
  twist('y', y);
  auto z = g.regular(data.h) * y * g.regular(mul(h_inv, data.z_twist));
  twist('z', z);

  Permutation const identity(n);
  r.check("x_involution", x * x == identity && !x.is_identity());
  r.check("y_involution", y * y == identity && !y.is_identity());
  r.check("z_involution", z * z == identity && !z.is_identity());
  r.check("x_even", parity(x) == Parity::even);
  r.check("y_even", parity(y) == Parity::even);
  r.check("z_even", parity(z) == Parity::even);
  r.check("fix_identity", x[0] == 0 && y[0] == 0 && z[0] == 0, "x, y, z fix 1");
  r.check("x_normalizes_rh", same_group(conjugate_subgroup(rh, x), rh));
  r.check("y_normalizes_rk", same_group(conjugate_subgroup(rk, y), rk));

  auto const xy = x * y;
  auto const yx = y * x;
  auto const xz = x * z;
  auto const zx = z * x;
  auto const a = g.a();
  auto const a2 = mul(a, a);
  auto const b = g.b();
  auto const fingerprint_check = [&](char const *name, Permutation const &p,
                                     std::uint32_t expected) {
    r.check(name, p[a2] == expected,
            "(a^2)^" + std::string(name).substr(9) + " = " + g.label(p[a2]) + ", expected " +
              g.label(expected));
  };
  fingerprint_check("image_a2_xy", xy, b);
  fingerprint_check("image_a2_yx", yx, mul(a, b));
  fingerprint_check("image_a2_xz", xz, mul(a2, b));
  fingerprint_check("image_a2_zx", zx, mul(mul(a2, a), b));

  EnumeratedSubgroup const rh_enum(rh);
  Permutation const xy_parts[] = {xy, xz};
  Permutation const yx_parts[] = {yx, zx};
  r.check("decomposition_xy", coset_decomposition_check(rh_enum, xy, xy_parts),
          "R(H)xyR(H) = R(H)xy ⊔ R(H)xz");
  r.check("decomposition_yx", coset_decomposition_check(rh_enum, yx, yx_parts),
          "R(H)yxR(H) = R(H)yx ⊔ R(H)zx");
  auto const size_xy = double_coset_size(rh_enum, xy);
  auto const size_yx = double_coset_size(rh_enum, yx);
  r.check("double_coset_sizes", size_xy == 2 * n && size_yx == 2 * n,
          "|R(H)xyR(H)| = " + to_string(size_xy) + ", |R(H)yxR(H)| = " + to_string(size_yx));
  Permutation const pair[] = {xy, yx};
  auto const total = union_double_coset_size(rh_enum, pair);
  r.check("union_size", total == 4 * n,
          "|R(H){xy,yx}R(H)| = " + to_string(total) + ", 4*2^m = " + std::to_string(4 * n));

  out.elements.emplace("x", x);
  out.elements.emplace("y", y);
  out.elements.emplace("z", z);
  out.elements.emplace("R(h)", g.regular(data.h));
  return out;
}

Report verify_d8c2_action(std::size_t m)
{
  D8C2Mutation mut;
  mut.data = d8c2_data(m);
  return verify_d8c2_action(mut);
}

Report verify_d8c2_action(D8C2Mutation const &mutation)
{
  std::size_t const m = mutation.data.m;
  auto art = example_d8_c2(mutation);
  Report r("half-arc-transitive action of A_" + std::to_string(std::size_t{1} << m) +
           " with stabilizer D8 x C2^" + std::to_string(m - 3));
  r.merge(art.report);
  if (!art.elements.contains("x")) {
    r.check("construction_complete", false, "x, y or z could not be built");
    return r;
  }
  std::size_t const n = std::size_t{1} << m;
  auto const &x = art.elements.at("x");
  auto const &y = art.elements.at("y");
  auto const &z = art.elements.at("z");
  auto const &rh = art.groups.at("R(H)");
  auto const xy = x * y;
  auto const xz = x * z;
  auto const yx = y * x;
  auto const zx = z * x;

  bool alt = false;
  if (xy[0] == 0 && xz[0] == 0) {
    Permutation const gens[] = {restrict_to_interval(xy, 1, n - 1),
                                restrict_to_interval(xz, 1, n - 1)};
    alt = is_natural_alternating(n - 1, gens);
  }
  r.check("alt_generation", alt, "<xy, xz> = Alt(H \\ {1}) on " + std::to_string(n - 1) +
                                   " points");

  EnumeratedSubgroup const rh_enum(rh);
  Permutation const parts[] = {xy, xz, yx, zx};
  std::vector<std::size_t> orbits;
  std::string orbit_detail;
  try {
    orbits = neighborhood_orbits(rh_enum, parts);
    orbit_detail = sizes_string(orbits);
  } catch (std::invalid_argument const &e) {
    orbit_detail = e.what();
  }
  r.check("neighborhood_orbits", orbits == std::vector<std::size_t>{2, 2}, orbit_detail);

  Permutation const pair[] = {xy, yx};
  auto const valency = union_double_coset_size(rh_enum, pair) / n;
  r.check("valency", valency == 4, to_string(valency));

  auto const fp = fingerprint(rh);
  r.check("stabilizer_fingerprint",
          fp.order == n && fp.derived_order == 2 && fp.exponent == 4 &&
            fp.center_order == n / 4,
          "order " + to_string(fp.order) + ", derived " + to_string(fp.derived_order) +
            ", exponent " + std::to_string(fp.exponent) + ", center " +
            to_string(fp.center_order));

  auto const cert = certify_hat_action(alternating_group(n), rh_enum, xy);
  r.check("certificate", cert.holds(),
          to_string(cert.conclusion) +
            (cert.generation_ok ? ", <R(H), xy> = A_" + std::to_string(n)
                                : ", <R(H), xy> of order " + to_string(cert.generated_order)));
  r.note("verified via local conditions; the coset graph is not built");
  return r;
}

} // namespace hatkit

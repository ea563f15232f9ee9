#ifndef HATKIT_CONSTRUCTIONS_HPP
#define HATKIT_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hatkit/coset_graph.hpp"
#include "hatkit/hat_certificate.hpp"
#include "hatkit/perm_group.hpp"
#include "hatkit/presentation.hpp"
#include "hatkit/report.hpp"

namespace hatkit {

/// The groups, special elements and checks of one worked construction.
struct ExampleArtifacts
{
  std::string name;
  std::map<std::string, PermGroup> groups;
  std::map<std::string, Permutation> elements;
  std::optional<HatCertificate> certificate;
  Report report;
};

// --- D8 inside A10 ----------------------------------------------------------

/// H = <(1,2,3,4)(5,6,7,8), (1,4)(2,3)(5,7)(9,10)> and
/// s = (1,8,10)(2,7,4,6,9,3,5) in A10, read from the shipped group files.
ExampleArtifacts example_d8();

/// Cos(A10, H, H{s, s^-1}H): 226800 vertices, tetravalent.
CosetGraph build_sigma_d8(std::size_t max_vertices = kDefaultMaxVertices);

// --- The shift-symmetric family of 2-groups ---------------------------------

/// Presentation on involutions a_1..a_m (m >= 7) with (a_i a_j)^2 = 1 for
/// |i-j| <= m-3, (a_1 a_(m-1))^2 = a_3, (a_2 a_m)^2 = a_4 and
/// (a_1 a_m)^2 = a_(m-2). m = 7 gives H7 and m = 8 gives H7 x C2.
Presentation shift_family_presentation(std::size_t m);

/// H7 x C2 on eight generators: Todd-Coxeter, the shift isomorphism
/// B = <a_1..a_7> -> C = <a_2..a_8>, the permutation x of H with b^x = b^phi
/// and (a_8 b)^x = a_1 a_2 b^phi, and the conditions <R(H), x> = Alt(H),
/// x^-1 R(H) x = R(C), x^-1 not in R(H) x R(H).
ExampleArtifacts example_h7c2();

/// The same construction for the family member of rank m in {7, 8}. The
/// report states each condition's value; it asserts nothing in advance.
/// Throws std::out_of_range for other m.
ExampleArtifacts conjecture_experiment(std::size_t m);

/// Shared worker: the construction above for any shift-symmetric
/// presentation on m generators.
ExampleArtifacts shift_construction(std::string name, Presentation const &presentation);

// --- D8 x C2^(m-3) ----------------------------------------------------------

/// The defining data of the D8 x C2^(m-3) construction as element indices
/// in the normal form a^i b^j c^v -> i + 4j + 8v (v a bit mask of c_1..).
struct D8C2Data
{
  std::size_t m = 4;
  std::vector<std::uint32_t> x_images;   // images of a, b, c_1, ..., c_(m-3)
  std::vector<std::uint32_t> tau_images; // images of a^2, b, c_1, ..., c_(m-3)
  std::uint32_t h = 0;
  std::uint32_t y_twist = 0; // right factor in (hg)^y = h g^tau y_twist
  std::uint32_t z_twist = 0; // z = R(h) y R(h^-1 z_twist)
};

/// The unmodified data; throws std::out_of_range unless 4 <= m <= 8.
D8C2Data d8c2_data(std::size_t m);

/// Group of normal forms a^i b^j c^v with index i + 4j + 8v.
class D8C2Group
{
public:
  explicit D8C2Group(std::size_t m);

  std::size_t m() const { return _m; }
  std::size_t order() const { return std::size_t{1} << _m; }
  std::size_t c_count() const { return _m - 3; }

  std::uint32_t multiply(std::uint32_t g, std::uint32_t h) const;
  std::uint32_t inverse(std::uint32_t g) const;
  std::uint32_t a() const { return 1; }
  std::uint32_t b() const { return 4; }
  /// c_k for 1 <= k <= m-3 and the identity for k <= 0.
  std::uint32_t c(long k) const;
  bool in_k(std::uint32_t g) const { return g % 2 == 0; }

  /// Right multiplication p -> p g.
  Permutation regular(std::uint32_t g) const;

  std::string label(std::uint32_t g) const;

  /// a^4, b^2, (ab)^2, c_k^2 and all commutators except [a, b].
  Presentation presentation() const;

  /// K = <a^2, b, c_1, ...> as an elementary abelian presentation.
  Presentation k_presentation() const;

private:
  std::size_t _m;
};

/// What to change in the construction before checking it: a data entry, a
/// relator of the presentation, or the final permutation x, y or z composed
/// with a transposition (p q).
struct D8C2Mutation
{
  enum class Kind
  {
    none,
    x_image,
    tau_image,
    h,
    y_twist,
    z_twist,
    relator,
    transposition,
  };

  Kind kind = Kind::none;
  std::string description;
  D8C2Data data;
  /// Index of a relator of the presentation replaced by its square.
  std::optional<std::size_t> squared_relator;
  char permutation = 0; // 'x', 'y' or 'z' for a transposition twist
  std::uint32_t swap_first = 0;
  std::uint32_t swap_second = 0;
};

/// Every single-entry mutation of the data for rank m: each generator image
/// of x and tau replaced by each other element (within K for tau), h and the
/// twists replaced, each relator squared, and x, y, z each composed with a
/// few transpositions. Some replacements of h by another element of hK give
/// a different construction that is still valid.
std::vector<D8C2Mutation> d8c2_mutations(std::size_t m);

/// The construction and its algebraic checks (involutions, parity,
/// automorphisms, fingerprints of a^2, double-coset decompositions).
ExampleArtifacts example_d8_c2(std::size_t m);
ExampleArtifacts example_d8_c2(D8C2Data const &data);
ExampleArtifacts example_d8_c2(D8C2Mutation const &mutation);

/// The local conditions giving a half-arc-transitive action of A_(2^m) on
/// Cos(Alt(H), R(H), R(H){xy, yx}R(H)) with vertex stabilizer R(H):
/// <xy, xz> = Alt(H \ {1}), neighborhood orbits [2, 2], valency 4 and the
/// D8 x C2^(m-3) fingerprint of R(H). The graph is never built.
Report verify_d8c2_action(std::size_t m);
Report verify_d8c2_action(D8C2Mutation const &mutation);

} // namespace hatkit

#endif // HATKIT_CONSTRUCTIONS_HPP

#pragma once

#include "qlift/lifting.hpp"
#include "qlift/tensor.hpp"

namespace qlift {

// Monomial of the degree-capped free smash product T(V) # kG: a free word in
// the generators with a group element on the right.
struct FreeMono {
    TensorWord w;
    GrpElt g;
    bool operator==(const FreeMono& o) const { return w == o.w && g.e == o.g.e; }
    bool operator<(const FreeMono& o) const {
        if (w != o.w) return w < o.w;
        return g.e < o.g.e;
    }
};
using FreeElt = std::map<FreeMono, Scalar>;
using FreeElt2 = std::map<std::pair<FreeMono, FreeMono>, Scalar>;

void free_add(FreeElt& dst, const FreeMono& m, const Scalar& c);
void free_add(FreeElt& dst, const FreeElt& src, const Scalar& c);

// The truncated graded ambient algebra for the K(D) machinery: free words in
// x_i times G, no power truncation, products beyond the degree cap raise
// ResourceError instead of truncating silently.
class FreeSmash {
  public:
    FreeSmash(const Datum& d, long degree_cap) : d_(d), cap_(degree_cap) {}

    const Datum& datum() const { return d_; }
    long cap() const { return cap_; }

    FreeElt mul(const FreeMono& a, const FreeMono& b) const;
    FreeElt mul(const FreeElt& a, const FreeElt& b) const;
    FreeElt2 delta(const FreeMono& m) const;  // smash coproduct
    FreeElt2 delta(const FreeElt& e) const;
    FreeElt antipode(const FreeMono& m) const;
    FreeElt antipode(const FreeElt& e) const;
    Scalar counit(const FreeElt& e) const;

    FreeElt generator(long i) const;
    FreeElt group_elt(const GrpElt& g) const;
    FreeElt one() const { return group_elt(d_.group().identity()); }
    // z_i = x_i^{N_i} and z_ij = [x_i, x_j]_c as ambient elements
    FreeElt z_power(long i) const;
    FreeElt z_linking(long i, long j) const;

  private:
    const Datum& d_;
    long cap_;
};

// default ambient cap: 2 max(N_i) theta + 2
long default_degree_cap(const Datum& d);

// K(D) # kG with its z-monomial basis, coordinates, coproduct and antipode
// caches, the Alg_G(K, k) parameter group, Theta, and u_a.
class KAlgebra {
  public:
    struct ZGen {
        std::string name;  // "z1", "z12", ...
        bool linking = false;
        long i = 0, j = 0;  // generator indices (i only for powers)
        GrpElt grp;         // h_i or g_i g_j
        Character eta;      // eta_i or chi_i chi_j
        FreeElt elt;
    };

    // Inside the free ambient the z-generators do not q-commute, so the
    // basis of K(D) consists of noncommutative words in the generators;
    // commutative multi-exponents name the canonical-order
    // words z_1^{a_1} z_2^{a_2} ... . height_cap bounds the word length.
    KAlgebra(const Datum& d, long degree_cap, long height_cap = 4);

    const FreeSmash& ambient() const { return smash_; }
    const Datum& datum() const { return d_; }
    const std::vector<ZGen>& gens() const { return gens_; }

    // basis words (sequences of generator indices); index 0 is the empty word
    const std::vector<std::vector<long>>& zwords() const { return zwords_; }
    long zword_index(const std::vector<long>& word) const;
    // canonical-order word of a commutative multi-exponent
    std::vector<long> canonical_word(const std::vector<long>& exp) const;
    long zmono_index(const std::vector<long>& exp) const;  // index of the canonical word
    long height(const std::vector<long>& exp) const;
    const FreeElt& zmono_elt(long idx) const { return zelts_[idx]; }
    GrpElt h_of_word(const std::vector<long>& word) const;
    GrpElt h_of(const std::vector<long>& exp) const;  // h^a

    // coordinates of an ambient element in the K # kG basis (zmono, group);
    // throws MathError when the element is outside the span
    std::map<std::pair<long, GrpElt>, Scalar> coords(const FreeElt& e) const;

    // coalgebra structure in K-coordinates (cached per basis element)
    using KKey = std::pair<long, GrpElt>;
    const std::map<std::pair<KKey, KKey>, Scalar>& delta_k(const KKey& k) const;
    const std::map<KKey, Scalar>& antipode_k(const KKey& k) const;

    // t^a_{bc} from Delta(z^a) (coefficient of z^b h^c (x) z^c)
    Scalar t_coefficient(const std::vector<long>& a, const std::vector<long>& b,
                         const std::vector<long>& c) const;

  private:
    const Datum& d_;
    FreeSmash smash_;
    std::vector<ZGen> gens_;
    std::vector<std::vector<long>> zwords_;
    std::vector<FreeElt> zelts_;
    std::map<std::vector<long>, long> zindex_;
    // word-coordinate echelon for the span of z-monomial expansions
    std::map<TensorWord, long> word_col_;
    std::vector<std::map<long, Scalar>> reduced_;  // echelon rows over word columns
    std::vector<long> pivot_;
    std::vector<std::map<long, Scalar>> history_;  // zmono coordinates of each row
    mutable std::map<KKey, std::map<std::pair<KKey, KKey>, Scalar>> delta_cache_;
    mutable std::map<KKey, std::map<KKey, Scalar>> antipode_cache_;
};

// G-invariant algebra map K(D) -> k, determined by its values on the
// z-generators (zero is forced where eta != eps), extended multiplicatively.
class AlgGMap {
  public:
    AlgGMap(const KAlgebra& K, std::vector<Scalar> gen_values);  // validates constraints
    static AlgGMap counit(const KAlgebra& K);

    const std::vector<Scalar>& gen_values() const { return v_; }
    Scalar on_zmono(long idx) const;                       // f(z^a) = prod f(gen)^a
    Scalar on_key(const KAlgebra::KKey& k) const;          // f~(z^a g) = f(z^a)
    Scalar eval(const FreeElt& e) const;                   // f~ on a span element
    Scalar eval_antipode(const FreeElt& e) const;          // f~ o s

    AlgGMap convolve(const AlgGMap& o) const;  // group law of Alg_G(K, k)
    AlgGMap antipode_dual() const;             // f o s (the convolution inverse)

  private:
    const KAlgebra* K_;
    std::vector<Scalar> v_;
};

// Theta(f) = f~ * 1 * f~s as an automorphism of K # kG, evaluated on span
// elements of the ambient.
FreeElt theta(const KAlgebra& K, const AlgGMap& f, const FreeElt& e);

// the group-algebra element u_a(f), by induction on the height
using GroupEltCombo = std::map<GrpElt, Scalar>;
GroupEltCombo u_coefficient(const KAlgebra& K, const AlgGMap& f, const std::vector<long>& a);

// U(D, f) with its equivalence certificate against H(a) under the pinned
// dictionary a_ii = f(z_i), a_ij = f(z_ij).
struct LiftingFromF {
    Hopf U;
    LiftingParams dictionary;
    bool theta_shape_ok = false;       // Theta images have the presentation shape
    bool ideal_maps_to_zero = false;   // generator images vanish in U(D, f)
    bool structure_match = false;      // tables of U(D, f) equal H(a_dict)
};
LiftingFromF lifting_from_f(const KAlgebra& K, const AlgGMap& f);

}  // namespace qlift

#pragma once

#include <vector>

#include "qlift/cyclotomic.hpp"

namespace qlift {

class FinAbGroup;

// Element of a finite abelian group, stored as reduced exponents against the
// cyclic factor orders. Characters share the representation (dual coordinates).
struct GrpVec {
    std::vector<long> e;
    bool operator==(const GrpVec& o) const { return e == o.e; }
    bool operator<(const GrpVec& o) const { return e < o.e; }
};

using GrpElt = GrpVec;
using Character = GrpVec;

// Direct product of cyclic groups Z/m_1 x ... x Z/m_k.
class FinAbGroup {
  public:
    explicit FinAbGroup(std::vector<long> orders);

    const std::vector<long>& orders() const { return orders_; }
    long rank() const { return (long)orders_.size(); }
    long order() const { return order_; }
    long exponent() const { return exponent_; }

    GrpElt identity() const;
    GrpElt reduce(GrpVec v) const;
    GrpElt mul(const GrpElt& a, const GrpElt& b) const;
    GrpElt inv(const GrpElt& a) const;
    GrpElt power(const GrpElt& a, long n) const;
    bool is_identity(const GrpElt& a) const;
    long element_order(const GrpElt& a) const;

    // chi(g) as a root of unity in Q(zeta_E); E must be a multiple of the exponent.
    Scalar char_eval(const CycloField* f, const Character& chi, const GrpElt& g) const;
    // exponent k with chi(g) = zeta_E^k
    long char_eval_exponent(long E, const Character& chi, const GrpElt& g) const;

    Character char_mul(const Character& a, const Character& b) const { return mul(a, b); }
    Character char_inv(const Character& a) const { return inv(a); }
    Character trivial_char() const { return identity(); }
    bool is_trivial_char(const Character& chi) const { return is_identity(chi); }

    // All |G| elements (and, with the same encoding, all characters),
    // enumerated in lexicographic order of exponent vectors.
    std::vector<GrpElt> elements() const;

    // Subgroup generated by gens, as a sorted element list (BFS closure).
    std::vector<GrpElt> subgroup(const std::vector<GrpElt>& gens) const;

    // Characters of G trivial on the given subgroup: the annihilator,
    // canonically the character group of G / <gens>.
    std::vector<Character> annihilator(const std::vector<GrpElt>& subgroup_elements) const;

    long index_of(const GrpElt& a) const;  // position in elements() order

  private:
    std::vector<long> orders_;
    long order_;
    long exponent_;
};

}  // namespace qlift

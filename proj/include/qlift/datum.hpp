#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlift/group.hpp"

namespace qlift {

// Quantum linear space datum: marked group elements g_i, characters chi_i,
// q_ij = chi_j(g_i), truncation orders N_i = ord(q_ii). Disconnected type
// A_1^theta, so the compatibility chi_i(g_j) chi_j(g_i) = 1 is required for
// every pair i != j.
class Datum {
  public:
    Datum(FinAbGroup group, std::vector<GrpElt> g, std::vector<Character> chi);

    const FinAbGroup& group() const { return group_; }
    long rank() const { return (long)g_.size(); }
    const GrpElt& g(long i) const { return g_[i]; }
    const Character& chi(long i) const { return chi_[i]; }
    long N(long i) const { return N_[i]; }
    const std::vector<long>& truncation_orders() const { return N_; }

    // Session cyclotomic order E = lcm(exponent(G), N_1, ..., N_theta) and field.
    long E() const { return E_; }
    const CycloField* field() const { return field_; }

    // q_ij = chi_j(g_i)
    Scalar q(long i, long j) const;
    std::vector<std::vector<Scalar>> braiding_matrix() const;

    // whether the (i,j) linking parameter may be nonzero:
    // g_i g_j != 1 and chi_i chi_j = eps
    bool linkable(long i, long j) const;
    // whether the diagonal parameter a_ii may be nonzero:
    // g_i^{N_i} != 1 and chi_i^{N_i} = eps
    bool diagonal_admissible(long i) const;

    // h_i = g_i^{N_i}, eta_i = chi_i^{N_i}
    GrpElt h(long i) const { return group_.power(g_[i], N_[i]); }
    Character eta(long i) const { return group_.power(chi_[i], N_[i]); }

    long bosonization_dim() const;  // |G| * prod N_i

  private:
    FinAbGroup group_;
    std::vector<GrpElt> g_;
    std::vector<Character> chi_;
    std::vector<long> N_;
    long E_;
    const CycloField* field_;
};

// Lifting parameters for H(a): diagonal entries a_ii (root vector parameters)
// and linking entries a_ij for i < j.
struct LiftingParams {
    std::vector<Scalar> diag;                       // a_ii, length theta
    std::map<std::pair<long, long>, Scalar> link;   // a_ij for i < j

    static LiftingParams zero(const Datum& d);
    Scalar diag_at(long i) const { return diag[i]; }
    Scalar link_at(long i, long j) const;  // 0 when absent
    bool is_zero() const;
};

struct ForcedZero {
    std::string parameter;  // "a_11", "a_12", ...
    std::string reason;
};

// Zero out entries excluded by the admissibility constraints, reporting each.
LiftingParams validate_params(const Datum& d, LiftingParams p, std::vector<ForcedZero>* report);

}  // namespace qlift

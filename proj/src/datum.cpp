#include "qlift/datum.hpp"

#include <numeric>
#include <sstream>

namespace qlift {

Datum::Datum(FinAbGroup group, std::vector<GrpElt> g, std::vector<Character> chi)
    : group_(std::move(group)), g_(std::move(g)), chi_(std::move(chi)) {
    if (g_.size() != chi_.size() || g_.empty())
        throw InputError("datum needs matching nonempty lists of elements and characters");
    long theta = (long)g_.size();
    // session order: hold the group exponent and every q_ii order
    E_ = group_.exponent();
    // q_ii order computed via exponents of the pairing, before the field exists
    std::vector<long> ords;
    for (long i = 0; i < theta; ++i) {
        long k = group_.char_eval_exponent(group_.exponent(), chi_[i], g_[i]);
        long e = group_.exponent();
        long ord = k == 0 ? 1 : e / std::gcd(k, e);
        ords.push_back(ord);
        E_ = lcm_long(E_, ord);
    }
    field_ = CycloField::get(E_);
    N_ = ords;
    for (long i = 0; i < theta; ++i) {
        if (N_[i] <= 1) {
            std::ostringstream os;
            os << "q_" << (i + 1) << (i + 1) << " must have order > 1 (got order " << N_[i] << ")";
            throw InputError(os.str());
        }
    }
    for (long i = 0; i < theta; ++i) {
        for (long j = 0; j < theta; ++j) {
            if (i == j) continue;
            Scalar prod = q(i, j) * q(j, i);
            if (!prod.is_one()) {
                std::ostringstream os;
                os << "not a quantum linear space: chi_" << (i + 1) << "(g_" << (j + 1) << ") chi_"
                   << (j + 1) << "(g_" << (i + 1) << ") != 1";
                throw InputError(os.str());
            }
        }
    }
}

Scalar Datum::q(long i, long j) const { return group_.char_eval(field_, chi_[j], g_[i]); }

std::vector<std::vector<Scalar>> Datum::braiding_matrix() const {
    long theta = rank();
    std::vector<std::vector<Scalar>> m(theta, std::vector<Scalar>(theta, Scalar::zero(field_)));
    for (long i = 0; i < theta; ++i)
        for (long j = 0; j < theta; ++j) m[i][j] = q(i, j);
    return m;
}

bool Datum::linkable(long i, long j) const {
    if (group_.is_identity(group_.mul(g_[i], g_[j]))) return false;
    return group_.is_trivial_char(group_.char_mul(chi_[i], chi_[j]));
}

bool Datum::diagonal_admissible(long i) const {
    if (group_.is_identity(h(i))) return false;
    return group_.is_trivial_char(eta(i));
}

long Datum::bosonization_dim() const {
    long d = group_.order();
    for (long n : N_) d *= n;
    return d;
}

LiftingParams LiftingParams::zero(const Datum& d) {
    LiftingParams p;
    p.diag.assign(d.rank(), Scalar::zero(d.field()));
    return p;
}

Scalar LiftingParams::link_at(long i, long j) const {
    auto it = link.find({i, j});
    return it == link.end() ? Scalar() : it->second;
}

bool LiftingParams::is_zero() const {
    for (const auto& s : diag)
        if (!s.is_zero()) return false;
    for (const auto& [k, s] : link)
        if (!s.is_zero()) return false;
    return true;
}

LiftingParams validate_params(const Datum& d, LiftingParams p, std::vector<ForcedZero>* report) {
    long theta = d.rank();
    if ((long)p.diag.size() != theta) throw InputError("diagonal parameter count != rank");
    auto note = [&](const std::string& name, const std::string& why) {
        if (report) report->push_back({name, why});
    };
    for (long i = 0; i < theta; ++i) {
        if (p.diag[i].is_zero()) continue;
        std::ostringstream name;
        name << "a_" << (i + 1) << (i + 1);
        if (d.group().is_identity(d.h(i))) {
            p.diag[i] = Scalar::zero(d.field());
            note(name.str(), "forced zero: g_i^{N_i} = 1");
        } else if (!d.group().is_trivial_char(d.eta(i))) {
            p.diag[i] = Scalar::zero(d.field());
            note(name.str(), "forced zero: chi_i^{N_i} != eps (eta_i != eps)");
        }
    }
    for (auto& [key, val] : p.link) {
        auto [i, j] = key;
        if (i < 0 || j < 0 || i >= theta || j >= theta || i >= j)
            throw InputError("linking parameter indices must satisfy 1 <= i < j <= rank");
        if (val.is_zero()) continue;
        std::ostringstream name;
        name << "a_" << (i + 1) << (j + 1);
        if (d.group().is_identity(d.group().mul(d.g(i), d.g(j)))) {
            val = Scalar::zero(d.field());
            note(name.str(), "forced zero: g_i g_j = 1");
        } else if (!d.group().is_trivial_char(d.group().char_mul(d.chi(i), d.chi(j)))) {
            val = Scalar::zero(d.field());
            note(name.str(), "forced zero: chi_i chi_j != eps");
        }
    }
    return p;
}

}  // namespace qlift

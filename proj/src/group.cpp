#include "qlift/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace qlift {

FinAbGroup::FinAbGroup(std::vector<long> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw InputError("group needs at least one cyclic factor");
    order_ = 1;
    exponent_ = 1;
    for (long m : orders_) {
        if (m < 1) throw InputError("cyclic factor orders must be positive");
        order_ *= m;
        exponent_ = lcm_long(exponent_, m);
    }
}

GrpElt FinAbGroup::identity() const { return GrpElt{std::vector<long>(orders_.size(), 0)}; }

GrpElt FinAbGroup::reduce(GrpVec v) const {
    if (v.e.size() != orders_.size()) throw InputError("group element rank mismatch");
    for (size_t i = 0; i < orders_.size(); ++i) {
        v.e[i] %= orders_[i];
        if (v.e[i] < 0) v.e[i] += orders_[i];
    }
    return v;
}

GrpElt FinAbGroup::mul(const GrpElt& a, const GrpElt& b) const {
    GrpVec r = a;
    for (size_t i = 0; i < orders_.size(); ++i) r.e[i] += b.e[i];
    return reduce(r);
}

GrpElt FinAbGroup::inv(const GrpElt& a) const {
    GrpVec r = a;
    for (auto& x : r.e) x = -x;
    return reduce(r);
}

GrpElt FinAbGroup::power(const GrpElt& a, long n) const {
    GrpVec r = a;
    for (auto& x : r.e) x *= n;
    return reduce(r);
}

bool FinAbGroup::is_identity(const GrpElt& a) const {
    for (size_t i = 0; i < orders_.size(); ++i)
        if (a.e[i] % orders_[i] != 0) return false;
    return true;
}

long FinAbGroup::element_order(const GrpElt& a) const {
    long ord = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long m = orders_[i];
        long x = ((a.e[i] % m) + m) % m;
        long g = std::gcd(x == 0 ? m : x, m);
        ord = lcm_long(ord, m / g);
    }
    return ord;
}

long FinAbGroup::char_eval_exponent(long E, const Character& chi, const GrpElt& g) const {
    if (E % exponent_ != 0) throw InputError("cyclotomic order does not contain the group exponent");
    long acc = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long w = E / orders_[i];
        acc = (acc + (chi.e[i] % orders_[i]) * (g.e[i] % orders_[i]) % E * (w % E)) % E;
    }
    return ((acc % E) + E) % E;
}

Scalar FinAbGroup::char_eval(const CycloField* f, const Character& chi, const GrpElt& g) const {
    if (chi.e.size() != orders_.size() || g.e.size() != orders_.size())
        throw InputError("character/element rank mismatch with group");
    return Scalar::root_of_unity(f, char_eval_exponent(f->order(), chi, g));
}

std::vector<GrpElt> FinAbGroup::elements() const {
    std::vector<GrpElt> out;
    out.reserve(order_);
    std::vector<long> cur(orders_.size(), 0);
    for (long count = 0; count < order_; ++count) {
        out.push_back(GrpElt{cur});
        for (long i = (long)orders_.size() - 1; i >= 0; --i) {
            if (++cur[i] < orders_[i]) break;
            cur[i] = 0;
        }
    }
    return out;
}

long FinAbGroup::index_of(const GrpElt& a) const {
    GrpElt r = reduce(a);
    long idx = 0;
    for (size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + r.e[i];
    return idx;
}

std::vector<GrpElt> FinAbGroup::subgroup(const std::vector<GrpElt>& gens) const {
    std::set<GrpVec> seen;
    std::vector<GrpElt> queue{identity()};
    seen.insert(identity());
    for (size_t head = 0; head < queue.size(); ++head) {
        GrpElt cur = queue[head];
        for (const auto& gen : gens) {
            GrpElt nxt = mul(cur, reduce(gen));
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<Character> FinAbGroup::annihilator(const std::vector<GrpElt>& sub) const {
    std::vector<Character> out;
    long E = exponent_;
    for (const auto& chi : elements()) {
        bool trivial = true;
        for (const auto& g : sub) {
            if (char_eval_exponent(E, chi, g) != 0) {
                trivial = false;
                break;
            }
        }
        if (trivial) out.push_back(chi);
    }
    return out;
}

}  // namespace qlift

#include "qlift/functional.hpp"

namespace qlift {

Func Func::conv_unit(const Hopf* H, long arity) {
    Func f(H, arity);
    // support: tuples of basis elements with nonzero counit
    std::vector<long> support;
    for (long b = 0; b < H->dim(); ++b)
        if (!H->counit(b).is_zero()) support.push_back(b);
    std::vector<long> idx(arity, 0);
    std::vector<long> pos(arity, 0);
    if (arity == 0) {
        f.vals_[{}] = Scalar::one(H->field());
        return f;
    }
    while (true) {
        Scalar c = Scalar::one(H->field());
        std::vector<long> tuple(arity);
        for (long k = 0; k < arity; ++k) {
            tuple[k] = support[pos[k]];
            c *= H->counit(tuple[k]);
        }
        f.add(tuple, c);
        long k = arity - 1;
        while (k >= 0) {
            if (++pos[k] < (long)support.size()) break;
            pos[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return f;
}

Scalar Func::at(const std::vector<long>& idx) const {
    auto it = vals_.find(idx);
    return it == vals_.end() ? Scalar::zero(H_->field()) : it->second;
}

void Func::add(const std::vector<long>& idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = vals_.find(idx);
    if (it == vals_.end()) {
        vals_.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) vals_.erase(it);
    }
}

bool Func::is_normalized() const {
    for (const auto& [idx, c] : vals_)
        for (long b : idx)
            if (b == H_->unit()) return false;
    return true;
}

Func Func::normalized_part() const {
    Func out(H_, arity_);
    for (const auto& [idx, c] : vals_) {
        bool has_unit = false;
        for (long b : idx)
            if (b == H_->unit()) has_unit = true;
        if (!has_unit) out.vals_.emplace(idx, c);
    }
    return out;
}

Func Func::operator+(const Func& o) const {
    if (arity_ != o.arity_) throw InputError("functional arity mismatch");
    Func out = *this;
    for (const auto& [idx, c] : o.vals_) out.add(idx, c);
    return out;
}

Func Func::operator-(const Func& o) const {
    if (arity_ != o.arity_) throw InputError("functional arity mismatch");
    Func out = *this;
    for (const auto& [idx, c] : o.vals_) out.add(idx, -c);
    return out;
}

Func Func::scale(const Scalar& c) const {
    Func out(H_, arity_);
    if (c.is_zero()) return out;
    for (const auto& [idx, v] : vals_) out.vals_.emplace(idx, c * v);
    return out;
}

Scalar Func::eval(const std::vector<SparseVec>& args) const {
    if ((long)args.size() != arity_) throw InputError("functional arity mismatch in eval");
    Scalar acc(H_->field());
    // iterate over the support, multiply out coefficients of the arguments
    for (const auto& [idx, c] : vals_) {
        Scalar term = c;
        bool dead = false;
        for (long k = 0; k < arity_ && !dead; ++k) {
            auto it = args[k].find(idx[k]);
            if (it == args[k].end()) {
                dead = true;
            } else {
                term *= it->second;
            }
        }
        if (!dead) acc += term;
    }
    return acc;
}

Func Func::convolve(const Func& o) const {
    if (arity_ != o.arity_) throw InputError("functional arity mismatch in convolution");
    Func out(H_, arity_);
    std::vector<const std::vector<std::pair<long, Scalar>>*> srcs(arity_);
    for (const auto& [u, cu] : vals_) {
        for (const auto& [v, cv] : o.vals_) {
            // componentwise sources with small fanout; most pairs die here
            bool dead = false;
            for (long k = 0; k < arity_ && !dead; ++k) {
                srcs[k] = &H_->comult_sources(u[k], v[k]);
                if (srcs[k]->empty()) dead = true;
            }
            if (dead) continue;
            Scalar base = cu * cv;
            // cartesian product over components
            std::vector<long> pos(arity_, 0);
            while (true) {
                Scalar c = base;
                std::vector<long> tuple(arity_);
                for (long k = 0; k < arity_; ++k) {
                    tuple[k] = (*srcs[k])[pos[k]].first;
                    c *= (*srcs[k])[pos[k]].second;
                }
                out.add(tuple, c);
                long k = arity_ - 1;
                while (k >= 0) {
                    if (++pos[k] < (long)srcs[k]->size()) break;
                    pos[k] = 0;
                    --k;
                }
                if (k < 0) break;
            }
        }
    }
    return out;
}

Func Func::conv_power(long k) const {
    Func acc = conv_unit(H_, arity_);
    for (long t = 0; t < k; ++t) acc = acc.convolve(*this);
    return acc;
}

std::map<long, Func> Func::grade_components() const {
    std::map<long, Func> out;
    for (const auto& [idx, c] : vals_) {
        long deg = 0;
        for (long b : idx) deg += H_->xdeg(b);
        auto it = out.find(deg);
        if (it == out.end()) it = out.emplace(deg, Func(H_, arity_)).first;
        it->second.vals_.emplace(idx, c);
    }
    return out;
}

long Func::min_positive_grade() const {
    long best = -1;
    for (const auto& [idx, c] : vals_) {
        long deg = 0;
        for (long b : idx) deg += H_->xdeg(b);
        if (deg > 0 && (best < 0 || deg < best)) best = deg;
    }
    return best;
}

Func Func::conv_inverse() const {
    Func unit = conv_unit(H_, arity_);
    Func nu = *this - unit;
    // the nilpotent part must vanish on the degree-0 layer
    for (const auto& [idx, c] : nu.entries()) {
        long deg = 0;
        for (long b : idx) deg += H_->xdeg(b);
        if (deg == 0) throw MathError("not filtered-unipotent: unit part differs from the counit power");
    }
    // geometric series sum (-nu)^{*k}
    Func acc = unit;
    Func term = unit;
    long cap = arity_ * H_->dim() + 2;
    for (long k = 1; k <= cap; ++k) {
        term = term.convolve(nu).scale(-Scalar::one(H_->field()));
        if (term.is_zero()) break;
        acc = acc + term;
        if (k == cap) throw MathError("convolution inverse series failed to terminate");
    }
    return acc;
}

Func Func::conv_exp() const {
    for (const auto& [idx, c] : vals_) {
        long deg = 0;
        for (long b : idx) deg += H_->xdeg(b);
        if (deg == 0) throw MathError("exponential requires vanishing on the degree-0 layer");
    }
    Func acc = conv_unit(H_, arity_);
    Func term = acc;
    Rational fact(1);
    long cap = arity_ * H_->dim() + 2;
    for (long k = 1; k <= cap; ++k) {
        term = term.convolve(*this);
        if (term.is_zero()) break;
        fact *= k;
        Rational inv = Rational(1) / fact;
        acc = acc + term.scale(Scalar::rational(H_->field(), inv));
        if (k == cap) throw MathError("exponential series failed to terminate");
    }
    return acc;
}

Func Func::conv_commutator_check(const Func& o) const { return convolve(o) - o.convolve(*this); }

}  // namespace qlift


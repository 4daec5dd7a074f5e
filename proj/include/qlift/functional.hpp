#pragma once

#include "qlift/hopf.hpp"

namespace qlift {

// Finitely supported multilinear functional H^{(x) arity} -> k, stored on
// basis tuples. Carrier of the convolution algebra.
class Func {
  public:
    Func(const Hopf* H, long arity) : H_(H), arity_(arity) {}

    static Func conv_unit(const Hopf* H, long arity);  // eps (x) ... (x) eps

    long arity() const { return arity_; }
    const Hopf* hopf() const { return H_; }
    const std::map<std::vector<long>, Scalar>& entries() const { return vals_; }

    Scalar at(const std::vector<long>& idx) const;
    void add(const std::vector<long>& idx, const Scalar& c);
    bool is_zero() const { return vals_.empty(); }

    // vanishes whenever some argument is the unit basis element
    bool is_normalized() const;
    // drop entries whose tuple contains the unit (cochain normalization)
    Func normalized_part() const;

    Func operator+(const Func& o) const;
    Func operator-(const Func& o) const;
    Func scale(const Scalar& c) const;
    bool operator==(const Func& o) const { return arity_ == o.arity_ && vals_ == o.vals_; }

    // evaluation on sparse elements, multilinear
    Scalar eval(const std::vector<SparseVec>& args) const;

    // convolution product (f*g)(x...) = sum f(x_1...) g(x_2...)
    Func convolve(const Func& o) const;
    Func conv_power(long k) const;

    // inverse of eps-part + nilpotent, by the geometric series; throws
    // MathError("not filtered-unipotent") when the degree-0 layer is off
    Func conv_inverse() const;

    // exponential e^f = sum f^{*k} / k!; requires f to vanish on the
    // degree-0 layer
    Func conv_exp() const;

    // decomposition by total x-degree of the tuple (degree -j component at key j)
    std::map<long, Func> grade_components() const;
    long min_positive_grade() const;  // least j > 0 with component nonzero; -1 if none

    Func conv_commutator_check(const Func& o) const;  // f*g - g*f

  private:
    const Hopf* H_;
    long arity_;
    std::map<std::vector<long>, Scalar> vals_;
};

}  // namespace qlift

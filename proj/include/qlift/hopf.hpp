#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "qlift/pbw.hpp"

namespace qlift {

using SparseVec = std::map<long, Scalar>;
using Sparse2 = std::map<std::pair<long, long>, Scalar>;
using Sparse3 = std::map<std::array<long, 3>, Scalar>;

void sv_add(SparseVec& dst, long i, const Scalar& c);
void sv_add(SparseVec& dst, const SparseVec& src, const Scalar& c);
void s2_add(Sparse2& dst, long i, long j, const Scalar& c);
void s3_add(Sparse3& dst, long i, long j, long k, const Scalar& c);

// Plain finite-dimensional algebra given by structure constants.
struct AlgebraTable {
    long dim = 0;
    const CycloField* F = nullptr;
    std::vector<std::vector<SparseVec>> mult;  // mult[i][j] = b_i b_j
};

// Jacobson radical over a characteristic-zero field by the trace-form
// criterion: x is radical iff tr(L_{x b}) = 0 for every basis element b.
std::vector<SparseVec> radical_basis(const AlgebraTable& A);

struct AxiomReport {
    bool ok = true;
    std::string mode;  // "full" or "sampled(seed,count)"
    long checked_triples = 0;
    std::vector<std::string> violations;  // human-readable, with witnesses
    void fail(const std::string& what) {
        ok = false;
        if (violations.size() < 64) violations.push_back(what);
    }
};

struct VerifyMode {
    bool full = true;
    std::uint64_t seed = 0;
    long count = 10000;
    static VerifyMode full_mode() { return VerifyMode{}; }
    static VerifyMode sampled(std::uint64_t seed, long count) { return VerifyMode{false, seed, count}; }
    // full enumeration up to dim 128, seeded sampling above
    static VerifyMode auto_mode(long dim, std::uint64_t seed = 1) {
        return dim <= 128 ? full_mode() : sampled(seed, 10000);
    }
};

// Finite-dimensional Hopf algebra as explicit linear algebra. Immutable
// after construction; all tables are plain data safe to share across workers.
class Hopf {
  public:
    long dim() const { return dim_; }
    const CycloField* field() const { return F_; }
    long unit() const { return unit_; }
    const std::vector<PBWMono>& basis() const { return basis_; }
    const FinAbGroup& group() const { return *group_; }
    long index_of(const PBWMono& m) const;

    const SparseVec& mul(long i, long j) const { return mult_[i][j]; }
    SparseVec mul(const SparseVec& x, const SparseVec& y) const;
    const Sparse2& comult(long i) const { return comult_[i]; }
    Sparse2 comult(const SparseVec& x) const;
    const Sparse3& comult2(long i) const { return comult2_[i]; }  // (Delta x 1) Delta
    // all (b, coeff) with Delta(b) containing the (u, v) term
    const std::vector<std::pair<long, Scalar>>& comult_sources(long u, long v) const;
    Scalar counit(long i) const { return counit_[i]; }
    Scalar counit(const SparseVec& x) const;
    const SparseVec& antipode(long i) const;
    SparseVec antipode(const SparseVec& x) const;
    bool has_antipode() const { return !antipode_.empty(); }

    // products in H (x) H and H (x) H (x) H through the structure tables
    Sparse2 mul2(const Sparse2& x, const Sparse2& y) const;
    Sparse3 mul3(const Sparse3& x, const Sparse3& y) const;

    long xdeg(long i) const { return basis_[i].xdeg(); }
    // character of the diagonal G-action on basis monomial i (sum of a_i chi_i)
    const Character& action_char(long i) const { return action_char_[i]; }

    AxiomReport verify(const VerifyMode& mode = VerifyMode::full_mode()) const;

    // Solve the antipode law as a linear system (fallback path); throws
    // MathError when no antipode exists.
    void solve_antipode();
    void set_antipode(std::vector<SparseVec> s) { antipode_ = std::move(s); }

    AlgebraTable algebra_table() const;
    AlgebraTable dual_algebra_table() const;  // multiplication = transposed comultiplication

    struct Filtration {
        std::vector<long> dims;                       // cumulative dims H_0 <= H_1 <= ...
        std::vector<std::vector<SparseVec>> bases;    // basis of each H_n
        std::vector<long> layer_dims;                 // gr_c layer dimensions
    };
    Filtration coradical_filtration() const;

    // group-likes of this Hopf algebra's own basis: indices with Delta b = b (x) b
    std::vector<long> grouplike_basis() const;

    std::string render(const SparseVec& x) const;

    // --- construction (used by the builders) ---
    static Hopf from_tables(const FinAbGroup& G, const CycloField* F, std::vector<PBWMono> basis,
                            std::vector<std::vector<SparseVec>> mult, std::vector<Sparse2> comult,
                            std::vector<Scalar> counit, long unit_index,
                            std::vector<Character> action_chars);

  private:
    long dim_ = 0;
    const CycloField* F_ = nullptr;
    long unit_ = 0;
    std::vector<PBWMono> basis_;
    std::map<PBWMono, long> index_;
    std::vector<std::vector<SparseVec>> mult_;
    std::vector<Sparse2> comult_;
    std::vector<Sparse3> comult2_;
    std::vector<std::vector<std::pair<long, Scalar>>> transpose_;  // indexed u*dim+v
    std::vector<Scalar> counit_;
    std::vector<SparseVec> antipode_;
    std::vector<Character> action_char_;
    std::shared_ptr<const FinAbGroup> group_;
};

// kG with its usual Hopf structure (basis = group elements).
Hopf group_algebra(const FinAbGroup& G, const CycloField* F);

// convolution of linear maps H -> H: (f*g)(x) = sum f(x_1) g(x_2);
// associative with unit iota eps
using Endo = std::vector<SparseVec>;
Endo endo_convolve(const Hopf& H, const Endo& f, const Endo& g);
Endo endo_identity(const Hopf& H);
Endo endo_conv_unit(const Hopf& H);  // iota eps

}  // namespace qlift

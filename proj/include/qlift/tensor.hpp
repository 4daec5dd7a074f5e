#pragma once

#include <cstdint>
#include <map>

#include "qlift/datum.hpp"
#include "qlift/linalg.hpp"

namespace qlift {

// Basis word of V^{(x) n}: sequence of generator indices, 0-based.
using TensorWord = std::vector<std::uint8_t>;

// Homogeneous element of a tensor power, sparse.
using TensorElt = std::map<TensorWord, Scalar>;

// Element of T(V) (x) T(V), sparse over word pairs.
using TensorElt2 = std::map<std::pair<TensorWord, TensorWord>, Scalar>;

void tensor_add(TensorElt& dst, const TensorWord& w, const Scalar& c);
void tensor_add2(TensorElt2& dst, const TensorWord& a, const TensorWord& b, const Scalar& c);

class Braided {
  public:
    explicit Braided(const Datum& d) : d_(d) {}

    const Datum& datum() const { return d_; }

    // sigma_i action (1-based position i in 1..n-1): applies the diagonal
    // braiding c(x_a (x) x_b) = q_{ab} x_b (x) x_a at positions i, i+1.
    TensorElt braid_generator(long i, const TensorElt& t) const;
    // action of the Matsumoto lift of a permutation on a single word
    void apply_permutation(const std::vector<int>& perm, const TensorWord& w, TensorElt& out,
                           const Scalar& coeff) const;

    // quantum symmetrizer S_n applied to one basis word / an element
    TensorElt symmetrize_word(const TensorWord& w) const;
    TensorElt symmetrize(const TensorElt& t) const;

    // shuffle piece S_{i,j} (i + j = |w|) applied to a word
    TensorElt shuffle_piece(long i, long j, const TensorWord& w) const;

    // braided product on T(V) (concatenation) and on T(V) (x) T(V)
    static TensorWord concat(const TensorWord& a, const TensorWord& b);
    Scalar cross_factor(const TensorWord& moving_left, const TensorWord& moving_right) const;
    TensorElt2 mult2(const TensorElt2& a, const TensorElt2& b) const;

    // free braided Hopf algebra coproduct of a homogeneous element
    // (algebra map with Delta(x_i) = x_i (x) 1 + 1 (x) x_i)
    TensorElt2 shuffle_coproduct(const TensorElt& t) const;

    // c-bracket [a, b]_c = a b - m(c(a (x) b)) in T(V), for homogeneous a, b
    TensorElt braided_commutator(const TensorElt& a, const TensorElt& b) const;
    TensorElt generator(long i) const;

    // iterated ad_c: ad_{x_i}^m (x_j)
    TensorElt ad_power(long i, long m, long j) const;

    // matrix of S_n on the degree-n word basis; words enumerated lexicographically
    std::vector<TensorWord> word_basis(long n) const;
    long word_index(const TensorWord& w) const;

    // kernel of S_n as sparse vectors over the degree-n word basis
    std::vector<SparseRow> nichols_relations(long n) const;
    long image_rank(long n) const;

    // size guard: theta^n words per degree
    void check_budget(long n) const;
    static long basis_budget;  // default 20000, overridable (CLI / env)

  private:
    const Datum& d_;
    Scalar q_of(std::uint8_t a, std::uint8_t b) const { return d_.q(a, b); }
};

// reduced word (list of adjacent transposition indices, 1-based) for a
// permutation given in one-line form; bubble-sort convention
std::vector<int> reduced_word_bubble(std::vector<int> perm);
// a second convention (left-to-right insertion) used to cross-check the
// Matsumoto lift's independence of the reduced word
std::vector<int> reduced_word_insertion(std::vector<int> perm);

// all permutations of {0..n-1} in lexicographic order
std::vector<std::vector<int>> all_permutations(long n);
// (i,j)-shuffles: permutations increasing on the first i and last j slots
std::vector<std::vector<int>> shuffles(long i, long j);

}  // namespace qlift

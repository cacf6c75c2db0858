#pragma once
#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "diffschub/errors.hpp"
#include "diffschub/formal_sum.hpp"
#include "diffschub/partition.hpp"

namespace diffschub {

// Permutation of Z fixing all but finitely many points, stored as the window
// of images (w(a), ..., w(b)).  Canonical form trims fixed points at both
// ends; the identity has an empty word.  Basis-key order: window start first,
// then the word lexicographically.
//
// Reduced-word convention used throughout: the word (i1,...,il) stands for
// w = s_{i1} o s_{i2} o ... o s_{il} as composition of functions, i.e. the
// RIGHTMOST letter acts first.  Stripping the leftmost letter is therefore a
// length-decreasing LEFT multiplication by s_{i1}.
class PermutationZ {
public:
    PermutationZ() = default;  // identity
    PermutationZ(int start, std::vector<int> word);

    static PermutationZ identity() { return PermutationZ(); }
    static PermutationZ simple(int k) { return PermutationZ(k, {k + 1, k}); }  // s_k
    // "c1,...,cn@a"; "@1" may be omitted; "" and "id" are the identity.
    static PermutationZ parse(const std::string& s);
    std::string str() const;  // identity prints "id"; otherwise always "@a"

    bool is_identity() const { return word_.empty(); }
    int window_start() const { return start_; }
    int window_end() const { return start_ + static_cast<int>(word_.size()) - 1; }
    const std::vector<int>& word() const { return word_; }

    int apply(int i) const;     // w(i)
    int preimage(int v) const;  // w^{-1}(v)

    int length() const;               // inversion count
    std::vector<int> descents() const;  // i with w(i) > w(i+1)
    bool has_descent(int i) const { return apply(i) > apply(i + 1); }

    PermutationZ inverse() const;
    PermutationZ shifted(int n) const;  // tau^n: (tau^n w)(i) = w(i-n)+n

    // d_i = #{j > i : w(j) < w(i)} for i in [window_start .. window_end].
    std::vector<int> lehmer_code() const;

    friend bool operator==(const PermutationZ& a, const PermutationZ& b) {
        return a.start_ == b.start_ && a.word_ == b.word_;
    }
    friend bool operator!=(const PermutationZ& a, const PermutationZ& b) {
        return !(a == b);
    }
    friend bool operator<(const PermutationZ& a, const PermutationZ& b) {
        if (a.start_ != b.start_) return a.start_ < b.start_;
        return a.word_ < b.word_;
    }

private:
    int start_ = 1;
    std::vector<int> word_;
    void canonicalize();
};

// Left action (swap values k, k+1) and right action (swap positions k, k+1),
// each with the length change (+1 or -1).
std::pair<PermutationZ, int> left_s(int k, const PermutationZ& w);
std::pair<PermutationZ, int> right_s(int k, const PermutationZ& w);

// w * t_{ab}: swap the values at positions a and b (right multiplication).
PermutationZ right_transposition(const PermutationZ& w, int a, int b);

// Values k with l(s_k w) = l(w) - 1, i.e. k appearing after k+1 in the window.
std::vector<int> left_descents(const PermutationZ& w);

// All reduced words of w under the convention above.
std::vector<std::vector<int>> reduced_words(const PermutationZ& w);
// |R(w)| without materializing words; memoized process-wide.
mpz_class reduced_word_count(const PermutationZ& w);

// Basis-level divided difference: S_w -> S_{w s_i} when i is a descent of w,
// else 0, extended linearly.
FormalSum<PermutationZ> divided_difference(int i, const FormalSum<PermutationZ>& x);

// Grassmannian codec.  A permutation with at most one descent k corresponds to
// the shape lambda_j = w(k-j+1) - (k-j+1); the identity maps to (0, empty).
struct GrassCode {
    int descent = 0;
    Partition shape;
};
GrassCode grass_decode(const PermutationZ& w);  // throws NotGrassmannian
PermutationZ grass_encode(int k, const Partition& shape);
inline PermutationZ grass_encode(const GrassCode& g) {
    return grass_encode(g.descent, g.shape);
}

// Inverse of lehmer_code restricted to positive windows: code[i] is d_{i+1}
// for positions 1, 2, ...; trailing zeros allowed.
PermutationZ from_lehmer_code(const std::vector<int>& code);

}  // namespace diffschub

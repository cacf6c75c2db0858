#pragma once
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "diffschub/bsops.hpp"

namespace diffschub {

// Memo table for the Schur-times-Schubert recursion, keyed by the pair.
// Shareable across threads: lookups copy, inserts are first-write-wins
// (recomputation is deterministic, so losing a race is harmless).
class ProductCache {
public:
    ProductCache() = default;
    ProductCache(const ProductCache&) = delete;
    ProductCache& operator=(const ProductCache&) = delete;

    bool find(const Partition& lam, const PermutationZ& w, SchubElement& out) const;
    void insert(const Partition& lam, const PermutationZ& w, const SchubElement& val);
    std::size_t size() const;
    void clear();

    // Snapshot for serialization / merging.
    std::map<std::pair<Partition, PermutationZ>, SchubElement> snapshot() const;

private:
    mutable std::mutex mu_;
    std::map<std::pair<Partition, PermutationZ>, SchubElement> entries_;
};

ProductCache& global_product_cache();

// s_lambda * S_w in the back-stable Schubert basis, exactly.  Recursion on
// |lambda| + l(w): coefficients of support elements with a nonzero descent j
// are read off the lower product s_lambda * S_{w s_j} (the Schur factor is
// symmetric in x_j, x_{j+1} for j != 0, so the divided difference passes
// through); the leftover part is supported on descent-0 Grassmannian windows
// and is reconstructed from its xi/nabla images via the recovery algorithm.
// Every internal cross-read is asserted; violations throw
// InternalInconsistency instead of being patched over.
SchubElement schur_times_schubert(const Partition& lam, const PermutationZ& w,
                                  ProductCache& cache);
SchubElement schur_times_schubert(const Partition& lam, const PermutationZ& w);

// Independent re-derivations for a claimed expansion of s_lambda * S_w:
//   descent_ok   - divided differences at every descent j != 0 of w match
//                  the recursively computed lower products
//   leibniz_ok   - xi and nabla of the expansion equal the Leibniz sums
//   word_count_ok- the reduced-word counting identity holds
//   positive_ok  - coefficients are nonnegative integers, homogeneous degree
struct VerifyReport {
    bool descent_ok = false;
    bool leibniz_ok = false;
    bool word_count_ok = false;
    bool positive_ok = false;
    std::string detail;  // first failure, empty when all pass
    bool all_ok() const { return descent_ok && leibniz_ok && word_count_ok && positive_ok; }
};
VerifyReport verify_product(const Partition& lam, const PermutationZ& w,
                            const SchubElement& expansion, ProductCache& cache);
VerifyReport verify_product(const Partition& lam, const PermutationZ& w,
                            const SchubElement& expansion);

// Versioned JSON persistence.  Loading merges into the cache; an entry that
// disagrees with one already present is a ConflictError (the recursion is
// deterministic, so equal keys must carry equal expansions).
void cache_save(const ProductCache& cache, const std::string& path);
void cache_load(ProductCache& cache, const std::string& path);

}  // namespace diffschub

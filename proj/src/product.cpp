#include "diffschub/product.hpp"

#include <fstream>

#include "diffschub/serial.hpp"

namespace diffschub {

bool ProductCache::find(const Partition& lam, const PermutationZ& w,
                        SchubElement& out) const {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = entries_.find({lam, w});
    if (it == entries_.end()) return false;
    out = it->second;
    return true;
}

void ProductCache::insert(const Partition& lam, const PermutationZ& w,
                          const SchubElement& val) {
    std::lock_guard<std::mutex> lk(mu_);
    entries_.emplace(std::make_pair(lam, w), val);
}

std::size_t ProductCache::size() const {
    std::lock_guard<std::mutex> lk(mu_);
    return entries_.size();
}

void ProductCache::clear() {
    std::lock_guard<std::mutex> lk(mu_);
    entries_.clear();
}

std::map<std::pair<Partition, PermutationZ>, SchubElement> ProductCache::snapshot() const {
    std::lock_guard<std::mutex> lk(mu_);
    return entries_;
}

ProductCache& global_product_cache() {
    static ProductCache cache;
    return cache;
}

namespace {

// Read a sum over descent-0 Grassmannian windows off into partition land.
DiagElement decode_descent0(const SchubElement& x, const char* what) {
    DiagElement out;
    for (const auto& [v, c] : x) {
        if (v.is_identity()) {
            out.add(Partition(), c);
            continue;
        }
        try {
            const GrassCode g = grass_decode(v);
            if (g.descent != 0)
                throw InternalInconsistency(std::string(what) +
                                            " has descent != 0 at " + v.str());
            out.add(g.shape, c);
        } catch (const NotGrassmannian&) {
            throw InternalInconsistency(std::string(what) +
                                        " has non-Grassmannian support at " + v.str());
        }
    }
    return out;
}

}  // namespace

SchubElement schur_times_schubert(const Partition& lam, const PermutationZ& w,
                                  ProductCache& cache) {
    if (lam.size() == 0) return SchubElement::unit(w);
    if (w.is_identity()) return SchubElement::unit(grass_encode(0, lam));
    SchubElement memo;
    if (cache.find(lam, w, memo)) return memo;

    // Support elements with a descent j != 0 inherit it from w; their
    // coefficients sit in the lower product s_lambda * S_{w s_j} because the
    // Schur factor commutes with the divided difference at j.
    std::map<PermutationZ, Rational> read;
    for (int j : w.descents()) {
        if (j == 0) continue;
        const SchubElement lower = schur_times_schubert(lam, right_s(j, w).first, cache);
        for (const auto& [u, c] : lower) {
            if (u.has_descent(j)) continue;
            const PermutationZ v = right_s(j, u).first;
            auto [it, fresh] = read.emplace(v, c);
            if (!fresh && it->second != c)
                throw InternalInconsistency("descent reads disagree at " + v.str());
        }
    }
    SchubElement non_gr;
    for (const auto& [v, c] : read) non_gr.add(v, c);

    // What remains is descent-0 Grassmannian; its xi/nabla images follow from
    // the Leibniz rule with all lower products known, so recovery applies.
    SchubElement D_full, N_full;
    for (const auto& [box, rest] : removable_corners(lam)) {
        const SchubElement sub = schur_times_schubert(rest, w, cache);
        D_full += sub;
        N_full += Rational(box.content()) * sub;
    }
    for (int k : left_descents(w)) {
        const SchubElement sub = schur_times_schubert(lam, left_s(k, w).first, cache);
        D_full += sub;
        N_full += Rational(k) * sub;
    }
    const DiagElement D = decode_descent0(D_full - xi_perm(non_gr), "xi image");
    const DiagElement N = decode_descent0(N_full - nabla_perm(non_gr), "nabla image");
    DiagElement gr;
    try {
        gr = recover(D, N);
    } catch (const NonRecoverable& e) {
        throw InternalInconsistency(std::string("recovery failed for ") + lam.str() +
                                    " * " + w.str() + ": " + e.what());
    }
    SchubElement result = std::move(non_gr);
    for (const auto& [kappa, c] : gr) result.add(grass_encode(0, kappa), c);
    assert_integral(result, "product expansion");
    for (const auto& [v, c] : result)
        if (c.sign() < 0)
            throw InternalInconsistency("negative product coefficient at " + v.str());
    cache.insert(lam, w, result);
    return result;
}

SchubElement schur_times_schubert(const Partition& lam, const PermutationZ& w) {
    return schur_times_schubert(lam, w, global_product_cache());
}

VerifyReport verify_product(const Partition& lam, const PermutationZ& w,
                            const SchubElement& expansion, ProductCache& cache) {
    VerifyReport r;
    r.descent_ok = r.leibniz_ok = r.word_count_ok = r.positive_ok = true;
    auto fail = [&r](bool& flag, const std::string& msg) {
        flag = false;
        if (r.detail.empty()) r.detail = msg;
    };

    const int deg = lam.size() + w.length();
    for (const auto& [v, c] : expansion) {
        if (!c.is_integer() || c.sign() < 0)
            fail(r.positive_ok, "coefficient of " + v.str() + " is " + c.str());
        if (v.length() != deg)
            fail(r.positive_ok, "wrong degree at " + v.str());
    }

    for (int j : w.descents()) {
        if (j == 0) continue;
        const SchubElement lhs = divided_difference(j, expansion);
        const SchubElement rhs = schur_times_schubert(lam, right_s(j, w).first, cache);
        if (lhs != rhs) fail(r.descent_ok, "divided difference mismatch at j=" +
                                               std::to_string(j));
    }

    SchubElement D_full, N_full;
    for (const auto& [box, rest] : removable_corners(lam)) {
        const SchubElement sub = schur_times_schubert(rest, w, cache);
        D_full += sub;
        N_full += Rational(box.content()) * sub;
    }
    for (int k : left_descents(w)) {
        const SchubElement sub = schur_times_schubert(lam, left_s(k, w).first, cache);
        D_full += sub;
        N_full += Rational(k) * sub;
    }
    if (xi_perm(expansion) != D_full) fail(r.leibniz_ok, "xi Leibniz mismatch");
    if (nabla_perm(expansion) != N_full) fail(r.leibniz_ok, "nabla Leibniz mismatch");

    if (!reduced_word_identity_check(grass_encode(0, lam), w, expansion))
        fail(r.word_count_ok, "reduced-word counting identity fails");
    return r;
}

VerifyReport verify_product(const Partition& lam, const PermutationZ& w,
                            const SchubElement& expansion) {
    return verify_product(lam, w, expansion, global_product_cache());
}

void cache_save(const ProductCache& cache, const std::string& path) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, val] : cache.snapshot())
        entries.push_back({{"lambda", key.first.str()},
                           {"perm", key.second.str()},
                           {"expansion", sum_to_json(val)}});
    nlohmann::json j{{"version", 1}, {"entries", std::move(entries)}};
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed for " + path);
}

void cache_load(ProductCache& cache, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed cache file " + path + ": " + e.what());
    }
    if (!j.is_object() || j.value("version", -1) != 1)
        throw VersionMismatch("cache " + path + " is not version 1");
    for (const auto& entry : j.at("entries")) {
        const Partition lam = Partition::parse(entry.at("lambda").get<std::string>());
        const PermutationZ w = PermutationZ::parse(entry.at("perm").get<std::string>());
        const SchubElement val = permutation_sum_from_json(entry.at("expansion"));
        SchubElement existing;
        if (cache.find(lam, w, existing)) {
            if (existing != val)
                throw ConflictError("cache entry for " + lam.str() + " * " + w.str() +
                                    " disagrees with the value already present");
        } else {
            cache.insert(lam, w, val);
        }
    }
}

}  // namespace diffschub

#include "diffschub/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace diffschub {

PermutationZ::PermutationZ(int start, std::vector<int> word)
    : start_(start), word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<int> sorted = word_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
        if (sorted[i] != start_ + i)
            throw MalformedWord("window is not a permutation of its range");
    }
    canonicalize();
}

void PermutationZ::canonicalize() {
    std::size_t lo = 0, hi = word_.size();
    while (lo < hi && word_[lo] == start_ + static_cast<int>(lo)) ++lo;
    while (hi > lo && word_[hi - 1] == start_ + static_cast<int>(hi) - 1) --hi;
    word_ = std::vector<int>(word_.begin() + lo, word_.begin() + hi);
    start_ += static_cast<int>(lo);
    if (word_.empty()) start_ = 1;
}

PermutationZ PermutationZ::parse(const std::string& s) {
    if (s.empty() || s == "id") return PermutationZ();
    int start = 1;
    std::string body = s;
    auto at = s.rfind('@');
    if (at != std::string::npos) {
        body = s.substr(0, at);
        try {
            std::size_t used = 0;
            start = std::stoi(s.substr(at + 1), &used);
            if (used != s.size() - at - 1) throw std::invalid_argument(s);
        } catch (const std::exception&) {
            throw MalformedWord("bad window start in '" + s + "'");
        }
    }
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t next = body.find(',', pos);
        std::string tok = body.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            std::size_t used = 0;
            word.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw MalformedWord("bad entry '" + tok + "' in '" + s + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return PermutationZ(start, word);
}

std::string PermutationZ::str() const {
    if (is_identity()) return "id";
    std::ostringstream os;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) os << ',';
        os << word_[i];
    }
    os << '@' << start_;
    return os.str();
}

int PermutationZ::apply(int i) const {
    if (i < start_ || i > window_end()) return i;
    return word_[i - start_];
}

int PermutationZ::preimage(int v) const {
    if (v < start_ || v > window_end()) return v;
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] == v) return start_ + static_cast<int>(i);
    throw InternalInconsistency("corrupt window");
}

int PermutationZ::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

std::vector<int> PermutationZ::descents() const {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < word_.size(); ++i)
        if (word_[i] > word_[i + 1]) out.push_back(start_ + static_cast<int>(i));
    return out;
}

PermutationZ PermutationZ::inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i)
        inv[word_[i] - start_] = start_ + static_cast<int>(i);
    return PermutationZ(start_, inv);
}

PermutationZ PermutationZ::shifted(int n) const {
    if (is_identity()) return *this;
    std::vector<int> word = word_;
    for (int& v : word) v += n;
    return PermutationZ(start_ + n, word);
}

std::vector<int> PermutationZ::lehmer_code() const {
    std::vector<int> code(word_.size(), 0);
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[j] < word_[i]) ++code[i];
    return code;
}

namespace {

// Rebuild w on a window that surely contains [lo..hi] and w's own window.
std::vector<int> window_images(const PermutationZ& w, int lo, int hi) {
    std::vector<int> img;
    img.reserve(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) img.push_back(w.apply(i));
    return img;
}

}  // namespace

std::pair<PermutationZ, int> left_s(int k, const PermutationZ& w) {
    int lo = std::min(w.window_start(), k);
    int hi = std::max(w.window_end(), k + 1);
    std::vector<int> img = window_images(w, lo, hi);
    int pk = -1, pk1 = -1;
    for (int i = 0; i < static_cast<int>(img.size()); ++i) {
        if (img[i] == k) pk = i;
        if (img[i] == k + 1) pk1 = i;
    }
    int delta = pk < pk1 ? +1 : -1;  // value k before k+1: swapping adds an inversion
    std::swap(img[pk], img[pk1]);
    return {PermutationZ(lo, img), delta};
}

std::pair<PermutationZ, int> right_s(int k, const PermutationZ& w) {
    int lo = std::min(w.window_start(), k);
    int hi = std::max(w.window_end(), k + 1);
    std::vector<int> img = window_images(w, lo, hi);
    int delta = w.apply(k) < w.apply(k + 1) ? +1 : -1;
    std::swap(img[k - lo], img[k + 1 - lo]);
    return {PermutationZ(lo, img), delta};
}

PermutationZ right_transposition(const PermutationZ& w, int a, int b) {
    int lo = std::min(w.window_start(), std::min(a, b));
    int hi = std::max(w.window_end(), std::max(a, b));
    std::vector<int> img = window_images(w, lo, hi);
    std::swap(img[a - lo], img[b - lo]);
    return PermutationZ(lo, img);
}

std::vector<int> left_descents(const PermutationZ& w) {
    std::vector<int> out;
    for (int k = w.window_start(); k < w.window_end(); ++k)
        if (w.preimage(k) > w.preimage(k + 1)) out.push_back(k);
    return out;
}

namespace {

void enumerate_words(const PermutationZ& w, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (w.is_identity()) {
        out.push_back(acc);
        return;
    }
    for (int k : left_descents(w)) {
        acc.push_back(k);
        enumerate_words(left_s(k, w).first, acc, out);
        acc.pop_back();
    }
}

std::map<PermutationZ, mpz_class> g_word_count;
std::mutex g_word_count_mutex;

mpz_class word_count_rec(const PermutationZ& w) {
    if (w.is_identity()) return 1;
    // Counts are shift-invariant; normalize to window start 1 so the memo is
    // shared across translates.
    PermutationZ v = w.shifted(1 - w.window_start());
    {
        std::lock_guard<std::mutex> lock(g_word_count_mutex);
        auto it = g_word_count.find(v);
        if (it != g_word_count.end()) return it->second;
    }
    mpz_class total = 0;
    for (int k : left_descents(v)) total += word_count_rec(left_s(k, v).first);
    std::lock_guard<std::mutex> lock(g_word_count_mutex);
    g_word_count.emplace(v, total);
    return total;
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const PermutationZ& w) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    enumerate_words(w, acc, out);
    return out;
}

mpz_class reduced_word_count(const PermutationZ& w) { return word_count_rec(w); }

FormalSum<PermutationZ> divided_difference(int i, const FormalSum<PermutationZ>& x) {
    if (i == 0)
        throw InternalInconsistency(
            "divided_difference at 0 would break the Schur-factor pinning");
    FormalSum<PermutationZ> out;
    for (const auto& [w, c] : x) {
        if (!w.has_descent(i)) continue;
        out.add(right_s(i, w).first, c);
    }
    return out;
}

GrassCode grass_decode(const PermutationZ& w) {
    if (w.is_identity()) return {0, Partition()};
    auto des = w.descents();
    if (des.size() != 1)
        throw NotGrassmannian(w.str() + " has " + std::to_string(des.size()) + " descents");
    const int k = des[0];
    std::vector<int> parts;
    for (int i = k; i >= w.window_start(); --i) {
        int p = w.apply(i) - i;
        if (p <= 0) break;  // parts are weakly decreasing; zeros trimmed
        parts.push_back(p);
    }
    return {k, Partition(parts)};
}

PermutationZ grass_encode(int k, const Partition& shape) {
    if (shape.rows() == 0) return PermutationZ::identity();
    const int m = shape.rows();
    const int lo = k - m + 1;
    const int hi = k + shape.part(1);
    std::vector<int> img(hi - lo + 1, 0);
    std::vector<bool> used(hi - lo + 1, false);
    for (int j = 1; j <= m; ++j) {
        int pos = k - j + 1;
        int val = pos + shape.part(j);
        img[pos - lo] = val;
        used[val - lo] = true;
    }
    int next = lo;
    for (int pos = k + 1; pos <= hi; ++pos) {
        while (used[next - lo]) ++next;
        img[pos - lo] = next;
        used[next - lo] = true;
    }
    return PermutationZ(lo, img);
}

PermutationZ from_lehmer_code(const std::vector<int>& code) {
    int n = static_cast<int>(code.size());
    int maxv = n;
    for (int i = 0; i < n; ++i) maxv = std::max(maxv, i + 1 + code[i]);
    std::vector<int> values(maxv);
    std::iota(values.begin(), values.end(), 1);
    std::vector<int> img;
    img.reserve(maxv);
    for (int i = 0; i < n; ++i) {
        if (code[i] >= static_cast<int>(values.size()))
            throw NotInSpan("exponent vector is not a Lehmer code");
        img.push_back(values[code[i]]);
        values.erase(values.begin() + code[i]);
    }
    for (int v : values) img.push_back(v);
    return PermutationZ(1, img);
}

}  // namespace diffschub

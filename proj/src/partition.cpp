#include "diffschub/partition.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace diffschub {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw MalformedWord("not weakly decreasing positive parts");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& s) {
    if (s.empty() || s == "0") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const MalformedWord&) {
            throw;
        } catch (const std::exception&) {
            throw MalformedWord("bad partition part '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Partition(parts);
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::conjugate() const {
    std::vector<int> t;
    if (!parts_.empty()) {
        t.resize(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++t[j];
    }
    return Partition(t);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

int lex_compare(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    const auto& pa = a.parts();
    const auto& pb = b.parts();
    for (std::size_t i = 0; i < std::min(pa.size(), pb.size()); ++i)
        if (pa[i] != pb[i]) return pa[i] < pb[i] ? -1 : 1;
    if (pa.size() != pb.size()) return pa.size() < pb.size() ? -1 : 1;
    return 0;
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_compare(a, b) > 0;  // within a degree: lex-greatest first
}

std::vector<std::pair<Box, Partition>> removable_corners(const Partition& lam) {
    std::vector<std::pair<Box, Partition>> out;
    for (int i = 1; i <= lam.rows(); ++i) {
        if (lam.part(i) > lam.part(i + 1)) {
            std::vector<int> p = lam.parts();
            --p[i - 1];
            out.push_back({Box{i, lam.part(i)}, Partition(p)});
        }
    }
    return out;
}

std::vector<std::pair<Box, Partition>> addable_corners(const Partition& lam) {
    std::vector<std::pair<Box, Partition>> out;
    for (int i = 1; i <= lam.rows() + 1; ++i) {
        if (i == 1 || lam.part(i) < lam.part(i - 1)) {
            std::vector<int> p = lam.parts();
            if (i <= lam.rows())
                ++p[i - 1];
            else
                p.push_back(1);
            out.push_back({Box{i, lam.part(i) + 1}, Partition(p)});
        }
    }
    return out;
}

std::vector<StripRemoval> border_strips_removable(const Partition& lam, int k) {
    std::vector<StripRemoval> out;
    if (k < 1 || k > lam.size()) return out;
    // A removable border strip is a rim walk of k boxes starting at the end of
    // some row r and moving down (when the next row reaches this column) or
    // left.  The walk stays on the rim, so each touched row loses a suffix;
    // validity is just "what remains is weakly decreasing".
    for (int r = 1; r <= lam.rows(); ++r) {
        int i = r, j = lam.part(r);
        std::vector<int> min_col(lam.rows() + 2, 0);  // leftmost strip column per row
        min_col[i] = j;
        bool ok = true;
        for (int step = 1; step < k; ++step) {
            if (lam.part(i + 1) == j) {
                ++i;
                min_col[i] = j;
            } else if (j > 1) {
                --j;
                min_col[i] = j;
            } else {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<int> rest = lam.parts();
        for (int t = r; t <= i; ++t) rest[t - 1] = min_col[t] - 1;
        bool dec = true;
        for (std::size_t t = 0; t + 1 < rest.size(); ++t)
            if (rest[t] < rest[t + 1]) { dec = false; break; }
        if (!dec) continue;
        out.push_back({Partition(rest), i - r + 1});
    }
    return out;
}

long long hook_syt_count(const Partition& lam) {
    const int n = lam.size();
    Partition conj = lam.conjugate();
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), n);
    for (int i = 1; i <= lam.rows(); ++i) {
        for (int j = 1; j <= lam.part(i); ++j) {
            int hook = (lam.part(i) - j) + (conj.part(j) - i) + 1;
            mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), hook);
        }
    }
    if (!num.fits_slong_p())
        throw InternalInconsistency("hook_syt_count overflow for " + lam.str());
    return num.get_si();
}

namespace {
void gen_partitions(int n, int max_part, int max_rows, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (max_rows == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, max_rows - 1, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_rows) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> acc;
    gen_partitions(n, max_part < 0 ? n : max_part, max_rows < 0 ? n : max_rows, acc, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int s = 0; s <= n; ++s)
        for (auto& p : partitions_of(s)) out.push_back(std::move(p));
    return out;
}

}  // namespace diffschub

#pragma once
#include <string>
#include <utility>
#include <vector>

#include "diffschub/errors.hpp"

namespace diffschub {

// Box of a Young diagram in English notation: 1-based, row 1 on top.  The
// content j - i is the weight used by the content-weighted corner operator.
struct Box {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    friend bool operator==(const Box& a, const Box& b) {
        return a.row == b.row && a.col == b.col;
    }
};

// Weakly decreasing positive parts; the empty partition is the unit.
//
// Two orders coexist and must not be confused:
//  * lex_compare: size first, then parts lexicographically ((3) > (2,1));
//    this is the order the recovery loop maximizes over.
//  * operator<: canonical storage order = size ascending, then lex
//    DESCENDING, so that within a degree the lex-greatest partition is
//    iterated first.  All printed output follows operator<.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& s);  // "4,3,1"; "0" or "" is empty
    std::string str() const;                       // empty prints as "0"

    int size() const { return size_; }  // number of boxes
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {  // 1-based; 0 beyond the last row
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// -1 / 0 / +1; size decides first, then lexicographic on parts.
int lex_compare(const Partition& a, const Partition& b);

// All (box, result) pairs whose removal/addition keeps a partition, ordered by
// row.  addable_corners includes the new-row box (rows()+1, 1).
std::vector<std::pair<Box, Partition>> removable_corners(const Partition& lam);
std::vector<std::pair<Box, Partition>> addable_corners(const Partition& lam);

struct StripRemoval {
    Partition rest;  // what is left of lambda
    int height = 0;  // rows the strip occupies
};

// All mu with |mu| = |lambda| - k such that lambda \ mu is a border strip
// (connected rim segment, no 2x2 block), ordered by the strip's top row.
std::vector<StripRemoval> border_strips_removable(const Partition& lam, int k);

// Number of standard Young tableaux via the hook length formula.
long long hook_syt_count(const Partition& lam);

// Enumeration helpers.  partitions_of lists the partitions of n in descending
// lex order (the canonical within-degree order); constraints < 0 mean "none".
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_rows = -1);
std::vector<Partition> partitions_up_to(int n);  // sizes 0..n, canonical order

}  // namespace diffschub

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "diffschub/bsops.hpp"
#include "diffschub/partition.hpp"
#include "diffschub/rational.hpp"
#include "diffschub/yops.hpp"

namespace diffschub {

struct OperatorExpr;
using OpPtr = std::shared_ptr<const OperatorExpr>;

// Expression tree over the operator algebra: atoms xi, nabla, rho(k) and
// xiL(lambda), combined by juxtaposition (composition, the rightmost factor
// acts first), '+'/'-', rational scaling "c * ...", and commutators [A,B].
struct OperatorExpr {
    enum class Kind { Xi, Nabla, Rho, XiLam, Compose, Sum, Scale, Bracket };

    Kind kind = Kind::Xi;
    int k = 0;                    // Rho index
    Partition lam;                // XiLam shape
    Rational scale;               // Scale factor
    std::vector<OpPtr> children;  // Compose/Sum in written order; Bracket holds two
    std::vector<int> signs;       // Sum only: +1 or -1 per child
};

// Grammar (whitespace-insensitive):
//   expr := sum
//   sum  := ('+'|'-')? prod (('+'|'-') prod)*
//   prod := (rational '*')? atom+
//   atom := 'xi' | 'nabla' | 'rho(' int ')' | 'xiL(' partition ')'
//         | '[' expr ',' expr ']' | '(' expr ')'
// Throws ParseError carrying the byte offset of the problem.
OpPtr parse_op(const std::string& s);

// Prints a form that parse_op maps back to the identical tree.
std::string print_op(const OperatorExpr& e);
inline std::string print_op(const OpPtr& e) { return print_op(*e); }

DiagElement apply_op(const OperatorExpr& e, const DiagElement& x);
SchubElement apply_op(const OperatorExpr& e, const SchubElement& x);
inline DiagElement apply_op(const OpPtr& e, const DiagElement& x) { return apply_op(*e, x); }
inline SchubElement apply_op(const OpPtr& e, const SchubElement& x) { return apply_op(*e, x); }

}  // namespace diffschub

#include "diffschub/serial.hpp"

#include <sstream>

namespace diffschub {

using nlohmann::json;

namespace {

template <typename K>
json sum_json(const FormalSum<K>& s, const char* basis) {
    json terms = json::array();
    for (const auto& [k, c] : s) terms.push_back({{"key", k.str()}, {"coeff", c.str()}});
    return json{{"basis", basis}, {"terms", std::move(terms)}};
}

void check_basis(const json& j, const char* want) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("formal sum JSON needs \"basis\" and \"terms\"", 0);
    if (j.at("basis") != want)
        throw ParseError(std::string("expected basis \"") + want + "\", got " +
                             j.at("basis").dump(),
                         0);
}

template <typename K, typename ParseKey>
FormalSum<K> sum_from_json(const json& j, const char* want, ParseKey&& parse_key) {
    check_basis(j, want);
    FormalSum<K> out;
    for (const auto& t : j.at("terms"))
        out.add(parse_key(t.at("key").get<std::string>()),
                Rational::parse(t.at("coeff").get<std::string>()));
    return out;
}

}  // namespace

json sum_to_json(const FormalSum<Partition>& s) { return sum_json(s, "partition"); }
json sum_to_json(const FormalSum<PermutationZ>& s) { return sum_json(s, "permutation"); }

FormalSum<Partition> partition_sum_from_json(const json& j) {
    return sum_from_json<Partition>(j, "partition", &Partition::parse);
}

FormalSum<PermutationZ> permutation_sum_from_json(const json& j) {
    return sum_from_json<PermutationZ>(j, "permutation", &PermutationZ::parse);
}

json monomials_to_json(const oracle::MonomialMap& p) {
    json terms = json::array();
    for (const auto& [exp, c] : p)
        terms.push_back({{"exp", exp}, {"coeff", std::to_string(c)}});
    return json{{"vars", {p.lo(), p.hi()}}, {"terms", std::move(terms)}};
}

oracle::MonomialMap monomials_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw ParseError("monomial JSON needs \"vars\" and \"terms\"", 0);
    const auto& vars = j.at("vars");
    if (!vars.is_array() || vars.size() != 2)
        throw ParseError("\"vars\" must be [lo,hi]", 0);
    oracle::MonomialMap out(vars[0].get<int>(), vars[1].get<int>());
    for (const auto& t : j.at("terms")) {
        const Rational c = Rational::parse(t.at("coeff").get<std::string>());
        if (!c.is_integer())
            throw ParseError("monomial coefficients must be integers", 0);
        const mpz_class z = c.as_integer();
        if (!z.fits_slong_p())
            throw ParseError("monomial coefficient out of range: " + c.str(), 0);
        out.add(t.at("exp").get<std::vector<int>>(), z.get_si());
    }
    return out;
}

namespace {

template <typename K>
std::string sum_text(const FormalSum<K>& s) {
    if (s.is_zero()) return "0\n";
    std::ostringstream os;
    for (const auto& [k, c] : s) os << c.str() << " * " << k.str() << "\n";
    return os.str();
}

// Split "a + b - c" on top-level signs.  A sign is a separator only when the
// previous non-space character could end a term: a digit, or the 'd' of
// "id".  A sign after ',', '@', '*' or at the start opens a number instead.
template <typename K, typename ParseKey>
FormalSum<K> parse_sum(const std::string& s, ParseKey&& parse_key) {
    FormalSum<K> out;
    std::size_t pos = 0;
    int sign = 1;
    char prev = 0;
    std::string term;
    auto trimmed = [](const std::string& t, std::size_t at) {
        const auto b = t.find_first_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty term in element sum", at);
        return t.substr(b, t.find_last_not_of(" \t") - b + 1);
    };
    auto flush = [&](std::size_t at) {
        // term: "coeff*key" or bare "key"
        const auto star = term.find('*');
        Rational c(1);
        std::string key = term;
        if (star != std::string::npos) {
            c = Rational::parse(trimmed(term.substr(0, star), at));
            key = term.substr(star + 1);
        }
        out.add(parse_key(trimmed(key, at)), Rational(sign) * c);
        term.clear();
    };
    for (; pos < s.size(); ++pos) {
        const char ch = s[pos];
        if ((ch == '+' || ch == '-') && ((prev >= '0' && prev <= '9') || prev == 'd')) {
            flush(pos);
            sign = ch == '-' ? -1 : 1;
            continue;
        }
        term += ch;
        if (ch != ' ' && ch != '\t') prev = ch;
    }
    flush(s.size());
    return out;
}

}  // namespace

std::string sum_to_text(const FormalSum<Partition>& s) { return sum_text(s); }
std::string sum_to_text(const FormalSum<PermutationZ>& s) { return sum_text(s); }

FormalSum<Partition> parse_partition_sum(const std::string& s) {
    return parse_sum<Partition>(s, &Partition::parse);
}

FormalSum<PermutationZ> parse_permutation_sum(const std::string& s) {
    return parse_sum<PermutationZ>(s, &PermutationZ::parse);
}

}  // namespace diffschub

#include "tfund/numeric.hpp"

#include <cctype>

namespace tfund {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(text)) throw input_error("not a rational: '" + text + "'");
        return Rat(Int(text));
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    if (!is_integer_literal(a) || !is_integer_literal(b))
        throw input_error("not a rational: '" + text + "'");
    Int nume(a), deno(b);
    if (deno == 0) throw input_error("zero denominator: '" + text + "'");
    return Rat(nume, deno);
}

namespace {
template <typename V>
std::string join_vec(const V& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}
}  // namespace

std::string to_string(const IntVec& v) { return join_vec(v); }
std::string to_string(const RatVec& v) { return join_vec(v); }

}  // namespace tfund

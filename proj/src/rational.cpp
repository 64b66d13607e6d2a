#include "subarr/rational.hpp"

#include "subarr/error.hpp"

#include <cctype>
#include <optional>

namespace subarr {

namespace {

// Decimal integer with an optional sign; returns it with any leading '+'
// stripped (cpp_int does not take one), or nullopt.
std::optional<std::string> integer_literal(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const bool signed_ = s[0] == '-' || s[0] == '+';
    if (signed_ && s.size() == 1) return std::nullopt;
    for (std::size_t i = signed_ ? 1 : 0; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return std::nullopt;
        }
    }
    return s[0] == '+' ? s.substr(1) : s;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            const auto lit = integer_literal(text);
            if (!lit) input_error("malformed rational '" + text + "'");
            return Rational(Integer(*lit));
        }
        const auto num = integer_literal(text.substr(0, slash));
        const auto den = integer_literal(text.substr(slash + 1));
        if (!num || !den) {
            input_error("malformed rational '" + text + "'");
        }
        const Integer q(*den);
        if (q == 0) {
            input_error("zero denominator in rational '" + text + "'");
        }
        // Division normalizes both the sign and the gcd.
        return Rational(Integer(*num)) / q;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        input_error("malformed rational '" + text + "'");
    }
}

std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += "/";
        out += denominator(value).str();
    }
    return out;
}

} // namespace subarr

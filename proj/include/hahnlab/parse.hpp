#ifndef HAHNLAB_PARSE_HPP
#define HAHNLAB_PARSE_HPP

// Number grammar shared by every command:
//   number := real | imag | real ('+'|'-') imag
//   real   := ['+'|'-'] (digits | digits '/' digits | decimal)
//   imag   := [real] 'i'
// Decimals are read exactly, so 0.25 is 1/4.

#include <cctype>
#include <regex>
#include <string>

#include <gmpxx.h>

#include "hahnlab/errors.hpp"
#include "hahnlab/gaussian_rational.hpp"

namespace hahnlab {

namespace detail {

inline mpq_class parse_real_part(const std::string& text, const std::string& whole)
{
    static const std::regex fraction(R"([+-]?\d+(/\d+)?)");
    static const std::regex decimal(R"(([+-]?)(\d*)\.(\d*))");
    std::smatch m;
    if (std::regex_match(text, fraction)) {
        mpq_class q(text[0] == '+' ? text.substr(1) : text, 10); // GMP rejects a leading '+'
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + whole + "'");
        q.canonicalize();
        return q;
    }
    if (std::regex_match(text, m, decimal) && (m[2].length() + m[3].length()) > 0) {
        const std::string digits = m[2].str() + m[3].str();
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(m[3].length()));
        mpq_class q(mpz_class(digits, 10), den);
        q.canonicalize();
        return m[1] == "-" ? mpq_class(-q) : q;
    }
    throw parse_error("not a number: '" + whole + "' (expected forms like 3, -1/2, 0.25, 1/2+3/4i)");
}

} // namespace detail

inline GaussianRational parse_number(const std::string& input)
{
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw parse_error("empty number");
    if (s.back() != 'i') return {detail::parse_real_part(s, input)};

    s.pop_back();
    // The sign separating real and imaginary parts is the last one past position 0.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    const std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_text = split == std::string::npos ? s : s.substr(split);
    if (im_text.empty() || im_text == "+" || im_text == "-") im_text += "1";
    const mpq_class re = re_text.empty() ? mpq_class(0) : detail::parse_real_part(re_text, input);
    return {re, detail::parse_real_part(im_text, input)};
}

inline Complex parse_complex(const std::string& input) { return parse_number(input).to_complex(); }

} // namespace hahnlab

#endif

// instanton-verify: exact computer algebra for framed autodual instanton data.
// Distributed under the MIT license; see LICENSE in the repository root.

#include "instanton/rational.hpp"

#include <cctype>

namespace instanton {

BigRational BigRational::from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal", 0);
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto read_digits = [&](const char* what) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(std::string("expected ") + what, pos);
        return text.substr(start, pos - start);
    };
    std::string num = read_digits("integer numerator");
    std::string den = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits("positive denominator");
    }
    if (pos != text.size()) throw ParseError("trailing characters in rational literal", pos);
    mpz_class n(num), d(den);
    if (d == 0) throw DivisionByZeroError();
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return BigRational(q);
}

std::string GaussRational::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re_.is_zero()) out += re_.to_string();
    if (!im_.is_zero()) {
        if (!out.empty() && im_.sign() > 0) out += "+";
        if (im_ == BigRational(-1)) {
            out += "-i";
        } else if (im_.is_one()) {
            out += "i";
        } else {
            out += im_.to_string() + "*i";
        }
    }
    return out;
}

}  // namespace instanton

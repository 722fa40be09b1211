#include "cubiclines/rational.hpp"

#include <cctype>

namespace cubiclines {

Q q_parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
    if (digits == 0) throw ParseError("malformed rational literal: " + text);
    if (i < text.size()) {
        if (text[i] != '/') throw ParseError("malformed rational literal: " + text);
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i, ++den_digits;
        if (den_digits == 0 || i != text.size())
            throw ParseError("malformed rational literal: " + text);
    }
    Q q;
    if (q.set_str(text, 10) != 0) throw ParseError("malformed rational literal: " + text);
    if (sgn(q.get_den()) == 0) throw ParseError("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string q_str(const Q& q) {
    return q.get_str();
}

} // namespace cubiclines

#include "simplexeig/text_format.hpp"

#include <cstdio>

namespace simplexeig {

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt3(double x)
{
    char buf[24];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string join17(const Eigen::VectorXd& v, const std::string& sep)
{
    std::string out;
    for (int i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += fmt17(v[i]);
    }
    return out;
}

std::string json_escape(const std::string& s)
{
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

} // namespace simplexeig

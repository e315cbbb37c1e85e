#include "gaingraph/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace gaingraph {

std::string format_number(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

double round_output(double v) {
    if (!std::isfinite(v)) return v;
    return std::strtod(format_number(v).c_str(), nullptr);
}

std::string format_complex(std::complex<double> z) {
    std::string im = format_number(z.imag());
    if (im.front() != '-') im.insert(im.begin(), '+');
    return format_number(z.real()) + im + "i";
}

}  // namespace gaingraph

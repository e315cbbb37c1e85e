#pragma once

#include <complex>
#include <string>

namespace gaingraph {

/// Numeric output precision used by every writer.
inline constexpr int kOutputDigits = 12;

/// "%.12g", with negative zero printed as "0".
std::string format_number(double v);
/// The value rounded to 12 significant digits (for JSON number output).
double round_output(double v);
/// "re+imi" / "re-imi".
std::string format_complex(std::complex<double> z);

}  // namespace gaingraph

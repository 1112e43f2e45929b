#pragma once

#include <string>

namespace mquma {

/// Shortest decimal form that round-trips the exact double value.
/// Locale-independent, so CSV output is byte-stable across runs.
std::string format_double(double value);

}  // namespace mquma

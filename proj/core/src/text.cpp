#include "mquma/text.hpp"

#include <charconv>
#include <system_error>

namespace mquma {

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

}  // namespace mquma

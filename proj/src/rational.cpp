#include "swf/rational.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/core.h>

namespace swf {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
        throw std::invalid_argument(fmt::format("invalid rational \"{}\"", whole));
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, text));
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0)
        throw std::invalid_argument(fmt::format("invalid rational \"{}\": zero denominator", text));
    return Rational(num, den);
}

std::string format_rational(const Rational& r)
{
    return fmt::format("{}/{}", r.numerator(), r.denominator());
}

Rational reduce_mod(const Rational& r, std::int64_t modulus)
{
    const std::int64_t span = modulus * r.denominator();
    std::int64_t num = r.numerator() % span;
    if (num < 0)
        num += span;
    return Rational(num, r.denominator());
}

}  // namespace swf

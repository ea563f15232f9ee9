#ifndef HATKIT_BIG_COUNT_HPP
#define HATKIT_BIG_COUNT_HPP

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hatkit {

/// Exact nonnegative integer used for group orders and coset counts.
using BigCount = boost::multiprecision::cpp_int;

BigCount factorial(std::size_t n);

/// n!/2, the order of the alternating group of degree n (n >= 2).
BigCount alternating_order(std::size_t n);

std::string to_string(BigCount const &value);

} // namespace hatkit

#endif // HATKIT_BIG_COUNT_HPP

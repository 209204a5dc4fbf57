#pragma once

#include <concepts>
#include <string>

namespace cubiq {

// The scalar interface the polynomial/rational-function templates build on.
// zero()/one()/scalar_from_int() are instance methods so that scalars with a
// runtime context (a prime field element, say) can hand out compatible
// constants.
template <typename K>
concept FieldElement =
    std::copyable<K> && std::equality_comparable<K> &&
    requires(const K a, const K b, long n) {
        { a + b } -> std::convertible_to<K>;
        { a - b } -> std::convertible_to<K>;
        { a * b } -> std::convertible_to<K>;
        { a / b } -> std::convertible_to<K>;
        { -a } -> std::convertible_to<K>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { a.is_one() } -> std::convertible_to<bool>;
        { a.zero() } -> std::convertible_to<K>;
        { a.one() } -> std::convertible_to<K>;
        { a.scalar_from_int(n) } -> std::convertible_to<K>;
        { a.to_string() } -> std::convertible_to<std::string>;
    };

}  // namespace cubiq

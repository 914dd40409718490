#pragma once

#include "hecke/fields.hpp"

#include <tuple>

namespace testing_fields {

using namespace hecke;

template <class Spec>
auto field(std::string_view text) {
  return make_field(std::get<Spec>(parse_field_spec(text)));
}

// Characteristic 0 and p, q = 1 and q != 1, prime and extension fields.
inline auto mixed() {
  return std::tuple{CyclotomicField(2), CyclotomicField(3), CyclotomicField(4), PrimeField(7, 2), PrimeField(5, 1),
                    field<ExtensionSpec>("ext:p=2,e=3"), field<ExtensionSpec>("ext:p=3,e=4")};
}

template <class Tuple, class Fn>
void for_each_field(const Tuple& fields, Fn&& fn) {
  std::apply([&](const auto&... f) { (fn(f), ...); }, fields);
}

}  // namespace testing_fields

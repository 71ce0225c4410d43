#ifndef QSYMKIT_IO_HPP
#define QSYMKIT_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "qsymkit/equivariant.hpp"
#include "qsymkit/gamma.hpp"
#include "qsymkit/orderpoly.hpp"
#include "qsymkit/qsym.hpp"

namespace qsk {

// {"elements":["a","b"],"lt1":[["a","b"]],"lt2":[],"w":{"a":1,"b":2}}
// lt1, lt2 and w are optional; w defaults to all ones. Relations are
// generator pairs and get closed on load.
WeightedDoublePoset parse_poset_json(std::string_view text);
std::string poset_to_json(const WeightedDoublePoset& d);

// {"generators":[{"a":"b","b":"a"}]}; unmentioned labels are fixed.
GroupAction parse_group_json(std::string_view text, const WeightedDoublePoset& base,
                             std::size_t cap = kDefaultGroupCap);

// {"terms":[{"composition":[2,1],"coefficient":"1/2"}, ...]}
std::string qsym_to_json(const QSymElem& f);
QSymElem qsym_from_json(std::string_view text);
std::string tensor_to_json(const Tensor& t);
std::string order_polynomial_to_json(const OrderPolynomial& p);

}  // namespace qsk

#endif  // QSYMKIT_IO_HPP

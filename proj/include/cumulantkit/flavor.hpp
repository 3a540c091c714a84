#ifndef CUMULANTKIT_FLAVOR_HPP
#define CUMULANTKIT_FLAVOR_HPP

#include <string>

namespace cumulantkit {

// The four natural independences. Monotone is the only one whose algebra
// labels carry a linear order that matters.
enum class Flavor { Tensor, Free, Boolean, Monotone };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& name);

inline bool is_universal(Flavor f) { return f != Flavor::Monotone; }

} // namespace cumulantkit

#endif

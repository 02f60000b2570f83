#pragma once

// Built-in instances on Δ(2,3;4):
//   paper-ex1-invalid  x = 1 on {14, 23}, 0 elsewhere; y = 1 on {234}, 0 elsewhere
//   paper-ex1-x23      the same with x23 = 0
//   paper-ex1-y234     the same with y234 = 0

#include "flagdress/tropical.hpp"

#include <string_view>
#include <vector>

namespace flagdress {

std::vector<std::string_view> builtin_names();
// Throws DomainError for an unknown name.
FlagInstance builtin_instance(std::string_view name);

} // namespace flagdress

#include "flagdress/builtin.hpp"

#include "flagdress/errors.hpp"

#include <string>

namespace flagdress {

std::vector<std::string_view> builtin_names() { return {"paper-ex1-invalid", "paper-ex1-x23", "paper-ex1-y234"}; }

FlagInstance builtin_instance(std::string_view name) {
    const bool x23 = name == "paper-ex1-x23";
    const bool y234 = name == "paper-ex1-y234";
    if (!x23 && !y234 && name != "paper-ex1-invalid")
        throw DomainError("unknown example '" + std::string(name) + "'");
    PluckerVector x(4, 2), y(4, 3);
    x[Subset::of(4, {1, 4})] = Rational(1);
    if (!x23) x[Subset::of(4, {2, 3})] = Rational(1);
    if (!y234) y[Subset::of(4, {2, 3, 4})] = Rational(1);
    return FlagInstance{4, {x, y}};
}

} // namespace flagdress

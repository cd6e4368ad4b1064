#include <z2c/rational.hpp>

#include <stdexcept>

namespace z2c {

void Rat::throw_division_by_zero() {
    throw std::domain_error("rational division by zero");
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_text();
}

} // namespace z2c

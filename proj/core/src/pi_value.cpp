#include "mtv/pi_value.hpp"

#include "mtv/errors.hpp"

#include <cctype>
#include <string>

namespace mtv {

namespace {

void require_same_weight(const PiValue& a, const PiValue& b) {
    if (a.weight() != b.weight())
        throw HomogeneityError("pi-weight mismatch: " + std::to_string(a.weight()) + " vs " +
                               std::to_string(b.weight()));
}

}  // namespace

PiValue& PiValue::operator+=(const PiValue& o) {
    require_same_weight(*this, o);
    coef_ += o.coef_;
    return *this;
}

PiValue& PiValue::operator-=(const PiValue& o) {
    require_same_weight(*this, o);
    coef_ -= o.coef_;
    return *this;
}

PiValue& PiValue::operator*=(const PiValue& o) {
    coef_ *= o.coef_;
    weight_ += o.weight_;
    return *this;
}

PiValue& PiValue::operator*=(const Rational& s) {
    coef_ *= s;
    return *this;
}

std::string PiValue::to_string() const {
    std::string s = coef_.to_string();
    if (weight_ != 0) s += " * pi^" + std::to_string(weight_);
    return s;
}

PiValue PiValue::parse(std::string_view text) {
    const std::string_view marker = " * pi^";
    const auto pos = text.find(marker);
    if (pos == std::string_view::npos) return PiValue(Rational::parse(text), 0);
    const std::string_view w = text.substr(pos + marker.size());
    if (w.empty() || w.size() > 9)
        throw DomainError("malformed pi-value '" + std::string(text) + "'");
    for (char c : w)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw DomainError("malformed pi-value '" + std::string(text) + "'");
    return PiValue(Rational::parse(text.substr(0, pos)), static_cast<unsigned>(std::stoul(std::string(w))));
}

PiValue pi_add(const PiValue& a, const PiValue& b) { return a + b; }

std::ostream& operator<<(std::ostream& os, const PiValue& v) { return os << v.to_string(); }

}  // namespace mtv

// Copyright 2026 The qlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLP_EXPONENT_HPP_
#define QLP_EXPONENT_HPP_

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlp {

// Norm exponent p in [1, inf]. Infinity is a distinguished state, never a
// floating sentinel, so pow() is only ever called with finite exponents.
class Exponent {
  public:
    // Implicit on purpose: schatten_norm(x, 2) should just work.
    Exponent(double p) : value_(p) {
        if (!std::isfinite(p) || p < 1.0) {
            throw std::invalid_argument(
                "norm exponent must be a finite value >= 1 (use Exponent::inf() for p = infinity); got " +
                std::to_string(p));
        }
    }

    static Exponent inf() {
        Exponent e;
        e.infinite_ = true;
        return e;
    }

    bool is_inf() const { return infinite_; }

    double value() const {
        if (infinite_) {
            throw std::logic_error("exponent is infinite; check is_inf() before calling value()");
        }
        return value_;
    }

    // 1/p, with 1/inf = 0. All exponent arithmetic goes through reciprocals.
    double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }

    // Hoelder conjugate p' with 1/p + 1/p' = 1.
    Exponent conjugate() const {
        if (infinite_) return Exponent(1.0);
        if (value_ == 1.0) return inf();
        return Exponent(value_ / (value_ - 1.0));
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend bool operator==(const Exponent& a, const Exponent& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
    // p <= q in the exponent order iff 1/p >= 1/q.
    friend bool operator<=(const Exponent& a, const Exponent& b) {
        return a.reciprocal() >= b.reciprocal();
    }
    friend bool operator<(const Exponent& a, const Exponent& b) {
        return a.reciprocal() > b.reciprocal();
    }

  private:
    Exponent() : value_(0.0), infinite_(true) { }

    double value_;
    bool infinite_ = false;
};

}  // namespace qlp

#endif  // QLP_EXPONENT_HPP_

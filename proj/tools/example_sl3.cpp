// Minimal library walk-through for SL(3), p = 1: the zeta function, its
// functional equation and the first zero on the critical line.

#include <weng/numerics.hpp>

#include <iostream>

using namespace weng;

int main() {
    auto C = make_case({Series::A, 2}, 1);
    auto z = zhat_p(C);
    std::cout << "c_p     = " << C.c() << "\n";
    std::cout << "zhat_p  = " << render(z, Format::text) << "\n";
    std::cout << "FE      : " << (check_functional_equation(z, C.c(), 1).ok ? "holds" : "fails") << "\n";

    auto R = build_XEQD(C);
    auto rep = scan_zeros_on_line(R, 20, EvalContext{});
    for (const auto& zero : rep.zeros) std::cout << "zero    : s = " << -C.c() / 2.0 << " + " << zero.t << " i\n";
    std::cout << "counted : " << rep.rectangle_count << " in the rectangle\n";
}

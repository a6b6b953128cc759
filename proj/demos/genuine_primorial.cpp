// Build a genuine primary pseudo-polynomial that tracks the primorials,
// then confirm it is certified and has no small recurrence.

#include <iostream>

#include <ppoly/ppoly.hpp>

int main(int argc, char **argv)
{
    using namespace ppoly;
    const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 60;

    const auto c = construct_genuine(GrowthFn::primorial(), n);
    std::cout << "A_" << n << " = " << c.A[n] << '\n';
    std::cout << "P_" << n << " = " << primorial(n) << '\n';
    std::cout << "primary-hall: " << certify_primary_hall(c.A).verdict_text() << '\n';

    GuessBudget budget;
    budget.S_max = 3;
    budget.D_max = 3;
    const auto rec = guess_recurrence(c.A, budget);
    std::cout << "recurrence with order <= 3, degree <= 3: " << (rec ? "found" : "none") << '\n';

    const auto g = growth_exponent(c.A);
    if (g.last) {
        std::cout << "log(A_n)/n = " << g.last->to_double() << '\n';
    }
}

// Certify a few classic prefixes and print the reports.

#include <iostream>

#include <ppoly/ppoly.hpp>

int main()
{
    using namespace ppoly;

    std::vector<BigInt> primorials;
    for (std::size_t n = 0; n < 12; ++n) {
        primorials.push_back(primorial(n));
    }
    const auto sums = inverse_binomial_transform(IntSequence(primorials));
    const IntSequence triangular{0, 1, 3, 6, 10, 15, 21};

    for (const auto &[label, seq] : {std::pair{"sum C(n,k) P_k", sums}, std::pair{"triangular", triangular}}) {
        std::cout << label << '\n';
        for (const auto &r : {certify_primary_direct(seq), certify_primary_hall(seq), certify_pseudo_hall(seq)}) {
            std::cout << "  " << r.check << ": " << r.verdict_text() << '\n';
        }
    }
}

// Genus-two monotone Hurwitz numbers from the rational form produced by the
// operator pipeline, compared with the single-cycle formula.

#include <iostream>

#include "hurwitz/evaluator.hpp"

using namespace hurwitz;

int main()
{
    const RationalForm form = pipeline_rational_form(2);
    std::cout << "constant " << to_string(form.constant) << "\n";
    for (const auto& [alpha, c] : form.terms)
        std::cout << "c" << alpha.str() << " = " << to_string(c) << "\n";

    int bad = 0;
    for (int d = 1; d <= 6; ++d) {
        const Partition alpha{d};
        const Rat h = evaluate_form(form, alpha);
        const Rat mn = mn_single_cycle(2, d);
        std::cout << "H_2(" << alpha.str() << ") = " << to_string(h) << (h == mn ? "" : "  MISMATCH") << "\n";
        bad += h != mn;
    }
    const Partition pair{3, 2};
    std::cout << "H_2(" << pair.str() << ") = " << to_string(evaluate_form(form, pair)) << "\n";
    return bad == 0 ? 0 : 1;
}

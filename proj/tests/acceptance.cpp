#include <iostream>

#include "isotree/suite.hpp"

int main() {
    auto results = isotree::run_acceptance_suite(std::cout);
    for (const auto& r : results)
        if (!r.pass) return 1;
    return 0;
}

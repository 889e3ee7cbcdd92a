#include <iostream>

#include "waring/acceptance.hpp"

// End-to-end acceptance gate: one PASS/FAIL line per criterion, nonzero
// exit on any failure. Also reachable as `wrank selftest`.

int main() {
    waring::acceptance::AcceptanceReport report =
        waring::acceptance::run_acceptance(std::cout, 1);
    return report.all_pass() ? 0 : 1;
}

#include <iostream>

#include "leghopf_app/acceptance.hpp"

int main() {
    bool all = true;
    for (const auto& r : leghopf::acceptance::run_all()) {
        std::cout << leghopf::acceptance::line(r) << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

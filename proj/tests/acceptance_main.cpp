#include "eqalg/acceptance.hpp"

#include <cstdio>

int main() {
    unsigned long seed = eqalg::acceptance_seed_from_env();
    auto results = eqalg::run_acceptance(seed);
    int failures = 0;
    for (const auto& r : results) {
        if (r.passed) {
            std::printf("PASS criterion %d: %s\n", r.id, r.name.c_str());
        } else {
            std::printf("FAIL criterion %d: %s — %s\n", r.id, r.name.c_str(),
                        r.detail.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
